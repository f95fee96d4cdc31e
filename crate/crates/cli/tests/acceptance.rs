//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::time::{Duration, Instant};

use bianchi_cli::{cmd_tables, cmd_verify_claim, record_instance, round_trip_suite, RoundTripStats, Selection};
use bianchi_core::claim_verifier::reference_entry_table;
use bianchi_core::embeddings::{
    catalog, reduce_word, AnyMatrix, CatalogSpec, ComponentKind, Element, FgWord, Letter, DEFAULT_BUDGET,
};
use bianchi_core::word_repr::{evaluate_tokens, random_generator_word};
use bianchi_core::{Mat2, QuadInt, RingId};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const SEED: u64 = 20240601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(n: u32, title: &str, elapsed: Duration, o: &Outcome) -> bool {
    let tag = if o.pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {n}. {title} ({:.2} s): {}", elapsed.as_secs_f64(), o.detail);
    o.pass
}

fn ratio(n: i64, d: i64) -> String {
    BigRational::new(n.into(), d.into()).to_string()
}

fn strings(v: &Value) -> Vec<(String, String)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_str().unwrap().to_string()))
        .collect()
}

fn coords(v: &[(i64, i64)]) -> Vec<(String, String)> {
    let mut v: Vec<_> = v.to_vec();
    v.sort();
    v.into_iter().map(|(x, y)| (x.to_string(), y.to_string())).collect()
}

fn tables() -> Outcome {
    let start = Instant::now();
    let rep = cmd_tables(Selection::All);
    let elapsed = start.elapsed();
    let kappa = [ratio(1, 2), ratio(3, 4), ratio(1, 3), ratio(4, 7), ratio(9, 11)];
    let inv = [ratio(2, 1), ratio(4, 1), ratio(3, 2), ratio(7, 3), ratio(11, 2)];
    let units: [&[(i64, i64)]; 5] = [
        &[(1, 0), (-1, 0), (0, 1), (0, -1)],
        &[(1, 0), (-1, 0)],
        &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)],
        &[(1, 0), (-1, 0)],
        &[(1, 0), (-1, 0)],
    ];
    let rows = rep.json["rings"].as_array().unwrap();
    let mut bad = Vec::new();
    for (i, r) in RingId::ALL.into_iter().enumerate() {
        let row = &rows[i];
        let reference: Vec<_> =
            reference_entry_table(r).iter().map(|z| (z.x().to_string(), z.y().to_string())).collect();
        let mut emitted_units = strings(&row["units"]);
        emitted_units.sort();
        let mut emitted_set = strings(&row["entry_set"]);
        emitted_set.sort();
        let mut reference_sorted = reference;
        reference_sorted.sort();
        if row["kappa"] != kappa[i].as_str()
            || row["inverse_one_minus_kappa"] != inv[i].as_str()
            || emitted_units != coords(units[i])
            || emitted_set != reference_sorted
        {
            bad.push(r.d());
        }
    }
    let sizes: Vec<_> = rows.iter().map(|r| r["entry_set_size"].as_u64().unwrap()).collect();
    Outcome {
        pass: bad.is_empty() && rep.ok && elapsed < Duration::from_secs(1),
        detail: format!("entry set sizes {sizes:?}, mismatching rings {bad:?}, {:.1} ms", elapsed.as_secs_f64() * 1e3),
    }
}

/// Candidate count from four nested loops over an independently built entry set.
fn oracle_count(ring: RingId) -> u64 {
    let one = BigRational::from_integer(1.into());
    let bound = &one / (&one - ring.euclidean_minimum());
    let set: Vec<QuadInt> = (-6i64..=6)
        .flat_map(|x| (-6i64..=6).map(move |y| (x, y)))
        .map(|(x, y)| QuadInt::new(ring, x, y))
        .filter(|z| BigRational::from_integer(z.norm()) < bound)
        .collect();
    let mut n = 0;
    for a in &set {
        for b in &set {
            for c in set.iter().filter(|c| !c.is_zero()) {
                for d in &set {
                    if (&(a * d) - &(b * c)).is_one() {
                        n += 1;
                    }
                }
            }
        }
    }
    n
}

fn claims() -> Outcome {
    let start = Instant::now();
    let rep = cmd_verify_claim(Selection::All, 1, false);
    let elapsed = start.elapsed();
    let mut counts = Vec::new();
    let mut agree = true;
    for (i, r) in RingId::ALL.into_iter().enumerate() {
        let row = &rep.json["reports"][i];
        let n = row["candidates"].as_u64().unwrap();
        agree &= n == oracle_count(r) && row["counterexamples"].as_array().unwrap().is_empty();
        counts.push(n);
    }
    Outcome {
        pass: rep.ok && agree && elapsed < Duration::from_secs(60),
        detail: format!("candidates {counts:?}, oracle agrees: {agree}, counterexamples: {}", !rep.ok),
    }
}

fn division() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = 0;
    let mut pairs = 0;
    for r in RingId::ALL {
        let kappa = r.euclidean_minimum();
        for _ in 0..10_000 {
            let a = QuadInt::new(r, rng.random::<i64>(), rng.random::<i64>());
            let b = QuadInt::new(r, rng.random::<i64>(), rng.random::<i64>());
            if b.is_zero() {
                continue;
            }
            pairs += 1;
            let (q, rem) = a.divmod(&b).unwrap();
            let ok = &(&q * &b) + &rem == a
                && BigRational::from_integer(rem.norm()) <= &kappa * BigRational::from_integer(b.norm())
                && rem.norm() < b.norm();
            failures += usize::from(!ok);
        }
    }
    Outcome { pass: failures == 0, detail: format!("{pairs} pairs, {failures} failures") }
}

fn random_element<R: Rng>(spec: &CatalogSpec, rng: &mut R) -> Element {
    let parts = spec
        .components()
        .iter()
        .map(|c| {
            let len = rng.random_range(0..=8);
            let raw: Vec<Letter> = (0..len)
                .map(|_| Letter {
                    symbol: rng.random_range(0..c.alphabet.len()),
                    inverse: c.kind == ComponentKind::Group && rng.random_bool(0.5),
                })
                .collect();
            reduce_word(&raw)
        })
        .collect();
    Element { parts }
}

fn mul(a: &AnyMatrix, b: &AnyMatrix) -> AnyMatrix {
    match (a, b) {
        (AnyMatrix::Integer(x), AnyMatrix::Integer(y)) => AnyMatrix::Integer(x.mul(y)),
        (AnyMatrix::Rational(x), AnyMatrix::Rational(y)) => AnyMatrix::Rational(x.mul(y)),
        (AnyMatrix::Gaussian(x), AnyMatrix::Gaussian(y)) => AnyMatrix::Gaussian(x.mul(y)),
        _ => unreachable!("one scalar kind per spec"),
    }
}

fn word(letters: &[(usize, bool)]) -> FgWord {
    reduce_word(&letters.iter().map(|&(symbol, inverse)| Letter { symbol, inverse }).collect::<Vec<_>>())
}

fn at(spec: &CatalogSpec, component: usize, w: FgWord) -> Element {
    let mut parts = vec![FgWord::empty(); spec.components().len()];
    parts[component] = w;
    Element { parts }
}

fn embeddings() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut notes = Vec::new();
    let mut pass = true;
    for spec in catalog() {
        let mut hom = true;
        for _ in 0..1000 {
            let (u, v) = (random_element(&spec, &mut rng), random_element(&spec, &mut rng));
            hom &= spec.eval(&u.mul(&v)).unwrap() == mul(&spec.eval(&u).unwrap(), &spec.eval(&v).unwrap());
        }
        let mut inv = spec.inverses_consistent();
        let mut noncomm = true;
        for (c, comp) in spec.components().iter().enumerate() {
            for s in 0..comp.alphabet.len() {
                if comp.kind == ComponentKind::Group {
                    let g = spec.eval(&at(&spec, c, word(&[(s, false)]))).unwrap();
                    let gi = spec.eval(&at(&spec, c, word(&[(s, true)]))).unwrap();
                    inv &= mul(&g, &gi).is_identity();
                }
            }
            if comp.alphabet.len() == 2 {
                noncomm &= spec.eval(&at(&spec, c, word(&[(0, false), (1, false)]))).unwrap()
                    != spec.eval(&at(&spec, c, word(&[(1, false), (0, false)]))).unwrap();
            }
        }
        let mut comm = true;
        if spec.components().len() == 2 {
            for _ in 0..200 {
                let w = random_element(&spec, &mut rng);
                let l = spec.eval(&Element { parts: vec![w.parts[0].clone(), FgWord::empty()] }).unwrap();
                let r = spec.eval(&Element { parts: vec![FgWord::empty(), w.parts[1].clone()] }).unwrap();
                comm &= mul(&l, &r) == mul(&r, &l);
            }
        }
        let depth = if matches!(spec.name(), "E1" | "P4") { 8 } else { 6 };
        let scan = spec.injectivity_scan(depth, DEFAULT_BUDGET).unwrap();
        let clean = scan.collision.is_none();
        let ok = hom && inv && noncomm && comm && clean;
        pass &= ok;
        notes.push(format!("{}:{}@{depth}={}", spec.name(), scan.enumerated, if ok { "ok" } else { "BAD" }));
    }
    let elapsed = start.elapsed();
    Outcome { pass: pass && elapsed < Duration::from_secs(60), detail: notes.join(" ") }
}

fn performance() -> (Outcome, RoundTripStats) {
    let mut stats = RoundTripStats::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut per_ring = Vec::new();
    for r in RingId::ALL {
        let mut ring_stats = RoundTripStats { d: r.d(), ..Default::default() };
        for _ in 0..10 {
            let m: Mat2 = evaluate_tokens(r, &random_generator_word(r, 1000, &mut rng)).unwrap();
            record_instance(&mut ring_stats, &m);
            ring_stats.instances += 1;
        }
        per_ring.push(format!(
            "d={} max {:.1} ms, max k {}, k/log2|M| <= {:.3}",
            r.d(),
            ring_stats.max_time.as_secs_f64() * 1e3,
            ring_stats.max_k,
            ring_stats.max_k_per_log_norm
        ));
        stats.max_time = stats.max_time.max(ring_stats.max_time);
        stats.round_trip_failures += ring_stats.round_trip_failures;
        stats.exponent_bound_failures += ring_stats.exponent_bound_failures;
        stats.iteration_bound_failures += ring_stats.iteration_bound_failures;
    }
    let pass = stats.max_time < Duration::from_secs(1) && stats.ok();
    (Outcome { pass, detail: per_ring.join("; ") }, stats)
}

fn main() {
    let mut all = true;

    let start = Instant::now();
    let o = tables();
    all &= report(1, "table reproduction", start.elapsed(), &o);

    let start = Instant::now();
    let o = claims();
    all &= report(2, "claim verification", start.elapsed(), &o);

    let start = Instant::now();
    let stats: Vec<_> = RingId::ALL.into_iter().map(|r| round_trip_suite(r, 1000, 30, SEED)).collect();
    let rt_time = start.elapsed();
    let failures: usize = stats.iter().map(|s| s.round_trip_failures).sum();
    let o = Outcome {
        pass: failures == 0 && rt_time < Duration::from_secs(30),
        detail: format!("{} matrices, {failures} failures", stats.iter().map(|s| s.instances).sum::<usize>()),
    };
    all &= report(3, "decomposition round trip", rt_time, &o);

    let bound_fail: usize = stats.iter().map(|s| s.exponent_bound_failures + s.iteration_bound_failures).sum();
    let strict: Vec<_> =
        stats.iter().map(|s| (s.d, s.strict_bound_misses, s.strict_bound_misses_off_boundary)).collect();
    let off: usize = stats.iter().map(|s| s.strict_bound_misses_off_boundary).sum();
    let o = Outcome {
        pass: bound_fail == 0,
        detail: format!(
            "{bound_fail} exponent/iteration bound failures; strict-bound misses (d, count, off boundary) {strict:?}{}",
            if off == 0 { ", all with kappa^(k-1)*|M| = 1 exactly" } else { "" }
        ),
    };
    all &= report(4, "bound verification", rt_time, &o);

    let start = Instant::now();
    let o = division();
    all &= report(5, "Euclidean division contract", start.elapsed(), &o);

    let mono: usize = stats.iter().map(|s| s.monotonicity_failures).sum();
    let steps: usize = stats.iter().map(|s| s.reduction_steps).sum();
    let o = Outcome { pass: mono == 0, detail: format!("{steps} reduction steps, {mono} failures") };
    all &= report(6, "norm monotonicity", rt_time, &o);

    let start = Instant::now();
    let o = embeddings();
    all &= report(7, "embedding suite", start.elapsed(), &o);

    let start = Instant::now();
    let (o, _) = performance();
    all &= report(8, "performance on 1000-letter words", start.elapsed(), &o);

    println!("{}", if all { "ALL CRITERIA PASS" } else { "SOME CRITERIA FAILED" });
    if !all {
        std::process::exit(1);
    }
}
