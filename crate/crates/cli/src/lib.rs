//! Command implementations for the `bianchi` binary. Each command returns a
//! [`Report`] holding both the JSON and the plain-text rendering.

use std::io::Read;
use std::time::{Duration, Instant};

use bianchi_core::claim_verifier::{check_claim_with_workers, reference_entry_table, verify_entry_table};
use bianchi_core::embeddings::{self, DEFAULT_BUDGET};
use bianchi_core::json::{self, SCHEMA_VERSION};
use bianchi_core::word_repr::{evaluate_tokens, lift_to_sl, random_generator_word, triangularize};
use bianchi_core::{check_bounds, evaluate, generator_a, represent, Error, Mat2, RingId, WordRep};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "bianchi", version, about = "Word representations and embeddings over the Euclidean Bianchi groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of domain elements an injectivity scan may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Worker threads for claim verification.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose a matrix given as JSON (argument or stdin) into a generator word.
    Repr {
        #[arg(long, value_parser = parse_ring)]
        d: Option<RingId>,
        /// `{"d": 1, "entries": [[[x, y], [x, y]], [[x, y], [x, y]]]}` or just the entries; `-` reads stdin.
        matrix: Option<String>,
    },
    /// Evaluate a word such as `+ L^1 T^0 U^2 A T^1 U^0`.
    Eval {
        #[arg(long, value_parser = parse_ring, default_value = "1")]
        d: RingId,
        word: String,
    },
    /// Exhaustively check that a reduction step never increases the matrix norm.
    VerifyClaim {
        #[arg(default_value = "all", value_parser = parse_selection)]
        d: Selection,
        #[arg(long, hide = true)]
        inject_counterexample: bool,
    },
    /// Ring data: ω, κ(d), 1/(1−κ(d)), units and the entry set.
    Tables {
        #[arg(default_value = "all", value_parser = parse_selection)]
        d: Selection,
    },
    /// Evaluate an element under a catalog embedding, or scan it for collisions.
    Embed {
        /// Catalog name (E1, E2, P1, P2, P3, P4); omit to list the catalog.
        spec: Option<String>,
        /// Element text, e.g. `a b A | c c`.
        element: Option<String>,
        /// Run an injectivity scan up to this word length instead.
        #[arg(long)]
        scan: Option<usize>,
    },
    /// Decompose random matrices, re-evaluate them and check the bounds.
    Roundtrip {
        #[arg(long, default_value = "all", value_parser = parse_selection)]
        d: Selection,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 30)]
        max_len: usize,
    },
}

/// One ring or all five.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    All,
    One(RingId),
}

impl Selection {
    pub fn rings(self) -> Vec<RingId> {
        match self {
            Selection::All => RingId::ALL.to_vec(),
            Selection::One(r) => vec![r],
        }
    }
}

fn parse_ring(s: &str) -> Result<RingId, String> {
    let d: i64 = s.trim().parse().map_err(|_| format!("not an integer: {s:?}"))?;
    RingId::new(d).map_err(|e| e.to_string())
}

fn parse_selection(s: &str) -> Result<Selection, String> {
    if s.eq_ignore_ascii_case("all") {
        Ok(Selection::All)
    } else {
        parse_ring(s).map(Selection::One)
    }
}

/// Usage or input error; maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

/// Result of a command. `ok == false` maps to exit code 1.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("serializable")
        } else {
            self.text.clone()
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, UsageError> {
    let g = &cli.global;
    match &cli.command {
        Command::Repr { d, matrix } => {
            let text = match matrix.as_deref() {
                None | Some("-") => {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf).map_err(|e| UsageError(e.to_string()))?;
                    buf
                }
                Some(s) => s.to_string(),
            };
            cmd_repr(&text, *d)
        }
        Command::Eval { d, word } => cmd_eval(word, *d),
        Command::VerifyClaim { d, inject_counterexample } => {
            Ok(cmd_verify_claim(*d, g.workers, *inject_counterexample))
        }
        Command::Tables { d } => Ok(cmd_tables(*d)),
        Command::Embed { spec, element, scan } => match spec {
            None => Ok(cmd_list_embeddings()),
            Some(name) => cmd_embed(name, element.as_deref(), *scan, g.budget),
        },
        Command::Roundtrip { d, count, max_len } => Ok(cmd_roundtrip(*d, *count, *max_len, g.seed)),
    }
}

pub fn cmd_repr(matrix_json: &str, ring: Option<RingId>) -> Result<Report, UsageError> {
    let v: Value = serde_json::from_str(matrix_json).map_err(|e| UsageError(format!("invalid JSON: {e}")))?;
    let m = match (ring, v.get("d")) {
        (None, None) => return Err(UsageError("ring not given: pass --d or a \"d\" field".into())),
        _ => json::parse_mat2(&v, ring)?,
    };
    let w = represent(&m)?;
    let bounds = check_bounds(&m, &w);
    let ok = bounds.bounds_ok();
    let mut bjson = json::bound_report(&bounds);
    bjson["bounds_ok"] = json!(ok);
    let text = format!("{w}\n{}", serde_json::to_string(&bjson).expect("serializable"));
    let out = json!({ "schema": SCHEMA_VERSION, "word": json::word_rep(&w), "bounds": bjson });
    Ok(Report { json: out, text, ok })
}

pub fn cmd_eval(word: &str, ring: RingId) -> Result<Report, UsageError> {
    let w = WordRep::parse(ring, word)?;
    let m = evaluate(&w);
    let mut out = json::mat2(&m);
    out["schema"] = json!(SCHEMA_VERSION);
    Ok(Report { json: out, text: m.to_string(), ok: true })
}

pub fn cmd_verify_claim(sel: Selection, workers: usize, inject: bool) -> Report {
    let mut reports = Vec::new();
    let mut lines = Vec::new();
    let mut ok = true;
    for (i, r) in sel.rings().into_iter().enumerate() {
        let mut rep = check_claim_with_workers(r, workers);
        if inject && i == 0 {
            let a = generator_a(r);
            rep.counterexamples.push((a.clone(), a));
        }
        ok &= rep.holds();
        lines.push(format!(
            "d = {:>2}: {} candidates, {} counterexamples ({} ms)",
            r.d(),
            rep.candidates_examined,
            rep.counterexamples.len(),
            rep.elapsed.as_millis()
        ));
        for (m, n) in &rep.counterexamples {
            lines.push(format!("  {m} -> {n}"));
        }
        reports.push(json::claim_report(&rep));
    }
    lines.push(if ok { "claim holds".into() } else { "claim VIOLATED".into() });
    Report { json: json!({ "schema": SCHEMA_VERSION, "reports": reports, "holds": ok }), text: lines.join("\n"), ok }
}

pub fn cmd_tables(sel: Selection) -> Report {
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut ok = true;
    for r in sel.rings() {
        ok &= verify_entry_table(r);
        let show = |v: Vec<bianchi_core::QuadInt>| v.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(", ");
        lines.push(format!(
            "d = {}: omega = {}, kappa = {}, 1/(1-kappa) = {}\n  units: {{{}}}\n  entries ({}): {{{}}}",
            r.d(),
            r.omega_description(),
            r.euclidean_minimum(),
            r.entry_norm_bound(),
            show(r.units()),
            reference_entry_table(r).len(),
            show(r.entry_candidate_set()),
        ));
        rows.push(json::ring_table(r));
    }
    Report { json: json!({ "schema": SCHEMA_VERSION, "rings": rows }), text: lines.join("\n"), ok }
}

pub fn cmd_list_embeddings() -> Report {
    let specs = embeddings::catalog();
    let rows: Vec<_> = specs
        .iter()
        .map(|s| json!({"name": s.name(), "domain": s.domain(), "dim": s.dim(), "scalars": s.scalar_kind().name(), "description": s.description()}))
        .collect();
    let text = specs.iter().map(|s| format!("{}  {}", s.name(), s.description())).collect::<Vec<_>>().join("\n");
    Report { json: json!({ "schema": SCHEMA_VERSION, "catalog": rows }), text, ok: true }
}

pub fn cmd_embed(name: &str, element: Option<&str>, scan: Option<usize>, budget: u64) -> Result<Report, UsageError> {
    let spec = embeddings::find(name).ok_or_else(|| UsageError(Error::UnknownSpec(name.into()).to_string()))?;
    if let Some(max_len) = scan {
        if max_len == 0 {
            return Err(UsageError("--scan needs a length of at least 1".into()));
        }
        let start = Instant::now();
        let out = spec.injectivity_scan(max_len, budget)?;
        let ms = start.elapsed().as_millis() as u64;
        let comps = spec.components();
        let collision = out.collision.as_ref().map(|(u, v)| json!([u.render(comps), v.render(comps)]));
        let text = match &out.collision {
            None => {
                format!("{}: {} elements up to length {max_len}, no collision ({ms} ms)", spec.name(), out.enumerated)
            }
            Some((u, v)) => format!("{}: collision {:?} = {:?}", spec.name(), u.render(comps), v.render(comps)),
        };
        let json = json!({
            "schema": SCHEMA_VERSION,
            "spec": spec.name(),
            "max_len": max_len,
            "enumerated": out.enumerated,
            "collision": collision,
            "ms": ms,
        });
        return Ok(Report { json, text, ok: out.collision.is_none() });
    }
    let text = element.ok_or_else(|| UsageError("give an element or --scan N".into()))?;
    let el = spec.parse_element(text)?;
    let m = spec.eval(&el)?;
    let json = json!({
        "schema": SCHEMA_VERSION,
        "spec": spec.name(),
        "element": el.render(spec.components()),
        "matrix": m.to_json(),
    });
    Ok(Report { json, text: m.to_string(), ok: true })
}

/// Aggregate results of decomposing random matrices over one ring.
#[derive(Debug, Clone, Default)]
pub struct RoundTripStats {
    pub d: u32,
    pub instances: usize,
    pub round_trip_failures: usize,
    pub exponent_bound_failures: usize,
    pub iteration_bound_failures: usize,
    pub strict_bound_misses: usize,
    /// Strict-bound misses where `κ^(k−1)·‖M‖` is not exactly 1.
    pub strict_bound_misses_off_boundary: usize,
    pub monotonicity_failures: usize,
    pub reduction_steps: usize,
    pub max_k: usize,
    /// Largest `k / log2 ‖M‖` over instances with `‖M‖ > 1`.
    pub max_k_per_log_norm: f64,
    pub max_time: Duration,
}

impl RoundTripStats {
    pub fn ok(&self) -> bool {
        self.round_trip_failures == 0
            && self.exponent_bound_failures == 0
            && self.iteration_bound_failures == 0
            && self.monotonicity_failures == 0
    }
}

/// Evaluates `count` random generator words of length `0..=max_len` over `r`,
/// decomposes each matrix and checks round trip, bounds and monotone norms.
pub fn round_trip_suite(r: RingId, count: usize, max_len: usize, seed: u64) -> RoundTripStats {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(r.d()) << 32));
    let mut s = RoundTripStats { d: r.d(), instances: count, ..Default::default() };
    for _ in 0..count {
        let len = rng.random_range(0..=max_len);
        let m = evaluate_tokens(r, &random_generator_word(r, len, &mut rng)).expect("generator word");
        record_instance(&mut s, &m);
    }
    s
}

/// Same checks on explicitly given matrices.
pub fn record_instance(s: &mut RoundTripStats, m: &Mat2) {
    let start = Instant::now();
    let w = represent(m).expect("det 1 by construction");
    s.max_time = s.max_time.max(start.elapsed());
    let r = m.ring();
    if evaluate(&w) != *m || evaluate_tokens(r, &lift_to_sl(&w)).ok().as_ref() != Some(m) {
        s.round_trip_failures += 1;
    }
    let b = check_bounds(m, &w);
    s.exponent_bound_failures += usize::from(!b.exponent_bound_ok);
    s.iteration_bound_failures += usize::from(!b.iteration_bound_ok);
    if !b.strict_bound_ok {
        s.strict_bound_misses += 1;
        let kappa = r.euclidean_minimum();
        let level = num_traits::pow(kappa, b.k.saturating_sub(1)) * BigRational::from_integer(b.norm.clone());
        s.strict_bound_misses_off_boundary += usize::from(!level.is_one());
    }
    let tri = triangularize(m).expect("det 1");
    s.reduction_steps += tri.blocks.len();
    let mono = tri.matrix_norms.windows(2).all(|p| p[1] <= p[0]) && tri.gamma_norms.windows(2).all(|p| p[1] < p[0]);
    s.monotonicity_failures += usize::from(!mono);
    s.max_k = s.max_k.max(b.k);
    if b.norm > BigInt::one() {
        let log = match b.norm.to_f64() {
            Some(x) if x.is_finite() => x.log2(),
            _ => b.norm.bits() as f64,
        };
        s.max_k_per_log_norm = s.max_k_per_log_norm.max(b.k as f64 / log);
    }
}

pub fn cmd_roundtrip(sel: Selection, count: usize, max_len: usize, seed: u64) -> Report {
    let stats: Vec<_> = sel.rings().into_iter().map(|r| round_trip_suite(r, count, max_len, seed)).collect();
    let ok = stats.iter().all(RoundTripStats::ok);
    let rows: Vec<_> = stats
        .iter()
        .map(|s| {
            json!({
                "d": s.d,
                "instances": s.instances,
                "round_trip_failures": s.round_trip_failures,
                "exponent_bound_failures": s.exponent_bound_failures,
                "iteration_bound_failures": s.iteration_bound_failures,
                "strict_bound_misses": s.strict_bound_misses,
                "strict_bound_misses_off_boundary": s.strict_bound_misses_off_boundary,
                "monotonicity_failures": s.monotonicity_failures,
                "max_k": s.max_k,
                "max_k_per_log2_norm": s.max_k_per_log_norm,
                "max_ms": s.max_time.as_secs_f64() * 1e3,
            })
        })
        .collect();
    let text = stats
        .iter()
        .map(|s| {
            format!(
                "d = {:>2}: {} instances, {} round-trip failures, {} bound failures, {} monotonicity failures, \
                 {} strict-bound misses ({} off the boundary), max k = {}",
                s.d,
                s.instances,
                s.round_trip_failures,
                s.exponent_bound_failures + s.iteration_bound_failures,
                s.monotonicity_failures,
                s.strict_bound_misses,
                s.strict_bound_misses_off_boundary,
                s.max_k
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    Report {
        json: json!({ "schema": SCHEMA_VERSION, "seed": seed, "max_len": max_len, "rings": rows, "ok": ok }),
        text,
        ok,
    }
}
