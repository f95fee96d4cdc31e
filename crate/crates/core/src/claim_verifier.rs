//! Exhaustive check that one reduction step never increases the matrix norm.
//!
//! A step can only increase `‖M‖` when `(1 − κ(d))·‖M‖ < 1`, so every entry of
//! such an `M` lies in the finite set `{z : N(z) < 1/(1 − κ(d))}`. Enumerating
//! all determinant-one matrices over that set with `γ ≠ 0` and applying the
//! same step used by [`crate::word_repr::represent`] settles the question.

use std::thread;
use std::time::{Duration, Instant};

use crate::bianchi::Mat2;
use crate::quadratic_ring::{QuadInt, RingId};
use crate::word_repr::step;

#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub ring: RingId,
    pub candidates_examined: u64,
    /// Pairs `(M, M')` with `‖M‖ < ‖M'‖`, in enumeration order.
    pub counterexamples: Vec<(Mat2, Mat2)>,
    pub elapsed: Duration,
}

impl ClaimReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Lazily enumerates `(α, β, γ, δ) ∈ S⁴` in lexicographic order, keeping
/// matrices with `γ ≠ 0` and `αδ − βγ = 1`.
pub struct Candidates {
    set: Vec<QuadInt>,
    idx: [usize; 4],
    done: bool,
    /// Restricts α to indices `≡ shard (mod stride)`.
    shard: usize,
    stride: usize,
}

impl Candidates {
    fn new(ring: RingId, shard: usize, stride: usize) -> Self {
        let set = ring.entry_candidate_set();
        let done = shard >= set.len();
        Candidates { set, idx: [shard, 0, 0, 0], done, shard, stride }
    }

    fn advance(&mut self) {
        let n = self.set.len();
        for pos in (1..4).rev() {
            self.idx[pos] += 1;
            if self.idx[pos] < n {
                return;
            }
            self.idx[pos] = 0;
        }
        self.idx[0] += self.stride;
        if self.idx[0] >= n {
            self.done = true;
        }
        debug_assert!(self.done || self.idx[0] % self.stride == self.shard % self.stride);
    }
}

impl Iterator for Candidates {
    type Item = Mat2;

    fn next(&mut self) -> Option<Mat2> {
        while !self.done {
            let idx = self.idx;
            self.advance();
            let [a, b, c, d] = idx.map(|i| &self.set[i]);
            if c.is_zero() {
                continue;
            }
            if (&(a * d) - &(b * c)).is_one() {
                return Some(Mat2::new(a.clone(), b.clone(), c.clone(), d.clone()).expect("same ring"));
            }
        }
        None
    }
}

pub fn candidate_matrices(ring: RingId) -> Candidates {
    Candidates::new(ring, 0, 1)
}

/// Applies one reduction step; returns the pair if the norm went up.
pub fn check_matrix(m: &Mat2) -> Option<(Mat2, Mat2)> {
    let (_, next) = step(m);
    (m.norm_max() < next.norm_max()).then(|| (m.clone(), next))
}

pub fn check_claim(ring: RingId) -> ClaimReport {
    check_claim_with_workers(ring, 1)
}

/// Shards candidates by their first entry across `workers` threads. The merged
/// report is identical to the single-threaded one.
pub fn check_claim_with_workers(ring: RingId, workers: usize) -> ClaimReport {
    let start = Instant::now();
    let workers = workers.max(1);
    let shards: Vec<(u64, Vec<(Mat2, Mat2)>)> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                s.spawn(move || {
                    let mut count = 0u64;
                    let mut bad = Vec::new();
                    for m in Candidates::new(ring, w, workers) {
                        count += 1;
                        bad.extend(check_matrix(&m));
                    }
                    (count, bad)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let candidates_examined = shards.iter().map(|s| s.0).sum();
    let mut counterexamples: Vec<_> = shards.into_iter().flat_map(|s| s.1).collect();
    let set = ring.entry_candidate_set();
    let pos = |m: &Mat2| m.entries().clone().map(|e| set.binary_search(&e).expect("entry in set"));
    counterexamples.sort_by_key(|(m, _)| pos(m));
    ClaimReport { ring, candidates_examined, counterexamples, elapsed: start.elapsed() }
}

/// The entry sets hard-coded as reference data, in `{1, ω}` coordinates.
pub fn reference_entry_table(ring: RingId) -> Vec<QuadInt> {
    let coords: &[(i64, i64)] = match ring.d() {
        // {0, ±1, ±i}
        1 => &[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)],
        // {0, ±1, ±√−2, −1 ± √−2, 1 ± √−2}
        2 => &[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (-1, -1), (1, 1), (1, -1)],
        // {0, ±1, ±ω, ±ω̄} with ω̄ = 1 − ω
        3 | 7 => &[(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)],
        // {0, ±1, ±2, ±ω, −1 ± ω, 1 ± ω, ±(ω − 2)}
        _ => &[
            (0, 0),
            (1, 0),
            (-1, 0),
            (2, 0),
            (-2, 0),
            (0, 1),
            (0, -1),
            (-1, 1),
            (-1, -1),
            (1, 1),
            (1, -1),
            (-2, 1),
            (2, -1),
        ],
    };
    let mut v: Vec<_> = coords.iter().map(|&(x, y)| QuadInt::new(ring, x, y)).collect();
    v.sort();
    v
}

pub fn verify_entry_table(ring: RingId) -> bool {
    ring.entry_candidate_set() == reference_entry_table(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bianchi::generator_a;

    fn ring(d: i64) -> RingId {
        RingId::new(d).unwrap()
    }

    #[test]
    fn entry_tables_match() {
        for r in RingId::ALL {
            assert!(verify_entry_table(r), "d = {}", r.d());
        }
        assert_eq!(reference_entry_table(ring(1)).len(), 5);
        assert_eq!(reference_entry_table(ring(2)).len(), 9);
        assert_eq!(reference_entry_table(ring(3)).len(), 7);
        assert_eq!(reference_entry_table(ring(11)).len(), 13);
    }

    #[test]
    fn candidates_are_sound() {
        let r = ring(1);
        let set = r.entry_candidate_set();
        let all: Vec<_> = candidate_matrices(r).collect();
        assert!(all.contains(&generator_a(r)));
        for m in &all {
            assert!(m.det().is_one());
            assert!(!m.a21().is_zero());
            assert!(m.entries().iter().all(|e| set.contains(e)));
        }
    }

    #[test]
    fn single_probe_on_a() {
        assert!(check_matrix(&generator_a(ring(1))).is_none());
    }

    #[test]
    fn sharding_preserves_counts() {
        for r in [ring(2), ring(11)] {
            let one = check_claim_with_workers(r, 1);
            let many = check_claim_with_workers(r, 5);
            assert_eq!(one.candidates_examined, many.candidates_examined);
            assert_eq!(one.counterexamples, many.counterexamples);
            assert_eq!(one.candidates_examined, candidate_matrices(r).count() as u64);
        }
    }
}
