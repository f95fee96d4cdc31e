//! Decomposition of `SL(2, O_d)` matrices into generator words
//!
//! ```text
//! ± (L^ε T^p0 U^q0) · A T^pk U^qk · A T^p(k-1) U^q(k-1) ⋯ A T^p1 U^q1
//! ```
//!
//! The reduction loop right-multiplies by `H = U^-q T^-p A`, choosing
//! `θ = −p − qω` by nearest-integer division so that the bottom-left entry
//! shrinks in norm by at least the Euclidean minimum κ(d) at each step. Once
//! the matrix is upper triangular its diagonal is a pair of units and the
//! remaining factor is `L^ε T^p0 U^q0` up to sign.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::bianchi::{a_power, generator_l, l_order, l_power, t_u_power, Mat2};
use crate::error::{Error, Result};
use crate::quadratic_ring::{QuadInt, RingId};

/// One factor `A · T^p · U^q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub p: BigInt,
    pub q: BigInt,
}

impl Block {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        Block { p: p.into(), q: q.into() }
    }

    /// `|p + qω|²` in the given ring.
    pub fn exponent_norm(&self, ring: RingId) -> BigInt {
        QuadInt::new(ring, self.p.clone(), self.q.clone()).norm()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SlSign {
    Plus,
    Minus,
}

impl SlSign {
    pub fn flip(self) -> Self {
        match self {
            SlSign::Plus => SlSign::Minus,
            SlSign::Minus => SlSign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            SlSign::Plus => 1,
            SlSign::Minus => -1,
        }
    }

    fn apply(self, m: Mat2) -> Mat2 {
        match self {
            SlSign::Plus => m,
            SlSign::Minus => -m,
        }
    }
}

/// A word representation of an `SL(2, O_d)` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordRep {
    pub ring: RingId,
    pub epsilon: u8,
    pub p0: BigInt,
    pub q0: BigInt,
    /// Blocks in word order, index k first.
    pub blocks: Vec<Block>,
    pub sl_sign: SlSign,
}

impl WordRep {
    pub fn identity(ring: RingId) -> Self {
        WordRep { ring, epsilon: 0, p0: BigInt::zero(), q0: BigInt::zero(), blocks: Vec::new(), sl_sign: SlSign::Plus }
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn head_norm(&self) -> BigInt {
        Block::new(self.p0.clone(), self.q0.clone()).exponent_norm(self.ring)
    }

    /// Text form `[sign] [L^e] T^p0 U^q0 (A T^p U^q)*`.
    pub fn parse(ring: RingId, text: &str) -> Result<Self> {
        let mut toks = text.split_whitespace().peekable();
        let sl_sign = match toks.peek() {
            Some(&"+") => {
                toks.next();
                SlSign::Plus
            }
            Some(&"-") => {
                toks.next();
                SlSign::Minus
            }
            _ => SlSign::Plus,
        };
        let mut epsilon = 0u8;
        if let Some(t) = toks.peek().filter(|t| t.starts_with("L^")) {
            let e = parse_power(t, 'L')?;
            toks.next();
            let max = l_order(ring).map_or(0, |o| if ring.d() == 1 { 1 } else { o - 1 });
            if !e.is_zero() && l_order(ring).is_none() {
                return Err(Error::NoLGenerator(ring.d()));
            }
            epsilon = u8::try_from(&e)
                .ok()
                .filter(|&e| u64::from(e) <= max)
                .ok_or_else(|| Error::Parse(format!("L exponent {e} out of range for d = {}", ring.d())))?;
        }
        let mut next = |g: char| -> Result<BigInt> {
            let t = toks.next().ok_or_else(|| Error::Parse(format!("expected {g}^n")))?;
            parse_power(t, g)
        };
        let p0 = next('T')?;
        let q0 = next('U')?;
        let mut blocks = Vec::new();
        while let Some(t) = toks.next() {
            if t != "A" {
                return Err(Error::Parse(format!("expected A, found {t:?}")));
            }
            let p = toks.next().ok_or_else(|| Error::Parse("expected T^n".into())).and_then(|t| parse_power(t, 'T'))?;
            let q = toks.next().ok_or_else(|| Error::Parse("expected U^n".into())).and_then(|t| parse_power(t, 'U'))?;
            blocks.push(Block { p, q });
        }
        Ok(WordRep { ring, epsilon, p0, q0, blocks, sl_sign })
    }
}

fn parse_power(tok: &str, gen: char) -> Result<BigInt> {
    tok.strip_prefix(gen)
        .and_then(|r| r.strip_prefix('^'))
        .and_then(|r| BigInt::from_str(r).ok())
        .ok_or_else(|| Error::Parse(format!("expected {gen}^n, found {tok:?}")))
}

impl fmt::Display for WordRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sl_sign {
            SlSign::Plus => '+',
            SlSign::Minus => '-',
        };
        write!(f, "{sign} ")?;
        if self.epsilon != 0 {
            write!(f, "L^{} ", self.epsilon)?;
        }
        write!(f, "T^{} U^{}", self.p0, self.q0)?;
        for b in &self.blocks {
            write!(f, " A T^{} U^{}", b.p, b.q)?;
        }
        Ok(())
    }
}

/// One reduction step `M ↦ M · U^-q · T^-p · A` where `θ = −p − qω` is the
/// negated nearest quotient of `δ` by `γ`. Returns `(θ, M_next)`.
pub fn reduce_step(m: &Mat2) -> Result<(QuadInt, Mat2)> {
    if m.a21().is_zero() {
        return Err(Error::ZeroGamma);
    }
    m.require_det_one()?;
    Ok(step(m))
}

/// `reduce_step` without the precondition checks; γ must be non-zero.
pub(crate) fn step(m: &Mat2) -> (QuadInt, Mat2) {
    let [alpha, beta, gamma, delta] = m.entries();
    let theta = -delta.nearest_quotient(gamma).expect("gamma is non-zero");
    let next = Mat2::new(&theta * alpha + beta, -alpha, &theta * gamma + delta, -gamma).expect("entries share a ring");
    (theta, next)
}

/// Output of the reduction loop.
#[derive(Clone, Debug)]
pub struct Triangularization {
    /// `(p_ℓ, q_ℓ)` for ℓ = 1..k, in the order they were produced.
    pub blocks: Vec<Block>,
    /// `M_k = M · H_1 ⋯ H_k`, upper triangular.
    pub upper: Mat2,
    /// `N(γ_ℓ)` for ℓ = 0..k.
    pub gamma_norms: Vec<BigInt>,
    /// `‖M_ℓ‖` for ℓ = 0..k.
    pub matrix_norms: Vec<BigInt>,
}

pub fn triangularize(m: &Mat2) -> Result<Triangularization> {
    m.require_det_one()?;
    let mut cur = m.clone();
    let mut blocks = Vec::new();
    let mut gamma_norms = vec![cur.a21().norm()];
    let mut matrix_norms = vec![cur.norm_max()];
    while !cur.is_upper_triangular() {
        let (theta, next) = step(&cur);
        blocks.push(Block { p: -theta.x(), q: -theta.y() });
        let gn = next.a21().norm();
        let mn = next.norm_max();
        debug_assert!(gn < *gamma_norms.last().unwrap(), "gamma norm did not decrease");
        debug_assert!(mn <= *matrix_norms.last().unwrap(), "matrix norm increased");
        debug_assert!(next.det().is_one());
        gamma_norms.push(gn);
        matrix_norms.push(mn);
        cur = next;
    }
    Ok(Triangularization { blocks, upper: cur, gamma_norms, matrix_norms })
}

/// `L^ε · T^p0 · U^q0 = sign · M_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperDecomposition {
    pub epsilon: u8,
    pub p0: BigInt,
    pub q0: BigInt,
    pub sign: SlSign,
}

pub fn decompose_upper(mk: &Mat2) -> Result<UpperDecomposition> {
    let ring = mk.ring();
    if !mk.a21().is_zero() {
        return Err(Error::MalformedUpper("bottom-left entry is non-zero"));
    }
    if !mk.det().is_one() {
        return Err(Error::MalformedUpper("diagonal entries are not inverse units"));
    }
    let (rho, sigma, tau) = (mk.a11(), mk.a12(), mk.a22());
    // d = 1 stops at ε = 1 because L² = −Id is absorbed by the sign.
    let eps_range: u8 = match ring.d() {
        1 => 2,
        3 => 3,
        _ => 1,
    };
    for epsilon in 0..eps_range {
        let l_eps = match generator_l(ring) {
            Some(_) => l_power(ring, &epsilon.into())?,
            None => Mat2::identity(ring),
        };
        let (lambda1, lambda2) = (l_eps.a11(), l_eps.a22());
        for sign in [SlSign::Plus, SlSign::Minus] {
            let s_tau = if sign == SlSign::Plus { tau.clone() } else { -tau };
            if &s_tau != lambda2 {
                continue;
            }
            debug_assert!(if sign == SlSign::Plus { rho == lambda1 } else { &-rho == lambda1 });
            // λ1 is a unit, so λ1⁻¹ = conj(λ1)
            let s_sigma = if sign == SlSign::Plus { sigma.clone() } else { -sigma };
            let s = &s_sigma * &lambda1.conjugate();
            return Ok(UpperDecomposition { epsilon, p0: s.x().clone(), q0: s.y().clone(), sign });
        }
    }
    Err(Error::MalformedUpper("diagonal entries are not units"))
}

/// Word representation of `m ∈ SL(2, O_d)`; `evaluate` of the result is `m` exactly.
pub fn represent(m: &Mat2) -> Result<WordRep> {
    let tri = triangularize(m)?;
    let up = decompose_upper(&tri.upper)?;
    // H_ℓ⁻¹ = A⁻¹ T^p U^q = −A T^p U^q: one sign flip per block.
    let sl_sign = if tri.blocks.len() % 2 == 0 { up.sign } else { up.sign.flip() };
    let mut blocks = tri.blocks;
    blocks.reverse();
    Ok(WordRep { ring: m.ring(), epsilon: up.epsilon, p0: up.p0, q0: up.q0, blocks, sl_sign })
}

/// `m · A · T^p · U^q`, using `A T^p U^q = [[0, −1], [1, s]]` with `s = p + qω`.
fn mul_block(m: &Mat2, ring: RingId, b: &Block) -> Mat2 {
    let s = QuadInt::new(ring, b.p.clone(), b.q.clone());
    let [a, bb, c, d] = m.entries();
    Mat2::new(bb.clone(), &(bb * &s) - a, d.clone(), &(d * &s) - c).expect("same ring")
}

pub fn evaluate(w: &WordRep) -> Mat2 {
    let ring = w.ring;
    let mut m = t_u_power(ring, &w.p0, &w.q0);
    if w.epsilon != 0 {
        let l = l_power(ring, &w.epsilon.into()).expect("epsilon is zero without L");
        m = &l * &m;
    }
    for b in &w.blocks {
        m = mul_block(&m, ring, b);
    }
    w.sl_sign.apply(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    A,
    T,
    U,
    L,
}

/// A generator raised to an integer power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub generator: Generator,
    pub exponent: BigInt,
}

impl Token {
    pub fn new(generator: Generator, exponent: impl Into<BigInt>) -> Self {
        Token { generator, exponent: exponent.into() }
    }

    pub fn matrix(&self, ring: RingId) -> Result<Mat2> {
        let zero = BigInt::zero();
        match self.generator {
            Generator::A => Ok(a_power(ring, &self.exponent)),
            Generator::T => Ok(t_u_power(ring, &self.exponent, &zero)),
            Generator::U => Ok(t_u_power(ring, &zero, &self.exponent)),
            Generator::L => l_power(ring, &self.exponent),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.generator {
            Generator::A => 'A',
            Generator::T => 'T',
            Generator::U => 'U',
            Generator::L => 'L',
        };
        if self.exponent.is_one() {
            write!(f, "{g}")
        } else {
            write!(f, "{g}^{}", self.exponent)
        }
    }
}

/// Flattens a word representation into generator tokens whose product is the
/// source matrix with no external sign; a negative sign becomes a trailing `A²`.
pub fn lift_to_sl(w: &WordRep) -> Vec<Token> {
    let mut out = Vec::new();
    let mut push = |g: Generator, e: &BigInt| {
        if !e.is_zero() {
            out.push(Token { generator: g, exponent: e.clone() });
        }
    };
    push(Generator::L, &w.epsilon.into());
    push(Generator::T, &w.p0);
    push(Generator::U, &w.q0);
    for b in &w.blocks {
        push(Generator::A, &BigInt::one());
        push(Generator::T, &b.p);
        push(Generator::U, &b.q);
    }
    if w.sl_sign == SlSign::Minus {
        push(Generator::A, &BigInt::from(2));
    }
    out
}

pub fn evaluate_tokens(ring: RingId, tokens: &[Token]) -> Result<Mat2> {
    tokens.iter().try_fold(Mat2::identity(ring), |acc, t| Ok(&acc * &t.matrix(ring)?))
}

/// A uniformly random word of `len` letters over the generators and their inverses.
pub fn random_generator_word<R: Rng + ?Sized>(ring: RingId, len: usize, rng: &mut R) -> Vec<Token> {
    let mut alphabet =
        vec![(Generator::A, 1), (Generator::T, 1), (Generator::T, -1), (Generator::U, 1), (Generator::U, -1)];
    if ring.has_l() {
        alphabet.extend([(Generator::L, 1), (Generator::L, -1)]);
    }
    (0..len)
        .map(|_| {
            let (g, e) = alphabet[rng.random_range(0..alphabet.len())];
            Token::new(g, e)
        })
        .collect()
}

/// Verification of the exponent and iteration bounds for one decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// `‖M‖`
    pub norm: BigInt,
    pub k: usize,
    /// Largest `|p_ℓ + q_ℓω|²` over the blocks and the head.
    pub max_exponent_norm: BigInt,
    pub exponent_bound_ok: bool,
    /// `1 + floor(−log_κ ‖M‖)`.
    pub iteration_limit: u64,
    pub iteration_bound_ok: bool,
    /// `k < 1 − log_κ ‖M‖`.
    pub strict_bound_ok: bool,
    /// `|p0|², |q0|² ≤ ‖M‖`, only checked for d = 1.
    pub head_individual_ok: Option<bool>,
}

impl BoundReport {
    pub fn bounds_ok(&self) -> bool {
        self.exponent_bound_ok && self.iteration_bound_ok
    }
}

/// `floor(−log_κ x)` for an integer `x ≥ 1`, by exact comparison of `κ^j·x` with 1.
pub fn neg_log_floor(ring: RingId, x: &BigInt) -> u64 {
    let kappa = ring.euclidean_minimum();
    let (n, d) = (kappa.numer().clone(), kappa.denom().clone());
    // κ^j·x ≥ 1  ⟺  n^j·x ≥ d^j
    let (mut lhs, mut rhs) = (x.clone(), BigInt::one());
    let mut j = 0;
    loop {
        let (l2, r2) = (&lhs * &n, &rhs * &d);
        if l2 < r2 {
            return j;
        }
        lhs = l2;
        rhs = r2;
        j += 1;
    }
}

/// `k < 1 − log_κ x`, i.e. `κ^(k−1)·x > 1` for `k ≥ 1`.
fn strict_iteration_bound(ring: RingId, x: &BigInt, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let kappa = ring.euclidean_minimum();
    let e = (k - 1) as u32;
    x * num_traits::pow(kappa.numer().clone(), e as usize) > num_traits::pow(kappa.denom().clone(), e as usize)
}

pub fn check_bounds(m: &Mat2, w: &WordRep) -> BoundReport {
    let ring = m.ring();
    let norm = m.norm_max();
    let head = w.head_norm();
    let max_exponent_norm = w.blocks.iter().map(|b| b.exponent_norm(ring)).fold(head, BigInt::max);
    let iteration_limit = 1 + neg_log_floor(ring, &norm);
    let k = w.k();
    let iteration_bound_ok = (k as u64) <= iteration_limit;
    let strict_bound_ok = strict_iteration_bound(ring, &norm, k);
    if !iteration_bound_ok {
        log::error!("iteration bound violated: k = {k}, ‖M‖ = {norm}, d = {}", ring.d());
    } else if !strict_bound_ok {
        log::warn!("strict iteration bound fails: k = {k}, ‖M‖ = {norm}, d = {}", ring.d());
    }
    let head_individual_ok = (ring.d() == 1).then(|| &w.p0 * &w.p0 <= norm && &w.q0 * &w.q0 <= norm);
    BoundReport {
        exponent_bound_ok: max_exponent_norm <= norm,
        max_exponent_norm,
        norm,
        k,
        iteration_limit,
        iteration_bound_ok,
        strict_bound_ok,
        head_individual_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bianchi::{generator_a, generators};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(d: i64) -> RingId {
        RingId::new(d).unwrap()
    }

    #[test]
    fn reduce_step_on_a() {
        let r = ring(1);
        let (theta, next) = reduce_step(&generator_a(r)).unwrap();
        assert!(theta.is_zero());
        assert_eq!(next, -Mat2::identity(r));
    }

    #[test]
    fn reduce_step_lower_unipotent() {
        let r = ring(1);
        let m = Mat2::from_coords(r, [[(1, 0), (0, 0)], [(2, 0), (1, 0)]]);
        let (theta, next) = reduce_step(&m).unwrap();
        // hand computation: 1/2 ties between 0 and 1, tie-break picks 0
        assert!(theta.is_zero());
        assert_eq!(next, Mat2::from_coords(r, [[(0, 0), (-1, 0)], [(1, 0), (-2, 0)]]));
        assert!(next.a21().norm() <= 2.into());
        // M_next = M · U^-q T^-p A with θ = −p − qω
        let h = &t_u_power(r, &(-theta.x()), &(-theta.y())).inverse().unwrap() * &generator_a(r);
        assert_eq!(&m * &h, next);
    }

    #[test]
    fn reduce_step_one_step_from_ta() {
        for r in RingId::ALL {
            let g = generators(r);
            let m = &g.t * &g.a;
            let (_, next) = reduce_step(&m).unwrap();
            assert!(next.a21().is_zero());
        }
    }

    #[test]
    fn reduce_step_errors() {
        let r = ring(2);
        assert_eq!(reduce_step(&Mat2::identity(r)).unwrap_err(), Error::ZeroGamma);
        let m = Mat2::from_coords(r, [[(1, 0), (0, 0)], [(1, 0), (2, 0)]]);
        assert!(matches!(reduce_step(&m), Err(Error::Determinant(_))));
    }

    #[test]
    fn triangularize_examples() {
        for r in RingId::ALL {
            let g = generators(r);
            let tri = triangularize(&g.t).unwrap();
            assert!(tri.blocks.is_empty());
            assert_eq!(tri.upper, g.t);
            let tri = triangularize(&g.a).unwrap();
            assert_eq!(tri.blocks, vec![Block::new(0, 0)]);
            assert_eq!(tri.upper, -Mat2::identity(r));
        }
    }

    #[test]
    fn decompose_upper_examples() {
        for r in RingId::ALL {
            let d = decompose_upper(&Mat2::identity(r)).unwrap();
            assert_eq!(d, UpperDecomposition { epsilon: 0, p0: 0.into(), q0: 0.into(), sign: SlSign::Plus });
        }
        let l = generator_l(ring(1)).unwrap();
        let d = decompose_upper(&l).unwrap();
        assert_eq!((d.epsilon, d.sign), (1, SlSign::Plus));
        assert!(d.p0.is_zero() && d.q0.is_zero());

        // −Mk = [[1, ω], [0, 1]] = T^0 U^1
        let r = ring(2);
        let mk = Mat2::from_coords(r, [[(-1, 0), (0, -1)], [(0, 0), (-1, 0)]]);
        let d = decompose_upper(&mk).unwrap();
        assert_eq!(d, UpperDecomposition { epsilon: 0, p0: 0.into(), q0: 1.into(), sign: SlSign::Minus });
        assert_eq!(t_u_power(r, &d.p0, &d.q0), -&mk);
    }

    #[test]
    fn decompose_upper_all_unit_diagonals() {
        for r in RingId::ALL {
            for u in r.units() {
                let sigma = QuadInt::new(r, 3, -2);
                let mk = Mat2::new(u.conjugate(), sigma, QuadInt::zero(r), u.clone()).unwrap();
                let d = decompose_upper(&mk).unwrap();
                let mut m = t_u_power(r, &d.p0, &d.q0);
                if d.epsilon > 0 {
                    m = &l_power(r, &d.epsilon.into()).unwrap() * &m;
                }
                assert_eq!(d.sign.apply(m), mk);
            }
        }
    }

    #[test]
    fn decompose_upper_rejects_malformed() {
        let r = ring(1);
        assert!(matches!(decompose_upper(&generator_a(r)), Err(Error::MalformedUpper(_))));
        let m = Mat2::from_coords(r, [[(2, 0), (0, 0)], [(0, 0), (1, 0)]]);
        assert!(matches!(decompose_upper(&m), Err(Error::MalformedUpper(_))));
    }

    #[test]
    fn represent_examples() {
        for r in RingId::ALL {
            let g = generators(r);
            let w = represent(&g.t).unwrap();
            assert_eq!((w.epsilon, w.p0.clone(), w.q0.clone()), (0, 1.into(), 0.into()));
            assert!(w.blocks.is_empty());
            assert_eq!(w.sl_sign, SlSign::Plus);

            let w = represent(&g.a).unwrap();
            assert_eq!(w.blocks, vec![Block::new(0, 0)]);
            assert!(w.p0.is_zero() && w.q0.is_zero() && w.epsilon == 0);
            assert_eq!(evaluate(&w), g.a);
        }
        let bad = Mat2::from_coords(ring(7), [[(1, 0), (1, 0)], [(1, 0), (1, 0)]]);
        assert!(matches!(represent(&bad), Err(Error::Determinant(_))));
    }

    #[test]
    fn evaluate_examples() {
        for r in RingId::ALL {
            assert!(evaluate(&WordRep::identity(r)).is_identity());
        }
        let r = ring(7);
        let w = WordRep { p0: 3.into(), q0: (-2).into(), ..WordRep::identity(r) };
        assert_eq!(evaluate(&w), Mat2::from_coords(r, [[(1, 0), (3, -2)], [(0, 0), (1, 0)]]));
    }

    #[test]
    fn lift_examples() {
        let r = ring(2);
        let w = represent(&-Mat2::identity(r)).unwrap();
        assert_eq!(lift_to_sl(&w), vec![Token::new(Generator::A, 2)]);
        let w = represent(&generators(r).t).unwrap();
        assert_eq!(lift_to_sl(&w), vec![Token::new(Generator::T, 1)]);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut saw_minus = false;
        for r in RingId::ALL {
            for _ in 0..50 {
                let m = evaluate_tokens(r, &random_generator_word(r, 12, &mut rng)).unwrap();
                let w = represent(&m).unwrap();
                saw_minus |= w.sl_sign == SlSign::Minus;
                assert_eq!(evaluate_tokens(r, &lift_to_sl(&w)).unwrap(), m);
            }
        }
        assert!(saw_minus);
    }

    #[test]
    fn round_trip_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for r in RingId::ALL {
            for _ in 0..200 {
                let len = rng.random_range(0..=30);
                let m = evaluate_tokens(r, &random_generator_word(r, len, &mut rng)).unwrap();
                let w = represent(&m).unwrap();
                assert_eq!(evaluate(&w), m);
                let b = check_bounds(&m, &w);
                assert!(b.bounds_ok(), "{b:?}");
            }
        }
    }

    #[test]
    fn word_text_round_trip() {
        let r = ring(3);
        let text = "- L^1 T^3 U^-2 A T^0 U^1";
        let w = WordRep::parse(r, text).unwrap();
        assert_eq!(w.to_string(), text);
        assert_eq!(w.epsilon, 1);
        assert_eq!(w.blocks, vec![Block::new(0, 1)]);
        let w = WordRep::parse(ring(1), "+ T^1 U^0").unwrap();
        assert_eq!(evaluate(&w), generators(ring(1)).t);
        // sign may be omitted
        assert_eq!(WordRep::parse(ring(1), "T^1 U^0").unwrap(), w);
    }

    #[test]
    fn word_text_errors() {
        for (d, text) in [
            (1, "+ T^1"),
            (1, "+ T^x U^0"),
            (1, "+ T^1 U^0 A T^1"),
            (1, "+ T^1 U^0 B T^1 U^0"),
            (1, "+ L^2 T^0 U^0"),
            (3, "+ L^3 T^0 U^0"),
            (7, "+ L^1 T^0 U^0"),
        ] {
            assert!(WordRep::parse(ring(d), text).is_err(), "{text}");
        }
    }

    #[test]
    fn neg_log_floor_values() {
        // κ(1) = 1/2: floor(log2 x)
        for (x, want) in [(1, 0), (2, 1), (3, 1), (4, 2), (1023, 9), (1024, 10)] {
            assert_eq!(neg_log_floor(ring(1), &BigInt::from(x)), want, "x = {x}");
        }
        // κ(3) = 1/3
        assert_eq!(neg_log_floor(ring(3), &BigInt::from(9)), 2);
        assert_eq!(neg_log_floor(ring(3), &BigInt::from(8)), 1);
    }

    #[test]
    fn degenerate_norm_one_bound() {
        let r = ring(1);
        let a = generator_a(r);
        let w = represent(&a).unwrap();
        let b = check_bounds(&a, &w);
        assert_eq!((b.k, b.iteration_limit), (1, 1));
        assert!(b.iteration_bound_ok);
        assert!(!b.strict_bound_ok);
        assert_eq!(b.head_individual_ok, Some(true));
    }
}
