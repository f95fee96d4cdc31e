//! Arithmetic in the five Euclidean imaginary quadratic integer rings `O_d`,
//! `d ∈ {1, 2, 3, 7, 11}`, and in their fraction fields `Q(√−d)`.
//!
//! Elements are stored in the integral basis `{1, ω}` where `ω = √−d` for
//! `d ∈ {1, 2}` and `ω = (1 + √−d)/2` for `d ∈ {3, 7, 11}`. All coordinates
//! are arbitrary precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// One of the five Euclidean imaginary quadratic rings, identified by `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u32);

impl RingId {
    pub const ALL: [RingId; 5] = [RingId(1), RingId(2), RingId(3), RingId(7), RingId(11)];

    pub fn new(d: i64) -> Result<Self> {
        match d {
            1 | 2 | 3 | 7 | 11 => Ok(RingId(d as u32)),
            _ => Err(Error::InvalidRing(d)),
        }
    }

    pub fn d(self) -> u32 {
        self.0
    }

    /// `ω = (1 + √−d)/2`, i.e. `−d ≡ 1 (mod 4)`.
    pub fn half_integral_basis(self) -> bool {
        self.0 % 4 == 3
    }

    /// Coefficients `(c0, c1)` with `ω² = c0 + c1·ω`.
    pub fn omega_square_rule(self) -> (i64, i64) {
        let d = self.0 as i64;
        if self.half_integral_basis() {
            (-(1 + d) / 4, 1)
        } else {
            (-d, 0)
        }
    }

    /// Whether the Bianchi group has the diagonal generator `L` (d = 1, 3).
    pub fn has_l(self) -> bool {
        matches!(self.0, 1 | 3)
    }

    pub fn omega_description(self) -> &'static str {
        match self.0 {
            1 => "i",
            2 => "sqrt(-2)",
            3 => "(1+sqrt(-3))/2",
            7 => "(1+sqrt(-7))/2",
            _ => "(1+sqrt(-11))/2",
        }
    }

    /// The Euclidean minimum κ(d) of `Q(√−d)`.
    pub fn euclidean_minimum(self) -> BigRational {
        let d = BigInt::from(self.0);
        if self.half_integral_basis() {
            let n = &d + 1u32;
            BigRational::new(&n * &n, d * 16u32)
        } else {
            BigRational::new(d + 1u32, BigInt::from(4u32))
        }
    }

    /// `1/(1 − κ(d))`, the bound on entry norms in the exhaustive claim search.
    pub fn entry_norm_bound(self) -> BigRational {
        (BigRational::one() - self.euclidean_minimum()).recip()
    }

    /// The unit group `O_d^×`, sorted by coordinates.
    pub fn units(self) -> Vec<QuadInt> {
        let coords: &[(i64, i64)] = match self.0 {
            1 => &[(1, 0), (-1, 0), (0, 1), (0, -1)],
            // ±1, ±ω, ±(ω − 1): the sixth roots of unity
            3 => &[(1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (1, -1)],
            _ => &[(1, 0), (-1, 0)],
        };
        let mut units: Vec<_> = coords.iter().map(|&(x, y)| QuadInt::new(self, x, y)).collect();
        units.sort();
        units
    }

    /// `{z ∈ O_d : N(z) < 1/(1 − κ(d))}` by bounded enumeration, sorted by coordinates.
    pub fn entry_candidate_set(self) -> Vec<QuadInt> {
        let bound = self.entry_norm_bound();
        // N(x + yω) ≥ (x² + y²)/2 in all five rings, so x² + y² < 2·bound.
        let radius = (bound.clone() * BigInt::from(2)).ceil().to_integer();
        let r: i64 = i64::try_from(&radius).expect("small bound");
        let mut out = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                let z = QuadInt::new(self, x, y);
                if BigRational::from_integer(z.norm()) < bound {
                    out.push(z);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O_{}", self.0)
    }
}

fn check_same(a: RingId, b: RingId) {
    assert!(a == b, "mixed-ring arithmetic: {a} vs {b}");
}

/// An integer `x + yω` of `O_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadInt {
    ring: RingId,
    x: BigInt,
    y: BigInt,
}

impl QuadInt {
    pub fn new(ring: RingId, x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        QuadInt { ring, x: x.into(), y: y.into() }
    }

    pub fn zero(ring: RingId) -> Self {
        Self::new(ring, 0, 0)
    }

    pub fn one(ring: RingId) -> Self {
        Self::new(ring, 1, 0)
    }

    pub fn omega(ring: RingId) -> Self {
        Self::new(ring, 0, 1)
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    /// Field norm `N(z) = |z|²`.
    pub fn norm(&self) -> BigInt {
        let d = self.ring.d();
        if self.ring.half_integral_basis() {
            &self.x * &self.x + &self.x * &self.y + &self.y * &self.y * ((1 + d) / 4)
        } else {
            &self.x * &self.x + &self.y * &self.y * d
        }
    }

    pub fn conjugate(&self) -> Self {
        if self.ring.half_integral_basis() {
            QuadInt { ring: self.ring, x: &self.x + &self.y, y: -&self.y }
        } else {
            QuadInt { ring: self.ring, x: self.x.clone(), y: -&self.y }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn to_rat(&self) -> QuadRat {
        QuadRat::new(self.ring, BigRational::from_integer(self.x.clone()), BigRational::from_integer(self.y.clone()))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The element of `O_d` nearest to `self / b`.
    ///
    /// Minimizes `N(self/b − q)` exactly; ties go to the lexicographically
    /// smallest `(x, y)`. The result satisfies `N(self − q·b) ≤ κ(d)·N(b)`.
    pub fn nearest_quotient(&self, b: &QuadInt) -> Result<QuadInt> {
        check_same(self.ring, b.ring);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // self/b = (self·b̄)/N(b); N(self/b − q) = N(self − q·b)/N(b), so the
        // minimization can stay in O_d.
        let nb = b.norm();
        let num = self * &b.conjugate();
        let cx = round_div(&num.x, &nb);
        let cy = round_div(&num.y, &nb);
        let mut best: Option<(BigInt, QuadInt)> = None;
        for dx in -2i32..=2 {
            for dy in -2i32..=2 {
                let q = QuadInt::new(self.ring, &cx + dx, &cy + dy);
                let n = (self - &(&q * b)).norm();
                let better = match &best {
                    None => true,
                    Some((bn, bq)) => n < *bn || (n == *bn && q < *bq),
                };
                if better {
                    best = Some((n, q));
                }
            }
        }
        Ok(best.expect("non-empty window").1)
    }

    /// Euclidean division `self = q·b + r` with `q = self.nearest_quotient(b)`.
    pub fn divmod(&self, b: &QuadInt) -> Result<(QuadInt, QuadInt)> {
        let q = self.nearest_quotient(b)?;
        let r = self - &(&q * b);
        Ok((q, r))
    }
}

/// Nearest integer to `n/d` for `d > 0`, halves rounded up.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let num: BigInt = n * 2 + d;
    num.div_floor(&(d * 2))
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = if self.ring.d() == 1 { "i" } else { "w" };
        match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => write!(f, "{}", self.x),
            (true, false) if self.y.is_one() => write!(f, "{w}"),
            (true, false) if (-&self.y).is_one() => write!(f, "-{w}"),
            (true, false) => write!(f, "{}{w}", self.y),
            (false, false) => {
                let sign = if self.y.is_negative() { '-' } else { '+' };
                let mag = self.y.abs();
                if mag.is_one() {
                    write!(f, "{}{sign}{w}", self.x)
                } else {
                    write!(f, "{}{sign}{mag}{w}", self.x)
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        check_same(self.ring, rhs.ring);
        QuadInt { ring: self.ring, x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        check_same(self.ring, rhs.ring);
        QuadInt { ring: self.ring, x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        check_same(self.ring, rhs.ring);
        let (c0, c1) = self.ring.omega_square_rule();
        let yy = &self.y * &rhs.y;
        QuadInt { ring: self.ring, x: &self.x * &rhs.x + &yy * c0, y: &self.x * &rhs.y + &self.y * &rhs.x + yy * c1 }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { ring: self.ring, x: -&self.x, y: -&self.y }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { ring: self.ring, x: -self.x, y: -self.y }
    }
}

forward_binop!(QuadInt, Add, add);
forward_binop!(QuadInt, Sub, sub);
forward_binop!(QuadInt, Mul, mul);

/// An element `x + yω` of `Q(√−d)` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadRat {
    ring: RingId,
    x: BigRational,
    y: BigRational,
}

impl QuadRat {
    pub fn new(ring: RingId, x: BigRational, y: BigRational) -> Self {
        QuadRat { ring, x, y }
    }

    pub fn zero(ring: RingId) -> Self {
        QuadRat::new(ring, BigRational::zero(), BigRational::zero())
    }

    pub fn one(ring: RingId) -> Self {
        QuadRat::new(ring, BigRational::one(), BigRational::zero())
    }

    pub fn from_ratio(ring: RingId, xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        QuadRat::new(ring, BigRational::new(xn.into(), xd.into()), BigRational::new(yn.into(), yd.into()))
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn y(&self) -> &BigRational {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn norm(&self) -> BigRational {
        let d = BigInt::from(self.ring.d());
        if self.ring.half_integral_basis() {
            let c = BigRational::new(d + 1u32, BigInt::from(4u32));
            &self.x * &self.x + &self.x * &self.y + &self.y * &self.y * c
        } else {
            &self.x * &self.x + &self.y * &self.y * BigRational::from_integer(d)
        }
    }

    pub fn conjugate(&self) -> Self {
        if self.ring.half_integral_basis() {
            QuadRat { ring: self.ring, x: &self.x + &self.y, y: -&self.y }
        } else {
            QuadRat { ring: self.ring, x: self.x.clone(), y: -&self.y }
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(QuadRat { ring: self.ring, x: c.x / &n, y: c.y / n })
    }

    pub fn checked_div(&self, rhs: &QuadRat) -> Result<QuadRat> {
        let inv = rhs.inverse().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Returns the element as a ring integer when both coordinates are integral.
    pub fn to_quad_int(&self) -> Option<QuadInt> {
        if self.x.is_integer() && self.y.is_integer() {
            Some(QuadInt::new(self.ring, self.x.to_integer(), self.y.to_integer()))
        } else {
            None
        }
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = if self.ring.d() == 1 { "i" } else { "w" };
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else if self.x.is_zero() {
            write!(f, "({}){w}", self.y)
        } else {
            write!(f, "{} + ({}){w}", self.x, self.y)
        }
    }
}

impl From<&QuadInt> for QuadRat {
    fn from(z: &QuadInt) -> Self {
        z.to_rat()
    }
}

impl Add for &QuadRat {
    type Output = QuadRat;
    fn add(self, rhs: &QuadRat) -> QuadRat {
        check_same(self.ring, rhs.ring);
        QuadRat { ring: self.ring, x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

impl Sub for &QuadRat {
    type Output = QuadRat;
    fn sub(self, rhs: &QuadRat) -> QuadRat {
        check_same(self.ring, rhs.ring);
        QuadRat { ring: self.ring, x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
}

impl Mul for &QuadRat {
    type Output = QuadRat;
    fn mul(self, rhs: &QuadRat) -> QuadRat {
        check_same(self.ring, rhs.ring);
        let (c0, c1) = self.ring.omega_square_rule();
        let yy = &self.y * &rhs.y;
        QuadRat {
            ring: self.ring,
            x: &self.x * &rhs.x + &yy * BigRational::from_integer(c0.into()),
            y: &self.x * &rhs.y + &self.y * &rhs.x + yy * BigRational::from_integer(c1.into()),
        }
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat { ring: self.ring, x: -&self.x, y: -&self.y }
    }
}

forward_binop!(QuadRat, Add, add);
forward_binop!(QuadRat, Sub, sub);
forward_binop!(QuadRat, Mul, mul);
