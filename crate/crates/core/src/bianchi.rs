//! 2×2 matrices over `O_d`, the generators `A`, `T`, `U`, `L` of the
//! Euclidean Bianchi groups, and sign normalization for `PSL(2, O_d)`.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::quadratic_ring::{QuadInt, RingId};

/// A 2×2 matrix over `O_d`, entries stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    ring: RingId,
    entries: [QuadInt; 4],
}

impl Mat2 {
    pub fn new(a11: QuadInt, a12: QuadInt, a21: QuadInt, a22: QuadInt) -> Result<Self> {
        let ring = a11.ring();
        for e in [&a12, &a21, &a22] {
            if e.ring() != ring {
                return Err(Error::RingMismatch { left: ring, right: e.ring() });
            }
        }
        Ok(Mat2 { ring, entries: [a11, a12, a21, a22] })
    }

    /// Builds a matrix from `(x, y)` coordinate pairs, row-major.
    pub fn from_coords(ring: RingId, c: [[(i64, i64); 2]; 2]) -> Self {
        let e = |(x, y): (i64, i64)| QuadInt::new(ring, x, y);
        Mat2 { ring, entries: [e(c[0][0]), e(c[0][1]), e(c[1][0]), e(c[1][1])] }
    }

    pub fn identity(ring: RingId) -> Self {
        Self::diagonal(QuadInt::one(ring), QuadInt::one(ring))
    }

    pub fn diagonal(a: QuadInt, b: QuadInt) -> Self {
        let z = QuadInt::zero(a.ring());
        Mat2::new(a, z.clone(), z, b).expect("same ring")
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn entries(&self) -> &[QuadInt; 4] {
        &self.entries
    }

    pub fn a11(&self) -> &QuadInt {
        &self.entries[0]
    }

    pub fn a12(&self) -> &QuadInt {
        &self.entries[1]
    }

    pub fn a21(&self) -> &QuadInt {
        &self.entries[2]
    }

    pub fn a22(&self) -> &QuadInt {
        &self.entries[3]
    }

    pub fn det(&self) -> QuadInt {
        let [a, b, c, d] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity(self.ring)
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.a21().is_zero()
    }

    /// `‖M‖`: the largest entry norm.
    pub fn norm_max(&self) -> BigInt {
        self.entries.iter().map(QuadInt::norm).max().expect("four entries")
    }

    pub fn mat_mul(&self, rhs: &Mat2) -> Result<Mat2> {
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch { left: self.ring, right: rhs.ring });
        }
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        Ok(Mat2 { ring: self.ring, entries: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h] })
    }

    pub fn scale(&self, s: &QuadInt) -> Mat2 {
        Mat2 { ring: self.ring, entries: self.entries.clone().map(|e| s * &e) }
    }

    /// Adjugate divided by the determinant; the determinant must be a unit.
    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if !det.is_unit() {
            return Err(Error::NonUnitDeterminant(det.to_string()));
        }
        // det⁻¹ = conj(det) for a unit
        let inv = det.conjugate();
        let [a, b, c, d] = &self.entries;
        let adj = Mat2 { ring: self.ring, entries: [d.clone(), -b, -c, a.clone()] };
        Ok(adj.scale(&inv))
    }

    pub fn pow(&self, mut e: u64) -> Mat2 {
        let mut base = self.clone();
        let mut acc = Mat2::identity(self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Lexicographic key on the eight coordinates.
    fn coord_key(&self) -> [&BigInt; 8] {
        let e = &self.entries;
        [e[0].x(), e[0].y(), e[1].x(), e[1].y(), e[2].x(), e[2].y(), e[3].x(), e[3].y()]
    }

    pub(crate) fn require_det_one(&self) -> Result<()> {
        let det = self.det();
        if det.is_one() {
            Ok(())
        } else {
            Err(Error::Determinant(det.to_string()))
        }
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        self.mat_mul(rhs).expect("matrices over different rings")
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2 { ring: self.ring, entries: self.entries.clone().map(|e| -e) }
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        -&self
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// The generator matrices of `SL(2, O_d)`.
#[derive(Clone, Debug)]
pub struct Generators {
    pub a: Mat2,
    pub t: Mat2,
    pub u: Mat2,
    /// Only for d = 1 and d = 3.
    pub l: Option<Mat2>,
}

pub fn generators(ring: RingId) -> Generators {
    Generators {
        a: generator_a(ring),
        t: t_u_power(ring, &1.into(), &0.into()),
        u: t_u_power(ring, &0.into(), &1.into()),
        l: generator_l(ring),
    }
}

pub fn generator_a(ring: RingId) -> Mat2 {
    Mat2::from_coords(ring, [[(0, 0), (-1, 0)], [(1, 0), (0, 0)]])
}

/// `L = diag(i, −i)` for d = 1; `L = diag(ζ², ζ)` with `ζ = −1/2 + √3 i/2 = ω − 1` for d = 3.
pub fn generator_l(ring: RingId) -> Option<Mat2> {
    match ring.d() {
        1 => Some(Mat2::from_coords(ring, [[(0, 1), (0, 0)], [(0, 0), (0, -1)]])),
        3 => {
            let zeta = QuadInt::new(ring, -1, 1);
            Some(Mat2::diagonal(&zeta * &zeta, zeta))
        }
        _ => None,
    }
}

/// Order of `L` in `SL(2, O_d)`.
pub fn l_order(ring: RingId) -> Option<u64> {
    match ring.d() {
        1 => Some(4),
        3 => Some(3),
        _ => None,
    }
}

/// `T^p · U^q = [[1, p + qω], [0, 1]]`.
pub fn t_u_power(ring: RingId, p: &BigInt, q: &BigInt) -> Mat2 {
    let one = QuadInt::one(ring);
    let zero = QuadInt::zero(ring);
    Mat2::new(one.clone(), QuadInt::new(ring, p.clone(), q.clone()), zero, one).expect("same ring")
}

/// Reduces `e` modulo a small group order.
pub(crate) fn exponent_mod(e: &BigInt, order: u64) -> u64 {
    e.mod_floor(&BigInt::from(order)).to_u64().expect("bounded by order")
}

pub fn a_power(ring: RingId, e: &BigInt) -> Mat2 {
    generator_a(ring).pow(exponent_mod(e, 4))
}

pub fn l_power(ring: RingId, e: &BigInt) -> Result<Mat2> {
    let (l, ord) = generator_l(ring).zip(l_order(ring)).ok_or(Error::NoLGenerator(ring.d()))?;
    Ok(l.pow(exponent_mod(e, ord)))
}

/// An element of `PSL(2, O_d)`, stored as the sign-normalized representative of `±M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PslElement {
    rep: Mat2,
}

impl PslElement {
    pub fn rep(&self) -> &Mat2 {
        &self.rep
    }
}

/// Picks the lexicographically larger of `M` and `−M`.
pub fn psl_canonical(m: &Mat2) -> Result<PslElement> {
    m.require_det_one()?;
    let neg = -m;
    let rep = if m.coord_key() >= neg.coord_key() { m.clone() } else { neg };
    Ok(PslElement { rep })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(d: i64) -> RingId {
        RingId::new(d).unwrap()
    }

    #[test]
    fn generator_determinants() {
        for r in RingId::ALL {
            let g = generators(r);
            for m in [&g.a, &g.t, &g.u] {
                assert!(m.det().is_one());
            }
            assert_eq!(g.l.is_some(), r.has_l());
            if let Some(l) = &g.l {
                assert!(l.det().is_one());
            }
            assert_eq!(g.u, Mat2::from_coords(r, [[(1, 0), (0, 1)], [(0, 0), (1, 0)]]));
        }
    }

    #[test]
    fn generator_relations() {
        for r in RingId::ALL {
            let g = generators(r);
            let id = Mat2::identity(r);
            assert_eq!(&g.a * &g.a, -&id);
            assert_eq!(psl_canonical(&(&g.a * &g.a)).unwrap(), psl_canonical(&id).unwrap());
            assert_eq!(&g.u * &g.t, &g.t * &g.u);
            assert_eq!(&id * &g.u, g.u);
        }
        let l1 = generator_l(ring(1)).unwrap();
        assert_eq!(l1, Mat2::from_coords(ring(1), [[(0, 1), (0, 0)], [(0, 0), (0, -1)]]));
        assert_eq!(&l1 * &l1, -Mat2::identity(ring(1)));
        let l3 = generator_l(ring(3)).unwrap();
        assert_eq!(l3, Mat2::from_coords(ring(3), [[(0, -1), (0, 0)], [(0, 0), (-1, 1)]]));
        assert!(l3.pow(3).is_identity());
        assert!(!l3.is_identity());
    }

    #[test]
    fn unipotent_closed_form() {
        for r in RingId::ALL {
            let g = generators(r);
            assert_eq!(g.t.pow(2), Mat2::from_coords(r, [[(1, 0), (2, 0)], [(0, 0), (1, 0)]]));
            for p in -4i64..=4 {
                for q in -4i64..=4 {
                    let tp = if p >= 0 { g.t.pow(p as u64) } else { g.t.inverse().unwrap().pow(-p as u64) };
                    let uq = if q >= 0 { g.u.pow(q as u64) } else { g.u.inverse().unwrap().pow(-q as u64) };
                    assert_eq!(&tp * &uq, t_u_power(r, &p.into(), &q.into()));
                }
            }
        }
    }

    #[test]
    fn norm_max_examples() {
        let r = ring(1);
        assert_eq!(Mat2::identity(r).norm_max(), 1.into());
        assert_eq!(Mat2::from_coords(r, [[(1, 0), (2, 1)], [(0, 0), (1, 0)]]).norm_max(), 5.into());
        assert_eq!(generator_a(r).norm_max(), 1.into());
    }

    #[test]
    fn inverse_examples() {
        for r in RingId::ALL {
            let g = generators(r);
            let id = Mat2::identity(r);
            assert_eq!(id.inverse().unwrap(), id);
            assert_eq!(g.t.inverse().unwrap(), Mat2::from_coords(r, [[(1, 0), (-1, 0)], [(0, 0), (1, 0)]]));
            assert_eq!(g.a.inverse().unwrap(), -&g.a);
            let m = &(&g.t * &g.a) * &g.u;
            assert!((&m * &m.inverse().unwrap()).is_identity());
        }
        let r = ring(1);
        // det = i, a unit
        let m = Mat2::from_coords(r, [[(0, 1), (0, 0)], [(0, 0), (1, 0)]]);
        assert!((&m * &m.inverse().unwrap()).is_identity());
        let m = Mat2::from_coords(r, [[(2, 0), (0, 0)], [(0, 0), (1, 0)]]);
        assert!(matches!(m.inverse(), Err(Error::NonUnitDeterminant(_))));
    }

    #[test]
    fn ring_mismatch() {
        let a = Mat2::identity(ring(1));
        let b = Mat2::identity(ring(2));
        assert_eq!(a.mat_mul(&b), Err(Error::RingMismatch { left: ring(1), right: ring(2) }));
        assert!(Mat2::new(
            QuadInt::one(ring(1)),
            QuadInt::zero(ring(3)),
            QuadInt::zero(ring(1)),
            QuadInt::one(ring(1))
        )
        .is_err());
    }

    #[test]
    fn psl_canonical_examples() {
        for r in RingId::ALL {
            let id = Mat2::identity(r);
            let a = generator_a(r);
            assert_eq!(psl_canonical(&id).unwrap(), psl_canonical(&-&id).unwrap());
            assert_eq!(psl_canonical(&a).unwrap(), psl_canonical(&-&a).unwrap());
            let m = &(&a * &generators(r).u) * &generators(r).t;
            let c = psl_canonical(&m).unwrap();
            assert!(*c.rep() == m || *c.rep() == -&m);
        }
        let bad = Mat2::from_coords(ring(2), [[(2, 0), (0, 0)], [(0, 0), (1, 0)]]);
        assert!(matches!(psl_canonical(&bad), Err(Error::Determinant(_))));
    }

    #[test]
    fn powers_of_a_and_l() {
        for r in RingId::ALL {
            assert_eq!(a_power(r, &(-1).into()), -generator_a(r));
            assert!(a_power(r, &8.into()).is_identity());
        }
        assert_eq!(l_power(ring(3), &(-1).into()).unwrap(), generator_l(ring(3)).unwrap().pow(2));
        assert_eq!(l_power(ring(7), &1.into()), Err(Error::NoLGenerator(7)));
    }
}
