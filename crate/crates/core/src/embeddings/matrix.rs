use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::quadratic_ring::{QuadRat, RingId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarKind {
    Integer,
    Rational,
    /// `Q(i)`, stored as `QuadRat` over `O_1`.
    Gaussian,
}

impl ScalarKind {
    pub fn name(self) -> &'static str {
        match self {
            ScalarKind::Integer => "integer",
            ScalarKind::Rational => "rational",
            ScalarKind::Gaussian => "gaussian_rational",
        }
    }
}

/// Exact scalar usable as a matrix entry. Equality and hashing are exact.
pub trait Scalar: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync {
    const KIND: ScalarKind;
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
}

impl Scalar for BigInt {
    const KIND: ScalarKind = ScalarKind::Integer;
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for BigRational {
    const KIND: ScalarKind = ScalarKind::Rational;
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// An element of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat(QuadRat);

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat(QuadRat::new(RingId::new(1).expect("d = 1"), re, im))
    }

    pub fn from_ratios(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussRat::new(BigRational::new(re.0.into(), re.1.into()), BigRational::new(im.0.into(), im.1.into()))
    }

    pub fn as_quad_rat(&self) -> &QuadRat {
        &self.0
    }

    pub fn re(&self) -> &BigRational {
        self.0.x()
    }

    pub fn im(&self) -> &BigRational {
        self.0.y()
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Scalar for GaussRat {
    const KIND: ScalarKind = ScalarKind::Gaussian;
    fn zero() -> Self {
        GaussRat::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        GaussRat::new(One::one(), Zero::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussRat(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussRat(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussRat(&self.0 * &rhs.0)
    }
}

/// Dense square matrix over an exact scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n * n).map(|i| if i / n == i % n { S::one() } else { S::zero() }).collect();
        Matrix { n, data }
    }

    pub fn scalar(n: usize, s: S) -> Self {
        let data = (0..n * n).map(|i| if i / n == i % n { s.clone() } else { S::zero() }).collect();
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.data.chunks(self.n)
    }

    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = S::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
                }
                data.push(acc);
            }
        }
        Matrix { n, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> S {
        if self.n == 1 {
            return self.data[0].clone();
        }
        let mut acc = S::zero();
        for j in 0..self.n {
            let term = self.get(0, j).mul(&self.minor(0, j).det());
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    fn minor(&self, row: usize, col: usize) -> Matrix<S> {
        let rows = (0..self.n)
            .filter(|&i| i != row)
            .map(|i| (0..self.n).filter(|&j| j != col).map(|j| self.get(i, j).clone()).collect())
            .collect();
        Matrix::from_rows(rows)
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
}

pub fn rat_matrix(rows: &[&[(i64, i64)]]) -> Matrix<BigRational> {
    Matrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect()).collect(),
    )
}
