use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::{
    int_matrix, rat_matrix, Component, Element, EmbeddingSpec, GaussRat, GeneratorImage, Matrix, Scalar, ScalarKind,
    ScanOutcome,
};
use crate::error::Result;

/// A catalog entry with its scalar type erased.
#[derive(Clone, Debug)]
pub enum CatalogSpec {
    Integer(EmbeddingSpec<BigInt>),
    Rational(EmbeddingSpec<BigRational>),
    Gaussian(EmbeddingSpec<GaussRat>),
}

/// A matrix over one of the catalog scalar kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatrix {
    Integer(Matrix<BigInt>),
    Rational(Matrix<BigRational>),
    Gaussian(Matrix<GaussRat>),
}

macro_rules! dispatch {
    ($self:expr, $s:ident => $body:expr) => {
        match $self {
            CatalogSpec::Integer($s) => $body,
            CatalogSpec::Rational($s) => $body,
            CatalogSpec::Gaussian($s) => $body,
        }
    };
}

impl CatalogSpec {
    pub fn name(&self) -> &str {
        dispatch!(self, s => &s.name)
    }

    pub fn description(&self) -> &str {
        dispatch!(self, s => &s.description)
    }

    pub fn components(&self) -> &[Component] {
        dispatch!(self, s => &s.components)
    }

    pub fn dim(&self) -> usize {
        dispatch!(self, s => s.dim)
    }

    pub fn scalar_kind(&self) -> ScalarKind {
        match self {
            CatalogSpec::Integer(_) => ScalarKind::Integer,
            CatalogSpec::Rational(_) => ScalarKind::Rational,
            CatalogSpec::Gaussian(_) => ScalarKind::Gaussian,
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        super::parse_element(self.components(), text)
    }

    pub fn eval(&self, element: &Element) -> Result<AnyMatrix> {
        Ok(match self {
            CatalogSpec::Integer(s) => AnyMatrix::Integer(s.eval(element)?),
            CatalogSpec::Rational(s) => AnyMatrix::Rational(s.eval(element)?),
            CatalogSpec::Gaussian(s) => AnyMatrix::Gaussian(s.eval(element)?),
        })
    }

    pub fn eval_text(&self, text: &str) -> Result<AnyMatrix> {
        self.eval(&self.parse_element(text)?)
    }

    pub fn injectivity_scan(&self, max_len: usize, budget: u64) -> Result<ScanOutcome> {
        dispatch!(self, s => s.injectivity_scan(max_len, budget))
    }

    pub fn domain_size(&self, max_len: usize) -> u128 {
        dispatch!(self, s => s.domain_size(max_len))
    }

    pub fn inverses_consistent(&self) -> bool {
        dispatch!(self, s => s.inverses_consistent())
    }

    /// e.g. `fg({a,b}) x sg({c})`.
    pub fn domain(&self) -> String {
        self.components().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" x ")
    }
}

impl AnyMatrix {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyMatrix::Integer(_) => ScalarKind::Integer,
            AnyMatrix::Rational(_) => ScalarKind::Rational,
            AnyMatrix::Gaussian(_) => ScalarKind::Gaussian,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            AnyMatrix::Integer(m) => m.is_identity(),
            AnyMatrix::Rational(m) => m.is_identity(),
            AnyMatrix::Gaussian(m) => m.is_identity(),
        }
    }

    /// `{"kind": ..., "rows": [[...]]}`. Integers and rationals are decimal
    /// strings (`"p/q"` for non-integral rationals); Gaussian entries are
    /// `[re, im]` pairs of such strings.
    pub fn to_json(&self) -> Value {
        fn rows<S: Scalar>(m: &Matrix<S>, f: impl Fn(&S) -> Value) -> Value {
            Value::Array(m.rows().map(|r| Value::Array(r.iter().map(&f).collect())).collect())
        }
        let rows = match self {
            AnyMatrix::Integer(m) => rows(m, |e| json!(e.to_string())),
            AnyMatrix::Rational(m) => rows(m, |e| json!(e.to_string())),
            AnyMatrix::Gaussian(m) => rows(m, |e| json!([e.re().to_string(), e.im().to_string()])),
        };
        json!({ "kind": self.kind().name(), "rows": rows })
    }
}

impl std::fmt::Display for AnyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnyMatrix::Integer(m) => m.fmt(f),
            AnyMatrix::Rational(m) => m.fmt(f),
            AnyMatrix::Gaussian(m) => m.fmt(f),
        }
    }
}

fn group(forward: Matrix<BigInt>, inverse: Matrix<BigInt>) -> GeneratorImage<BigInt> {
    GeneratorImage { forward, inverse: Some(inverse) }
}

fn positive<S>(forward: Matrix<S>) -> GeneratorImage<S> {
    GeneratorImage { forward, inverse: None }
}

fn sanov_pair() -> Vec<GeneratorImage<BigInt>> {
    vec![
        group(int_matrix(&[&[1, 2], &[0, 1]]), int_matrix(&[&[1, -2], &[0, 1]])),
        group(int_matrix(&[&[1, 0], &[2, 1]]), int_matrix(&[&[1, 0], &[-2, 1]])),
    ]
}

fn to_rational(m: &Matrix<BigInt>) -> Matrix<BigRational> {
    Matrix::from_rows(m.rows().map(|r| r.iter().map(|e| BigRational::from_integer(e.clone())).collect()).collect())
}

fn e1() -> EmbeddingSpec<BigInt> {
    EmbeddingSpec {
        name: "E1".into(),
        description: "fg({a,b}) -> Z^(2x2), a = [[1,2],[0,1]], b = [[1,0],[2,1]]".into(),
        components: vec![Component::group(&['a', 'b'])],
        dim: 2,
        images: vec![sanov_pair()],
    }
}

fn e2() -> EmbeddingSpec<GaussRat> {
    let g = |re: (i64, i64), im: (i64, i64)| GaussRat::from_ratios(re, im);
    let z = || GaussRat::zero();
    let a = Matrix::from_rows(vec![vec![g((3, 5), (4, 5)), z()], vec![z(), g((3, 5), (-4, 5))]]);
    let a_inv = Matrix::from_rows(vec![vec![g((3, 5), (-4, 5)), z()], vec![z(), g((3, 5), (4, 5))]]);
    let b = Matrix::from_rows(vec![
        vec![g((3, 5), (0, 1)), g((4, 5), (0, 1))],
        vec![g((-4, 5), (0, 1)), g((3, 5), (0, 1))],
    ]);
    let b_inv = Matrix::from_rows(vec![
        vec![g((3, 5), (0, 1)), g((-4, 5), (0, 1))],
        vec![g((4, 5), (0, 1)), g((3, 5), (0, 1))],
    ]);
    EmbeddingSpec {
        name: "E2".into(),
        description: "fg({a,b}) -> Q(i)^(2x2), a = diag(3/5+4/5 i, 3/5-4/5 i), b = [[3/5,4/5],[-4/5,3/5]]".into(),
        components: vec![Component::group(&['a', 'b'])],
        dim: 2,
        images: vec![vec![
            GeneratorImage { forward: a, inverse: Some(a_inv) },
            GeneratorImage { forward: b, inverse: Some(b_inv) },
        ]],
    }
}

fn p1() -> EmbeddingSpec<BigInt> {
    EmbeddingSpec {
        name: "P1".into(),
        description: "sg({a}) x sg({c}) -> UT(2,N), a = diag(2,1), c = diag(1,2)".into(),
        components: vec![Component::semigroup(&['a']), Component::semigroup(&['c'])],
        dim: 2,
        images: vec![vec![positive(int_matrix(&[&[2, 0], &[0, 1]]))], vec![positive(int_matrix(&[&[1, 0], &[0, 2]]))]],
    }
}

fn p2() -> EmbeddingSpec<BigRational> {
    let pair = sanov_pair()
        .into_iter()
        .map(|g| GeneratorImage { forward: to_rational(&g.forward), inverse: g.inverse.as_ref().map(to_rational) })
        .collect();
    EmbeddingSpec {
        name: "P2".into(),
        description: "fg({a,b}) x fg({c}) -> Q^(2x2), a = [[1,2],[0,1]], b = [[1,0],[2,1]], c = 2 Id".into(),
        components: vec![Component::group(&['a', 'b']), Component::group(&['c'])],
        dim: 2,
        images: vec![
            pair,
            vec![GeneratorImage {
                forward: rat_matrix(&[&[(2, 1), (0, 1)], &[(0, 1), (2, 1)]]),
                inverse: Some(rat_matrix(&[&[(1, 2), (0, 1)], &[(0, 1), (1, 2)]])),
            }],
        ],
    }
}

fn p3() -> EmbeddingSpec<BigInt> {
    // b is the transpose of the printed matrix, which does not commute with c.
    EmbeddingSpec {
        name: "P3".into(),
        description: "sg({a,b}) x fg({c}) -> Z^(3x3), a = diag(2,1,1), b = [[2,0,0],[1,1,0],[0,0,1]], \
                      c = [[1,0,0],[0,1,2],[0,0,1]]"
            .into(),
        components: vec![Component::semigroup(&['a', 'b']), Component::group(&['c'])],
        dim: 3,
        images: vec![
            vec![
                positive(int_matrix(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
                positive(int_matrix(&[&[2, 0, 0], &[1, 1, 0], &[0, 0, 1]])),
            ],
            vec![group(
                int_matrix(&[&[1, 0, 0], &[0, 1, 2], &[0, 0, 1]]),
                int_matrix(&[&[1, 0, 0], &[0, 1, -2], &[0, 0, 1]]),
            )],
        ],
    }
}

fn p4() -> EmbeddingSpec<BigInt> {
    EmbeddingSpec {
        name: "P4".into(),
        description: "fg({a,b}) x sg({c}) -> Z^(2x2), a = [[1,2],[0,1]], b = [[1,0],[2,1]], c = 2 Id".into(),
        components: vec![Component::group(&['a', 'b']), Component::semigroup(&['c'])],
        dim: 2,
        images: vec![sanov_pair(), vec![positive(int_matrix(&[&[2, 0], &[0, 2]]))]],
    }
}

/// The six embeddings: E1, E2, P1, P2, P3, P4.
pub fn catalog() -> Vec<CatalogSpec> {
    vec![
        CatalogSpec::Integer(e1()),
        CatalogSpec::Gaussian(e2()),
        CatalogSpec::Integer(p1()),
        CatalogSpec::Rational(p2()),
        CatalogSpec::Integer(p3()),
        CatalogSpec::Integer(p4()),
    ]
}

/// Looks up a catalog entry by name, ignoring case.
pub fn find(name: &str) -> Option<CatalogSpec> {
    catalog().into_iter().find(|s| s.name().eq_ignore_ascii_case(name))
}

/// A non-injective map `fg({a,b}) → Z^(2x2)` sending both generators to
/// `image`; used as a negative control for the scanner.
pub fn broken_control(image: Matrix<BigInt>, inverse: Matrix<BigInt>) -> EmbeddingSpec<BigInt> {
    EmbeddingSpec {
        name: "broken".into(),
        description: "a and b share one image".into(),
        components: vec![Component::group(&['a', 'b'])],
        dim: image.dim(),
        images: vec![vec![group(image.clone(), inverse.clone()), group(image, inverse)]],
    }
}
