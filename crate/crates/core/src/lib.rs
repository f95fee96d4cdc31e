//! Exact arithmetic in the Euclidean imaginary quadratic rings `O_d`,
//! `d ∈ {1, 2, 3, 7, 11}`, canonical generator words for `SL(2, O_d)`, an
//! exhaustive check of the norm-decrease property used by the decomposition,
//! and explicit embeddings of free (semi)group products into matrices.

pub mod bianchi;
pub mod claim_verifier;
pub mod embeddings;
pub mod error;
pub mod json;
pub mod quadratic_ring;
pub mod word_repr;

pub use bianchi::{generator_a, generator_l, generators, psl_canonical, t_u_power, Mat2, PslElement};
pub use claim_verifier::{check_claim, check_claim_with_workers, ClaimReport};
pub use error::{Error, Result};
pub use quadratic_ring::{QuadInt, QuadRat, RingId};
pub use word_repr::{check_bounds, evaluate, represent, BoundReport, WordRep};
