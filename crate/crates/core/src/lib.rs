//! Linearized permutation binomials `x^(q^r) + a·x` over `F_{q^n}` and
//! their compositional inverses.
//!
//! The crate is layered bottom-up:
//!
//! - [`ffield`]: exact arithmetic in `F_{p^m}`, Frobenius maps, relative
//!   norms and subfield embeddings.
//! - [`linpoly`]: general linearized polynomials, Dickson matrices and the
//!   cofactor inverse.
//! - [`binomial`]: the permutation criterion, the closed-form inverse, its
//!   specializations, and lifting to larger fields.
//! - [`oracle`]: exhaustive ground truth over small fields.
//! - [`timing`]: wall-clock comparison of the two inversion routes.

pub mod binomial;
pub mod error;
pub mod ffield;
pub mod linpoly;
pub mod oracle;
pub mod timing;

pub use binomial::{BinomialSpec, Corollary};
pub use error::{Error, Result};
pub use ffield::{embed_subfield, find_irreducible, Embedding, FieldCtx, FieldElem};
pub use linpoly::{DicksonMatrix, LinearizedPoly};
pub use oracle::{Oracle, SweepConfig, SweepReport};
