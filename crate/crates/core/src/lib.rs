//! Exact computations with the Gassner representation of the pure braid
//! group restricted to the free subgroup generated by `A_{1n}, ..., A_{n-1,n}`:
//! Laurent and truncated power-series arithmetic, generator matrices, Hall
//! bases of free Lie algebras, the graded maps `Phi^w` with exact ranks and
//! kernels, and a bounded search for kernel elements.

pub mod braid;
pub mod error;
pub mod graded;
pub mod hall;
pub mod laurent;
pub mod search;

pub use braid::{BraidLetter, BraidWord};
pub use error::{Error, Result};
pub use graded::{Coordinate, GradedClass, KernelReport, Monomial, PhiMatrix};
pub use hall::{CommutatorTerm, HallBasis};
pub use laurent::{ExponentVector, LaurentMatrix, LaurentPoly, SeriesMatrix, TruncatedSeries};
pub use search::{CandidateResult, SearchConfig};
