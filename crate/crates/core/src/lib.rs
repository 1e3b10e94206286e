//! Exact arithmetic and linear algebra over the extended tropical semiring.
//!
//! The semiring extends ordinary max-plus arithmetic with a second, ghost
//! copy of the reals (`a^ν`) that records when a maximum was attained more
//! than once. That one bit of memory is enough to make determinants,
//! matrix regularity and polynomial zero sets structurally meaningful:
//! a square matrix is regular exactly when its permanent-style determinant
//! is an untagged real, and that happens exactly when one permutation wins
//! outright through untagged entries.
//!
//! Modules:
//! - [`scalar`]: the carrier type, exact rational magnitudes, order, ⊕/⊙,
//!   and the ν/π/θ structure maps.
//! - [`matrix`]: dense matrices, the two determinant evaluators and their
//!   shared result contract.
//! - [`linalg`]: regularity, adjoint, pseudo inverse, pseudo units.
//! - [`poly`]: multivariate tropical polynomials and their zero sets.
//! - [`valuation`]: Puiseux series with rational exponents and the
//!   valuation bridge into the semiring.
//! - [`laws`]: a registry of executable algebraic laws with seeded random
//!   generators, used by the test suite and the CLI.

mod assignment;

pub mod laws;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod valuation;

pub use laws::{run_law, GenConfig, LawReport, Verdict};
pub use matrix::{det, det_fast, det_naive, det_naive_with_cap, DetResult, OptimalCount, TropMatrix};
pub use poly::TropPoly;
pub use scalar::{Tag, TropScalar};
pub use valuation::PuiseuxPoly;
