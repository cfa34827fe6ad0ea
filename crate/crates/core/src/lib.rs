//! Exact computation of rank-two cluster variables for the `(b,c)` exchange
//! recurrence, with perfect-matching models for the affine cases `(2,2)` and
//! `(1,4)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`laurent`] - two-variable Laurent polynomials over arbitrary-precision
//!   integers, the value type for everything else.
//! * [`recurrence`] - the `(b,c)` sequence `x_n` for every integer `n`.
//! * [`graph`] - the weighted graph families `H_m`, `G_n` and the tilde graphs.
//! * [`matching`] - perfect-matching generating polynomials.
//! * [`closed_forms`] - denominators, binomial closed forms, subset counts and
//!   Chebyshev elements.
//! * [`verify`] - every identity as an exact check over an index range.

pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod laurent;
pub mod matching;
pub mod recurrence;
pub mod report;
pub mod verify;

pub use error::Error;
pub use laurent::{CanonicalForm, ExponentVector, Laurent, Monomial};
pub use recurrence::{CaseParams, SequenceCache};

pub type Result<T, E = Error> = std::result::Result<T, E>;
