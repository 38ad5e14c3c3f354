//! Turán-type inequalities `|x|^θ p_n² − p_{n−1} p_{n+1} ≥ 0` for orthogonal
//! polynomial families given by three-term recurrences: evaluation, exact
//! Sturm certificates, curve/resultant diagnostics and sharp-exponent search.

pub mod certify;
pub mod curves;
pub mod error;
pub mod exact_algebra;
pub mod families;
pub mod numeric;
pub mod turan_core;
pub mod zeros_claims;

pub use error::{Error, Result};
pub use numeric::Param;
