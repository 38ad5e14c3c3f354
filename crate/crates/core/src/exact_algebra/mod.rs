//! Exact rational polynomial arithmetic: Sturm chains, quadratic resultants,
//! power substitution and deflation at `s = 1`.

mod poly;
mod resultant;
mod sturm;

pub use poly::RationalPoly;
pub use resultant::{resultant_quadratics, Quadratic, RingElement};
pub use sturm::{sturm_count_roots, SturmChain};
