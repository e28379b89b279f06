//! Exact arithmetic for `Q`, `Q[t]`, `Q(t)`, `Q(t)[x]` and `K = Q(t)(x)`.

mod linsolve;
pub(crate) mod prs;
mod ratfun;
mod squarefree;
mod tfrac;
mod tpoly;
mod xpoly;
mod zpoly;

pub use linsolve::solve_linear_tfrac;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use ratfun::RatFun;
pub use squarefree::{squarefree, SquarefreeDecomposition};
pub use tfrac::TFrac;
pub use tpoly::TPoly;
pub use xpoly::XPoly;

/// Monic gcd in `Q(t)[x]`; errors when both inputs are zero.
pub fn gcd_x(a: &XPoly, b: &XPoly) -> Result<XPoly, crate::error::ArithError> {
    a.gcd(b)
}

/// Resultant with respect to `x`, `res(a, b) = lc(a)^deg(b) * prod b(alpha_i)`.
pub fn resultant_x(a: &XPoly, b: &XPoly) -> Result<TFrac, crate::error::ArithError> {
    a.resultant(b)
}
