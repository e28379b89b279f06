//! Exact decision procedure for the differential transcendence, with respect
//! to `d/dt`, of solutions of `y'' - p y' = 0` where `' = d/dx` and `p` is a
//! rational function in `x` over `Q(t)`.
//!
//! A nonconstant solution `eta` is `d/dt`-transcendental as soon as neither
//! `Y' = dp/dt` nor `Y' + p Y = 1` has a solution in `Q(t)(x)`. The crate
//! decides both equations exactly and returns verifiable witnesses:
//!
//! ```
//! use dtrans::{decide, parse_ratfun, Outcome};
//!
//! // the incomplete Gamma function: gamma'' - ((t - 1 - x)/x) gamma' = 0
//! let p = parse_ratfun("(t-1-x)/x").unwrap();
//! let verdict = decide(&p);
//! assert_eq!(verdict.outcome, Outcome::Transcendental);
//! ```

pub mod arith;
pub mod error;
pub mod hermite;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod parser;
pub mod ratsolve;
pub mod transcendence;

pub use arith::{gcd_x, resultant_x, solve_linear_tfrac, squarefree, RatFun, TFrac, TPoly, XPoly};
pub use error::ArithError;
pub use hermite::{hermite_reduce, rational_antiderivative, HermiteResult};
pub use parser::{eval, parse, parse_ratfun, print, EvalError, Expr, ExprError, ParseError};
pub use ratsolve::{
    solve_first_order, universal_denominator, DenominatorCertificate, FirstOrderOde,
};
pub use transcendence::{decide, verify_verdict, ConditionReport, GroupSummary, Outcome, Verdict};
