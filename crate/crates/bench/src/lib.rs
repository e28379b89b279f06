//! Fixed inputs shared by the benchmarks.

use dtrans::{parse_ratfun, RatFun, XPoly};

/// Coefficients of `Y'' = p Y'`, from the gamma coefficient to denser
/// rational functions.
pub const DECIDE_INPUTS: &[(&str, &str)] = &[
    ("gamma", "(t-1-x)/x"),
    ("witness", "t/x"),
    ("resonant", "2/x - 3/(x - t) + (t + 1)/(x + 1)"),
    ("dense", "(x^3 - t*x + 2)/((x^2 + t)^2*(x - 1))"),
];

pub fn ratfun(s: &str) -> RatFun {
    parse_ratfun(s).expect("benchmark inputs parse")
}

/// `(x + t)^k (x - 1)` and `(x + t)^k (x + 2 t)`, sharing a factor of
/// degree `k`.
pub fn gcd_pair(k: u32) -> (XPoly, XPoly) {
    let common = ratfun("x + t").num().pow(k);
    (
        &common * ratfun("x - 1").num(),
        &common * ratfun("x + 2*t").num(),
    )
}
