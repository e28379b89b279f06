//! Canonical printing.
//!
//! A value `N/D` is scaled so both parts are polynomials in `x` and `t` with
//! jointly coprime integer coefficients and a positive leading coefficient in
//! the denominator. Terms are listed by descending power of `x`, then of `t`,
//! with explicit `*`. A multi-term numerator is parenthesized; the
//! denominator is parenthesized unless it is a single integer or a single
//! power of one variable. Denominator `1` is omitted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{RatFun, TPoly, XPoly};

type IntTerms = Vec<(usize, usize, BigInt)>;

/// Canonical text for `f`; `parse_ratfun(&print(f)) == f`.
pub fn print(f: &RatFun) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let (num, den) = integer_parts(f);
    let n = format_poly(&num);
    if den.len() == 1 && den[0].0 == 0 && den[0].1 == 0 && den[0].2.is_one() {
        return n;
    }
    let n = if num.len() > 1 { format!("({n})") } else { n };
    let d = format_poly(&den);
    let atomic = den.len() == 1 && {
        let (i, j, c) = &den[0];
        (*i == 0 && *j == 0) || (c.is_one() && (*i == 0 || *j == 0))
    };
    if atomic {
        format!("{n}/{d}")
    } else {
        format!("{n}/({d})")
    }
}

/// Clears every denominator of `f` jointly, returning integer term lists
/// `(x power, t power, coefficient)` in print order.
fn integer_parts(f: &RatFun) -> (IntTerms, IntTerms) {
    let l = f
        .num()
        .coeffs()
        .iter()
        .chain(f.den().coeffs())
        .fold(TPoly::one(), |acc, c| {
            if c.den().is_one() {
                acc
            } else {
                acc.lcm(c.den())
            }
        });
    let lift = |p: &XPoly| -> Vec<TPoly> {
        p.coeffs()
            .iter()
            .map(|c| c.num() * &l.exact_div(c.den()).unwrap())
            .collect()
    };
    let num = lift(f.num());
    let den = lift(f.den());

    let all = num.iter().chain(&den).flat_map(|p| p.coeffs().iter());
    let den_lcm = all.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut g = all.fold(BigInt::zero(), |acc, c| {
        acc.gcd(&(c.numer() * (&den_lcm / c.denom())))
    });
    // denominator leading coefficient is positive after scaling by monic l
    let lead = den.last().unwrap().lc();
    if lead.is_negative() {
        g = -g;
    }
    let terms = |polys: &[TPoly]| -> IntTerms {
        let mut out = Vec::new();
        for (i, p) in polys.iter().enumerate().rev() {
            for (j, c) in p.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let v = c.numer() * (&den_lcm / c.denom()) / &g;
                out.push((i, j, v));
            }
        }
        out
    };
    (terms(&num), terms(&den))
}

fn format_monomial(i: usize, j: usize, c: &BigInt) -> String {
    let mut parts = Vec::new();
    if !c.is_one() || (i == 0 && j == 0) {
        parts.push(c.to_string());
    }
    match i {
        0 => {}
        1 => parts.push("x".into()),
        _ => parts.push(format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("t".into()),
        _ => parts.push(format!("t^{j}")),
    }
    parts.join("*")
}

fn format_poly(terms: &IntTerms) -> String {
    let mut s = String::new();
    for (k, (i, j, c)) in terms.iter().enumerate() {
        let body = format_monomial(*i, *j, &c.abs());
        if k == 0 {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    s
}

#[cfg(test)]
mod tests {
    use crate::parser::parse_ratfun;

    fn show(s: &str) -> String {
        parse_ratfun(s).unwrap().to_string()
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(show("x+1"), "x + 1");
        assert_eq!(show("0"), "0");
        assert_eq!(show("(t-1-x)/x"), "(-x + t - 1)/x");
        assert_eq!(show("x/(t+1)"), "x/(t + 1)");
        assert_eq!(show("x/3"), "x/3");
        assert_eq!(show("-1/x"), "-1/x");
        assert_eq!(show("1/(2*x)"), "1/(2*x)");
        assert_eq!(show("t/(x*t^2)"), "1/(x*t)");
        assert_eq!(show("(x^2 + 1)/(3*t)"), "(x^2 + 1)/(3*t)");
        assert_eq!(show("x^2/2 - x*t/4"), "(2*x^2 - x*t)/4");
        assert_eq!(show("-5"), "-5");
        assert_eq!(show("1/x^2"), "1/x^2");
    }

    #[test]
    fn printed_forms_reparse() {
        for s in [
            "(t-1-x)/x",
            "x/(t+1)",
            "1/(2*x)",
            "(x^2 + 1)/(3*t)",
            "-x^3*t/(x-t)^2",
            "t^-3 * x",
        ] {
            let f = parse_ratfun(s).unwrap();
            assert_eq!(parse_ratfun(&f.to_string()).unwrap(), f, "{s}");
        }
    }
}
