//! Rational solutions of `Y' + p Y = q` over `Q(t)(x)`.
//!
//! The pipeline bounds the denominator of any solution (residue analysis at
//! simple poles of `p`, pole orders of `q`), substitutes `Y = U/V`, bounds the
//! degree of the polynomial `U`, and solves one exact linear system over
//! `Q(t)` for its coefficients.
//!
//! Pole bookkeeping at a finite point where `Y` has a pole of order `m`, `q`
//! one of order `k` and `p` one of order `e`:
//!
//! * `e >= 2`: `pY` dominates `Y'`, so `k = m + e` and `m <= k - 2`;
//! * `e = 1` with residue `r`: the `(m+1)`-order coefficient of `Y' + pY` is
//!   `(r - m) c`, so either `m = r` (a positive integer) or `m = k - 1`;
//! * `e <= 0`: `Y'` dominates, so `m = k - 1`.
//!
//! Hence `gcd(den q, den q') * prod g_m^m` is divisible by every solution
//! denominator, where `g_m` collects the simple poles of `p` with residue `m`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{
    gcd_x, resultant_x, solve_linear_tfrac, squarefree, RatFun, TFrac, TPoly, XPoly,
};
use crate::error::ArithError;

/// `Y' + p Y = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrderOde {
    pub p: RatFun,
    pub q: RatFun,
}

impl FirstOrderOde {
    pub fn new(p: RatFun, q: RatFun) -> Self {
        FirstOrderOde { p, q }
    }

    /// `y' + p y - q`.
    pub fn residual(&self, y: &RatFun) -> RatFun {
        &(&y.d_dx() + &(&self.p * y)) - &self.q
    }

    pub fn is_solution(&self, y: &RatFun) -> bool {
        self.residual(y).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorCertificate {
    /// `(m, g)`: `g` is the monic product of the simple poles of `p` with
    /// residue `m`; a solution pole there has order at most `m` beyond the
    /// bound coming from `q`.
    pub candidates: Vec<(usize, XPoly)>,
    /// `gcd(den q, d/dx den q)`: pole orders of `q` lowered by one.
    pub q_bound: XPoly,
    pub universal_den: XPoly,
}

/// Residue polynomial of `p` at the simple poles of `p`: a polynomial in `z`
/// (stored as an [`XPoly`] in the variable `z`) whose roots are the residues,
/// together with the squarefree factor `d` of simple poles and the reduced
/// numerator/derivative pair `(a, b)` with residue at a root `alpha` of `d`
/// equal to `a(alpha)/b(alpha)`. `None` when `p` has no simple pole.
pub fn residue_polynomial(p: &RatFun) -> Option<(XPoly, XPoly, XPoly, XPoly)> {
    if p.is_zero() || p.den().is_constant() {
        return None;
    }
    let sqf = squarefree(p.den()).ok()?;
    let d = sqf.factor(1);
    if d.is_constant() {
        return None;
    }
    let a = p.num().rem(&d).unwrap();
    let b = p.den().d_dx().rem(&d).unwrap();
    let n = d.degree().unwrap();
    // R(z) = res_x(d, a - z b) has degree n in z; recover it from n + 1 values
    let values: Vec<TFrac> = (0..=n)
        .map(|k| {
            let e = &a - &b.scale(&TFrac::from_int(k as i64));
            if e.is_zero() {
                TFrac::zero()
            } else {
                resultant_x(&d, &e).unwrap()
            }
        })
        .collect();
    Some((interpolate_at_integers(&values), d, a, b))
}

/// Lagrange interpolation through `(k, values[k])`, `k = 0..len`.
fn interpolate_at_integers(values: &[TFrac]) -> XPoly {
    let n = values.len();
    let mut out = XPoly::zero();
    for (k, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut basis = XPoly::one();
        let mut denom = BigRational::one();
        for l in (0..n).filter(|&l| l != k) {
            basis = &basis * &XPoly::from_int_rows(&[&[-(l as i64)], &[1]]);
            denom *= BigRational::from_integer(BigInt::from(k as i64 - l as i64));
        }
        out = &out + &basis.scale(&v.scale(&denom.recip()));
    }
    out
}

/// For each positive integer residue `m` of `p` at its simple poles, the pair
/// `(m, gcd(d, a - m b))` collecting those poles. Factors for distinct `m`
/// are coprime.
pub fn residue_candidates(p: &RatFun) -> Vec<(usize, XPoly)> {
    let Some((r, d, a, b)) = residue_polynomial(p) else {
        return Vec::new();
    };
    let roots = integer_roots(&r).expect("residue polynomial is nonzero");
    roots
        .into_iter()
        .filter(|m| m.is_positive())
        .filter_map(|m| {
            let m_usize = m.to_usize()?;
            let e = &a - &b.scale(&TFrac::from_rational(BigRational::from_integer(m)));
            let g = gcd_x(&d, &e).unwrap();
            (!g.is_constant()).then_some((m_usize, g))
        })
        .collect()
}

/// All `m` in `Z` with `r(m) = 0` identically in `Q(t)`, ascending.
///
/// An integer root is a root of every `t`-coefficient of `r` (after clearing
/// denominators), so the search runs on the gcd of those rational
/// polynomials. Each candidate is re-checked symbolically.
pub fn integer_roots(r: &XPoly) -> Result<Vec<BigInt>, ArithError> {
    if r.is_zero() {
        return Err(ArithError::ZeroInput("integer root search"));
    }
    let (_, polys) = r.to_primitive_tpoly();
    let tdeg = polys.iter().filter_map(TPoly::degree).max().unwrap_or(0);
    let mut g = TPoly::zero();
    for j in 0..=tdeg {
        let slice = TPoly::new(polys.iter().map(|c| c.coeff(j)).collect());
        g = g.gcd(&slice);
        if g.is_constant() {
            return Ok(Vec::new());
        }
    }
    let roots = rational_poly_integer_roots(&g)
        .into_iter()
        .filter(|m| {
            r.eval(&TFrac::from_rational(BigRational::from_integer(m.clone())))
                .is_zero()
        })
        .collect();
    Ok(roots)
}

/// Integer roots of a nonzero polynomial over `Q` by Sturm-sequence
/// bisection over integer intervals.
fn rational_poly_integer_roots(f: &TPoly) -> Vec<BigInt> {
    if f.is_constant() {
        return Vec::new();
    }
    let f = f.exact_div(&f.gcd(&f.derivative())).unwrap().monic();
    if f.is_constant() {
        return Vec::new();
    }
    // Cauchy bound: every root satisfies |r| < 1 + max |a_i|
    let max = f
        .coeffs()
        .iter()
        .map(|c| c.abs().ceil().to_integer())
        .max()
        .unwrap();
    let bound = max + BigInt::one();

    let mut sturm = vec![f.clone(), f.derivative()];
    loop {
        let n = sturm.len();
        let r = sturm[n - 2].div_rem(&sturm[n - 1]).1;
        if r.is_zero() {
            break;
        }
        sturm.push(-r);
    }
    let variations = |at: &BigInt| -> usize {
        let at = BigRational::from_integer(at.clone());
        let signs: Vec<bool> = sturm
            .iter()
            .map(|s| s.eval(&at))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };

    // roots in (lo, hi] number V(lo) - V(hi) for squarefree f
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        if variations(&lo) <= variations(&hi) {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if f.eval(&BigRational::from_integer(hi.clone())).is_zero() {
                roots.push(hi);
            }
            continue;
        }
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort();
    roots
}

pub fn universal_denominator(ode: &FirstOrderOde) -> DenominatorCertificate {
    let candidates = residue_candidates(&ode.p);
    let q_bound = if ode.q.is_zero() || ode.q.den().is_constant() {
        XPoly::one()
    } else {
        gcd_x(ode.q.den(), &ode.q.den().d_dx()).unwrap()
    };
    let universal_den = candidates
        .iter()
        .fold(q_bound.clone(), |acc, (m, g)| &acc * &g.pow(*m as u32));
    DenominatorCertificate {
        candidates,
        q_bound,
        universal_den,
    }
}

/// Upper bound on `deg U` for polynomial solutions of `A U' + B U = C` with
/// `C != 0`; `None` when no polynomial solution can exist.
pub fn polynomial_degree_bound(a: &XPoly, b: &XPoly, c: &XPoly) -> Option<usize> {
    let dc = c.degree()? as i64;
    let bound = match (a.degree(), b.degree()) {
        (None, None) => return None,
        (None, Some(db)) => dc - db as i64,
        (Some(da), None) => dc - da as i64 + 1,
        (Some(da), Some(db)) => {
            let (da, db) = (da as i64, db as i64);
            if db >= da {
                dc - db
            } else if db < da - 1 {
                // a constant U contributes only B U, of degree db
                if dc == db {
                    (dc - da + 1).max(0)
                } else {
                    dc - da + 1
                }
            } else {
                // leading terms lc(A) n + lc(B) may cancel at n = -lc(B)/lc(A)
                let base = dc - da + 1;
                let special = (-(&b.lc() * &a.lc().inv().unwrap()))
                    .as_rational()
                    .filter(|r| r.is_integer() && !r.is_negative())
                    .and_then(|r| r.to_integer().to_i64());
                special.map_or(base, |s| base.max(s))
            }
        }
    };
    usize::try_from(bound).ok()
}

/// Some polynomial `U` with `A U' + B U = C`, or `None`.
pub fn polynomial_solutions(a: &XPoly, b: &XPoly, c: &XPoly) -> Result<Option<XPoly>, ArithError> {
    if a.is_zero() && b.is_zero() {
        return Err(ArithError::ZeroInput("polynomial_solutions operator"));
    }
    if c.is_zero() {
        return Ok(Some(XPoly::zero()));
    }
    let Some(n) = polynomial_degree_bound(a, b, c) else {
        return Ok(None);
    };
    // column i holds the coefficients of A (x^i)' + B x^i
    let columns: Vec<XPoly> = (0..=n)
        .map(|i| {
            let xi = XPoly::monomial(TFrac::one(), i);
            &(a * &xi.d_dx()) + &(b * &xi)
        })
        .collect();
    let rows = columns
        .iter()
        .filter_map(XPoly::degree)
        .chain(c.degree())
        .max()
        .unwrap()
        + 1;
    let matrix: Vec<Vec<TFrac>> = (0..rows)
        .map(|k| columns.iter().map(|col| col.coeff(k)).collect())
        .collect();
    let rhs: Vec<TFrac> = (0..rows).map(|k| c.coeff(k)).collect();
    Ok(solve_linear_tfrac(&matrix, &rhs)?.map(XPoly::new))
}

/// Everything computed while deciding `Y' + pY = q`.
#[derive(Clone, Debug)]
pub struct FirstOrderAnalysis {
    pub certificate: DenominatorCertificate,
    /// The polynomial equation `A U' + B U = C` for `U = Y * universal_den`.
    pub operator: (XPoly, XPoly, XPoly),
    pub degree_bound: Option<usize>,
    pub solution: Option<RatFun>,
}

pub fn analyze_first_order(ode: &FirstOrderOde) -> FirstOrderAnalysis {
    let certificate = universal_denominator(ode);
    let v = &certificate.universal_den;
    // Y = U/V:  V U' + (pV - V') U = q V^2, scaled by l = lcm(den p, den q)
    let l = xlcm(ode.p.den(), ode.q.den());
    let lp = l.exact_div(ode.p.den()).unwrap();
    let lq = l.exact_div(ode.q.den()).unwrap();
    let a = v * &l;
    let b = &(&(ode.p.num() * &lp) * v) - &(&v.d_dx() * &l);
    let c = &(ode.q.num() * &lq) * &(v * v);
    let (a, b, c) = remove_common_factor(a, b, c);
    let degree_bound = if c.is_zero() {
        Some(0)
    } else {
        polynomial_degree_bound(&a, &b, &c)
    };
    let solution = polynomial_solutions(&a, &b, &c)
        .expect("A = V l is nonzero")
        .map(|u| RatFun::normalize(u, v.clone()).unwrap());
    FirstOrderAnalysis {
        certificate,
        operator: (a, b, c),
        degree_bound,
        solution,
    }
}

/// Some `y` in `Q(t)(x)` with `y' + p y = q`, or `None` if there is none.
pub fn solve_first_order(ode: &FirstOrderOde) -> Option<RatFun> {
    analyze_first_order(ode).solution
}

fn xlcm(a: &XPoly, b: &XPoly) -> XPoly {
    let g = gcd_x(a, b).unwrap();
    (a * &b.exact_div(&g).unwrap()).monic()
}

fn remove_common_factor(a: XPoly, b: XPoly, c: XPoly) -> (XPoly, XPoly, XPoly) {
    let g = gcd_x(&a, &b).unwrap();
    let g = if c.is_zero() {
        g
    } else {
        gcd_x(&g, &c).unwrap()
    };
    if g.is_one() {
        return (a, b, c);
    }
    let div = |p: &XPoly| p.exact_div(&g).unwrap();
    (div(&a), div(&b), div(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_ratfun;

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s).unwrap()
    }

    fn ode(p: &str, q: &str) -> FirstOrderOde {
        FirstOrderOde::new(rf(p), rf(q))
    }

    #[test]
    fn residue_candidate_examples() {
        assert!(residue_candidates(&rf("(t-1-x)/x")).is_empty());
        assert_eq!(residue_candidates(&rf("2/x")), vec![(2, XPoly::x())]);
        assert!(residue_candidates(&rf("1/x^2")).is_empty());
        // residues 1 at x = 1, 3 at x = -1 and t at x = 0
        let p = rf("1/(x-1) + 3/(x+1) + t/x");
        let c = residue_candidates(&p);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0], (1, XPoly::from_int_rows(&[&[-1], &[1]])));
        assert_eq!(c[1], (3, XPoly::from_int_rows(&[&[1], &[1]])));
        // two poles sharing residue 2: 4x/(x^2 - t)
        let c = residue_candidates(&rf("4*x/(x^2 - t)"));
        assert_eq!(c, vec![(2, XPoly::from_int_rows(&[&[0, -1], &[], &[1]]))]);
    }

    #[test]
    fn residue_polynomial_of_gamma_coefficient() {
        let (r, d, _, _) = residue_polynomial(&rf("(t-1-x)/x")).unwrap();
        assert_eq!(d, XPoly::x());
        // R(z) = res(x, -x + t - 1 - z) = t - 1 - z
        assert_eq!(r, XPoly::from_int_rows(&[&[-1, 1], &[-1]]));
    }

    #[test]
    fn integer_root_examples() {
        let ints = |v: Vec<BigInt>| {
            v.into_iter()
                .map(|b| b.to_i64().unwrap())
                .collect::<Vec<_>>()
        };
        let z = XPoly::x();
        let two = XPoly::constant(TFrac::from_int(2));
        assert_eq!(ints(integer_roots(&(&z - &two)).unwrap()), vec![2]);
        let z_t1 = XPoly::from_int_rows(&[&[1, -1], &[1]]);
        assert!(integer_roots(&z_t1).unwrap().is_empty());
        let r = &XPoly::from_int_rows(&[&[-1], &[1]]) * &XPoly::from_int_rows(&[&[0, -1], &[1]]);
        assert_eq!(ints(integer_roots(&r).unwrap()), vec![1]);
        let many = XPoly::from_int_rows(&[&[-6], &[11], &[-6], &[1]]).scale(&TFrac::t());
        assert_eq!(ints(integer_roots(&many).unwrap()), vec![1, 2, 3]);
        let mixed = XPoly::from_int_rows(&[&[0], &[-1], &[0], &[4]]);
        assert_eq!(ints(integer_roots(&mixed).unwrap()), vec![0]);
        let neg = XPoly::from_int_rows(&[&[-1000], &[-999], &[1]]);
        assert_eq!(ints(integer_roots(&neg).unwrap()), vec![-1, 1000]);
        assert!(integer_roots(&XPoly::zero()).is_err());
    }

    #[test]
    fn universal_denominator_examples() {
        assert!(universal_denominator(&ode("(t-1-x)/x", "1"))
            .universal_den
            .is_one());
        assert_eq!(
            universal_denominator(&ode("2/x", "1")).universal_den,
            XPoly::x().pow(2)
        );
        assert!(universal_denominator(&ode("0", "1")).universal_den.is_one());
        assert_eq!(
            universal_denominator(&ode("0", "1/x^3")).universal_den,
            XPoly::x().pow(2)
        );
    }

    #[test]
    fn polynomial_solution_examples() {
        let x = XPoly::x();
        let gamma_b = XPoly::from_int_rows(&[&[-1, 1], &[-1]]);
        assert_eq!(polynomial_solutions(&x, &gamma_b, &x).unwrap(), None);
        let t = XPoly::constant(TFrac::t());
        let u = polynomial_solutions(&x, &t, &x).unwrap().unwrap();
        let tp1 = TFrac::new(TPoly::one(), TPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(u, x.scale(&tp1));
        let u = polynomial_solutions(&XPoly::one(), &XPoly::zero(), &x.scale(&TFrac::from_int(2)))
            .unwrap()
            .unwrap();
        assert_eq!(u, x.pow(2));
        assert!(polynomial_solutions(&XPoly::zero(), &XPoly::zero(), &x).is_err());
    }

    #[test]
    fn degree_bound_uses_integer_cancellation() {
        // x U' - 3U = x^2: the x^3 coefficient is free, so the bound is 3
        let a = XPoly::x();
        let b = XPoly::constant(TFrac::from_int(-3));
        let c = XPoly::from_int_rows(&[&[], &[], &[1]]);
        assert_eq!(polynomial_degree_bound(&a, &b, &c), Some(3));
        let u = polynomial_solutions(&a, &b, &c).unwrap().unwrap();
        assert_eq!(&(&a * &u.d_dx()) + &(&b * &u), c);
    }

    #[test]
    fn constant_solutions_when_b_is_small() {
        // (x^2 + 1) U' + U = 5 has U = 5 although deg C - deg A + 1 < 0
        let a = XPoly::from_int_rows(&[&[1], &[], &[1]]);
        let c = XPoly::constant(TFrac::from_int(5));
        assert_eq!(polynomial_degree_bound(&a, &XPoly::one(), &c), Some(0));
        assert_eq!(
            solve_first_order(&ode("1/(x^2+t)", "t/(x^2+t)")),
            Some(rf("t"))
        );
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_first_order(&ode("(t-1-x)/x", "1")), None);
        assert_eq!(solve_first_order(&ode("t/x", "1")), Some(rf("x/(t+1)")));
        assert_eq!(solve_first_order(&ode("2/x", "1")), Some(rf("x/3")));
        assert_eq!(solve_first_order(&ode("0", "1")), Some(rf("x")));
        assert_eq!(solve_first_order(&ode("1/x^2", "1")), None);
    }

    #[test]
    fn solutions_with_poles_at_poles_of_p() {
        // y = 1/x with p = 1/x^2: q = -1/x^2 + 1/x^3
        let p = rf("1/x^2");
        let y = rf("1/x");
        let e = FirstOrderOde::new(p.clone(), &y.d_dx() + &(&p * &y));
        let cert = universal_denominator(&e);
        assert!(cert.universal_den.exact_div(y.den()).is_some());
        let sol = solve_first_order(&e).unwrap();
        assert!(e.is_solution(&sol));
    }
}
