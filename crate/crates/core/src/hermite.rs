//! Hermite reduction with respect to `d/dx` and the rational antiderivative
//! decision it yields.
//!
//! Every `g` in `Q(t)(x)` splits as `g = h' + a/d` with `d` squarefree and
//! `deg a < deg d`. The proper remainder `a/d` has a rational antiderivative
//! only if it is zero, so `g` is integrable in `Q(t)(x)` exactly when the
//! remainder vanishes.

use num_rational::BigRational;

use crate::arith::{squarefree, RatFun, XPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteResult {
    /// `h` with `g = h' + rem_num/rem_den`.
    pub reduced: RatFun,
    pub rem_num: XPoly,
    /// Monic and squarefree; `1` when the remainder is zero.
    pub rem_den: XPoly,
}

impl HermiteResult {
    pub fn remainder(&self) -> RatFun {
        RatFun::normalize(self.rem_num.clone(), self.rem_den.clone()).unwrap()
    }

    pub fn is_integrable(&self) -> bool {
        self.rem_num.is_zero()
    }
}

/// Termwise antiderivative of a polynomial, zero constant term.
pub(crate) fn integrate_polynomial(p: &XPoly) -> XPoly {
    XPoly::new(
        std::iter::once(Default::default())
            .chain(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c.scale(&BigRational::new(1.into(), (i as i64 + 1).into()))),
            )
            .collect(),
    )
}

pub fn hermite_reduce(g: &RatFun) -> HermiteResult {
    let (poly, mut a) = g.polynomial_part();
    let mut reduced = RatFun::from_poly(integrate_polynomial(&poly));
    if a.is_zero() {
        return HermiteResult {
            reduced,
            rem_num: XPoly::zero(),
            rem_den: XPoly::one(),
        };
    }
    let mut d = g.den().clone();
    let sqf = squarefree(&d).expect("denominator is nonzero");
    for (v, i) in sqf.parts.iter().filter(|(_, i)| *i >= 2) {
        let u = d
            .exact_div(&v.pow(*i as u32))
            .expect("squarefree factor divides");
        let uv1 = &u * &v.d_dx();
        for j in (1..*i).rev() {
            let jr = BigRational::from_integer((j as i64).into());
            let rhs = a.scale_rational(&(-jr.recip()));
            // b * u * v' + c * v = -a/j
            let (b, c) = XPoly::diophantine(&uv1, v, &rhs).expect("u v' and v are coprime");
            let term = RatFun::normalize(b.clone(), v.pow(j as u32)).unwrap();
            reduced = &reduced + &term;
            a = &c.scale_rational(&(-jr)) - &(&u * &b.d_dx());
        }
        d = &u * v;
    }
    let rem = RatFun::normalize(a, d).unwrap();
    // the remainder is proper by construction; fold any polynomial part back
    let (extra, rem_num) = rem.polynomial_part();
    if !extra.is_zero() {
        reduced = &reduced + &RatFun::from_poly(integrate_polynomial(&extra));
    }
    let rem_den = if rem_num.is_zero() {
        XPoly::one()
    } else {
        rem.den().clone()
    };
    HermiteResult {
        reduced,
        rem_num,
        rem_den,
    }
}

/// `h` with `h' = g` when one exists in `Q(t)(x)`. The polynomial part of
/// `h` has zero constant term.
pub fn rational_antiderivative(g: &RatFun) -> Option<RatFun> {
    let hr = hermite_reduce(g);
    hr.is_integrable().then_some(hr.reduced)
}
