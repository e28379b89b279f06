//! The differential field `K = Q(t)(x)` with `d/dx` and `d/dt`.

use std::ops::{Add, Mul, Neg, Sub};

use super::tfrac::TFrac;
use super::xpoly::XPoly;
use crate::error::ArithError;

/// Element of `Q(t)(x)` in canonical form: `den` monic in `x`, coprime to
/// `num`, and zero is `0/1`. Two values are equal iff their components are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: XPoly,
    den: XPoly,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFun {
    /// Canonical representative of `num/den`.
    pub fn normalize(num: XPoly, den: XPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: XPoly, den: XPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if num.is_constant() || den.is_constant() {
            return Self::monic_den(num, den);
        }
        let (num, den) = XPoly::cancel_common(&num, &den);
        Self::monic_den(num, den)
    }

    fn monic_den(num: XPoly, den: XPoly) -> Self {
        let l = den.lc();
        if l.is_one() {
            RatFun { num, den }
        } else {
            let inv = l.inv().unwrap();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: XPoly::zero(),
            den: XPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(XPoly::one())
    }

    pub fn x() -> Self {
        Self::from_poly(XPoly::x())
    }

    pub fn t() -> Self {
        Self::from_tfrac(TFrac::t())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_tfrac(TFrac::from_int(c))
    }

    pub fn from_tfrac(c: TFrac) -> Self {
        Self::from_poly(XPoly::constant(c))
    }

    pub fn from_poly(p: XPoly) -> Self {
        RatFun {
            num: p,
            den: XPoly::one(),
        }
    }

    pub fn num(&self) -> &XPoly {
        &self.num
    }

    pub fn den(&self) -> &XPoly {
        &self.den
    }

    pub fn into_parts(self) -> (XPoly, XPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The `Q(t)` value when `self` does not depend on `x`.
    pub fn as_tfrac(&self) -> Option<TFrac> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Result<Self, ArithError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(exp.unsigned_abs())
            .map_err(|_| ArithError::DimensionMismatch(format!("exponent {exp} out of range")))?;
        Ok(RatFun {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// The main derivation `d/dx`; elements of `Q(t)` are constants.
    pub fn d_dx(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.d_dx());
        }
        // With g = gcd(d, d'), the numerator n' d/g - n d'/g is nonzero at
        // every root of d, so the quotient below is already reduced.
        let d1 = self.den.d_dx();
        let g = self.den.gcd(&d1).unwrap();
        let dg = self.den.exact_div(&g).unwrap();
        let n = &(&self.num.d_dx() * &dg) - &(&self.num * &d1.exact_div(&g).unwrap());
        Self::monic_den(n, &self.den * &dg)
    }

    /// The parametric derivation `d/dt`; `x` is a constant.
    pub fn d_dt(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.d_dt());
        }
        let dt = self.den.d_dt();
        if dt.is_zero() {
            return Self::reduce(self.num.d_dt(), self.den.clone());
        }
        let g = self.den.gcd(&dt).unwrap();
        let dg = self.den.exact_div(&g).unwrap();
        let n = &(&self.num.d_dt() * &dg) - &(&self.num * &dt.exact_div(&g).unwrap());
        Self::reduce(n, &self.den * &dg)
    }

    pub fn scale(&self, c: &TFrac) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // units of Q(t) do not affect coprimality in x
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Splits into polynomial part and proper fraction `(q, r)` with
    /// `self = q + r/den`, `deg r < deg den`.
    pub fn polynomial_part(&self) -> (XPoly, XPoly) {
        self.num.div_rem(&self.den).unwrap()
    }
}

impl From<XPoly> for RatFun {
    fn from(p: XPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl From<TFrac> for RatFun {
    fn from(c: TFrac) -> Self {
        RatFun::from_tfrac(c)
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den).unwrap();
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if g.is_one() {
            // coprime denominators: the sum is already reduced
            return RatFun::monic_den(num, &self.den * &rhs.den);
        }
        RatFun::reduce(num, &self.den * &d2)
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den).unwrap();
        let g2 = rhs.num.gcd(&self.den).unwrap();
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFun::monic_den(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                (&self).$method(rhs)
            }
        }
        impl $imp<RatFun> for &RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::TPoly;

    fn gamma_p() -> RatFun {
        // (t - 1 - x)/x
        let num = XPoly::from_int_rows(&[&[-1, 1], &[-1]]);
        RatFun::normalize(num, XPoly::x()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let two = TFrac::from_int(2);
        let r = RatFun::normalize(XPoly::x().scale(&two), XPoly::constant(two)).unwrap();
        assert_eq!(r, RatFun::x());
        // (x^2 - x)/(x - 1) = x
        let num = XPoly::from_int_rows(&[&[], &[-1], &[1]]);
        let den = XPoly::from_int_rows(&[&[-1], &[1]]);
        assert_eq!(RatFun::normalize(num, den).unwrap(), RatFun::x());
        let z = RatFun::normalize(XPoly::zero(), XPoly::x()).unwrap();
        assert_eq!(z, RatFun::zero());
        assert_eq!(z.den(), &XPoly::one());
        assert_eq!(
            RatFun::normalize(XPoly::x(), XPoly::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn d_dx_examples() {
        let x = RatFun::x();
        assert_eq!((&x * &x).d_dx(), x.scale(&TFrac::from_int(2)));
        // d/dx (t-1-x)/x = -(t-1)/x^2
        let expected =
            RatFun::normalize(XPoly::from_int_rows(&[&[1, -1]]), XPoly::x().pow(2)).unwrap();
        assert_eq!(gamma_p().d_dx(), expected);
        // x * f rule
        let f = gamma_p();
        assert_eq!((&x * &f).d_dx(), &f + &(&x * &f.d_dx()));
        let c = RatFun::from_tfrac(
            TFrac::new(TPoly::from_ints(&[0, 1]), TPoly::from_ints(&[1, 1])).unwrap(),
        );
        assert!(c.d_dx().is_zero());
    }

    #[test]
    fn d_dt_examples() {
        assert_eq!(gamma_p().d_dt(), RatFun::x().inv().unwrap());
        assert!(RatFun::x().pow(3).unwrap().d_dt().is_zero());
        let t = RatFun::t();
        assert_eq!((&t * &t).d_dt(), t.scale(&TFrac::from_int(2)));
    }

    #[test]
    fn inverse_and_division() {
        let p = gamma_p();
        assert!((&p * &p.inv().unwrap()).is_one());
        assert!(RatFun::zero().inv().is_err());
        assert_eq!(
            RatFun::x().pow(-2).unwrap(),
            RatFun::x().pow(2).unwrap().inv().unwrap()
        );
    }
}
