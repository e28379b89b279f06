//! The coefficient field `Q(t)`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use super::tpoly::TPoly;
use crate::error::ArithError;

/// Element of `Q(t)` in canonical form: `den` monic and coprime to `num`,
/// zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TFrac {
    num: TPoly,
    den: TPoly,
}

impl Default for TFrac {
    fn default() -> Self {
        Self::zero()
    }
}

impl TFrac {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let l = den.lc();
        if l.is_one() {
            TFrac { num, den }
        } else {
            let inv = l.recip();
            TFrac {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        TFrac {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(TPoly::one())
    }

    pub fn from_poly(p: TPoly) -> Self {
        TFrac {
            num: p,
            den: TPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(TPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(c.into()))
    }

    /// The parameter `t`.
    pub fn t() -> Self {
        Self::from_poly(TPoly::var())
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational value when this element does not depend on `t`.
    pub fn as_rational(&self) -> Option<BigRational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TFrac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `d/dt`.
    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }

    /// Value at `t = at`, or `None` when `at` is a pole.
    pub fn eval(&self, at: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(at);
        (!d.is_zero()).then(|| self.num.eval(at) / d)
    }

    pub fn pow(&self, exp: u32) -> Self {
        TFrac {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }
}

impl Add<&TFrac> for &TFrac {
    type Output = TFrac;
    fn add(self, rhs: &TFrac) -> TFrac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return TFrac::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        TFrac::reduce(num, &self.den * &d2)
    }
}

impl Sub<&TFrac> for &TFrac {
    type Output = TFrac;
    fn sub(self, rhs: &TFrac) -> TFrac {
        self + &(-rhs)
    }
}

impl Mul<&TFrac> for &TFrac {
    type Output = TFrac;
    fn mul(self, rhs: &TFrac) -> TFrac {
        if self.is_zero() || rhs.is_zero() {
            return TFrac::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return TFrac::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let l = den.lc();
        if l.is_one() {
            TFrac { num, den }
        } else {
            let inv = l.recip();
            TFrac {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Neg for &TFrac {
    type Output = TFrac;
    fn neg(self) -> TFrac {
        TFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for TFrac {
    type Output = TFrac;
    fn neg(self) -> TFrac {
        -&self
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<TFrac> for TFrac {
            type Output = TFrac;
            fn $method(self, rhs: TFrac) -> TFrac {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&TFrac> for TFrac {
            type Output = TFrac;
            fn $method(self, rhs: &TFrac) -> TFrac {
                (&self).$method(rhs)
            }
        }
        impl $imp<TFrac> for &TFrac {
            type Output = TFrac;
            fn $method(self, rhs: TFrac) -> TFrac {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
