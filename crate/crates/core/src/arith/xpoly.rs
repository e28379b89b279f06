//! Dense polynomials in `x` over `Q(t)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::ops::{Add, Mul, Neg, Sub};

use super::prs;
use super::tfrac::TFrac;
use super::tpoly::TPoly;
use super::zpoly::{coprime_by_specialization, ZPoly};
use crate::error::ArithError;

/// Polynomial in `x` with `Q(t)` coefficients, lowest degree first, no
/// trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<TFrac>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<TFrac>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(TFrac::one())
    }

    pub fn constant(c: TFrac) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(TFrac::one(), 1)
    }

    pub fn monomial(c: TFrac, deg: usize) -> Self {
        let mut coeffs = vec![TFrac::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// Shorthand for tests and examples: `coeffs[i]` is the coefficient of
    /// `x^i`, given as a polynomial in `t` with integer coefficients.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| TFrac::from_poly(TPoly::from_ints(r)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[TFrac] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> TFrac {
        self.coeffs.get(i).cloned().unwrap_or_else(TFrac::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> TFrac {
        self.coeffs.last().cloned().unwrap_or_else(TFrac::zero)
    }

    pub fn scale(&self, c: &TFrac) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = self.lc();
        if l.is_one() {
            return self.clone();
        }
        self.scale(&l.inv().unwrap())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![TFrac::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    /// `d/dx`; coefficients are constants.
    pub fn d_dx(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&BigRational::from_integer(i.into())))
                .collect(),
        )
    }

    /// `d/dt` applied coefficient-wise; `x` is a constant.
    pub fn d_dt(&self) -> Self {
        Self::new(self.coeffs.iter().map(TFrac::derivative).collect())
    }

    /// Horner evaluation at an element of `Q(t)`.
    pub fn eval(&self, at: &TFrac) -> TFrac {
        self.coeffs
            .iter()
            .rev()
            .fold(TFrac::zero(), |acc, c| &(&acc * at) + c)
    }

    /// Composition `self(other)`.
    pub fn compose(&self, other: &XPoly) -> XPoly {
        self.coeffs.iter().rev().fold(XPoly::zero(), |acc, c| {
            &(&acc * other) + &XPoly::constant(c.clone())
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division over `Q(t)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = divisor.lc().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![TFrac::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate().take(dd) {
                    rem[k + i] = &rem[k + i] - &(&c * dc);
                }
            }
            rem[k + dd] = TFrac::zero();
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, ArithError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Writes `self = factor * sum c_i x^i` with every `c_i` in `Q[t]` and
    /// the `c_i` jointly coprime with monic leading content.
    pub fn to_primitive_tpoly(&self) -> (TFrac, Vec<TPoly>) {
        if self.is_zero() {
            return (TFrac::zero(), Vec::new());
        }
        let l = self.coeffs.iter().fold(TPoly::one(), |acc, c| {
            if c.den().is_one() {
                acc
            } else {
                acc.lcm(c.den())
            }
        });
        let polys: Vec<TPoly> = self
            .coeffs
            .iter()
            .map(|c| {
                if c.den() == &l {
                    c.num().clone()
                } else {
                    c.num() * &l.exact_div(c.den()).unwrap()
                }
            })
            .collect();
        let cont = prs::content(&polys);
        let polys: Vec<TPoly> = polys.iter().map(|p| p.exact_div(&cont).unwrap()).collect();
        // normalize the rational unit so the leading coefficient is monic
        let lead = polys.last().unwrap().lc();
        let polys: Vec<TPoly> = polys.iter().map(|p| p.scale(&lead.recip())).collect();
        let factor = TFrac::new(cont.scale(&lead), l).unwrap();
        (factor, polys)
    }

    pub fn from_tpolys(polys: Vec<TPoly>) -> Self {
        Self::new(polys.into_iter().map(TFrac::from_poly).collect())
    }

    /// Monic gcd in `Q(t)[x]` via the subresultant PRS over `Z[t]`.
    pub fn gcd(&self, other: &Self) -> Result<Self, ArithError> {
        if self.is_zero() && other.is_zero() {
            return Err(ArithError::ZeroGcd);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Self::one());
        }
        let (_, a) = self.to_primitive_tpoly();
        let (_, b) = other.to_primitive_tpoly();
        let (_, za) = ZPoly::clear_rows(&a);
        let (_, zb) = ZPoly::clear_rows(&b);
        if coprime_by_specialization(&za, &zb) {
            return Ok(Self::one());
        }
        Ok(Self::from_tpolys(prs::gcd(&za, &zb).iter().map(ZPoly::to_tpoly).collect()).monic())
    }

    /// `(a / g, b / g)` for `g = gcd(a, b)`, with the division done in
    /// `Z[t][x]` where it is exact.
    pub(crate) fn cancel_common(a: &Self, b: &Self) -> (Self, Self) {
        let (fa, pa) = a.to_primitive_tpoly();
        let (fb, pb) = b.to_primitive_tpoly();
        let (la, za) = ZPoly::clear_rows(&pa);
        let (lb, zb) = ZPoly::clear_rows(&pb);
        if coprime_by_specialization(&za, &zb) {
            return (a.clone(), b.clone());
        }
        let g = prs::gcd(&za, &zb);
        if g.len() == 1 {
            return (a.clone(), b.clone());
        }
        let back = |z: &[ZPoly], l: BigInt, f: TFrac| {
            let q = prs::div_exact_poly(z, &g);
            Self::from_tpolys(q.iter().map(ZPoly::to_tpoly).collect())
                .scale(&f.scale(&BigRational::new(BigInt::one(), l)))
        };
        (back(&za, la, fa), back(&zb, lb, fb))
    }

    /// Resultant with respect to `x`, `res(a, b) = lc(a)^deg(b) * prod b(alpha_i)`.
    pub fn resultant(&self, other: &Self) -> Result<TFrac, ArithError> {
        if self.is_zero() || other.is_zero() {
            return Err(ArithError::ZeroInput("resultant"));
        }
        let (fa, a) = self.to_primitive_tpoly();
        let (fb, b) = other.to_primitive_tpoly();
        let da = self.degree().unwrap() as u32;
        let db = other.degree().unwrap() as u32;
        let (la, za) = ZPoly::clear_rows(&a);
        let (lb, zb) = ZPoly::clear_rows(&b);
        let scale = BigRational::new(BigInt::one(), la.pow(db) * lb.pow(da));
        let r = TFrac::from_poly(prs::resultant(&za, &zb).to_tpoly().scale(&scale));
        Ok(&(&r * &fa.pow(db)) * &fb.pow(da))
    }

    /// Extended Euclid: returns `(s, t, g)` with `s*self + t*other = g`, `g`
    /// the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self), ArithError> {
        if self.is_zero() && other.is_zero() {
            return Err(ArithError::ZeroGcd);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.lc().inv()?;
        Ok((s0.scale(&inv), t0.scale(&inv), r0.scale(&inv)))
    }

    /// Solves `s*a + t*b = c` with `deg s < deg b`, for coprime `a`, `b`.
    pub fn diophantine(a: &Self, b: &Self, c: &Self) -> Result<(Self, Self), ArithError> {
        let (s0, _, g) = a.ext_gcd(b)?;
        debug_assert!(g.is_one(), "diophantine requires coprime inputs");
        let s = (&s0 * c).rem(b)?;
        let t = (c - &(&s * a))
            .exact_div(b)
            .ok_or(ArithError::Inconsistent)?;
        Ok((s, t))
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => TFrac::zero(),
                })
                .collect(),
        )
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self + &(-rhs)
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![TFrac::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        XPoly::new(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<XPoly> for XPoly {
            type Output = XPoly;
            fn $method(self, rhs: XPoly) -> XPoly {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&XPoly> for XPoly {
            type Output = XPoly;
            fn $method(self, rhs: &XPoly) -> XPoly {
                (&self).$method(rhs)
            }
        }
        impl $imp<XPoly> for &XPoly {
            type Output = XPoly;
            fn $method(self, rhs: XPoly) -> XPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl From<TFrac> for XPoly {
    fn from(c: TFrac) -> Self {
        XPoly::constant(c)
    }
}

impl XPoly {
    /// True when every coefficient is a rational constant.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_rational().is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_minus(c: i64) -> TFrac {
        TFrac::from_poly(TPoly::from_ints(&[-c, 1]))
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2 - t^2, x - t) = x - t
        let a = XPoly::from_int_rows(&[&[0, 0, -1], &[], &[1]]);
        let b = XPoly::from_int_rows(&[&[0, -1], &[1]]);
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, b);
        assert!(a.exact_div(&g).is_some());
        assert!(XPoly::x().gcd(&XPoly::one()).unwrap().is_one());
        let x2 = XPoly::x().pow(2);
        assert_eq!(x2.gcd(&XPoly::x().pow(3)).unwrap(), x2);
        assert_eq!(XPoly::zero().gcd(&XPoly::zero()), Err(ArithError::ZeroGcd));
    }

    #[test]
    fn gcd_with_fractional_coefficients() {
        // (x - t)(x + 1/(t-1)) and (x - t) * 3/(t+2)
        let xt = &XPoly::x() - &XPoly::constant(TFrac::t());
        let other = &XPoly::x() + &XPoly::constant(t_minus(1).inv().unwrap());
        let a = &xt * &other;
        let three = TFrac::from_int(3);
        let b = xt.scale(&(&three * &t_minus(-2).inv().unwrap()));
        assert_eq!(a.gcd(&b).unwrap(), xt);
    }

    #[test]
    fn resultant_examples() {
        let x = XPoly::x();
        let xm1 = &x - &XPoly::one();
        assert_eq!(x.resultant(&xm1).unwrap(), TFrac::from_int(-1));
        let xt = &x - &XPoly::constant(TFrac::t());
        assert!(xt.resultant(&xt).unwrap().is_zero());
        assert_eq!(x.pow(2).resultant(&xm1).unwrap(), TFrac::one());
        assert!(XPoly::zero().resultant(&x).is_err());
    }

    #[test]
    fn ext_gcd_identity() {
        let a = XPoly::from_int_rows(&[&[1], &[0, 1], &[1]]);
        let b = XPoly::from_int_rows(&[&[-1], &[1]]);
        let (s, t, g) = a.ext_gcd(&b).unwrap();
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }
}
