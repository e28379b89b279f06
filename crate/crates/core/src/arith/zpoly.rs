//! Integer polynomials in `t`, the coefficient domain for remainder
//! sequences in `x`. Keeping coefficients in `Z[t]` avoids the rational
//! normalization that dominates the cost of the same sequence over `Q[t]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::prs;
use super::tpoly::TPoly;

/// Dense, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        ZPoly(c)
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub(crate) fn eval(&self, at: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub(crate) fn to_tpoly(&self) -> TPoly {
        TPoly::from_integers(self.0.clone())
    }

    /// Clears the denominators of a coefficient row jointly: returns `L` and
    /// the integer rows of `L * polys`.
    pub(crate) fn clear_rows(polys: &[TPoly]) -> (BigInt, Vec<ZPoly>) {
        let l = polys
            .iter()
            .flat_map(TPoly::coeffs)
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lr = BigRational::from_integer(l.clone());
        let rows = polys
            .iter()
            .map(|p| ZPoly::new(p.coeffs().iter().map(|c| (c * &lr).to_integer()).collect()))
            .collect();
        (l, rows)
    }
}

/// True when some specialization `t = t0` that keeps both leading
/// coefficients nonzero leaves the images coprime, which certifies that the
/// rows are coprime in `Q(t)[x]`. `false` is inconclusive.
pub(crate) fn coprime_by_specialization(a: &[ZPoly], b: &[ZPoly]) -> bool {
    [3i64, -5, 7].iter().any(|&t0| {
        let t0 = BigInt::from(t0);
        let ea: Vec<BigInt> = a.iter().map(|c| c.eval(&t0)).collect();
        let eb: Vec<BigInt> = b.iter().map(|c| c.eval(&t0)).collect();
        let lead_ok = |e: &[BigInt]| e.last().is_some_and(|c| !c.is_zero());
        lead_ok(&ea) && lead_ok(&eb) && prs::gcd(&ea, &eb).len() == 1
    })
}

impl prs::Domain for ZPoly {
    fn zero() -> Self {
        ZPoly(Vec::new())
    }
    fn one() -> Self {
        ZPoly(vec![<BigInt as One>::one()])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Self::zero();
        }
        let mut out = vec![<BigInt as Zero>::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }
    fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }
    fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.0.is_empty(), "division by zero polynomial");
        let dd = other.0.len() - 1;
        if self.0.len() <= dd {
            assert!(self.0.is_empty(), "inexact polynomial division in Z[t]");
            return Self::zero();
        }
        let lead = other.0.last().unwrap();
        let mut rem = self.0.clone();
        let mut quot = vec![<BigInt as Zero>::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (c, r) = rem[k + dd].div_rem(lead);
            assert!(Zero::is_zero(&r), "inexact polynomial division in Z[t]");
            if !Zero::is_zero(&c) {
                for (i, dc) in other.0.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "inexact polynomial division in Z[t]"
        );
        ZPoly::new(quot)
    }
    /// Gcd in `Z[t]` with positive leading coefficient.
    fn gcd(&self, other: &Self) -> Self {
        let g = prs::gcd(&self.0, &other.0);
        let g = ZPoly::new(g);
        if g.0.last().is_some_and(Signed::is_negative) {
            prs::Domain::neg(&g)
        } else {
            g
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::prs::Domain;

    fn z(v: &[i64]) -> ZPoly {
        ZPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_includes_integer_content() {
        // 6(t + 1)(t - 2) and 4(t + 1)
        let a = z(&[-12, -6, 6]);
        let b = z(&[4, 4]);
        assert_eq!(a.gcd(&b), z(&[2, 2]));
        assert_eq!(z(&[-3]).gcd(&ZPoly::zero()), z(&[3]));
    }

    #[test]
    fn exact_division() {
        let a = z(&[-12, -6, 6]);
        assert_eq!(a.div_exact(&z(&[2, 2])), z(&[-6, 3]));
    }
}
