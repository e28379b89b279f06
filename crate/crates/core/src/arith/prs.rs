//! Fraction-free polynomial remainder sequences over an integral domain.
//!
//! Polynomials here are plain dense coefficient vectors (lowest degree first)
//! over a [`Domain`]. The two instantiations used by the crate are `BigInt`
//! (for gcds in `Q[t]` after clearing denominators) and [`TPoly`] (for gcds
//! and resultants in `Q(t)[x]` after clearing denominators to `Q[t][x]`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

use super::tpoly::TPoly;

/// Integral domain with exact division and a normalized gcd.
pub(crate) trait Domain: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact. Panics otherwise.
    fn div_exact(&self, other: &Self) -> Self;
    /// Normalized gcd (positive integer, monic polynomial).
    fn gcd(&self, other: &Self) -> Self;

    fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        assert!(Zero::is_zero(&r), "inexact integer division");
        q
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other).abs()
    }
}

impl Domain for TPoly {
    fn zero() -> Self {
        TPoly::zero()
    }
    fn one() -> Self {
        TPoly::one()
    }
    fn is_zero(&self) -> bool {
        TPoly::is_zero(self)
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self.exact_div(other)
            .expect("inexact polynomial division in Q[t]")
    }
    fn gcd(&self, other: &Self) -> Self {
        TPoly::gcd(self, other)
    }
}

pub(crate) fn trim<R: Domain>(p: &mut Vec<R>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree<R: Domain>(p: &[R]) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

fn lc<R: Domain>(p: &[R]) -> &R {
    p.last().expect("leading coefficient of zero polynomial")
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
pub(crate) fn prem<R: Domain>(a: &[R], b: &[R]) -> Vec<R> {
    let db = degree(b);
    let lb = lc(b);
    let mut r: Vec<R> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let mut e = r.len() - db;
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lr.mul(bc));
        }
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lb.pow(e);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

pub(crate) fn content<R: Domain>(p: &[R]) -> R {
    let mut g = R::zero();
    for c in p {
        g = g.gcd(c);
        if g == R::one() {
            break;
        }
    }
    g
}

pub(crate) fn primitive_part<R: Domain>(p: &[R]) -> Vec<R> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    p.iter().map(|x| x.div_exact(&c)).collect()
}

/// Quotient `a / b` for `b` known to divide `a` in `R[x]`. Panics otherwise.
pub(crate) fn div_exact_poly<R: Domain>(a: &[R], b: &[R]) -> Vec<R> {
    let db = degree(b);
    let lb = lc(b);
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        assert!(rem.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut quot = vec![R::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].div_exact(lb);
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&c.mul(bc));
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(R::is_zero), "inexact polynomial division");
    quot
}

/// Gcd of two polynomials via the subresultant PRS. The result is correct up
/// to a unit of the domain; callers normalize.
pub(crate) fn gcd<R: Domain>(a: &[R], b: &[R]) -> Vec<R> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let c = content(&a).gcd(&content(&b));
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let delta = degree(&a) - degree(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![c];
        }
        let d = g.mul(&h.pow(delta));
        a = b;
        b = r.iter().map(|x| x.div_exact(&d)).collect();
        g = lc(&a).clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1))
        };
    }
    primitive_part(&b).into_iter().map(|x| x.mul(&c)).collect()
}

/// Sylvester resultant `res(a, b) = lc(a)^deg(b) * prod b(alpha_i)` via the
/// subresultant PRS.
pub(crate) fn resultant<R: Domain>(a: &[R], b: &[R]) -> R {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return R::zero();
    }
    let mut sign_flip = false;
    if a.len() < b.len() {
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            sign_flip = !sign_flip;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if degree(&b) == 0 {
        let r = lc(&b).pow(degree(&a));
        return if sign_flip { r.neg() } else { r };
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let delta = degree(&a) - degree(&b);
        if degree(&a) % 2 == 1 && degree(&b) % 2 == 1 {
            sign_flip = !sign_flip;
        }
        let r = prem(&a, &b);
        let d = g.mul(&h.pow(delta));
        a = b;
        b = r.iter().map(|x| x.div_exact(&d)).collect();
        g = lc(&a).clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1))
        };
        if b.is_empty() {
            return R::zero();
        }
        if degree(&b) == 0 {
            break;
        }
    }
    let da = degree(&a);
    let r = lc(&b).pow(da).div_exact(&h.pow(da - 1));
    if sign_flip {
        r.neg()
    } else {
        r
    }
}
