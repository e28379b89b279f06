#![allow(dead_code)]

use dtrans::oracle::sample::{self, Shape};
use dtrans::{RatFun, TFrac, TPoly, XPoly};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn rf(s: &str) -> RatFun {
    dtrans::parse_ratfun(s).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Strategy wrapper around the seeded samplers.
pub fn seeded<T: std::fmt::Debug>(f: fn(&mut StdRng) -> T) -> impl Strategy<Value = T> {
    any::<u64>().prop_map(move |s| f(&mut rng(s)))
}

pub const SMALL: Shape = Shape::new(3, 2);

pub fn small_ratfun(r: &mut StdRng) -> RatFun {
    sample::ratfun(r, SMALL)
}

pub fn small_xpoly(r: &mut StdRng) -> XPoly {
    sample::xpoly(r, SMALL)
}

pub fn small_tfrac(r: &mut StdRng) -> TFrac {
    let den = loop {
        let d = sample::tpoly(r, 2, 5);
        if !d.is_zero() {
            break d;
        }
    };
    TFrac::new(sample::tpoly(r, 2, 5), den).unwrap()
}

/// Determinant by cofactor expansion, independent of the library solver.
pub fn det(m: &[Vec<TFrac>]) -> TFrac {
    match m.len() {
        0 => TFrac::one(),
        1 => m[0][0].clone(),
        n => (0..n).fold(TFrac::zero(), |acc, j| {
            let minor: Vec<Vec<TFrac>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, c)| c.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &det(&minor);
            if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            }
        }),
    }
}

/// Sylvester matrix of `a` and `b` in `x`.
pub fn sylvester(a: &XPoly, b: &XPoly) -> Vec<Vec<TFrac>> {
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, dp, shifts) in [(a, m, n), (b, n, m)] {
        for s in 0..shifts {
            let mut row = vec![TFrac::zero(); size];
            for k in 0..=dp {
                row[s + (dp - k)] = p.coeff(k);
            }
            rows.push(row);
        }
    }
    rows
}

pub fn tpoly(coeffs: &[i64]) -> TPoly {
    TPoly::from_ints(coeffs)
}
