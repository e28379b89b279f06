//! Bounded-ansatz brute force for `Y' + p Y = q`, kept separate from the
//! decision procedures it cross-checks: no residue analysis, no degree
//! bounds, no Hermite reduction. Only built with the `oracle` feature.

use crate::arith::{solve_linear_tfrac, RatFun, TFrac, XPoly};
use crate::ratsolve::{analyze_first_order, FirstOrderOde};

/// Search space `Y = (u_0 + u_1 x + ... + u_n x^n) / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzBound {
    pub max_num_degree: usize,
    pub denominator: XPoly,
}

impl AnsatzBound {
    pub fn new(max_num_degree: usize, denominator: XPoly) -> Self {
        assert!(!denominator.is_zero(), "ansatz denominator must be nonzero");
        AnsatzBound {
            max_num_degree,
            denominator,
        }
    }
}

/// The main solver's denominator times `x (x + 1)`, with three degrees of
/// slack over its numerator bound. Used for absence checks.
pub fn padded_bound(ode: &FirstOrderOde) -> AnsatzBound {
    let analysis = analyze_first_order(ode);
    let safety = &XPoly::x() * &(&XPoly::x() + &XPoly::one());
    let denominator = &analysis.certificate.universal_den * &safety;
    AnsatzBound::new(analysis.degree_bound.unwrap_or(0) + 2 + 3, denominator)
}

/// A verified solution within the ansatz, or `None`.
pub fn brute_solve(ode: &FirstOrderOde, bound: &AnsatzBound) -> Option<RatFun> {
    let basis: Vec<RatFun> = (0..=bound.max_num_degree)
        .map(|i| {
            RatFun::normalize(XPoly::monomial(TFrac::one(), i), bound.denominator.clone()).unwrap()
        })
        .collect();
    let images: Vec<RatFun> = basis.iter().map(|b| &b.d_dx() + &(&ode.p * b)).collect();

    // common denominator of every image and of q
    let common = images
        .iter()
        .map(RatFun::den)
        .chain(std::iter::once(ode.q.den()))
        .fold(XPoly::one(), |acc, d| {
            let g = acc.gcd(d).unwrap();
            (&acc * &d.exact_div(&g).unwrap()).monic()
        });
    let lift = |f: &RatFun| f.num() * &common.exact_div(f.den()).unwrap();
    let columns: Vec<XPoly> = images.iter().map(lift).collect();
    let target = lift(&ode.q);

    let rows = columns
        .iter()
        .chain(std::iter::once(&target))
        .filter_map(XPoly::degree)
        .max()
        .map_or(1, |d| d + 1);
    let matrix: Vec<Vec<TFrac>> = (0..rows)
        .map(|k| columns.iter().map(|c| c.coeff(k)).collect())
        .collect();
    let rhs: Vec<TFrac> = (0..rows).map(|k| target.coeff(k)).collect();
    let u = solve_linear_tfrac(&matrix, &rhs).ok()??;

    let y = basis
        .iter()
        .zip(&u)
        .fold(RatFun::zero(), |acc, (b, c)| &acc + &b.scale(c));
    ode.is_solution(&y).then_some(y)
}

/// `Y' = g` within the ansatz.
pub fn brute_antiderivative(g: &RatFun, bound: &AnsatzBound) -> Option<RatFun> {
    brute_solve(&FirstOrderOde::new(RatFun::zero(), g.clone()), bound)
}


/// Seeded random elements of `Q[t]`, `Q(t)[x]` and `Q(t)(x)` for test
/// corpora.
pub mod sample {
    use rand::Rng;

    use crate::arith::{RatFun, TPoly, XPoly};

    /// Shape of random test values.
    #[derive(Clone, Copy, Debug)]
    pub struct Shape {
        pub max_x_degree: usize,
        pub max_t_degree: usize,
        /// Coefficients are drawn from `-coeff_bound..=coeff_bound`.
        pub coeff_bound: i64,
        /// Probability that an `x`-coefficient is forced to zero.
        pub sparsity: f64,
    }

    impl Shape {
        pub const fn new(max_x_degree: usize, max_t_degree: usize) -> Self {
            Shape {
                max_x_degree,
                max_t_degree,
                coeff_bound: 9,
                sparsity: 0.5,
            }
        }
    }

    pub fn tpoly<R: Rng>(rng: &mut R, max_degree: usize, bound: i64) -> TPoly {
        let deg = rng.gen_range(0..=max_degree);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
        TPoly::from_ints(&coeffs)
    }

    pub fn xpoly<R: Rng>(rng: &mut R, shape: Shape) -> XPoly {
        let deg = rng.gen_range(0..=shape.max_x_degree);
        let coeffs = (0..=deg)
            .map(|i| {
                // keep the top coefficient so the degree is as drawn
                if i < deg && rng.gen_bool(shape.sparsity) {
                    TPoly::zero()
                } else {
                    tpoly(rng, shape.max_t_degree, shape.coeff_bound)
                }
            })
            .collect();
        XPoly::from_tpolys(coeffs)
    }

    pub fn nonzero_xpoly<R: Rng>(rng: &mut R, shape: Shape) -> XPoly {
        loop {
            let p = xpoly(rng, shape);
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn ratfun<R: Rng>(rng: &mut R, shape: Shape) -> RatFun {
        RatFun::normalize(xpoly(rng, shape), nonzero_xpoly(rng, shape)).unwrap()
    }

    pub fn nonzero_ratfun<R: Rng>(rng: &mut R, shape: Shape) -> RatFun {
        loop {
            let f = ratfun(rng, shape);
            if !f.is_zero() {
                return f;
            }
        }
    }
}
