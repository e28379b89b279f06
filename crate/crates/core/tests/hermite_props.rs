mod common;

use common::*;
use dtrans::oracle::sample::{self, Shape};
use dtrans::{hermite_reduce, rational_antiderivative, RatFun, XPoly};
use proptest::prelude::*;

fn integrand(r: &mut rand::rngs::StdRng) -> RatFun {
    sample::ratfun(r, Shape::new(3, 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivatives_are_integrated_up_to_a_constant(h in seeded(integrand)) {
        let w = rational_antiderivative(&h.d_dx()).expect("derivative is integrable");
        prop_assert!((&w - &h).as_tfrac().is_some());
    }

    #[test]
    fn logarithmic_terms_are_rejected(h in seeded(integrand), c in seeded(small_tfrac)) {
        prop_assume!(!c.is_zero());
        let log_term = RatFun::from_tfrac(c).checked_div(&RatFun::x()).unwrap();
        prop_assert_eq!(rational_antiderivative(&(&h.d_dx() + &log_term)), None);
    }

    #[test]
    fn reduction_is_exact_with_squarefree_remainder(g in seeded(integrand)) {
        let h = hermite_reduce(&g);
        prop_assert_eq!(&h.reduced.d_dx() + &h.remainder(), g.clone());
        prop_assert!(h.rem_den.gcd(&h.rem_den.d_dx()).unwrap().is_constant());
        prop_assert!(h.rem_num.degree() < h.rem_den.degree() || h.rem_num.is_zero());
        prop_assert_eq!(h.is_integrable(), rational_antiderivative(&g).is_some());
    }
}

#[test]
fn high_multiplicity_poles() {
    // d/dx of t/(x - t)^4 + x^2/(x^2 + t)^3
    let h = rf("t/(x - t)^4 + x^2/(x^2 + t)^3");
    let w = rational_antiderivative(&h.d_dx()).unwrap();
    assert!((&w - &h).as_tfrac().is_some());
    let r = hermite_reduce(&rf("1/(x^2 + t)^2"));
    assert!(!r.is_integrable());
    assert_eq!(r.rem_den, XPoly::from_int_rows(&[&[0, 1], &[], &[1]]));
}
