use apnkit::bipoly::{BiPoly, Monomial};
use apnkit::factorlab::{trial_factor_search, verify_divides, SearchOutcome};
use apnkit::FieldSpec;
use proptest::prelude::*;

fn gf2_poly(max_deg: u32, min_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg), 1..6).prop_filter_map("degree", move |mons| {
        let p = BiPoly::from_terms(
            FieldSpec::gf2(),
            mons.into_iter().filter(|(a, b)| a + b <= max_deg).map(|(a, b)| (Monomial::new(a, b), 1)),
        );
        (!p.is_zero() && p.degree().unwrap_or(0) >= min_deg).then_some(p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn divide_round_trip(p in gf2_poly(6, 0), q in gf2_poly(4, 0)) {
        prop_assert_eq!(verify_divides(&p.mul(&q).unwrap(), &q).unwrap(), Some(p));
    }

    #[test]
    fn planted_factor_is_found(planted in gf2_poly(3, 1), other in gf2_poly(4, 1)) {
        let p = planted.mul(&other).unwrap();
        match trial_factor_search(&p, 3).unwrap() {
            SearchOutcome::Found { factor, factor_degree, .. } => {
                prop_assert!((1..=3).contains(&factor_degree));
                prop_assert!(verify_divides(&p, &factor).unwrap().is_some());
            }
            other => prop_assert!(false, "no factor found: {:?}", other),
        }
    }
}
