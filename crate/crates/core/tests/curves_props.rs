use apnkit::curves::{count_points, count_zeros, infinity_check, transform_identity, CurveFamily};
use apnkit::make_field;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn family_invariants(t in (1u64..40).prop_map(|k| 2 * k + 1)) {
        let fam = CurveFamily::build(t).unwrap();
        prop_assert!(fam.check_invariants().is_ok());
        prop_assert!(transform_identity(t).unwrap());
        prop_assert_eq!(fam.g.swap_xy(), fam.g.clone());
    }

    #[test]
    fn counts_match_direct_evaluation(t in (2u64..20).prop_map(|k| 2 * k + 1), n in 1u32..=5) {
        let g = CurveFamily::build(t).unwrap().g;
        let f = make_field(n).unwrap().to_owned();
        let lifted = g.lift_to(f).unwrap();
        let (mut all, mut distinct) = (0u64, 0u64);
        for a in f.elements() {
            for b in f.elements() {
                if lifted.eval(a, b) == 0 {
                    all += 1;
                    if a != b && a != 1 && b != 1 {
                        distinct += 1;
                    }
                }
            }
        }
        prop_assert_eq!(count_zeros(&g, n, false).unwrap(), all);
        prop_assert_eq!(count_points(t, n, true).unwrap(), distinct);
    }
}

#[test]
fn smooth_at_infinity_for_small_t() {
    for t in [5u64, 7, 9, 11, 13] {
        assert!(infinity_check(t).unwrap(), "t={t}");
    }
}
