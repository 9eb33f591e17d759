use apnkit::bezout::{fulton_intersection, random_curve, Intersection};
use apnkit::make_field;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersection_is_symmetric_and_additive(seed in any::<u64>(), a in 0u64..4, b in 0u64..4) {
        let field = make_field(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_curve(&mut rng, field, 3);
        let g1 = random_curve(&mut rng, field, 2);
        let g2 = random_curve(&mut rng, field, 2);
        let i1 = fulton_intersection(&f, &g1, a, b).unwrap();
        prop_assert_eq!(i1, fulton_intersection(&g1, &f, a, b).unwrap());
        let i2 = fulton_intersection(&f, &g2, a, b).unwrap();
        let prod = fulton_intersection(&f, &g1.mul(&g2).unwrap(), a, b).unwrap();
        match (i1, i2) {
            (Intersection::Finite(x), Intersection::Finite(y)) => prop_assert_eq!(prod, Intersection::Finite(x + y)),
            _ => prop_assert_eq!(prod, Intersection::Infinite),
        }
        // zero exactly off the curves
        let on_both = f.eval(a, b) == 0 && g1.eval(a, b) == 0;
        prop_assert_eq!(i1 == Intersection::Finite(0), !on_both);
    }
}
