use apnkit::field::{ell_roots_in, Embedding};
use apnkit::make_field;
use proptest::prelude::*;

fn elems() -> impl Strategy<Value = (u32, u64, u64, u64)> {
    (1u32..=40).prop_flat_map(|n| {
        let m = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        (Just(n), 0..=m, 0..=m, 0..=m)
    })
}

proptest! {
    #[test]
    fn field_axioms((n, a, b, c) in elems()) {
        let f = make_field(n).unwrap();
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, 1), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn frobenius_is_additive_and_sqrt_inverts((n, a, b, _c) in elems()) {
        let f = make_field(n).unwrap();
        prop_assert_eq!(f.square(f.add(a, b)), f.add(f.square(a), f.square(b)));
        prop_assert_eq!(f.square(f.sqrt(a)), a);
        prop_assert_eq!(f.frobenius(a, n), a);
        prop_assert!(f.trace(a) <= 1);
    }

    #[test]
    fn embedding_is_a_ring_map(k in 1u32..=5, mult in 1u32..=4, a in any::<u64>(), b in any::<u64>()) {
        let small = make_field(k).unwrap();
        let big = make_field(k * mult).unwrap();
        let e = Embedding::new(small, big).unwrap();
        let (a, b) = (a % small.size(), b % small.size());
        prop_assert_eq!(e.map(small.mul(a, b)), big.mul(e.map(a), e.map(b)));
        prop_assert_eq!(e.map(a ^ b), e.map(a) ^ e.map(b));
        prop_assert!(big.in_subfield(e.map(a), k));
    }
}

#[test]
fn roots_of_unity_have_exact_order() {
    for ell in [3u64, 5, 7, 9, 15, 51] {
        let m = apnkit::arith::order_of_two(ell);
        let f = make_field(m).unwrap();
        let roots = ell_roots_in(&f, ell).unwrap();
        assert_eq!(roots.len() as u64, ell);
        assert!(roots.iter().all(|&r| f.pow(r, ell) == 1));
    }
}
