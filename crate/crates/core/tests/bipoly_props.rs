use apnkit::bipoly::{parse, BiPoly, Monomial};
use apnkit::{make_field, FieldSpec};
use proptest::prelude::*;

fn poly(field: FieldSpec, max_deg: u32) -> impl Strategy<Value = BiPoly> {
    let q = field.size();
    prop::collection::vec((0..=max_deg, 0..=max_deg, 0..q), 0..8).prop_map(move |terms| {
        BiPoly::from_terms(field, terms.into_iter().map(|(a, b, c)| (Monomial::new(a, b), c)))
    })
}

fn gf16() -> FieldSpec {
    make_field(4).unwrap()
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(gf16(), 5), b in poly(gf16(), 5), c in poly(gf16(), 5)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.add(&a).unwrap().is_zero());
        prop_assert_eq!(a.square().unwrap(), a.mul(&a).unwrap());
    }

    #[test]
    fn exact_division_round_trip(a in poly(gf16(), 5), b in poly(gf16(), 5)) {
        prop_assume!(!b.is_zero());
        let p = a.mul(&b).unwrap();
        prop_assert_eq!(p.exact_div(&b).unwrap(), Some(a));
    }

    #[test]
    fn shift_is_an_involution(p in poly(gf16(), 6), a in 0u64..16, b in 0u64..16) {
        let s = p.shift_raw(a, b, u32::MAX);
        prop_assert_eq!(s.shift_raw(a, b, u32::MAX), p.clone());
        // shifting moves the value at (a, b) to the origin
        prop_assert_eq!(s.coeff(0, 0), p.eval(a, b));
    }

    #[test]
    fn components_sum_to_polynomial(p in poly(gf16(), 6)) {
        let mut acc = BiPoly::zero(gf16());
        for (d, comp) in p.homogeneous_components() {
            prop_assert_eq!(comp.homogeneous_degree(), Some(d));
            acc = acc.add(&comp).unwrap();
        }
        prop_assert_eq!(acc, p);
    }

    #[test]
    fn text_round_trip(p in poly(gf16(), 6), q in poly(FieldSpec::gf2(), 9)) {
        prop_assert_eq!(parse(gf16(), &p.to_string()).unwrap(), p);
        prop_assert_eq!(parse(FieldSpec::gf2(), &q.to_string()).unwrap(), q);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(gf16(), 4), b in poly(gf16(), 4), x in 0u64..16, y in 0u64..16) {
        let f = gf16();
        prop_assert_eq!(a.mul(&b).unwrap().eval(x, y), f.mul(a.eval(x, y), b.eval(x, y)));
    }
}

#[test]
fn frobenius_power_of_linear_form() {
    let two = FieldSpec::gf2();
    let p = parse(two, "x + y + 1").unwrap().pow(8).unwrap();
    assert_eq!(p, parse(two, "x^8 + y^8 + 1").unwrap());
}
