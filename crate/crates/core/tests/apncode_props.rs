use apnkit::apncode::{
    classify, differential_spectrum, gold_kasami_sequence, is_apn, is_codeword, low_weight_search, weight3_search,
    weight4_search, ExponentClass,
};
use apnkit::arith::gcd;
use apnkit::make_field;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn spectrum_mass_and_parity(t in (1u64..200).prop_map(|k| 2 * k + 1), n in 2u32..=8) {
        let s = differential_spectrum(t, n).unwrap();
        let size = 1u64 << n;
        // every (a != 0, b) pair is counted once; solutions come in pairs x, x + a
        prop_assert_eq!(s.histogram.values().sum::<u64>(), (size - 1) * size);
        prop_assert_eq!(s.histogram.iter().map(|(k, f)| k * f).sum::<u64>(), (size - 1) * size);
        prop_assert!(s.histogram.keys().all(|k| k % 2 == 0));
        prop_assert_eq!(s.is_apn(), is_apn(t, n).unwrap());
    }

    #[test]
    fn witnesses_are_codewords(t in (1u64..60).prop_map(|k| 2 * k + 1), n in 3u32..=8) {
        let field = make_field(n).unwrap();
        if let Some(w) = weight4_search(t, n).unwrap() {
            prop_assert!(w.iter().all(|&x| x != 0));
            prop_assert!(is_codeword(&field, t, &w));
        }
        if let Some(w) = weight3_search(t, n).unwrap() {
            prop_assert!(is_codeword(&field, t, &w));
        }
        prop_assert_eq!(low_weight_search(t, n).unwrap().is_some(), !is_apn(t, n).unwrap());
    }

    #[test]
    fn apn_excludes_weight_three(t in (1u64..60).prop_map(|k| 2 * k + 1), n in 3u32..=8) {
        if is_apn(t, n).unwrap() {
            prop_assert!(weight3_search(t, n).unwrap().is_none());
            prop_assert!(weight4_search(t, n).unwrap().is_none());
        }
    }
}

#[test]
fn gold_and_kasami_gcd_law() {
    for i in 1u32..=4 {
        let gold = (1u64 << i) + 1;
        let kasami = (1u64 << (2 * i)) - (1u64 << i) + 1;
        for n in 2u32..=10 {
            let expected = gcd(i as u64, n as u64) == 1;
            assert_eq!(is_apn(gold, n).unwrap(), expected, "gold t={gold} n={n}");
            if i >= 2 && n >= 4 {
                assert_eq!(is_apn(kasami, n).unwrap(), expected, "kasami t={kasami} n={n}");
            }
        }
    }
}

#[test]
fn sequence_members_are_classified() {
    for t in gold_kasami_sequence(1025) {
        assert_ne!(classify(t), ExponentClass::Neither, "t={t}");
    }
    assert_eq!(classify(205), ExponentClass::Neither);
}
