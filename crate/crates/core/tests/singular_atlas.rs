use apnkit::curves::CurveFamily;
use apnkit::singular::{enumerate_singular, multiplicity_oracle, profile, table_multiplicity, ProfileCase};

#[test]
fn tables_agree_with_oracle_on_small_exponents() {
    for t in [13u64, 25, 29, 49, 57] {
        let mut atlas = enumerate_singular(t).unwrap();
        let g = CurveFamily::build(t).unwrap().g;
        assert_eq!(atlas.measure_g(&g).unwrap(), 0, "t={t}");
        for p in &atlas.points {
            let (mf, mg) = table_multiplicity(&atlas.profile, p.ptype, p.coeffs.f2i_zero());
            assert_eq!((p.m_f, p.m_g), (mf, mg), "t={t} {:?}", p.ptype);
        }
        let c = atlas.counts();
        assert_eq!(c.type_i, 1);
        assert!(c.type_iii() as u64 <= c.type_iii_bound);
    }
}

#[test]
fn oracle_on_field_elements() {
    let atlas = enumerate_singular(29).unwrap();
    let g = CurveFamily::build(29).unwrap().g;
    let p = &atlas.points[0];
    let a = atlas.field.element(p.alpha).unwrap();
    let b = atlas.field.element(p.beta).unwrap();
    assert_eq!(multiplicity_oracle(&g, &a, &b).unwrap(), p.m_g);
}

#[test]
fn profile_cases() {
    assert_eq!(profile(29).unwrap().case, ProfileCase::Coprime);
    assert_eq!(profile(205).unwrap().case, ProfileCase::Mixed);
    assert_eq!(profile(57).unwrap().case, ProfileCase::Full);
}
