//! Singular points of `f = x^t + y^t + 1 + (x+y+1)^t` for `t = 2^i l + 1`
//! with `l >= 3` odd.
//!
//! A point `(a, b)` is singular exactly when `a`, `b` and `c = a + b + 1`
//! are all `l`-th roots of unity. Around such a point
//! `f(x+a, y+b) = F_0 + F_1 + F_(2^i) + F_(2^i+1) + ...` with closed forms
//! for the four displayed components and `F_j = 0` for `1 < j < 2^i`.

use serde::Serialize;

use crate::arith::{gcd, lcm, order_of_two, two_adic_split};
use crate::bipoly::{distinct_linear_factors, BiPoly, Monomial};
use crate::curves::{check_exponent, f_poly, w_poly};
use crate::error::{Error, Result};
use crate::field::{ell_roots_in, make_field, FieldElement, FieldSpec, MAX_FIELD_DEGREE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProfileCase {
    /// `gcd(l, 2^i - 1) = 1`
    #[serde(rename = "d=1")]
    Coprime,
    /// `1 < gcd(l, 2^i - 1) < l`
    #[serde(rename = "1<d<l")]
    Mixed,
    /// `gcd(l, 2^i - 1) = l`
    #[serde(rename = "d=l")]
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentProfile {
    pub t: u64,
    pub i: u32,
    pub ell: u64,
    pub d: u64,
    pub case: ProfileCase,
    /// Degree of the smallest field holding the `l`-th roots of unity.
    pub root_field_degree: u32,
    /// `lcm(root_field_degree, i)`: holds both the roots and GF(2^i).
    pub ambient_degree: u32,
}

impl ExponentProfile {
    pub fn two_i(&self) -> u32 {
        1 << self.i
    }

    pub fn ambient_field(&self) -> Result<FieldSpec> {
        make_field(self.ambient_degree)
    }
}

pub fn profile(t: u64) -> Result<ExponentProfile> {
    if t.is_multiple_of(2) || t < 3 {
        return Err(Error::InvalidExponent {
            t,
            reason: "t must be odd and at least 3",
        });
    }
    let (i, ell) = two_adic_split(t);
    if ell == 1 {
        return Err(Error::GoldExponent(t));
    }
    if i >= 32 {
        return Err(Error::Ceiling {
            what: "two-adic exponent i",
            value: i as u64,
            max: 31,
        });
    }
    let d = gcd(ell, (1u64 << i) - 1);
    let case = if d == 1 {
        ProfileCase::Coprime
    } else if d == ell {
        ProfileCase::Full
    } else {
        ProfileCase::Mixed
    };
    let root_field_degree = order_of_two(ell);
    let ambient_degree = lcm(root_field_degree as u64, i as u64) as u32;
    Ok(ExponentProfile {
        t,
        i,
        ell,
        d,
        case,
        root_field_degree,
        ambient_degree,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PointType {
    I,
    #[serde(rename = "II.A")]
    IIA,
    #[serde(rename = "II.B")]
    IIB,
    #[serde(rename = "III.A")]
    IIIA,
    #[serde(rename = "III.B")]
    IIIB,
}

impl PointType {
    pub fn label(&self) -> &'static str {
        match self {
            PointType::I => "I",
            PointType::IIA => "II.A",
            PointType::IIB => "II.B",
            PointType::IIIA => "III.A",
            PointType::IIIB => "III.B",
        }
    }

    /// 1, 2 or 3.
    pub fn major(&self) -> u8 {
        match self {
            PointType::I => 1,
            PointType::IIA | PointType::IIB => 2,
            PointType::IIIA | PointType::IIIB => 3,
        }
    }
}

/// Closed-form coefficients at a point. `F_1 = f1[0] x + f1[1] y`,
/// `F_(2^i) = f2i[0] x^(2^i) + f2i[1] y^(2^i)` and
/// `F_(2^i+1) = f2i1[0] x^(2^i+1) + f2i1[1] y^(2^i+1) + f2i1[2] (x^(2^i) y + x y^(2^i))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub f0: u64,
    pub f1: [u64; 2],
    pub f2i: [u64; 2],
    pub f2i1: [u64; 3],
}

impl ClosedForm {
    pub fn f2i_zero(&self) -> bool {
        self.f2i == [0, 0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularPoint {
    pub alpha: u64,
    pub beta: u64,
    pub lambda: u64,
    pub ptype: PointType,
    pub coeffs: ClosedForm,
    /// Multiplicities measured by the shift oracle.
    pub m_f: u32,
    pub m_w: u32,
    /// `m_f - m_w`.
    pub m_g: u32,
    /// Multiplicity of `g` measured directly, when requested.
    pub m_g_measured: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCounts {
    pub type_i: usize,
    pub type_ii_a: usize,
    pub type_ii_b: usize,
    pub type_iii_a: usize,
    pub type_iii_b: usize,
    pub type_ii_expected: u64,
    pub type_iii_bound: u64,
}

impl TypeCounts {
    pub fn type_ii(&self) -> usize {
        self.type_ii_a + self.type_ii_b
    }

    pub fn type_iii(&self) -> usize {
        self.type_iii_a + self.type_iii_b
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Atlas {
    pub profile: ExponentProfile,
    pub field: FieldSpec,
    pub points: Vec<SingularPoint>,
}

fn classify(field: &FieldSpec, i: u32, a: u64, b: u64) -> PointType {
    let sub = field.in_subfield(a, i) && field.in_subfield(b, i);
    match (a == 1, b == 1, a == b) {
        (true, true, _) => PointType::I,
        (true, false, _) | (false, true, _) | (false, false, true) => {
            if sub {
                PointType::IIA
            } else {
                PointType::IIB
            }
        }
        _ => {
            if sub {
                PointType::IIIA
            } else {
                PointType::IIIB
            }
        }
    }
}

/// Evaluates the closed forms at `(a, b)`.
pub fn closed_form(field: &FieldSpec, prof: &ExponentProfile, a: u64, b: u64) -> ClosedForm {
    let t = prof.t;
    let q = 1u64 << prof.i;
    let c = a ^ b ^ 1;
    let p = |x: u64, e: u64| field.pow(x, e);
    ClosedForm {
        f0: p(a, t) ^ p(b, t) ^ p(c, t) ^ 1,
        f1: [p(a, t - 1) ^ p(c, t - 1), p(b, t - 1) ^ p(c, t - 1)],
        f2i: [p(a, t - q) ^ p(c, t - q), p(b, t - q) ^ p(c, t - q)],
        f2i1: [
            p(a, t - q - 1) ^ p(c, t - q - 1),
            p(b, t - q - 1) ^ p(c, t - q - 1),
            p(c, t - q - 1),
        ],
    }
}

/// The closed forms as polynomials: `[F_0, F_1, F_(2^i), F_(2^i+1)]`.
pub fn formula_expansion(field: FieldSpec, prof: &ExponentProfile, cf: &ClosedForm) -> [BiPoly; 4] {
    let q = 1u32 << prof.i;
    let m = Monomial::new;
    [
        BiPoly::constant(field, cf.f0),
        BiPoly::from_terms(field, [(m(1, 0), cf.f1[0]), (m(0, 1), cf.f1[1])]),
        BiPoly::from_terms(field, [(m(q, 0), cf.f2i[0]), (m(0, q), cf.f2i[1])]),
        BiPoly::from_terms(
            field,
            [
                (m(q + 1, 0), cf.f2i1[0]),
                (m(0, q + 1), cf.f2i1[1]),
                (m(q, 1), cf.f2i1[2]),
                (m(1, q), cf.f2i1[2]),
            ],
        ),
    ]
}

/// Least total degree of a nonzero component of `p(x + a, y + b)`, where
/// `p` already lives over the field of `a` and `b`. The truncation bound
/// starts at `hint` and doubles until a nonzero component shows up.
pub fn multiplicity_raw(p: &BiPoly, a: u64, b: u64, hint: u32) -> Result<u32> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let mut k = hint.max(1);
    loop {
        let s = p.shift_raw(a, b, k);
        if let Some(low) = s.low_degree() {
            return Ok(low);
        }
        if k >= deg {
            return Err(Error::Verification(
                "shifted polynomial vanished below its degree".into(),
            ));
        }
        k = k.saturating_mul(2).min(deg);
    }
}

/// Multiplicity of `p` at `(a, b)` computed from the Taylor shift alone
/// (0 when the point is off the curve).
pub fn multiplicity_oracle(p: &BiPoly, a: &FieldElement, b: &FieldElement) -> Result<u32> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch {
            left: a.field().to_string(),
            right: b.field().to_string(),
        });
    }
    let lifted = p.lift_to(a.field())?;
    multiplicity_raw(&lifted, a.bits(), b.bits(), 1)
}

/// Every singular point with closed-form coefficients and shift-oracle
/// multiplicities of `f` and `w`, ordered by `(alpha, beta)`.
pub fn enumerate_singular(t: u64) -> Result<Atlas> {
    let prof = profile(t)?;
    check_exponent(t)?;
    if prof.ambient_degree > MAX_FIELD_DEGREE {
        return Err(Error::Ceiling {
            what: "singular-point field degree",
            value: prof.ambient_degree as u64,
            max: MAX_FIELD_DEGREE as u64,
        });
    }
    let field = prof.ambient_field()?;
    let roots = ell_roots_in(&field, prof.ell)?;
    let f = f_poly(t as u32)?.lift_to(field)?;
    let w = w_poly().lift_to(field)?;
    let hint = prof.two_i() + 1;
    let mut points = Vec::new();
    for &a in &roots {
        for &b in &roots {
            let c = a ^ b ^ 1;
            if c == 0 || field.pow(c, prof.ell) != 1 {
                continue;
            }
            let m_f = multiplicity_raw(&f, a, b, hint)?;
            let m_w = multiplicity_raw(&w, a, b, 3)?;
            points.push(SingularPoint {
                alpha: a,
                beta: b,
                lambda: c,
                ptype: classify(&field, prof.i, a, b),
                coeffs: closed_form(&field, &prof, a, b),
                m_f,
                m_w,
                m_g: m_f.checked_sub(m_w).ok_or_else(|| {
                    Error::Verification("multiplicity of w exceeds that of f".into())
                })?,
                m_g_measured: None,
            });
        }
    }
    Ok(Atlas {
        profile: prof,
        field,
        points,
    })
}

impl Atlas {
    pub fn counts(&self) -> TypeCounts {
        let n = |ty: PointType| self.points.iter().filter(|p| p.ptype == ty).count();
        let l = self.profile.ell;
        TypeCounts {
            type_i: n(PointType::I),
            type_ii_a: n(PointType::IIA),
            type_ii_b: n(PointType::IIB),
            type_iii_a: n(PointType::IIIA),
            type_iii_b: n(PointType::IIIB),
            type_ii_expected: 3 * (l - 1),
            type_iii_bound: (l - 1) * (l - 3),
        }
    }

    /// Measures the multiplicity of `g` at every point directly from its
    /// shift. Returns the number of points where it differs from
    /// `m_f - m_w`.
    pub fn measure_g(&mut self, g: &BiPoly) -> Result<usize> {
        let lifted = g.lift_to(self.field)?;
        let mut mismatches = 0;
        for p in &mut self.points {
            let m = multiplicity_raw(&lifted, p.alpha, p.beta, p.m_g.max(1))?;
            p.m_g_measured = Some(m);
            if m != p.m_g {
                mismatches += 1;
            }
        }
        Ok(mismatches)
    }

    /// Sum of `m_P(g)^2` over points where `g` is singular (`m_P(g) >= 2`).
    pub fn sum_squares_g(&self) -> u64 {
        self.points
            .iter()
            .filter(|p| p.m_g >= 2)
            .map(|p| (p.m_g as u64).pow(2))
            .sum()
    }
}

/// Multiplicities `(m_f, m_g)` predicted by type and by whether `F_(2^i)`
/// vanishes.
pub fn table_multiplicity(prof: &ExponentProfile, ptype: PointType, f2i_zero: bool) -> (u32, u32) {
    let q = prof.two_i();
    let m_f = if f2i_zero { q + 1 } else { q };
    let m_w = match ptype.major() {
        1 => 3,
        2 => 1,
        _ => 0,
    };
    (m_f, m_f - m_w)
}

/// Per-point outcome of the criterion for `F_(2^i) = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct FirstCoefEntry {
    pub alpha: u64,
    pub beta: u64,
    pub ptype: PointType,
    pub predicted_zero: bool,
    pub actual_zero: bool,
    /// Type III.B with `a/b` and `b/c` in GF(2^i).
    pub ratio_case: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FirstCoefReport {
    pub profile: ExponentProfile,
    pub entries: Vec<FirstCoefEntry>,
    pub mismatches: usize,
    pub zero_count: usize,
    pub nonzero_count: usize,
    /// The ratio case occurs only when `1 < d < l`.
    pub ratio_case_consistent: bool,
}

impl FirstCoefReport {
    pub fn holds(&self) -> bool {
        self.mismatches == 0 && self.ratio_case_consistent
    }
}

pub fn verify_first_coef_in(atlas: &Atlas) -> Result<FirstCoefReport> {
    let field = atlas.field;
    let prof = atlas.profile;
    let mut entries = Vec::new();
    for p in &atlas.points {
        let ratio_case = p.ptype == PointType::IIIB
            && field.in_subfield(field.div(p.alpha, p.beta)?, prof.i)
            && field.in_subfield(field.div(p.beta, p.lambda)?, prof.i);
        let predicted_zero = matches!(p.ptype, PointType::I | PointType::IIA | PointType::IIIA) || ratio_case;
        entries.push(FirstCoefEntry {
            alpha: p.alpha,
            beta: p.beta,
            ptype: p.ptype,
            predicted_zero,
            actual_zero: p.coeffs.f2i_zero(),
            ratio_case,
        });
    }
    let mismatches = entries.iter().filter(|e| e.predicted_zero != e.actual_zero).count();
    let zero_count = entries.iter().filter(|e| e.actual_zero).count();
    let any_ratio = entries.iter().any(|e| e.ratio_case);
    Ok(FirstCoefReport {
        profile: prof,
        nonzero_count: entries.len() - zero_count,
        zero_count,
        mismatches,
        ratio_case_consistent: !any_ratio || prof.case == ProfileCase::Mixed,
        entries,
    })
}

pub fn verify_first_coef(t: u64) -> Result<FirstCoefReport> {
    verify_first_coef_in(&enumerate_singular(t)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct BetaRow {
    pub alpha: u64,
    /// `b` in H with `b != 1, b != a` and `(a + b + 1)^l = 1`.
    pub valid_betas: usize,
    /// Some `b` with `(a + b + 1)^l != 1` exists.
    pub witness_exists: bool,
    /// `S = {b in H : a + b + 1 in H}` is closed under `b -> a + b + 1`,
    /// the map has no fixed point there, and `|S|` is even.
    pub involution_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BetaReport {
    pub ell: u64,
    pub field: FieldSpec,
    pub rows: Vec<BetaRow>,
}

impl BetaReport {
    pub fn holds(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.witness_exists && r.involution_ok && r.valid_betas as u64 <= self.ell - 3)
    }

    pub fn max_valid(&self) -> usize {
        self.rows.iter().map(|r| r.valid_betas).max().unwrap_or(0)
    }
}

pub fn verify_beta_exists(ell: u64) -> Result<BetaReport> {
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(Error::InvalidEll(ell));
    }
    let m = order_of_two(ell);
    if m > MAX_FIELD_DEGREE {
        return Err(Error::Ceiling {
            what: "root field degree",
            value: m as u64,
            max: MAX_FIELD_DEGREE as u64,
        });
    }
    let field = make_field(m)?;
    let roots = ell_roots_in(&field, ell)?;
    let in_h = |x: u64| roots.binary_search(&x).is_ok();
    let mut rows = Vec::new();
    for &a in roots.iter().filter(|&&a| a != 1) {
        let phi = |b: u64| a ^ b ^ 1;
        let s: Vec<u64> = roots.iter().copied().filter(|&b| in_h(phi(b))).collect();
        let closed = s.iter().all(|&b| s.binary_search(&phi(b)).is_ok());
        let fixed_free = s.iter().all(|&b| phi(b) != b);
        let valid_betas = s.iter().filter(|&&b| b != 1 && b != a).count();
        rows.push(BetaRow {
            alpha: a,
            valid_betas,
            witness_exists: roots.iter().any(|&b| b != 1 && b != a && !in_h(phi(b))),
            involution_ok: closed && fixed_free && s.len().is_multiple_of(2),
        });
    }
    Ok(BetaReport { ell, field, rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentCone {
    pub degree: u32,
    #[serde(serialize_with = "serialize_text")]
    pub form: BiPoly,
    pub distinct_linear_count: usize,
    /// `(A, B)` with `form = (A x + B y)^(2^i)` when the cone has degree `2^i`.
    pub linear_coeffs: Option<(u64, u64)>,
    /// `A^(2^i) = a^(1-2^i) + c^(1-2^i)` and `B^(2^i) = b^(1-2^i) + c^(1-2^i)`.
    pub closed_form_ok: Option<bool>,
}

fn serialize_text<S: serde::Serializer>(p: &BiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Tangent cone of `p` (over GF(2) or the atlas field) at a singular point.
pub fn tangent_cone(atlas: &Atlas, point: &SingularPoint, p: &BiPoly) -> Result<TangentCone> {
    let field = atlas.field;
    let lifted = p.lift_to(field)?;
    let m = multiplicity_raw(&lifted, point.alpha, point.beta, 1)?;
    let form = lifted.shift_raw(point.alpha, point.beta, m).homogeneous_component(m);
    let distinct_linear_count = distinct_linear_factors(&form)?.count;
    let i = atlas.profile.i;
    let q = atlas.profile.two_i();
    let (mut linear_coeffs, mut closed_form_ok) = (None, None);
    if m == q {
        let n = field.n();
        let root = |v: u64| field.frobenius(v, (n - i % n) % n);
        let (a_coef, b_coef) = (form.coeff(q, 0), form.coeff(0, q));
        let (big_a, big_b) = (root(a_coef), root(b_coef));
        let linear = BiPoly::from_terms(field, [(Monomial::new(1, 0), big_a), (Monomial::new(0, 1), big_b)]);
        let e = 1i64 - q as i64;
        let c = point.lambda;
        let want_a = field.pow_signed(point.alpha, e)? ^ field.pow_signed(c, e)?;
        let want_b = field.pow_signed(point.beta, e)? ^ field.pow_signed(c, e)?;
        let ok = linear.pow(q)? == form
            && field.frobenius(big_a, i) == want_a
            && field.frobenius(big_b, i) == want_b;
        linear_coeffs = Some((big_a, big_b));
        closed_form_ok = Some(ok);
    }
    Ok(TangentCone {
        degree: m,
        form,
        distinct_linear_count,
        linear_coeffs,
        closed_form_ok,
    })
}

/// Compares the closed forms with the homogeneous components of the shift of
/// `f`, coefficient by coefficient, including the vanishing of the
/// components strictly between 1 and `2^i`.
pub fn formulas_match_shift(atlas: &Atlas, point: &SingularPoint) -> Result<bool> {
    let prof = atlas.profile;
    let q = prof.two_i();
    let f = f_poly(prof.t as u32)?.lift_to(atlas.field)?;
    let shifted = f.shift_raw(point.alpha, point.beta, q + 1);
    let expected = formula_expansion(atlas.field, &prof, &point.coeffs);
    let degrees = [0, 1, q, q + 1];
    let displayed_ok = degrees
        .iter()
        .zip(expected.iter())
        .all(|(&d, e)| shifted.homogeneous_component(d) == *e);
    let gap_ok = (2..q).all(|d| shifted.homogeneous_component(d).is_zero());
    Ok(displayed_ok && gap_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        let p = profile(205).unwrap();
        assert_eq!((p.i, p.ell, p.d, p.case), (2, 51, 3, ProfileCase::Mixed));
        assert_eq!(p.ambient_degree, 8);
        let p = profile(49).unwrap();
        assert_eq!((p.i, p.ell, p.d, p.case), (4, 3, 3, ProfileCase::Full));
        let p = profile(13).unwrap();
        assert_eq!((p.i, p.ell), (2, 3));
        assert_eq!(profile(9), Err(Error::GoldExponent(9)));
        assert!(profile(10).is_err());
    }

    #[test]
    fn atlas_t49() {
        let atlas = enumerate_singular(49).unwrap();
        let c = atlas.counts();
        assert_eq!((c.type_i, c.type_ii(), c.type_iii()), (1, 6, 0));
        assert_eq!(c.type_ii_b, 0);
        for p in &atlas.points {
            let (mf, mg) = table_multiplicity(&atlas.profile, p.ptype, p.coeffs.f2i_zero());
            assert_eq!((p.m_f, p.m_g), (mf, mg));
            assert!(p.coeffs.f2i_zero());
        }
    }

    #[test]
    fn type_one_point_formulas() {
        let atlas = enumerate_singular(13).unwrap();
        let one = atlas.points.iter().find(|p| p.ptype == PointType::I).unwrap();
        assert_eq!(one.coeffs.f2i1, [0, 0, 1]);
        assert_eq!(one.m_w, 3);
        assert!(formulas_match_shift(&atlas, one).unwrap());
    }

    #[test]
    fn beta_small() {
        for ell in [3u64, 7, 9] {
            assert!(verify_beta_exists(ell).unwrap().holds());
        }
        assert!(verify_beta_exists(4).is_err());
    }

    #[test]
    fn w_cone_at_one_one() {
        let atlas = enumerate_singular(13).unwrap();
        let one = atlas.points.iter().find(|p| p.ptype == PointType::I).unwrap();
        let cone = tangent_cone(&atlas, one, &w_poly()).unwrap();
        assert_eq!((cone.degree, cone.distinct_linear_count), (3, 3));
    }
}
