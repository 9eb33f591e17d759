//! Divisibility certificates and bounded-degree factor searches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bipoly::{parse, BiPoly, Monomial};
use crate::curves::CurveFamily;
use crate::error::{Error, Result};
use crate::field::{make_field, Embedding, FieldSpec};
use crate::singular::{profile, ExponentProfile};
use crate::unipoly::UniPoly;

/// Candidate-count ceiling for every search (`2^28`).
pub const MAX_CANDIDATES: u64 = 1 << 28;
pub const MAX_TRIAL_DEGREE: u32 = 6;
/// Polynomials of larger degree are not probed over extensions.
pub const MAX_PROBE_TARGET_DEGREE: u32 = 12;
const SCREEN_POINTS: usize = 8;
const SCREEN_SEED: u64 = 0x5eed_f4c7;
const SCREEN_FIELD: u32 = 16;

pub const FACTOR_205_TEXT: &str = include_str!("../fixtures/g205_factor.txt");
pub const FACTOR_205_SHA256: &str = include_str!("../fixtures/g205_factor.txt.sha256");

/// `p / q`, re-multiplied and compared before returning. `Ok(None)` when
/// `q` does not divide `p`.
pub fn verify_divides(p: &BiPoly, q: &BiPoly) -> Result<Option<BiPoly>> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    match p.exact_div(q)? {
        None => Ok(None),
        Some(quot) => {
            if &quot.mul(q)? != p {
                return Err(Error::Verification("quotient times divisor differs from dividend".into()));
            }
            Ok(Some(quot))
        }
    }
}

/// Monomials of total degree `<= d` in canonical order.
fn monomials_upto(d: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..=d)
        .flat_map(|k| (0..=k).map(move |dx| Monomial::new(dx, k - dx)))
        .collect();
    out.sort();
    out
}

/// Fibres `p(x0, y)` at fixed random `x0` in a helper field; a divisor `q`
/// must have `q(x0, y) | p(x0, y)` at each of them.
struct Screen {
    emb: Embedding,
    fibres: Vec<UniPoly>,
    /// `x0^k` per point.
    powers: Vec<Vec<u64>>,
}

impl Screen {
    fn new(p: &BiPoly, max_deg: u32) -> Result<Screen> {
        let big = make_field(SCREEN_FIELD)?;
        let emb = Embedding::new(p.field(), big)?;
        let pb = p.embed(&emb)?;
        let mut rng = ChaCha8Rng::seed_from_u64(SCREEN_SEED);
        let xs: Vec<u64> = (0..SCREEN_POINTS).map(|_| rng.gen_range(1..big.size())).collect();
        let fibres = xs.iter().map(|&a| pb.specialize_x(a)).collect();
        let powers = xs
            .iter()
            .map(|&a| (0..=max_deg).map(|k| big.pow(a, k as u64)).collect())
            .collect();
        Ok(Screen { emb, fibres, powers })
    }

    fn passes(&self, terms: &[(Monomial, u64)]) -> bool {
        let big = self.emb.big();
        let dy = terms.iter().map(|(m, _)| m.dy).max().unwrap_or(0) as usize;
        for (k, fibre) in self.fibres.iter().enumerate() {
            let mut c = vec![0u64; dy + 1];
            for (m, v) in terms {
                c[m.dy as usize] ^= big.mul(self.emb.map(*v), self.powers[k][m.dx as usize]);
            }
            let q = UniPoly::new(big, c);
            if q.is_zero() {
                if !fibre.is_zero() {
                    return false;
                }
                continue;
            }
            if !fibre.rem(&q).is_zero() {
                return false;
            }
        }
        true
    }
}

/// Decodes candidate `index` over a field with `q` elements: base-`q`
/// digits attached to `monos`.
fn decode(index: u64, monos: &[Monomial], q: u64) -> Vec<(Monomial, u64)> {
    let mut out = Vec::new();
    let mut r = index;
    for m in monos {
        let c = r % q;
        if c != 0 {
            out.push((*m, c));
        }
        r /= q;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found {
        #[serde(serialize_with = "ser_text")]
        factor: BiPoly,
        factor_degree: u32,
        cofactor_degree: u32,
    },
    NoneUpTo {
        max_deg: u32,
        candidates: u64,
    },
    Inconclusive {
        reason: String,
    },
}

fn ser_text<S: serde::Serializer>(p: &BiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Exhaustive search over all candidates whose coefficients lie in `p`'s
/// field, of total degree `1..=max_deg` and below `deg p`, first in
/// canonical order. Candidates are normalised to leading coefficient 1.
fn search(p: &BiPoly, max_deg: u32) -> Result<SearchOutcome> {
    let field = p.field();
    let deg_p = p.degree().ok_or(Error::ZeroPolynomial)?;
    let cap = max_deg.min(deg_p.saturating_sub(1));
    if cap == 0 {
        return Ok(SearchOutcome::NoneUpTo { max_deg, candidates: 0 });
    }
    let monos = monomials_upto(cap);
    let q = field.size();
    let total = (q as f64).powi(monos.len() as i32);
    if total > MAX_CANDIDATES as f64 {
        return Err(Error::Ceiling {
            what: "factor search candidates",
            value: total.min(u64::MAX as f64) as u64,
            max: MAX_CANDIDATES,
        });
    }
    let total = total as u64;
    let screen = Screen::new(p, cap)?;
    let check = |idx: u64| -> Option<u64> {
        let terms = decode(idx, &monos, q);
        let (lead, c) = *terms.last()?;
        if lead.degree() == 0 || c != 1 {
            return None;
        }
        screen.passes(&terms).then_some(idx)
    };
    // Chunks scanned in order, each in parallel; the first chunk with hits
    // yields the canonical minimum.
    let chunk = 1u64 << 16;
    let mut start = 0u64;
    while start < total {
        let end = (start + chunk * 64).min(total);
        let mut hits: Vec<u64> = (start..end).into_par_iter().filter_map(check).collect();
        hits.sort_unstable();
        for idx in hits {
            let cand = BiPoly::from_terms(field, decode(idx, &monos, q));
            if let Some(quot) = verify_divides(p, &cand)? {
                return Ok(SearchOutcome::Found {
                    factor_degree: cand.degree().unwrap_or(0),
                    cofactor_degree: quot.degree().unwrap_or(0),
                    factor: cand,
                });
            }
        }
        start = end;
    }
    Ok(SearchOutcome::NoneUpTo { max_deg, candidates: total })
}

/// First nonconstant proper divisor over GF(2) of degree `<= max_deg`.
pub fn trial_factor_search(p: &BiPoly, max_deg: u32) -> Result<SearchOutcome> {
    if p.field().n() != 1 {
        return Err(Error::FieldMismatch {
            left: p.field().to_string(),
            right: FieldSpec::gf2().to_string(),
        });
    }
    if max_deg > MAX_TRIAL_DEGREE {
        return Err(Error::Ceiling {
            what: "trial factor degree",
            value: max_deg as u64,
            max: MAX_TRIAL_DEGREE as u64,
        });
    }
    search(p, max_deg)
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorWitness {
    pub t: u64,
    #[serde(serialize_with = "ser_text")]
    pub factor: BiPoly,
    #[serde(serialize_with = "ser_text")]
    pub quotient: BiPoly,
    pub factor_degree: u32,
    pub quotient_degree: u32,
    pub factor_terms: usize,
    pub quotient_terms: usize,
    pub g_terms: usize,
    pub product_exact: bool,
    /// No GF(2) factor of degree `<= irreducible_upto` exists.
    pub irreducible_upto: u32,
    pub factor_irreducible: bool,
    pub fixture_sha256: String,
    pub profile: ExponentProfile,
}

/// Parses the stored degree-10 factor after checking its digest.
pub fn load_factor_205() -> Result<BiPoly> {
    let digest = hex::encode(Sha256::digest(FACTOR_205_TEXT.as_bytes()));
    if digest != FACTOR_205_SHA256.trim() {
        return Err(Error::Verification(format!("fixture digest mismatch: {digest}")));
    }
    parse(FieldSpec::gf2(), FACTOR_205_TEXT)
}

/// Division certificate only: `(factor, quotient, g)`.
pub fn division_certificate_205() -> Result<(BiPoly, BiPoly, BiPoly)> {
    let factor = load_factor_205()?;
    let g = CurveFamily::build(205)?.g;
    let quotient = verify_divides(&g, &factor)?
        .ok_or_else(|| Error::Verification("fixture factor does not divide g_205".into()))?;
    Ok((factor, quotient, g))
}

/// Full witness that `g_205` is reducible over GF(2): division, bounded
/// irreducibility of the small factor, and the exponent profile.
pub fn counterexample_205() -> Result<FactorWitness> {
    let (factor, quotient, g) = division_certificate_205()?;
    let fd = factor.degree().unwrap_or(0);
    let k = fd / 2;
    let irreducible = match trial_factor_search(&factor, k)? {
        SearchOutcome::NoneUpTo { .. } => true,
        SearchOutcome::Found { factor: h, .. } => {
            return Err(Error::Verification(format!("fixture factor is reducible: {h}")));
        }
        SearchOutcome::Inconclusive { reason } => return Err(Error::Verification(reason)),
    };
    Ok(FactorWitness {
        t: 205,
        factor_degree: fd,
        quotient_degree: quotient.degree().unwrap_or(0),
        factor_terms: factor.num_terms(),
        quotient_terms: quotient.num_terms(),
        g_terms: g.num_terms(),
        product_exact: factor.mul(&quotient)? == g,
        irreducible_upto: k,
        factor_irreducible: irreducible,
        fixture_sha256: FACTOR_205_SHA256.trim().to_string(),
        profile: profile(205)?,
        factor,
        quotient,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeField {
    pub field_degree: u32,
    pub search_degree: u32,
    #[serde(flatten)]
    pub outcome: SearchOutcome,
    /// Degrees of the Frobenius conjugates of a found factor, each of which
    /// must also divide.
    pub conjugate_degrees: Vec<u32>,
    pub conjugates_divide: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub t: u64,
    pub g_degree: u32,
    pub fields: Vec<ProbeField>,
}

fn probe_over(g: &BiPoly, field_degree: u32, max_deg: u32) -> Result<ProbeField> {
    let field = make_field(field_degree)?;
    let lifted = g.lift_to(field)?;
    let g_deg = g.degree().unwrap_or(0);
    let mut pf = ProbeField {
        field_degree,
        search_degree: max_deg,
        outcome: SearchOutcome::Inconclusive { reason: String::new() },
        conjugate_degrees: Vec::new(),
        conjugates_divide: None,
    };
    if field_degree > 1 && g_deg > MAX_PROBE_TARGET_DEGREE {
        pf.outcome = SearchOutcome::Inconclusive {
            reason: format!("inconclusive at ceiling: deg g = {g_deg} > {MAX_PROBE_TARGET_DEGREE}"),
        };
        return Ok(pf);
    }
    let res = if field_degree == 1 { trial_factor_search(&lifted, max_deg) } else { search(&lifted, max_deg) };
    pf.outcome = match res {
        Ok(o) => o,
        Err(Error::Ceiling { what, value, max }) => SearchOutcome::Inconclusive {
            reason: format!("inconclusive at ceiling: {what} {value} > {max}"),
        },
        Err(e) => return Err(e),
    };
    if let SearchOutcome::Found { factor, .. } = &pf.outcome {
        let mut all = true;
        for k in 0..field_degree {
            let c = factor.conjugate(k);
            pf.conjugate_degrees.push(c.degree().unwrap_or(0));
            all &= verify_divides(&lifted, &c)?.is_some();
        }
        pf.conjugates_divide = Some(all);
    }
    Ok(pf)
}

/// Bounded factor searches for `g_t` over GF(2) and the requested
/// extensions (degrees dividing 16).
pub fn reducibility_probe(t: u64, max_deg: u32, extensions: &[u32]) -> Result<ProbeReport> {
    let g = CurveFamily::build(t)?.g;
    let mut fields = vec![probe_over(&g, 1, max_deg.min(MAX_TRIAL_DEGREE))?];
    for &n in extensions {
        if n <= 1 || !SCREEN_FIELD.is_multiple_of(n) {
            return Err(Error::NotSubfield { small: n, big: SCREEN_FIELD });
        }
        fields.push(probe_over(&g, n, max_deg)?);
    }
    Ok(ProbeReport {
        t,
        g_degree: g.degree().unwrap_or(0),
        fields,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(s: &str) -> BiPoly {
        parse(FieldSpec::gf2(), s).unwrap()
    }

    #[test]
    fn divides_examples() {
        let w_chart = CurveFamily::build(7).unwrap().f;
        assert!(verify_divides(&w_chart, &p2("x + 1")).unwrap().is_some());
        let (f, q, g) = division_certificate_205().unwrap();
        assert_eq!((f.degree(), q.degree()), (Some(10), Some(192)));
        assert!(q.num_terms() > f.num_terms());
        assert!(verify_divides(&g, &p2("x + y + 1")).unwrap().is_none());
        assert_eq!(verify_divides(&g, &BiPoly::zero(FieldSpec::gf2())), Err(Error::DivisionByZero));
    }

    #[test]
    fn planted_and_irreducible() {
        let p = p2("x + 1").mul(&p2("x^2 + x*y + y^2 + x + 1")).unwrap();
        match trial_factor_search(&p, 1).unwrap() {
            SearchOutcome::Found { factor, .. } => assert_eq!(factor, p2("x + 1")),
            o => panic!("{o:?}"),
        }
        let g7 = CurveFamily::build(7).unwrap().g;
        assert!(matches!(trial_factor_search(&g7, 2).unwrap(), SearchOutcome::NoneUpTo { .. }));
        assert!(trial_factor_search(&g7, 7).is_err());
    }

    #[test]
    fn gold_five_splits_over_gf4() {
        let r = reducibility_probe(5, 1, &[2]).unwrap();
        assert!(matches!(r.fields[0].outcome, SearchOutcome::NoneUpTo { .. }));
        match &r.fields[1].outcome {
            SearchOutcome::Found { factor_degree, cofactor_degree, .. } => {
                assert_eq!((*factor_degree, *cofactor_degree), (1, 1));
            }
            o => panic!("{o:?}"),
        }
        assert_eq!(r.fields[1].conjugates_divide, Some(true));
        assert_eq!(r.fields[1].conjugate_degrees, vec![1, 1]);
    }

    #[test]
    fn ceiling_is_inconclusive() {
        let r = reducibility_probe(13, 5, &[2]).unwrap();
        assert!(matches!(r.fields[1].outcome, SearchOutcome::Inconclusive { .. }));
    }
}
