//! The acceptance suite: thirteen criteria, each reduced to a single
//! pass/fail line with pinned tolerances and runtime budgets.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::apncode::{
    cross_check_cell, gold_kasami_sequence, is_apn, weight3_search, weight4_exists, weight4_window,
    CrossCheck,
};
use crate::arith::gcd;
use crate::bezout::{audit_sweep, bezout_identity_suite, tangent_bound_check, local_tangent_suite, sweep_consistent};
use crate::bipoly::{parse, BiPoly};
use crate::curves::{f_poly, transform_identity, CurveFamily};
use crate::error::Result;
use crate::factorlab::counterexample_205;
use crate::field::make_field;
use crate::singular::{
    enumerate_singular, formulas_match_shift, tangent_cone, verify_beta_exists, verify_first_coef_in, PointType,
};

pub const CRITERIA: u8 = 13;

/// Cells `(t, n)` where the strict weight-4 oracle disagrees with APN-ness
/// because the code has a weight-3 word instead.
pub const KNOWN_TRIPLE_ORACLE_GAPS: [(u64, u32); 3] = [(7, 4), (11, 4), (13, 4)];

/// Exponents whose weight-4 window cannot start at or below 8: `x^19` is
/// APN over GF(2^9) (Welch exponent `2^4 + 3`).
pub const KNOWN_WINDOW_OFFENDERS: [u64; 1] = [19];

pub const SEQUENCE_1025: [u64; 14] = [3, 5, 9, 13, 17, 33, 57, 65, 129, 241, 257, 513, 993, 1025];

#[derive(Clone, Debug, Serialize)]
pub struct AcceptanceConfig {
    pub seed: u64,
    pub bezout_pairs: usize,
    pub tangent_cases: usize,
    /// Caps the `n` grids of criteria 1 to 4; `None` runs the full grids.
    pub max_n: Option<u32>,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            seed: 2024,
            bezout_pairs: 40,
            tangent_cases: 200,
            max_n: None,
        }
    }
}

impl AcceptanceConfig {
    fn cap(&self, hi: u32) -> u32 {
        self.max_n.map_or(hi, |m| m.min(hi))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    /// `published` for values reproduced from the literature, `derived` for
    /// values from independent oracles, `property` for randomized suites.
    pub basis: &'static str,
    pub tolerance: &'static str,
    pub budget_secs: u64,
    pub pass: bool,
    /// The failure is exactly the documented mathematical one.
    pub known_deviation: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.pass, self.known_deviation) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        write!(
            f,
            "criterion {:>2} {:<12} {:<28} tol={} [{:.1}s/{}s] {}",
            self.id,
            verdict,
            self.title,
            self.tolerance,
            self.elapsed.as_secs_f64(),
            self.budget_secs,
            self.detail
        )
    }
}

struct Meta {
    title: &'static str,
    basis: &'static str,
    tolerance: &'static str,
    budget_secs: u64,
}

fn meta(id: u8) -> Meta {
    let m = |title, basis, tolerance, budget_secs| Meta { title, basis, tolerance, budget_secs };
    match id {
        1 => m("gold law", "published", "exact", 300),
        2 => m("kasami law", "published", "exact", 300),
        3 => m("triple-oracle equivalence", "published", "exact", 300),
        4 => m("bch baseline", "published", "exact", 300),
        5 => m("curve algebra", "derived", "exact", 120),
        6 => m("singularity atlas", "published", "exact", 300),
        7 => m("tangent cones", "derived", "exact", 300),
        8 => m("beta sweep", "derived", "exact", 300),
        9 => m("inequality audits", "derived", "exact", 10),
        10 => m("t=205 counterexample", "published", "exact", 600),
        11 => m("intersection identity", "property", "exact", 300),
        12 => m("gold/kasami sequence", "published", "exact", 10),
        _ => m("weight-4 windows", "derived", "n0<=8", 600),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleOracleReport {
    pub cells: Vec<CrossCheck>,
    /// Cells where APN, no weight-4 word, and no distinct-coordinate zero
    /// do not all coincide.
    pub literal_failures: Vec<(u64, u32)>,
    /// Every literal failure has a weight-3 word.
    pub failures_explained: bool,
    /// APN, no word of weight 3 or 4, no distinct-coordinate zero: all cells.
    pub corrected_holds: bool,
}

pub fn triple_oracle(t_max: u64, n_lo: u32, n_hi: u32) -> Result<TripleOracleReport> {
    let mut cells = Vec::new();
    for t in (3..=t_max).step_by(2) {
        let fam = CurveFamily::build(t)?;
        for n in n_lo..=n_hi {
            cells.push(cross_check_cell(&fam, n)?);
        }
    }
    let literal_failures: Vec<(u64, u32)> = cells.iter().filter(|c| !c.strict_agree()).map(|c| (c.t, c.n)).collect();
    let mut failures_explained = true;
    for &(t, n) in &literal_failures {
        failures_explained &= weight3_search(t, n)?.is_some();
    }
    Ok(TripleOracleReport {
        corrected_holds: cells.iter().all(|c| c.agree()),
        cells,
        literal_failures,
        failures_explained,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct WindowRow {
    pub t: u64,
    pub n0: Option<u32>,
    pub apn_n: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WindowReport {
    pub hi: u32,
    pub rows: Vec<WindowRow>,
    /// Exponents with no witnessed `n0 <= 8`.
    pub offenders: Vec<u64>,
}

pub fn weight4_windows(ts: &[u64], hi: u32) -> Result<WindowReport> {
    let mut rows = Vec::new();
    for &t in ts {
        let (n0, cells) = weight4_window(t, 2, hi)?;
        let mut apn_n = Vec::new();
        for (n, found) in cells {
            if !found && is_apn(t, n)? {
                apn_n.push(n);
            }
        }
        rows.push(WindowRow { t, n0, apn_n });
    }
    let offenders = rows.iter().filter(|r| r.n0.is_none_or(|n| n > 8)).map(|r| r.t).collect();
    Ok(WindowReport { hi, rows, offenders })
}

fn gcd_law(ts: &[(u64, u32)], lo: u32, hi: u32) -> Result<(bool, Vec<String>)> {
    let mut bad = Vec::new();
    for &(t, i) in ts {
        for n in lo..=hi {
            if is_apn(t, n)? != (gcd(i as u64, n as u64) == 1) {
                bad.push(format!("({t},{n})"));
            }
        }
    }
    Ok((bad.is_empty(), bad))
}

fn cells_text(v: &[(u64, u32)]) -> String {
    v.iter().map(|(t, n)| format!("({t},{n})")).collect::<Vec<_>>().join(" ")
}

/// Runs one criterion; `Err` only on internal errors, never on a failed check.
pub fn run_criterion(id: u8, cfg: &AcceptanceConfig) -> Result<CriterionResult> {
    let start = Instant::now();
    let (pass, known_deviation, detail) = evaluate(id, cfg)?;
    let m = meta(id);
    let elapsed = start.elapsed();
    let in_budget = elapsed.as_secs() <= m.budget_secs;
    let detail = if in_budget { detail } else { format!("{detail}; over runtime budget") };
    Ok(CriterionResult {
        id,
        title: m.title,
        basis: m.basis,
        tolerance: m.tolerance,
        budget_secs: m.budget_secs,
        pass: pass && in_budget,
        known_deviation: !pass && known_deviation,
        detail,
        elapsed,
    })
}

pub fn run_all(cfg: &AcceptanceConfig) -> Result<Vec<CriterionResult>> {
    (1..=CRITERIA).map(|id| run_criterion(id, cfg)).collect()
}

fn evaluate(id: u8, cfg: &AcceptanceConfig) -> Result<(bool, bool, String)> {
    Ok(match id {
        1 => {
            let hi = cfg.cap(12);
            let (ok, bad) = gcd_law(&[(3, 1), (5, 2), (9, 3), (17, 4)], 2, hi)?;
            (ok, false, format!("t in {{3,5,9,17}}, n in 2..={hi}; mismatches: [{}]", bad.join(" ")))
        }
        2 => {
            let hi = cfg.cap(12);
            let (ok, bad) = gcd_law(&[(13, 2), (57, 3)], 4, hi)?;
            (ok, false, format!("t in {{13,57}}, n in 4..={hi}; mismatches: [{}]", bad.join(" ")))
        }
        3 => {
            let hi = cfg.cap(10);
            let r = triple_oracle(21, 3, hi)?;
            let known = r.failures_explained
                && r.corrected_holds
                && r.literal_failures.iter().all(|c| KNOWN_TRIPLE_ORACLE_GAPS.contains(c));
            (
                r.literal_failures.is_empty(),
                known,
                format!(
                    "{} cells (t odd 3..=21, n 3..={hi}); strict weight-4 disagrees at [{}]; weight-3 words there: {}; with weight 3 allowed all cells agree: {}",
                    r.cells.len(),
                    cells_text(&r.literal_failures),
                    r.failures_explained,
                    r.corrected_holds
                ),
            )
        }
        4 => {
            let hi = cfg.cap(12);
            let mut found = Vec::new();
            for n in 3..=hi {
                if weight4_exists(3, n)? {
                    found.push(n);
                }
            }
            (found.is_empty(), false, format!("t=3, n in 3..={hi}; weight-4 words at n={found:?}"))
        }
        5 => {
            let ts = [3u64, 5, 7, 9, 13, 49, 57, 205];
            let mut bad = Vec::new();
            for &t in &ts {
                let fam = CurveFamily::build(t)?;
                if fam.check_invariants().is_err() || !transform_identity(t)? {
                    bad.push(t);
                }
                if t == 3 && fam.g != BiPoly::one(fam.g.field()) {
                    bad.push(t);
                }
            }
            (bad.is_empty(), false, format!("t in {ts:?}; f = w g, deg g = t-3, g_3 = 1, transform identity; failures at {bad:?}"))
        }
        6 => criterion_atlas()?,
        7 => criterion_cones()?,
        8 => {
            let mut bad = Vec::new();
            let mut max_field = 0;
            for ell in (3..=51u64).step_by(2) {
                let r = verify_beta_exists(ell)?;
                max_field = max_field.max(r.field.n());
                if !r.holds() || r.max_valid() as u64 > ell - 3 {
                    bad.push(ell);
                }
            }
            (bad.is_empty(), false, format!("l odd in 3..=51, largest root field GF(2^{max_field}); failures at {bad:?}"))
        }
        9 => {
            let rows = audit_sweep(20)?;
            let proper = rows.iter().filter(|r| r.precondition_met).count();
            let failed_boundary = rows.iter().filter(|r| !r.precondition_met && !r.holds).count();
            (
                sweep_consistent(&rows),
                false,
                format!("i in 2..=20: {} rows, {proper} with hypotheses met, {failed_boundary} failing rows at l = 2^i - 1 or i = 2", rows.len()),
            )
        }
        10 => {
            let w = counterexample_205()?;
            let prof = w.profile;
            let ok = w.factor_degree == 10
                && w.quotient_degree == 192
                && w.product_exact
                && w.factor_irreducible
                && w.irreducible_upto == 5
                && (prof.i, prof.ell, prof.d) == (2, 51, 3);
            (
                ok,
                false,
                format!(
                    "factor deg {} ({} terms), quotient deg {} ({} terms), product exact {}, no GF(2) factor up to deg {}, i={} l={} d={}",
                    w.factor_degree, w.factor_terms, w.quotient_degree, w.quotient_terms, w.product_exact, w.irreducible_upto, prof.i, prof.ell, prof.d
                ),
            )
        }
        11 => criterion_intersections(cfg)?,
        12 => {
            let s = gold_kasami_sequence(1025);
            (s == SEQUENCE_1025, false, format!("{s:?}"))
        }
        _ => {
            let hi = 14;
            let r = weight4_windows(&[7, 11, 15, 19, 21], hi)?;
            let known = r.offenders.iter().all(|t| KNOWN_WINDOW_OFFENDERS.contains(t))
                && r.rows.iter().filter(|w| r.offenders.contains(&w.t)).all(|w| w.apn_n.contains(&9));
            let rows: Vec<String> = r
                .rows
                .iter()
                .map(|w| match w.n0 {
                    Some(n0) => format!("t={} n0={n0}", w.t),
                    None => format!("t={} n0=none", w.t),
                })
                .collect();
            (
                r.offenders.is_empty(),
                known,
                format!("window [n0, {hi}]: {}; no witnessed n0 <= 8 for {:?}; no claim beyond n={hi}", rows.join(", "), r.offenders),
            )
        }
    })
}

fn criterion_atlas() -> Result<(bool, bool, String)> {
    let mut atlas = enumerate_singular(49)?;
    let mismatch49 = atlas.measure_g(&CurveFamily::build(49)?.g)?;
    let c = atlas.counts();
    let q = atlas.profile.two_i();
    let m_ok = atlas.points.iter().all(|p| match p.ptype {
        PointType::I => p.m_g == q - 2,
        PointType::IIA | PointType::IIB => p.m_g == q,
        _ => false,
    });
    let ok49 = (c.type_i, c.type_ii(), c.type_iii()) == (1, 6, 0) && m_ok && mismatch49 == 0;

    let mut big = enumerate_singular(205)?;
    let mismatch205 = big.measure_g(&CurveFamily::build(205)?.g)?;
    let c2 = big.counts();
    let first = verify_first_coef_in(&big)?;
    let ok205 = c2.type_i + c2.type_ii() == 151
        && (c2.type_iii() as u64) <= 50 * 48
        && mismatch205 == 0
        && first.holds()
        && first.zero_count > 0
        && first.nonzero_count > 0;
    Ok((
        ok49 && ok205,
        false,
        format!(
            "t=49: I={} II={} III={}, m_g(I)={} m_g(II)={}, oracle mismatches {}; t=205: I+II={} III={} (bound {}), F_2^i zero at {} / nonzero at {}, oracle mismatches {}",
            c.type_i,
            c.type_ii(),
            c.type_iii(),
            q - 2,
            q,
            mismatch49,
            c2.type_i + c2.type_ii(),
            c2.type_iii(),
            50 * 48,
            first.zero_count,
            first.nonzero_count,
            mismatch205
        ),
    ))
}

fn criterion_cones() -> Result<(bool, bool, String)> {
    let ts = [13u64, 29, 49, 57, 205];
    let mut points = 0usize;
    let mut bad = Vec::new();
    for &t in &ts {
        let atlas = enumerate_singular(t)?;
        let q = atlas.profile.two_i();
        let f = f_poly(t as u32)?;
        for p in &atlas.points {
            points += 1;
            let cone = tangent_cone(&atlas, p, &f)?;
            let cone_ok = if p.coeffs.f2i_zero() {
                cone.degree == q + 1 && cone.distinct_linear_count == (q + 1) as usize
            } else {
                cone.degree == q && cone.distinct_linear_count == 1 && cone.closed_form_ok == Some(true)
            };
            if !cone_ok || !formulas_match_shift(&atlas, p)? {
                bad.push(format!("t={t} ({:#x},{:#x})", p.alpha, p.beta));
            }
        }
    }
    Ok((
        bad.is_empty(),
        false,
        format!("t in {ts:?}: {points} points; failures: [{}]", bad.join(", ")),
    ))
}

fn criterion_intersections(cfg: &AcceptanceConfig) -> Result<(bool, bool, String)> {
    let gf4 = make_field(2)?;
    let (checks, rejected) = bezout_identity_suite(cfg.seed, gf4, cfg.bezout_pairs.max(20), 5, 24)?;
    let global_bad = checks.iter().filter(|c| !c.holds()).count();
    let constructed = [
        ("y", "x", false),
        ("y + x^2", "y", true),
        ("y^2 + x^3", "x^2 + y^3", false),
        ("y^2 + x^3", "y^2 + x^5", true),
        ("x*y + x^3 + y^3", "x + y", false),
        ("x*y + x^4", "x*y + y^5", true),
        ("(0x2)*x + y + x^2*y", "(0x3)*x + y + y^3", false),
    ];
    let mut local_bad = 0;
    for (a, b, share) in constructed {
        let c = tangent_bound_check(&parse(gf4, a)?, &parse(gf4, b)?, 0, 0)?;
        if !c.holds() || c.cones_share_line != share {
            local_bad += 1;
        }
    }
    let random = local_tangent_suite(cfg.seed, gf4, cfg.tangent_cases)?;
    let random_bad = random.iter().filter(|c| !c.holds()).count();
    let shared = random.iter().filter(|c| c.cones_share_line).count();
    Ok((
        global_bad == 0 && local_bad == 0 && random_bad == 0,
        false,
        format!(
            "{} coprime pairs over GF(4), degree <= 5 ({rejected} rejected): {global_bad} failures; {} constructed + {} random local cases ({shared} with a shared tangent): {} failures",
            checks.len(),
            constructed.len(),
            random.len(),
            local_bad + random_bad
        ),
    ))
}
