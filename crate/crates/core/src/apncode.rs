//! APN tests for x^t, low-weight codewords of the two-zero cyclic code with
//! zeros `w`, `w^t`, and the Gold / Kasami-Welch exponent families.
//!
//! A word of weight k is a set of k distinct nonzero field elements `x_j`
//! (the support, read as powers of a primitive element) with
//! `sum x_j = 0` and `sum x_j^t = 0`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd;
use crate::curves::{count_zeros, CurveFamily};
use crate::error::{Error, Result};
use crate::field::{make_field, FieldSpec};
use crate::tables::{LogTables, MAX_TABLE_DEGREE};

/// Default ceiling on the field degree of exhaustive scans.
pub const DEFAULT_SCAN_CEILING: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialSpectrum {
    pub t: u64,
    pub n: u32,
    pub max_solutions: u64,
    /// Number of pairs `(a != 0, b)` having exactly `k` solutions, keyed by `k`.
    pub histogram: BTreeMap<u64, u64>,
}

impl DifferentialSpectrum {
    pub fn is_apn(&self) -> bool {
        self.max_solutions <= 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ExponentClass {
    Gold,
    #[serde(rename = "Kasami-Welch")]
    KasamiWelch,
    #[serde(rename = "neither")]
    Neither,
}

impl ExponentClass {
    pub fn label(&self) -> &'static str {
        match self {
            ExponentClass::Gold => "Gold",
            ExponentClass::KasamiWelch => "Kasami-Welch",
            ExponentClass::Neither => "neither",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalVerdict {
    pub t: u64,
    pub class: ExponentClass,
    pub apn_n: Vec<u32>,
    pub window: [u32; 2],
    /// For Gold/Kasami-Welch exponents with parameter `i`: whether the APN
    /// set in the window is exactly `{n : gcd(i, n) = 1}`.
    pub gcd_law_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub t: u64,
    pub n: u32,
    pub apn: bool,
    /// A word of weight 4 with nonzero support.
    pub weight4: bool,
    /// A word of weight 3 or 4 (minimum distance below 5).
    pub low_weight: bool,
    pub distinct_points: u64,
}

impl CrossCheck {
    /// APN, absence of words of weight at most 4, and absence of
    /// distinct-coordinate zeros all coincide.
    pub fn agree(&self) -> bool {
        self.apn != self.low_weight && self.apn == (self.distinct_points == 0)
    }

    /// The same with the weight-4 oracle restricted to nonzero supports.
    pub fn strict_agree(&self) -> bool {
        self.apn != self.weight4 && self.apn == (self.distinct_points == 0)
    }
}

fn scan_tables(n: u32) -> Result<(FieldSpec, LogTables)> {
    if n == 0 || n > MAX_TABLE_DEGREE {
        return Err(Error::Ceiling {
            what: "scan field degree",
            value: n as u64,
            max: MAX_TABLE_DEGREE as u64,
        });
    }
    let field = make_field(n)?;
    Ok((field, LogTables::new(field)?))
}

/// Exact differential spectrum of `x -> x^t` over GF(2^n).
pub fn differential_spectrum(t: u64, n: u32) -> Result<DifferentialSpectrum> {
    let (field, tab) = scan_tables(n)?;
    let pm = tab.power_map(t);
    let size = field.size() as usize;
    let hist: Vec<u64> = (1..size as u32)
        .into_par_iter()
        .fold(
            || (vec![0u32; size], vec![0u64; size + 1]),
            |(mut counter, mut hist), a| {
                counter.iter_mut().for_each(|c| *c = 0);
                for x in 0..size as u32 {
                    counter[(pm[(x ^ a) as usize] ^ pm[x as usize]) as usize] += 1;
                }
                for &c in &counter {
                    hist[c as usize] += 1;
                }
                (counter, hist)
            },
        )
        .map(|(_, h)| h)
        .reduce(
            || vec![0u64; size + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let histogram: BTreeMap<u64, u64> = hist
        .iter()
        .enumerate()
        .filter(|(_, &f)| f != 0)
        .map(|(k, &f)| (k as u64, f))
        .collect();
    let max_solutions = *histogram.keys().next_back().unwrap_or(&0);
    Ok(DifferentialSpectrum {
        t,
        n,
        max_solutions,
        histogram,
    })
}

/// APN test with early exit: for each `a != 0` the unordered pairs
/// `{x, x+a}` must give pairwise different values `x^t + (x+a)^t`.
pub fn is_apn(t: u64, n: u32) -> Result<bool> {
    let (field, tab) = scan_tables(n)?;
    let pm = tab.power_map(t);
    let size = field.size() as u32;
    let mut stamp = vec![0u32; size as usize];
    for a in 1..size {
        for x in 0..size {
            let x2 = x ^ a;
            if x > x2 {
                continue;
            }
            let v = (pm[x as usize] ^ pm[x2 as usize]) as usize;
            if stamp[v] == a {
                return Ok(false);
            }
            stamp[v] = a;
        }
    }
    Ok(true)
}

/// Searches for a weight-4 word. Pairs `{x, x+s}` of nonzero elements are
/// bucketed by `x^t + (x+s)^t` for each difference `s`; two pairs with the
/// same difference and the same value form a word. The first witness in
/// `(s, x)` order is returned, sorted.
pub fn weight4_search(t: u64, n: u32) -> Result<Option<[u64; 4]>> {
    quadruple_search(t, n, false)
}

/// Like [`weight4_search`] but the support may contain 0. Such a set is a
/// weight-4 word of the extended code; when it contains 0 the other three
/// elements form a weight-3 word. A hit therefore means minimum distance
/// below 5.
pub fn low_weight_search(t: u64, n: u32) -> Result<Option<[u64; 4]>> {
    quadruple_search(t, n, true)
}

fn quadruple_search(t: u64, n: u32, allow_zero: bool) -> Result<Option<[u64; 4]>> {
    let (field, tab) = scan_tables(n)?;
    let pm = tab.power_map(t);
    let size = field.size() as u32;
    let lo = if allow_zero { 0 } else { 1 };
    let mut stamp = vec![0u32; size as usize];
    let mut first = vec![0u32; size as usize];
    for s in 1..size {
        for x in lo..size {
            let x2 = x ^ s;
            if (x2 == 0 && !allow_zero) || x > x2 {
                continue;
            }
            let v = (pm[x as usize] ^ pm[x2 as usize]) as usize;
            if stamp[v] == s {
                let x0 = first[v];
                let mut w = [x0 as u64, (x0 ^ s) as u64, x as u64, x2 as u64];
                w.sort_unstable();
                let support: Vec<u64> = w.iter().copied().filter(|&a| a != 0).collect();
                if !is_codeword(&field, t, &support) || (!allow_zero && support.len() != 4) {
                    return Err(Error::Verification(format!(
                        "witness {w:?} fails re-verification for t={t}, n={n}"
                    )));
                }
                return Ok(Some(w));
            }
            stamp[v] = s;
            first[v] = x;
        }
    }
    Ok(None)
}

pub fn weight4_exists(t: u64, n: u32) -> Result<bool> {
    Ok(weight4_search(t, n)?.is_some())
}

/// Searches for a weight-3 word `{x, y, x+y}`; returns the first in
/// `(x, y)` order.
pub fn weight3_search(t: u64, n: u32) -> Result<Option<[u64; 3]>> {
    let (field, tab) = scan_tables(n)?;
    let pm = tab.power_map(t);
    let size = field.size() as u32;
    for x in 1..size {
        for y in x + 1..size {
            let z = x ^ y;
            if z > y && pm[x as usize] ^ pm[y as usize] ^ pm[z as usize] == 0 {
                return Ok(Some([x as u64, y as u64, z as u64]));
            }
        }
    }
    Ok(None)
}

/// Distinct nonzero support with vanishing first and t-th power sums.
pub fn is_codeword(field: &FieldSpec, t: u64, support: &[u64]) -> bool {
    let distinct = support
        .iter()
        .enumerate()
        .all(|(k, a)| *a != 0 && field.contains(*a) && !support[..k].contains(a));
    let sum = support.iter().fold(0, |acc, a| acc ^ a);
    let power_sum = support.iter().fold(0, |acc, a| acc ^ field.pow(*a, t));
    distinct && sum == 0 && power_sum == 0
}

/// Runs the three oracles (differential APN test, weight-4 search and
/// distinct-coordinate zeros of `g`) on one cell.
pub fn cross_check_cell(fam: &CurveFamily, n: u32) -> Result<CrossCheck> {
    let t = fam.t as u64;
    Ok(CrossCheck {
        t,
        n,
        apn: is_apn(t, n)?,
        weight4: weight4_exists(t, n)?,
        low_weight: low_weight_search(t, n)?.is_some(),
        distinct_points: count_zeros(&fam.g, n, true)?,
    })
}

/// The common verdict of the three oracles; a disagreement is an error.
pub fn cross_check(t: u64, n: u32) -> Result<bool> {
    let fam = CurveFamily::build(t)?;
    let cell = cross_check_cell(&fam, n)?;
    if !cell.agree() {
        return Err(Error::Verification(format!(
            "oracles disagree at t={t}, n={n}: apn={}, low-weight word={}, distinct points={}",
            cell.apn, cell.low_weight, cell.distinct_points
        )));
    }
    Ok(cell.apn)
}

/// `Some(i)` when `t = 2^i + 1`, `i >= 1`.
pub fn gold_parameter(t: u64) -> Option<u32> {
    let m = t.checked_sub(1)?;
    (m >= 2 && m.is_power_of_two()).then(|| m.trailing_zeros())
}

/// `Some(i)` when `t = 4^i - 2^i + 1`, `i >= 2`.
pub fn kasami_parameter(t: u64) -> Option<u32> {
    (2..32).find(|&i| (1u64 << (2 * i)) - (1u64 << i) + 1 == t)
}

pub fn classify(t: u64) -> ExponentClass {
    if gold_parameter(t).is_some() {
        ExponentClass::Gold
    } else if kasami_parameter(t).is_some() {
        ExponentClass::KasamiWelch
    } else {
        ExponentClass::Neither
    }
}

/// Cross-checks every `n` in the window and records where x^t is APN.
pub fn exceptional_scan(t: u64, lo: u32, hi: u32) -> Result<ExceptionalVerdict> {
    let fam = CurveFamily::build(t)?;
    let mut apn_n = Vec::new();
    for n in lo..=hi {
        let cell = cross_check_cell(&fam, n)?;
        if !cell.agree() {
            return Err(Error::Verification(format!(
                "oracles disagree at t={t}, n={n}: apn={}, low-weight word={}, distinct points={}",
                cell.apn, cell.low_weight, cell.distinct_points
            )));
        }
        if cell.apn {
            apn_n.push(n);
        }
    }
    let class = classify(t);
    let param = gold_parameter(t).or_else(|| kasami_parameter(t));
    let gcd_law_holds = param.map(|i| {
        let expected: Vec<u32> = (lo..=hi).filter(|&n| gcd(i as u64, n as u64) == 1).collect();
        expected == apn_n
    });
    Ok(ExceptionalVerdict {
        t,
        class,
        apn_n,
        window: [lo, hi],
        gcd_law_holds,
    })
}

/// Sorted, deduplicated Gold and Kasami-Welch exponents up to `limit`.
pub fn gold_kasami_sequence(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for i in 1..63u32 {
        let gold = (1u64 << i) + 1;
        if gold > limit {
            break;
        }
        out.push(gold);
    }
    for i in 2..32u32 {
        let k = (1u64 << (2 * i)) - (1u64 << i) + 1;
        if k > limit {
            break;
        }
        out.push(k);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Smallest `n0` in `lo..=hi` such that weight-4 words exist for every
/// `n` in `n0..=hi`, together with the per-`n` outcomes.
pub fn weight4_window(t: u64, lo: u32, hi: u32) -> Result<(Option<u32>, Vec<(u32, bool)>)> {
    let rows: Vec<(u32, bool)> = (lo..=hi)
        .map(|n| Ok((n, weight4_exists(t, n)?)))
        .collect::<Result<_>>()?;
    let mut n0 = None;
    for &(n, found) in rows.iter().rev() {
        if !found {
            break;
        }
        n0 = Some(n);
    }
    Ok((n0, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_max_solutions(t: u64, n: u32) -> u64 {
        let f = make_field(n).unwrap();
        let mut best = 0;
        for a in 1..f.size() {
            for b in f.elements() {
                let c = f
                    .elements()
                    .filter(|&x| f.pow(f.add(x, a), t) ^ f.pow(x, t) == b)
                    .count() as u64;
                best = best.max(c);
            }
        }
        best
    }

    #[test]
    fn spectrum_matches_brute_force() {
        for (t, n) in [(3u64, 3u32), (5, 4), (7, 4), (9, 3), (1, 3)] {
            let s = differential_spectrum(t, n).unwrap();
            assert_eq!(s.max_solutions, brute_max_solutions(t, n), "t={t} n={n}");
            assert_eq!(s.is_apn(), is_apn(t, n).unwrap());
        }
        assert_eq!(differential_spectrum(1, 4).unwrap().max_solutions, 16);
    }

    #[test]
    fn spectrum_mass_and_parity() {
        for (t, n) in [(13u64, 6u32), (7, 7), (11, 5)] {
            let s = differential_spectrum(t, n).unwrap();
            let q = 1u64 << n;
            let mass: u64 = s.histogram.iter().map(|(k, f)| k * f).sum();
            assert_eq!(mass, q * (q - 1));
            assert!(s.histogram.keys().all(|k| k % 2 == 0));
        }
    }

    #[test]
    fn weight4_examples() {
        assert_eq!(weight4_search(3, 6).unwrap(), None);
        let w = weight4_search(5, 4).unwrap().unwrap();
        assert!(is_codeword(&make_field(4).unwrap(), 5, &w));
        assert!(weight4_exists(7, 10).unwrap());
        // GF(16): x^7 has a weight-3 word but no weight-4 word
        assert_eq!(weight4_search(7, 4).unwrap(), None);
        let w3 = weight3_search(7, 4).unwrap().unwrap();
        assert!(is_codeword(&make_field(4).unwrap(), 7, &w3));
        let low = low_weight_search(7, 4).unwrap().unwrap();
        assert_eq!(low[0], 0);
    }

    #[test]
    fn classification_and_sequence() {
        assert_eq!(classify(3), ExponentClass::Gold);
        assert_eq!(classify(13), ExponentClass::KasamiWelch);
        assert_eq!(classify(57), ExponentClass::KasamiWelch);
        assert_eq!(classify(205), ExponentClass::Neither);
        assert_eq!(gold_kasami_sequence(3), vec![3]);
        assert_eq!(*gold_kasami_sequence(250).last().unwrap(), 241);
    }
}
