//! The curve families attached to x^t and their rational points.
//!
//! In the affine chart z = 1:
//! `f = x^t + y^t + 1 + (x+y+1)^t`, `w = (x+1)(y+1)(x+y)`, `g = f / w` and
//! `h = ((x+1)^t + x^t + (y+1)^t + y^t) / ((x+y)(x+y+1))`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bipoly::{BiPoly, MAX_TOTAL_DEGREE};
use crate::error::{Error, Result};
use crate::field::{make_field, FieldSpec};
use crate::tables::{LogTables, MAX_TABLE_DEGREE};
use crate::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    pub t: u32,
    pub f: BiPoly,
    pub g: BiPoly,
    pub w: BiPoly,
    pub h: BiPoly,
}

pub fn check_exponent(t: u64) -> Result<()> {
    if t.is_multiple_of(2) {
        return Err(Error::InvalidExponent { t, reason: "t must be odd" });
    }
    if t < 3 {
        return Err(Error::InvalidExponent { t, reason: "t must be at least 3" });
    }
    if t > MAX_TOTAL_DEGREE as u64 {
        return Err(Error::Ceiling {
            what: "curve exponent",
            value: t,
            max: MAX_TOTAL_DEGREE as u64,
        });
    }
    Ok(())
}

fn gf2_poly(s: &str) -> BiPoly {
    crate::bipoly::parse(FieldSpec::gf2(), s).expect("literal polynomial")
}

/// `(x+1)(y+1)(x+y)`.
pub fn w_poly() -> BiPoly {
    gf2_poly("x^2*y + x*y^2 + x^2 + y^2 + x + y")
}

/// `x^t + y^t + 1 + (x+y+1)^t`.
pub fn f_poly(t: u32) -> Result<BiPoly> {
    let two = FieldSpec::gf2();
    let head = BiPoly::from_terms(
        two,
        [
            (crate::Monomial::new(t, 0), 1),
            (crate::Monomial::new(0, t), 1),
            (crate::Monomial::ONE, 1),
        ],
    );
    head.add(&gf2_poly("x + y + 1").pow(t)?)
}

fn h_numerator(t: u32) -> Result<BiPoly> {
    let x1 = gf2_poly("x + 1").pow(t)?;
    let y1 = gf2_poly("y + 1").pow(t)?;
    let two = FieldSpec::gf2();
    let xt = BiPoly::monomial(two, t, 0, 1);
    let yt = BiPoly::monomial(two, 0, t, 1);
    Ok(&(&(&x1 + &xt) + &y1) + &yt)
}

impl CurveFamily {
    pub fn build(t: u64) -> Result<CurveFamily> {
        check_exponent(t)?;
        let t32 = t as u32;
        let f = f_poly(t32)?;
        let w = w_poly();
        let g = f
            .exact_div(&w)?
            .ok_or_else(|| Error::Verification(format!("w does not divide f for t={t}")))?;
        let h_den = gf2_poly("x^2 + y^2 + x + y");
        let h = h_numerator(t32)?
            .exact_div(&h_den)?
            .ok_or_else(|| Error::Verification(format!("(x+y)(x+y+1) does not divide h numerator for t={t}")))?;
        Ok(CurveFamily { t: t32, f, g, w, h })
    }

    /// Checks the structural invariants: `f = w g`, degrees, symmetry.
    pub fn check_invariants(&self) -> Result<()> {
        let t = self.t;
        if &self.w * &self.g != self.f {
            return Err(Error::Verification(format!("f != w*g for t={t}")));
        }
        if self.f.degree() != Some(t) || self.g.degree() != Some(t - 3) {
            return Err(Error::Verification(format!("unexpected degrees for t={t}")));
        }
        if self.f.swap_xy() != self.f {
            return Err(Error::Verification(format!("f not symmetric for t={t}")));
        }
        Ok(())
    }
}

/// Verifies `(x+1)^t + x^t + (y+1)^t + y^t = y^t f(X, Y)` with
/// `X = (x+1)/y`, `Y = x/y`, by substituting into every term of `f` and
/// clearing the denominator: `X^a Y^b y^t = (x+1)^a x^b y^(t-a-b)`.
pub fn transform_identity(t: u64) -> Result<bool> {
    check_exponent(t)?;
    let t32 = t as u32;
    let f = f_poly(t32)?;
    let two = FieldSpec::gf2();
    let x1 = gf2_poly("x + 1");
    let mut acc = BiPoly::zero(two);
    for (m, _) in f.terms() {
        let lifted = x1.pow(m.dx)?.shift_exponents(m.dy, t32 - m.degree());
        acc = acc.add(&lifted)?;
    }
    Ok(acc == h_numerator(t32)?)
}

/// `true` when the projective closure of `g` has no singular point on the
/// line z = 0.
///
/// With `G` the homogenization of degree `D`, at z = 0 the four quantities
/// `G, G_x, G_y, G_z` reduce to the forms `g_D, d/dx g_D, d/dy g_D, g_(D-1)`.
/// A common zero is either `(1:0)` or `(u:1)` with `u` a common root of the
/// dehomogenized polynomials, which a gcd over GF(2) detects.
pub fn infinity_check(t: u64) -> Result<bool> {
    let fam = CurveFamily::build(t)?;
    Ok(no_singular_point_at_infinity(&fam.g))
}

fn partial(p: &BiPoly, wrt_x: bool) -> BiPoly {
    let f = p.field();
    BiPoly::from_terms(
        f,
        p.terms().filter_map(|(m, c)| {
            let e = if wrt_x { m.dx } else { m.dy };
            (e % 2 == 1).then(|| {
                let mono = if wrt_x {
                    crate::Monomial::new(m.dx - 1, m.dy)
                } else {
                    crate::Monomial::new(m.dx, m.dy - 1)
                };
                (mono, c)
            })
        }),
    )
}

pub fn no_singular_point_at_infinity(g: &BiPoly) -> bool {
    let Some(d) = g.degree() else {
        return true;
    };
    let top = g.homogeneous_component(d);
    let forms = [
        top.clone(),
        partial(&top, true),
        partial(&top, false),
        if d == 0 { BiPoly::zero(g.field()) } else { g.homogeneous_component(d - 1) },
    ];
    let field = g.field();
    let mut common = UniPoly::zero(field);
    let mut all_vanish_at_x_axis = true;
    for form in &forms {
        if form.is_zero() {
            continue;
        }
        let deg = form.degree().unwrap();
        let mut coeffs = vec![0u64; deg as usize + 1];
        for (m, c) in form.terms() {
            coeffs[m.dx as usize] = c;
        }
        if coeffs[deg as usize] != 0 {
            all_vanish_at_x_axis = false;
        }
        common = common.gcd(&UniPoly::new(field, coeffs));
    }
    let finite_common = common.is_zero() || common.degree().unwrap_or(0) > 0;
    !(finite_common || all_vanish_at_x_axis)
}

/// Coefficients of `g` grouped as a polynomial in y: entry `j` lists the
/// x-exponents of the terms `x^i y^j` (coefficients are 1 over GF(2)).
fn rows_in_y(g: &BiPoly) -> Result<Vec<Vec<u32>>> {
    if g.field().n() != 1 {
        return Err(Error::FieldMismatch {
            left: g.field().to_string(),
            right: FieldSpec::gf2().to_string(),
        });
    }
    let dy = g.degree_y().unwrap_or(0) as usize;
    let mut rows = vec![Vec::new(); dy + 1];
    for (m, _) in g.terms() {
        rows[m.dy as usize].push(m.dx);
    }
    Ok(rows)
}

fn scan_field(n: u32) -> Result<(FieldSpec, LogTables)> {
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

/// Zeros of a GF(2) polynomial over GF(2^n), optionally restricted to the
/// distinct-coordinate region `a != b, a != 1, b != 1`.
///
/// For each `a`, the coefficients of `g(a, y)` are formed and the row is
/// evaluated at every `b` by Horner's rule.
pub fn count_zeros(g: &BiPoly, n: u32, distinct_only: bool) -> Result<u64> {
    let (field, tab) = scan_field(n)?;
    let rows = rows_in_y(g)?;
    let max_dx = g.degree_x().unwrap_or(0);
    let total: u64 = field
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|a| {
            let a = a as u32;
            let mut apow = Vec::with_capacity(max_dx as usize + 1);
            let mut p = 1u32;
            for _ in 0..=max_dx {
                apow.push(p);
                p = tab.mul(p, a);
            }
            let coeffs: Vec<u32> = rows
                .iter()
                .map(|r| r.iter().fold(0, |acc, &e| acc ^ apow[e as usize]))
                .collect();
            let mut count = 0u64;
            for b in 0..field.size() as u32 {
                if distinct_only && (a == b || a == 1 || b == 1) {
                    continue;
                }
                let v = coeffs.iter().rev().fold(0u32, |v, &c| tab.mul(v, b) ^ c);
                if v == 0 {
                    count += 1;
                }
            }
            count
        })
        .sum();
    Ok(total)
}

pub fn count_points(t: u64, n: u32, distinct_only: bool) -> Result<u64> {
    let fam = CurveFamily::build(t)?;
    count_zeros(&fam.g, n, distinct_only)
}

/// Zeros of `g` on the union of the lines `a = b`, `a = 1`, `b = 1`, found
/// by restricting `g` to each line and evaluating the univariate result.
pub fn count_zeros_on_excluded_lines(g: &BiPoly, n: u32) -> Result<u64> {
    let (field, _) = scan_field(n)?;
    let g = g.lift_to(field)?;
    let on_a1 = g.specialize_x(1);
    let on_b1 = g.specialize_y(1);
    let mut count = 0u64;
    for a in field.elements() {
        // (a, a): the diagonal
        if g.eval(a, a) == 0 {
            count += 1;
        }
        if a != 1 {
            if on_a1.eval(a) == 0 {
                count += 1;
            }
            if on_b1.eval(a) == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PointCountRow {
    pub t: u64,
    pub n: u32,
    pub count: u64,
}

pub fn count_rows(t: u64, ns: impl IntoIterator<Item = u32>, distinct_only: bool) -> Result<Vec<PointCountRow>> {
    let fam = CurveFamily::build(t)?;
    ns.into_iter()
        .map(|n| {
            Ok(PointCountRow {
                t,
                n,
                count: count_zeros(&fam.g, n, distinct_only)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let c3 = CurveFamily::build(3).unwrap();
        assert_eq!(c3.g, BiPoly::one(FieldSpec::gf2()));
        assert_eq!(c3.f, w_poly());
        let c5 = CurveFamily::build(5).unwrap();
        assert_eq!(c5.g.to_string(), "1 + x + y + x^2 + x*y + y^2");
        for t in [3u64, 5, 7, 9, 11, 13] {
            CurveFamily::build(t).unwrap().check_invariants().unwrap();
        }
        assert!(CurveFamily::build(4).is_err());
        assert!(CurveFamily::build(1).is_err());
    }

    #[test]
    fn transform_small() {
        for t in [3u64, 5, 7, 13] {
            assert!(transform_identity(t).unwrap());
        }
    }

    #[test]
    fn infinity_small() {
        for t in [5u64, 7, 9, 11, 13] {
            assert!(infinity_check(t).unwrap());
        }
        // Y^3 + X Z^2 has a cusp at (1:0:0)
        let bad = crate::bipoly::parse(FieldSpec::gf2(), "y^3 + x").unwrap();
        assert!(!no_singular_point_at_infinity(&bad));
        let good = crate::bipoly::parse(FieldSpec::gf2(), "x*y + 1").unwrap();
        assert!(no_singular_point_at_infinity(&good));
    }

    #[test]
    fn point_counts_match_brute_force() {
        for t in [5u64, 7, 9] {
            let fam = CurveFamily::build(t).unwrap();
            for n in 2..=5 {
                let field = make_field(n).unwrap();
                let g = fam.g.lift_to(field).unwrap();
                let mut all = 0;
                let mut distinct = 0;
                for a in field.elements() {
                    for b in field.elements() {
                        if g.eval(a, b) == 0 {
                            all += 1;
                            if a != b && a != 1 && b != 1 {
                                distinct += 1;
                            }
                        }
                    }
                }
                assert_eq!(count_zeros(&fam.g, n, false).unwrap(), all);
                assert_eq!(count_zeros(&fam.g, n, true).unwrap(), distinct);
            }
        }
        assert_eq!(count_points(3, 6, true).unwrap(), 0);
    }
}
