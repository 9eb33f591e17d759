//! Local intersection numbers by the axiomatic reduction, and a global
//! check of the intersection-count identity on random curve pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::lcm;
use crate::bipoly::{forms_share_linear_factor, BiPoly, Monomial};
use crate::error::{Error, Result};
use crate::field::{make_field, Embedding, FieldElement, FieldSpec};
use crate::unipoly::{interpolate, resultant, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Intersection {
    Finite(u64),
    Infinite,
}

const MAX_STEPS: usize = 100_000;

fn on_axis(p: &BiPoly) -> Vec<(u32, u64)> {
    p.terms().filter(|(m, _)| m.dy == 0).map(|(m, c)| (m.dx, c)).collect()
}

fn divide_by_y(p: &BiPoly) -> BiPoly {
    BiPoly::from_terms(p.field(), p.terms().map(|(m, c)| (Monomial::new(m.dx, m.dy - 1), c)))
}

/// Intersection number at the origin.
///
/// Repeatedly: if either curve misses the origin the number is 0. With
/// `r`, `s` the degrees of `F(x, 0)`, `G(x, 0)`: when `F(x, 0) = 0`, `F = y H`
/// and `I(F, G) = ord_x G(x, 0) + I(H, G)`; otherwise (say `r <= s`)
/// `G` is replaced by `lc(F(x,0)) G + lc(G(x,0)) x^(s-r) F`, lowering `s`.
/// A running total above `deg F * deg G` means a common component.
fn intersect_at_origin(f: &BiPoly, g: &BiPoly) -> Result<Intersection> {
    let (mut f, mut g) = (f.clone(), g.clone());
    let bound = f.degree().unwrap_or(0) as u64 * g.degree().unwrap_or(0) as u64;
    let mut total = 0u64;
    for _ in 0..MAX_STEPS {
        if total > bound {
            return Ok(Intersection::Infinite);
        }
        if f.coeff(0, 0) != 0 || g.coeff(0, 0) != 0 {
            return Ok(Intersection::Finite(total));
        }
        let (f0, g0) = (on_axis(&f), on_axis(&g));
        match (f0.is_empty(), g0.is_empty()) {
            (true, true) => return Ok(Intersection::Infinite),
            (true, false) => {
                total += g0.iter().map(|(e, _)| *e as u64).min().unwrap();
                f = divide_by_y(&f);
            }
            (false, true) => {
                total += f0.iter().map(|(e, _)| *e as u64).min().unwrap();
                g = divide_by_y(&g);
            }
            (false, false) => {
                let (r, lf) = *f0.iter().max_by_key(|(e, _)| *e).unwrap();
                let (s, lg) = *g0.iter().max_by_key(|(e, _)| *e).unwrap();
                if r > s {
                    std::mem::swap(&mut f, &mut g);
                    let (lf, lg) = (lg, lf);
                    g = g.scale(lf).add(&f.shift_exponents(r - s, 0).scale(lg))?;
                } else {
                    g = g.scale(lf).add(&f.shift_exponents(s - r, 0).scale(lg))?;
                }
                if g.is_zero() {
                    return Ok(Intersection::Infinite);
                }
            }
        }
    }
    Err(Error::Verification("intersection reduction did not terminate".into()))
}

/// `I(P, f, g)` for `P = (a, b)` with coordinates in the field of `f`, `g`.
pub fn fulton_intersection(f: &BiPoly, g: &BiPoly, a: u64, b: u64) -> Result<Intersection> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch {
            left: f.field().to_string(),
            right: g.field().to_string(),
        });
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Intersection::Infinite);
    }
    intersect_at_origin(&f.shift_raw(a, b, u32::MAX), &g.shift_raw(a, b, u32::MAX))
}

/// Base-changes both curves to the field of the point first.
pub fn intersection_at(f: &BiPoly, g: &BiPoly, a: &FieldElement, b: &FieldElement) -> Result<Intersection> {
    let field = a.field();
    if b.field() != field {
        return Err(Error::FieldMismatch {
            left: field.to_string(),
            right: b.field().to_string(),
        });
    }
    fulton_intersection(&f.lift_to(field)?, &g.lift_to(field)?, a.bits(), b.bits())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PointAt {
    /// Affine point `(x, y)`.
    Affine(u64, u64),
    /// Point `(u : 1 : 0)` at infinity.
    InfinityU(u64),
    /// Point `(1 : 0 : 0)`.
    InfinityX,
}

#[derive(Clone, Debug, Serialize)]
pub struct BezoutCheck {
    #[serde(serialize_with = "ser_text")]
    pub f: BiPoly,
    #[serde(serialize_with = "ser_text")]
    pub g: BiPoly,
    pub deg_f: u32,
    pub deg_g: u32,
    /// Degree over GF(2) of the field holding every intersection point.
    pub splitting_degree: u32,
    pub points: Vec<(PointAt, u64)>,
    pub total: u64,
}

impl BezoutCheck {
    pub fn holds(&self) -> bool {
        self.total == self.deg_f as u64 * self.deg_g as u64
    }
}

fn ser_text<S: serde::Serializer>(p: &BiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Coefficients of `p(a, y)` with formal length `deg_y(p) + 1`, where `p`
/// is mapped into `big` first.
fn column(p: &BiPoly, emb: &Embedding, a: u64, len: usize) -> Vec<u64> {
    let big = emb.big();
    let mut out = vec![0u64; len];
    for (m, c) in p.terms() {
        out[m.dy as usize] ^= big.mul(emb.map(c), big.pow(a, m.dx as u64));
    }
    out
}

/// `Res_y(f, g)` as a polynomial in x over the coefficient field, by
/// evaluation at points of a helper field and interpolation.
fn resultant_in_y(f: &BiPoly, g: &BiPoly) -> Result<UniPoly> {
    let base = f.field();
    let helper = make_field(lcm(base.n() as u64, 8) as u32)?;
    let emb = Embedding::new(base, helper)?;
    let (lf, lg) = (
        f.degree_y().unwrap_or(0) as usize + 1,
        g.degree_y().unwrap_or(0) as usize + 1,
    );
    let bound = (f.degree().unwrap_or(0) * g.degree().unwrap_or(0)) as u64 + 1;
    if bound >= helper.size() {
        return Err(Error::Ceiling {
            what: "resultant degree",
            value: bound,
            max: helper.size() - 1,
        });
    }
    let xs: Vec<u64> = (1..=bound).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&a| resultant(&helper, &column(f, &emb, a, lf), &column(g, &emb, a, lg)))
        .collect();
    let big = interpolate(helper, &xs, &ys)?;
    let back: std::collections::HashMap<u64, u64> = base.elements().map(|c| (emb.map(c), c)).collect();
    let coeffs = big
        .coeffs()
        .iter()
        .map(|c| {
            back.get(c)
                .copied()
                .ok_or_else(|| Error::Verification("resultant coefficient outside base field".into()))
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(UniPoly::new(base, coeffs))
}

/// Least `M` (a multiple of the base degree) with every root of `p` in
/// GF(2^M), searched up to `limit`.
fn splitting_degree(p: &UniPoly, limit: u32) -> Option<u32> {
    let base = p.field().n();
    let rad = p.radical();
    if rad.degree().unwrap_or(0) == 0 {
        return Some(base);
    }
    let x = UniPoly::new(p.field(), vec![0, 1]).rem(&rad);
    let mut r = x.clone();
    for k in 1..=limit {
        r = r.mul(&r).rem(&rad);
        if k % base == 0 && r == x {
            return Some(k);
        }
    }
    None
}

fn dehomogenized_top(p: &BiPoly) -> UniPoly {
    let d = p.degree().unwrap_or(0);
    let mut coeffs = vec![0u64; d as usize + 1];
    for (m, c) in p.homogeneous_component(d).terms() {
        coeffs[m.dx as usize] = c;
    }
    UniPoly::new(p.field(), coeffs)
}

/// Chart of the projective closure: `y = 1` (variables `x`, `z`) when
/// `y_chart`, else `x = 1` (variables `y`, `z`).
fn chart(p: &BiPoly, y_chart: bool) -> BiPoly {
    let d = p.degree().unwrap_or(0);
    BiPoly::from_terms(
        p.field(),
        p.terms().map(|(m, c)| {
            let z = d - m.degree();
            if y_chart {
                (Monomial::new(m.dx, z), c)
            } else {
                (Monomial::new(m.dy, z), c)
            }
        }),
    )
}

/// Sums `I(P, f, g)` over every projective intersection point. `Ok(None)`
/// when the curves share a component or the points need a field of degree
/// above `max_degree`.
pub fn bezout_identity_check(f: &BiPoly, g: &BiPoly, max_degree: u32) -> Result<Option<BezoutCheck>> {
    let base = f.field();
    let rx = resultant_in_y(f, g)?;
    let ry = resultant_in_y(&f.swap_xy(), &g.swap_xy())?;
    if rx.is_zero() || ry.is_zero() {
        return Ok(None);
    }
    let top_common = dehomogenized_top(f).gcd(&dehomogenized_top(g));
    let mut m = base.n();
    for p in [&rx, &ry, &top_common] {
        match splitting_degree(p, max_degree) {
            Some(k) => m = lcm(m as u64, k as u64) as u32,
            None => return Ok(None),
        }
    }
    if m > max_degree {
        return Ok(None);
    }
    let big = make_field(m)?;
    let emb = Embedding::new(base, big)?;
    let (fb, gb) = (f.embed(&emb)?, g.embed(&emb)?);
    let lift = |p: &UniPoly| UniPoly::new(big, p.coeffs().iter().map(|&c| emb.map(c)).collect());
    let mut points = Vec::new();
    for a in lift(&rx).roots() {
        let common = fb.specialize_x(a).gcd(&gb.specialize_x(a));
        for b in common.roots() {
            let i = fulton_intersection(&fb, &gb, a, b)?;
            points.push((PointAt::Affine(a, b), i));
        }
    }
    let common_top = lift(&top_common);
    if common_top.degree().unwrap_or(0) > 0 {
        let (cf, cg) = (chart(&fb, true), chart(&gb, true));
        for u in common_top.roots() {
            points.push((PointAt::InfinityU(u), fulton_intersection(&cf, &cg, u, 0)?));
        }
    }
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    if fb.coeff(df, 0) == 0 && gb.coeff(dg, 0) == 0 {
        let (cf, cg) = (chart(&fb, false), chart(&gb, false));
        points.push((PointAt::InfinityX, fulton_intersection(&cf, &cg, 0, 0)?));
    }
    let mut total = 0u64;
    let mut finite = Vec::new();
    for (p, i) in points {
        match i {
            Intersection::Finite(v) => {
                total += v;
                finite.push((p, v));
            }
            Intersection::Infinite => return Ok(None),
        }
    }
    Ok(Some(BezoutCheck {
        f: f.clone(),
        g: g.clone(),
        deg_f: df,
        deg_g: dg,
        splitting_degree: m,
        points: finite,
        total,
    }))
}

/// A curve of total degree exactly `d` with uniformly random coefficients.
pub fn random_curve<R: Rng>(rng: &mut R, field: FieldSpec, d: u32) -> BiPoly {
    loop {
        let mut terms = Vec::new();
        for deg in 0..=d {
            for dx in 0..=deg {
                terms.push((Monomial::new(dx, deg - dx), rng.gen_range(0..field.size())));
            }
        }
        let p = BiPoly::from_terms(field, terms);
        if p.degree() == Some(d) {
            return p;
        }
    }
}

/// Draws random pairs of degrees `1..=max_deg` over `field` until `count`
/// pairs pass the coprimality and splitting-field filters.
pub fn bezout_identity_suite(
    seed: u64,
    field: FieldSpec,
    count: usize,
    max_deg: u32,
    max_split_degree: u32,
) -> Result<(Vec<BezoutCheck>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut rejected = 0;
    while out.len() < count {
        if rejected > 100 * count + 1000 {
            return Err(Error::Verification("too many rejected curve pairs".into()));
        }
        let d1 = rng.gen_range(1..=max_deg);
        let d2 = rng.gen_range(1..=max_deg);
        let f = random_curve(&mut rng, field, d1);
        let g = random_curve(&mut rng, field, d2);
        match bezout_identity_check(&f, &g, max_split_degree)? {
            Some(c) => out.push(c),
            None => rejected += 1,
        }
    }
    Ok((out, rejected))
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentBoundCheck {
    pub intersection: Intersection,
    pub m_f: u32,
    pub m_g: u32,
    pub cones_share_line: bool,
}

impl TangentBoundCheck {
    /// `I >= m_f m_g`, with equality exactly when the tangent cones have no
    /// common line.
    pub fn holds(&self) -> bool {
        match self.intersection {
            Intersection::Infinite => false,
            Intersection::Finite(i) => {
                let prod = self.m_f as u64 * self.m_g as u64;
                i >= prod && ((i == prod) == !self.cones_share_line)
            }
        }
    }
}

pub fn tangent_bound_check(f: &BiPoly, g: &BiPoly, a: u64, b: u64) -> Result<TangentBoundCheck> {
    let (fs, gs) = (f.shift_raw(a, b, u32::MAX), g.shift_raw(a, b, u32::MAX));
    let m_f = fs.low_degree().ok_or(Error::ZeroPolynomial)?;
    let m_g = gs.low_degree().ok_or(Error::ZeroPolynomial)?;
    let cones_share_line = m_f > 0
        && m_g > 0
        && forms_share_linear_factor(&fs.homogeneous_component(m_f), &gs.homogeneous_component(m_g))?;
    Ok(TangentBoundCheck {
        intersection: fulton_intersection(f, g, a, b)?,
        m_f,
        m_g,
        cones_share_line,
    })
}

/// Random pairs of curves through the origin with prescribed low-order
/// structure; half of them share a tangent line by construction. Pairs with a
/// common component through the origin are skipped.
pub fn local_tangent_suite(seed: u64, field: FieldSpec, count: usize) -> Result<Vec<TangentBoundCheck>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > 100 * count {
            return Err(Error::Verification("too many degenerate local pairs".into()));
        }
        let line = |rng: &mut ChaCha8Rng| {
            BiPoly::from_terms(
                field,
                [
                    (Monomial::new(1, 0), rng.gen_range(0..field.size())),
                    (Monomial::new(0, 1), rng.gen_range(0..field.size())),
                ],
            )
        };
        let shared = line(&mut rng);
        if shared.is_zero() {
            continue;
        }
        let make = |rng: &mut ChaCha8Rng, share: bool| -> Result<BiPoly> {
            let mf = rng.gen_range(1..=3u32);
            let mut cone = if share { shared.clone() } else { line(rng) };
            for _ in 1..mf {
                cone = cone.mul(&line(rng))?;
            }
            let tail = random_curve(rng, field, mf + 2);
            let high = BiPoly::from_terms(field, tail.terms().filter(|(m, _)| m.degree() > mf));
            cone.add(&high)
        };
        let share = rng.gen_bool(0.5);
        let f = make(&mut rng, share)?;
        let g = make(&mut rng, share)?;
        if f.low_degree().is_none() || g.low_degree().is_none() {
            continue;
        }
        let c = tangent_bound_check(&f, &g, 0, 0)?;
        if c.intersection == Intersection::Infinite {
            continue;
        }
        out.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::parse;

    fn gf4(s: &str) -> BiPoly {
        parse(make_field(2).unwrap(), s).unwrap()
    }

    #[test]
    fn basic_numbers() {
        let two = FieldSpec::gf2();
        let p = |s: &str| parse(two, s).unwrap();
        assert_eq!(fulton_intersection(&p("y"), &p("x"), 0, 0).unwrap(), Intersection::Finite(1));
        assert_eq!(fulton_intersection(&p("y + x^2"), &p("y"), 0, 0).unwrap(), Intersection::Finite(2));
        assert_eq!(fulton_intersection(&p("y^2 + x^3"), &p("y"), 0, 0).unwrap(), Intersection::Finite(3));
        assert_eq!(fulton_intersection(&p("y + 1"), &p("x"), 0, 0).unwrap(), Intersection::Finite(0));
        assert_eq!(fulton_intersection(&p("x*y"), &p("x*y + x^2"), 0, 0).unwrap(), Intersection::Infinite);
        assert_eq!(
            fulton_intersection(&p("x*y + x^3 + y^3"), &p("x + y"), 0, 0).unwrap(),
            Intersection::Finite(2)
        );
    }

    #[test]
    fn conic_and_line_total() {
        let c = bezout_identity_check(&gf4("x^2 + y^2 + x*y + 1"), &gf4("x + y"), 24).unwrap().unwrap();
        assert!(c.holds(), "{c:?}");
        // parallel lines meet at infinity
        let c = bezout_identity_check(&gf4("x + y"), &gf4("x + y + 1"), 24).unwrap().unwrap();
        assert_eq!(c.points, vec![(PointAt::InfinityU(1), 1)]);
        let c = bezout_identity_check(&gf4("y"), &gf4("y + 1"), 24).unwrap().unwrap();
        assert_eq!(c.points, vec![(PointAt::InfinityX, 1)]);
        assert!(bezout_identity_check(&gf4("x*y"), &gf4("x"), 24).unwrap().is_none());
    }
}
