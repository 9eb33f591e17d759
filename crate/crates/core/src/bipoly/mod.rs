//! Sparse bivariate polynomials over GF(2^m).
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering (total
//! degree ascending, then x-degree descending) is the canonical order used
//! for equality, hashing and the text format.

mod text;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Embedding, FieldElement, FieldSpec};
use crate::unipoly::UniPoly;

pub use text::parse;

/// Largest total degree a polynomial may reach.
pub const MAX_TOTAL_DEGREE: u32 = 1 << 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub dx: u32,
    pub dy: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { dx: 0, dy: 0 };

    pub fn new(dx: u32, dy: u32) -> Self {
        Monomial { dx, dy }
    }

    pub fn degree(&self) -> u32 {
        self.dx + self.dy
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.dx.cmp(&self.dx))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiPoly {
    field: FieldSpec,
    terms: BTreeMap<Monomial, u64>,
}

/// A root class of a binary form: `Finite(u)` is the linear factor `x + u*y`,
/// `Infinity` is the factor `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RootClass {
    Finite(u64),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFactors {
    /// Distinct linear factors over the algebraic closure.
    pub count: usize,
    /// Root classes rational over the coefficient field.
    pub rational_roots: Vec<RootClass>,
    /// Whether every root class is rational over the coefficient field.
    pub complete: bool,
}

fn check_degree(d: u32) -> Result<()> {
    if d > MAX_TOTAL_DEGREE {
        Err(Error::DegreeCeiling {
            degree: d,
            max: MAX_TOTAL_DEGREE,
        })
    } else {
        Ok(())
    }
}

/// Submasks `k` of `bits` with `k <= limit`, i.e. the exponents where the
/// binomial coefficient C(bits, k) is odd (Lucas).
fn odd_binomials(bits: u32, limit: u32) -> impl Iterator<Item = u32> {
    let top = bits.min(limit);
    let dense = top < 64 || bits.count_ones() > 12;
    let via_scan = (0..=top).filter(move |k| dense && k & !bits == 0);
    let via_submask = {
        let mut next = Some(bits);
        std::iter::from_fn(move || {
            if dense {
                return None;
            }
            loop {
                let k = next?;
                next = if k == 0 { None } else { Some((k - 1) & bits) };
                if k <= limit {
                    return Some(k);
                }
            }
        })
    };
    via_scan.chain(via_submask)
}

impl BiPoly {
    pub fn zero(field: FieldSpec) -> Self {
        BiPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, c: u64) -> Self {
        BiPoly::monomial(field, 0, 0, c)
    }

    pub fn one(field: FieldSpec) -> Self {
        BiPoly::constant(field, 1)
    }

    pub fn x(field: FieldSpec) -> Self {
        BiPoly::monomial(field, 1, 0, 1)
    }

    pub fn y(field: FieldSpec) -> Self {
        BiPoly::monomial(field, 0, 1, 1)
    }

    pub fn monomial(field: FieldSpec, dx: u32, dy: u32, c: u64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Monomial::new(dx, dy), c);
        }
        BiPoly { field, terms }
    }

    /// Sums the given terms (repeated monomials add up).
    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert(0) ^= c;
        }
        acc.retain(|_, c| *c != 0);
        BiPoly { field, terms: acc }
    }

    fn from_hash(field: FieldSpec, acc: HashMap<(u32, u32), u64>) -> Self {
        let terms = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|((dx, dy), c)| (Monomial::new(dx, dy), c))
            .collect();
        BiPoly { field, terms }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, u64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> u64 {
        self.terms.get(&Monomial::new(dx, dy)).copied().unwrap_or(0)
    }

    /// Total degree; `None` stands for the zero polynomial's -infinity.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Least total degree of a term.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.dx).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.dy).max()
    }

    fn same_field(&self, other: &BiPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &BiPoly) -> Result<BiPoly> {
        self.same_field(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(*m).or_insert(0);
            *e ^= c;
            if *e == 0 {
                terms.remove(m);
            }
        }
        Ok(BiPoly {
            field: self.field,
            terms,
        })
    }

    pub fn scale(&self, c: u64) -> BiPoly {
        if c == 0 {
            return BiPoly::zero(self.field);
        }
        let f = self.field;
        BiPoly {
            field: f,
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(*a, c))).collect(),
        }
    }

    /// Multiplies by the monomial `x^dx y^dy`.
    pub fn shift_exponents(&self, dx: u32, dy: u32) -> BiPoly {
        BiPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.dx + dx, m.dy + dy), *c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &BiPoly) -> Result<BiPoly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(BiPoly::zero(self.field));
        }
        check_degree(self.degree().unwrap() + other.degree().unwrap())?;
        let f = self.field;
        let mut acc: HashMap<(u32, u32), u64> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry((m1.dx + m2.dx, m1.dy + m2.dy)).or_insert(0) ^= f.mul(*c1, *c2);
            }
        }
        Ok(BiPoly::from_hash(f, acc))
    }

    /// `p^2` via the Frobenius: squares coefficients and doubles exponents.
    pub fn square(&self) -> Result<BiPoly> {
        if let Some(d) = self.degree() {
            check_degree(2 * d)?;
        }
        let f = self.field;
        Ok(BiPoly {
            field: f,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(2 * m.dx, 2 * m.dy), f.square(*c)))
                .collect(),
        })
    }

    /// Binary exponentiation; the squarings are Frobenius maps.
    pub fn pow(&self, e: u32) -> Result<BiPoly> {
        if let Some(d) = self.degree() {
            check_degree(d.saturating_mul(e))?;
        }
        let mut acc = BiPoly::one(self.field);
        let mut base = self.clone();
        let mut e = e;
        while e != 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e != 0 {
                base = base.square()?;
            }
        }
        Ok(acc)
    }

    /// Exact division. `Ok(None)` signals that `q` does not divide `self`.
    ///
    /// Long division with x as the main variable: repeatedly cancel the
    /// leading term in lex order (x-degree first, then y-degree). If the
    /// leading term of `q` ever fails to divide that of the remainder, `q`
    /// cannot divide the original polynomial.
    pub fn exact_div(&self, q: &BiPoly) -> Result<Option<BiPoly>> {
        self.same_field(q)?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field;
        let lex_key = |m: &Monomial| (m.dx, m.dy);
        let divisor: Vec<((u32, u32), u64)> = q.terms.iter().map(|(m, c)| (lex_key(m), *c)).collect();
        let (&(lx, ly), &lc) = divisor
            .iter()
            .map(|(k, c)| (k, c))
            .max_by_key(|(k, _)| **k)
            .expect("nonzero divisor");
        let inv_lc = f.inv(lc)?;
        let mut rem: BTreeMap<(u32, u32), u64> =
            self.terms.iter().map(|(m, c)| (lex_key(m), *c)).collect();
        let mut quot: HashMap<(u32, u32), u64> = HashMap::new();
        while let Some((&(dx, dy), &c)) = rem.iter().next_back() {
            if dx < lx || dy < ly {
                return Ok(None);
            }
            let (sx, sy) = (dx - lx, dy - ly);
            let k = f.mul(c, inv_lc);
            quot.insert((sx, sy), k);
            for &((qx, qy), qc) in &divisor {
                let key = (qx + sx, qy + sy);
                let v = f.mul(k, qc);
                let e = rem.entry(key).or_insert(0);
                *e ^= v;
                if *e == 0 {
                    rem.remove(&key);
                }
            }
        }
        Ok(Some(BiPoly::from_hash(f, quot)))
    }

    /// Sum of the terms of total degree exactly `m`.
    pub fn homogeneous_component(&self, m: u32) -> BiPoly {
        let terms = self
            .terms
            .range(Monomial::new(m, 0)..=Monomial::new(0, m))
            .map(|(k, c)| (*k, *c))
            .collect();
        BiPoly {
            field: self.field,
            terms,
        }
    }

    /// Nonzero homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, BiPoly> {
        let mut out: BTreeMap<u32, BiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| BiPoly::zero(self.field))
                .terms
                .insert(*m, *c);
        }
        out
    }

    /// The common degree of all terms, if any.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let lo = self.low_degree()?;
        (Some(lo) == self.degree()).then_some(lo)
    }

    pub fn eval(&self, x: u64, y: u64) -> u64 {
        let f = self.field;
        self.terms.iter().fold(0, |acc, (m, c)| {
            acc ^ f.mul(*c, f.mul(f.pow(x, m.dx as u64), f.pow(y, m.dy as u64)))
        })
    }

    /// `self(x, r)` as a univariate polynomial in x.
    pub fn specialize_y(&self, r: u64) -> UniPoly {
        let f = self.field;
        let mut coeffs = vec![0u64; self.degree_x().map_or(0, |d| d as usize + 1)];
        for (m, c) in &self.terms {
            coeffs[m.dx as usize] ^= f.mul(*c, f.pow(r, m.dy as u64));
        }
        UniPoly::new(f, coeffs)
    }

    /// `self(r, y)` as a univariate polynomial in y.
    pub fn specialize_x(&self, r: u64) -> UniPoly {
        self.swap_xy().specialize_y(r)
    }

    pub fn swap_xy(&self) -> BiPoly {
        BiPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.dy, m.dx), *c))
                .collect(),
        }
    }

    /// Applies `c -> c^(2^k)` to every coefficient (a Galois conjugate).
    pub fn conjugate(&self, k: u32) -> BiPoly {
        let f = self.field;
        BiPoly {
            field: f,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, f.frobenius(*c, k)))
                .collect(),
        }
    }

    /// Moves the polynomial into a larger field along an embedding.
    pub fn embed(&self, e: &Embedding) -> Result<BiPoly> {
        if e.small() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: e.small().to_string(),
            });
        }
        Ok(BiPoly {
            field: e.big(),
            terms: self.terms.iter().map(|(m, c)| (*m, e.map(*c))).collect(),
        })
    }

    /// The same polynomial read over `target`, for coefficient fields that
    /// embed canonically (GF(2), or `target` itself).
    pub fn lift_to(&self, target: FieldSpec) -> Result<BiPoly> {
        if self.field == target {
            return Ok(self.clone());
        }
        if self.field.n() == 1 {
            return Ok(BiPoly {
                field: target,
                terms: self.terms.clone(),
            });
        }
        self.embed(&Embedding::new(self.field, target)?)
    }

    /// `p(x + alpha, y + beta)` over the field of `alpha` and `beta`.
    pub fn shift(&self, alpha: &FieldElement, beta: &FieldElement) -> Result<BiPoly> {
        self.shift_truncated(alpha, beta, u32::MAX)
    }

    /// Homogeneous components of degree `<= max_degree` of
    /// `p(x + alpha, y + beta)`.
    pub fn shift_truncated(
        &self,
        alpha: &FieldElement,
        beta: &FieldElement,
        max_degree: u32,
    ) -> Result<BiPoly> {
        if alpha.field() != beta.field() {
            return Err(Error::FieldMismatch {
                left: alpha.field().to_string(),
                right: beta.field().to_string(),
            });
        }
        let target = alpha.field();
        let p = self.lift_to(target)?;
        Ok(p.shift_raw(alpha.bits(), beta.bits(), max_degree))
    }

    /// Shift by raw elements of `self.field()`, keeping degrees `<= max_degree`.
    /// Binomials are expanded with Lucas parity: C(n, k) is odd iff k is a
    /// submask of n.
    pub fn shift_raw(&self, alpha: u64, beta: u64, max_degree: u32) -> BiPoly {
        let f = self.field;
        let powers = |a: u64, top: u32| {
            let mut v = Vec::with_capacity(top as usize + 1);
            let mut p = 1u64;
            for _ in 0..=top {
                v.push(p);
                p = f.mul(p, a);
            }
            v
        };
        let apow = powers(alpha, self.degree_x().unwrap_or(0));
        let bpow = powers(beta, self.degree_y().unwrap_or(0));
        let mut acc: HashMap<(u32, u32), u64> = HashMap::new();
        for (m, c) in &self.terms {
            for k in odd_binomials(m.dx, max_degree) {
                let ca = f.mul(*c, apow[(m.dx - k) as usize]);
                if ca == 0 {
                    continue;
                }
                for l in odd_binomials(m.dy, max_degree - k) {
                    let v = f.mul(ca, bpow[(m.dy - l) as usize]);
                    if v != 0 {
                        *acc.entry((k, l)).or_insert(0) ^= v;
                    }
                }
            }
        }
        BiPoly::from_hash(f, acc)
    }

    /// Dehomogenized coefficients of a binary form of degree `m`:
    /// entry k is the coefficient of `x^k y^(m-k)`.
    pub fn binary_form_coeffs(&self) -> Result<(u32, Vec<u64>)> {
        let m = self.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let mut coeffs = vec![0u64; m as usize + 1];
        for (mono, c) in &self.terms {
            coeffs[mono.dx as usize] = *c;
        }
        Ok((m, coeffs))
    }
}

/// Distinct linear factors (over the algebraic closure) of a nonzero binary
/// form.
///
/// Dehomogenizes at `u = x/y`: a factor `y` shows up as a drop in degree, the
/// remaining factors are the distinct roots of the univariate polynomial,
/// counted through its radical.
pub fn distinct_linear_factors(form: &BiPoly) -> Result<LinearFactors> {
    if form.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, coeffs) = form.binary_form_coeffs()?;
    let field = form.field();
    let has_y = coeffs[m as usize] == 0;
    let uni = UniPoly::new(field, coeffs);
    let finite = uni.distinct_root_count();
    let count = finite + has_y as usize;
    let mut rational_roots: Vec<RootClass> = uni.roots().into_iter().map(RootClass::Finite).collect();
    if has_y {
        rational_roots.push(RootClass::Infinity);
    }
    Ok(LinearFactors {
        count,
        complete: rational_roots.len() == count,
        rational_roots,
    })
}

/// Whether two nonzero binary forms share a linear factor over the closure.
pub fn forms_share_linear_factor(a: &BiPoly, b: &BiPoly) -> Result<bool> {
    let (ma, ca) = a.binary_form_coeffs()?;
    let (mb, cb) = b.binary_form_coeffs()?;
    if ca[ma as usize] == 0 && cb[mb as usize] == 0 {
        return Ok(true);
    }
    let ua = UniPoly::new(a.field(), ca);
    let ub = UniPoly::new(b.field(), cb);
    Ok(ua.gcd(&ub).degree().unwrap_or(0) > 0)
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format(self))
    }
}

impl ops::Add for &BiPoly {
    type Output = BiPoly;

    /// Panics on a field mismatch; use [`BiPoly::add`] for the checked form.
    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::add(self, rhs).expect("BiPoly addition across fields")
    }
}

impl ops::Mul for &BiPoly {
    type Output = BiPoly;

    /// Panics on a field mismatch or degree overflow; use [`BiPoly::mul`] for
    /// the checked form.
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::mul(self, rhs).expect("BiPoly multiplication")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn gf2() -> FieldSpec {
        FieldSpec::gf2()
    }

    fn p(s: &str) -> BiPoly {
        parse(gf2(), s).unwrap()
    }

    #[test]
    fn frobenius_square_and_pow() {
        let l = p("x + y + 1");
        assert_eq!(l.pow(2).unwrap(), p("x^2 + y^2 + 1"));
        let big = l.pow(205).unwrap();
        assert_eq!(big.num_terms(), 243);
        // direct repeated multiplication agrees
        let mut direct = BiPoly::one(gf2());
        for _ in 0..205 {
            direct = &direct * &l;
        }
        assert_eq!(big, direct);
        assert!((&l * &BiPoly::zero(gf2())).is_zero());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p("x^2 + y^2").exact_div(&p("x + y")).unwrap(), Some(p("x + y")));
        let f3 = p("x^2*y + x*y^2 + x^2 + y^2 + x + y");
        let w = &(&p("x + 1") * &p("y + 1")) * &p("x + y");
        assert_eq!(f3.exact_div(&w).unwrap(), Some(BiPoly::one(gf2())));
        assert_eq!(p("x^2 + x + 1").exact_div(&p("x + 1")).unwrap(), None);
        assert_eq!(p("x").exact_div(&BiPoly::zero(gf2())), Err(Error::DivisionByZero));
    }

    #[test]
    fn shift_examples() {
        let f = make_field(4).unwrap();
        let a = f.element(0b0110).unwrap();
        let b = f.element(0b1011).unwrap();
        let zero = f.zero();
        let x2 = BiPoly::monomial(f, 2, 0, 1);
        let expect = BiPoly::from_terms(
            f,
            [(Monomial::new(2, 0), 1), (Monomial::ONE, f.square(a.bits()))],
        );
        assert_eq!(x2.shift(&a, &zero).unwrap(), expect);
        let xy = BiPoly::monomial(f, 1, 1, 1);
        let expect = BiPoly::from_terms(
            f,
            [
                (Monomial::new(1, 1), 1),
                (Monomial::new(1, 0), b.bits()),
                (Monomial::new(0, 1), a.bits()),
                (Monomial::ONE, f.mul(a.bits(), b.bits())),
            ],
        );
        assert_eq!(xy.shift(&a, &b).unwrap(), expect);
    }

    #[test]
    fn homogeneous_components_examples() {
        let q = p("x^2 + x*y + x");
        assert_eq!(q.homogeneous_component(2), p("x^2 + x*y"));
        assert_eq!(q.homogeneous_component(1), p("x"));
        assert!(q.homogeneous_component(7).is_zero());
    }

    #[test]
    fn linear_factor_counts() {
        let f = make_field(4).unwrap();
        // (A x + B y)^4 with A, B nonzero
        let lin = BiPoly::from_terms(f, [(Monomial::new(1, 0), 3), (Monomial::new(0, 1), 9)]);
        let lf = distinct_linear_factors(&lin.pow(4).unwrap()).unwrap();
        assert_eq!(lf.count, 1);
        let cubic = p("x^2*y + x*y^2");
        let lf = distinct_linear_factors(&cubic).unwrap();
        assert_eq!(lf.count, 3);
        assert!(lf.complete);
        assert_eq!(
            lf.rational_roots,
            vec![RootClass::Finite(0), RootClass::Finite(1), RootClass::Infinity]
        );
        assert!(distinct_linear_factors(&p("x^2 + x")).is_err());
        // x^2 + xy + y^2 splits only over GF(4)
        let lf = distinct_linear_factors(&p("x^2 + x*y + y^2")).unwrap();
        assert_eq!(lf.count, 2);
        assert!(!lf.complete);
    }
}
