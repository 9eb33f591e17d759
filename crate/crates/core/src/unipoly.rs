//! Dense univariate polynomials over GF(2^n): the workhorse behind binary
//! form analysis, root finding and resultants.

use crate::error::Result;
use crate::field::FieldSpec;

/// Coefficient `k` of `coeffs` belongs to `x^k`; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<u64>,
}

impl UniPoly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        UniPoly {
            field,
            coeffs: vec![1],
        }
    }

    /// `x + a`
    pub fn linear(field: FieldSpec, a: u64) -> Self {
        UniPoly::new(field, vec![a, 1])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.mul(acc, x) ^ c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) ^ other.coeff(k)).collect();
        UniPoly::new(self.field, coeffs)
    }

    pub fn scale(&self, c: u64) -> UniPoly {
        let f = &self.field;
        UniPoly::new(self.field, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] ^= f.mul(a, b);
            }
        }
        UniPoly::new(self.field, out)
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let f = &self.field;
        let inv_lead = f.inv(d.lead()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(self.field), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let q = f.mul(c, inv_lead);
            quot[k - dd] = q;
            for (j, &b) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] ^= f.mul(q, b);
            }
        }
        (UniPoly::new(self.field, quot), UniPoly::new(self.field, rem))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("nonzero lead");
        self.scale(inv)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        // in characteristic 2 only odd-degree terms survive
        let coeffs = (1..self.coeffs.len())
            .map(|k| if k % 2 == 1 { self.coeffs[k] } else { 0 })
            .collect();
        UniPoly::new(self.field, coeffs)
    }

    /// Square root of a polynomial whose derivative vanishes (every exponent
    /// even), coefficient-wise via the inverse Frobenius.
    pub fn sqrt(&self) -> UniPoly {
        debug_assert!(self.derivative().is_zero());
        let f = &self.field;
        let coeffs = self.coeffs.iter().step_by(2).map(|&c| f.sqrt(c)).collect();
        UniPoly::new(self.field, coeffs)
    }

    /// The product of the distinct monic linear factors over the algebraic
    /// closure, returned as a polynomial over the same field.
    pub fn radical(&self) -> UniPoly {
        match self.degree() {
            None => return UniPoly::zero(self.field),
            Some(0) => return UniPoly::one(self.field),
            _ => {}
        }
        let d = self.derivative();
        if d.is_zero() {
            return self.sqrt().radical();
        }
        let g = self.gcd(&d);
        // roots of odd multiplicity, each once
        let odd = self.divrem(&g).0.monic();
        let rest = g.radical();
        let common = odd.gcd(&rest);
        odd.mul(&rest).divrem(&common).0
    }

    /// Number of distinct roots over the algebraic closure.
    pub fn distinct_root_count(&self) -> usize {
        self.radical().degree().unwrap_or(0)
    }

    /// `x^(2^k) mod self`, by repeated squaring.
    pub fn x_pow_two_pow_mod(&self, k: u32) -> UniPoly {
        let mut v = UniPoly::new(self.field, vec![0, 1]).rem(self);
        for _ in 0..k {
            v = v.mul(&v).rem(self);
        }
        v
    }

    /// Distinct roots lying in the coefficient field, sorted.
    pub fn roots(&self) -> Vec<u64> {
        let field = self.field;
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        if field.size() <= 256 {
            return field.elements().filter(|&a| self.eval(a) == 0).collect();
        }
        // restrict to the split part: gcd(self, x^(2^n) - x)
        let xq = self.x_pow_two_pow_mod(field.n());
        let split = self.gcd(&xq.add(&UniPoly::new(field, vec![0, 1])));
        let mut out = Vec::new();
        split_roots(&split, &mut out);
        out.sort_unstable();
        out
    }

    /// Evaluate at `x -> c*x` (scales coefficient k by c^k).
    pub fn scale_variable(&self, c: u64) -> UniPoly {
        let f = &self.field;
        let mut p = 1u64;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            out.push(f.mul(a, p));
            p = f.mul(p, c);
        }
        UniPoly::new(self.field, out)
    }
}

/// Equal-degree splitting of a squarefree, fully split polynomial using
/// trace maps `Tr(beta*x)` for `beta` over the polynomial basis; any two
/// distinct roots are separated by some basis element.
fn split_roots(p: &UniPoly, out: &mut Vec<u64>) {
    let field = p.field;
    match p.degree() {
        None | Some(0) => return,
        Some(1) => {
            let r = field.mul(p.coeff(0), field.inv(p.coeff(1)).expect("lead"));
            out.push(r);
            return;
        }
        _ => {}
    }
    for k in 0..field.n() {
        let beta = 1u64 << k;
        // Tr(beta x) mod p
        let mut term = UniPoly::new(field, vec![0, beta]).rem(p);
        let mut tr = term.clone();
        for _ in 1..field.n() {
            term = term.mul(&term).rem(p);
            tr = tr.add(&term);
        }
        let h = p.gcd(&tr);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < p.degree().unwrap() {
            let other = p.divrem(&h).0;
            split_roots(&h, out);
            split_roots(&other, out);
            return;
        }
    }
    unreachable!("trace splitting failed on a squarefree split polynomial");
}

/// The polynomial of degree `< xs.len()` through the points `(xs[k], ys[k])`
/// (Newton divided differences). The `xs` must be distinct.
pub fn interpolate(field: FieldSpec, xs: &[u64], ys: &[u64]) -> Result<UniPoly> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            let num = dd[k] ^ dd[k - 1];
            let den = xs[k] ^ xs[k - level];
            dd[k] = field.div(num, den)?;
        }
    }
    let mut acc = UniPoly::zero(field);
    for k in (0..n).rev() {
        acc = acc.mul(&UniPoly::linear(field, xs[k])).add(&UniPoly::new(field, vec![dd[k]]));
    }
    Ok(acc)
}

/// Resultant of two polynomials with the given formal degrees (coefficient
/// slices may have trailing zeros), as the Sylvester determinant.
pub fn resultant(field: &FieldSpec, a: &[u64], b: &[u64]) -> u64 {
    let m = a.len().saturating_sub(1);
    let n = b.len().saturating_sub(1);
    let size = m + n;
    if size == 0 {
        return 1;
    }
    let mut mat = vec![vec![0u64; size]; size];
    for r in 0..n {
        for (k, &c) in a.iter().enumerate() {
            mat[r][r + m - k] = c;
        }
    }
    for r in 0..m {
        for (k, &c) in b.iter().enumerate() {
            mat[n + r][r + n - k] = c;
        }
    }
    determinant(field, mat)
}

/// Determinant by Gaussian elimination (characteristic 2, so row swaps do
/// not change the sign).
pub fn determinant(field: &FieldSpec, mut mat: Vec<Vec<u64>>) -> u64 {
    let size = mat.len();
    let mut det = 1u64;
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| mat[r][col] != 0) else {
            return 0;
        };
        mat.swap(col, piv);
        let p = mat[col][col];
        det = field.mul(det, p);
        let inv = field.inv(p).expect("pivot");
        for r in col + 1..size {
            let c = mat[r][col];
            if c == 0 {
                continue;
            }
            let factor = field.mul(c, inv);
            for k in col..size {
                let v = field.mul(factor, mat[col][k]);
                mat[r][k] ^= v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn from_roots(field: FieldSpec, roots: &[(u64, usize)]) -> UniPoly {
        let mut p = UniPoly::one(field);
        for &(r, mult) in roots {
            for _ in 0..mult {
                p = p.mul(&UniPoly::linear(field, r));
            }
        }
        p
    }

    #[test]
    fn divrem_reconstructs() {
        let f = make_field(4).unwrap();
        let a = UniPoly::new(f, vec![3, 7, 0, 9, 1, 5]);
        let b = UniPoly::new(f, vec![2, 0, 11]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn radical_handles_even_multiplicities() {
        let f = make_field(8).unwrap();
        let cases: Vec<Vec<(u64, usize)>> = vec![
            vec![(3, 2)],
            vec![(3, 4), (5, 1)],
            vec![(0, 3), (7, 2), (9, 6), (200, 1)],
            vec![(1, 8)],
            vec![(2, 1), (4, 1), (6, 1)],
        ];
        for roots in cases {
            let p = from_roots(f, &roots);
            assert_eq!(p.distinct_root_count(), roots.len(), "{roots:?}");
            let mut expect: Vec<u64> = roots.iter().map(|r| r.0).collect();
            expect.sort_unstable();
            assert_eq!(p.roots(), expect);
        }
    }

    #[test]
    fn roots_in_large_field_by_trace_splitting() {
        let f = make_field(20).unwrap();
        let rs = [(0x1234u64, 1usize), (0xabcde, 2), (0x55555, 1), (1, 3)];
        let p = from_roots(f, &rs);
        let mut expect: Vec<u64> = rs.iter().map(|r| r.0).collect();
        expect.sort_unstable();
        assert_eq!(p.roots(), expect);
        // an irreducible quadratic factor contributes no roots
        let g = make_field(20).unwrap();
        let q = UniPoly::new(g, vec![1, 1, 1]); // x^2+x+1 has roots in GF(4) ⊂ GF(2^20)
        assert_eq!(q.roots().len(), 2);
    }

    #[test]
    fn resultant_vanishes_on_common_root() {
        let f = make_field(6).unwrap();
        let a = from_roots(f, &[(5, 1), (9, 1)]);
        let b = from_roots(f, &[(9, 1), (17, 2)]);
        assert_eq!(resultant(&f, a.coeffs(), b.coeffs()), 0);
        let c = from_roots(f, &[(3, 1), (17, 2)]);
        // Res = prod (a_i - b_j) for monic polynomials
        let mut expect = 1;
        for x in [5u64, 9] {
            for y in [3u64, 17, 17] {
                expect = f.mul(expect, x ^ y);
            }
        }
        assert_eq!(resultant(&f, a.coeffs(), c.coeffs()), expect);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = make_field(8).unwrap();
        let p = UniPoly::new(f, vec![7, 0, 200, 1, 33]);
        let xs: Vec<u64> = (10..15).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| p.eval(x)).collect();
        assert_eq!(interpolate(f, &xs, &ys).unwrap(), p);
        assert!(interpolate(f, &[3, 3], &[1, 2]).is_err());
    }
}
