//! Exact arithmetic in GF(2^n).
//!
//! Elements are packed bit-vectors in a `u64`: bit `k` is the coefficient of
//! `x^k` in the residue polynomial. Products go through a carry-less multiply
//! into a `u128` followed by reduction by the field modulus.
//!
//! Every degree has exactly one modulus, taken from a fixed table of the
//! lexicographically least irreducible polynomials over GF(2). The degree-1
//! entry is `x + 1`, so that GF(2) is `{0, 1}` with the obvious encoding.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_FIELD_DEGREE: u32 = 40;

/// Lexicographically least irreducible polynomial of each degree `1..=40`,
/// bit `k` holding the coefficient of `x^k`.
const MODULI: [u64; MAX_FIELD_DEGREE as usize] = [
    0x3,
    0x7,
    0xb,
    0x13,
    0x25,
    0x43,
    0x83,
    0x11b,
    0x203,
    0x409,
    0x805,
    0x1009,
    0x201b,
    0x4021,
    0x8003,
    0x1002b,
    0x20009,
    0x40009,
    0x80027,
    0x100009,
    0x200005,
    0x400003,
    0x800021,
    0x100001b,
    0x2000009,
    0x400001b,
    0x8000027,
    0x10000003,
    0x20000005,
    0x40000003,
    0x80000009,
    0x10000008d,
    0x20000004b,
    0x40000001b,
    0x800000005,
    0x1000000035,
    0x200000003f,
    0x4000000063,
    0x8000000011,
    0x10000000039,
];

/// Polynomials over GF(2) packed into machine words.
pub(crate) mod gf2x {
    pub fn clmul(a: u64, b: u64) -> u128 {
        let mut acc = 0u128;
        let mut a = a as u128;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            b >>= 1;
        }
        acc
    }

    pub fn degree(p: u128) -> i32 {
        127 - p.leading_zeros() as i32
    }

    pub fn rem(mut a: u128, m: u128) -> u128 {
        let dm = degree(m);
        while a != 0 && degree(a) >= dm {
            a ^= m << (degree(a) - dm);
        }
        a
    }

    pub fn gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            let r = rem(a, b);
            a = b;
            b = r;
        }
        a
    }

    pub fn mulmod(a: u128, b: u128, m: u128) -> u128 {
        // operands are already reduced, so both fit in 64 bits
        rem(clmul(a as u64, b as u64), m)
    }

    /// Rabin's test: `m` of degree n is irreducible iff x^(2^n) = x mod m and
    /// gcd(x^(2^(n/p)) - x, m) = 1 for every prime p | n.
    pub fn is_irreducible(m: u128) -> bool {
        let n = degree(m);
        if n < 1 {
            return false;
        }
        if n > 63 {
            return false;
        }
        let x = rem(2, m);
        let pow2k = |k: i32| {
            let mut v = x;
            for _ in 0..k {
                v = mulmod(v, v, m);
            }
            v
        };
        if pow2k(n) != x {
            return false;
        }
        super::arith::prime_factors(n as u64)
            .into_iter()
            .all(|p| gcd(m, pow2k(n / p as i32) ^ x) == 1)
    }
}

/// The field GF(2^n) with a fixed modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FieldSpec {
    n: u32,
    modulus: u64,
}

/// Returns GF(2^n) with the table modulus for degree `n`.
pub fn make_field(n: u32) -> Result<FieldSpec> {
    if n == 0 || n > MAX_FIELD_DEGREE {
        return Err(Error::FieldDegree {
            n,
            max: MAX_FIELD_DEGREE,
        });
    }
    FieldSpec::with_modulus(n, MODULI[n as usize - 1])
}

impl FieldSpec {
    /// GF(2), the coefficient field of the curves.
    pub fn gf2() -> Self {
        FieldSpec {
            n: 1,
            modulus: MODULI[0],
        }
    }

    /// Builds a field from an explicit modulus, checking degree and
    /// irreducibility.
    pub fn with_modulus(n: u32, modulus: u64) -> Result<Self> {
        if n == 0 || n > MAX_FIELD_DEGREE {
            return Err(Error::FieldDegree {
                n,
                max: MAX_FIELD_DEGREE,
            });
        }
        if gf2x::degree(modulus as u128) != n as i32 || !gf2x::is_irreducible(modulus as u128) {
            return Err(Error::Verification(format!(
                "modulus 0x{modulus:x} is not an irreducible polynomial of degree {n}"
            )));
        }
        Ok(FieldSpec { n, modulus })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of elements, 2^n.
    pub fn size(&self) -> u64 {
        1u64 << self.n
    }

    /// Order of the multiplicative group, 2^n - 1.
    pub fn group_order(&self) -> u64 {
        self.size() - 1
    }

    pub fn contains(&self, bits: u64) -> bool {
        bits < self.size()
    }

    pub fn element(&self, bits: u64) -> Result<FieldElement> {
        if !self.contains(bits) {
            return Err(Error::ElementRange { bits, n: self.n });
        }
        Ok(FieldElement { bits, field: *self })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            bits: 0,
            field: *self,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            bits: 1,
            field: *self,
        }
    }

    /// All elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.size()
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let n = self.n;
        let m = self.modulus as u128;
        let mut p = gf2x::clmul(a, b);
        while p >> n != 0 {
            let d = 127 - p.leading_zeros();
            p ^= m << (d - n);
        }
        p as u64
    }

    #[inline]
    pub fn square(&self, a: u64) -> u64 {
        self.mul(a, a)
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Exponentiation with a signed exponent; negative powers of zero fail.
    pub fn pow_signed(&self, a: u64, e: i64) -> Result<u64> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// Inverse via a^(2^n - 2).
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.size() - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^(2^k).
    pub fn frobenius(&self, a: u64, k: u32) -> u64 {
        let mut v = a;
        for _ in 0..k {
            v = self.square(v);
        }
        v
    }

    /// The unique square root (Frobenius is bijective).
    pub fn sqrt(&self, a: u64) -> u64 {
        self.frobenius(a, self.n - 1)
    }

    /// Membership in the subfield GF(2^i): `a^(2^i) = a`, and `false`
    /// whenever `i` does not divide `n`.
    pub fn in_subfield(&self, a: u64, i: u32) -> bool {
        i != 0 && self.n.is_multiple_of(i) && self.frobenius(a, i) == a
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let mut ord = self.group_order();
        for p in arith::prime_factors(ord) {
            while ord.is_multiple_of(p) && self.pow(a, ord / p) == 1 {
                ord /= p;
            }
        }
        Ok(ord)
    }

    /// Smallest (in bit order) generator of the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        if self.n == 1 {
            return 1;
        }
        let q1 = self.group_order();
        let primes = arith::prime_factors(q1);
        (2..self.size())
            .find(|&g| primes.iter().all(|&p| self.pow(g, q1 / p) != 1))
            .expect("a finite field always has a generator")
    }

    /// Trace to GF(2): a + a^2 + ... + a^(2^(n-1)).
    pub fn trace(&self, a: u64) -> u64 {
        let mut acc = 0;
        let mut v = a;
        for _ in 0..self.n {
            acc ^= v;
            v = self.square(v);
        }
        acc
    }

    pub fn format_element(&self, a: u64) -> String {
        format!("0x{a:x}")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n:{},modulus:0x{:x}", self.n, self.modulus)
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in field descriptor {s:?}"),
        };
        let (n_part, m_part) = s.trim().split_once(',').ok_or_else(|| bad("missing ','"))?;
        let n = n_part
            .trim()
            .strip_prefix("n:")
            .ok_or_else(|| bad("missing 'n:'"))?
            .parse::<u32>()
            .map_err(|_| bad("bad degree"))?;
        let hex = m_part
            .trim()
            .strip_prefix("modulus:0x")
            .ok_or_else(|| bad("missing 'modulus:0x'"))?;
        let modulus = u64::from_str_radix(hex, 16).map_err(|_| bad("bad modulus"))?;
        FieldSpec::with_modulus(n, modulus)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element tagged with its field. Operations check that both operands
/// share a field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    bits: u64,
    field: FieldSpec,
}

impl FieldElement {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement {
            bits: self.bits ^ other.bits,
            field: self.field,
        })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement {
            bits: self.field.mul(self.bits, other.bits),
            field: self.field,
        })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement {
            bits: self.field.pow(self.bits, e),
            field: self.field,
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            bits: self.field.inv(self.bits)?,
            field: self.field,
        })
    }

    pub fn in_subfield(&self, i: u32) -> bool {
        self.field.in_subfield(self.bits, i)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:x}", self.bits)
    }
}

/// Subfield membership for a tagged element.
pub fn in_subfield(a: &FieldElement, i: u32) -> bool {
    a.in_subfield(i)
}

/// The smallest field holding the `ell`-th roots of unity, and all of them in
/// increasing bit order.
pub fn ell_roots(ell: u64) -> Result<(FieldSpec, Vec<FieldElement>)> {
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(Error::InvalidEll(ell));
    }
    let m = arith::order_of_two(ell);
    if m > MAX_FIELD_DEGREE {
        return Err(Error::Ceiling {
            what: "root field degree",
            value: m as u64,
            max: MAX_FIELD_DEGREE as u64,
        });
    }
    let field = make_field(m)?;
    let roots = ell_roots_in(&field, ell)?
        .into_iter()
        .map(|bits| FieldElement { bits, field })
        .collect();
    Ok((field, roots))
}

/// All `ell`-th roots of unity of `field` (requires `ell | 2^n - 1`), sorted.
pub fn ell_roots_in(field: &FieldSpec, ell: u64) -> Result<Vec<u64>> {
    if ell == 0 || !field.group_order().is_multiple_of(ell) {
        return Err(Error::Verification(format!(
            "{ell} does not divide 2^{} - 1",
            field.n()
        )));
    }
    let g = field.primitive_element();
    let zeta = field.pow(g, field.group_order() / ell);
    let mut roots = Vec::with_capacity(ell as usize);
    let mut v = 1u64;
    for _ in 0..ell {
        roots.push(v);
        v = field.mul(v, zeta);
    }
    roots.sort_unstable();
    Ok(roots)
}

/// A field embedding GF(2^k) -> GF(2^m) for k | m, fixed by sending the
/// residue class of `x` to the first root (in generator-power order) of the
/// small modulus inside the big field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    small: FieldSpec,
    big: FieldSpec,
    basis_images: Vec<u64>,
}

impl Embedding {
    pub fn new(small: FieldSpec, big: FieldSpec) -> Result<Self> {
        if !big.n().is_multiple_of(small.n()) {
            return Err(Error::NotSubfield {
                small: small.n(),
                big: big.n(),
            });
        }
        if small == big {
            let basis_images = (0..small.n()).map(|k| 1u64 << k).collect();
            return Ok(Embedding {
                small,
                big,
                basis_images,
            });
        }
        if small.n() == 1 {
            return Ok(Embedding {
                small,
                big,
                basis_images: vec![1],
            });
        }
        let g = big.primitive_element();
        let gamma = big.pow(g, big.group_order() / small.group_order());
        let eval = |r: u64| {
            let mut acc = 0u64;
            for k in (0..=small.n()).rev() {
                acc = big.mul(acc, r);
                if small.modulus() >> k & 1 == 1 {
                    acc ^= 1;
                }
            }
            acc
        };
        let mut r = gamma;
        for _ in 0..small.group_order() {
            if eval(r) == 0 {
                let mut basis_images = Vec::with_capacity(small.n() as usize);
                let mut p = 1u64;
                for _ in 0..small.n() {
                    basis_images.push(p);
                    p = big.mul(p, r);
                }
                return Ok(Embedding {
                    small,
                    big,
                    basis_images,
                });
            }
            r = big.mul(r, gamma);
        }
        Err(Error::Verification(format!(
            "no root of the GF(2^{}) modulus inside GF(2^{})",
            small.n(),
            big.n()
        )))
    }

    pub fn small(&self) -> FieldSpec {
        self.small
    }

    pub fn big(&self) -> FieldSpec {
        self.big
    }

    pub fn map(&self, a: u64) -> u64 {
        let mut acc = 0;
        for (k, &img) in self.basis_images.iter().enumerate() {
            if a >> k & 1 == 1 {
                acc ^= img;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force irreducibility: no factor of degree 1..=n/2.
    fn irreducible_by_trial_division(m: u64) -> bool {
        let n = gf2x::degree(m as u128);
        for d in 1..=n / 2 {
            for low in 0..(1u64 << d) {
                let cand = (1u64 << d) | low;
                if gf2x::rem(m as u128, cand as u128) == 0 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn modulus_table_is_least_irreducible() {
        for n in 2..=16u32 {
            let m = MODULI[n as usize - 1];
            assert!(irreducible_by_trial_division(m), "n={n}");
            for smaller in (1u64 << n)..m {
                assert!(!irreducible_by_trial_division(smaller), "n={n} candidate {smaller:x}");
            }
        }
        for n in 1..=MAX_FIELD_DEGREE {
            assert!(gf2x::is_irreducible(MODULI[n as usize - 1] as u128), "n={n}");
        }
    }

    #[test]
    fn make_field_examples() {
        let f1 = make_field(1).unwrap();
        assert_eq!(f1.modulus(), 0b11);
        assert_eq!(f1.size(), 2);
        let f3 = make_field(3).unwrap();
        assert_eq!(f3.modulus(), 0b1011);
        assert_eq!(f3.order(0b10).unwrap(), 7);
        let f4 = make_field(4).unwrap();
        let cube_roots = f4.elements().filter(|&a| f4.pow(a, 3) == 1).count();
        assert_eq!(cube_roots, 3);
        assert!(make_field(0).is_err());
        assert!(make_field(MAX_FIELD_DEGREE + 1).is_err());
    }

    #[test]
    fn gf8_products() {
        let f = make_field(3).unwrap();
        assert_eq!(f.mul(0b10, 0b100), 0b011);
        assert_eq!(f.inv(0b10).unwrap(), 0b101);
        assert_eq!(f.inv(0), Err(Error::ZeroInverse));
        for a in 1..8 {
            assert_eq!(f.pow(a, 7), 1);
        }
    }

    #[test]
    fn element_mismatch_is_an_error() {
        let a = make_field(3).unwrap().element(3).unwrap();
        let b = make_field(4).unwrap().element(3).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
        assert!(make_field(3).unwrap().element(8).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for n in 1..=6 {
            let f = make_field(n).unwrap();
            for a in f.elements() {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.square(a ^ b), f.square(a) ^ f.square(b));
                }
            }
        }
    }

    #[test]
    fn frobenius_fixed_points_count() {
        for n in 1..=8u32 {
            let f = make_field(n).unwrap();
            for i in 1..=8u32 {
                let fixed = f.elements().filter(|&a| f.frobenius(a, i) == a).count() as u64;
                assert_eq!(fixed, 1u64 << arith::gcd(i as u64, n as u64), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn ell_roots_examples() {
        let (f, r) = ell_roots(3).unwrap();
        assert_eq!(f.n(), 2);
        assert_eq!(r.len(), 3);
        let (f, r) = ell_roots(51).unwrap();
        assert_eq!(f.n(), 8);
        assert_eq!(r.len(), 51);
        let (f, r) = ell_roots(7).unwrap();
        assert_eq!(f.n(), 3);
        assert_eq!(r.len(), 7);
        assert!(matches!(ell_roots(4), Err(Error::InvalidEll(4))));
        assert!(matches!(ell_roots(1), Err(Error::InvalidEll(1))));
    }

    #[test]
    fn ell_roots_match_exhaustive_search() {
        for ell in (3..=63u64).step_by(2) {
            let m = arith::order_of_two(ell);
            if m > 12 {
                continue;
            }
            let (f, roots) = ell_roots(ell).unwrap();
            let brute: Vec<u64> = f.elements().filter(|&a| a != 0 && f.pow(a, ell) == 1).collect();
            let got: Vec<u64> = roots.iter().map(|r| r.bits()).collect();
            assert_eq!(got, brute, "ell={ell}");
            // closed under multiplication
            for a in &got {
                for b in &got {
                    assert!(got.binary_search(&f.mul(*a, *b)).is_ok());
                }
            }
        }
    }

    #[test]
    fn subfield_membership() {
        let f = make_field(8).unwrap();
        assert!(f.in_subfield(1, 1));
        let cube = ell_roots_in(&f, 3).unwrap();
        for w in cube {
            assert!(f.in_subfield(w, 2));
        }
        let g = f.primitive_element();
        assert!(!f.in_subfield(g, 4));
        assert!(!f.in_subfield(1, 3));
    }

    #[test]
    fn spec_string_round_trip() {
        let f = make_field(8).unwrap();
        assert_eq!(f.to_string(), "n:8,modulus:0x11b");
        assert_eq!("n:8,modulus:0x11b".parse::<FieldSpec>().unwrap(), f);
        assert!("n:8,modulus:0x11c".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        for (k, m) in [(2, 4), (2, 8), (4, 8), (3, 6), (1, 5), (4, 16)] {
            let small = make_field(k).unwrap();
            let big = make_field(m).unwrap();
            let e = Embedding::new(small, big).unwrap();
            for a in small.elements() {
                for b in small.elements() {
                    assert_eq!(e.map(small.mul(a, b)), big.mul(e.map(a), e.map(b)));
                    assert_eq!(e.map(a ^ b), e.map(a) ^ e.map(b));
                }
            }
        }
        assert!(Embedding::new(make_field(3).unwrap(), make_field(4).unwrap()).is_err());
    }
}
