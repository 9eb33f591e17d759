//! Log/exp tables for the exhaustive scans.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Largest degree for which tables are built (2^22 entries per table).
pub const MAX_TABLE_DEGREE: u32 = 22;

/// Discrete log tables with respect to the smallest primitive element.
#[derive(Clone, Debug)]
pub struct LogTables {
    field: FieldSpec,
    q1: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl LogTables {
    pub fn new(field: FieldSpec) -> Result<Self> {
        if field.n() > MAX_TABLE_DEGREE {
            return Err(Error::Ceiling {
                what: "table field degree",
                value: field.n() as u64,
                max: MAX_TABLE_DEGREE as u64,
            });
        }
        let q1 = field.group_order() as u32;
        let g = field.primitive_element();
        let mut exp = vec![0u32; 2 * q1 as usize];
        let mut log = vec![0u32; field.size() as usize];
        let mut v = 1u64;
        for k in 0..q1 {
            exp[k as usize] = v as u32;
            exp[(k + q1) as usize] = v as u32;
            log[v as usize] = k;
            v = field.mul(v, g);
        }
        Ok(LogTables { field, q1, exp, log })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    #[inline]
    pub fn log(&self, a: u32) -> u32 {
        self.log[a as usize]
    }

    #[inline]
    pub fn exp(&self, k: u32) -> u32 {
        self.exp[(k % self.q1) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let k = (self.log[a as usize] as u64 * (e % self.q1 as u64)) % self.q1 as u64;
        self.exp[k as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.exp[((self.q1 - self.log[a as usize]) % self.q1) as usize])
        }
    }

    /// `x -> x^t` for every element, in index order.
    pub fn power_map(&self, t: u64) -> Vec<u32> {
        let q1 = self.q1 as u64;
        let mut out = vec![0u32; self.field.size() as usize];
        let step = t % q1;
        for k in 0..q1 {
            let x = self.exp[k as usize];
            out[x as usize] = self.exp[((k * step) % q1) as usize];
        }
        if t == 0 {
            out[0] = 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn tables_agree_with_direct_arithmetic() {
        for n in [1u32, 2, 5, 8] {
            let f = make_field(n).unwrap();
            let t = LogTables::new(f).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(t.mul(a as u32, b as u32) as u64, f.mul(a, b));
                }
                assert_eq!(t.pow(a as u32, 13) as u64, f.pow(a, 13));
            }
            let pm = t.power_map(7);
            for a in f.elements() {
                assert_eq!(pm[a as usize] as u64, f.pow(a, 7));
            }
        }
    }
}
