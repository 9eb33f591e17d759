//! Canonical text format.
//!
//! Terms appear in canonical order joined by `" + "`. A term is its monomial
//! (`x^a*y^b`, exponent 1 elided, `1` for the constant), prefixed by
//! `(0xHEX)*` when the coefficient field is larger than GF(2); a constant
//! term over such a field is just `(0xHEX)`. The zero polynomial is `0`.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

use super::{BiPoly, Monomial};

fn monomial_text(m: Monomial) -> Option<String> {
    let var = |v: char, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    match (var('x', m.dx), var('y', m.dy)) {
        (None, None) => None,
        (Some(a), None) | (None, Some(a)) => Some(a),
        (Some(a), Some(b)) => Some(format!("{a}*{b}")),
    }
}

pub(super) fn format(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let tagged = p.field().n() > 1;
    let parts: Vec<String> = p
        .terms()
        .map(|(m, c)| match (tagged, monomial_text(m)) {
            (false, Some(mono)) => mono,
            (false, None) => "1".to_string(),
            (true, Some(mono)) => format!("(0x{c:x})*{mono}"),
            (true, None) => format!("(0x{c:x})"),
        })
        .collect();
    parts.join(" + ")
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self, radix: u32) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_digit(radix) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        u64::from_str_radix(s, radix).map_err(|_| Error::Parse {
                pos: start,
                msg: "number too large".into(),
            })
    }

    fn coefficient(&mut self) -> Result<u64> {
        // after '('
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"0x") || self.src[self.pos..].starts_with(b"0X") {
            self.pos += 2;
        }
        let v = self.digits(16)?;
        if !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(v)
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let start = self.pos;
        let e = self.digits(10)?;
        u32::try_from(e).map_err(|_| Error::Parse {
                pos: start,
                msg: "exponent too large".into(),
            })
    }

    /// One term: optional coefficient, then factors `x`, `y`, `x^k`, `y^k`,
    /// `1`, optionally separated by `*`.
    fn term(&mut self, field: FieldSpec) -> Result<(Monomial, u64)> {
        let mut coeff = 1u64;
        let mut mono = Monomial::ONE;
        let mut seen = false;
        if self.eat(b'(') {
            coeff = self.coefficient()?;
            if !field.contains(coeff) {
                return self.err(format!("coefficient 0x{coeff:x} outside {field}"));
            }
            seen = true;
            self.eat(b'*');
        }
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    mono.dx += self.exponent()?;
                }
                Some(b'y') => {
                    self.pos += 1;
                    mono.dy += self.exponent()?;
                }
                Some(b'0'..=b'9') => {
                    let start = self.pos;
                    match self.digits(10)? {
                        1 => {}
                        0 => coeff = 0,
                        _ => {
                            return Err(Error::Parse {
                                pos: start,
                                msg: "integer constants other than 0 and 1 are not field elements".into(),
                            })
                        }
                    }
                }
                _ if seen => break,
                _ => return self.err("expected a term"),
            }
            seen = true;
            if !self.eat(b'*') {
                match self.peek() {
                    Some(b'x') | Some(b'y') => continue,
                    _ => break,
                }
            }
        }
        Ok((mono, coeff))
    }
}

/// Parses the canonical text format (whitespace is ignored; `*` between
/// factors is optional; repeated monomials are summed).
pub fn parse(field: FieldSpec, text: &str) -> Result<BiPoly> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    loop {
        terms.push(cur.term(field)?);
        if !cur.eat(b'+') {
            break;
        }
    }
    if cur.peek().is_some() {
        return cur.err("trailing input");
    }
    Ok(BiPoly::from_terms(field, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn canonical_rendering() {
        let f2 = FieldSpec::gf2();
        let p = parse(f2, "x*y + x^2 + 1 + y^3").unwrap();
        assert_eq!(p.to_string(), "1 + x^2 + x*y + y^3");
        assert_eq!(BiPoly::zero(f2).to_string(), "0");
        let f4 = make_field(2).unwrap();
        let q = BiPoly::from_terms(f4, [(Monomial::new(2, 1), 2), (Monomial::ONE, 3), (Monomial::new(0, 1), 1)]);
        assert_eq!(q.to_string(), "(0x3) + (0x1)*y + (0x2)*x^2*y");
        assert_eq!(parse(f4, &q.to_string()).unwrap(), q);
    }

    #[test]
    fn lenient_input() {
        let f2 = FieldSpec::gf2();
        let a = parse(f2, "  x^6y^4 +x y+ 1").unwrap();
        let b = parse(f2, "x^6*y^4 + x*y + 1").unwrap();
        assert_eq!(a, b);
        assert!(parse(f2, "x + + y").is_err());
        assert!(parse(f2, "x + 2").is_err());
        assert!(parse(f2, "x ^").is_err());
        assert!(parse(f2, "x y z").is_err());
        assert_eq!(parse(f2, "x + x").unwrap(), BiPoly::zero(f2));
        assert!(parse(make_field(2).unwrap(), "(0x7)*x").is_err());
    }
}
