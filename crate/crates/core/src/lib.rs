//! Finite-field and plane-curve toolkit for APN power functions x^t over
//! GF(2^n): field arithmetic, the curves attached to x^t, exhaustive APN and
//! codeword scans, singularity classification, intersection-count audits and
//! bounded factor searches.

pub mod acceptance;
pub mod apncode;
pub mod arith;
pub mod bezout;
pub mod bipoly;
pub mod curves;
pub mod error;
pub mod factorlab;
pub mod field;
pub mod singular;
pub mod tables;
pub mod unipoly;

pub use bipoly::{BiPoly, Monomial};
pub use error::{Error, Result};
pub use field::{make_field, FieldElement, FieldSpec};
