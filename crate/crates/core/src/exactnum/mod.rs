//! Exact arithmetic over `Q` and cyclotomic fields.
//!
//! Every equality decision in the engine is a coordinate comparison on
//! [`CycNum`] values in canonical form.

mod cyc;
pub(crate) mod poly;
mod syntax;

pub use cyc::{cyclotomic_poly, divisors, totient, CycClass, CycNum};
pub use syntax::{parse_cyc, parse_rat};

use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed number `{text}`: {reason}")]
    Syntax { text: String, reason: String },
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// `ζ_n^j`.
pub fn cyc_root_of_unity(n: u32, j: i64) -> CycNum {
    CycNum::root_of_unity(n, j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn cyc_arith(a: &CycNum, b: &CycNum, op: ArithOp) -> CycNum {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

pub fn cyc_classify(a: &CycNum) -> CycClass {
    a.classify()
}
