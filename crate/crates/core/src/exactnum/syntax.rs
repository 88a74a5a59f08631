//! Text syntax: `p/q`, `p`, or `cyc(n)[k1:p1/q1, k2:p2/q2, ...]`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{CycNum, ExactError, Rat};

fn syntax_err(text: &str, reason: impl Into<String>) -> ExactError {
    ExactError::Syntax { text: text.to_string(), reason: reason.into() }
}

pub fn parse_rat(text: &str) -> Result<Rat, ExactError> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| syntax_err(text, "bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| syntax_err(text, "bad denominator"))?;
    if den.is_zero() {
        return Err(syntax_err(text, "zero denominator"));
    }
    Ok(Rat::new(num, den))
}

pub fn parse_cyc(text: &str) -> Result<CycNum, ExactError> {
    let t = text.trim();
    let Some(rest) = t.strip_prefix("cyc(") else {
        return parse_rat(t).map(CycNum::from_rat);
    };
    let (order, rest) = rest.split_once(')').ok_or_else(|| syntax_err(text, "missing `)`"))?;
    let order: u32 = order.trim().parse().map_err(|_| syntax_err(text, "bad order"))?;
    if order == 0 {
        return Err(syntax_err(text, "order must be positive"));
    }
    let body = rest
        .trim()
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| syntax_err(text, "expected `[...]` after order"))?;
    let mut terms = Vec::new();
    for term in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, c) = term.split_once(':').ok_or_else(|| syntax_err(text, "term needs `k:coeff`"))?;
        let k: i64 = k.trim().parse().map_err(|_| syntax_err(text, "bad exponent"))?;
        terms.push((k, parse_rat(c)?));
    }
    Ok(CycNum::from_terms(order, terms))
}
