//! Dense univariate polynomials over `Q`, coefficients stored low degree first.

use num_traits::{One, Zero};

use super::Rat;

pub(crate) type Poly = Vec<Rat>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[Rat], b: &[Rat]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[Rat], b: &[Rat]) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; panics on a zero divisor.
pub(crate) fn divrem(a: &[Rat], b: &[Rat]) -> (Poly, Poly) {
    let db = degree(b).expect("polynomial division by zero");
    let lead = b[db].clone();
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let factor = &rem[dr] / &lead;
        let shift = dr - db;
        for (k, c) in b[..=db].iter().enumerate() {
            if !c.is_zero() {
                rem[shift + k] -= &factor * c;
            }
        }
        quot[shift] = factor;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
/// Returns `None` when `gcd(a, m) != 1`.
pub(crate) fn inverse_mod(a: &[Rat], m: &[Rat]) -> Option<Poly> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rat::one()]);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = r0[0].clone();
    let (_, inv) = divrem(&s0, m);
    Some(inv.into_iter().map(|x| x / &c).collect())
}
