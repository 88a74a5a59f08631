//! Existence of a category-𝒪 module supported at a single marked point.
//!
//! For a point with stabilizer `Z_n` and parameters `c_1, …, c_{n-1}` such a
//! module exists iff for some positive integers `a, b`
//!
//! ```text
//! a = 2 Σ_j (1 - ζ^{ja}) / (1 - ζ^j) · ζ^{jb} · c_j,    ζ = ζ_n.
//! ```
//!
//! The right side depends only on `(a mod n, b mod n)`, so the search is finite.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::decision::Decision;
use crate::exactnum::{CycClass, CycNum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointWitness {
    pub a: u64,
    pub b: u64,
}

impl fmt::Display for PointWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={}", self.a, self.b)
    }
}

/// Right side evaluated through geometric sums `Σ_{t<a} ζ^{jt}`; `a` taken mod `n`.
fn rhs_residue(n: u32, c_row: &[CycNum], a: u32, b: u32) -> CycNum {
    let mut acc = CycNum::zero(n);
    for (j, c) in (1..n).zip(c_row) {
        let geom = CycNum::from_terms(
            n,
            (0..a as i64).map(|t| ((j * t as u32) as i64, num_traits::One::one())),
        );
        let w = &geom * &CycNum::root_of_unity(n, (j as i64) * b as i64);
        acc = &acc + &(&w * c);
    }
    acc.scale_int(2)
}

/// Right side at actual integers `a, b`, through the division form.
pub fn point_support_value(n: u32, c_row: &[CycNum], a: u64, b: u64) -> CycNum {
    let mut acc = CycNum::zero(n);
    let nn = n as u64;
    for (j, c) in (1..n).zip(c_row) {
        let num = &CycNum::one(n) - &CycNum::root_of_unity(n, ((j as u64 * a) % nn) as i64);
        let den = &CycNum::one(n) - &CycNum::root_of_unity(n, j as i64);
        let ratio = num.checked_div(&den).expect("1 - ζ^j is nonzero for 0 < j < n");
        let w = &ratio * &CycNum::root_of_unity(n, ((j as u64 * b) % nn) as i64);
        acc = &acc + &(&w * c);
    }
    acc.scale_int(2)
}

/// Decides the point-support condition; total (never `UnknownUpTo`).
///
/// The witness is the smallest `a`, then the smallest positive `b`.
pub fn point_support_witness(n: u32, c_row: &[CycNum]) -> Decision<PointWitness> {
    assert!(n >= 2, "stabilizer order must be at least 2");
    assert_eq!(c_row.len(), n as usize - 1, "need n-1 parameters");
    let modulus = BigInt::from(n);
    let mut best: Option<PointWitness> = None;
    for a0 in 0..n {
        for b0 in 0..n {
            let CycClass::RationalInteger(r) = rhs_residue(n, c_row, a0, b0).classify() else {
                continue;
            };
            if !r.is_positive() || r.mod_floor(&modulus) != BigInt::from(a0) {
                continue;
            }
            let Some(a) = r.to_u64() else { continue };
            let b = if b0 == 0 { n as u64 } else { b0 as u64 };
            let w = PointWitness { a, b };
            if best.is_none_or(|cur| w < cur) {
                best = Some(w);
            }
        }
    }
    best.map_or(Decision::No, Decision::Yes)
}

/// Replays a witness through the raw formula.
pub fn verify_point_witness(n: u32, c_row: &[CycNum], w: PointWitness) -> bool {
    w.a > 0 && w.b > 0 && point_support_value(n, c_row, w.a, w.b) == CycNum::from_int(w.a as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn c(v: i64, d: i64) -> CycNum {
        CycNum::from_rat(rat(v, d))
    }

    #[test]
    fn order_two_examples() {
        assert_eq!(point_support_witness(2, &[c(0, 1)]), Decision::No);
        assert_eq!(
            point_support_witness(2, &[c(1, 2)]),
            Decision::Yes(PointWitness { a: 1, b: 2 })
        );
        assert_eq!(point_support_witness(2, &[c(1, 1)]), Decision::No);
        // 2c = -3: r = -2c (-1)^b... odd b gives r = 3
        assert_eq!(
            point_support_witness(2, &[c(-3, 2)]),
            Decision::Yes(PointWitness { a: 3, b: 1 })
        );
    }

    #[test]
    fn periodic_in_a_and_b() {
        let row = [c(1, 3), c(-2, 5)];
        for a in 0..6u64 {
            for b in 0..6u64 {
                let v = point_support_value(3, &row, a, b);
                assert_eq!(v, point_support_value(3, &row, a + 3, b));
                assert_eq!(v, point_support_value(3, &row, a, b + 3));
                assert_eq!(v, rhs_residue(3, &row, (a % 3) as u32, (b % 3) as u32));
            }
        }
    }

    #[test]
    fn witnesses_replay() {
        let rows: Vec<(u32, Vec<CycNum>)> = vec![
            (2, vec![c(5, 2)]),
            (3, vec![c(1, 2), c(1, 2)]),
            (4, vec![c(1, 4), c(0, 1), c(1, 4)]),
            (3, vec![CycNum::root_of_unity(3, 1), c(1, 3)]),
        ];
        for (n, row) in rows {
            if let Decision::Yes(w) = point_support_witness(n, &row) {
                assert!(verify_point_witness(n, &row, w), "n={n} {w}");
            }
        }
    }

    #[test]
    fn irrational_parameters_do_not_count() {
        // ζ_5 is not a rational multiple of anything in Q(ζ_2)
        let row = [CycNum::root_of_unity(5, 1)];
        assert_eq!(point_support_witness(2, &row), Decision::No);
    }
}
