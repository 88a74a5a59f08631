use std::fmt;

use crate::deligne_simpson::{verify_strict_witness, StrictWitness};
use crate::exactnum::CycNum;
use crate::genus::{determinant_exponent, MultiplicityVector};
use crate::orbifold::{tau_from_c_eta, CParams, EtaSign, OrbifoldCurve};
use crate::point_support::{verify_point_witness, PointWitness};

/// Evidence that category 𝒪 is nonzero, checkable without the search code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The curve has punctures; the free generators at infinity absorb the product relation.
    Noncompact { punctures: u32 },
    /// A module supported at point `point` (1-based).
    PointSupport { point: usize, witness: PointWitness },
    /// Multiplicities satisfying the determinant condition (genus ≥ 1).
    Determinant { mv: MultiplicityVector, exponent: CycNum },
    /// A strict positive root with trivial `ξ^[α]` (genus 0).
    StrictRoot(StrictWitness),
}

impl Certificate {
    /// Name of the criterion the certificate satisfies.
    pub fn criterion(&self) -> &'static str {
        match self {
            Certificate::Noncompact { .. } => "noncompact",
            Certificate::PointSupport { .. } => "point-support",
            Certificate::Determinant { .. } => "determinant",
            Certificate::StrictRoot(_) => "strict-root",
        }
    }

    /// Re-checks the certificate against the raw input.
    pub fn replay(&self, curve: &OrbifoldCurve, p: &CParams, sign: EtaSign) -> bool {
        match self {
            Certificate::Noncompact { punctures } => {
                !curve.is_compact() && *punctures == curve.punctures()
            }
            Certificate::PointSupport { point, witness } => {
                let Some(&n) = point.checked_sub(1).and_then(|i| curve.points().get(i)) else {
                    return false;
                };
                verify_point_witness(n, p.c_row(point - 1), *witness)
            }
            Certificate::Determinant { mv, exponent } => {
                let Ok(e) = tau_from_c_eta(curve, p, sign) else { return false };
                curve.is_compact()
                    && curve.genus() >= 1
                    && determinant_exponent(&e, mv)
                        .is_ok_and(|x| x.is_rational_integer() && x == *exponent)
            }
            Certificate::StrictRoot(w) => {
                if !curve.is_compact() || curve.genus() != 0 {
                    return false;
                }
                if curve.points().is_empty() {
                    return w.root.coeffs() == [1] && w.exponent.is_zero();
                }
                tau_from_c_eta(curve, p, sign).is_ok_and(|e| verify_strict_witness(&e, w))
            }
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Noncompact { punctures } => write!(f, "noncompact punctures={punctures}"),
            Certificate::PointSupport { point, witness } => {
                write!(f, "point-support point={point} {witness}")
            }
            Certificate::Determinant { mv, exponent } => write!(f, "det {mv}, E={exponent}"),
            Certificate::StrictRoot(w) => w.fmt(f),
        }
    }
}
