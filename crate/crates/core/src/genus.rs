//! Compact curves of genus ≥ 1, and noncompact curves.
//!
//! For `g ≥ 1` the only obstruction to a `d`-dimensional Hecke module with
//! prescribed eigenvalue multiplicities `m_ij` is the determinant condition
//! `Π_ij ξ_ij^{m_ij} = 1`, i.e. `Σ m_ij e_ij ∈ Z`. The search below walks
//! `d = 1, 2, …` and returns the least witness; it never answers a hard `No`.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use crate::certificate::Certificate;
use crate::decision::Decision;
use crate::error::{EngineError, Result};
use crate::exactnum::{CycNum, Rat};
use crate::orbifold::{tau_from_c_eta, CParams, EtaSign, ExponentSet, OrbifoldCurve};
use crate::point_support::point_support_witness;

/// Search limits shared by the decision procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest representation dimension tried by the determinant search.
    pub d_max: u64,
    /// Height bound for root enumeration in indefinite type.
    pub height: u64,
    /// Cap on distinct exponent residues held by the determinant search.
    pub state_cap: usize,
    /// Cap on the lattice box volume of the decomposition search.
    pub box_cap: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { d_max: 24, height: 60, state_cap: 1 << 20, box_cap: 1 << 22 }
    }
}

/// Eigenvalue multiplicities `m_ij ≥ 0`, `Σ_j m_ij = d` for every point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityVector {
    d: u64,
    m: Vec<Vec<u64>>,
}

impl MultiplicityVector {
    pub fn new(d: u64, m: Vec<Vec<u64>>) -> Result<Self> {
        if d == 0 {
            return Err(EngineError::InvalidInstance("dimension must be positive".into()));
        }
        if let Some((i, _)) = m.iter().enumerate().find(|(_, row)| row.iter().sum::<u64>() != d) {
            return Err(EngineError::InvalidInstance(format!(
                "multiplicities at point {} do not sum to d = {d}",
                i + 1
            )));
        }
        Ok(MultiplicityVector { d, m })
    }

    /// From rank sequences `α_i0 = d ≥ α_i1 ≥ … ≥ α_{i n_i} = 0`, one per point
    /// (each given without the leading `d` and trailing `0`).
    pub fn from_ranks(d: u64, ranks: &[Vec<u64>]) -> Result<Self> {
        let m = ranks
            .iter()
            .map(|r| {
                let mut full = vec![d];
                full.extend_from_slice(r);
                full.push(0);
                full.windows(2)
                    .map(|w| {
                        w[0].checked_sub(w[1]).ok_or_else(|| {
                            EngineError::InvalidInstance("rank sequence increases".into())
                        })
                    })
                    .collect::<Result<Vec<u64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(d, m)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.m
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "d={} m=({})", self.d, rows.join(";"))
    }
}

/// `Σ_ij m_ij e_ij`.
pub fn determinant_exponent(e: &ExponentSet, mv: &MultiplicityVector) -> Result<CycNum> {
    let lens: Vec<u32> = mv.m.iter().map(|r| r.len() as u32).collect();
    e.check_orders(&lens)?;
    Ok(e.rows()
        .iter()
        .zip(&mv.m)
        .flat_map(|(er, mr)| er.iter().zip(mr).map(|(x, &k)| x.scale_int(k as i64)))
        .sum())
}

/// Determinant condition `Π_ij ξ_ij^{m_ij} = 1`.
pub fn det_condition(e: &ExponentSet, mv: &MultiplicityVector) -> Result<bool> {
    Ok(determinant_exponent(e, mv)?.is_rational_integer())
}

/// Compositions of `d` into `parts` nonnegative parts, mass on the first
/// entries first: `(d,0,…)`, `(d-1,1,0,…)`, …, `(0,…,0,d)`.
fn compositions(d: u64, parts: usize) -> Vec<Vec<u64>> {
    fn go(left: u64, parts: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=left).rev() {
            cur.push(first);
            go(left - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(d, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// Residue of an exponent modulo `Z`, as coordinates in a fixed common order.
type Residue = Vec<Rat>;

fn residue_add(a: &[Rat], b: &[Rat]) -> Residue {
    let mut out: Residue = a.iter().zip(b).map(|(x, y)| x + y).collect();
    out[0] = &out[0] - out[0].floor();
    out
}

fn residue_neg(a: &[Rat]) -> Residue {
    let mut out: Residue = a.iter().map(|x| -x).collect();
    out[0] = &out[0] - out[0].floor();
    out
}

/// Least witness of dimension exactly `d`, or `Err(())` if the residue cap was hit.
fn witness_at_dim(
    lifted: &[Vec<CycNum>],
    order: u32,
    d: u64,
    state_cap: usize,
) -> std::result::Result<Option<MultiplicityVector>, ()> {
    let zero = CycNum::zero(order).coeffs().to_vec();
    let per_point: Vec<Vec<(Vec<u64>, Residue)>> = lifted
        .iter()
        .map(|row| {
            compositions(d, row.len())
                .into_iter()
                .map(|comp| {
                    let s: CycNum = row
                        .iter()
                        .zip(&comp)
                        .map(|(x, &k)| x.scale_int(k as i64))
                        .fold(CycNum::zero(order), |acc, x| &acc + &x);
                    let key = s.mod_one().coeffs().to_vec();
                    (comp, key)
                })
                .collect()
        })
        .collect();

    // reach[i]: residues realizable by points i.. (suffix sums)
    let m = lifted.len();
    let mut reach: Vec<HashSet<Residue>> = vec![HashSet::new(); m + 1];
    reach[m].insert(zero.clone());
    for i in (0..m).rev() {
        let keys: HashSet<&Residue> = per_point[i].iter().map(|(_, k)| k).collect();
        let mut next = HashSet::new();
        for k in keys {
            for r in &reach[i + 1] {
                next.insert(residue_add(k, r));
                if next.len() > state_cap {
                    return Err(());
                }
            }
        }
        reach[i] = next;
    }
    if !reach[0].contains(&zero) {
        return Ok(None);
    }
    // greedy: earliest composition per point that keeps the remainder reachable
    let mut needed = zero;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let (comp, key) = per_point[i]
            .iter()
            .find(|(_, k)| reach[i + 1].contains(&residue_add(&needed, &residue_neg(k))))
            .expect("reachable residue has a realizing composition");
        needed = residue_add(&needed, &residue_neg(key));
        rows.push(comp.clone());
    }
    Ok(Some(MultiplicityVector { d, m: rows }))
}

/// Smallest-`d` multiplicity vector satisfying the determinant condition.
///
/// Within one `d` the witness is the first in the order that puts mass on
/// earlier eigenvalues first, points compared in order.
pub fn exists_findim_genus_ge1(e: &ExponentSet, d_max: u64) -> Decision<MultiplicityVector> {
    exists_findim_with_cap(e, d_max, Bounds::default().state_cap)
}

pub fn exists_findim_with_cap(
    e: &ExponentSet,
    d_max: u64,
    state_cap: usize,
) -> Decision<MultiplicityVector> {
    let order = e.rows().iter().flatten().fold(1u32, |acc, x| acc.lcm(&x.order()));
    let lifted: Vec<Vec<CycNum>> =
        e.rows().iter().map(|r| r.iter().map(|x| x.promote(order)).collect()).collect();
    for d in 1..=d_max {
        match witness_at_dim(&lifted, order, d, state_cap) {
            Ok(Some(mv)) => return Decision::Yes(mv),
            Ok(None) => {}
            Err(()) => return Decision::UnknownUpTo(d - 1),
        }
    }
    Decision::UnknownUpTo(d_max)
}

/// Nonvanishing of category 𝒪 for a noncompact curve, or a compact curve of
/// genus at least one.
pub fn category_o_nonzero(
    curve: &OrbifoldCurve,
    p: &CParams,
    bounds: &Bounds,
    sign: EtaSign,
) -> Result<Decision<Certificate>> {
    p.check(curve)?;
    if !curve.is_compact() {
        return Ok(Decision::Yes(Certificate::Noncompact { punctures: curve.punctures() }));
    }
    if curve.genus() == 0 {
        return Err(EngineError::Routing(
            "compact genus-0 curves go through the strict-root criterion".into(),
        ));
    }
    for (i, &n) in curve.points().iter().enumerate() {
        if let Decision::Yes(w) = point_support_witness(n, p.c_row(i)) {
            return Ok(Decision::Yes(Certificate::PointSupport { point: i + 1, witness: w }));
        }
    }
    let e = tau_from_c_eta(curve, p, sign)?;
    Ok(match exists_findim_with_cap(&e, bounds.d_max, bounds.state_cap) {
        Decision::Yes(mv) => {
            let exponent = determinant_exponent(&e, &mv)?;
            Decision::Yes(Certificate::Determinant { mv, exponent })
        }
        Decision::No => Decision::No,
        Decision::UnknownUpTo(b) => Decision::UnknownUpTo(b),
    })
}
