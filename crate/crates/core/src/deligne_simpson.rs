//! Genus zero: the ξ-exponent of a root, the strict-root criterion, and the
//! Crawley-Boevey decomposition test for the multiplicative Deligne-Simpson
//! problem.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::certificate::Certificate;
use crate::decision::Decision;
use crate::error::{EngineError, Result};
use crate::exactnum::{CycNum, Rat};
use crate::genus::Bounds;
use crate::orbifold::{tau_from_c_eta, CParams, EtaSign, ExponentSet, OrbifoldCurve};
use crate::point_support::point_support_witness;
use crate::star_roots::{
    build_star, classify, delta, is_root, positive_roots_up_to, KacMoodyType, RootKind, RootVector,
    StarQuiver,
};

fn check_shape(e: &ExponentSet, alpha: &RootVector) -> Result<()> {
    let lens: Vec<u32> = alpha.leg_lengths().iter().map(|l| l + 1).collect();
    e.check_orders(&lens)
}

/// `E(α) = Σ_ij (α_{i,j-1} - α_ij) e_ij`, so that `ξ^[α] = exp(2πi E(α))`.
pub fn xi_exponent(e: &ExponentSet, alpha: &RootVector) -> Result<CycNum> {
    check_shape(e, alpha)?;
    let mut acc = CycNum::zero(1);
    for (i, row) in e.rows().iter().enumerate() {
        for (j, eij) in (1..).zip(row) {
            let k = alpha.leg(i, j - 1) - alpha.leg(i, j);
            if k != 0 {
                acc = &acc + &eij.scale_int(k);
            }
        }
    }
    Ok(acc)
}

/// Per-vertex weights `w_v` with `E(α) = Σ_v α_v w_v`, all in one common order.
#[derive(Clone, Debug)]
pub struct ExponentWeights {
    order: u32,
    weights: Vec<CycNum>,
}

impl ExponentWeights {
    pub fn new(q: &StarQuiver, e: &ExponentSet) -> Result<Self> {
        e.check_orders(&q.orders())?;
        let order = e.rows().iter().flatten().fold(1u32, |acc, x| acc.lcm(&x.order()));
        let lift = |x: &CycNum| x.promote(order);
        let mut weights = vec![CycNum::zero(order); q.num_vertices()];
        for (i, row) in e.rows().iter().enumerate() {
            weights[0] = &weights[0] + &lift(&row[0]);
            for j in 1..row.len() {
                weights[q.vertex(i, j)] = &lift(&row[j]) - &lift(&row[j - 1]);
            }
        }
        Ok(ExponentWeights { order, weights })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self, alpha: &RootVector) -> CycNum {
        let mut acc = CycNum::zero(self.order);
        for (w, &a) in self.weights.iter().zip(alpha.coeffs()) {
            if a != 0 {
                acc = &acc + &w.scale_int(a);
            }
        }
        acc
    }
}

/// Least `k ≥ k_min` with `a + k·d ∈ Z`; both values must share one order.
fn least_k(a: &CycNum, d: &CycNum, k_min: &BigInt) -> Option<BigInt> {
    let (ac, dc) = (a.coeffs(), d.coeffs());
    // irrational coordinates pin k down to at most one value
    let mut pinned: Option<Rat> = None;
    for (x, y) in ac[1..].iter().zip(&dc[1..]) {
        if y.is_zero() {
            if !x.is_zero() {
                return None;
            }
            continue;
        }
        let k = -(x / y);
        match &pinned {
            Some(p) if *p != k => return None,
            _ => pinned = Some(k),
        }
    }
    if let Some(k) = pinned {
        if !k.is_integer() || k.to_integer() < *k_min {
            return None;
        }
        let k = k.to_integer();
        let c = &ac[0] + &dc[0] * Rat::from_integer(k.clone());
        return c.is_integer().then_some(k);
    }
    // k·p/q + r/s ∈ Z, i.e. a linear congruence modulo lcm(q, s)
    let (r, p) = (&ac[0], &dc[0]);
    if p.is_zero() {
        return r.is_integer().then(|| k_min.clone());
    }
    let l = p.denom().lcm(r.denom());
    let coef = (p.numer() * &l / p.denom()).mod_floor(&l);
    let rhs = (-(r.numer() * &l / r.denom())).mod_floor(&l);
    let g = coef.gcd(&l);
    if !(&rhs % &g).is_zero() {
        return None;
    }
    let modulus = &l / &g;
    let base = if modulus.is_one() {
        BigInt::zero()
    } else {
        let inv = (&coef / &g).extended_gcd(&modulus).x.mod_floor(&modulus);
        (&rhs / &g * inv).mod_floor(&modulus)
    };
    let shift = (k_min - &base).div_ceil(&modulus).max(BigInt::zero());
    Some(base + shift * modulus)
}

/// A strict positive root with `ξ^[α] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictWitness {
    pub root: RootVector,
    pub exponent: CycNum,
    /// `Some(k)` when the root is `kδ`.
    pub delta_multiple: Option<i64>,
}

impl fmt::Display for StrictWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.delta_multiple {
            Some(1) => write!(f, "strict-root δ={}, E={}", self.root, self.exponent),
            Some(k) => write!(f, "strict-root {k}δ={}, E={}", self.root, self.exponent),
            None => write!(f, "strict-root α={}, E={}", self.root, self.exponent),
        }
    }
}

fn finite_height_bound(q: &StarQuiver) -> u64 {
    let n = q.num_vertices() as u64;
    n * n + 1
}

fn witness(w: &ExponentWeights, root: RootVector, delta_multiple: Option<i64>) -> StrictWitness {
    let exponent = w.exponent(&root).minimize();
    StrictWitness { root, exponent, delta_multiple }
}

/// Searches for a strict positive root `α` with `E(α) ∈ Z`.
///
/// Finite and affine types are decided outright. In affine type a multiple of
/// `δ` is returned whenever one works; otherwise the least real root. In
/// indefinite type the least root up to `height_bound` is returned.
pub fn strict_root_search(
    q: &StarQuiver,
    e: &ExponentSet,
    height_bound: u64,
) -> Result<Decision<StrictWitness>> {
    let w = ExponentWeights::new(q, e)?;
    let first_strict = |roots: Vec<(RootVector, RootKind)>| {
        roots
            .into_iter()
            .map(|(r, _)| r)
            .find(|r| r.is_strict() && w.exponent(r).is_rational_integer())
    };
    match classify(q) {
        KacMoodyType::Finite => Ok(first_strict(positive_roots_up_to(q, finite_height_bound(q)))
            .map_or(Decision::No, |r| Decision::Yes(witness(&w, r, None)))),
        KacMoodyType::Indefinite => Ok(first_strict(positive_roots_up_to(q, height_bound))
            .map_or(Decision::UnknownUpTo(height_bound), |r| Decision::Yes(witness(&w, r, None)))),
        KacMoodyType::Affine => {
            let d = delta(q)?;
            let ed = w.exponent(&d);
            let zero = CycNum::zero(w.order());
            if let Some(k) = least_k(&zero, &ed, &BigInt::one()).and_then(|k| k.to_i64()) {
                return Ok(Decision::Yes(witness(&w, d.scaled(k), Some(k))));
            }
            // every positive real root is β + kδ, k ≥ 0, for a unique real β of height < ht(δ)
            let reps = positive_roots_up_to(q, (d.height() - 1) as u64);
            let best = reps
                .into_iter()
                .filter(|(_, kind)| *kind == RootKind::Real)
                .filter_map(|(beta, _)| {
                    let k_min = BigInt::from(if beta.is_strict() { 0 } else { 1 });
                    let k = least_k(&w.exponent(&beta), &ed, &k_min)?.to_i64()?;
                    Some(&beta + &d.scaled(k))
                })
                .min();
            Ok(best.map_or(Decision::No, |r| Decision::Yes(witness(&w, r, None))))
        }
    }
}

/// Checks a strict-root witness against the exponents alone.
pub fn verify_strict_witness(e: &ExponentSet, w: &StrictWitness) -> bool {
    let Ok(exponent) = xi_exponent(e, &w.root) else { return false };
    let q = StarQuiver::from_leg_lengths(w.root.leg_lengths().to_vec());
    let delta_ok = match w.delta_multiple {
        None => true,
        Some(k) => delta(&q).is_ok_and(|d| d.scaled(k) == w.root),
    };
    w.root.is_strict()
        && is_root(&q, &w.root) != RootKind::NotRoot
        && exponent.is_rational_integer()
        && exponent == w.exponent
        && delta_ok
}

/// Deligne-Simpson data: eigenvalue exponents and the rank vector `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSInstance {
    quiver: StarQuiver,
    e: ExponentSet,
    alpha: RootVector,
}

impl DSInstance {
    pub fn new(e: ExponentSet, alpha: RootVector) -> Result<Self> {
        let quiver = build_star(&e.orders())?;
        if alpha.leg_lengths() != quiver.leg_lengths() {
            return Err(EngineError::IndexMismatch(format!(
                "alpha {alpha} does not fit legs {:?}",
                quiver.leg_lengths()
            )));
        }
        if alpha.center() < 1 {
            return Err(EngineError::InvalidInstance("alpha_0 = d must be at least 1".into()));
        }
        for (i, &len) in quiver.leg_lengths().iter().enumerate() {
            for j in 1..=len as usize {
                if alpha.leg(i, j) < 0 || alpha.leg(i, j) > alpha.leg(i, j - 1) {
                    return Err(EngineError::InvalidInstance(format!(
                        "ranks along leg {} must be nonincreasing and nonnegative",
                        i + 1
                    )));
                }
            }
        }
        Ok(DSInstance { quiver, e, alpha })
    }

    pub fn quiver(&self) -> &StarQuiver {
        &self.quiver
    }

    pub fn exponents(&self) -> &ExponentSet {
        &self.e
    }

    pub fn alpha(&self) -> &RootVector {
        &self.alpha
    }

    pub fn dimension(&self) -> i64 {
        self.alpha.center()
    }
}

/// `α = β + γ + ⋯` with every part a positive root of integral exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSCertificate {
    pub parts: Vec<RootVector>,
}

impl fmt::Display for DSCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "cb {}", parts.join(" + "))
    }
}

/// Positive roots `β ≤ α` with `E(β) ∈ Z`, in root order.
pub fn integral_roots_below(inst: &DSInstance) -> Result<Vec<RootVector>> {
    let w = ExponentWeights::new(&inst.quiver, &inst.e)?;
    Ok(positive_roots_up_to(&inst.quiver, inst.alpha.height() as u64)
        .into_iter()
        .map(|(r, _)| r)
        .filter(|r| r.le(&inst.alpha) && w.exponent(r).is_rational_integer())
        .collect())
}

/// Decides whether `α` is a sum of positive roots with integral exponents.
///
/// Total, except that a lattice box `[0, α]` larger than `box_cap` points is
/// not searched and yields `UnknownUpTo(box_cap)`.
pub fn cb_solvable(inst: &DSInstance, box_cap: u64) -> Result<Decision<DSCertificate>> {
    let alpha = inst.alpha.coeffs();
    let volume = alpha
        .iter()
        .try_fold(1u64, |acc, &a| acc.checked_mul(a as u64 + 1))
        .filter(|&v| v <= box_cap);
    let Some(volume) = volume else { return Ok(Decision::UnknownUpTo(box_cap)) };
    let roots = integral_roots_below(inst)?;

    let mut strides = Vec::with_capacity(alpha.len());
    let mut s = 1usize;
    for &a in alpha {
        strides.push(s);
        s *= a as usize + 1;
    }
    let index = |v: &[i64]| v.iter().zip(&strides).map(|(&x, &st)| x as usize * st).sum::<usize>();
    let root_idx: Vec<usize> = roots.iter().map(|r| index(r.coeffs())).collect();

    let mut reach = vec![false; volume as usize];
    reach[0] = true;
    let mut point = vec![0i64; alpha.len()];
    for idx in 1..volume as usize {
        // advance the mixed-radix counter to idx
        for (k, &a) in alpha.iter().enumerate() {
            if point[k] < a {
                point[k] += 1;
                break;
            }
            point[k] = 0;
        }
        reach[idx] = roots.iter().zip(&root_idx).any(|(r, &ri)| {
            r.coeffs().iter().zip(&point).all(|(x, y)| x <= y) && reach[idx - ri]
        });
    }

    let top = volume as usize - 1;
    if !reach[top] {
        return Ok(Decision::No);
    }
    let mut parts = Vec::new();
    let mut rest = inst.alpha.clone();
    let mut at = top;
    while at != 0 {
        let (r, &ri) = roots
            .iter()
            .zip(&root_idx)
            .find(|&(r, &ri)| r.le(&rest) && reach[at - ri])
            .expect("reachable point has a reachable predecessor");
        parts.push(r.clone());
        rest = &rest - r;
        at -= ri;
    }
    Ok(Decision::Yes(DSCertificate { parts }))
}

/// Replays a decomposition: parts sum to `α`, are positive roots, have integral exponents.
pub fn verify_ds_certificate(inst: &DSInstance, cert: &DSCertificate) -> bool {
    let Some(first) = cert.parts.first() else { return false };
    let sum = cert.parts[1..].iter().fold(first.clone(), |acc, p| &acc + p);
    sum == inst.alpha
        && cert.parts.iter().all(|p| {
            is_root(&inst.quiver, p) != RootKind::NotRoot
                && p.is_nonnegative()
                && xi_exponent(&inst.e, p).is_ok_and(|x| x.is_rational_integer())
        })
}

/// Nonvanishing of category 𝒪 for a compact curve of genus zero.
pub fn category_o_nonzero_genus0(
    curve: &OrbifoldCurve,
    p: &CParams,
    bounds: &Bounds,
    sign: EtaSign,
) -> Result<Decision<Certificate>> {
    p.check(curve)?;
    if !curve.is_compact() || curve.genus() != 0 {
        return Err(EngineError::Routing(format!(
            "genus-0 criterion needs a compact genus-0 curve, got genus {}{}",
            curve.genus(),
            if curve.is_compact() { "" } else { " (noncompact)" }
        )));
    }
    for (i, &n) in curve.points().iter().enumerate() {
        if let Decision::Yes(w) = point_support_witness(n, p.c_row(i)) {
            return Ok(Decision::Yes(Certificate::PointSupport { point: i + 1, witness: w }));
        }
    }
    let e = tau_from_c_eta(curve, p, sign)?;
    if curve.points().is_empty() {
        // the sphere itself: the trivial one-dimensional module
        let q = StarQuiver::from_leg_lengths(Vec::new());
        let root = q.simple_root(0);
        return Ok(Decision::Yes(Certificate::StrictRoot(StrictWitness {
            root,
            exponent: CycNum::zero(1),
            delta_multiple: None,
        })));
    }
    let q = build_star(curve.points())?;
    Ok(strict_root_search(&q, &e, bounds.height)?.map(Certificate::StrictRoot))
}
