//! Rank-`n` generalized double affine Hecke algebras over an elliptic curve:
//! the parameter dictionary `(μ, ν) → τ` and the real roots `β` of the
//! affine quiver with `Σ b_v μ_v ∈ Z`.
//!
//! The nonvanishing criterion itself is a weight-space condition on an
//! integrable module and is not evaluated; reports carry its exact inputs.

use std::fmt::Write as _;

use crate::decision::Decision;
use crate::error::{EngineError, Result};
use crate::exactnum::{CycNum, Rat};
use crate::orbifold::ExponentSet;
use crate::star_roots::{classify, delta, positive_roots_up_to, KacMoodyType, RootKind, RootVector, StarQuiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathParams {
    /// Rank `n` of the wreath product.
    pub n: u32,
    pub mu0: Rat,
    /// `mu[i][p-1] = μ_{ip}` for `p = 1..n_i-1`.
    pub mu: Vec<Vec<Rat>>,
    pub nu: Rat,
    /// Offsets `ξ_i`, summing to zero.
    pub xi: Vec<Rat>,
    /// Supplied by the user; never checked.
    pub spherical_asserted: bool,
}

impl WreathParams {
    /// All-zero parameters shaped for `q`.
    pub fn zero(q: &StarQuiver, n: u32) -> Self {
        WreathParams {
            n,
            mu0: Rat::from_integer(0.into()),
            mu: q.leg_lengths().iter().map(|&l| vec![Rat::from_integer(0.into()); l as usize]).collect(),
            nu: Rat::from_integer(0.into()),
            xi: vec![Rat::from_integer(0.into()); q.num_legs()],
            spherical_asserted: false,
        }
    }

    pub fn check(&self, q: &StarQuiver) -> Result<()> {
        if self.n == 0 {
            return Err(EngineError::InvalidInstance("rank n must be positive".into()));
        }
        let lens: Vec<usize> = self.mu.iter().map(Vec::len).collect();
        let want: Vec<usize> = q.leg_lengths().iter().map(|&l| l as usize).collect();
        if lens != want || self.xi.len() != q.num_legs() {
            return Err(EngineError::IndexMismatch(format!(
                "mu/xi shape {lens:?}/{} does not match legs {want:?}",
                self.xi.len()
            )));
        }
        if self.xi.iter().sum::<Rat>() != Rat::from_integer(0.into()) {
            return Err(EngineError::InvalidInstance("xi offsets must sum to 0".into()));
        }
        Ok(())
    }

    /// `μ_v` per vertex: `μ_0` at the center, `μ_{ip}` at leg vertex `(i, p)`.
    pub fn vertex_mu(&self) -> Vec<Rat> {
        std::iter::once(self.mu0.clone()).chain(self.mu.iter().flatten().cloned()).collect()
    }

    /// `γ_ij = Σ_{p<j} μ_ip + μ_0/m + ξ_i`, for `j = 1..n_i`.
    pub fn gamma(&self, i: usize, j: usize) -> Rat {
        let m = Rat::from_integer((self.xi.len() as i64).into());
        self.mu[i][..j - 1].iter().sum::<Rat>() + &self.mu0 / m + &self.xi[i]
    }
}

fn require_affine(q: &StarQuiver) -> Result<()> {
    if classify(q) == KacMoodyType::Affine {
        Ok(())
    } else {
        Err(EngineError::NotAffine)
    }
}

/// Exponents `e_ij = γ_ij`, with transposition exponent `1/2 - ν`.
pub fn gdaha_tau_from_mu_nu(q: &StarQuiver, w: &WreathParams) -> Result<ExponentSet> {
    require_affine(q)?;
    w.check(q)?;
    let e = q
        .orders()
        .iter()
        .enumerate()
        .map(|(i, &n)| (1..=n as usize).map(|j| CycNum::from_rat(w.gamma(i, j))).collect())
        .collect();
    let half = Rat::new(1.into(), 2.into());
    Ok(ExponentSet::new(e).with_transposition(CycNum::from_rat(half - &w.nu)))
}

/// Positive real roots up to `height_bound` with `Σ b_v μ_v ∈ Z`, in root order.
pub fn a_real_roots(q: &StarQuiver, mu_full: &[Rat], height_bound: u64) -> Result<Vec<RootVector>> {
    require_affine(q)?;
    if mu_full.len() != q.num_vertices() {
        return Err(EngineError::IndexMismatch(format!(
            "{} vertex parameters for {} vertices",
            mu_full.len(),
            q.num_vertices()
        )));
    }
    Ok(positive_roots_up_to(q, height_bound)
        .into_iter()
        .filter(|(_, kind)| *kind == RootKind::Real)
        .map(|(r, _)| r)
        .filter(|r| {
            r.coeffs()
                .iter()
                .zip(mu_full)
                .map(|(&b, m)| m * Rat::from_integer(b.into()))
                .sum::<Rat>()
                .is_integer()
        })
        .collect())
}

/// PARAMS and EXPONENTS sections.
pub fn gdaha_params_report(q: &StarQuiver, w: &WreathParams) -> Result<String> {
    let e = gdaha_tau_from_mu_nu(q, w)?;
    let d = delta(q)?;
    let mut out = String::new();
    let legs: Vec<String> = q.orders().iter().map(u32::to_string).collect();
    writeln!(out, "PARAMS").unwrap();
    writeln!(out, "orders=({}) delta={d}", legs.join(",")).unwrap();
    writeln!(out, "n={}", w.n).unwrap();
    writeln!(out, "mu0={}", w.mu0).unwrap();
    for (i, row) in w.mu.iter().enumerate() {
        let vals: Vec<String> = row.iter().map(Rat::to_string).collect();
        writeln!(out, "mu[{}]=({})", i + 1, vals.join(",")).unwrap();
    }
    writeln!(out, "nu={}", w.nu).unwrap();
    let xi: Vec<String> = w.xi.iter().map(Rat::to_string).collect();
    writeln!(out, "xi=({})", xi.join(",")).unwrap();
    writeln!(out, "spherical_asserted={}", w.spherical_asserted).unwrap();
    writeln!(out, "EXPONENTS").unwrap();
    for (i, row) in e.rows().iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            writeln!(out, "e[{}][{}]={x}", i + 1, j + 1).unwrap();
        }
    }
    if let Some(t) = e.transposition() {
        writeln!(out, "transposition={t}").unwrap();
    }
    Ok(out)
}

/// Full report: PARAMS, EXPONENTS, A-ROOTS, and the rank-`n` decision, which
/// is left unevaluated and reported as `UnknownUpTo(height_bound)`.
pub fn gdaha_report(q: &StarQuiver, w: &WreathParams, height_bound: u64) -> Result<(String, Decision<()>)> {
    let mut out = gdaha_params_report(q, w)?;
    let roots = a_real_roots(q, &w.vertex_mu(), height_bound)?;
    writeln!(out, "A-ROOTS height<={height_bound} count={}", roots.len()).unwrap();
    for r in &roots {
        writeln!(out, "{r}").unwrap();
    }
    writeln!(out, "WEIGHT omega0-{}delta not evaluated", w.n).unwrap();
    Ok((out, Decision::UnknownUpTo(height_bound)))
}
