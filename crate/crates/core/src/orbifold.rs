//! Orbifold curve data and the two parameter coordinate systems.
//!
//! Parameters `(c, η)` map to per-point exponents `e_ij = j/n_i + t_ij` with
//! `ξ_ij = exp(2πi e_ij)` the eigenvalues in the Hecke relation at `P_i`, where
//!
//! ```text
//! t_ij = (2 Σ_k c_ik (1 - ζ^{jk}) / (1 - ζ^{-k})  -  η_i) / n_i,   ζ = ζ_{n_i}.
//! ```

use std::fmt;

use crate::error::{EngineError, Result};
use crate::exactnum::{CycNum, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldCurve {
    genus: u32,
    compact: bool,
    punctures: u32,
    points: Vec<u32>,
}

impl OrbifoldCurve {
    pub fn new(genus: u32, compact: bool, punctures: u32, points: Vec<u32>) -> Result<Self> {
        if compact && punctures > 0 {
            return Err(EngineError::InvalidCurve("a compact curve has no punctures".into()));
        }
        if let Some(n) = points.iter().find(|&&n| n < 2) {
            return Err(EngineError::InvalidCurve(format!("stabilizer order {n} < 2")));
        }
        Ok(OrbifoldCurve { genus, compact, punctures, points })
    }

    /// Compact genus-`g` curve with the given stabilizer orders.
    pub fn compact(genus: u32, points: Vec<u32>) -> Result<Self> {
        Self::new(genus, true, 0, points)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_compact(&self) -> bool {
        self.compact
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    /// Stabilizer orders `n_1, …, n_m`.
    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }
}

/// Which sign `η` carries in the `(c, η) → τ` map.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EtaSign {
    /// `… − η_i`; the convention the curve theorems use.
    #[default]
    S41,
    /// `… + η(Z)`; the convention of the KZ functor formula for general varieties.
    S21,
}

impl EtaSign {
    fn factor(self) -> i64 {
        match self {
            EtaSign::S41 => -1,
            EtaSign::S21 => 1,
        }
    }
}

impl std::str::FromStr for EtaSign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "s41" => Ok(EtaSign::S41),
            "s21" => Ok(EtaSign::S21),
            other => Err(format!("unknown eta sign `{other}` (expected s41 or s21)")),
        }
    }
}

/// `c_ij` for `j = 1..n_i-1` and `η_i` per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CParams {
    c: Vec<Vec<CycNum>>,
    eta: Vec<CycNum>,
}

impl CParams {
    pub fn new(c: Vec<Vec<CycNum>>, eta: Vec<CycNum>) -> Self {
        CParams { c, eta }
    }

    pub fn zero(curve: &OrbifoldCurve) -> Self {
        let c = curve.points().iter().map(|&n| vec![CycNum::zero(1); n as usize - 1]).collect();
        CParams { c, eta: vec![CycNum::zero(1); curve.num_points()] }
    }

    /// Row `c_i1, …, c_{i,n_i-1}` (0-based `i`).
    pub fn c_row(&self, i: usize) -> &[CycNum] {
        &self.c[i]
    }

    pub fn eta(&self, i: usize) -> &CycNum {
        &self.eta[i]
    }

    pub fn rows(&self) -> &[Vec<CycNum>] {
        &self.c
    }

    pub fn etas(&self) -> &[CycNum] {
        &self.eta
    }

    pub fn check(&self, curve: &OrbifoldCurve) -> Result<()> {
        if self.c.len() != curve.num_points() || self.eta.len() != curve.num_points() {
            return Err(EngineError::IndexMismatch(format!(
                "{} points on the curve, parameters for {} (c) and {} (eta)",
                curve.num_points(),
                self.c.len(),
                self.eta.len()
            )));
        }
        for (i, (row, &n)) in self.c.iter().zip(curve.points()).enumerate() {
            if row.len() != n as usize - 1 {
                return Err(EngineError::IndexMismatch(format!(
                    "point {} has order {n} but {} c-values",
                    i + 1,
                    row.len()
                )));
            }
        }
        Ok(())
    }
}

/// Exponents `e_ij`, `j = 1..n_i`, of the multiplicative parameters
/// `ξ_ij = exp(2πi e_ij)`, plus the optional transposition exponent of the
/// rank-`n` setting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentSet {
    e: Vec<Vec<CycNum>>,
    transposition: Option<CycNum>,
}

impl ExponentSet {
    pub fn new(e: Vec<Vec<CycNum>>) -> Self {
        ExponentSet { e, transposition: None }
    }

    pub fn with_transposition(mut self, t: CycNum) -> Self {
        self.transposition = Some(t);
        self
    }

    pub fn from_rats(e: &[Vec<Rat>]) -> Self {
        Self::new(e.iter().map(|r| r.iter().cloned().map(CycNum::from_rat).collect()).collect())
    }

    /// `e_ij = j / n_i`, i.e. `τ = 0`.
    pub fn untwisted(orders: &[u32]) -> Self {
        Self::new(
            orders
                .iter()
                .map(|&n| {
                    (1..=n).map(|j| CycNum::from_rat(Rat::new(j.into(), n.into()))).collect()
                })
                .collect(),
        )
    }

    /// `e_{i,j}` with 0-based `i` and 1-based `j`.
    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.e[i][j - 1]
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.e[i]
    }

    pub fn rows(&self) -> &[Vec<CycNum>] {
        &self.e
    }

    pub fn num_points(&self) -> usize {
        self.e.len()
    }

    /// Lengths `n_i` of each row.
    pub fn orders(&self) -> Vec<u32> {
        self.e.iter().map(|r| r.len() as u32).collect()
    }

    pub fn transposition(&self) -> Option<&CycNum> {
        self.transposition.as_ref()
    }

    pub fn check_orders(&self, orders: &[u32]) -> Result<()> {
        if self.orders() != orders {
            return Err(EngineError::IndexMismatch(format!(
                "exponent rows have lengths {:?}, expected {:?}",
                self.orders(),
                orders
            )));
        }
        Ok(())
    }

    /// Adds an integer to every exponent; multiplicative parameters are unchanged.
    pub fn shift_all(&self, k: i64) -> Self {
        let k = CycNum::from_int(k);
        ExponentSet {
            e: self.e.iter().map(|r| r.iter().map(|x| x + &k).collect()).collect(),
            transposition: self.transposition.clone(),
        }
    }
}

fn frac(j: u32, n: u32) -> CycNum {
    CycNum::from_rat(Rat::new(j.into(), n.into()))
}

/// `(1 - ζ^{jk}) / (1 - ζ^{-k}) = -Σ_{t=1}^{j} ζ^{kt}` for `ζ = ζ_n`, `n ∤ k`.
fn kernel_weight(n: u32, j: u32, k: u32) -> CycNum {
    let one = Rat::from_integer((-1).into());
    CycNum::from_terms(n, (1..=j as i64).map(|t| (t * k as i64, one.clone())))
}

/// `t_ij` for one point.
fn twist_row(n: u32, c_row: &[CycNum], eta: &CycNum, sign: EtaSign) -> Vec<CycNum> {
    let inv_n = Rat::new(1.into(), n.into());
    (1..=n)
        .map(|j| {
            let mut acc = CycNum::zero(n);
            for (k, c) in (1..n).zip(c_row) {
                acc = &acc + &(c * &kernel_weight(n, j, k));
            }
            let two_sum = acc.scale_int(2);
            (&two_sum + &eta.scale_int(sign.factor())).scale(&inv_n)
        })
        .collect()
}

pub fn tau_from_c_eta(curve: &OrbifoldCurve, p: &CParams, sign: EtaSign) -> Result<ExponentSet> {
    p.check(curve)?;
    let e = curve
        .points()
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            twist_row(n, p.c_row(i), p.eta(i), sign)
                .into_iter()
                .zip(1..=n)
                .map(|(t, j)| &frac(j, n) + &t)
                .collect()
        })
        .collect();
    Ok(ExponentSet::new(e))
}

/// Inverse of [`tau_from_c_eta`] by discrete Fourier inversion on each point.
pub fn c_eta_from_tau(curve: &OrbifoldCurve, e: &ExponentSet, sign: EtaSign) -> Result<CParams> {
    e.check_orders(curve.points())?;
    let mut c = Vec::with_capacity(curve.num_points());
    let mut eta = Vec::with_capacity(curve.num_points());
    for (i, &n) in curve.points().iter().enumerate() {
        let n_rat = Rat::from_integer(n.into());
        let t: Vec<CycNum> = (1..=n).map(|j| e.get(i, j as usize) - &frac(j, n)).collect();
        // j = n kills the c-sum, leaving t_in = ±η_i / n
        let eta_i = t[n as usize - 1].scale(&n_rat).scale_int(sign.factor());
        // s_j = n t_ij ∓ η_i = Σ_k u_k (1 - ζ^{jk}),  u_k = 2 c_ik / (1 - ζ^{-k})
        let s: Vec<CycNum> =
            t.iter().map(|tj| &tj.scale(&n_rat) - &eta_i.scale_int(sign.factor())).collect();
        let neg_inv_n = Rat::new((-1).into(), n.into());
        let row = (1..n)
            .map(|k| {
                let u = (1..=n)
                    .map(|j| &s[j as usize - 1] * &CycNum::root_of_unity(n, -((j * k) as i64)))
                    .sum::<CycNum>()
                    .scale(&neg_inv_n);
                let factor = &CycNum::one(n) - &CycNum::root_of_unity(n, -(k as i64));
                (&u * &factor).scale(&Rat::new(1.into(), 2.into()))
            })
            .collect();
        c.push(row);
        eta.push(eta_i);
    }
    Ok(CParams::new(c, eta))
}

/// Exponent `E_q` with `q = exp(2πi E_q) = Π (ξ_ij)^{-1/n_i}`.
pub fn q_param(e: &ExponentSet) -> CycNum {
    e.rows()
        .iter()
        .map(|row| {
            let n = Rat::from_integer((row.len() as i64).into());
            row.iter().cloned().sum::<CycNum>().scale(&(-n.recip()))
        })
        .sum()
}

/// Generators and relations of the orbifold Hecke algebra, as exponent data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationData {
    pub genus: u32,
    pub punctures: u32,
    /// Eigenvalue exponents `(e_i1, …, e_{i n_i})` of each `T_i`.
    pub eigen_exponents: Vec<Vec<CycNum>>,
}

impl PresentationData {
    pub fn generator_names(&self) -> Vec<String> {
        let m = self.eigen_exponents.len();
        let mut out: Vec<String> = (1..=m).map(|i| format!("T{i}")).collect();
        for l in 1..=self.genus {
            out.push(format!("A{l}"));
            out.push(format!("B{l}"));
        }
        out.extend((1..=self.punctures).map(|p| format!("X{p}")));
        out
    }
}

impl fmt::Display for PresentationData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generator_names().join(" "))?;
        for (i, row) in self.eigen_exponents.iter().enumerate() {
            let factors: Vec<String> =
                row.iter().map(|e| format!("(T{} - exp(2πi·{e}))", i + 1)).collect();
            writeln!(f, "{} = 0", factors.join(""))?;
        }
        let mut lhs: Vec<String> =
            (1..=self.eigen_exponents.len()).map(|i| format!("T{i}")).collect();
        lhs.extend((1..=self.punctures).map(|p| format!("X{p}")));
        let rhs: Vec<String> =
            (1..=self.genus).map(|l| format!("A{l}B{l}A{l}^-1B{l}^-1")).collect();
        let lhs = if lhs.is_empty() { "1".to_string() } else { lhs.join("") };
        let rhs = if rhs.is_empty() { "1".to_string() } else { rhs.join("") };
        write!(f, "{lhs} = {rhs}")
    }
}

pub fn hecke_presentation(curve: &OrbifoldCurve, e: &ExponentSet) -> Result<PresentationData> {
    e.check_orders(curve.points())?;
    Ok(PresentationData {
        genus: curve.genus(),
        punctures: curve.punctures(),
        eigen_exponents: e.rows().to_vec(),
    })
}

/// Exponent offsets `t_ij = e_ij - j/n_i`.
pub fn twists(e: &ExponentSet) -> Vec<Vec<CycNum>> {
    e.rows()
        .iter()
        .map(|row| {
            let n = row.len() as u32;
            row.iter().zip(1..=n).map(|(x, j)| x - &frac(j, n)).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, CycNum};

    fn cr(v: i64, d: i64) -> CycNum {
        CycNum::from_rat(rat(v, d))
    }

    #[test]
    fn curve_validation() {
        assert!(OrbifoldCurve::new(0, true, 1, vec![2]).is_err());
        assert!(OrbifoldCurve::new(0, true, 0, vec![1]).is_err());
        assert!(OrbifoldCurve::new(1, false, 2, vec![]).is_ok());
    }

    #[test]
    fn zero_parameters_give_untwisted_exponents() {
        let curve = OrbifoldCurve::compact(0, vec![2, 3, 6]).unwrap();
        let e = tau_from_c_eta(&curve, &CParams::zero(&curve), EtaSign::S41).unwrap();
        assert_eq!(e, ExponentSet::untwisted(&[2, 3, 6]));
        assert_eq!(c_eta_from_tau(&curve, &e, EtaSign::S41).unwrap(), CParams::zero(&curve));
    }

    #[test]
    fn kernel_weight_matches_division() {
        for n in 2..=7u32 {
            for j in 1..=n {
                for k in 1..n {
                    let num = &CycNum::one(n) - &CycNum::root_of_unity(n, (j * k) as i64);
                    let den = &CycNum::one(n) - &CycNum::root_of_unity(n, -(k as i64));
                    assert_eq!(kernel_weight(n, j, k), num.checked_div(&den).unwrap());
                }
            }
        }
    }

    #[test]
    fn order_two_single_point() {
        // ζ = -1: the k-sum has one term with weight (1 - (-1)^j) / 2
        let curve = OrbifoldCurve::compact(0, vec![2]).unwrap();
        let p = CParams::new(vec![vec![cr(1, 2)]], vec![CycNum::zero(1)]);
        let e = tau_from_c_eta(&curve, &p, EtaSign::S41).unwrap();
        assert_eq!(e.row(0), &[cr(1, 1), cr(1, 1)]);
        let back = c_eta_from_tau(&curve, &e, EtaSign::S41).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn order_two_closed_form_inverse() {
        // t_1 = (2c - η)/2, t_2 = -η/2  ⇒  η = -2 t_2, c = t_1 - t_2
        let curve = OrbifoldCurve::compact(1, vec![2]).unwrap();
        let e = ExponentSet::from_rats(&[vec![rat(5, 6), rat(3, 4)]]);
        let p = c_eta_from_tau(&curve, &e, EtaSign::S41).unwrap();
        let (t1, t2) = (rat(5, 6) - rat(1, 2), rat(3, 4) - rat(1, 1));
        assert_eq!(p.eta(0), &CycNum::from_rat(-rat(2, 1) * &t2));
        assert_eq!(p.c_row(0), &[CycNum::from_rat(t1 - t2)]);
    }

    #[test]
    fn eta_sign_switch_flips_eta_only() {
        let curve = OrbifoldCurve::compact(0, vec![3]).unwrap();
        let p = CParams::new(vec![vec![cr(1, 3), cr(2, 5)]], vec![cr(1, 7)]);
        let a = tau_from_c_eta(&curve, &p, EtaSign::S41).unwrap();
        let flipped = CParams::new(p.rows().to_vec(), vec![-p.eta(0).clone()]);
        let b = tau_from_c_eta(&curve, &flipped, EtaSign::S21).unwrap();
        assert_eq!(a, b);
        assert_eq!(c_eta_from_tau(&curve, &b, EtaSign::S21).unwrap(), flipped);
    }

    #[test]
    fn q_parameter_examples() {
        let e = ExponentSet::untwisted(&[2, 2, 2, 2]);
        assert_eq!(q_param(&e), CycNum::from_int(-3));
        let zero = ExponentSet::from_rats(&[vec![rat(0, 1); 3]]);
        assert!(q_param(&zero).is_zero());
        let e = ExponentSet::from_rats(&[vec![rat(1, 3), rat(1, 1)]]);
        assert_eq!(q_param(&e), cr(-2, 3));
    }

    #[test]
    fn presentation_repackages_exponents() {
        let curve = OrbifoldCurve::compact(1, vec![2]).unwrap();
        let e = ExponentSet::from_rats(&[vec![rat(1, 2), rat(1, 1)]]);
        let p = hecke_presentation(&curve, &e).unwrap();
        assert_eq!(p.eigen_exponents, vec![vec![cr(1, 2), cr(1, 1)]]);
        assert_eq!(p.generator_names(), vec!["T1", "A1", "B1"]);
        assert!(p.to_string().ends_with("T1 = A1B1A1^-1B1^-1"));
    }

    #[test]
    fn punctures_add_free_generators() {
        let curve = OrbifoldCurve::new(0, false, 2, vec![3]).unwrap();
        let p = hecke_presentation(&curve, &ExponentSet::untwisted(&[3])).unwrap();
        assert_eq!(p.generator_names(), vec!["T1", "X1", "X2"]);
        assert!(p.to_string().ends_with("T1X1X2 = 1"));
    }

    #[test]
    fn d4_presentation_matches_quadratic_relations() {
        // With t_i = exp(-πi c_i) the relations read (T - t)(T + t^{-1}) = 0 and
        // T1T2T3T4 = q, q = exp(-πi(Σc - η)). Rescaling each T_i by t_i turns our
        // eigenvalue exponents {1/2 + c_i - η_i/2, 1 - η_i/2} into {-c_i/2, 1/2 + c_i/2}
        // when η_i = 0, and E_q agrees with -(Σc - η)/2 mod Z.
        let curve = OrbifoldCurve::compact(0, vec![2, 2, 2, 2]).unwrap();
        let cs = [rat(1, 3), rat(2, 7), rat(-1, 5), rat(3, 11)];
        let eta = rat(1, 9);
        let mut etas = vec![CycNum::zero(1); 4];
        etas[0] = CycNum::from_rat(eta.clone());
        let p = CParams::new(cs.iter().map(|c| vec![CycNum::from_rat(c.clone())]).collect(), etas);
        let e = tau_from_c_eta(&curve, &p, EtaSign::S41).unwrap();
        let pres = hecke_presentation(&curve, &e).unwrap();
        for (i, c) in cs.iter().enumerate().skip(1) {
            let half_c = CycNum::from_rat(c / rat(2, 1));
            let got: Vec<CycNum> =
                pres.eigen_exponents[i].iter().map(|x| (x - &half_c).mod_one()).collect();
            let want = [
                (&cr(1, 2) + &half_c).mod_one(),
                (-half_c.clone()).mod_one(),
            ];
            assert_eq!(got, want);
        }
        let sum_c: Rat = cs.iter().sum();
        let want_q = CycNum::from_rat(-(sum_c - eta) / rat(2, 1));
        assert_eq!(q_param(&e).mod_one(), want_q.mod_one());
    }
}
