//! Star-shaped quivers, their Cartan data, and positive roots.
//!
//! Vertex order is fixed: the center first, then each leg in input order,
//! walking outward from the center.

mod enumerate;

pub use enumerate::{is_root, positive_roots_up_to, RootKind};

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{EngineError, Result};
use crate::exactnum::{ExactError, Rat};
use crate::linalg::RatMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarQuiver {
    legs: Arc<[u32]>,
    offsets: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KacMoodyType {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for KacMoodyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KacMoodyType::Finite => "finite",
            KacMoodyType::Affine => "affine",
            KacMoodyType::Indefinite => "indefinite",
        })
    }
}

/// Star quiver with legs of lengths `n_i - 1`.
pub fn build_star(orders: &[u32]) -> Result<StarQuiver> {
    if orders.is_empty() {
        return Err(EngineError::EmptyQuiver);
    }
    if let Some(n) = orders.iter().find(|&&n| n < 2) {
        return Err(EngineError::InvalidCurve(format!("stabilizer order {n} < 2")));
    }
    Ok(StarQuiver::from_leg_lengths(orders.iter().map(|n| n - 1).collect()))
}

impl StarQuiver {
    /// Any leg lengths, including none (a single vertex).
    pub(crate) fn from_leg_lengths(legs: Vec<u32>) -> Self {
        let mut offsets = Vec::with_capacity(legs.len());
        let mut next = 1;
        for &l in &legs {
            offsets.push(next);
            next += l as usize;
        }
        StarQuiver { legs: legs.into(), offsets }
    }

    pub fn leg_lengths(&self) -> &[u32] {
        &self.legs
    }

    /// Stabilizer orders `n_i = leg length + 1`.
    pub fn orders(&self) -> Vec<u32> {
        self.legs.iter().map(|l| l + 1).collect()
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn num_vertices(&self) -> usize {
        1 + self.legs.iter().map(|&l| l as usize).sum::<usize>()
    }

    /// Index of leg vertex `(i, j)`, `i` 0-based, `1 ≤ j ≤ n_i - 1`; `j = 0` is the center.
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        assert!(j <= self.legs[i] as usize, "leg {i} has no vertex {j}");
        self.offsets[i] + j - 1
    }

    /// Edges as index pairs `(inner, outer)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &l) in self.legs.iter().enumerate() {
            for j in 1..=l as usize {
                out.push((self.vertex(i, j - 1), self.vertex(i, j)));
            }
        }
        out
    }

    pub(crate) fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut nb = vec![Vec::new(); self.num_vertices()];
        for (a, b) in self.edges() {
            nb[a].push(b);
            nb[b].push(a);
        }
        nb
    }

    pub fn cartan(&self) -> CartanData {
        let n = self.num_vertices();
        let mut a = vec![vec![0i64; n]; n];
        for (v, row) in a.iter_mut().enumerate() {
            row[v] = 2;
        }
        for (x, y) in self.edges() {
            a[x][y] = -1;
            a[y][x] = -1;
        }
        CartanData { matrix: a, neighbors: self.neighbors() }
    }

    pub fn root(&self, coeffs: Vec<i64>) -> RootVector {
        assert_eq!(coeffs.len(), self.num_vertices());
        RootVector { coeffs, legs: self.legs.clone() }
    }

    pub fn simple_root(&self, v: usize) -> RootVector {
        let mut c = vec![0; self.num_vertices()];
        c[v] = 1;
        self.root(c)
    }

    pub fn zero_root(&self) -> RootVector {
        self.root(vec![0; self.num_vertices()])
    }
}

/// Symmetric Cartan matrix `2I - adjacency` and the Tits form `q(α) = αᵀAα/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    matrix: Vec<Vec<i64>>,
    neighbors: Vec<Vec<usize>>,
}

impl CartanData {
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// `⟨α, α_v⟩ = (Aα)_v`.
    pub fn pairing(&self, alpha: &[i64], v: usize) -> i64 {
        2 * alpha[v] - self.neighbors[v].iter().map(|&u| alpha[u]).sum::<i64>()
    }

    pub fn tits_form(&self, alpha: &[i64]) -> i64 {
        let mut s = 0;
        for (v, row) in self.matrix.iter().enumerate() {
            for (u, &a) in row.iter().enumerate() {
                s += alpha[v] * a * alpha[u];
            }
        }
        s / 2
    }

    fn rat_matrix(&self) -> RatMatrix {
        RatMatrix::from_i64(&self.matrix)
    }
}

/// Finite if the Cartan matrix is positive definite, affine if it has a
/// one-dimensional kernel spanned by a positive vector, indefinite otherwise.
pub fn classify(q: &StarQuiver) -> KacMoodyType {
    let a = q.cartan().rat_matrix();
    if a.leading_minors().iter().all(Signed::is_positive) {
        return KacMoodyType::Finite;
    }
    match positive_kernel_generator(&a) {
        Some(_) => KacMoodyType::Affine,
        None => KacMoodyType::Indefinite,
    }
}

fn positive_kernel_generator(a: &RatMatrix) -> Option<Vec<i64>> {
    let kernel = a.kernel();
    let [v] = kernel.as_slice() else { return None };
    let lcm = v.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> =
        v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.iter().any(Signed::is_negative) { -1 } else { 1 };
    let out: Vec<i64> = ints.iter().map(|x| (x / &g).to_i64().map(|y| y * sign)).collect::<Option<_>>()?;
    out.iter().all(|&x| x > 0).then_some(out)
}

/// The primitive positive generator `δ` of the Cartan kernel (affine type only).
pub fn delta(q: &StarQuiver) -> Result<RootVector> {
    if classify(q) != KacMoodyType::Affine {
        return Err(EngineError::NotAffine);
    }
    let v = positive_kernel_generator(&q.cartan().rat_matrix()).ok_or(EngineError::NotAffine)?;
    Ok(q.root(v))
}

/// Integer coefficients over the vertices of a star quiver.
///
/// Leg accessors follow the conventions `α_{i0} = α_0` and `α_{i,n_i} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVector {
    coeffs: Vec<i64>,
    legs: Arc<[u32]>,
}

impl RootVector {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn leg_lengths(&self) -> &[u32] {
        &self.legs
    }

    pub fn center(&self) -> i64 {
        self.coeffs[0]
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.center() > 0
    }

    /// `α_{ij}` for 0-based leg `i` and `0 ≤ j ≤ n_i`.
    pub fn leg(&self, i: usize, j: usize) -> i64 {
        let len = self.legs[i] as usize;
        if j == 0 {
            return self.coeffs[0];
        }
        if j > len {
            return 0;
        }
        let offset = 1 + self.legs[..i].iter().map(|&l| l as usize).sum::<usize>();
        self.coeffs[offset + j - 1]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &RootVector) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: i64) -> RootVector {
        RootVector { coeffs: self.coeffs.iter().map(|c| c * k).collect(), legs: self.legs.clone() }
    }

    pub fn same_shape(&self, other: &RootVector) -> bool {
        self.legs == other.legs
    }

    pub fn parse(text: &str) -> std::result::Result<RootVector, ExactError> {
        let bad = |reason: &str| ExactError::Syntax { text: text.to_string(), reason: reason.into() };
        let body = text
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| bad("expected `[a0; legs...]`"))?;
        let (center, rest) = body.split_once(';').ok_or_else(|| bad("missing `;` after center"))?;
        let num = |s: &str| s.trim().parse::<i64>().map_err(|_| bad("bad integer"));
        let mut coeffs = vec![num(center)?];
        let mut legs = Vec::new();
        if !rest.trim().is_empty() {
            for leg in rest.split('|') {
                let entries: Vec<i64> =
                    leg.split_whitespace().map(num).collect::<std::result::Result<_, _>>()?;
                if entries.is_empty() {
                    return Err(bad("empty leg"));
                }
                legs.push(entries.len() as u32);
                coeffs.extend(entries);
            }
        }
        Ok(RootVector { coeffs, legs: legs.into() })
    }
}

impl std::ops::Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        assert!(self.same_shape(rhs));
        RootVector {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            legs: self.legs.clone(),
        }
    }
}

impl std::ops::Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        assert!(self.same_shape(rhs));
        RootVector {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
            legs: self.legs.clone(),
        }
    }
}

impl Ord for RootVector {
    /// Height first, then lexicographic in vertex order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.height().cmp(&other.height()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for RootVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.coeffs[0])?;
        let mut at = 1;
        for (i, &l) in self.legs.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            let leg: Vec<String> =
                self.coeffs[at..at + l as usize].iter().map(i64::to_string).collect();
            f.write_str(&leg.join(" "))?;
            at += l as usize;
        }
        f.write_str("]")
    }
}
