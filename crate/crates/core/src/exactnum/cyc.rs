use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{self, Poly};
use super::{ExactError, Rat};
use crate::linalg::RatMatrix;

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn compute_cyclotomic(n: u32) -> Poly {
    // x^n - 1 = prod_{d | n} Phi_d
    let mut num: Poly = vec![Rat::zero(); n as usize + 1];
    num[0] = -Rat::one();
    num[n as usize] = Rat::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let (q, r) = poly::divrem(&num, &cyclotomic_poly(d));
        debug_assert!(r.is_empty());
        num = q;
    }
    num
}

/// The `n`-th cyclotomic polynomial, monic with integer coefficients.
pub fn cyclotomic_poly(n: u32) -> Arc<Poly> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }
    let p = Arc::new(compute_cyclotomic(n));
    cache
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(n)
        .or_insert(p)
        .clone()
}

/// An exact element of the cyclotomic field `Q(ζ_n)`, `ζ_n = exp(2πi/n)`.
///
/// Stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` modulo `Φ_n`, so two
/// values of the same order are equal iff their coordinates are. The order is
/// never shrunk implicitly; see [`CycNum::minimize`].
#[derive(Clone, Debug)]
pub struct CycNum {
    order: u32,
    coeffs: Vec<Rat>,
}

/// Result of [`CycNum::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycClass {
    RationalInteger(BigInt),
    Rational(Rat),
    Irrational,
}

impl CycNum {
    fn reduce(order: u32, p: &[Rat]) -> Self {
        let n = order as usize;
        let phi = cyclotomic_poly(order);
        let deg = phi.len() - 1;
        // fold exponents mod n first (Φ_n divides x^n - 1)
        let mut folded = vec![Rat::zero(); n.max(1)];
        for (k, c) in p.iter().enumerate() {
            if !c.is_zero() {
                folded[k % n] += c;
            }
        }
        poly::trim(&mut folded);
        let (_, mut rem) = poly::divrem(&folded, &phi);
        rem.resize(deg, Rat::zero());
        CycNum { order, coeffs: rem }
    }

    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        CycNum { order, coeffs: vec![Rat::zero(); totient(order)] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rat_in(order, Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_rat_in(1, r)
    }

    pub fn from_rat_in(order: u32, r: Rat) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rat(Rat::from_integer(v.into()))
    }

    /// `ζ_n^j` in canonical form, of order `n`.
    pub fn root_of_unity(n: u32, j: i64) -> Self {
        assert!(n >= 1, "cyclotomic order must be positive");
        let k = j.rem_euclid(n as i64) as usize;
        let mut p = vec![Rat::zero(); k + 1];
        p[k] = Rat::one();
        Self::reduce(n, &p)
    }

    /// Builds `Σ c_k ζ_n^k` from arbitrary (unreduced) exponent/coefficient pairs.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        assert!(n >= 1, "cyclotomic order must be positive");
        let mut p = vec![Rat::zero(); n as usize];
        for (k, c) in terms {
            p[k.rem_euclid(n as i64) as usize] += c;
        }
        Self::reduce(n, &p)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-expresses the value in `Q(ζ_m)`; `m` must be a multiple of the order.
    pub fn promote(&self, m: u32) -> Self {
        assert!(m.is_multiple_of(self.order), "cannot promote order {} to {}", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut p = vec![Rat::zero(); (self.coeffs.len().saturating_sub(1)) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[k * step] = c.clone();
        }
        Self::reduce(m, &p)
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (self.promote(m), other.promote(m))
    }

    /// Value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn classify(&self) -> CycClass {
        match self.as_rational() {
            Some(r) if r.is_integer() => CycClass::RationalInteger(r.to_integer()),
            Some(r) => CycClass::Rational(r.clone()),
            None => CycClass::Irrational,
        }
    }

    pub fn is_rational_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    /// Same value with the rational constant coordinate reduced into `[0, 1)`.
    /// Two values differ by a rational integer iff their keys are equal.
    pub fn mod_one(&self) -> Self {
        let mut out = self.clone();
        let c = &out.coeffs[0];
        out.coeffs[0] = c - c.floor();
        out
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rat::from_integer(k.into()))
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let phi = cyclotomic_poly(self.order);
        let inv = poly::inverse_mod(&self.coeffs, &phi).ok_or(ExactError::DivisionByZero)?;
        Ok(Self::reduce(self.order, &inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        let (a, b) = self.lift_pair(other);
        Ok(&a * &b.inverse()?)
    }

    /// Complex value, for the numeric layer only.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = std::f64::consts::TAU * k as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }

    /// The same value in the smallest cyclotomic field containing it.
    pub fn minimize(&self) -> Self {
        for d in divisors(self.order) {
            if d == self.order {
                break;
            }
            let cols: Vec<Vec<Rat>> = (0..totient(d))
                .map(|k| CycNum::root_of_unity(d, k as i64).promote(self.order).coeffs)
                .collect();
            let basis = RatMatrix::from_columns(&cols);
            if let Some(x) = basis.solve(&self.coeffs) {
                return CycNum { order: d, coeffs: x };
            }
        }
        self.clone()
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lift_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl From<Rat> for CycNum {
    fn from(r: Rat) -> Self {
        CycNum::from_rat(r)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.lift_pair(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycNum { order: a.order, coeffs }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.lift_pair(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CycNum { order: a.order, coeffs }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let (a, b) = self.lift_pair(rhs);
        CycNum::reduce(a.order, &poly::mul(&a.coeffs, &b.coeffs))
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: CycNum) -> CycNum { (&self).$f(&rhs) }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $f(self, rhs: &CycNum) -> CycNum { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(1), |acc, x| &acc + &x)
    }
}

pub(crate) fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNum {
    /// Rational values print as `p/q`; anything else as `cyc(n)[k:p/q, …]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return f.write_str(&fmt_rat(r));
        }
        write!(f, "cyc({})[", self.order)?;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{}:{}", k, fmt_rat(c))?;
        }
        f.write_str("]")
    }
}
