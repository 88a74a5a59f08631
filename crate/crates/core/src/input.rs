//! The plain-text input format shared by all commands.
//!
//! One `key = value` per line, `#` starts a comment. Indexed keys use 1-based
//! brackets: `c[i][j]`, `eta[i]`, `e[i][j]`, `mu[i][p]`, `xi[i]`. Unknown or
//! repeated keys are rejected.
//!
//! ```text
//! genus = 0
//! points = 2 2 2 2
//! c[1][1] = 1/2
//! eta[1] = cyc(3)[1:1]
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::deligne_simpson::DSInstance;
use crate::error::EngineError;
use crate::exactnum::{parse_cyc, parse_rat, CycNum, Rat};
use crate::orbifold::{c_eta_from_tau, tau_from_c_eta, CParams, EtaSign, ExponentSet, OrbifoldCurve};
use crate::gdaha::WreathParams;
use crate::star_roots::{build_star, RootVector, StarQuiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    /// 1-based line, or 0 when the problem is not tied to one line.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for InputError {}

fn err(line: usize, message: impl Into<String>) -> InputError {
    InputError { line, message: message.into() }
}

fn from_engine(line: usize) -> impl Fn(EngineError) -> InputError {
    move |e| err(line, e.to_string())
}

#[derive(Clone, Debug)]
struct At<T> {
    line: usize,
    value: T,
}

/// Parsed input file; resolution into engine types happens on demand.
#[derive(Clone, Debug, Default)]
pub struct InputFile {
    genus: Option<At<u32>>,
    compact: Option<At<bool>>,
    punctures: Option<At<u32>>,
    points: Option<At<Vec<u32>>>,
    c: BTreeMap<(usize, usize), At<CycNum>>,
    eta: BTreeMap<usize, At<CycNum>>,
    e: BTreeMap<(usize, usize), At<CycNum>>,
    d: Option<At<i64>>,
    alpha: Option<At<RootVector>>,
    n: Option<At<u32>>,
    mu0: Option<At<Rat>>,
    mu: BTreeMap<(usize, usize), At<Rat>>,
    nu: Option<At<Rat>>,
    xi: BTreeMap<usize, At<Rat>>,
    spherical: Option<At<bool>>,
}

fn split_key(key: &str) -> Option<(&str, Vec<usize>)> {
    let (name, mut rest) = match key.find('[') {
        Some(p) => (&key[..p], &key[p..]),
        None => (key, ""),
    };
    let mut idx = Vec::new();
    while !rest.is_empty() {
        let close = rest.find(']')?;
        let i: usize = rest.strip_prefix('[')?[..close - 1].trim().parse().ok()?;
        idx.push(i);
        rest = &rest[close + 1..];
    }
    Some((name.trim(), idx))
}

fn parse_bool(v: &str) -> Option<bool> {
    match v {
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        _ => None,
    }
}

fn set<T>(slot: &mut Option<At<T>>, line: usize, key: &str, value: T) -> Result<(), InputError> {
    if let Some(prev) = slot {
        return Err(err(line, format!("`{key}` already set on line {}", prev.line)));
    }
    *slot = Some(At { line, value });
    Ok(())
}

fn insert<K: Ord + Copy, T>(
    map: &mut BTreeMap<K, At<T>>,
    k: K,
    line: usize,
    key: &str,
    value: T,
) -> Result<(), InputError> {
    if let Some(prev) = map.get(&k) {
        return Err(err(line, format!("`{key}` already set on line {}", prev.line)));
    }
    map.insert(k, At { line, value });
    Ok(())
}

impl InputFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let mut f = InputFile::default();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) =
                content.split_once('=').ok_or_else(|| err(line, "expected `key = value`"))?;
            let (key, value) = (key.trim(), value.trim());
            let (name, idx) = split_key(key).ok_or_else(|| err(line, format!("malformed key `{key}`")))?;
            if idx.contains(&0) {
                return Err(err(line, "indices start at 1"));
            }
            let num = |v: &str| v.parse::<u32>().map_err(|_| err(line, format!("`{v}` is not a nonnegative integer")));
            let cyc = |v: &str| parse_cyc(v).map_err(|e| err(line, e.to_string()));
            let rational = |v: &str| parse_rat(v).map_err(|e| err(line, e.to_string()));
            let boolean = |v: &str| parse_bool(v).ok_or_else(|| err(line, format!("`{v}` is not true/false")));
            match (name, idx.as_slice()) {
                ("genus", []) => set(&mut f.genus, line, key, num(value)?)?,
                ("compact", []) => set(&mut f.compact, line, key, boolean(value)?)?,
                ("punctures", []) => set(&mut f.punctures, line, key, num(value)?)?,
                ("points", []) => {
                    let body = value.trim_start_matches('(').trim_end_matches(')');
                    let pts = body
                        .split(|ch: char| ch == ',' || ch.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(num)
                        .collect::<Result<Vec<_>, _>>()?;
                    set(&mut f.points, line, key, pts)?
                }
                ("c", &[i, j]) => insert(&mut f.c, (i, j), line, key, cyc(value)?)?,
                ("eta", &[i]) => insert(&mut f.eta, i, line, key, cyc(value)?)?,
                ("e", &[i, j]) => insert(&mut f.e, (i, j), line, key, cyc(value)?)?,
                ("d", []) => {
                    let d = value.parse::<i64>().map_err(|_| err(line, format!("`{value}` is not an integer")))?;
                    set(&mut f.d, line, key, d)?
                }
                ("alpha", []) => {
                    let a = RootVector::parse(value).map_err(|e| err(line, e.to_string()))?;
                    set(&mut f.alpha, line, key, a)?
                }
                ("n", []) => set(&mut f.n, line, key, num(value)?)?,
                ("mu0", []) => set(&mut f.mu0, line, key, rational(value)?)?,
                ("mu", &[i, p]) => insert(&mut f.mu, (i, p), line, key, rational(value)?)?,
                ("nu", []) => set(&mut f.nu, line, key, rational(value)?)?,
                ("xi", &[i]) => insert(&mut f.xi, i, line, key, rational(value)?)?,
                ("spherical", []) => set(&mut f.spherical, line, key, boolean(value)?)?,
                _ => return Err(err(line, format!("unknown key `{key}`"))),
            }
        }
        Ok(f)
    }

    pub fn genus(&self) -> Option<u32> {
        self.genus.as_ref().map(|g| g.value)
    }

    /// Stabilizer orders from `points`, else from the legs of `alpha`.
    pub fn orders(&self) -> Result<Vec<u32>, InputError> {
        if let Some(p) = &self.points {
            return Ok(p.value.clone());
        }
        if let Some(a) = &self.alpha {
            return Ok(a.value.leg_lengths().iter().map(|l| l + 1).collect());
        }
        Err(err(0, "missing `points`"))
    }

    pub fn quiver(&self) -> Result<StarQuiver, InputError> {
        let line = self.points.as_ref().map_or(0, |p| p.line);
        build_star(&self.orders()?).map_err(from_engine(line))
    }

    /// Genus defaults to 0, punctures to 0, compactness to "no punctures".
    pub fn curve(&self) -> Result<OrbifoldCurve, InputError> {
        let points = self.points.as_ref().ok_or_else(|| err(0, "missing `points`"))?;
        let punctures = self.punctures.as_ref().map_or(0, |p| p.value);
        let compact = self.compact.as_ref().map_or(punctures == 0, |c| c.value);
        let line = self.compact.as_ref().map_or(points.line, |c| c.line);
        OrbifoldCurve::new(self.genus().unwrap_or(0), compact, punctures, points.value.clone())
            .map_err(from_engine(line))
    }

    fn exponents_given(&self) -> bool {
        !self.e.is_empty()
    }

    /// Exponents from `e[i][j]`; every entry `j = 1..n_i` must be present.
    pub fn exponent_set(&self, orders: &[u32]) -> Result<ExponentSet, InputError> {
        for (&(i, j), at) in &self.e {
            if i > orders.len() || j > orders[i - 1] as usize {
                return Err(err(at.line, format!("e[{i}][{j}] is out of range")));
            }
        }
        let mut rows = Vec::with_capacity(orders.len());
        for (i, &n) in orders.iter().enumerate() {
            let mut row = Vec::with_capacity(n as usize);
            for j in 1..=n as usize {
                let at = self.e.get(&(i + 1, j)).ok_or_else(|| err(0, format!("missing e[{}][{j}]", i + 1)))?;
                row.push(at.value.clone());
            }
            rows.push(row);
        }
        Ok(ExponentSet::new(rows))
    }

    /// `(c, η)` entries default to 0.
    pub fn c_params(&self, curve: &OrbifoldCurve) -> Result<CParams, InputError> {
        let orders = curve.points();
        for (&(i, j), at) in &self.c {
            if i > orders.len() || j >= orders[i - 1] as usize {
                return Err(err(at.line, format!("c[{i}][{j}] is out of range")));
            }
        }
        for (&i, at) in &self.eta {
            if i > orders.len() {
                return Err(err(at.line, format!("eta[{i}] is out of range")));
            }
        }
        let c = orders
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                (1..n as usize)
                    .map(|j| self.c.get(&(i + 1, j)).map_or(CycNum::zero(1), |a| a.value.clone()))
                    .collect()
            })
            .collect();
        let eta = (1..=orders.len())
            .map(|i| self.eta.get(&i).map_or(CycNum::zero(1), |a| a.value.clone()))
            .collect();
        Ok(CParams::new(c, eta))
    }

    /// Both coordinate systems, from whichever one the file gives.
    pub fn parameters(
        &self,
        curve: &OrbifoldCurve,
        sign: EtaSign,
    ) -> Result<(CParams, ExponentSet), InputError> {
        if self.exponents_given() {
            if let Some(at) = self.c.values().next().or(self.eta.values().next()) {
                return Err(err(at.line, "give either c/eta or e, not both"));
            }
            let e = self.exponent_set(curve.points())?;
            let p = c_eta_from_tau(curve, &e, sign).map_err(from_engine(0))?;
            Ok((p, e))
        } else {
            let p = self.c_params(curve)?;
            let e = tau_from_c_eta(curve, &p, sign).map_err(from_engine(0))?;
            Ok((p, e))
        }
    }

    /// Deligne-Simpson instance from `alpha`, exponents, and an optional `d`.
    pub fn ds_instance(&self, sign: EtaSign) -> Result<DSInstance, InputError> {
        let alpha = self.alpha.as_ref().ok_or_else(|| err(0, "missing `alpha`"))?;
        if let Some(d) = &self.d {
            if d.value != alpha.value.center() {
                return Err(err(d.line, format!("d = {} but alpha_0 = {}", d.value, alpha.value.center())));
            }
        }
        let orders = self.orders()?;
        let e = if self.exponents_given() {
            self.exponent_set(&orders)?
        } else {
            let curve = OrbifoldCurve::compact(0, orders.clone()).map_err(from_engine(0))?;
            self.parameters(&curve, sign)?.1
        };
        DSInstance::new(e, alpha.value.clone()).map_err(from_engine(alpha.line))
    }

    /// Wreath-product parameters; missing entries default to 0, `n` to 1.
    pub fn wreath(&self, q: &StarQuiver) -> Result<WreathParams, InputError> {
        let mut w = WreathParams::zero(q, self.n.as_ref().map_or(1, |n| n.value));
        for (&(i, p), at) in &self.mu {
            let slot = w
                .mu
                .get_mut(i - 1)
                .and_then(|row| row.get_mut(p - 1))
                .ok_or_else(|| err(at.line, format!("mu[{i}][{p}] is out of range")))?;
            *slot = at.value.clone();
        }
        for (&i, at) in &self.xi {
            let slot = w.xi.get_mut(i - 1).ok_or_else(|| err(at.line, format!("xi[{i}] is out of range")))?;
            *slot = at.value.clone();
        }
        if let Some(m) = &self.mu0 {
            w.mu0 = m.value.clone();
        }
        if let Some(nu) = &self.nu {
            w.nu = nu.value.clone();
        }
        w.spherical_asserted = self.spherical.as_ref().is_some_and(|s| s.value);
        let line = self.n.as_ref().map_or(0, |n| n.line);
        w.check(q).map_err(from_engine(line))?;
        Ok(w)
    }
}
