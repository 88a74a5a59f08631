//! Positive roots up to a height bound.
//!
//! Every positive root descends by simple reflections (each lowering the
//! height) either to a simple root (real roots) or to a vector of the
//! fundamental set `K` (imaginary roots). Enumeration runs these descents
//! backwards: seed with simple roots and `K ∩ {height ≤ H}`, then close under
//! height-raising reflections while staying within the bound.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use super::{CartanData, RootVector, StarQuiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    Real,
    Imaginary,
    NotRoot,
}

/// Convex nonnegative sequences `a_1..a_len` with `a_0 = start`, `a_{len+1} = 0`
/// and total at most `budget`. Such sequences are nonincreasing.
fn convex_legs(start: i64, len: usize, budget: i64, out: &mut Vec<Vec<i64>>) {
    fn go(len: usize, budget: i64, seq: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        // seq[0] is the center
        let j = seq.len();
        let prev = seq[j - 1];
        if j == len + 1 {
            if len == 0 || 2 * prev <= seq[j - 2] {
                out.push(seq[1..].to_vec());
            }
            return;
        }
        let lo = if j >= 2 { (2 * prev - seq[j - 2]).max(0) } else { 0 };
        let steps_left = (len + 1 - j) as i64;
        for next in lo..=prev.min(budget) {
            // slopes only grow from here, and the leg must still reach 0
            if next + steps_left * (next - prev) > 0 {
                continue;
            }
            seq.push(next);
            go(len, budget - next, seq, out);
            seq.pop();
        }
    }
    let mut seq = vec![start];
    go(len, budget, &mut seq, out);
}

/// Fundamental-set vectors (connected support, `⟨α, α_v⟩ ≤ 0` everywhere) of
/// height at most `bound`.
fn fundamental_set(q: &StarQuiver, cartan: &CartanData, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for center in 1..=bound {
        let mut per_leg: Vec<Vec<Vec<i64>>> = Vec::new();
        for &len in q.leg_lengths() {
            let mut seqs = Vec::new();
            convex_legs(center, len as usize, bound - center, &mut seqs);
            per_leg.push(seqs);
        }
        let mut choice: Vec<&[i64]> = Vec::with_capacity(per_leg.len());
        combine(&per_leg, 0, bound - center, &mut choice, &mut |legs| {
            let mut v = vec![center];
            for l in legs {
                v.extend_from_slice(l);
            }
            if (0..v.len()).all(|i| cartan.pairing(&v, i) <= 0) {
                out.push(v);
            }
        });
    }
    out
}

fn combine<'a>(
    per_leg: &'a [Vec<Vec<i64>>],
    i: usize,
    budget: i64,
    choice: &mut Vec<&'a [i64]>,
    emit: &mut impl FnMut(&[&[i64]]),
) {
    if i == per_leg.len() {
        emit(choice);
        return;
    }
    for seq in &per_leg[i] {
        let h: i64 = seq.iter().sum();
        if h > budget {
            continue;
        }
        if i >= choice.len() {
            choice.push(seq);
        } else {
            choice[i] = seq;
        }
        combine(per_leg, i + 1, budget - h, choice, emit);
    }
    choice.truncate(i);
}

fn upward_closure(cartan: &CartanData, seeds: Vec<Vec<i64>>, bound: i64) -> HashSet<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = seeds.into();
    while let Some(beta) = queue.pop_front() {
        let h: i64 = beta.iter().sum();
        for v in 0..beta.len() {
            let p = cartan.pairing(&beta, v);
            if p >= 0 || h - p > bound {
                continue;
            }
            let mut next = beta.clone();
            next[v] -= p;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// All positive roots of height `≤ height_bound`, sorted by height then
/// lexicographically. Imaginary roots are listed without multiplicity.
pub fn positive_roots_up_to(q: &StarQuiver, height_bound: u64) -> Vec<(RootVector, RootKind)> {
    let bound = height_bound as i64;
    let cartan = q.cartan();
    let n = q.num_vertices();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|v| {
            let mut c = vec![0; n];
            c[v] = 1;
            c
        })
        .collect();
    let imaginary_seeds = fundamental_set(q, &cartan, bound);

    // independent orbits; the merge below is order-insensitive
    let closures: Vec<HashSet<Vec<i64>>> = [simple, imaginary_seeds]
        .into_par_iter()
        .map(|seeds| if bound >= 1 { upward_closure(&cartan, seeds, bound) } else { HashSet::new() })
        .collect();

    let mut roots: Vec<(RootVector, RootKind)> = closures
        .into_iter()
        .flatten()
        .collect::<HashSet<_>>()
        .into_iter()
        .map(|c| {
            let kind = if cartan.tits_form(&c) == 1 { RootKind::Real } else { RootKind::Imaginary };
            (q.root(c), kind)
        })
        .collect();
    roots.sort();
    roots
}

/// Membership test by reflection descent.
pub fn is_root(q: &StarQuiver, alpha: &RootVector) -> RootKind {
    let cartan = q.cartan();
    let mut beta = alpha.coeffs().to_vec();
    if beta.len() != q.num_vertices() {
        return RootKind::NotRoot;
    }
    if beta.iter().all(|&c| c <= 0) {
        beta.iter_mut().for_each(|c| *c = -*c);
    }
    if !beta.iter().all(|&c| c >= 0) || beta.iter().all(|&c| c == 0) {
        return RootKind::NotRoot;
    }
    loop {
        let Some((v, p)) = (0..beta.len()).map(|v| (v, cartan.pairing(&beta, v))).find(|&(_, p)| p > 0)
        else {
            return if support_connected(q, &beta) { RootKind::Imaginary } else { RootKind::NotRoot };
        };
        let height: i64 = beta.iter().sum();
        if height == 1 {
            return RootKind::Real;
        }
        beta[v] -= p;
        if beta[v] < 0 {
            return RootKind::NotRoot;
        }
    }
}

fn support_connected(q: &StarQuiver, beta: &[i64]) -> bool {
    let nb = q.neighbors();
    let Some(start) = beta.iter().position(|&c| c != 0) else { return false };
    let mut seen = vec![false; beta.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &u in &nb[v] {
            if beta[u] != 0 && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    beta.iter().zip(&seen).all(|(&c, &s)| c == 0 || s)
}
