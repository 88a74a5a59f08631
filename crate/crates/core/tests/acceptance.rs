use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbidecide::certificate::Certificate;
use orbidecide::cli::main_with_args;
use orbidecide::deligne_simpson::{
    category_o_nonzero_genus0, cb_solvable, strict_root_search, verify_ds_certificate,
    verify_strict_witness, DSInstance,
};
use orbidecide::exactnum::{rat, CycNum, Rat};
use orbidecide::genus::{
    category_o_nonzero, det_condition, determinant_exponent, exists_findim_genus_ge1, Bounds,
    MultiplicityVector,
};
use orbidecide::input::InputFile;
use orbidecide::numeric::{
    gradient, objective, solve_numeric, verify_solution, NumericClassSpec, NumericOutcome, SolverConfig,
};
use orbidecide::orbifold::{c_eta_from_tau, tau_from_c_eta, CParams, EtaSign, ExponentSet, OrbifoldCurve};
use orbidecide::point_support::{point_support_witness, verify_point_witness};
use orbidecide::star_roots::{build_star, delta, positive_roots_up_to};
use orbidecide::Decision;

const AFFINE: [&[u32]; 4] = [&[2, 2, 2, 2], &[3, 3, 3], &[2, 4, 4], &[2, 3, 6]];
const GRAD_REL_TOL: f64 = 1e-6;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5EED_0000 + tag)
}

fn random_rat(r: &mut ChaCha8Rng, num: i64, den: i64) -> Rat {
    rat(r.random_range(-num..=num), r.random_range(1..=den))
}

fn random_cyc(r: &mut ChaCha8Rng) -> CycNum {
    let n = r.random_range(1..=12u32);
    let terms: Vec<(i64, Rat)> =
        (0..r.random_range(0..5)).map(|_| (r.random_range(0..n as i64), random_rat(r, 9, 9))).collect();
    CycNum::from_terms(n, terms)
}

fn random_params(r: &mut ChaCha8Rng, orders: &[u32], num: i64, den: i64) -> CParams {
    let c = orders
        .iter()
        .map(|&n| (1..n).map(|_| CycNum::from_rat(random_rat(r, num, den))).collect())
        .collect();
    let eta = orders.iter().map(|_| CycNum::from_rat(random_rat(r, num, den))).collect();
    CParams::new(c, eta)
}

fn random_exponents(r: &mut ChaCha8Rng, orders: &[u32], den: i64) -> ExponentSet {
    let rows: Vec<Vec<Rat>> = orders
        .iter()
        .map(|&n| (0..n).map(|_| rat(r.random_range(-2 * den..=2 * den), den)).collect())
        .collect();
    ExponentSet::from_rats(&rows)
}

/// Vertex count and edge list of the star with legs `n_i - 1`, center first.
fn star_graph(orders: &[u32]) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    let mut next = 1;
    for &n in orders {
        let mut prev = 0;
        for _ in 1..n {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    (next, edges)
}

fn tits(edges: &[(usize, usize)], v: &[i64]) -> i64 {
    v.iter().map(|x| x * x).sum::<i64>() - edges.iter().map(|&(a, b)| v[a] * v[b]).sum::<i64>()
}

fn box_vectors(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `Σ_i Σ_j (α_{i,j-1} - α_ij) e_ij` with leg coefficients read off the flat vector.
fn exponent_by_definition(orders: &[u32], e: &[Vec<Rat>], v: &[i64]) -> Rat {
    let mut total = Rat::zero();
    let mut at = 1;
    for (i, &n) in orders.iter().enumerate() {
        let leg: Vec<i64> = std::iter::once(v[0])
            .chain(v[at..at + n as usize - 1].iter().copied())
            .chain(std::iter::once(0))
            .collect();
        for j in 1..=n as usize {
            total += &e[i][j - 1] * Rat::from_integer((leg[j - 1] - leg[j]).into());
        }
        at += n as usize - 1;
    }
    total
}

fn exact_arithmetic() -> Outcome {
    let mut r = rng(1);
    let mut failures = 0;
    for _ in 0..1000 {
        let (a, b, c) = (random_cyc(&mut r), random_cyc(&mut r), random_cyc(&mut r));
        let mut ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a + &(-&a)).is_zero()
            && &a * &CycNum::one(1) == a;
        if !a.is_zero() {
            ok &= a.inverse().is_ok_and(|inv| (&a * &inv) == CycNum::one(1));
        }
        failures += usize::from(!ok);
    }
    let bad_sums: Vec<u32> = (2..=12u32)
        .filter(|&n| !(0..n as i64).map(|j| CycNum::root_of_unity(n, j)).sum::<CycNum>().is_zero())
        .collect();
    (
        failures == 0 && bad_sums.is_empty(),
        format!("{failures}/1000 field-law failures; root-of-unity sums nonzero for n in {bad_sums:?}"),
    )
}

fn parameter_round_trip() -> Outcome {
    let mut r = rng(2);
    let mut failures = 0;
    for k in 0..200 {
        let orders = AFFINE[k % 4];
        let curve = OrbifoldCurve::compact(0, orders.to_vec()).unwrap();
        let p = random_params(&mut r, orders, 20, 12);
        let sign = if k % 2 == 0 { EtaSign::S41 } else { EtaSign::S21 };
        let back = tau_from_c_eta(&curve, &p, sign).and_then(|e| c_eta_from_tau(&curve, &e, sign));
        failures += usize::from(back.as_ref() != Ok(&p));
    }
    (failures == 0, format!("{failures}/200 round-trip mismatches over 4 affine cases, both η signs"))
}

fn point_support_order_two() -> Outcome {
    let mut r = rng(3);
    let mut failures = 0;
    let mut yes = 0;
    for k in 0..500 {
        let c = if k % 3 == 0 {
            rat(2 * r.random_range(-20..=20) + 1, 2)
        } else {
            random_rat(&mut r, 40, 12)
        };
        // ζ = -1: a residue pair counts when the right side is a positive integer in a's class
        let sgn = |k: u64| if k.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
        let oracle = (1..=4u64).any(|a| {
            (1..=4u64).any(|b| {
                let rhs = (Rat::one() - sgn(a)) * sgn(b) * &c;
                rhs.is_integer() && rhs > Rat::zero() && (rhs.to_integer() - a).is_even()
            })
        });
        let half_odd = (&c * Rat::from_integer(2.into())).is_integer() && !c.is_integer();
        let row = [CycNum::from_rat(c.clone())];
        let decision = point_support_witness(2, &row);
        let verified = decision.certificate().is_none_or(|w| verify_point_witness(2, &row, *w));
        yes += usize::from(oracle);
        failures += usize::from(decision.is_yes() != oracle || oracle != half_odd || !verified);
    }
    (failures == 0, format!("{failures}/500 disagreements ({yes} half-odd inputs), oracle a,b ≤ 4"))
}

fn root_counts() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, orders, want) in [("A2", &[2u32][..], 3usize), ("A3", &[2, 2], 6), ("D4", &[2, 2, 2], 12)] {
        let (nv, edges) = star_graph(orders);
        let brute: BTreeSet<Vec<i64>> = box_vectors(&vec![3; nv])
            .into_iter()
            .filter(|v| v.iter().any(|&x| x > 0) && tits(&edges, v) == 1)
            .collect();
        let q = build_star(orders).unwrap();
        let listed: BTreeSet<Vec<i64>> =
            positive_roots_up_to(&q, 100).into_iter().map(|(r, _)| r.coeffs().to_vec()).collect();
        ok &= brute.len() == want && listed == brute;
        notes.push(format!("{name}={}", listed.len()));
    }
    for (name, orders) in [("D4(1)", &[2u32, 2, 2, 2][..]), ("E6(1)", &[3, 3, 3])] {
        let (nv, edges) = star_graph(orders);
        let mut nbrs = vec![Vec::new(); nv];
        for &(a, b) in &edges {
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        let kernel: Vec<Vec<i64>> = box_vectors(&vec![4; nv])
            .into_iter()
            .filter(|v| v.iter().any(|&x| x > 0))
            .filter(|v| (0..nv).all(|u| 2 * v[u] == nbrs[u].iter().map(|&w| v[w]).sum::<i64>()))
            .collect();
        let least = kernel.iter().min_by_key(|v| v.iter().sum::<i64>()).cloned().unwrap_or_default();
        let one_dim = kernel.iter().all(|v| v.iter().zip(&least).all(|(x, y)| x * least[0] == y * v[0]));
        let got = delta(&build_star(orders).unwrap()).unwrap();
        ok &= one_dim && got.coeffs() == least.as_slice();
        notes.push(format!("δ {name}={got}"));
    }
    (ok, notes.join(", "))
}

fn genus_zero_consistency() -> Outcome {
    let q = build_star(&[2, 2, 2, 2]).unwrap();
    let d = delta(&q).unwrap();
    let e0 = ExponentSet::untwisted(&[2, 2, 2, 2]);
    let e0_rats = vec![vec![rat(1, 2), rat(1, 1)]; 4];
    let by_def = exponent_by_definition(&[2, 2, 2, 2], &e0_rats, d.coeffs());
    let tau_zero = match strict_root_search(&q, &e0, 60) {
        Ok(Decision::Yes(w)) => {
            w.root == d && w.delta_multiple == Some(1) && w.exponent == CycNum::from_int(6) && by_def == rat(6, 1)
        }
        _ => false,
    };
    let mut r = rng(5);
    let mut failures = 0;
    for orders in AFFINE {
        let q = build_star(orders).unwrap();
        let d = delta(&q).unwrap();
        for _ in 0..50 {
            let den = r.random_range(1..=12);
            let rows: Vec<Vec<Rat>> = orders
                .iter()
                .map(|&n| (0..n).map(|_| rat(r.random_range(-3 * den..=3 * den), den)).collect())
                .collect();
            let k = exponent_by_definition(orders, &rows, d.coeffs()).denom().clone();
            let k: i64 = k.try_into().unwrap();
            let good = match strict_root_search(&q, &ExponentSet::from_rats(&rows), 60) {
                Ok(Decision::Yes(w)) => w.delta_multiple == Some(k) && w.root == d.scaled(k),
                _ => false,
            };
            failures += usize::from(!good);
        }
    }
    (
        tau_zero && failures == 0,
        format!("τ=0 on D4(1) gives δ with E=6: {tau_zero}; {failures}/200 rational-q cases missed the least kδ"),
    )
}

/// Exhaustive search for `rest` as a multiset of the given vectors, taken in index order.
fn decomposes(rest: &[i64], parts: &[Vec<i64>], start: usize) -> bool {
    if rest.iter().all(|&x| x == 0) {
        return true;
    }
    parts.iter().enumerate().skip(start).any(|(k, p)| {
        p.iter().zip(rest).all(|(a, b)| a <= b) && {
            let next: Vec<i64> = rest.iter().zip(p).map(|(a, b)| a - b).collect();
            decomposes(&next, parts, k)
        }
    })
}

/// `4 E(v)` on a star with all `n_i = 2`, exponents given as numerators over 4.
fn quarter_exponent(e: &[[i64; 2]], v: &[i64]) -> i64 {
    e.iter().enumerate().map(|(i, [x, y])| (v[0] - v[i + 1]) * x + v[i + 1] * y).sum()
}

fn cb_versus_brute_force() -> Outcome {
    let orders = [2u32, 2, 2, 2];
    let q = build_star(&orders).unwrap();
    let (_, edges) = star_graph(&orders);
    let mut count = 0usize;
    let mut failures = 0usize;
    let mut yes = 0usize;
    let mut filler = 0i64;
    for a0 in 1..=2i64 {
        for legs in box_vectors(&[a0; 4]) {
            let alpha: Vec<i64> = std::iter::once(a0).chain(legs.iter().copied()).collect();
            // affine D4: the positive roots are the nonzero vectors with q ≤ 1
            let roots: Vec<Vec<i64>> = box_vectors(&alpha)
                .into_iter()
                .filter(|v| v.iter().any(|&x| x > 0) && tits(&edges, v) <= 1)
                .collect();
            // exponents at zero multiplicity vary with the filler counter
            let sizes: Vec<i64> = legs.iter().map(|&b| if b == 0 || b == a0 { 3 } else { 15 }).collect();
            for pick in box_vectors(&sizes) {
                let mut e = [[0i64; 2]; 4];
                for (i, &p) in pick.iter().enumerate() {
                    filler += 1;
                    e[i] = match legs[i] {
                        0 => [p, filler % 4],
                        b if b == a0 => [filler % 4, p],
                        _ => [p / 4, p % 4],
                    };
                }
                let integral: Vec<Vec<i64>> =
                    roots.iter().filter(|v| quarter_exponent(&e, v) % 4 == 0).cloned().collect();
                let oracle = decomposes(&alpha, &integral, 0);
                let rows: Vec<Vec<Rat>> = e.iter().map(|[x, y]| vec![rat(*x, 4), rat(*y, 4)]).collect();
                let inst = DSInstance::new(ExponentSet::from_rats(&rows), q.root(alpha.clone())).unwrap();
                let agree = match cb_solvable(&inst, 1 << 22).unwrap() {
                    Decision::Yes(cert) => oracle && verify_ds_certificate(&inst, &cert),
                    Decision::No => !oracle,
                    Decision::UnknownUpTo(_) => false,
                };
                count += 1;
                yes += usize::from(oracle);
                failures += usize::from(!agree);
            }
        }
    }
    (
        failures == 0,
        format!("{failures}/{count} disagreements on D4, d ≤ 2, exponents in Z/4 ({yes} solvable)"),
    )
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus/numeric")
}

fn corpus() -> Vec<(String, DSInstance)> {
    let mut paths: Vec<PathBuf> =
        std::fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let inst = InputFile::parse(&text).unwrap().ds_instance(EtaSign::S41).unwrap();
            (p.file_stem().unwrap().to_string_lossy().into_owned(), inst)
        })
        .collect()
}

fn numeric_agreement() -> Outcome {
    let cfg = SolverConfig::default();
    let mut solvable = 0;
    let mut unsolvable = 0;
    let mut bad = Vec::new();
    let instances = corpus();
    for (name, inst) in &instances {
        let spec = NumericClassSpec::from_instance(inst).unwrap();
        let total = cb_solvable(inst, 1 << 22).unwrap();
        let numeric = solve_numeric(&spec, &cfg);
        let ok = match (&total, &numeric) {
            (Decision::Yes(_), NumericOutcome::Found(sol)) => {
                solvable += 1;
                verify_solution(sol, &spec, cfg.tol, cfg.eig_tol)
            }
            (Decision::No, NumericOutcome::NotFound) => {
                unsolvable += 1;
                true
            }
            _ => false,
        };
        if !ok || inst.dimension() > 3 {
            bad.push(name.clone());
        }
    }

    let mut r = rng(7);
    let mut worst: f64 = 0.0;
    let varied: Vec<NumericClassSpec> = instances
        .iter()
        .map(|(_, i)| NumericClassSpec::from_instance(i).unwrap())
        .filter(|s| s.points().iter().all(|p| p.multiplicities.iter().filter(|&&m| m > 0).count() >= 2))
        .collect();
    for k in 0..50 {
        let spec = &varied[k % varied.len()];
        let d = spec.d();
        let gs: Vec<DMatrix<Complex64>> = (0..spec.points().len())
            .map(|_| {
                DMatrix::from_fn(d, d, |i, j| {
                    let base = if i == j { 1.0 } else { 0.0 };
                    Complex64::new(base + r.random_range(-0.5..0.5), r.random_range(-0.5..0.5))
                })
            })
            .collect();
        let lambda = if k % 2 == 0 { 0.0 } else { 1e-2 };
        let analytic = gradient(spec, &gs, lambda).expect("random conjugators are invertible");
        let h = 1e-6;
        let mut diff = 0.0;
        let mut norm = 0.0;
        for (m, g) in gs.iter().enumerate() {
            for idx in 0..d * d {
                let partial = |step: Complex64| {
                    let mut plus = gs.clone();
                    let mut minus = gs.clone();
                    plus[m][idx] = g[idx] + step;
                    minus[m][idx] = g[idx] - step;
                    (objective(spec, &plus, lambda) - objective(spec, &minus, lambda)) / (2.0 * h)
                };
                let fd = Complex64::new(partial(Complex64::new(h, 0.0)), partial(Complex64::new(0.0, h)));
                diff += (analytic[m][idx] - fd).norm_sqr();
                norm += analytic[m][idx].norm_sqr();
            }
        }
        worst = worst.max(diff.sqrt() / norm.sqrt().max(1e-300));
    }
    (
        bad.is_empty() && solvable == 10 && unsolvable == 10 && worst < GRAD_REL_TOL,
        format!(
            "{solvable}/10 solvable found, {unsolvable}/10 unsolvable not found ({} restarts, tol {:e}, eig_tol {:e}){}; \
             gradient worst relative error {worst:.2e} over 50 points (bound {GRAD_REL_TOL:e})",
            cfg.restarts,
            cfg.tol,
            cfg.eig_tol,
            if bad.is_empty() { String::new() } else { format!(", mismatched {bad:?}") }
        ),
    )
}

fn shoda_route() -> Outcome {
    let e = ExponentSet::from_rats(&[vec![rat(1, 2), rat(1, 1)]]);
    let want = MultiplicityVector::new(2, vec![vec![2, 0]]).unwrap();
    let want_ok = det_condition(&e, &want).unwrap()
        && determinant_exponent(&e, &want).unwrap() == CycNum::from_int(1);
    let got = exists_findim_genus_ge1(&e, 2);
    let got_text = match &got {
        Decision::Yes(mv) => format!("{mv}, E={}", determinant_exponent(&e, mv).unwrap()),
        other => other.to_string(),
    };
    let torus = got == Decision::Yes(want.clone());

    let mut r = rng(8);
    let mut noncompact_failures = 0;
    for _ in 0..100 {
        let orders: Vec<u32> = (0..r.random_range(0..4)).map(|_| r.random_range(2..=6)).collect();
        let curve = OrbifoldCurve::new(r.random_range(0..3), false, r.random_range(1..4), orders.clone()).unwrap();
        let p = random_params(&mut r, &orders, 9, 7);
        let ok = match category_o_nonzero(&curve, &p, &Bounds::default(), EtaSign::S41) {
            Ok(Decision::Yes(cert @ Certificate::Noncompact { .. })) => cert.replay(&curve, &p, EtaSign::S41),
            _ => false,
        };
        noncompact_failures += usize::from(!ok);
    }
    (
        torus && noncompact_failures == 0,
        format!(
            "torus e=(1/2,1) expected d=2 m=(2,0) with E=1 (condition holds for it: {want_ok}), got {got_text}; \
             {noncompact_failures}/100 punctured inputs not Yes"
        ),
    )
}

fn replay_and_determinism() -> Outcome {
    let mut r = rng(9);
    let bounds = Bounds { d_max: 8, height: 12, ..Bounds::default() };
    let shapes: [&[u32]; 8] =
        [&[2, 2, 2, 2], &[3, 3, 3], &[2, 3, 5], &[2, 4, 4], &[2, 3, 6], &[3, 3, 4], &[2, 2], &[]];
    let mut yes = 0;
    let mut failures = 0;
    for k in 0..400 {
        let orders = shapes[k % shapes.len()].to_vec();
        let genus = if k % 3 == 0 { 1 + (k % 2) as u32 } else { 0 };
        let curve = OrbifoldCurve::compact(genus, orders.clone()).unwrap();
        let p = random_params(&mut r, &orders, 6, 4);
        let sign = if k % 5 == 0 { EtaSign::S21 } else { EtaSign::S41 };
        let decision = if genus == 0 {
            category_o_nonzero_genus0(&curve, &p, &bounds, sign)
        } else {
            category_o_nonzero(&curve, &p, &bounds, sign)
        }
        .unwrap();
        if let Decision::Yes(cert) = decision {
            yes += 1;
            let direct = match &cert {
                Certificate::StrictRoot(w) if !orders.is_empty() => {
                    verify_strict_witness(&tau_from_c_eta(&curve, &p, sign).unwrap(), w)
                }
                _ => true,
            };
            failures += usize::from(!(cert.replay(&curve, &p, sign) && direct));
        }
    }
    for (_, inst) in corpus() {
        if let Decision::Yes(cert) = cb_solvable(&inst, 1 << 22).unwrap() {
            yes += 1;
            failures += usize::from(!verify_ds_certificate(&inst, &cert));
        }
    }
    let mut e_rng = rng(10);
    for _ in 0..100 {
        let e = random_exponents(&mut e_rng, &[2, 3], 6);
        if let Decision::Yes(mv) = exists_findim_genus_ge1(&e, 6) {
            yes += 1;
            failures += usize::from(!det_condition(&e, &mv).unwrap());
        }
    }

    let inputs = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/inputs");
    let mut runs: Vec<Vec<String>> = Vec::new();
    for name in ["d4_tau_zero.txt", "torus_half.txt", "d4_point_support.txt", "punctured.txt"] {
        runs.push(vec!["check-o".into(), inputs.join(name).display().to_string()]);
    }
    runs.push(vec!["gdaha".into(), "a-roots".into(), inputs.join("gdaha_d4.txt").display().to_string()]);
    let mut corpus_paths: Vec<PathBuf> =
        std::fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    corpus_paths.sort();
    for p in corpus_paths.iter().take(4) {
        runs.push(vec!["ds".into(), "check".into(), p.display().to_string()]);
        runs.push(vec!["ds".into(), "solve-numeric".into(), p.display().to_string()]);
    }
    let mut cli_yes = 0;
    let mut cli_bad = 0;
    let mut nondeterministic = 0;
    for args in &runs {
        let once = || {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let code = main_with_args(std::iter::once("orbidecide".to_string()).chain(args.clone()), &mut out, &mut err);
            (code, out, err)
        };
        let first = once();
        let second = once();
        nondeterministic += usize::from(first != second);
        let text = String::from_utf8_lossy(&first.1);
        if text.lines().any(|l| l.starts_with("YES")) {
            cli_yes += 1;
            cli_bad += usize::from(!text.contains("replay ok"));
        }
    }
    (
        failures == 0 && cli_bad == 0 && nondeterministic == 0,
        format!(
            "{}/{yes} library certificates and {}/{cli_yes} CLI YES reports replay; {nondeterministic}/{} CLI runs differ between repeats",
            yes - failures,
            cli_yes - cli_bad,
            runs.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("exact arithmetic", exact_arithmetic),
        ("parameter round-trip", parameter_round_trip),
        ("point support n=2", point_support_order_two),
        ("root counts and δ", root_counts),
        ("genus-0 strict roots", genus_zero_consistency),
        ("decomposition vs brute force", cb_versus_brute_force),
        ("numeric oracle", numeric_agreement),
        ("genus ≥ 1 and noncompact routes", shoda_route),
        ("replay and determinism", replay_and_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = check();
        println!(
            "{} {} {name}: {detail} [{:.1}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
        if !pass {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
