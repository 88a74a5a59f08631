//! Command-line front end.
//!
//! Every command reads one input file, prints a report, and exits with 0 once
//! a decision is computed (including `NO` and `UNKNOWN`). Input, validation,
//! and routing problems exit with 2.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::decision::Decision;
use crate::deligne_simpson::{category_o_nonzero_genus0, cb_solvable, verify_ds_certificate};
use crate::gdaha::{gdaha_params_report, gdaha_report};
use crate::genus::{category_o_nonzero, Bounds};
use crate::input::{InputError, InputFile};
use crate::numeric::{solve_numeric, NumericClassSpec, NumericOutcome, SolverConfig};
use crate::orbifold::{hecke_presentation, q_param, twists, EtaSign};
use crate::point_support::point_support_witness;
use crate::star_roots::{classify, delta, positive_roots_up_to, KacMoodyType, RootKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "orbidecide", version, about = "Decides nonvanishing of category O for orbifold Cherednik algebras")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Largest dimension for the determinant search.
    #[arg(long, global = true, default_value_t = 24)]
    pub dmax: u64,
    /// Root height bound in indefinite type.
    #[arg(long, global = true, default_value_t = 60)]
    pub height: u64,
    #[arg(long = "eta-sign", global = true, default_value = "s41")]
    pub eta_sign: EtaSign,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of numeric restarts.
    #[arg(long, global = true, default_value_t = 64)]
    pub seeds: u32,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Largest lattice box searched by `ds check`.
    #[arg(long = "box-cap", global = true, default_value_t = 1 << 22)]
    pub box_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kac-Moody type of the star quiver.
    Classify { input: PathBuf },
    /// Exponents, twists, q, and the Hecke presentation.
    Tau { input: PathBuf },
    /// Point-supported modules, one line per point.
    PointSupport { input: PathBuf },
    /// Nonvanishing of category O, routed by genus and compactness.
    CheckO { input: PathBuf },
    /// Positive roots up to `--height`.
    Roots { input: PathBuf },
    #[command(subcommand)]
    Ds(DsCommand),
    #[command(subcommand)]
    Gdaha(GdahaCommand),
}

#[derive(Debug, Subcommand)]
pub enum DsCommand {
    /// Crawley-Boevey decomposition test.
    Check { input: PathBuf },
    /// Numeric search for matrices in the prescribed classes.
    SolveNumeric {
        input: PathBuf,
        /// Expected dimension; must match alpha_0.
        #[arg(long)]
        d: Option<i64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GdahaCommand {
    MapParams { input: PathBuf },
    ARoots { input: PathBuf },
}

/// Report rows; fields are joined by spaces or tabs depending on the format.
#[derive(Default)]
struct Report(Vec<Vec<String>>);

impl Report {
    fn row<I: IntoIterator<Item = S>, S: ToString>(&mut self, fields: I) {
        self.0.push(fields.into_iter().map(|s| s.to_string()).collect());
    }

    fn decision<C: fmt::Display>(&mut self, d: &Decision<C>) {
        match d {
            Decision::Yes(c) => self.row(["YES".to_string(), c.to_string()]),
            Decision::No => self.row(["NO"]),
            Decision::UnknownUpTo(b) => self.row(["UNKNOWN".to_string(), format!("up to {b}")]),
        }
    }

    fn render(&self, format: Format) -> String {
        let sep = match format {
            Format::Human => " ",
            Format::Tsv => "\t",
        };
        self.0.iter().map(|r| r.join(sep) + "\n").collect()
    }
}

enum Failure {
    Input(InputError),
    Other(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<crate::error::EngineError> for Failure {
    fn from(e: crate::error::EngineError) -> Self {
        Failure::Other(e.to_string())
    }
}

fn load(path: &PathBuf) -> Result<InputFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Other(format!("cannot read {}: {e}", path.display())))?;
    InputFile::parse(&text).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))
}

fn list<T: ToString>(xs: &[T]) -> String {
    format!("({})", xs.iter().map(T::to_string).collect::<Vec<_>>().join(","))
}

fn bounds(cfg: &RunConfig) -> Bounds {
    Bounds { d_max: cfg.dmax, height: cfg.height, box_cap: cfg.box_cap, ..Bounds::default() }
}

fn validate(cfg: &RunConfig) -> Result<(), Failure> {
    if cfg.dmax == 0 || cfg.height == 0 || cfg.seeds == 0 || cfg.box_cap == 0 {
        return Err(Failure::Other("--dmax, --height, --seeds and --box-cap must be positive".into()));
    }
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err(Failure::Other("--tol must be positive".into()));
    }
    Ok(())
}

fn require_genus0(f: &InputFile) -> Result<(), Failure> {
    match f.genus() {
        Some(g) if g != 0 => Err(Failure::Other(format!(
            "routing error: Deligne-Simpson commands need genus 0, input has genus {g}"
        ))),
        _ => Ok(()),
    }
}

fn execute(cfg: &RunConfig) -> Result<Report, Failure> {
    validate(cfg)?;
    let mut rep = Report::default();
    match &cfg.command {
        Command::Classify { input } => {
            let f = load(input)?;
            let q = f.quiver()?;
            let kind = classify(&q);
            rep.row(["orders".to_string(), list(&q.orders())]);
            rep.row(["type".to_string(), kind.to_string()]);
            if kind == KacMoodyType::Affine {
                rep.row(["delta".to_string(), delta(&q)?.to_string()]);
            }
        }
        Command::Tau { input } => {
            let f = load(input)?;
            let curve = f.curve()?;
            let (p, e) = f.parameters(&curve, cfg.eta_sign)?;
            for (i, row) in p.rows().iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    rep.row([format!("c[{}][{}]", i + 1, j + 1), c.to_string()]);
                }
                rep.row([format!("eta[{}]", i + 1), p.eta(i).to_string()]);
            }
            let t = twists(&e);
            for (i, row) in e.rows().iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    rep.row([format!("e[{}][{}]", i + 1, j + 1), x.to_string()]);
                    rep.row([format!("t[{}][{}]", i + 1, j + 1), t[i][j].to_string()]);
                }
            }
            rep.row(["q".to_string(), q_param(&e).to_string()]);
            for line in hecke_presentation(&curve, &e)?.to_string().lines() {
                rep.row(["relation", line]);
            }
        }
        Command::PointSupport { input } => {
            let f = load(input)?;
            let curve = f.curve()?;
            let (p, _) = f.parameters(&curve, cfg.eta_sign)?;
            for (i, &n) in curve.points().iter().enumerate() {
                let label = format!("P{}", i + 1);
                match point_support_witness(n, p.c_row(i)) {
                    Decision::Yes(w) => rep.row([label, "YES".into(), w.to_string()]),
                    _ => rep.row([label, "NO".into()]),
                }
            }
        }
        Command::CheckO { input } => {
            let f = load(input)?;
            let curve = f.curve()?;
            let (p, _) = f.parameters(&curve, cfg.eta_sign)?;
            let b = bounds(cfg);
            let (route, d) = if curve.is_compact() && curve.genus() == 0 {
                ("genus0", category_o_nonzero_genus0(&curve, &p, &b, cfg.eta_sign)?)
            } else if curve.is_compact() {
                ("genus>=1", category_o_nonzero(&curve, &p, &b, cfg.eta_sign)?)
            } else {
                ("noncompact", category_o_nonzero(&curve, &p, &b, cfg.eta_sign)?)
            };
            rep.row(["route", route]);
            rep.decision(&d);
            if let Decision::Yes(c) = &d {
                rep.row(["criterion", c.criterion()]);
                rep.row(["replay", replay_word(c.replay(&curve, &p, cfg.eta_sign))]);
            }
        }
        Command::Roots { input } => {
            let f = load(input)?;
            let q = f.quiver()?;
            let roots = positive_roots_up_to(&q, cfg.height);
            rep.row(["type".to_string(), classify(&q).to_string()]);
            rep.row(["count".to_string(), roots.len().to_string()]);
            for (r, kind) in roots {
                let k = if kind == RootKind::Real { "real" } else { "imaginary" };
                rep.row([r.to_string(), k.to_string()]);
            }
        }
        Command::Ds(DsCommand::Check { input }) => {
            let f = load(input)?;
            require_genus0(&f)?;
            let inst = f.ds_instance(cfg.eta_sign)?;
            let d = cb_solvable(&inst, cfg.box_cap)?;
            rep.row(["alpha".to_string(), inst.alpha().to_string()]);
            rep.decision(&d);
            if let Decision::Yes(c) = &d {
                rep.row(["criterion", "CB"]);
                rep.row(["replay", replay_word(verify_ds_certificate(&inst, c))]);
            }
        }
        Command::Ds(DsCommand::SolveNumeric { input, d }) => {
            let f = load(input)?;
            require_genus0(&f)?;
            let inst = f.ds_instance(cfg.eta_sign)?;
            if let Some(d) = d {
                if *d != inst.dimension() {
                    return Err(Failure::Other(format!("--d {d} but alpha_0 = {}", inst.dimension())));
                }
            }
            let spec = NumericClassSpec::from_instance(&inst)?;
            let solver = SolverConfig { tol: cfg.tol, restarts: cfg.seeds, seed: cfg.seed, ..SolverConfig::default() };
            match solve_numeric(&spec, &solver) {
                NumericOutcome::NotFound => rep.row(["NOTFOUND"]),
                NumericOutcome::Found(sol) => {
                    rep.row([
                        "FOUND".to_string(),
                        format!("restart={}", sol.restart),
                        format!("residual={:.3e}", sol.residual),
                    ]);
                    for (i, t) in sol.matrices.iter().enumerate() {
                        rep.row([format!("T{}", i + 1)]);
                        for r in 0..t.nrows() {
                            rep.row((0..t.ncols()).map(|c| {
                                let z = t[(r, c)];
                                format!("{:+.12}{:+.12}i", z.re + 0.0, z.im + 0.0)
                            }));
                        }
                    }
                }
            }
        }
        Command::Gdaha(sub) => {
            let (input, full) = match sub {
                GdahaCommand::MapParams { input } => (input, false),
                GdahaCommand::ARoots { input } => (input, true),
            };
            let f = load(input)?;
            let q = f.quiver()?;
            let w = f.wreath(&q)?;
            let text = if full {
                let (text, d) = gdaha_report(&q, &w, cfg.height)?;
                format!("{text}DECISION {}\n", d.map(|()| ""))
            } else {
                gdaha_params_report(&q, &w)?
            };
            for line in text.lines() {
                rep.row([line]);
            }
        }
    }
    Ok(rep)
}

fn replay_word(ok: bool) -> &'static str {
    if ok { "ok" } else { "FAILED" }
}

/// Runs one command; returns the process exit status.
pub fn run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cfg) {
        Ok(rep) => {
            let _ = out.write_all(rep.render(cfg.format).as_bytes());
            0
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Other(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Parses arguments (including the program name) and runs.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, out, err),
        Err(e) => {
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            e.exit_code()
        }
    }
}
