//! Command-line front end for `tvo`.
//!
//! [`run`] parses arguments and returns a [`CommandResult`]; the binary only
//! prints it. Exit codes: 0 success, 1 a check failed, 2 usage or input error.

mod builtins;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use tvo::catalog::{e6_lens_reference, fixtures_for, save_modular_file, FixtureSource};
use tvo::statesum::tv_evaluate;
use tvo::surgery::{plumbing_invariant, InvariantValue, Manifold, PlumbingTree};
use tvo::{conjugate_equivalent, verify_verlinde, ModularData};

pub use builtins::{
    resolve_modular, resolve_sixj, resolve_triangulation, MODULAR_BUILTINS, SIXJ_BUILTINS,
    TRIANGULATION_BUILTINS,
};

/// Residual above which a golden fixture fails.
pub const GOLDEN_TOLERANCE: f64 = 1e-6;

const STRICT_TOLERANCE: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(name = "tvo", version, about = "3-manifold invariants from modular data")]
pub struct Cli {
    /// List the names accepted after `builtin:` and exit.
    #[arg(long)]
    pub list_builtins: bool,

    /// Worker threads for the evaluators.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,

    /// Also write every computed value as a `re im` line to this file.
    #[arg(long, value_name = "FILE")]
    pub record: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Verlinde basis axioms and report the anomaly phase.
    Verify {
        #[arg(long, value_name = "SOURCE")]
        data: String,
    },
    /// Evaluate a surgery invariant.
    Invariant {
        #[command(subcommand)]
        manifold: ManifoldArg,
    },
    /// Evaluate the triangulation state sum for pointed 6j data.
    Statesum {
        #[arg(long, value_name = "SOURCE")]
        sixj: String,
        #[arg(long, value_name = "SOURCE")]
        tri: String,
    },
    /// Search for a label permutation relating two data sets.
    Compare {
        #[arg(long, value_name = "SOURCE")]
        a: String,
        #[arg(long, value_name = "SOURCE")]
        b: String,
        /// Match `a` against the complex conjugate of `b`.
        #[arg(long)]
        conjugate: bool,
    },
    /// Compare invariants of supplied data with stored reference values.
    Golden {
        #[arg(long)]
        source: FixtureSource,
        #[arg(long, value_name = "SOURCE")]
        data: Option<String>,
        /// Conjugate the data before evaluating.
        #[arg(long)]
        conjugate: bool,
    },
    /// Write modular data in the text format.
    Export {
        #[arg(long, value_name = "SOURCE")]
        data: String,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
        #[arg(long)]
        conjugate: bool,
    },
}

#[derive(Args, Debug)]
pub struct DataArg {
    #[arg(long, value_name = "SOURCE")]
    pub data: String,
}

#[derive(Subcommand, Debug)]
pub enum ManifoldArg {
    /// Lens space L(p,q).
    Lens {
        #[arg(short)]
        p: u64,
        #[arg(short, default_value_t = 1)]
        q: u64,
        #[command(flatten)]
        data: DataArg,
    },
    /// Brieskorn sphere M(p,q,r).
    Brieskorn {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
        #[arg(short)]
        r: u64,
        #[command(flatten)]
        data: DataArg,
    },
    /// Plumbing tree read from a file.
    Plumbing {
        #[arg(long, value_name = "FILE")]
        tree: PathBuf,
        #[command(flatten)]
        data: DataArg,
    },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CommandResult {
    pub code: i32,
    /// Report for standard output.
    pub lines: Vec<String>,
    /// Messages for standard error.
    pub errors: Vec<String>,
    /// Computed values, in order.
    pub record: Vec<Complex64>,
}

impl CommandResult {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, errors: vec![message.into()], ..Self::default() }
    }

    fn say(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn warn(&mut self, line: impl Into<String>) {
        self.errors.push(line.into());
    }

    /// Machine-readable form of [`record`](Self::record).
    pub fn record_text(&self) -> String {
        self.record.iter().fold(String::new(), |mut out, z| {
            let _ = writeln!(out, "{}", format_complex(*z));
            out
        })
    }
}

fn fixed(x: f64) -> String {
    let s = format!("{x:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

/// `re im` with twelve decimals and no negative zero.
pub fn format_complex(z: Complex64) -> String {
    format!("{} {}", fixed(z.re), fixed(z.im))
}

/// Parses a line written by [`format_complex`].
pub fn parse_complex(line: &str) -> Option<Complex64> {
    let mut it = line.split_whitespace();
    let re = it.next()?.parse().ok()?;
    let im = it.next()?.parse().ok()?;
    it.next().is_none().then_some(Complex64::new(re, im))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult::usage(text.trim_end())
            } else {
                CommandResult { lines: vec![text.trim_end().to_string()], ..Default::default() }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.into()).build() {
        Ok(pool) => pool,
        Err(e) => return CommandResult::usage(format!("cannot start thread pool: {e}")),
    };
    let mut result = pool.install(|| dispatch(&cli));
    if let Some(path) = &cli.record {
        if let Err(e) = std::fs::write(path, result.record_text()) {
            result.warn(format!("cannot write {}: {e}", path.display()));
            result.code = 2;
        }
    }
    result
}

fn dispatch(cli: &Cli) -> CommandResult {
    if cli.list_builtins {
        return list_builtins();
    }
    match &cli.command {
        None => CommandResult::usage("no command given (try --help)"),
        Some(Command::Verify { data }) => cmd_verify(data),
        Some(Command::Invariant { manifold }) => cmd_invariant(manifold),
        Some(Command::Statesum { sixj, tri }) => cmd_statesum(sixj, tri),
        Some(Command::Compare { a, b, conjugate }) => cmd_compare(a, b, *conjugate),
        Some(Command::Golden { source, data, conjugate }) => {
            cmd_golden(*source, data.as_deref(), *conjugate)
        }
        Some(Command::Export { data, out, conjugate }) => cmd_export(data, out, *conjugate),
    }
}

fn list_builtins() -> CommandResult {
    let mut r = CommandResult::default();
    for (title, table) in [
        ("modular data (--data, --a, --b)", MODULAR_BUILTINS),
        ("6j data (--sixj)", SIXJ_BUILTINS),
        ("triangulations (--tri)", TRIANGULATION_BUILTINS),
    ] {
        r.say(format!("{title}:"));
        for (name, about) in table {
            r.say(format!("  builtin:{name:<24} {about}"));
        }
    }
    r
}

macro_rules! try_or_usage {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return CommandResult::usage(e.to_string()),
        }
    };
}

pub fn cmd_verify(source: &str) -> CommandResult {
    let data = try_or_usage!(resolve_modular(source));
    let report = try_or_usage!(verify_verlinde(&data));
    let mut r = CommandResult::default();
    r.say(format!("rank {}", data.rank()));
    for (name, check) in report.checks() {
        let verdict = if check.passed { "pass" } else { "FAIL" };
        r.say(format!("{verdict}  {name:<36} residual {:.3e}", check.residual));
    }
    r.say(format!("anomaly phase {}", format_complex(report.anomaly_phase)));
    r.record.push(report.anomaly_phase);
    if report.is_strict(STRICT_TOLERANCE) {
        r.say("strict: all axioms hold with (ST)^3 = S^2");
    } else {
        r.code = 1;
        if report.matrix_axioms_pass() {
            r.say("not strict: (ST)^3 = u S^2 with the anomaly phase u above");
        } else {
            r.say("not strict: axioms fail");
        }
    }
    r
}

fn report_value(r: &mut CommandResult, label: &str, v: InvariantValue) {
    r.say(format_complex(v.value));
    r.say(format!("{label} via {}", v.method));
    r.record.push(v.value);
}

fn warn_if_anomalous(r: &mut CommandResult, data: &ModularData) {
    match verify_verlinde(data) {
        Ok(rep) if rep.is_strict(STRICT_TOLERANCE) => {}
        Ok(rep) => r.warn(format!(
            "warning: data is not strictly anomaly free (phase {}); values are not TVO invariants",
            format_complex(rep.anomaly_phase)
        )),
        Err(e) => r.warn(format!("warning: data fails verification: {e}")),
    }
}

pub fn cmd_invariant(manifold: &ManifoldArg) -> CommandResult {
    let (data, label, value) = match manifold {
        ManifoldArg::Lens { p, q, data } => {
            let m = Manifold::Lens { p: *p, q: *q };
            let d = try_or_usage!(resolve_modular(&data.data));
            let v = m.evaluate(&d);
            (d, m.to_string(), v)
        }
        ManifoldArg::Brieskorn { p, q, r, data } => {
            let m = Manifold::Brieskorn { p: *p, q: *q, r: *r };
            let d = try_or_usage!(resolve_modular(&data.data));
            let v = m.evaluate(&d);
            (d, m.to_string(), v)
        }
        ManifoldArg::Plumbing { tree, data } => {
            let t = try_or_usage!(PlumbingTree::load(tree));
            let d = try_or_usage!(resolve_modular(&data.data));
            let v = plumbing_invariant(&d, &t);
            (d, format!("plumbing {}", tree.display()), v)
        }
    };
    let v = try_or_usage!(value);
    let mut r = CommandResult::default();
    warn_if_anomalous(&mut r, &data);
    report_value(&mut r, &label, v);
    r
}

pub fn cmd_statesum(sixj: &str, tri: &str) -> CommandResult {
    let data = try_or_usage!(resolve_sixj(sixj));
    let tri = try_or_usage!(resolve_triangulation(tri));
    let v = try_or_usage!(tv_evaluate(&data, &tri));
    let mut r = CommandResult::default();
    r.say(format!(
        "{} tetrahedra, {} vertices, {} edges",
        tri.len(),
        tri.num_vertices(),
        tri.num_edges()
    ));
    report_value(&mut r, "state sum", v);
    r
}

pub fn cmd_compare(a: &str, b: &str, conjugate: bool) -> CommandResult {
    let a = try_or_usage!(resolve_modular(a));
    let b = try_or_usage!(resolve_modular(b));
    let found = if conjugate {
        conjugate_equivalent(&a, &b)
    } else {
        tvo::modular::permutation_equivalent(&a, &b)
    };
    let mut r = CommandResult::default();
    match try_or_usage!(found) {
        Some(eq) => r.say(format!("equivalence {eq}")),
        None => {
            r.say("no equivalence");
            r.code = 1;
        }
    }
    r
}

pub fn cmd_golden(source: FixtureSource, data: Option<&str>, conjugate: bool) -> CommandResult {
    let fixtures = fixtures_for(source);
    let mut r = CommandResult::default();
    let Some(data) = data else {
        if source != FixtureSource::E6 {
            return CommandResult::usage(format!(
                "fixtures for '{source}' need --data with the corresponding modular data"
            ));
        }
        r.say("no data file: checking the E6 lens-space closed forms against the fixtures");
        for f in &fixtures {
            let Manifold::Lens { p, q } = f.manifold else {
                r.say(format!("skip  {:<10} needs data", f.manifold.to_string()));
                continue;
            };
            let got = try_or_usage!(e6_lens_reference(p, q));
            golden_line(&mut r, &f.manifold, got, f.expected);
        }
        return r;
    };
    let mut data = try_or_usage!(resolve_modular(data));
    if conjugate {
        data = data.conjugate();
    }
    warn_if_anomalous(&mut r, &data);
    for f in &fixtures {
        match f.manifold.evaluate(&data) {
            Ok(v) => golden_line(&mut r, &f.manifold, v.value, f.expected),
            Err(e) => {
                r.say(format!("FAIL  {:<10} {e}", f.manifold.to_string()));
                r.code = 1;
            }
        }
    }
    r
}

fn golden_line(r: &mut CommandResult, m: &Manifold, got: Complex64, want: Complex64) {
    let residual = (got - want).norm();
    let pass = residual <= GOLDEN_TOLERANCE;
    r.say(format!(
        "{}  {:<10} got {}  expected {}  residual {residual:.3e}",
        if pass { "pass" } else { "FAIL" },
        m.to_string(),
        format_complex(got),
        format_complex(want)
    ));
    r.record.push(got);
    if !pass {
        r.code = 1;
    }
}

pub fn cmd_export(source: &str, out: &std::path::Path, conjugate: bool) -> CommandResult {
    let mut data = try_or_usage!(resolve_modular(source));
    if conjugate {
        data = data.conjugate();
    }
    try_or_usage!(save_modular_file(&data, out));
    let mut r = CommandResult::default();
    r.say(format!("wrote rank {} data to {}", data.rank(), out.display()));
    r
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book {}
