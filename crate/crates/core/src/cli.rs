//! Command-line front end for the `f4` binary.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::export::{self, MultipletRecord, RootRecord};
use crate::multiplet::fixtures::{match_fixtures, FixtureTable};
use crate::multiplet::{generate, ks_pairing, MultipletGraph, Params};
use crate::parabolic::ParabolicSpec;
use crate::rootsys::{epsilon_coords, LengthClass, RootSystem};
use crate::verify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "f4",
    version,
    about = "F4 root data and the sl(3)+sl(2) parabolic multiplet"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots with norms, ε-coordinates and length classes.
    Roots(RootsArgs),
    /// Generate the multiplet and print a summary, JSON or DOT.
    Multiplet(MultipletArgs),
    /// Run all consistency checks; exit 1 if any fails.
    Verify(VerifyArgs),
    /// Write roots and multiplet as one JSON document, or the multiplet as DOT.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct LabelArgs {
    /// Concrete Dynkin labels, all >= 1.
    #[arg(long, num_args = 4, value_names = ["A", "B", "C", "D"], allow_negative_numbers = true, conflicts_with = "symbolic")]
    pub labels: Option<Vec<i64>>,
    /// Keep the labels as the symbols m1..m4 (default).
    #[arg(long)]
    pub symbolic: bool,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Restrict to the roots supported on these simple roots (1-based).
    #[arg(long, value_delimiter = ',')]
    pub subsystem: Option<Vec<usize>>,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MultipletArgs {
    #[command(flatten)]
    pub labels: LabelArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub labels: LabelArgs,
    /// Fixture table to match against instead of the bundled one.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub labels: LabelArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn internal(e: impl std::fmt::Display) -> Self {
        CliError {
            code: EXIT_INTERNAL,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, CliError>;

fn params_of(args: &LabelArgs) -> Result<Params, CliError> {
    match &args.labels {
        None => Ok(Params::Symbolic),
        Some(v) => {
            let labels: [i64; 4] = v
                .as_slice()
                .try_into()
                .map_err(|_| CliError::usage("--labels takes exactly four integers"))?;
            if labels.iter().any(|&x| x < 1) {
                return Err(CliError::usage(format!(
                    "labels must all be >= 1, got {labels:?}"
                )));
            }
            Ok(Params::Concrete(labels))
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(CliError::internal)?;
    s.push('\n');
    Ok(s)
}

fn named_multiplet(params: Params) -> Result<MultipletGraph, CliError> {
    let rs = RootSystem::f4();
    let mut g = generate(&rs, &ParabolicSpec::f4_sl3_sl2(), params).map_err(CliError::internal)?;
    let report = match_fixtures(&g, &FixtureTable::builtin());
    g.assign_names(&report);
    Ok(g)
}

pub fn cmd_roots(args: &RootsArgs) -> CmdResult {
    let full = RootSystem::f4();
    let rs = match &args.subsystem {
        None => full,
        Some(idx) => {
            if idx.is_empty() || idx.iter().any(|&i| i == 0 || i > full.data().rank()) {
                return Err(CliError::usage(format!(
                    "--subsystem indices must lie in 1..={}",
                    full.data().rank()
                )));
            }
            let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            full.subsystem(&zero_based).map_err(CliError::internal)?
        }
    };
    let text = match args.format {
        Format::Json => to_json(&export::root_records(&rs).map_err(CliError::internal)?)?,
        Format::Text => roots_text(&rs)?,
        Format::Dot => return Err(CliError::usage("roots supports --format text or json")),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn roots_text(rs: &RootSystem) -> Result<String, CliError> {
    let mut out = String::new();
    let _ = writeln!(out, "{:<12} {:>4}  {:<5}  epsilon", "root", "norm", "class");
    let (mut long, mut short) = (0, 0);
    for r in rs.positive() {
        let class = rs.length_class(r).map_err(CliError::internal)?;
        match class {
            LengthClass::Long => long += 1,
            LengthClass::Short => short += 1,
        }
        let norm = rs.norm(r).map_err(CliError::internal)?;
        let eps = epsilon_coords(r).map_err(CliError::internal)?;
        let class = match class {
            LengthClass::Long => "long",
            LengthClass::Short => "short",
        };
        let _ = writeln!(
            out,
            "{:<12} {:>4}  {:<5}  {eps}",
            r.to_string(),
            norm.to_string(),
            class
        );
    }
    let _ = writeln!(out, "{} ({long} long, {short} short)", rs.len());
    Ok(out)
}

fn multiplet_summary(g: &MultipletGraph) -> Result<String, CliError> {
    let pairs = ks_pairing(g).map_err(CliError::internal)?;
    let mut out = String::new();
    let _ = writeln!(out, "params: {}", g.params);
    let _ = writeln!(out, "nodes: {}", g.len());
    let _ = writeln!(
        out,
        "edges: {} ({} diagram)",
        g.edges.len(),
        g.diagram_edges.len()
    );
    let _ = writeln!(out, "levels: {:?}", g.level_histogram());
    let _ = writeln!(out, "ks pairs: {}", pairs.len());
    Ok(out)
}

fn multiplet_text(g: &MultipletGraph) -> Result<String, CliError> {
    let mut out = multiplet_summary(g)?;
    out.push('\n');
    for n in &g.nodes {
        let _ = writeln!(
            out,
            "{:>3} {:>2} {:<12} {}  d = {}",
            n.id,
            n.level,
            g.label_of(n.id),
            n.signature,
            n.signature.d()
        );
    }
    Ok(out)
}

pub fn cmd_multiplet(args: &MultipletArgs) -> CmdResult {
    let g = named_multiplet(params_of(&args.labels)?)?;
    let text = match args.format {
        Format::Text => multiplet_text(&g)?,
        Format::Json => to_json(&MultipletRecord::from(&g))?,
        Format::Dot => export::multiplet_to_dot(&g),
    };
    emit(args.output.as_deref(), &text)?;
    if args.format != Format::Text {
        eprint!("{}", multiplet_summary(&g)?);
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let params = params_of(&args.labels)?;
    let table = match &args.fixtures {
        None => FixtureTable::builtin(),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            FixtureTable::parse(&text)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?
        }
    };
    let report = verify::run_checks(&table, params).map_err(CliError::internal)?;
    let text = match args.format {
        Format::Json => to_json(&report)?,
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let _ = writeln!(out, "{c}");
            }
            for c in &report.corrections {
                let _ = writeln!(out, "corrected {c}");
            }
            let _ = writeln!(out, "{}", report.summary);
            out
        }
        Format::Dot => return Err(CliError::usage("verify supports --format text or json")),
    };
    emit(args.output.as_deref(), &text)?;
    if report.passed() {
        Ok(EXIT_OK)
    } else {
        for f in &report.failures {
            eprintln!("FAIL {f}");
        }
        Ok(EXIT_VERIFY)
    }
}

#[derive(Serialize)]
struct ExportDocument {
    roots: Vec<RootRecord>,
    multiplet: MultipletRecord,
}

pub fn cmd_export(args: &ExportArgs) -> CmdResult {
    let g = named_multiplet(params_of(&args.labels)?)?;
    let text = match args.format {
        Format::Json => to_json(&ExportDocument {
            roots: export::root_records(&RootSystem::f4()).map_err(CliError::internal)?,
            multiplet: MultipletRecord::from(&g),
        })?,
        Format::Dot => export::multiplet_to_dot(&g),
        Format::Text => return Err(CliError::usage("export supports --format json or dot")),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

pub fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Roots(a) => cmd_roots(a),
        Command::Multiplet(a) => cmd_multiplet(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Export(a) => cmd_export(a),
    }
}

/// Parses `std::env::args`, runs the command and maps errors to exit codes.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn label_validation() {
        let ok = LabelArgs {
            labels: Some(vec![1, 2, 3, 4]),
            symbolic: false,
        };
        assert_eq!(params_of(&ok).unwrap(), Params::Concrete([1, 2, 3, 4]));
        let bad = LabelArgs {
            labels: Some(vec![1, 0, 3, 4]),
            symbolic: false,
        };
        assert_eq!(params_of(&bad).unwrap_err().code, EXIT_USAGE);
    }

    #[test]
    fn subsystem_text() {
        let rs = RootSystem::f4().subsystem(&[1, 2, 3]).unwrap();
        let text = roots_text(&rs).unwrap();
        assert!(text.ends_with("9 (3 long, 6 short)\n"), "{text}");
    }
}
