//! The `fibrancy` command-line tool.
//!
//! Exit status is 0 on success, 1 when a check fails or a stored entry is
//! corrupt, and 2 on usage errors.

pub mod export;
pub mod expr;
pub mod workspace;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fibrancy::{
    check_rlp, decompose_single_narrow, run_suite, validate_map, validate_sset, verify_decomposition, Family, Suite,
};
use thiserror::Error;

use crate::expr::{parse, resolve_vertex, Evaluator};
use crate::workspace::{to_json, write_atomic, Stored, Value, Workspace};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] fibrancy::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("`{0}` failed validation:\n{1}")]
    Invalid(String, String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use fibrancy::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                E::Parse(_)
                | E::InvalidArgument(_)
                | E::BeyondTruncation { .. }
                | E::UnknownSimplex { .. }
                | E::DimensionMismatch(..)
                | E::InvalidCategory(_),
            ) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "fibrancy", version, about = "Build truncated simplicial sets and check lifting properties")]
pub struct Cli {
    /// Directory holding named objects and reports.
    #[arg(long, global = true, default_value = "fibrancy-workspace")]
    pub workspace: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and store the result under a name.
    Build {
        name: String,
        expr: String,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        /// Overwrite an existing entry.
        #[arg(long)]
        force: bool,
    },
    /// Check the right lifting property against iso-horns or class_A.
    Check {
        name: String,
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        max_horn: usize,
        /// Truncation to check at; defaults to max-horn + 2, rebuilding the entry if needed.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose a widened inclusion at one narrow vertex into iso-horn cells.
    Decompose {
        name: String,
        vertex: String,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a built-in check suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        /// Defaults to max-horn + 2.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 2)]
        max_horn: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print or write a stored entry.
    Export {
        name: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List stored entries.
    List,
}

fn file_safe(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' || c == '-' { c } else { '_' }).collect()
}

fn load_at(ws: &Workspace, name: &str, dim: Option<usize>) -> Result<Value, CliError> {
    let v = ws.load(name)?;
    match dim {
        Some(d) if d != v.dim() => {
            let expr = match ws.load_stored(name)? {
                Stored::Object { expr, .. } | Stored::Inclusion { expr, .. } => expr,
            };
            Evaluator { ws, dim: d }.eval(&parse(&expr)?)
        }
        _ => Ok(v),
    }
}

fn emit(out: Option<PathBuf>, default: PathBuf, contents: &str) -> Result<PathBuf, CliError> {
    let path = out.unwrap_or(default);
    write_atomic(&path, contents)?;
    Ok(path)
}

/// Runs one command and returns the exit status.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    let ws = Workspace::open(cli.workspace);
    match cli.command {
        Command::Build { name, expr, dim, force } => {
            workspace::check_name(&name)?;
            let value = Evaluator { ws: &ws, dim }.eval(&parse(&expr)?)?;
            let report = match &value {
                Value::Object(x) => validate_sset(x),
                Value::Inclusion(i) => validate_map(i.map()),
            };
            if !report.is_ok() {
                return Err(CliError::Invalid(name, to_json(&report)));
            }
            let path = ws.save(&name, &value, &expr, force)?;
            let kind = match value {
                Value::Object(_) => "object",
                Value::Inclusion(_) => "inclusion",
            };
            println!("{name}: {kind}, counts {:?}, saved to {}", value.object().counts(), path.display());
            Ok(0)
        }
        Command::Check { name, family, max_horn, dim, out } => {
            let x = load_at(&ws, &name, Some(dim.unwrap_or(max_horn + 2)))?.object().clone();
            if max_horn > x.dim() {
                return Err(CliError::Usage(format!("--max-horn {max_horn} exceeds the truncation {}", x.dim())));
            }
            let report = check_rlp(&x, family, max_horn)?.with_target_name(&name);
            let stem = format!("{}.{family}", file_safe(&name));
            let path = emit(out, ws.report_path(&format!("{stem}.json")), &to_json(&report))?;
            println!("{name} against {family} (N={max_horn}, D={}): {}", x.dim(), if report.passed() { "pass" } else { "fail" });
            for m in report.members.iter().filter(|m| m.failures > 0) {
                println!("  {}: {} of {} squares have no lift", m.member, m.failures, m.squares);
            }
            println!("report: {}", path.display());
            if report.passed() {
                return Ok(0);
            }
            let wpath = path.with_extension("witnesses.json");
            write_atomic(&wpath, &to_json(&report.witnesses))?;
            println!("witnesses: {}", wpath.display());
            Ok(1)
        }
        Command::Decompose { name, vertex, dim, out } => {
            let Value::Inclusion(inner) = load_at(&ws, &name, dim)? else {
                return Err(CliError::Usage(format!("`{name}` is an object, not an inclusion")));
            };
            let label = vertex.parse().map_err(|e: fibrancy::Error| CliError::Usage(e.to_string()))?;
            let y = resolve_vertex(inner.codomain(), &label)?;
            let d = match decompose_single_narrow(&inner, &y, inner.dim()) {
                Err(e @ fibrancy::Error::NotNarrow { .. }) => {
                    eprintln!("refused: {e}");
                    return Ok(1);
                }
                r => r?,
            };
            let report = verify_decomposition(&d);
            let stem = format!("{}.decompose.{}", file_safe(&name), file_safe(&y.to_string()));
            let path = emit(out, ws.report_path(&format!("{stem}.json")), &to_json(&d.to_doc()))?;
            println!("{name} at {y} (D={}): {} stage(s)", d.truncation, d.stages.len());
            for s in &d.stages {
                let cells: Vec<String> = s.cells.iter().map(|c| format!("{}@{}", c.sigma, c.i_sigma)).collect();
                println!("  N_{} = {}  [{}]", s.k, s.cells.len(), cells.join(" "));
            }
            println!("truncated: {}", d.truncated);
            println!("replay: {}", if report.is_ok() { "pass" } else { "fail" });
            println!("report: {}", path.display());
            Ok(if report.is_ok() { 0 } else { 1 })
        }
        Command::Verify { suite, dim, max_horn, out } => {
            let dim = dim.unwrap_or(max_horn + 2);
            if max_horn > dim {
                return Err(CliError::Usage(format!("--max-horn {max_horn} exceeds --dim {dim}")));
            }
            let report = run_suite(suite, dim, max_horn)?;
            let path = emit(out, ws.report_path(&format!("verify-{suite}.json")), &to_json(&report))?;
            if let Some(e) = &report.equivalence {
                for r in &e.rows {
                    println!("  {:<16} iso_horns {:<4} class_A {:<4} {}", r.name, r.iso_horns, r.class_a, if r.agree { "agree" } else { "DISAGREE" });
                }
            }
            for c in report.checks.iter().filter(|c| c.status != fibrancy::diagram::Status::Pass) {
                println!("  FAIL {}: {}", c.subject, c.identity);
            }
            let passed = report.checks.iter().filter(|c| c.status == fibrancy::diagram::Status::Pass).count();
            println!("{suite} (D={dim}): {passed}/{} checks pass", report.checks.len());
            println!("report: {}", path.display());
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Export { name, format, out } => {
            let text = match format {
                Format::Json => to_json(&ws.load_stored(&name)?),
                Format::Dot => export::dot(&name, ws.load(&name)?.object()),
                Format::Text => export::text(&name, ws.load(&name)?.object()),
            };
            match out {
                Some(p) => write_atomic(&p, &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::List => {
            for name in ws.names()? {
                match ws.load_stored(&name) {
                    Ok(Stored::Object { expr, sset }) => println!("{name}\tobject\tD={}\t{expr}", sset.truncation_dim),
                    Ok(Stored::Inclusion { expr, map }) => println!("{name}\tinclusion\tD={}\t{expr}", map.domain.truncation_dim),
                    Err(e) => println!("{name}\tunreadable\t{e}"),
                }
            }
            Ok(0)
        }
    }
}
