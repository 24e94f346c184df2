//! Command-line front end. [`run`] holds all behaviour so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 domain error (invalid parameters, a set that does
//! not resolve, a disconnected network, a strict sweep with failures), 2 usage
//! or input-parse error.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thetadim::resolver::{representation, OracleConfig, DEFAULT_VERTEX_CAP};
use thetadim::sweep::{emit_report, sweep, ReportFormat, SweepOptions};
use thetadim::{
    assign_landmarks_with, build_c, check_resolving, closed_form_basis, emit_network,
    is_minimal_resolving, literal_basis, metric_dimension_oracle_with, parse_network, CaseTag,
    NetworkSpec, Resolution, ThetaParams, Vertex,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "thetadim",
    version,
    about = "Metric dimension and landmark sets of theta graphs C(p,q,r)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Triple {
    /// Internal vertices on the first outer path
    p: usize,
    /// Vertices on the middle path, both hubs included
    q: usize,
    /// Internal vertices on the second outer path
    r: usize,
}

impl Triple {
    fn params(&self) -> Result<ThetaParams, String> {
        ThetaParams::new(self.p, self.q, self.r)
            .map_err(|e| format!("invalid C({},{},{}): {e}", self.p, self.q, self.r))
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the edge list of C(p,q,r), one "u v" pair per line
    Build {
        #[command(flatten)]
        triple: Triple,
        /// Emit the network file format with nodes named v1..vn instead
        #[arg(long)]
        network: bool,
    },
    /// Print the metric dimension given by the closed form and its case
    Dim {
        #[command(flatten)]
        triple: Triple,
        /// Also run the exhaustive oracle and compare
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Print the closed-form metric basis and its case
    Basis {
        #[command(flatten)]
        triple: Triple,
    },
    /// Check whether a vertex set resolves C(p,q,r) and whether it is minimal
    Check {
        #[command(flatten)]
        triple: Triple,
        /// Comma-separated vertex labels, e.g. 1,2,6
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        set: Vec<Vertex>,
    },
    /// Cross-check closed forms against the oracle over a range of n
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        min_n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Restrict to these case tags, e.g. T4-P1 (repeatable)
        #[arg(long = "case", value_parser = parse_case)]
        cases: Vec<CaseTag>,
        /// Record per-triple wall-clock time (output is then not reproducible)
        #[arg(long)]
        timings: bool,
        /// Exit 1 when any dimension or basis check fails
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Assign landmarks and distance codes to every node of a network file
    Landmarks {
        file: PathBuf,
        /// Print the table as JSON
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
}

fn parse_case(s: &str) -> Result<CaseTag, String> {
    s.parse::<CaseTag>().map_err(|e| e.to_string())
}

enum Failure {
    Domain(String),
    Usage(String),
}

fn join(vs: &[Vertex]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn domain(msg: impl Into<String>) -> Failure {
    Failure::Domain(msg.into())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io_err = |e: io::Error| Failure::Usage(format!("write failed: {e}"));
    match command {
        Command::Build { triple, network } => {
            let params = triple.params().map_err(domain)?;
            let g = build_c(params);
            if network {
                let nodes: Vec<String> = g.vertices().map(|v| format!("v{v}")).collect();
                let links = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (nodes[u - 1].clone(), nodes[v - 1].clone()))
                    .collect();
                write!(out, "{}", emit_network(&NetworkSpec { nodes, links })).map_err(io_err)?;
            } else {
                for &(u, v) in g.edges() {
                    writeln!(out, "{u} {v}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Dim {
            triple,
            oracle,
            cap,
        } => {
            let params = triple.params().map_err(domain)?;
            let closed = closed_form_basis(params);
            writeln!(out, "{}", closed.dimension).map_err(io_err)?;
            writeln!(out, "case: {}", closed.case).map_err(io_err)?;
            if oracle {
                let best = metric_dimension_oracle_with(
                    &build_c(params),
                    &OracleConfig { vertex_cap: cap },
                )
                .map_err(|e| domain(e.to_string()))?;
                writeln!(
                    out,
                    "oracle: {} witness {}",
                    best.dimension,
                    join(&best.witness)
                )
                .map_err(io_err)?;
                if best.dimension != closed.dimension {
                    return Err(domain(format!(
                        "closed form gives {} but the oracle finds {}",
                        closed.dimension, best.dimension
                    )));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Basis { triple } => {
            let params = triple.params().map_err(domain)?;
            let closed = closed_form_basis(params);
            writeln!(out, "basis: {}", join(&closed.basis)).map_err(io_err)?;
            writeln!(out, "case: {}", closed.case).map_err(io_err)?;
            writeln!(out, "dimension: {}", closed.dimension).map_err(io_err)?;
            if closed.repaired {
                writeln!(
                    out,
                    "repaired: literal formula names {}",
                    join(&literal_basis(params))
                )
                .map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { triple, set } => {
            let params = triple.params().map_err(domain)?;
            let g = build_c(params);
            match check_resolving(&g, &set).map_err(|e| domain(e.to_string()))? {
                Resolution::Resolving => {
                    let minimal =
                        is_minimal_resolving(&g, &set).map_err(|e| domain(e.to_string()))?;
                    writeln!(out, "resolving: yes").map_err(io_err)?;
                    writeln!(out, "minimal: {}", if minimal { "yes" } else { "no" })
                        .map_err(io_err)?;
                    Ok(EXIT_OK)
                }
                Resolution::Unresolved(a, b) => {
                    let d = g.all_pairs();
                    let code = representation(d, a, &set).map_err(|e| domain(e.to_string()))?;
                    let coords: Vec<String> = code.coords.iter().map(u32::to_string).collect();
                    writeln!(out, "resolving: no").map_err(io_err)?;
                    writeln!(out, "unresolved: {a} {b}").map_err(io_err)?;
                    writeln!(out, "shared code: {}", coords.join(",")).map_err(io_err)?;
                    Ok(EXIT_DOMAIN)
                }
            }
        }
        Command::Sweep {
            max_n,
            min_n,
            format,
            cases,
            timings,
            strict,
            cap,
        } => {
            let options = SweepOptions {
                min_n,
                max_n,
                cases: (!cases.is_empty()).then_some(cases),
                oracle: OracleConfig { vertex_cap: cap },
                timings,
            };
            let report = sweep(&options).map_err(|e| domain(e.to_string()))?;
            let format = match format {
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::Csv,
            };
            out.write_all(&emit_report(&report, format))
                .map_err(io_err)?;
            let s = report.summary;
            if strict && (s.dimension_mismatches > 0 || s.basis_failures > 0) {
                return Err(domain(format!(
                    "{} dimension mismatches, {} basis failures",
                    s.dimension_mismatches, s.basis_failures
                )));
            }
            Ok(EXIT_OK)
        }
        Command::Landmarks { file, json, cap } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let spec = parse_network(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let table = assign_landmarks_with(&spec, &OracleConfig { vertex_cap: cap })
                .map_err(|e| domain(e.to_string()))?;
            if json {
                let mut body = serde_json::to_string_pretty(&table).expect("table serializes");
                body.push('\n');
                out.write_all(body.as_bytes()).map_err(io_err)?;
            } else {
                writeln!(out, "method\t{}", table.method).map_err(io_err)?;
                writeln!(out, "landmarks\t{}", table.landmarks.join("\t")).map_err(io_err)?;
                for (name, code) in &table.codes {
                    let coords: Vec<String> = code.iter().map(u32::to_string).collect();
                    writeln!(out, "code\t{name}\t{}", coords.join(",")).map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parse `args` (program name first) and run one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
