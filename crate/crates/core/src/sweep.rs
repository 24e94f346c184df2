//! Exhaustive cross-check of the closed forms against the oracle.
//!
//! A sweep visits every valid triple in a vertex-count range and records, per
//! triple, the dispatched case, the formula and oracle dimensions, whether the
//! closed-form basis resolves and is minimal, and every vertex where the
//! partition table disagrees with breadth-first search. Disagreements are
//! data, not failures: the sweep never aborts on them.

use std::io;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed_form::{
    closed_form_basis, dispatch_case, literal_basis, tables::table_fidelity_on, CaseTag,
    TableMismatch, TheoremCase,
};
use crate::graph::Vertex;
use crate::resolver::{
    check_resolving, is_minimal_resolving, metric_dimension_oracle_with, OracleConfig, Resolution,
    ResolveError,
};
use crate::theta::{build_c, ThetaParams};

/// Version of the JSON and CSV layouts documented in `docs/sweep-report.md`.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("max_n = {max_n} is above the oracle cap of {cap}")]
    OverCap { max_n: usize, cap: usize },
    #[error("oracle failed on {params}: {source}")]
    Oracle {
        params: ThetaParams,
        source: ResolveError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOptions {
    pub min_n: usize,
    pub max_n: usize,
    /// Keep only triples dispatched to one of these cases.
    pub cases: Option<Vec<CaseTag>>,
    pub oracle: OracleConfig,
    /// Store wall-clock time per record. Off by default so that repeated
    /// sweeps emit identical bytes.
    pub timings: bool,
}

impl SweepOptions {
    pub fn up_to(max_n: usize) -> Self {
        Self {
            min_n: 4,
            max_n,
            cases: None,
            oracle: OracleConfig::default(),
            timings: false,
        }
    }
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self::up_to(16)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub params: ThetaParams,
    pub n: usize,
    pub case: TheoremCase,
    pub formula_dim: usize,
    pub oracle_dim: usize,
    /// Lexicographically first minimum resolving set found by the oracle.
    pub oracle_witness: Vec<Vertex>,
    /// Closed-form basis in the caller's labelling.
    pub basis: Vec<Vertex>,
    /// The literal formula named a landmark twice and it was replaced.
    pub repaired: bool,
    /// The basis resolves the graph and has `formula_dim` elements.
    pub basis_ok: bool,
    /// Two vertices the basis fails to separate, if any.
    pub basis_collision: Option<(Vertex, Vertex)>,
    pub basis_minimal: bool,
    /// Landmarks exactly as the formula names them, duplicates kept.
    pub literal_basis: Vec<Vertex>,
    pub literal_basis_ok: bool,
    pub table_mismatches: Vec<TableMismatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl SweepRecord {
    pub fn dimension_agrees(&self) -> bool {
        self.formula_dim == self.oracle_dim
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub records: usize,
    pub agreements: usize,
    pub dimension_mismatches: usize,
    pub basis_failures: usize,
    /// Records with at least one table mismatch.
    pub table_mismatches: usize,
    pub literal_basis_defects: usize,
    pub repaired_bases: usize,
}

impl SweepSummary {
    pub fn tally(records: &[SweepRecord]) -> Self {
        let count = |f: fn(&SweepRecord) -> bool| records.iter().filter(|r| f(r)).count();
        Self {
            records: records.len(),
            agreements: count(|r| r.dimension_agrees()),
            dimension_mismatches: count(|r| !r.dimension_agrees()),
            basis_failures: count(|r| !r.basis_ok),
            table_mismatches: count(|r| !r.table_mismatches.is_empty()),
            literal_basis_defects: count(|r| !r.literal_basis_ok),
            repaired_bases: count(|r| r.repaired),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRange {
    pub min_n: usize,
    pub max_n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cases: Option<Vec<CaseTag>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub range: SweepRange,
    pub summary: SweepSummary,
    pub records: Vec<SweepRecord>,
}

impl SweepReport {
    pub fn record(&self, p: usize, q: usize, r: usize) -> Option<&SweepRecord> {
        self.records
            .iter()
            .find(|rec| rec.params.as_tuple() == (p, q, r))
    }
}

/// Evaluate one triple.
pub fn sweep_one(
    params: ThetaParams,
    oracle: &OracleConfig,
    timings: bool,
) -> Result<SweepRecord, SweepError> {
    let start = Instant::now();
    let g = build_c(params);
    let oracle_err = |source| SweepError::Oracle { params, source };
    let best = metric_dimension_oracle_with(&g, oracle).map_err(oracle_err)?;
    let closed = closed_form_basis(params);

    let basis_collision = match check_resolving(&g, &closed.basis) {
        Ok(Resolution::Resolving) => None,
        Ok(Resolution::Unresolved(a, b)) => Some((a, b)),
        Err(e) => return Err(oracle_err(e)),
    };
    let basis_ok = basis_collision.is_none() && closed.basis.len() == closed.dimension;
    let basis_minimal = basis_ok && is_minimal_resolving(&g, &closed.basis).unwrap_or(false);

    let literal = literal_basis(params);
    let literal_basis_ok = literal.len() == closed.dimension
        && matches!(check_resolving(&g, &literal), Ok(Resolution::Resolving));

    let table_mismatches = table_fidelity_on(params, &g);
    let elapsed_us = timings.then(|| start.elapsed().as_micros() as u64);

    Ok(SweepRecord {
        params,
        n: params.n(),
        case: closed.case,
        formula_dim: closed.dimension,
        oracle_dim: best.dimension,
        oracle_witness: best.witness,
        basis: closed.basis,
        repaired: closed.repaired,
        basis_ok,
        basis_collision,
        basis_minimal,
        literal_basis: literal,
        literal_basis_ok,
        table_mismatches,
        elapsed_us,
    })
}

/// Run the sweep. Records come back ordered by `(n, p, q, r)` regardless of
/// how the work was scheduled.
pub fn sweep(options: &SweepOptions) -> Result<SweepReport, SweepError> {
    let cap = options.oracle.vertex_cap;
    if options.max_n > cap {
        return Err(SweepError::OverCap {
            max_n: options.max_n,
            cap,
        });
    }
    let triples: Vec<ThetaParams> = ThetaParams::enumerate(options.min_n, options.max_n)
        .into_iter()
        .filter(|&t| {
            options
                .cases
                .as_ref()
                .is_none_or(|cases| cases.contains(&dispatch_case(t).tag))
        })
        .collect();
    let records = triples
        .par_iter()
        .map(|&t| sweep_one(t, &options.oracle, options.timings))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SweepReport {
        schema_version: SCHEMA_VERSION,
        range: SweepRange {
            min_n: options.min_n,
            max_n: options.max_n,
            cases: options.cases.clone(),
        },
        summary: SweepSummary::tally(&records),
        records,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Column order of the CSV layout.
pub const CSV_HEADER: [&str; 18] = [
    "p",
    "q",
    "r",
    "n",
    "case",
    "swapped",
    "formula_dim",
    "oracle_dim",
    "oracle_witness",
    "basis",
    "repaired",
    "basis_ok",
    "basis_collision",
    "basis_minimal",
    "literal_basis",
    "literal_basis_ok",
    "table_mismatch_vertices",
    "elapsed_us",
];

fn join(items: impl IntoIterator<Item = Vertex>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Serialize a report. JSON is pretty-printed with a trailing newline; CSV
/// writes one header row and joins list cells with `;`.
pub fn emit_report(report: &SweepReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report).expect("reports always serialize");
            out.push(b'\n');
            out
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            for rec in &report.records {
                let (p, q, r) = rec.params.as_tuple();
                let row = [
                    p.to_string(),
                    q.to_string(),
                    r.to_string(),
                    rec.n.to_string(),
                    rec.case.tag.to_string(),
                    rec.case.swapped.to_string(),
                    rec.formula_dim.to_string(),
                    rec.oracle_dim.to_string(),
                    join(rec.oracle_witness.iter().copied()),
                    join(rec.basis.iter().copied()),
                    rec.repaired.to_string(),
                    rec.basis_ok.to_string(),
                    rec.basis_collision
                        .map(|(a, b)| join([a, b]))
                        .unwrap_or_default(),
                    rec.basis_minimal.to_string(),
                    join(rec.literal_basis.iter().copied()),
                    rec.literal_basis_ok.to_string(),
                    join(rec.table_mismatches.iter().map(|m| m.vertex)),
                    rec.elapsed_us.map(|t| t.to_string()).unwrap_or_default(),
                ];
                w.write_record(&row).expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}

pub fn write_report(
    report: &SweepReport,
    format: ReportFormat,
    out: &mut impl io::Write,
) -> io::Result<()> {
    out.write_all(&emit_report(report, format))
}

/// Parse a JSON report produced by [`emit_report`].
pub fn parse_json_report(bytes: &[u8]) -> serde_json::Result<SweepReport> {
    serde_json::from_slice(bytes)
}
