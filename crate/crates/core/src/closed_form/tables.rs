//! Partition tables: for each case, cells `V_l` of consecutive labels and a
//! formula for the distance vector of a vertex `v_A` in each cell.
//!
//! Formulas are transcribed as written, including bounds that look
//! suspicious, so that [`table_fidelity`] can report where they disagree
//! with breadth-first search. Two placeholders in the source tables are read
//! as follows: `j` in the last cell of T2-P3 is the vertex index `A`, and `m`
//! in the upper bound of the seventh cell of T4-P3b is `r`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{dispatch_case, formula_landmarks, working_params, CaseTag, TheoremCase};
use crate::graph::{Graph, Vertex};
use crate::theta::{build_c, swap_isomorphism, ThetaParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("case {given} does not govern {params} (expected {expected})")]
    CaseMismatch {
        params: ThetaParams,
        given: TheoremCase,
        expected: TheoremCase,
    },
    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} lies in no cell of the table")]
    Uncovered(Vertex),
    #[error("vertex {vertex} lies in several cells: {cells:?}")]
    Overlap { vertex: Vertex, cells: Vec<usize> },
}

type Formula = Box<dyn Fn(i64) -> Vec<i64> + Send + Sync>;

/// One cell `V_l = {v_lo, …, v_hi}` (empty when `lo > hi`).
pub struct Cell {
    pub lo: i64,
    pub hi: i64,
    formula: Formula,
}

impl Cell {
    pub fn contains(&self, a: i64) -> bool {
        self.lo <= a && a <= self.hi
    }

    pub fn evaluate(&self, a: i64) -> Vec<i64> {
        (self.formula)(a)
    }
}

/// A case's partition table in the working labelling.
pub struct Table {
    pub tag: CaseTag,
    pub working: ThetaParams,
    /// Landmarks in formula order, working labels.
    pub landmarks: Vec<Vertex>,
    pub cells: Vec<Cell>,
}

impl Table {
    /// 1-based indices of the cells containing working label `a`.
    pub fn cells_of(&self, a: i64) -> Vec<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains(a))
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn cell(lo: i64, hi: i64, f: impl Fn(i64) -> Vec<i64> + Send + Sync + 'static) -> Cell {
    Cell {
        lo,
        hi,
        formula: Box::new(f),
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

/// Build the table for `tag` evaluated at the working triple.
pub fn table(tag: CaseTag, working: ThetaParams) -> Table {
    let (p, q, r) = working.as_tuple();
    let (p, q, r) = (p as i64, q as i64, r as i64);
    let n = p + q + r;
    let cells = match tag {
        CaseTag::ZeroPathP1 => {
            let cq = ceil_div(q, 2);
            vec![
                cell(p, p, |a| vec![1 - a, 2 - a]),
                cell(p + 1, p + 1, |a| vec![a - 1, 2 - a]),
                cell(p + 2, p + cq, |a| vec![a - 1, a - 2]),
                cell(p + cq + 1, p + cq + 1, move |a| vec![p + q + 1 - a, a - 2]),
                cell(p + cq + 2, p + q, move |a| {
                    vec![p + q + 1 - a, p + q + 1 - a]
                }),
            ]
        }
        CaseTag::ZeroPathP2 => {
            let h = floor_div(p, 2);
            let (fq, cq) = (floor_div(q, 2), ceil_div(q, 2));
            vec![
                cell(1, h + 1, move |a| vec![a - 1, h + 1 - a]),
                cell(h + 2, h + 2, move |a| vec![a - 1, a - h - 1]),
                cell(h + 3, p, move |a| vec![p + 3 - a, a - h - 1]),
                cell(p + 1, p + fq, move |a| vec![a - p, a + h - p]),
                cell(p + cq, p + cq, move |a| vec![a - p, 2 * p + q - a - h]),
                cell(p + cq + 1, p + q, move |a| {
                    vec![p + q + 2 - a, 2 * p + q - a - h]
                }),
            ]
        }
        CaseTag::T1P1 => vec![
            cell(1, p - 1, |a| vec![a - 1, a + 1]),
            cell(p, p, move |a| vec![a - 1, p + q - (a + 1)]),
            cell(p + 1, p + 2, move |a| vec![a - p, p + 2 - a]),
            cell(p + 3, p + q - 1, move |a| vec![a - p, a - (p + 2)]),
            cell(p + q, p + q, move |a| vec![2 * p + q - a, a - (p + 2)]),
            cell(p + q + 1, n, move |a| {
                vec![a + 1 - (p + q), a + 1 - (p + q)]
            }),
        ],
        CaseTag::T1P2 => {
            let m = floor_div(q - r, 2);
            vec![
                cell(1, p, move |a| vec![a - 1, p - a]),
                cell(p + 1, p + m, move |a| vec![a - p, a - 1]),
                cell(p + 1 + m, p + q - m, move |a| vec![a - p, p + q + 1 - a]),
                cell(p + q + 1 - m, p + q, move |a| {
                    vec![2 * p + q - a, p + q + 1 - a]
                }),
                cell(p + q + 1, n, move |a| {
                    vec![a + 1 - (p + q), p + q + r + 2 - a]
                }),
            ]
        }
        CaseTag::T1P3 | CaseTag::T3P3 => {
            let s = floor_div(p + r, 2);
            let t = floor_div(p - r, 2);
            let m = floor_div(q - r, 2);
            vec![
                cell(1, s + 1, move |a| vec![a - 1, s + 1 - a]),
                cell(s + 2, p + 1 - t, move |a| vec![a - 1, a - s - 1]),
                cell(p + 2 - t, p, move |a| vec![p + r + 3 - a, a - s - 1]),
                cell(p + 1, p + m, move |a| vec![a - p, a + s - p]),
                cell(p + 1 + m, p + q - m, move |a| {
                    vec![a - p, 2 * p + q - s - a]
                }),
                cell(p + q + 1 - m, p + q, move |a| {
                    vec![p + q + r + 2 - a, 2 * p + q - s - a]
                }),
                cell(p + q + 1, n, move |a| {
                    vec![a + 1 - (p + q), 2 * p + q + r + 1 - s - a]
                }),
            ]
        }
        CaseTag::T2P1 => {
            let c = ceil_div(r - q, 2);
            vec![
                cell(1, p, move |a| vec![a - 1, p - a]),
                cell(p + 1, p + q, move |a| vec![a - p, p + q + 1 - a]),
                cell(p + q + 1, p + q + c, move |a| vec![a + 1 - (p + q), a - q]),
                cell(p + q + 1 + c, n - c, move |a| {
                    vec![a + 1 - (p + q), p + q + r + 2 - a]
                }),
                cell(n + 1 - c, n, move |a| {
                    vec![2 * p + q + r + 1 - a, p + q + r + 2 - a]
                }),
            ]
        }
        CaseTag::T2P2 => vec![
            cell(1, 1, |a| vec![a - 1, 2 - a, a + 1]),
            cell(2, p - 1, |a| vec![a - 1, a - 2, a + 1]),
            cell(p, p, |a| vec![a - 1, a - 2, a - 1]),
            cell(p + 1, p + 1, move |a| vec![a - p, a + 1 - p, p + 2 - a]),
            cell(p + 2, p + q - 1, move |a| {
                vec![a - p, a + 1 - p, a - (p + 2)]
            }),
            cell(p + q, p + q, move |a| vec![a - p, a - (1 + p), a - (p + 2)]),
            cell(p + q + 1, n, move |a| {
                vec![a + 1 - (p + q), a + 2 - (p + q), a + 1 - (p + q)]
            }),
        ],
        CaseTag::T2P3 => {
            let s = floor_div(p + r, 2);
            let t = floor_div(p - r, 2);
            let m = floor_div(q - r, 2);
            vec![
                cell(1, s + 1, move |a| vec![a - 1, 1 + s - a]),
                cell(s + 2, p + 1 - t, move |a| vec![a - 1, a - (1 + s)]),
                cell(p + 2 - t, p, move |a| vec![p + r + 3 - a, a - (1 + s)]),
                cell(p + 1, p + t, move |a| vec![a - p, a + s - p]),
                cell(p + 1 + m, p + q - m, move |a| vec![a - p, 3 * p - (s + a)]),
                cell(p + q + 1 - m, p + q, move |a| {
                    vec![p + q + r + 2 - a, 3 * p - (s + a)]
                }),
                cell(p + q + 1, n, move |a| {
                    vec![a + 1 - (p + q), 2 * p + q + r + 1 - (s + a)]
                }),
            ]
        }
        CaseTag::T3P1 => {
            let h = floor_div(p + q, 2);
            let cpq = ceil_div(p - q, 2);
            let (frq, crq) = (floor_div(r - q, 2), ceil_div(r - q, 2));
            vec![
                cell(1, h, move |a| vec![a - 1, h - a]),
                cell(h + 1, p - cpq, move |a| vec![a - 1, a - h]),
                cell(p + 1 - cpq, p, move |a| vec![p + q + 1 - a, a - h]),
                cell(p + 1, p + 1, move |a| vec![a - p, h]),
                cell(p + 2, p + q, move |a| vec![a - p, 2 * p + q - h - a]),
                cell(p + q + 1, p + q + 1 + frq, move |a| {
                    vec![a + 1 - (p + q), a + h - (p + q)]
                }),
                cell(p + q + 2 + frq, n - crq, move |a| {
                    vec![a + 1 - (p + q), 2 * p + q + r + 2 - (a + h)]
                }),
                cell(n + 1 - crq, n, move |a| {
                    vec![p + 2 * q + r + 1 - a, 2 * p + q + r + 2 - (a + h)]
                }),
            ]
        }
        CaseTag::T3P2 => {
            let h = floor_div(p + q, 2);
            let fpq = floor_div(p - q, 2);
            vec![
                cell(1, h - 1, |a| vec![a - 1, a + 1]),
                cell(h, p - fpq, move |a| vec![a - 1, p + q - (a + 1)]),
                cell(p + 1 - fpq, p, move |a| {
                    vec![p + q + 1 - a, p + q - (a + 1)]
                }),
                cell(p + 1, p + 1, move |a| vec![a - p, p + 2 - a]),
                cell(p + 2, p + q, move |a| vec![a - p, a - (p + 2)]),
                cell(p + q + 1, n, move |a| {
                    vec![a + 1 - (p + q), a + 1 - (p + q)]
                }),
            ]
        }
        CaseTag::T4P1 => {
            let g = floor_div(q - p, 2);
            vec![
                cell(1, 1, move |a| vec![a - 1, 2 - a, a + g]),
                cell(2, p, move |a| vec![a - 1, a - 2, a + g]),
                cell(p + 1, p + 1 + g, move |a| {
                    vec![a - p, a + 1 - p, p + 1 + g - a]
                }),
                cell(p + 2 + g, p + q - 1 - g, move |a| {
                    vec![a - p, a + 1 - p, a - (p + 1 + g)]
                }),
                cell(p + q - g, p + q, move |a| {
                    vec![2 * p + q - a, 2 * p + q - 1 - a, a - (p + 1 + g)]
                }),
                cell(p + q + 1, n - 1, move |a| {
                    vec![a + 1 - (p + q), a + 2 - (p + q), a + g - (p + q)]
                }),
                cell(n, n, move |a| {
                    vec![a + 1 - (p + q), a - (p + q), a + g - (p + q)]
                }),
            ]
        }
        CaseTag::T4P2 => {
            let cqr = ceil_div(q - r, 2);
            let k = ceil_div(q - p - 2, 2);
            vec![
                cell(1, p, |a| vec![a - 1, a + 1]),
                cell(p + 1, p + 1, move |a| vec![a - p, p + 2 - a]),
                cell(p + 2, p + q - cqr, move |a| vec![a - p, a - (p + 2)]),
                cell(p + q + 1 - cqr, 2 * p + 2 + k, move |a| {
                    vec![2 * p + q - a, a - (p + 2)]
                }),
                cell(2 * p + 3 + k, p + q, move |a| {
                    vec![2 * p + q - a, 2 * p + q + 2 - a]
                }),
                cell(p + q + 1, n, move |a| {
                    vec![a + 1 - (p + q), a + 1 - (p + q)]
                }),
            ]
        }
        CaseTag::T4P3a => vec![
            cell(1, p, move |a| vec![a - 1, p - a]),
            cell(p + 1, p + 1, move |a| vec![a - p, p]),
            cell(p + 2, p + q - 1, move |a| vec![a - p, p + q + 1 - a]),
            cell(p + q, p + q, move |a| vec![p, p + q + 1 - a]),
            cell(p + q + 1, n, move |a| {
                vec![a + 1 - (p + q), p + q + r + 2 - a]
            }),
        ],
        CaseTag::T4P3b => {
            let h = floor_div(p + q, 2);
            let fpq = floor_div(p - q, 2);
            let crq = ceil_div(r - q, 2);
            vec![
                cell(1, h, move |a| vec![a - 1, h - a]),
                cell(h + 1, p - fpq, move |a| vec![a - 1, a - h]),
                cell(p + 1 - fpq, p, move |a| vec![p + q + 1 - a, a - h]),
                cell(p + 1, p + 1, move |a| vec![a - p, h]),
                cell(p + 2, p + q, move |a| vec![a - p, p + q + r + 1 - h - a]),
                cell(p + q + 1, p + q + 1 + crq, move |a| {
                    vec![a + 1 - (p + q), a + h - (p + q)]
                }),
                cell(p + q + 2 + crq, p + q + r - crq, move |a| {
                    vec![a + 1 - (p + q), 2 * p + q + r + 2 - (a + h)]
                }),
                cell(n + 1 - crq, n, move |a| {
                    vec![p + 2 * q + r + 1 - a, 2 * p + q + r + 2 - (a + h)]
                }),
            ]
        }
    };
    Table {
        tag,
        working,
        landmarks: formula_landmarks(tag, working),
        cells,
    }
}

fn checked(params: ThetaParams, case: TheoremCase, v: Vertex) -> Result<(Table, i64), TableError> {
    let expected = dispatch_case(params);
    if case != expected {
        return Err(TableError::CaseMismatch {
            params,
            given: case,
            expected,
        });
    }
    if v == 0 || v > params.n() {
        return Err(TableError::OutOfRange {
            vertex: v,
            n: params.n(),
        });
    }
    let a = if case.swapped {
        swap_isomorphism(params).apply(v)
    } else {
        v
    };
    Ok((table(case.tag, working_params(params, case)), a as i64))
}

fn single_cell(table: &Table, v: Vertex, a: i64) -> Result<usize, TableError> {
    let cells = table.cells_of(a);
    match cells.as_slice() {
        [] => Err(TableError::Uncovered(v)),
        [l] => Ok(*l),
        _ => Err(TableError::Overlap { vertex: v, cells }),
    }
}

/// The cell index `l` (1-based) holding `v`, given in the caller's labels.
pub fn partition_index(
    params: ThetaParams,
    case: TheoremCase,
    v: Vertex,
) -> Result<usize, TableError> {
    let (table, a) = checked(params, case, v)?;
    single_cell(&table, v, a)
}

/// The table's distance vector for `v`, ordered like the case's landmarks.
pub fn formula_representation(
    params: ThetaParams,
    case: TheoremCase,
    v: Vertex,
) -> Result<Vec<i64>, TableError> {
    let (table, a) = checked(params, case, v)?;
    let l = single_cell(&table, v, a)?;
    Ok(table.cells[l - 1].evaluate(a))
}

/// A vertex whose tabulated representation disagrees with breadth-first
/// search, or that the partition fails to place in exactly one cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMismatch {
    /// Vertex in the caller's labelling.
    pub vertex: Vertex,
    /// Every cell claiming the vertex; empty when none does.
    pub cells: Vec<usize>,
    /// Formula value from the first claiming cell.
    pub formula: Option<Vec<i64>>,
    pub bfs: Vec<u32>,
}

/// Compare every vertex's tabulated representation with the BFS one.
/// Returns an empty list when the table is exact.
pub fn table_fidelity(params: ThetaParams) -> Vec<TableMismatch> {
    let g = build_c(params);
    table_fidelity_on(params, &g)
}

pub(crate) fn table_fidelity_on(params: ThetaParams, g: &Graph) -> Vec<TableMismatch> {
    let case = dispatch_case(params);
    let working = working_params(params, case);
    let table = table(case.tag, working);
    let to_working = swap_isomorphism(params);
    let to_caller = swap_isomorphism(working);
    let landmarks: Vec<Vertex> = if case.swapped {
        table
            .landmarks
            .iter()
            .map(|&w| to_caller.apply(w))
            .collect()
    } else {
        table.landmarks.clone()
    };
    let d = g.all_pairs();
    let mut out = Vec::new();
    for v in g.vertices() {
        let a = if case.swapped { to_working.apply(v) } else { v } as i64;
        let bfs: Vec<u32> = landmarks
            .iter()
            .map(|&w| d.get(v, w).expect("theta graphs are connected"))
            .collect();
        let cells = table.cells_of(a);
        let formula = cells.first().map(|&l| table.cells[l - 1].evaluate(a));
        let exact = cells.len() == 1
            && formula
                .as_ref()
                .is_some_and(|f| f.iter().zip(&bfs).all(|(&x, &y)| x == y as i64));
        if !exact {
            out.push(TableMismatch {
                vertex: v,
                cells,
                formula,
                bfs,
            });
        }
    }
    out
}
