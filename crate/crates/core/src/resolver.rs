//! Representations, resolving sets and the exhaustive metric-dimension oracle.

use std::cmp::Ordering;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, Vertex};

/// Largest graph the oracle accepts unless told otherwise.
pub const DEFAULT_VERTEX_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("landmark set is empty")]
    EmptyLandmarks,
    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("landmark {0} is listed more than once")]
    DuplicateLandmark(Vertex),
    #[error("vertex {from} cannot reach landmark {to}")]
    Unreachable { from: Vertex, to: Vertex },
    #[error("landmark set does not resolve vertices {0} and {1}")]
    NotResolving(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    OverCap { n: usize, cap: usize },
}

/// Distance vector of one vertex with respect to an ordered landmark list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub landmarks: Vec<Vertex>,
    pub coords: Vec<u32>,
}

fn check_landmarks(n: usize, landmarks: &[Vertex]) -> Result<(), ResolveError> {
    if landmarks.is_empty() {
        return Err(ResolveError::EmptyLandmarks);
    }
    let mut seen = vec![false; n];
    for &w in landmarks {
        if w == 0 || w > n {
            return Err(ResolveError::OutOfRange { vertex: w, n });
        }
        if std::mem::replace(&mut seen[w - 1], true) {
            return Err(ResolveError::DuplicateLandmark(w));
        }
    }
    Ok(())
}

/// `(d(v, w1), …, d(v, wk))` for the ordered landmarks `w`.
pub fn representation(
    d: &DistanceMatrix,
    v: Vertex,
    landmarks: &[Vertex],
) -> Result<Representation, ResolveError> {
    let n = d.n();
    if v == 0 || v > n {
        return Err(ResolveError::OutOfRange { vertex: v, n });
    }
    check_landmarks(n, landmarks)?;
    let coords = landmarks
        .iter()
        .map(|&w| {
            d.get(v, w)
                .ok_or(ResolveError::Unreachable { from: v, to: w })
        })
        .collect::<Result<_, _>>()?;
    Ok(Representation {
        landmarks: landmarks.to_vec(),
        coords,
    })
}

/// Outcome of a resolving-set check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Resolving,
    /// Two distinct vertices (smaller label first) sharing a representation.
    Unresolved(Vertex, Vertex),
}

impl Resolution {
    pub fn is_resolving(&self) -> bool {
        matches!(self, Resolution::Resolving)
    }
}

fn compare_rows(d: &DistanceMatrix, landmarks: &[Vertex], a: Vertex, b: Vertex) -> Ordering {
    landmarks
        .iter()
        .map(|&w| d.get(a, w).cmp(&d.get(b, w)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Sort vertices by representation and scan neighbours for a repeat.
/// An empty landmark list resolves only the one-vertex graph.
fn first_collision(
    d: &DistanceMatrix,
    landmarks: &[Vertex],
    order: &mut Vec<Vertex>,
) -> Option<(Vertex, Vertex)> {
    order.clear();
    order.extend(1..=d.n());
    order.sort_by(|&a, &b| compare_rows(d, landmarks, a, b));
    order
        .windows(2)
        .find(|pair| compare_rows(d, landmarks, pair[0], pair[1]).is_eq())
        .map(|pair| (pair[0].min(pair[1]), pair[0].max(pair[1])))
}

/// Check whether `landmarks` gives every vertex a distinct representation.
pub fn check_resolving(g: &Graph, landmarks: &[Vertex]) -> Result<Resolution, ResolveError> {
    check_landmarks(g.n(), landmarks)?;
    let mut order = Vec::with_capacity(g.n());
    Ok(
        match first_collision(g.all_pairs(), landmarks, &mut order) {
            None => Resolution::Resolving,
            Some((a, b)) => Resolution::Unresolved(a, b),
        },
    )
}

pub fn is_resolving(g: &Graph, landmarks: &[Vertex]) -> Result<bool, ResolveError> {
    check_resolving(g, landmarks).map(|r| r.is_resolving())
}

/// True when `landmarks` resolves `g` and no single landmark can be dropped.
pub fn is_minimal_resolving(g: &Graph, landmarks: &[Vertex]) -> Result<bool, ResolveError> {
    if let Resolution::Unresolved(a, b) = check_resolving(g, landmarks)? {
        return Err(ResolveError::NotResolving(a, b));
    }
    let d = g.all_pairs();
    let mut order = Vec::with_capacity(g.n());
    let mut rest = Vec::with_capacity(landmarks.len());
    for skip in 0..landmarks.len() {
        rest.clear();
        rest.extend(
            landmarks
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &w)| w),
        );
        if first_collision(d, &rest, &mut order).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub vertex_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

/// Exact metric dimension with a witness basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisResult {
    pub dimension: usize,
    /// Lexicographically smallest minimum resolving set.
    pub witness: Vec<Vertex>,
    /// Every subset of this size or smaller was checked and rejected.
    pub exhausted_below: usize,
}

pub fn metric_dimension_oracle(g: &Graph) -> Result<BasisResult, ResolveError> {
    metric_dimension_oracle_with(g, &OracleConfig::default())
}

/// Search subsets by size, then lexicographically, returning the first
/// resolving one. A one-vertex graph reports dimension 1.
pub fn metric_dimension_oracle_with(
    g: &Graph,
    config: &OracleConfig,
) -> Result<BasisResult, ResolveError> {
    let n = g.n();
    if n > config.vertex_cap {
        return Err(ResolveError::OverCap {
            n,
            cap: config.vertex_cap,
        });
    }
    let d = g.all_pairs();
    if !d.is_connected() {
        return Err(ResolveError::Disconnected);
    }
    let mut order = Vec::with_capacity(n);
    for k in 1..=n {
        for subset in (1..=n).combinations(k) {
            if first_collision(d, &subset, &mut order).is_none() {
                return Ok(BasisResult {
                    dimension: k,
                    witness: subset,
                    exhausted_below: k - 1,
                });
            }
        }
    }
    unreachable!("the full vertex set always resolves a connected graph")
}

fn is_path(g: &Graph) -> bool {
    g.n() >= 2
        && g.edge_count() == g.n() - 1
        && g.vertices().all(|v| g.degree(v) <= 2)
        && g.is_connected()
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3
        && g.edge_count() == g.n()
        && g.vertices().all(|v| g.degree(v) == 2)
        && g.is_connected()
}

fn is_complete(g: &Graph) -> bool {
    g.n() >= 2 && g.edge_count() == g.n() * (g.n() - 1) / 2
}

fn is_complete_bipartite(g: &Graph) -> bool {
    if !g.is_connected() || g.n() < 2 {
        return false;
    }
    let d = g.all_pairs();
    // two-colour by distance parity from vertex 1
    let side = |v: Vertex| d.get(1, v).map(|x| x % 2);
    let a = g.vertices().filter(|&v| side(v) == Some(0)).count();
    let b = g.n() - a;
    let proper = g.edges().iter().all(|&(u, v)| side(u) != side(v));
    proper && g.edge_count() == a * b
}

/// Metric dimension of paths, cycles, complete graphs and complete bipartite
/// graphs (`n ≥ 4`) without a search; `None` for anything else.
pub fn known_dimension_special(g: &Graph) -> Option<usize> {
    let n = g.n();
    if is_path(g) {
        Some(1)
    } else if is_complete(g) {
        Some(n - 1)
    } else if is_cycle(g) {
        Some(2)
    } else if n >= 4 && is_complete_bipartite(g) {
        Some(n - 2)
    } else {
        None
    }
}
