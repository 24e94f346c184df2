//! Theta graphs in the `C(p, q, r)` parameterisation.
//!
//! `C(p, q, r)` has `n = p + q + r` vertices laid out as three runs:
//!
//! * outer path 1: `v1 … vp`
//! * middle path: `v(p+1) … v(p+q)`, whose end points are the two hubs
//! * outer path 2: `v(p+q+1) … v(p+q+r)`
//!
//! Each outer path hangs between the hubs, with its first vertex attached to
//! `v(p+1)` and its last vertex attached to `v(p+q)`. An empty outer path
//! becomes a single hub-to-hub edge. As a theta graph the three hub-to-hub
//! paths have `p + 1`, `q - 1` and `r + 1` edges.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Why a `(p, q, r)` triple does not describe a simple theta graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamViolation {
    #[error("middle path needs at least two vertices (q = {q})")]
    MiddleTooShort { q: usize },
    #[error("more than one of p = 0, q = 2, r = 0 holds, which would join the hubs twice")]
    ParallelHubEdges,
    #[error("a theta graph needs at least four vertices (n = {n})")]
    TooSmall { n: usize },
}

/// Check that `(p, q, r)` describes a simple theta graph.
pub fn validate_params(p: usize, q: usize, r: usize) -> Result<(), ParamViolation> {
    if q < 2 {
        return Err(ParamViolation::MiddleTooShort { q });
    }
    let direct_links = [p == 0, q == 2, r == 0].iter().filter(|&&b| b).count();
    if direct_links > 1 {
        return Err(ParamViolation::ParallelHubEdges);
    }
    let n = p + q + r;
    if n < 4 {
        return Err(ParamViolation::TooSmall { n });
    }
    Ok(())
}

/// A validated `(p, q, r)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize, usize)", into = "(usize, usize, usize)")]
pub struct ThetaParams {
    p: usize,
    q: usize,
    r: usize,
}

impl ThetaParams {
    pub fn new(p: usize, q: usize, r: usize) -> Result<Self, ParamViolation> {
        validate_params(p, q, r)?;
        Ok(Self { p, q, r })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.p + self.q + self.r
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.p, self.q, self.r)
    }

    /// The same graph with the outer paths exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            p: self.r,
            q: self.q,
            r: self.p,
        }
    }

    /// Edge counts of the three hub-to-hub paths, `(p + 1, q - 1, r + 1)`.
    pub fn to_theta_lengths(&self) -> (usize, usize, usize) {
        (self.p + 1, self.q - 1, self.r + 1)
    }

    /// Inverse of [`to_theta_lengths`](Self::to_theta_lengths).
    pub fn from_theta_lengths(a: usize, b: usize, c: usize) -> Result<Self, ParamViolation> {
        if a == 0 || c == 0 {
            return Err(ParamViolation::ParallelHubEdges);
        }
        Self::new(a - 1, b + 1, c - 1)
    }

    /// Every valid triple with `min_n ≤ n ≤ max_n`, ordered by `(n, p, q, r)`.
    pub fn enumerate(min_n: usize, max_n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n in min_n.max(4)..=max_n {
            for p in 0..=n {
                for q in 2..=n - p {
                    if let Ok(params) = Self::new(p, q, n - p - q) {
                        out.push(params);
                    }
                }
            }
        }
        out
    }
}

impl TryFrom<(usize, usize, usize)> for ThetaParams {
    type Error = ParamViolation;

    fn try_from((p, q, r): (usize, usize, usize)) -> Result<Self, Self::Error> {
        Self::new(p, q, r)
    }
}

impl From<ThetaParams> for (usize, usize, usize) {
    fn from(t: ThetaParams) -> Self {
        t.as_tuple()
    }
}

impl fmt::Display for ThetaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{},{})", self.p, self.q, self.r)
    }
}

/// Build `C(p, q, r)` with the canonical labelling.
pub fn build_c(params: ThetaParams) -> Graph {
    let (p, q, r) = params.as_tuple();
    let n = params.n();
    let hub_a = p + 1;
    let hub_b = p + q;
    let mut edges = Vec::with_capacity(n + 1);
    edges.extend((1..p).map(|i| (i, i + 1)));
    edges.extend((p + 1..p + q).map(|i| (i, i + 1)));
    edges.extend((p + q + 1..n).map(|i| (i, i + 1)));
    if p == 0 {
        edges.push((hub_a, hub_b));
    } else {
        edges.push((hub_a, 1));
        edges.push((p, hub_b));
    }
    if r == 0 {
        edges.push((hub_a, hub_b));
    } else {
        edges.push((hub_a, p + q + 1));
        edges.push((n, hub_b));
    }
    Graph::new(n, edges).expect("validated parameters give a simple graph")
}

/// A bijection between two labelings of the same vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    image: Vec<Vertex>,
}

impl Relabeling {
    /// `image[i]` is the label that vertex `i + 1` maps to.
    pub fn from_images(image: Vec<Vertex>) -> Self {
        Self { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.image[v - 1]
    }

    pub fn images(&self) -> &[Vertex] {
        &self.image
    }

    pub fn is_bijection(&self) -> bool {
        let n = self.image.len();
        let mut seen = vec![false; n];
        self.image
            .iter()
            .all(|&v| (1..=n).contains(&v) && !std::mem::replace(&mut seen[v - 1], true))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { image: inv }
    }

    /// True when every edge of `from` maps onto an edge of `to` and both have
    /// the same number of edges.
    pub fn is_isomorphism(&self, from: &Graph, to: &Graph) -> bool {
        self.is_bijection()
            && from.n() == self.len()
            && to.n() == self.len()
            && from.edge_count() == to.edge_count()
            && from
                .edges()
                .iter()
                .all(|&(u, v)| to.has_edge(self.apply(u), self.apply(v)))
    }
}

/// The vertex map from `C(p, q, r)` onto `C(r, q, p)` that exchanges the two
/// outer paths and keeps the middle path (hubs included) in place.
pub fn swap_isomorphism(params: ThetaParams) -> Relabeling {
    let (p, q, r) = params.as_tuple();
    let mut image = Vec::with_capacity(params.n());
    image.extend((1..=p).map(|i| r + q + i));
    image.extend((0..q).map(|i| r + 1 + i));
    image.extend(1..=r);
    Relabeling { image }
}

/// Hubs and hub-to-hub branches of a graph recognised as a theta graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaShape {
    /// Hub with the smaller label.
    pub hub_a: Vertex,
    pub hub_b: Vertex,
    /// Internal vertices of each branch listed from `hub_a` towards `hub_b`.
    /// Branches are ordered by first internal label; a bare hub edge sorts
    /// last.
    pub branches: [Vec<Vertex>; 3],
}

/// One way of reading a theta graph as `C(p, q, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaEmbedding {
    pub params: ThetaParams,
    /// Index into [`ThetaShape::branches`] of the branch used as middle path.
    pub middle: usize,
    /// Outer path 1, middle path with both hubs, outer path 2, in original
    /// labels and canonical order.
    pub path_vertices: [Vec<Vertex>; 3],
    /// Original label to canonical `C(p, q, r)` label.
    pub relabeling: Relabeling,
}

fn branch_key(branch: &[Vertex]) -> Vertex {
    branch.first().copied().unwrap_or(Vertex::MAX)
}

impl ThetaShape {
    /// Read the graph as `C(p, q, r)` with branch `middle` as the middle path.
    pub fn embedding(&self, middle: usize) -> ThetaEmbedding {
        assert!(middle < 3, "a theta graph has three branches");
        let mut outer: Vec<&Vec<Vertex>> = (0..3)
            .filter(|&i| i != middle)
            .map(|i| &self.branches[i])
            .collect();
        outer.sort_by_key(|b| branch_key(b));
        let (first, second) = (outer[0].clone(), outer[1].clone());

        let mut mid = Vec::with_capacity(self.branches[middle].len() + 2);
        mid.push(self.hub_a);
        mid.extend_from_slice(&self.branches[middle]);
        mid.push(self.hub_b);

        let params = ThetaParams::new(first.len(), mid.len(), second.len())
            .expect("a simple theta graph has at most one bare hub edge");

        let mut image = vec![0; params.n()];
        for (canonical, &original) in first.iter().chain(&mid).chain(&second).enumerate() {
            image[original - 1] = canonical + 1;
        }
        ThetaEmbedding {
            params,
            middle,
            path_vertices: [first, mid, second],
            relabeling: Relabeling { image },
        }
    }

    /// All three readings, shortest middle branch first (ties by branch order).
    pub fn embeddings(&self) -> Vec<ThetaEmbedding> {
        let mut order = [0, 1, 2];
        order.sort_by_key(|&i| self.branches[i].len());
        order.iter().map(|&i| self.embedding(i)).collect()
    }
}

/// Recognise a theta graph: connected, `n + 1` edges, exactly two vertices of
/// degree three joined by three internally disjoint paths, and every other
/// vertex of degree two.
pub fn detect_theta(g: &Graph) -> Option<ThetaShape> {
    let n = g.n();
    if n < 4 || g.edge_count() != n + 1 {
        return None;
    }
    let mut hubs = Vec::with_capacity(2);
    for v in g.vertices() {
        match g.degree(v) {
            2 => {}
            3 => hubs.push(v),
            _ => return None,
        }
    }
    if hubs.len() != 2 || !g.is_connected() {
        return None;
    }
    let (hub_a, hub_b) = (hubs[0], hubs[1]);

    let mut branches: Vec<Vec<Vertex>> = Vec::with_capacity(3);
    for &start in g.neighbors(hub_a) {
        let mut internal = Vec::new();
        let (mut prev, mut cur) = (hub_a, start);
        while cur != hub_b {
            if cur == hub_a {
                // a cycle hanging off one hub: dumbbell, not theta
                return None;
            }
            internal.push(cur);
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        branches.push(internal);
    }
    branches.sort_by_key(|b| branch_key(b));
    let covered: usize = branches.iter().map(Vec::len).sum::<usize>() + 2;
    if covered != n {
        return None;
    }
    let branches: [Vec<Vertex>; 3] = branches.try_into().ok()?;
    Some(ThetaShape {
        hub_a,
        hub_b,
        branches,
    })
}
