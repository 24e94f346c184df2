//! Immutable simple graphs over 1-based vertex labels and their hop-distance
//! matrices.
//!
//! Every algorithm in this crate consumes a [`DistanceMatrix`]; a [`Graph`]
//! computes its own matrix once on first request and keeps it for later
//! callers.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// A vertex label. Labels run from `1` to `n` inclusive.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

/// An undirected simple graph with vertices `1..=n`.
///
/// Edges are stored once as `(min, max)` pairs in sorted order; duplicate
/// input pairs are dropped during construction.
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
    distances: OnceLock<DistanceMatrix>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &set {
            adjacency[u - 1].push(v);
            adjacency[v - 1].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
            adjacency,
            distances: OnceLock::new(),
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v)
    }

    /// Sorted neighbour list of `v`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<_> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    /// A new graph with `(u, v)` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Hop distances from `source` to every vertex, indexed by `label - 1`.
    /// Unreachable vertices are `None`.
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<Option<u32>>, GraphError> {
        if !self.contains(source) {
            return Err(GraphError::OutOfRange {
                vertex: source,
                n: self.n,
            });
        }
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        dist[source - 1] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u - 1].map(|d| d + 1);
            for &w in self.neighbors(u) {
                if dist[w - 1].is_none() {
                    dist[w - 1] = next;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// All-pairs hop distances, computed on first call and cached.
    pub fn all_pairs(&self) -> &DistanceMatrix {
        self.distances.get_or_init(|| {
            let mut data = Vec::with_capacity(self.n * self.n);
            for s in self.vertices() {
                data.extend(self.bfs_distances(s).expect("source is in range"));
            }
            DistanceMatrix { n: self.n, data }
        })
    }

    pub fn is_connected(&self) -> bool {
        self.all_pairs().is_connected()
    }
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Self {
            n: self.n,
            edges: self.edges.clone(),
            adjacency: self.adjacency.clone(),
            distances: self.distances.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Dense `n × n` matrix of hop counts. `None` marks an unreachable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`. Panics on labels outside `1..=n`.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        assert!(
            u >= 1 && u <= self.n && v >= 1 && v <= self.n,
            "vertex out of range"
        );
        self.data[(u - 1) * self.n + (v - 1)]
    }

    /// Row of distances from `u`, indexed by `label - 1`.
    pub fn row(&self, u: Vertex) -> &[Option<u32>] {
        &self.data[(u - 1) * self.n..u * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.data.iter().all(Option::is_some)
    }

    /// Largest finite entry, or `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        self.data.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

/// Small families used by tests, benches and the CLI.
pub mod families {
    use super::{Graph, Vertex};

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::new(n, (1..n).map(|i| (i, i + 1)).chain([(n, 1)])).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("valid complete graph")
    }

    /// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (1..=a)
            .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
            .collect();
        Graph::new(a + b, edges).expect("valid complete bipartite graph")
    }
}
