//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::flow::FlowNetwork;

pub type Vertex = usize;
/// Unordered edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(Vertex, Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("operation needs at least {needed} vertices, graph has {found}")]
    TooFewVertices { needed: usize, found: usize },
}

/// A simple undirected graph. Immutable once built.
///
/// Edges are kept as a sorted list of `(u, v)` pairs with `u < v`, and the
/// adjacency lists are sorted as well, so two graphs with the same edge set
/// compare equal and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::from_edges(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges }
    }
}

/// Per-vertex degrees of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
}

impl DegreeProfile {
    pub fn min(&self) -> Option<usize> {
        self.degrees.iter().copied().min()
    }

    pub fn max(&self) -> Option<usize> {
        self.degrees.iter().copied().max()
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().sum()
    }
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, loops and repeated
    /// pairs (in either orientation).
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(GraphError::EndpointOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of an edge in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile { degrees: self.adj.iter().map(Vec::len).collect() }
    }

    /// `Some(r)` when every vertex has degree `r`; `None` for irregular
    /// graphs and for the graph with no vertices.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == first).then_some(first)
    }

    /// Connected components, each a sorted vertex list, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&[])
    }

    /// Components of the graph with the `removed` vertices deleted.
    pub fn components_avoiding(&self, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Minimum number of edges whose removal disconnects the graph.
    ///
    /// Runs a unit-capacity max flow from vertex 0 to every other vertex;
    /// some minimum cut separates 0 from somebody.
    pub fn edge_connectivity(&self) -> Result<usize, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooFewVertices { needed: 2, found: self.n });
        }
        let mut best = usize::MAX;
        for t in 1..self.n {
            let mut net = FlowNetwork::new(self.n);
            for &(u, v) in &self.edges {
                net.add_undirected(u, v, 1);
            }
            best = best.min(net.max_flow(0, t) as usize);
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the
    /// order given.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                let (a, b) = (local[u], local[v]);
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        let n = vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Cut vertices, sorted.
    pub fn articulation_points(&self) -> Vec<Vertex> {
        // Iterative Tarjan lowpoint.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(top) = stack.len().checked_sub(1) {
                let (v, parent, idx) = stack[top];
                if idx < self.adj[v].len() {
                    let w = self.adj[v][idx];
                    stack[top].2 += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }
}
