//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(V^3)).

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;

/// Blossom search state over an adjacency list. Vertices are `0..adj.len()`.
pub struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    pub fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        let mut mate = vec![NONE; n];
        // greedy start
        for v in 0..n {
            if mate[v] == NONE {
                if let Some(&w) = adj[v].iter().find(|&&w| w != v && mate[w] == NONE) {
                    mate[v] = w;
                    mate[w] = v;
                }
            }
        }
        Blossom {
            adj,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint of
    /// an augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if to == v || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for j in 0..n {
                        if self.in_blossom[self.base[j]] {
                            self.base[j] = cur;
                            if !self.used[j] {
                                self.used[j] = true;
                                self.queue.push_back(j);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    /// Tries to match every exposed vertex in id order. With `stop_early`,
    /// gives up at the first vertex that cannot be augmented; such a vertex
    /// stays exposed in every maximum matching extending the current one.
    fn run(&mut self, stop_early: bool) -> bool {
        let mut perfect = true;
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                match self.find_path(v) {
                    Some(end) => self.augment(end),
                    None => {
                        perfect = false;
                        if stop_early {
                            return false;
                        }
                    }
                }
            }
        }
        perfect
    }

    fn mates(&self) -> Vec<Option<usize>> {
        self.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
    }
}

/// A maximum matching as a mate table.
pub fn maximum_matching_adj(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut b = Blossom::new(adj);
    b.run(false);
    b.mates()
}

/// Perfect matching if one exists.
pub fn perfect_matching_adj(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    if adj.len() % 2 == 1 {
        return None;
    }
    let mut b = Blossom::new(adj);
    b.run(true).then(|| b.mate.clone())
}

pub fn maximum_matching(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    maximum_matching_adj(&adj)
        .into_iter()
        .enumerate()
        .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| (v, w)))
        .collect()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * maximum_matching(g).len() == g.n()
}
