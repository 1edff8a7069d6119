//! Dinic max flow on small integer-capacity networks.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: Vec::new(), out: vec![Vec::new(); nodes], level: vec![0; nodes], iter: vec![0; nodes] }
    }

    pub fn add_node(&mut self) -> usize {
        self.out.push(Vec::new());
        self.level.push(0);
        self.iter.push(0);
        self.out.len() - 1
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Two opposite arcs sharing one residual pair, i.e. capacity `cap` in
    /// either direction.
    pub fn add_undirected(&mut self, a: usize, b: usize, cap: i64) {
        self.out[a].push(self.arcs.len());
        self.arcs.push(Arc { to: b, cap });
        self.out[b].push(self.arcs.len());
        self.arcs.push(Arc { to: a, cap });
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &a in &self.out[v] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[v] + 1;
                    q.push_back(arc.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: i64) -> i64 {
        if v == t {
            return pushed;
        }
        while self.iter[v] < self.out[v].len() {
            let a = self.out[v][self.iter[v]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.arcs[a].cap -= d;
                    self.arcs[a ^ 1].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return total;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }
}

/// Network whose arcs carry both a lower and an upper bound; answers whether
/// some feasible circulation (with a free return arc `sink -> source`) exists.
#[derive(Debug, Clone)]
pub struct BoundedNetwork {
    net: FlowNetwork,
    excess: Vec<i64>,
}

impl BoundedNetwork {
    pub fn new(nodes: usize) -> Self {
        BoundedNetwork { net: FlowNetwork::new(nodes), excess: vec![0; nodes] }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, lower: i64, upper: i64) {
        debug_assert!(lower <= upper);
        self.net.add_arc(from, to, upper - lower);
        self.excess[to] += lower;
        self.excess[from] -= lower;
    }

    pub fn feasible(mut self, source: usize, sink: usize) -> bool {
        self.net.add_arc(sink, source, i64::MAX / 4);
        let s = self.net.add_node();
        let t = self.net.add_node();
        let mut need = 0;
        for (v, &e) in self.excess.iter().enumerate() {
            if e > 0 {
                self.net.add_arc(s, v, e);
                need += e;
            } else if e < 0 {
                self.net.add_arc(v, t, -e);
            }
        }
        self.net.max_flow(s, t) == need
    }
}
