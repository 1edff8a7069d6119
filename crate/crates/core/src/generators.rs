//! Standard graph families and seeded random graphs used by tests, examples
//! and the Gallai corpus.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, pairs).expect("complete graph is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

/// Circulant graph `C_n(jumps)`: `i ~ i ± j (mod n)` for each jump `j`.
///
/// Jumps must satisfy `1 <= j <= n / 2`; repeated or mirrored jumps are
/// merged.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for &j in jumps {
            assert!(j >= 1 && j <= n / 2, "jump {j} out of range for n = {n}");
            let w = (i + j) % n;
            pairs.push((i.min(w), i.max(w)));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    Graph::from_edges(n, pairs).expect("circulant is simple")
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
}

/// Uniform-ish random `r`-regular simple graph by the pairing model with
/// rejection. Returns `None` if `attempts` pairings all fail.
pub fn random_regular<R: Rng + ?Sized>(n: usize, r: usize, rng: &mut R, attempts: usize) -> Option<Graph> {
    if n * r % 2 == 1 || r >= n.max(1) {
        return None;
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..attempts {
        points.shuffle(rng);
        let mut pairs = Vec::with_capacity(points.len() / 2);
        for c in points.chunks(2) {
            if c[0] == c[1] {
                continue 'attempt;
            }
            pairs.push((c[0], c[1]));
        }
        if let Ok(g) = Graph::from_edges(n, pairs) {
            return Some(g);
        }
    }
    None
}

/// Random connected `r`-regular graph (rejection on connectivity too).
pub fn random_connected_regular<R: Rng + ?Sized>(n: usize, r: usize, rng: &mut R) -> Option<Graph> {
    (0..1000).filter_map(|_| random_regular(n, r, rng, 10_000)).find(Graph::is_connected)
}

/// Random graph with exactly `m` edges (Erdős–Rényi `G(n, m)`).
pub fn random_gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(m <= all.len(), "too many edges requested");
    all.shuffle(rng);
    all.truncate(m);
    Graph::from_edges(n, all).expect("subset of complete graph")
}
