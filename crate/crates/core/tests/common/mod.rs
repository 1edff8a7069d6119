#![allow(dead_code)]

use graph_factors::generators::{circulant, cycle, random_connected_regular, random_gnm};
use graph_factors::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every labelled connected graph on `n` vertices.
pub fn all_connected_labelled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let chosen = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            Graph::from_edges(n, chosen).unwrap()
        })
        .filter(Graph::is_connected)
        .collect()
}

/// Random connected graph on `n` vertices with at most `max_edges` edges
/// (spanning tree plus random extra edges).
pub fn random_connected<R: Rng>(n: usize, max_edges: usize, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    let cap = max_edges.min(n * (n - 1) / 2);
    let target = rng.gen_range(n - 1..=cap);
    while pairs.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && !pairs.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
            pairs.push(e);
        }
    }
    Graph::from_edges(n, pairs).unwrap()
}

/// Small connected graphs: exhaustive up to 5 vertices, sampled for 6–8,
/// plus named families; all with at most 14 edges.
pub fn oracle_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.extend(all_connected_labelled(n));
    }
    let mut r = rng(2024);
    for n in 6..=8 {
        for _ in 0..150 {
            out.push(random_connected(n, 14, &mut r));
        }
    }
    out.extend([cycle(6), cycle(7), cycle(8), circulant(8, &[1, 2]), circulant(7, &[1, 3])]);
    out.push(Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]).unwrap());
    out.push(Graph::from_edges(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap());
    out.retain(|g| g.edge_count() <= 14 && g.is_connected());
    out
}

/// 200 random graphs on at most 10 vertices and at most 22 edges.
pub fn random_small_graphs(seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..200)
        .map(|_| {
            let n = r.gen_range(1..=10);
            let m = r.gen_range(0..=(n * (n - 1) / 2).min(22));
            random_gnm(n, m, &mut r)
        })
        .collect()
}

/// Connected even-regular graphs of even order.
pub fn gallai_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in [6, 8, 10, 12, 14, 16] {
        for jumps in [&[1, 2][..], &[1, 3], &[1, 2, 3], &[2, 3], &[1, 2, 4], &[1, 3, 5]] {
            if jumps.iter().all(|&j| 2 * j < n) {
                let g = circulant(n, jumps);
                if g.is_connected() {
                    out.push(g);
                }
            }
        }
    }
    let mut r = rng(77);
    for n in [8, 10, 12, 14] {
        out.push(random_connected_regular(n, 4, &mut r).unwrap());
        out.push(random_connected_regular(n, 6, &mut r).unwrap());
    }
    out.push(graph_factors::build_g1(6).unwrap().graph);
    out.retain(|g| g.is_connected() && g.n() % 2 == 0 && g.regularity().is_some_and(|r| r % 2 == 0));
    out
}
