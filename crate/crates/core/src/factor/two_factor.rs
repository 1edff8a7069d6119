//! Constructive 2-factorization of even-regular graphs.
//!
//! An Euler circuit of each component orients every edge so that each vertex
//! has `r/2` arcs out and `r/2` arcs in. Splitting every vertex into an
//! out-copy and an in-copy turns the arcs into an `r/2`-regular bipartite
//! graph; each perfect matching of it picks one arc out of and one arc into
//! every vertex, i.e. a 2-factor of the original graph.

use crate::graph::{Edge, Graph, Vertex};

use super::{FactorCertificate, FactorError};

fn even_regularity(g: &Graph) -> Result<usize, FactorError> {
    let r = g.regularity().ok_or(FactorError::NotRegular)?;
    if r % 2 == 1 {
        return Err(FactorError::OddDegree(r));
    }
    Ok(r)
}

/// Orients all edges along Euler circuits (one per component). Ties go to
/// the smallest-id unused neighbour.
fn euler_orientation(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut used = vec![false; g.edge_count()];
    let mut next = vec![0usize; g.n()];
    let mut arcs = Vec::with_capacity(g.edge_count());
    for start in 0..g.n() {
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            let nbrs = g.neighbors(v);
            while next[v] < nbrs.len() && used[g.edge_index(v, nbrs[next[v]]).unwrap()] {
                next[v] += 1;
            }
            if next[v] == nbrs.len() {
                stack.pop();
                continue;
            }
            let w = nbrs[next[v]];
            used[g.edge_index(v, w).unwrap()] = true;
            arcs.push((v, w));
            stack.push(w);
        }
    }
    arcs
}

/// Kuhn's augmenting-path matching, left vertices in id order, arcs in the
/// order stored.
fn bipartite_perfect_matching(out: &[Vec<Vertex>]) -> Option<Vec<Vertex>> {
    let n = out.len();
    let mut match_in: Vec<Option<Vertex>> = vec![None; n];
    fn try_kuhn(v: Vertex, out: &[Vec<Vertex>], seen: &mut [bool], match_in: &mut [Option<Vertex>]) -> bool {
        for &w in &out[v] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if match_in[w].is_none_or(|u| try_kuhn(u, out, seen, match_in)) {
                match_in[w] = Some(v);
                return true;
            }
        }
        false
    }
    for v in 0..n {
        let mut seen = vec![false; n];
        if !try_kuhn(v, out, &mut seen, &mut match_in) {
            return None;
        }
    }
    let mut match_out = vec![0; n];
    for (w, m) in match_in.iter().enumerate() {
        match_out[m.expect("perfect")] = w;
    }
    Some(match_out)
}

fn peel_two_factors(g: &Graph, rounds: usize) -> Vec<FactorCertificate> {
    let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    for (v, w) in euler_orientation(g) {
        out[v].push(w);
    }
    for list in &mut out {
        list.sort_unstable();
    }
    let mut factors = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        // Regular bipartite graphs always have a perfect matching.
        let m = bipartite_perfect_matching(&out).expect("regular bipartite graph has a perfect matching");
        let edges: Vec<Edge> = m.iter().enumerate().map(|(v, &w)| (v, w)).collect();
        for (v, &w) in m.iter().enumerate() {
            out[v].retain(|&x| x != w);
        }
        factors.push(FactorCertificate::new(edges));
    }
    factors
}

/// Splits an even-regular graph into `r/2` edge-disjoint 2-factors.
pub fn decompose_two_factors(g: &Graph) -> Result<Vec<FactorCertificate>, FactorError> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let r = even_regularity(g)?;
    Ok(peel_two_factors(g, r / 2))
}

/// A `k`-factor of an even-regular graph for even `k`, as the union of `k/2`
/// 2-factors.
pub fn even_k_factor(g: &Graph, k: usize) -> Result<FactorCertificate, FactorError> {
    if k == 0 {
        return Ok(FactorCertificate::default());
    }
    let r = even_regularity(g)?;
    if k % 2 == 1 || k > r {
        return Err(FactorError::BadFactorDegree { k, r });
    }
    let edges = peel_two_factors(g, k / 2).into_iter().flat_map(|f| f.edges().to_vec()).collect();
    Ok(FactorCertificate::new(edges))
}
