//! Exhaustive edge-subset oracle. Independent of the matching machinery;
//! intended for tests on small graphs.

use crate::graph::Graph;

use super::{Decision, FactorCertificate, FactorError, FactorSpec, Method, Verdict};

pub const BRUTE_FORCE_EDGE_CAP: usize = 22;

/// Walks all `2^m` edge subsets in Gray-code order, flipping one edge per
/// step and tracking how many vertices currently have a disallowed degree.
pub fn brute_force_h_factor(g: &Graph, spec: &FactorSpec) -> Result<Decision, FactorError> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_EDGE_CAP {
        return Err(FactorError::TooManyEdges { cap: BRUTE_FORCE_EDGE_CAP, found: m });
    }
    let max_deg = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    let ok: Vec<bool> = (0..=max_deg).map(|d| spec.contains(d)).collect();
    let mut deg = vec![0usize; g.n()];
    let mut bad = (0..g.n()).filter(|_| !ok[0]).count();
    let mut chosen = vec![false; m];
    let edges = g.edges();
    let total: u64 = 1 << m;
    for step in 0..total {
        if step > 0 {
            let i = step.trailing_zeros() as usize;
            let (u, v) = edges[i];
            chosen[i] = !chosen[i];
            for w in [u, v] {
                let before = ok[deg[w]];
                if chosen[i] {
                    deg[w] += 1;
                } else {
                    deg[w] -= 1;
                }
                match (before, ok[deg[w]]) {
                    (true, false) => bad += 1,
                    (false, true) => bad -= 1,
                    _ => {}
                }
            }
        }
        if bad == 0 {
            let cert = FactorCertificate::new((0..m).filter(|&i| chosen[i]).map(|i| edges[i]).collect());
            return Ok(Decision { verdict: Verdict::Exists(cert), nodes_explored: step + 1 });
        }
    }
    Ok(Decision { verdict: Verdict::NotExists(Method::BruteForce), nodes_explored: total })
}
