//! f-factor existence by reduction to perfect matching.
//!
//! Each edge `uv` becomes a pair of endpoint vertices `a(uv,u) - a(uv,v)`.
//! Each vertex `v` gets `deg(v) - f(v)` core vertices joined to all of its
//! endpoint vertices. In a perfect matching the cores of `v` soak up exactly
//! `deg(v) - f(v)` endpoints, so the remaining `f(v)` endpoints at `v` are
//! matched across their edge, and those edges form the factor.

use crate::graph::{Edge, Graph};
use crate::matching::perfect_matching_adj;

use super::{Decision, DegreeTarget, FactorCertificate, FactorError, Method, Verdict};

pub fn f_factor_decide(g: &Graph, f: &DegreeTarget) -> Result<Decision, FactorError> {
    f.check_against(g)?;
    let verdict = if f.targets.iter().sum::<usize>() % 2 == 1 {
        Verdict::NotExists(Method::Parity)
    } else {
        match f_factor_edges(g, &f.targets) {
            Some(edges) => Verdict::Exists(FactorCertificate::new(edges)),
            None => Verdict::NotExists(Method::ExhaustedAssignments),
        }
    };
    Ok(Decision { verdict, nodes_explored: 1 })
}

/// Unchecked core: `targets[v] <= deg(v)` is assumed.
pub(crate) fn f_factor_edges(g: &Graph, targets: &[usize]) -> Option<Vec<Edge>> {
    if targets.iter().sum::<usize>() % 2 == 1 {
        return None;
    }
    let m = g.edge_count();
    // Endpoint vertex of edge i at its smaller end is 2i, at its larger end 2i+1.
    let mut ends_at: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        ends_at[u].push(2 * i);
        ends_at[v].push(2 * i + 1);
    }
    let cores: usize = (0..g.n()).map(|v| g.degree(v) - targets[v]).sum();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * m + cores];
    for i in 0..m {
        adj[2 * i].push(2 * i + 1);
        adj[2 * i + 1].push(2 * i);
    }
    let mut next = 2 * m;
    for v in 0..g.n() {
        for _ in 0..g.degree(v) - targets[v] {
            for &a in &ends_at[v] {
                adj[next].push(a);
                adj[a].push(next);
            }
            next += 1;
        }
    }
    let mate = perfect_matching_adj(&adj)?;
    Some((0..m).filter(|&i| mate[2 * i] == 2 * i + 1).map(|i| g.edges()[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::verify_f_factor;
    use crate::generators::{complete, cycle, petersen};
    use crate::matching::has_perfect_matching;

    #[test]
    fn spec_examples() {
        let c4 = cycle(4);
        let d = f_factor_decide(&c4, &DegreeTarget::constant(4, 1)).unwrap();
        assert!(verify_f_factor(&c4, d.certificate().unwrap(), &DegreeTarget::constant(4, 1)).unwrap());
        let c5 = cycle(5);
        let d = f_factor_decide(&c5, &DegreeTarget::constant(5, 1)).unwrap();
        assert_eq!(d.verdict, Verdict::NotExists(Method::Parity));
        let k4 = complete(4);
        let d = f_factor_decide(&k4, &DegreeTarget::constant(4, 2)).unwrap();
        assert_eq!(d.certificate().unwrap().len(), 4);
    }

    #[test]
    fn errors() {
        let c4 = cycle(4);
        assert_eq!(
            f_factor_decide(&c4, &DegreeTarget::new(vec![3, 0, 0, 0])),
            Err(FactorError::TargetTooLarge { vertex: 0, target: 3, degree: 2 })
        );
        assert_eq!(
            f_factor_decide(&c4, &DegreeTarget::new(vec![1])),
            Err(FactorError::TargetLength { expected: 4, found: 1 })
        );
    }

    #[test]
    fn even_sum_but_infeasible() {
        // Star K_{1,3}: centre 1, leaves 1,1,1 -> sum 4 even, but infeasible.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = f_factor_decide(&star, &DegreeTarget::new(vec![1, 1, 1, 1])).unwrap();
        assert_eq!(d.verdict, Verdict::NotExists(Method::ExhaustedAssignments));
    }

    #[test]
    fn one_factor_agrees_with_matching() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let mut graphs = vec![petersen(), complete(6), cycle(6), cycle(7)];
        for _ in 0..200 {
            let n = rng.gen_range(2..=10);
            let m = rng.gen_range(0..=n * (n - 1) / 2);
            graphs.push(crate::generators::random_gnm(n, m, &mut rng));
        }
        for g in graphs {
            if g.degree_profile().min() == Some(0) {
                continue;
            }
            let d = f_factor_decide(&g, &DegreeTarget::constant(g.n(), 1)).unwrap();
            assert_eq!(d.exists(), has_perfect_matching(&g));
        }
    }
}
