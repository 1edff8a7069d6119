//! Degree-constrained spanning subgraphs: exact f-factor and H-factor
//! decisions, an exhaustive oracle, and the constructive even-factor
//! builder for even-regular graphs.

mod brute;
mod search;
mod tutte;
mod two_factor;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};

pub use brute::{brute_force_h_factor, BRUTE_FORCE_EDGE_CAP};
pub use search::{h_factor_decide, h_factor_decide_with, SolverOptions, DEFAULT_BUDGET};
pub use tutte::f_factor_decide;
pub use two_factor::{decompose_two_factors, even_k_factor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("degree set is empty")]
    EmptySpec,
    #[error("certificate edge ({0}, {1}) is not an edge of the host graph")]
    ForeignEdge(Vertex, Vertex),
    #[error("target {target} at vertex {vertex} exceeds its degree {degree}")]
    TargetTooLarge { vertex: Vertex, target: usize, degree: usize },
    #[error("degree target has {found} entries for {expected} vertices")]
    TargetLength { expected: usize, found: usize },
    #[error("brute force is capped at {cap} edges, graph has {found}")]
    TooManyEdges { cap: usize, found: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph degree {0} is odd")]
    OddDegree(usize),
    #[error("factor degree {k} must be even and at most {r}")]
    BadFactorDegree { k: usize, r: usize },
}

/// The set of allowed degrees. Stored sorted and deduplicated, so `{5, 1}`,
/// `{1, 5, 1}` and `{1, 5}` are the same spec.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FactorSpec {
    allowed: Vec<usize>,
}

impl FactorSpec {
    pub fn new<I: IntoIterator<Item = usize>>(allowed: I) -> Result<Self, FactorError> {
        let set: BTreeSet<usize> = allowed.into_iter().collect();
        if set.is_empty() {
            return Err(FactorError::EmptySpec);
        }
        Ok(FactorSpec { allowed: set.into_iter().collect() })
    }

    pub fn single(k: usize) -> Self {
        FactorSpec { allowed: vec![k] }
    }

    /// `{k, r - k}`; panics if `k > r`.
    pub fn k_and_complement(k: usize, r: usize) -> Self {
        assert!(k <= r, "k = {k} exceeds r = {r}");
        FactorSpec::new([k, r - k]).expect("nonempty")
    }

    pub fn allowed(&self) -> &[usize] {
        &self.allowed
    }

    pub fn contains(&self, d: usize) -> bool {
        self.allowed.binary_search(&d).is_ok()
    }

    pub fn all_odd(&self) -> bool {
        self.allowed.iter().all(|d| d % 2 == 1)
    }

    /// `Some(p)` if every allowed degree has parity `p`.
    pub fn common_parity(&self) -> Option<usize> {
        let p = self.allowed[0] % 2;
        self.allowed.iter().all(|d| d % 2 == p).then_some(p)
    }
}

impl TryFrom<Vec<usize>> for FactorSpec {
    type Error = FactorError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        FactorSpec::new(v)
    }
}

impl From<FactorSpec> for Vec<usize> {
    fn from(s: FactorSpec) -> Self {
        s.allowed
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.allowed.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Exact per-vertex degree targets `f(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTarget {
    pub targets: Vec<usize>,
}

impl DegreeTarget {
    pub fn new(targets: Vec<usize>) -> Self {
        DegreeTarget { targets }
    }

    pub fn constant(n: usize, f: usize) -> Self {
        DegreeTarget { targets: vec![f; n] }
    }

    pub fn check_against(&self, g: &Graph) -> Result<(), FactorError> {
        if self.targets.len() != g.n() {
            return Err(FactorError::TargetLength { expected: g.n(), found: self.targets.len() });
        }
        for (vertex, &target) in self.targets.iter().enumerate() {
            let degree = g.degree(vertex);
            if target > degree {
                return Err(FactorError::TargetTooLarge { vertex, target, degree });
            }
        }
        Ok(())
    }
}

/// Edge subset of a host graph, sorted, serialized as `[[u, v], ...]`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FactorCertificate {
    edges: Vec<Edge>,
}

impl FactorCertificate {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        edges.dedup();
        FactorCertificate { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Degree of every host vertex within the certificate.
    pub fn degrees(&self, g: &Graph) -> Result<Vec<usize>, FactorError> {
        let mut deg = vec![0; g.n()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(FactorError::ForeignEdge(u, v));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        Ok(deg)
    }

    /// Host edges not in the certificate.
    pub fn complement(&self, g: &Graph) -> FactorCertificate {
        let edges = g.edges().iter().copied().filter(|e| self.edges.binary_search(e).is_err()).collect();
        FactorCertificate { edges }
    }
}

/// Every vertex degree of the certificate subgraph lies in `spec`.
pub fn verify_factor(g: &Graph, cert: &FactorCertificate, spec: &FactorSpec) -> Result<bool, FactorError> {
    Ok(cert.degrees(g)?.into_iter().all(|d| spec.contains(d)))
}

/// Every vertex degree of the certificate subgraph equals its target.
pub fn verify_f_factor(g: &Graph, cert: &FactorCertificate, f: &DegreeTarget) -> Result<bool, FactorError> {
    Ok(cert.degrees(g)? == f.targets)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Every candidate degree assignment (after pruning) was resolved and
    /// none admits a factor.
    ExhaustedAssignments,
    /// Handshake parity rules the factor out.
    Parity,
    /// Every edge subset was enumerated.
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Exists(FactorCertificate),
    NotExists(Method),
    /// The node budget ran out before the search finished.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DecisionRecord", try_from = "DecisionRecord")]
pub struct Decision {
    pub verdict: Verdict,
    pub nodes_explored: u64,
}

impl Decision {
    pub fn exists(&self) -> bool {
        matches!(self.verdict, Verdict::Exists(_))
    }

    pub fn not_exists(&self) -> bool {
        matches!(self.verdict, Verdict::NotExists(_))
    }

    pub fn is_inconclusive(&self) -> bool {
        self.verdict == Verdict::Inconclusive
    }

    pub fn certificate(&self) -> Option<&FactorCertificate> {
        match &self.verdict {
            Verdict::Exists(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum VerdictTag {
    Exists,
    NotExists,
    Inconclusive,
}

/// Wire form: `{verdict, method, certificate?, nodes_explored}`.
#[derive(Serialize, Deserialize)]
struct DecisionRecord {
    verdict: VerdictTag,
    method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    certificate: Option<FactorCertificate>,
    nodes_explored: u64,
}

impl From<Decision> for DecisionRecord {
    fn from(d: Decision) -> Self {
        let (verdict, method, certificate) = match d.verdict {
            Verdict::Exists(c) => (VerdictTag::Exists, None, Some(c)),
            Verdict::NotExists(m) => (VerdictTag::NotExists, Some(m), None),
            Verdict::Inconclusive => (VerdictTag::Inconclusive, None, None),
        };
        DecisionRecord { verdict, method, certificate, nodes_explored: d.nodes_explored }
    }
}

impl TryFrom<DecisionRecord> for Decision {
    type Error = String;

    fn try_from(r: DecisionRecord) -> Result<Self, Self::Error> {
        let verdict = match (r.verdict, r.method, r.certificate) {
            (VerdictTag::Exists, _, Some(c)) => Verdict::Exists(c),
            (VerdictTag::NotExists, Some(m), None) => Verdict::NotExists(m),
            (VerdictTag::Inconclusive, None, None) => Verdict::Inconclusive,
            _ => return Err("inconsistent decision record".into()),
        };
        Ok(Decision { verdict, nodes_explored: r.nodes_explored })
    }
}
