//! Factors of regular graphs.
//!
//! The crate builds the near-complete block `K_{r+1} - e` and the two
//! regular families assembled from it that have no `{k, r-k}`-factor,
//! decides H-factor existence exactly on small and structured graphs, and
//! checks the surrounding theorems on concrete instances:
//!
//! * [`graph`]: simple graphs, regularity, connectivity, edge connectivity;
//! * [`formats`]: graph6, DIMACS and edge-list I/O;
//! * [`construct`]: the block and the G1 / G2 families;
//! * [`factor`]: f-factor and H-factor decisions, the brute-force oracle and
//!   constructive 2-factorizations;
//! * [`verify`]: Gallai's hypotheses, the half-degree equivalence and hub
//!   parity certificates;
//! * [`cli`]: the `graph-factors` command.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod construct;
pub mod factor;
pub mod flow;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod verify;

pub use construct::{build_g1, build_g2, classify_case, near_complete_block, CaseLabel};
pub use factor::{
    brute_force_h_factor, decompose_two_factors, even_k_factor, f_factor_decide, h_factor_decide, verify_factor,
    Decision, DegreeTarget, FactorCertificate, FactorSpec, Verdict,
};
pub use formats::{decode_graph6, encode_graph6};
pub use graph::Graph;
pub use verify::{check_certificate, gallai_check, hub_parity_analysis, verify_theorem2};
