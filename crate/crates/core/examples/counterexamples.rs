//! Builds the regular graphs with no `{k, r-k}`-factor and shows why the
//! search comes back empty.
//!
//! ```text
//! cargo run --example counterexamples
//! ```

use std::error::Error;
use std::io::{self, Write};

use graph_factors::factor::DEFAULT_BUDGET;
use graph_factors::{build_g1, build_g2, classify_case, encode_graph6, h_factor_decide, FactorSpec};

pub fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    for r in [6, 8, 10, 12] {
        let k = 1;
        writeln!(out, "r={r} k={k}: {:?}", classify_case(r, k))?;
        let built = if (r / 2) % 2 == 1 { build_g1(r)? } else { build_g2(r)? };
        let g = &built.graph;
        writeln!(
            out,
            "  {:?}: n={} m={} regular={:?} lambda={} hubs={:?}",
            built.family,
            g.n(),
            g.edge_count(),
            g.regularity(),
            g.edge_connectivity()?,
            built.hubs
        )?;
        if g.n() <= 40 {
            let spec = FactorSpec::k_and_complement(k, r);
            let d = h_factor_decide(g, &spec, DEFAULT_BUDGET);
            writeln!(out, "  {spec}-factor exists: {} ({} nodes)", d.exists(), d.nodes_explored)?;
        }
    }
    let g1 = build_g1(6)?;
    writeln!(out, "G1(6) graph6: {}", String::from_utf8(encode_graph6(&g1.graph)?)?)?;
    writeln!(out, "{}", serde_json::to_string(&g1.descriptor())?)?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut io::stdout().lock())
}
