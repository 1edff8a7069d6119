//! Parity certificates: a short, independently checkable reason why a
//! graph has no factor with odd allowed degrees.

use std::error::Error;
use std::io::{self, Write};

use graph_factors::{build_g1, build_g2, check_certificate, hub_parity_analysis, FactorSpec};

pub fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let g1 = build_g1(6)?;
    let spec = FactorSpec::new([1, 5])?;
    let cert = hub_parity_analysis(&g1.graph, &g1.hubs, &spec)?;
    writeln!(out, "G1(6) {spec}: components={} achievable={:?}", cert.decomposition.components.len(), cert.achievable)?;
    writeln!(out, "  conclusion={} checked={}", cert.conclusion, check_certificate(&g1.graph, &cert))?;

    let g2 = build_g2(8)?;
    let spec = FactorSpec::k_and_complement(1, 8);
    let cert = hub_parity_analysis(&g2.graph, &g2.hubs, &spec)?;
    writeln!(out, "G2(8) {spec}: achievable={:?} conclusion={}", cert.achievable, cert.conclusion)?;

    // An even allowed degree leaves no parity constraint to exploit.
    match hub_parity_analysis(&g1.graph, &g1.hubs, &FactorSpec::new([2, 4])?) {
        Ok(_) => writeln!(out, "unexpected certificate")?,
        Err(e) => writeln!(out, "G1(6) {{2,4}}: not applicable: {e}")?,
    }

    let mut tampered = hub_parity_analysis(&g1.graph, &g1.hubs, &FactorSpec::new([1, 5])?)?;
    tampered.achievable.insert(g1.hubs[0], vec![1]);
    writeln!(out, "tampered certificate checked={}", check_certificate(&g1.graph, &tampered))?;
    writeln!(out, "{}", serde_json::to_string(&cert)?)?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut io::stdout().lock())
}
