//! Splits an even-regular graph into 2-factors and assembles even
//! factors from them.

use std::error::Error;
use std::io::{self, Write};

use graph_factors::generators::{circulant, complete};
use graph_factors::{decompose_two_factors, even_k_factor, verify_factor, FactorSpec};

pub fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    for (name, g) in [("K9", complete(9)), ("C12(1,2,5)", circulant(12, &[1, 2, 5]))] {
        let parts = decompose_two_factors(&g)?;
        writeln!(out, "{name}: {} two-factors", parts.len())?;
        for (i, f) in parts.iter().enumerate() {
            let ok = verify_factor(&g, f, &FactorSpec::single(2))?;
            writeln!(out, "  #{i}: {} edges, 2-regular={ok}", f.len())?;
        }
        let r = g.regularity().unwrap_or(0);
        for k in (0..=r).step_by(2) {
            let f = even_k_factor(&g, k)?;
            let rest = f.complement(&g);
            writeln!(
                out,
                "  {k}-factor ok={} complement {}-factor ok={}",
                verify_factor(&g, &f, &FactorSpec::single(k))?,
                r - k,
                verify_factor(&g, &rest, &FactorSpec::single(r - k))?
            )?;
        }
    }
    match decompose_two_factors(&complete(4)) {
        Ok(_) => writeln!(out, "K4 unexpectedly decomposed")?,
        Err(e) => writeln!(out, "K4: {e}")?,
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut io::stdout().lock())
}
