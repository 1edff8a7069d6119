//! Checks that connected r-regular graphs with r/2 odd have an
//! r/2-factor exactly when their order is even.

use std::error::Error;
use std::io::{self, Write};

use graph_factors::generators::{circulant, complete, random_connected_regular};
use graph_factors::{build_g1, verify_theorem2};
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let mut graphs = vec![
        ("K7".to_string(), complete(7)),
        ("K11".to_string(), complete(11)),
        ("C13(1,2,3)".to_string(), circulant(13, &[1, 2, 3])),
        ("C14(1,4,5)".to_string(), circulant(14, &[1, 4, 5])),
        ("G1(6)".to_string(), build_g1(6)?.graph),
    ];
    let mut rng = StdRng::seed_from_u64(7);
    for n in [12, 15, 18] {
        if let Some(g) = random_connected_regular(n, 6, &mut rng) {
            graphs.push((format!("random 6-regular n={n}"), g));
        }
    }
    for (name, g) in &graphs {
        let check = verify_theorem2(g)?;
        writeln!(out, "{name}: n={} r={} factor={} holds={}", check.n, check.r, check.decision.exists(), check.holds)?;
    }
    match verify_theorem2(&complete(5)) {
        Ok(_) => writeln!(out, "K5 unexpectedly accepted")?,
        Err(e) => writeln!(out, "K5: {e}")?,
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut io::stdout().lock())
}
