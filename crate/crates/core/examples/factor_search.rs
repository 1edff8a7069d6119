//! Deciding H-factors: exact search with a node budget, the f-factor
//! reduction to matching, and the brute-force oracle for small graphs.

use std::error::Error;
use std::io::{self, Write};

use graph_factors::factor::{h_factor_decide_with, SolverOptions};
use graph_factors::generators::{complete, cycle, petersen};
use graph_factors::{brute_force_h_factor, f_factor_decide, h_factor_decide, verify_factor, DegreeTarget, FactorSpec};

pub fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let p = petersen();
    for spec in [FactorSpec::single(1), FactorSpec::single(2), FactorSpec::new([0, 2])?] {
        let d = h_factor_decide(&p, &spec, 1_000_000);
        let fast = d.exists();
        let slow = brute_force_h_factor(&p, &spec)?.exists();
        write!(out, "petersen {spec}: exists={fast} oracle={slow} nodes={}", d.nodes_explored)?;
        if let Some(c) = d.certificate() {
            write!(out, " verified={}", verify_factor(&p, c, &spec)?)?;
        }
        writeln!(out)?;
    }

    // Odd cycle: every degree odd on an odd number of vertices is impossible.
    let d = h_factor_decide(&cycle(7), &FactorSpec::single(1), 1_000);
    writeln!(out, "C7 {{1}}: {}", serde_json::to_string(&d)?)?;

    // A budget too small to finish is reported, never guessed.
    let d = h_factor_decide(&complete(9), &FactorSpec::single(2), 3);
    writeln!(out, "K9 {{2}} with budget 3: inconclusive={}", d.is_inconclusive())?;

    let opts = SolverOptions { parallel: true, ..Default::default() };
    let d = h_factor_decide_with(&complete(10), &FactorSpec::new([3])?, &opts);
    writeln!(out, "K10 {{3}} parallel: exists={}", d.exists())?;

    let f = DegreeTarget::new(vec![1, 2, 1, 2, 2, 1, 1, 2, 1, 1]);
    let d = f_factor_decide(&p, &f)?;
    writeln!(out, "petersen f-factor: exists={}", d.exists())?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut io::stdout().lock())
}
