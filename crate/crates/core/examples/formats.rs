//! Reading and writing graph6, DIMACS and plain edge lists.

use std::error::Error;
use std::io::{self, Write};

use graph_factors::formats::{decode_all, encode, Format};
use graph_factors::generators::{cycle, petersen};
use graph_factors::{build_g1, decode_graph6, encode_graph6};

pub fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let p = petersen();
    for format in [Format::Graph6, Format::Dimacs, Format::EdgeList] {
        let text = encode(&p, format)?;
        let back = decode_all(&text, format)?;
        writeln!(out, "{format}: {} bytes, round trip ok={}", text.len(), back == vec![p.clone()])?;
    }

    let big = cycle(100);
    let enc = encode_graph6(&big)?;
    writeln!(out, "C100 graph6 header: {:?}", &enc[..4])?;
    writeln!(out, "C100 round trip ok={}", decode_graph6(&enc)? == big)?;

    let batch = format!("{}{}", encode(&p, Format::Graph6)?, encode(&build_g1(6)?.graph, Format::Graph6)?);
    let graphs = decode_all(&batch, Format::Graph6)?;
    writeln!(out, "batch of {} graphs: orders {:?}", graphs.len(), graphs.iter().map(|g| g.n()).collect::<Vec<_>>())?;

    for bad in ["", "A`", "C~~", "B\x7f"] {
        match decode_graph6(bad.as_bytes()) {
            Ok(g) => writeln!(out, "{bad:?}: unexpectedly decoded {} vertices", g.n())?,
            Err(e) => writeln!(out, "{bad:?}: {e}")?,
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut io::stdout().lock())
}
