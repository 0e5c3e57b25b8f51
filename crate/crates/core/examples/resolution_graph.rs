//! The dual graph of the minimal embedded resolution of a cusp, with its
//! clusters A_i, B_i and the numbers o_i.
//!
//!     cargo run --example resolution_graph [CHAR-SEQ] [--dot]

use cuspcalc::cusp::{resolution_graph, CharacteristicSequence};
use cuspcalc::Result;

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let dot = args.iter().any(|a| a == "--dot");
    let seq = args
        .iter()
        .find(|a| !a.starts_with("--"))
        .map_or("(4;6,7)", |s| s);
    let ch: CharacteristicSequence = seq.parse()?;
    let r = resolution_graph(&ch)?;

    if dot {
        print!("{}", r.graph.to_dot());
        return Ok(());
    }
    println!(
        "{ch}: {} exceptional curves, g = {}",
        r.vertex_count(),
        r.g()
    );
    for (i, c) in r.clusters.iter().enumerate() {
        println!(
            "  A{} = {}  B{} = {}  o{} = {}",
            i + 1,
            c.a,
            i + 1,
            c.b,
            i + 1,
            c.o
        );
    }
    for v in r.graph.vertices() {
        let nbrs: Vec<String> = r
            .graph
            .neighbors(v.id)
            .filter_map(|w| r.graph.vertex(w).unwrap().label.clone())
            .collect();
        let label = v.label.as_deref().unwrap_or("?");
        println!("  {label:<6} {:>3}  -- {}", v.weight, nbrs.join(", "));
    }
    let trace = r.graph.contract_to_point()?;
    println!("contracts to a point in {} steps", trace.len());
    Ok(())
}
