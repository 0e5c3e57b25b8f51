//! Blowing curves down on a weighted dual graph, one (-1)-curve at a time.
//!
//!     cargo run --example contraction

use cuspcalc::chain::{adjoint, star_all, tw};
use cuspcalc::graph::{chain_shrinks_to_zero, shrink_chain, DualGraph};
use cuspcalc::{LinearChain, Result};

fn main() -> Result<()> {
    // [3,1,2]: blows down completely
    let g = DualGraph::path(&[-3, -1, -2]);
    let trace = g.contract_to_point()?;
    for s in &trace.steps {
        println!(
            "contract v{} ({:?}, neighbours {:?})",
            s.vertex, s.kind, s.neighbors
        );
    }
    println!("blow-ups in order: {:?}", trace.blow_up_kinds());

    // [A,1,B] shrinks to a single 0-curve exactly when A = B*
    let b: LinearChain = "[3]".parse()?;
    let a = adjoint(&b)?;
    println!(
        "A = {a}, B = {b}: shrinks to [0]: {}",
        chain_shrinks_to_zero(&a, &b)
    );
    println!(
        "A = {b}, B = {b}: shrinks to [0]: {}",
        chain_shrinks_to_zero(&b, &b)
    );

    // [a] * TW_n * B* shrinks down to [a] after n sprouting blow-downs
    let chain = star_all(&[LinearChain::new(vec![3]), tw(2), adjoint(&b)?])?;
    println!("{chain} with B = {b}: n = {}", shrink_chain(&chain, &b, 3)?);

    // ends in a single 0-curve, not a point
    let stuck = DualGraph::path(&[-2, -2, -1, -3]).contract_to_point();
    println!("[2,2,1,3]: {}", stuck.unwrap_err());
    Ok(())
}
