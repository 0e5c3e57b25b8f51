//! Linear chain arithmetic: discriminants, inductances, adjoints and the
//! star product.
//!
//!     cargo run --example chain_arithmetic

use cuspcalc::chain::{
    adjoint, chain_from_inductance, discriminant, inductance, star, tw, Fraction,
};
use cuspcalc::{LinearChain, Result};

fn main() -> Result<()> {
    let a: LinearChain = "[2,3,4]".parse()?;
    println!("A = {a}");
    println!("d(A) = {}", discriminant(&a));
    println!("e(A) = {}", inductance(&a)?);

    let s = adjoint(&a)?;
    println!("A* = {s}, and A** = {}", adjoint(&s)?);

    // e(A) + e(tA*) = 1
    let back = inductance(&a)?.as_ratio() + inductance(&s.reverse())?.as_ratio();
    println!("e(A) + e(tA*) = {back}");

    println!("TW_3 = {}", tw(3));
    println!(
        "[2,3] * [4] = {}",
        star(&"[2,3]".parse()?, &"[4]".parse()?)?
    );

    for (p, q) in [(1, 2), (3, 7), (5, 13)] {
        let e = Fraction::new(p, q)?;
        println!("e^-1({e}) = {}", chain_from_inductance(&e)?);
    }
    Ok(())
}
