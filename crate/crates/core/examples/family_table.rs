//! Numerical data of the four bicuspidal families, each run through the
//! genus check, the self-intersection of the strict transform and the
//! contraction of both exceptional trees.
//!
//!     cargo run --example family_table [MAX_A] [MAX_B]

use cuspcalc::classify::{
    assemble_global_graph, family_data, genus_check, strict_transform_selfint, FamilyParams,
};
use cuspcalc::Result;

fn main() -> Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().unwrap_or(3));
    let max_a = args.next().unwrap_or(2);
    let max_b = args.next().unwrap_or(4);

    println!(
        "{:<8} {:>2} {:>2} {:>4}  {:<34} {:>6} {:>7}",
        "family", "a", "b", "d", "cusps", "genus", "(C')^2"
    );
    for family in 1..=4u8 {
        for a in 1..=max_a {
            for b in FamilyParams::min_b(family)..=max_b {
                let p = FamilyParams::new(family, a, b)?;
                let nd = family_data(&p)?;
                let g = assemble_global_graph(&nd)?;
                let [x, y] = nd.cusps();
                println!(
                    "{:<8} {:>2} {:>2} {:>4}  {:<34} {:>6} {:>7}  ({} curves)",
                    family,
                    a,
                    b,
                    nd.degree(),
                    format!("{x} {y}"),
                    if genus_check(&nd) { "ok" } else { "FAILED" },
                    strict_transform_selfint(&nd),
                    g.graph.len()
                );
            }
        }
    }
    Ok(())
}
