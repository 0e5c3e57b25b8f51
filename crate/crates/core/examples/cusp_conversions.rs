//! Moving between characteristic sequences, multiplicity sequences and
//! Puiseux pairs.
//!
//!     cargo run --example cusp_conversions [CHAR-SEQ]...

use cuspcalc::cusp::{
    char_from_mult, euclid_decompose, local_invariants, mult_from_char, puiseux_from_char,
    CharacteristicSequence, MultiplicitySequence,
};
use cuspcalc::Result;

fn main() -> Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["(2;3)".into(), "(4;6,7)".into(), "(6;8,9)".into()];
    }
    for s in &args {
        let ch: CharacteristicSequence = s.parse()?;
        let m = mult_from_char(&ch);
        let inv = local_invariants(&m);
        println!("{ch}");
        println!("  multiplicities {m}, full {}", m.display_full());
        println!("  puiseux {}", puiseux_from_char(&ch));
        println!("  delta {}, sum of squares {}", inv.delta, inv.sum_sq);
        for (i, row) in euclid_decompose(&ch).rows.iter().enumerate() {
            println!(
                "  row {}: gamma {} quotients {:?}",
                i + 1,
                row.gamma,
                row.quotients
            );
        }
    }

    // written forms may drop the trailing ones
    let m: MultiplicitySequence = "(3,3,2)".parse()?;
    println!("{} is {}", m.display_full(), char_from_mult(&m));
    Ok(())
}
