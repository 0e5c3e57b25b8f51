//! Search all pairs of cusps compatible with a rational curve of degree d
//! and (C')^2 = -1, and mark which ones the family table accounts for.
//!
//!     cargo run --example scan [MAX_DEGREE]

use cuspcalc::classify::{scan_candidates_bounded, DEFAULT_SCAN_BOUND};
use cuspcalc::Result;

fn main() -> Result<()> {
    let max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SCAN_BOUND);
    let found = scan_candidates_bounded(max, max.max(DEFAULT_SCAN_BOUND))?;
    let mut extra = 0;
    for c in &found {
        match c.family {
            Some(p) => println!("{}  {p}", c.data),
            None => {
                extra += 1;
                println!("{}  not in table", c.data);
            }
        }
    }
    println!("{} candidates, {} outside the table", found.len(), extra);
    Ok(())
}
