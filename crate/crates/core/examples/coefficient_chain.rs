//! The coefficient ζ/|Aut|² of each boundary class, times the degree of the
//! attaching map, recovers the degree of the node-ordering map.
//!
//!     cargo run --example coefficient_chain -- 6

use rgw_split::partitions::partitions_of;
use rgw_split::tqft::vfc_coefficient_chain;

fn main() -> rgw_split::Result<()> {
    let d: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    println!("{:<14} {:>10} {:>8} {:>8}  holds", "λ", "c_split", "deg Φ", "deg q0");
    for lambda in partitions_of(d)? {
        let c = vfc_coefficient_chain(&lambda);
        println!(
            "{:<14} {:>10} {:>8} {:>8}  {}",
            lambda.to_string(),
            c.c_split.to_string(),
            c.deg_phi,
            c.deg_q0,
            c.holds()
        );
    }
    Ok(())
}
