//! Partitions of a degree with their automorphism and centralizer orders.
//!
//!     cargo run --example partitions -- 5

use rgw_split::partitions::{aut_order, class_size, part_product, partitions_of, zeta};

fn main() -> rgw_split::Result<()> {
    let d: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    println!("{:<14} {:>4} {:>6} {:>8} {:>8} {:>10}", "λ", "ℓ", "|Aut|", "ζ", "∏k^m", "|class|");
    for lambda in partitions_of(d)? {
        println!(
            "{:<14} {:>4} {:>6} {:>8} {:>8} {:>10}",
            lambda.to_string(),
            lambda.length(),
            aut_order(&lambda),
            zeta(&lambda),
            part_product(&lambda),
            class_size(&lambda)
        );
    }
    Ok(())
}
