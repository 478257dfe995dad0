//! Generating series of both sides, at a chosen level.
//!
//!     cargo run --release --example generating_series -- 2 1 -1

use rgw_split::hurwitz::{Method, Oracle};
use rgw_split::tqft::instantiate::split_check;
use rgw_split::Profile;

fn main() -> rgw_split::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let d = args.first().copied().unwrap_or(2) as u32;
    let half_genus = args.get(1).copied().unwrap_or(1) as u32;
    let level = args.get(2).copied().unwrap_or(0);

    let oracle = Oracle::default();
    for profile in [Profile::empty(d)?, Profile::parse(d, &format!("[[{d}]]"))?] {
        let c = split_check(&oracle, half_genus, &profile, level, Method::Characters)?;
        println!("profile {profile}, level {level}");
        println!("  smoothing: {}", c.smoothing_series);
        println!("  split:     {}", c.split_series);
        println!("  equal: {}", c.series_agrees());
    }
    Ok(())
}
