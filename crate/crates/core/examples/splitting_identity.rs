//! Both sides of the degeneration rule on a doublet target, term by term.
//!
//!     cargo run --release --example splitting_identity -- 3 1 '[]'

use rgw_split::hurwitz::{Method, Oracle};
use rgw_split::tqft::instantiate::split_check;
use rgw_split::Profile;

fn main() -> rgw_split::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let d: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let half_genus: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let profile = Profile::parse(d, args.get(2).map(String::as_str).unwrap_or("[]"))?;

    let c = split_check(&Oracle::default(), half_genus, &profile, 0, Method::Characters)?;
    println!("smoothing (χ = {}): {}", c.chi, c.smoothing);
    for t in &c.terms {
        println!("  λ = {:<10} ζ = {:<4} χ' = {:<4} value = {}", t.lambda.to_string(), t.zeta, t.chi, t.value);
    }
    println!("Σ ζ·value = {}", c.split);
    println!("agrees: {}", c.invariant_agrees());
    Ok(())
}
