//! Counts branched covers two ways and compares them.
//!
//!     cargo run --release --example hurwitz_oracle -- 3 1 '[[2,1],[2,1]]'

use rgw_split::hurwitz::{CoverCountQuery, Method, Oracle};
use rgw_split::Profile;

fn main() -> rgw_split::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let d: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let genus: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let profile = Profile::parse(d, args.get(2).map(String::as_str).unwrap_or("[[2,1],[2,1]]"))?;

    let oracle = Oracle::default();
    let q = CoverCountQuery::new(genus, profile);
    println!("genus {genus}, profile {}, forced χ = {}", q.profile, q.chi_forced());
    println!("enumeration cost ≈ {}", Oracle::enumeration_cost(&q));

    let by_chars = oracle.count(&q, Method::Characters)?;
    println!("characters:  {by_chars}");
    match oracle.count(&q, Method::Enumeration) {
        Ok(v) => println!("enumeration: {v}"),
        Err(e) => println!("enumeration skipped: {e}"),
    }
    let ordered = oracle.count(&q.clone().ordered(), Method::Characters)?;
    println!("ordered contacts: {ordered}");

    let doublet = oracle.doublet_real_count(&q)?;
    println!("as a doublet: value {} at real χ = {}", doublet.value, doublet.chi_real);
    Ok(())
}
