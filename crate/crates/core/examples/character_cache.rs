//! Persists a character table to disk and reads it back.
//!
//!     cargo run --release --example character_cache -- 9 /tmp/rgw-cache

use std::path::PathBuf;
use std::time::Instant;

use rgw_split::characters::{cache_file_name, CharacterTable};

fn main() -> rgw_split::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let d: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(8);
    let dir = args
        .get(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("rgw-cache-example"));
    std::fs::create_dir_all(&dir)?;

    for pass in ["first", "second"] {
        let start = Instant::now();
        let table = CharacterTable::load_or_compute(d, Some(&dir))?;
        println!(
            "{pass} load of d = {d}: {} classes in {:?}",
            table.partitions().len(),
            start.elapsed()
        );
    }
    println!("cache file: {}", dir.join(cache_file_name(d)).display());
    Ok(())
}
