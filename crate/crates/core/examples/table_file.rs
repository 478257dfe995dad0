//! Builds an invariant table for a doublet target, writes it as JSON, and
//! assembles its generating series from the file.
//!
//!     cargo run --example table_file -- /tmp/doublet.json

use std::path::PathBuf;

use rgw_split::hurwitz::{Method, Oracle};
use rgw_split::tqft::instantiate::{doublet_table, standard_insertions};
use rgw_split::tqft::{series_assemble, InvariantTable, TargetCurve};

fn main() -> rgw_split::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("rgw-doublet-table.json"));
    let oracle = Oracle::default();
    let target = TargetCurve::doublet(1).with_marked_pairs(1);

    let profiles: Vec<_> = (1..=3)
        .flat_map(|d| standard_insertions(d).unwrap())
        .filter(|p| p.len() == 1)
        .collect();
    let table = doublet_table(&oracle, &target, &profiles, Method::Characters)?;
    table.save(&path)?;
    println!("wrote {} entries to {}", table.len(), path.display());

    let loaded = InvariantTable::load(&path)?;
    for p in &profiles {
        println!("{p}: {}", series_assemble(&loaded, p.degree(), p)?);
    }
    Ok(())
}
