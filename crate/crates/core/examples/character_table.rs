//! Prints the character table of S_d computed by Murnaghan–Nakayama.
//!
//!     cargo run --example character_table -- 5

use rgw_split::characters::CharacterTable;

fn main() -> rgw_split::Result<()> {
    let d: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let table = CharacterTable::compute(d)?;
    let parts = table.partitions();
    print!("{:>12}", "ρ \\ μ");
    for mu in parts {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for rho in parts {
        print!("{:>12}", rho.to_string());
        for mu in parts {
            print!("{:>10}", table.get(rho, mu)?);
        }
        println!();
    }
    Ok(())
}
