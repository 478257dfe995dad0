//! Replays the orientation-sign chains for a range of node counts.
//!
//!     cargo run --example sign_ledger

use rgw_split::signs::{compose, main_chain, register_paper_isos, replay_lemma_comsign};

fn main() -> rgw_split::Result<()> {
    let catalog = register_paper_isos();
    for iso in catalog.iter() {
        println!("{:<28} {} → {}", iso.name, iso.source, iso.target);
    }
    println!();

    let chain = main_chain(&catalog)?;
    for ell in 0..4 {
        let r = compose(&chain, ell)?;
        let steps: Vec<String> = r.steps.iter().map(|s| format!("{:+}", s.sign)).collect();
        println!(
            "ℓ = {ell}: main chain steps [{}] → {:+}; comsign {:+}",
            steps.join(", "),
            r.sign,
            replay_lemma_comsign(ell)
        );
    }
    Ok(())
}
