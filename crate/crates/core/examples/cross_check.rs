//! Compare the combinatorial classifier with facet enumeration on every poset of a
//! given size (default 5).

use poset_fano::enumerate::enumerate_posets;
use poset_fano::{classify, classify_geometric};

fn main() -> poset_fano::Result<()> {
    let d = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let posets = enumerate_posets(d)?;
    let mut disagreements = 0;
    for p in &posets {
        let fast = classify(p);
        let slow = classify_geometric(p)?;
        if (fast.q_factorial, fast.smooth) != (slow.q_factorial, slow.smooth) {
            disagreements += 1;
            println!("disagreement on {:?}", p.covers());
        }
    }
    println!(
        "d = {d}: {} posets, {disagreements} disagreements",
        posets.len()
    );
    Ok(())
}
