//! Isomorphism classes on four elements with their canonical keys, then written
//! to a directory as poset files.

use poset_fano::enumerate::{emit_posets, enumerate_posets, quotient_by_duality};
use poset_fano::format::to_json;

fn main() -> poset_fano::Result<()> {
    let classes = enumerate_posets(4)?;
    for p in &classes {
        println!("{}  {}", p.canonical_key(), to_json(p));
    }
    let quotient = quotient_by_duality(&classes);
    println!(
        "{} classes, {} self-dual, {} up to duality",
        quotient.isomorphism_classes,
        quotient.self_dual,
        quotient.representatives.len()
    );

    let dir = std::env::temp_dir().join("poset-fano-d4");
    let written = emit_posets(&classes, &dir)?;
    println!("wrote {written} files to {}", dir.display());
    Ok(())
}
