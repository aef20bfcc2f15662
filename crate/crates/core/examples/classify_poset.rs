//! Classify a poset given on the command line, or a few built-in ones.
//!
//!     cargo run --example classify_poset -- tests/fixtures/v.poset

use poset_fano::format::read_poset;
use poset_fano::{classify, Poset};

fn main() -> poset_fano::Result<()> {
    let posets = match std::env::args().nth(1) {
        Some(path) => vec![read_poset(path.as_ref())?],
        None => vec![
            Poset::chain(3)?,
            Poset::from_cover_relations(3, &[(1, 2), (1, 3)])?,
            Poset::from_cover_relations(4, &[(1, 2), (1, 3), (2, 4), (3, 4)])?,
        ],
    };
    for p in &posets {
        let report = classify(p);
        println!("covers {:?}", p.covers());
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    }
    Ok(())
}
