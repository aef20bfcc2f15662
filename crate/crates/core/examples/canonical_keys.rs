//! Relabelling does not change the canonical key; duality usually does.

use poset_fano::Poset;

fn main() -> poset_fano::Result<()> {
    let v = Poset::from_cover_relations(3, &[(1, 2), (1, 3)])?;
    let relabelled = v.relabel(&[2, 0, 1]);
    println!("V            {:?} key {}", v.covers(), v.canonical_key());
    println!(
        "relabelled   {:?} key {}",
        relabelled.covers(),
        relabelled.canonical_key()
    );
    println!(
        "dual         {:?} key {}",
        v.dual().covers(),
        v.dual().canonical_key()
    );
    let (form, _) = relabelled.canonical_form();
    println!("canonical    {:?}", form.covers());
    Ok(())
}
