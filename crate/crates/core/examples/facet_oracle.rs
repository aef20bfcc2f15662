//! Exact facet enumeration and the geometric flags for the diamond.

use poset_fano::{Hull, PolytopeVertexSet, Poset};

fn main() -> poset_fano::Result<()> {
    let diamond = Poset::from_cover_relations(4, &[(1, 2), (1, 3), (2, 4), (3, 4)])?;
    let hull = Hull::new(PolytopeVertexSet::build(&diamond.hat()).vertices().to_vec())?;
    for f in hull.facets() {
        println!(
            "{:?} . x = {}  through {:?}",
            f.normal, f.offset, f.incident
        );
    }
    println!("fano       {}", hull.is_fano()?);
    println!("terminal   {}", hull.is_terminal()?);
    println!("gorenstein {}", hull.is_gorenstein());
    println!("simplicial {}", hull.is_simplicial());
    println!("smooth     {}", hull.is_smooth()?);
    Ok(())
}
