//! Lattice vectors of the chain y1 < y2 next to an isolated y3.

use poset_fano::{HatPoset, PolytopeVertexSet, Poset};

fn main() -> poset_fano::Result<()> {
    let p = Poset::from_cover_relations(3, &[(1, 2)])?;
    let hat: HatPoset = p.hat();
    let set = PolytopeVertexSet::build(&hat);
    for (k, v) in set.vertices().iter().enumerate() {
        let (lo, hi) = set.edge_of_vertex(k);
        println!("edge {lo} < {hi}: ({v})");
    }
    for chain in hat.maximal_chains() {
        let sum = poset_fano::maximal_chain_vector_sum(&hat, &chain)?;
        println!("chain {chain:?} sums to ({sum})");
    }
    Ok(())
}
