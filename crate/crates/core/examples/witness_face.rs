//! A non-simplex face of Q_P read off from a passing cycle.

use poset_fano::{classify, witness_hyperplane, PolytopeVertexSet, Poset};

fn main() -> poset_fano::Result<()> {
    let v = Poset::from_cover_relations(3, &[(1, 2), (1, 3)])?;
    let hat = v.hat();
    let report = classify(&v);
    let walk = report
        .witness
        .as_ref()
        .and_then(|w| w.walk())
        .expect("V is not smooth");
    println!("walk {:?} steps {:?}", walk.elements(), walk.steps());
    println!("mu   {:?}", walk.mu_labels()?.labels());

    let face = witness_hyperplane(&hat, walk)?;
    let vertices = PolytopeVertexSet::build(&hat);
    println!("hyperplane {:?} . x = 1", face.normal);
    for &k in &face.incident {
        println!("  contains ({})", vertices.vertices()[k]);
    }
    Ok(())
}
