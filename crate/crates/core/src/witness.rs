//! Supporting hyperplanes certifying that a passing walk spans a non-simplex face.
//!
//! Coefficients on the walk are `a - mu(x)` for a suitable integer `a`; every other
//! element takes the best value forced by its comparable walk elements and the
//! distance function, or `0` when nothing constrains it.

use crate::classify::{co_depth, depth, walk_passes};
use crate::error::{Error, Result};
use crate::geometry::Facet;
use crate::polytope::PolytopeVertexSet;
use crate::poset::HatPoset;
use crate::walk::Walk;

/// A hyperplane `normal . x = 1` supporting `Q_P` whose face contains `rho` of
/// every edge of `walk`. `incident` lists vertex positions in
/// [`PolytopeVertexSet::build`] order.
///
/// Among admissible choices of the walk offset the one with the most incident
/// vertices is used (smallest offset on ties).
pub fn witness_hyperplane(hat: &HatPoset, walk: &Walk) -> Result<Facet> {
    let mu = walk_passes(hat, walk).ok_or(Error::WalkNotEligible)?;
    let elements = walk.elements();
    let labels: Vec<i64> = mu.labels().iter().map(|&m| m as i64).collect();
    let top = hat.top();

    let pinned = elements
        .iter()
        .position(|&x| x == 0)
        .or_else(|| elements.iter().position(|&x| x == top))
        .map(|k| labels[k]);
    let candidates: Vec<i64> = match pinned {
        Some(a) => vec![a],
        None => {
            let lower = elements
                .iter()
                .zip(&labels)
                .map(|(&x, &m)| m - depth(hat, x))
                .max()
                .unwrap();
            let upper = elements
                .iter()
                .zip(&labels)
                .map(|(&x, &m)| m + co_depth(hat, x))
                .min()
                .unwrap();
            (lower..=upper).collect()
        }
    };

    let vertices = PolytopeVertexSet::build(hat);
    let mut best: Option<Facet> = None;
    for a in candidates {
        let normal = coefficients(hat, elements, &labels, a);
        let values: Vec<i64> = vertices.vertices().iter().map(|v| v.dot(&normal)).collect();
        if values.iter().any(|&v| v > 1) {
            continue;
        }
        let incident: Vec<usize> = (0..values.len()).filter(|&k| values[k] == 1).collect();
        if best
            .as_ref()
            .is_none_or(|b| incident.len() > b.incident.len())
        {
            best = Some(Facet {
                normal,
                offset: 1,
                incident,
            });
        }
    }
    let face = best.ok_or(Error::NotSupporting)?;
    let on_face = walk.edge_pairs().iter().all(|&(x, y)| {
        let k = vertices
            .position_of_edge(x, y)
            .expect("walk steps are edges");
        face.incident.contains(&k)
    });
    if on_face {
        Ok(face)
    } else {
        Err(Error::NotSupporting)
    }
}

/// Coefficients `a_1..a_d` for walk offset `a`.
fn coefficients(hat: &HatPoset, elements: &[usize], labels: &[i64], a: i64) -> Vec<i64> {
    let top = hat.top();
    let mut coef = vec![0i64; hat.len()];
    let mut on_walk = vec![false; hat.len()];
    for (&x, &m) in elements.iter().zip(labels) {
        coef[x] = a - m;
        on_walk[x] = true;
    }
    for x in 1..top {
        if on_walk[x] {
            continue;
        }
        let mut from_below = 0;
        let mut from_above = 0;
        for &w in elements {
            if hat.less(w, x) {
                from_below = from_below.max(coef[w] - hat.distance_row(w)[x] as i64);
            } else if hat.less(x, w) {
                from_above = from_above.min(coef[w] + hat.distance_row(x)[w] as i64);
            }
        }
        coef[x] = if from_below != 0 {
            from_below
        } else {
            from_above
        };
    }
    coef[1..top].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::poset::Poset;

    fn check_support(hat: &HatPoset, walk: &Walk) -> Facet {
        let face = witness_hyperplane(hat, walk).unwrap();
        let vertices = PolytopeVertexSet::build(hat);
        for (k, v) in vertices.vertices().iter().enumerate() {
            let value = v.dot(&face.normal);
            assert!(value <= 1);
            assert_eq!(value == 1, face.incident.contains(&k));
        }
        // Affinely dependent face vertices: the face is not a simplex.
        let rows: Vec<Vec<i64>> = face
            .incident
            .iter()
            .map(|&k| vertices.vertices()[k].coords().to_vec())
            .collect();
        assert!(rank(&rows) < rows.len());
        face
    }

    #[test]
    fn diamond_witness() {
        let hat = Poset::from_cover_relations(4, &[(1, 2), (1, 3), (2, 4), (3, 4)])
            .unwrap()
            .hat();
        let c = Walk::cycle(&hat, vec![1, 2, 4, 3]).unwrap();
        let face = check_support(&hat, &c);
        assert!(face.incident.len() > 4);
    }

    #[test]
    fn v_witness() {
        let hat = Poset::from_cover_relations(3, &[(1, 2), (1, 3)])
            .unwrap()
            .hat();
        let c = Walk::cycle(&hat, vec![1, 2, 4, 3]).unwrap();
        let face = check_support(&hat, &c);
        let vertices = PolytopeVertexSet::build(&hat);
        for (x, y) in [(1, 2), (2, 4), (3, 4), (1, 3)] {
            assert!(face
                .incident
                .contains(&vertices.position_of_edge(x, y).unwrap()));
        }
    }

    #[test]
    fn ineligible_walks() {
        let hat = Poset::chain(3).unwrap().hat();
        let path = Walk::path(&hat, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(witness_hyperplane(&hat, &path), Err(Error::WalkNotEligible));
        let anti = Poset::antichain(2).unwrap().hat();
        let c = Walk::cycle(&anti, vec![0, 1, 3, 2]).unwrap();
        assert_eq!(witness_hyperplane(&anti, &c), Err(Error::WalkNotEligible));
    }

    #[test]
    fn special_path_witness() {
        let hat = Poset::from_cover_relations(7, &[(1, 2), (3, 2), (4, 3), (5, 4), (6, 5), (6, 7)])
            .unwrap()
            .hat();
        let path = Walk::path(&hat, vec![0, 1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        check_support(&hat, &path);
    }
}
