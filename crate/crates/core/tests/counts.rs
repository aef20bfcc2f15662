mod common;

use common::permutations;
use poset_fano::enumerate::{build_table, enumerate_levels, quotient_by_duality};
use poset_fano::linalg::determinant;
use poset_fano::{Hull, PolytopeVertexSet, Poset};
use std::collections::BTreeSet;

fn geometric_smooth_count(classes: &[Poset]) -> usize {
    quotient_by_duality(classes)
        .representatives
        .iter()
        .filter(|p| {
            let set = PolytopeVertexSet::build(&p.hat());
            Hull::new(set.vertices().to_vec())
                .unwrap()
                .is_smooth()
                .unwrap()
        })
        .count()
}

#[test]
fn table_is_independent_of_worker_count() {
    assert_eq!(
        build_table(6, Some(1)).unwrap(),
        build_table(6, Some(3)).unwrap()
    );
}

#[test]
fn smooth_column_matches_geometry_up_to_six() {
    let rows = build_table(6, None).unwrap();
    for (row, classes) in rows.iter().zip(enumerate_levels(6).unwrap()) {
        assert_eq!(
            row.smooth_count,
            geometric_smooth_count(&classes),
            "d = {}",
            row.d
        );
    }
}

/// Unimodular map sending `Q_a` onto `Q_b`, if one arises from an isomorphism of the
/// Hasse diagrams with bottom and top glued into a single node.
fn glued_isomorphism(a: &Poset, b: &Poset) -> Option<Vec<Vec<i64>>> {
    let d = a.d();
    let glue = |x: usize, top: usize| if x == top { 0 } else { x };
    let arcs = |p: &Poset| -> BTreeSet<(usize, usize)> {
        let hat = p.hat();
        hat.edges()
            .iter()
            .map(|&(lo, hi)| (glue(lo, hat.top()), glue(hi, hat.top())))
            .collect()
    };
    let (arcs_a, arcs_b) = (arcs(a), arcs(b));
    for sigma in permutations(d + 1) {
        for reverse in [false, true] {
            let image: BTreeSet<(usize, usize)> = arcs_a
                .iter()
                .map(|&(x, y)| {
                    if reverse {
                        (sigma[y], sigma[x])
                    } else {
                        (sigma[x], sigma[y])
                    }
                })
                .collect();
            if image != arcs_b {
                continue;
            }
            // Column v is f_{sigma(v)} - f_{sigma(0)}, with f_0 = 0; negated when reversed.
            let sign = if reverse { -1 } else { 1 };
            let mut m = vec![vec![0i64; d]; d];
            for v in 1..=d {
                if sigma[v] != 0 {
                    m[sigma[v] - 1][v - 1] += sign;
                }
                if sigma[0] != 0 {
                    m[sigma[0] - 1][v - 1] -= sign;
                }
            }
            return Some(m);
        }
    }
    None
}

fn apply(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Two smooth posets on six elements, neither isomorphic nor dual to each other,
/// whose polytopes are lattice equivalent.
#[test]
fn distinct_posets_can_share_a_polytope() {
    let a = Poset::from_cover_relations(6, &[(1, 5), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
    let b =
        Poset::from_cover_relations(6, &[(1, 2), (1, 3), (2, 6), (3, 4), (4, 5), (5, 6)]).unwrap();
    assert_ne!(a.canonical_key(), b.canonical_key());
    assert_ne!(a.canonical_key(), b.dual().canonical_key());

    let m = glued_isomorphism(&a, &b).expect("glued diagrams are isomorphic");
    assert_eq!(determinant(&m).unwrap().abs(), 1);
    let image: BTreeSet<Vec<i64>> = PolytopeVertexSet::build(&a.hat())
        .vertices()
        .iter()
        .map(|v| apply(&m, v.coords()))
        .collect();
    let target: BTreeSet<Vec<i64>> = PolytopeVertexSet::build(&b.hat())
        .vertices()
        .iter()
        .map(|v| v.coords().to_vec())
        .collect();
    assert_eq!(image, target);
}

/// Smooth polytopes on six elements counted up to lattice equivalence of the
/// glued diagrams.
#[test]
fn smooth_polytopes_up_to_equivalence_at_six() {
    let classes = enumerate_levels(6).unwrap().pop().unwrap();
    let smooth: Vec<Poset> = quotient_by_duality(&classes)
        .representatives
        .into_iter()
        .filter(|p| poset_fano::classify(p).smooth)
        .collect();
    let mut distinct: Vec<&Poset> = Vec::new();
    for p in &smooth {
        if distinct.iter().all(|q| glued_isomorphism(q, p).is_none()) {
            distinct.push(p);
        }
    }
    assert_eq!(smooth.len(), 32);
    assert_eq!(distinct.len(), 29);
}
