mod common;

use std::collections::BTreeSet;

use common::arb_poset;
use poset_fano::enumerate::enumerate_levels;
use poset_fano::{maximal_chain_vector_sum, rho, HatPoset, Hull, LatticeVector, PolytopeVertexSet};
use proptest::prelude::*;

/// Number of maximal chains through each edge, keyed by the edge.
fn chain_counts(hat: &HatPoset) -> Vec<((usize, usize), i64)> {
    let chains = hat.maximal_chains();
    hat.edges()
        .iter()
        .map(|&(lo, hi)| {
            let count = chains
                .iter()
                .filter(|c| c.windows(2).any(|w| w == [lo, hi]))
                .count();
            ((lo, hi), count as i64)
        })
        .collect()
}

fn weighted_sum(hat: &HatPoset) -> LatticeVector {
    chain_counts(hat)
        .into_iter()
        .fold(LatticeVector::zero(hat.d()), |acc, ((lo, hi), c)| {
            &acc + &rho(hat, lo, hi).unwrap().scaled(c)
        })
}

#[test]
fn rho_is_injective_up_to_six() {
    for level in enumerate_levels(6).unwrap() {
        for p in level {
            let set = PolytopeVertexSet::build(&p.hat());
            let distinct: BTreeSet<&[i64]> = set.vertices().iter().map(|v| v.coords()).collect();
            assert_eq!(distinct.len(), set.len());
        }
    }
}

#[test]
fn chain_sums_vanish_up_to_six() {
    for level in enumerate_levels(6).unwrap() {
        for p in level {
            let hat = p.hat();
            for chain in hat.maximal_chains() {
                assert!(maximal_chain_vector_sum(&hat, &chain).unwrap().is_zero());
            }
            assert!(weighted_sum(&hat).is_zero());
        }
    }
}

#[test]
fn hull_vertices_are_all_rho_vectors_up_to_five() {
    for level in enumerate_levels(5).unwrap() {
        for p in level {
            let set = PolytopeVertexSet::build(&p.hat());
            let hull = Hull::new(set.vertices().to_vec()).unwrap();
            assert_eq!(hull.vertex_positions(), (0..set.len()).collect::<Vec<_>>());
        }
    }
}

proptest! {
    #[test]
    fn maximal_chains_sum_to_zero(p in arb_poset(8)) {
        let hat = p.hat();
        for chain in hat.maximal_chains() {
            prop_assert!(maximal_chain_vector_sum(&hat, &chain).unwrap().is_zero());
        }
    }

    #[test]
    fn weighted_edge_sum_is_zero(p in arb_poset(8)) {
        prop_assert!(weighted_sum(&p.hat()).is_zero());
    }

    #[test]
    fn rho_vectors_lie_in_the_cube(p in arb_poset(8)) {
        let set = PolytopeVertexSet::build(&p.hat());
        for v in set.vertices() {
            prop_assert!(v.coords().iter().all(|c| (-1..=1).contains(c)));
            let nonzero = v.coords().iter().filter(|&&c| c != 0).count();
            prop_assert!(nonzero == 1 || nonzero == 2);
        }
    }
}
