#![allow(dead_code)]

use poset_fano::Poset;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Strict order relations of `p` as 0-based pairs.
fn relation_pairs(p: &Poset) -> Vec<(usize, usize)> {
    p.relations()
        .into_iter()
        .map(|(i, j)| (i - 1, j - 1))
        .collect()
}

fn code(pairs: &[(usize, usize)], perm: &[usize], n: usize) -> u64 {
    pairs
        .iter()
        .fold(0u64, |c, &(i, j)| c | 1 << (perm[i] * n + perm[j]))
}

/// Isomorphism invariant computed by minimising over all relabellings.
pub fn brute_force_code(p: &Poset, perms: &[Vec<usize>]) -> u64 {
    let pairs = relation_pairs(p);
    perms
        .iter()
        .map(|perm| code(&pairs, perm, p.d()))
        .min()
        .unwrap()
}

/// Every poset on `0..n` whose order is compatible with the natural order, so that
/// each isomorphism class appears at least once.
pub fn naturally_labelled(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let closed = chosen
            .iter()
            .all(|&(i, j)| (1..=n).all(|k| !chosen.contains(&(j, k)) || chosen.contains(&(i, k))));
        if closed {
            out.push(Poset::from_cover_relations(n, &chosen).unwrap());
        }
    }
    out
}

/// Isomorphism classes and self-dual classes on `n` elements, by brute force.
pub fn brute_force_counts(n: usize) -> (usize, usize) {
    let perms = permutations(n);
    let mut classes = std::collections::BTreeMap::new();
    for p in naturally_labelled(n) {
        classes.entry(brute_force_code(&p, &perms)).or_insert(p);
    }
    let self_dual = classes
        .iter()
        .filter(|(&c, p)| brute_force_code(&p.dual(), &perms) == c)
        .count();
    (classes.len(), self_dual)
}

/// A random poset on `d` elements with a random labelling.
pub fn random_poset<R: Rng>(rng: &mut R, d: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    Poset::from_cover_relations(d, &pairs)
        .unwrap()
        .relabel(&perm)
}

/// Random posets with up to `max_d` elements, relabelled by a random permutation.
pub fn arb_poset(max_d: usize) -> impl Strategy<Value = Poset> {
    (1..=max_d).prop_flat_map(arb_poset_of_size)
}

/// Random posets on exactly `d` elements.
pub fn arb_poset_of_size(d: usize) -> impl Strategy<Value = Poset> {
    let pairs = d * (d - 1) / 2;
    (
        proptest::collection::vec(any::<bool>(), pairs),
        Just((0..d).collect::<Vec<usize>>()).prop_shuffle(),
    )
        .prop_map(move |(bits, perm)| {
            let relations: Vec<(usize, usize)> = (1..=d)
                .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
                .zip(bits)
                .filter(|&(_, keep)| keep)
                .map(|(pair, _)| pair)
                .collect();
            Poset::from_cover_relations(d, &relations)
                .unwrap()
                .relabel(&perm)
        })
}

/// Shortest upward path in the cover graph of the hat poset, by plain BFS.
pub fn bfs_distance(hat: &poset_fano::HatPoset, from: usize, to: usize) -> Option<u32> {
    let mut seen = vec![false; hat.len()];
    let mut frontier = vec![from];
    seen[from] = true;
    let mut steps = 0;
    while !frontier.is_empty() {
        if frontier.contains(&to) {
            return Some(steps);
        }
        let mut next = Vec::new();
        for &x in &frontier {
            for &y in hat.upper_covers(x) {
                if !seen[y] {
                    seen[y] = true;
                    next.push(y);
                }
            }
        }
        frontier = next;
        steps += 1;
    }
    None
}
