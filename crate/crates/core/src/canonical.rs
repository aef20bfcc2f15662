//! Canonical labelling of posets up to isomorphism.
//!
//! Colour refinement on the strict order followed by individualisation over the
//! first non-singleton cell. Every leaf of the search tree is a labelling; the
//! lexicographically smallest relabelled relation matrix is the canonical form.

use std::fmt;

use crate::poset::{transpose, Poset};

/// Encoding of an isomorphism class. Two posets share a key iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex string, used for file names.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Poset {
    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_form(self).1
    }

    /// The canonical relabelling of this poset together with its key.
    pub fn canonical_form(&self) -> (Poset, CanonicalKey) {
        canonical_form(self)
    }
}

fn canonical_form(p: &Poset) -> (Poset, CanonicalKey) {
    let search = Search::new(p);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let colours = search.refine(search.initial_colours());
    search.explore(colours, &mut best);
    let (code, perm) = best.expect("search tree has at least one leaf");
    let canonical = p.relabel(&perm);
    debug_assert_eq!(canonical.above_rows(), &code[..]);
    (canonical, encode(p.d(), &code))
}

fn encode(d: usize, rows: &[u64]) -> CanonicalKey {
    let width = d.div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + d * width);
    bytes.push(d as u8);
    for &row in rows {
        // Bit 0 (the relation to the first canonical element) is most significant.
        let flipped = row.reverse_bits() >> (64 - d);
        let be = flipped.to_be_bytes();
        bytes.extend_from_slice(&be[8 - width..]);
    }
    CanonicalKey(bytes)
}

struct Search<'a> {
    d: usize,
    above: &'a [u64],
    below: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(p: &'a Poset) -> Self {
        Search {
            d: p.d(),
            above: p.above_rows(),
            below: transpose(p.above_rows()),
        }
    }

    fn initial_colours(&self) -> Vec<u32> {
        let keys: Vec<Vec<u32>> = (0..self.d)
            .map(|v| vec![self.below[v].count_ones(), self.above[v].count_ones()])
            .collect();
        rank(&keys)
    }

    /// Refines to the coarsest stable ordered partition below `colours`.
    fn refine(&self, mut colours: Vec<u32>) -> Vec<u32> {
        let mut cells = count_distinct(&colours);
        loop {
            if cells == self.d {
                return colours;
            }
            let keys: Vec<Vec<u32>> = (0..self.d)
                .map(|v| {
                    let mut up = collect_colours(self.above[v], &colours);
                    let mut down = collect_colours(self.below[v], &colours);
                    up.sort_unstable();
                    down.sort_unstable();
                    let mut key = Vec::with_capacity(3 + up.len() + down.len());
                    key.push(colours[v]);
                    key.push(up.len() as u32);
                    key.extend(up);
                    key.push(u32::MAX);
                    key.extend(down);
                    key
                })
                .collect();
            let next = rank(&keys);
            let next_cells = count_distinct(&next);
            colours = next;
            if next_cells == cells {
                return colours;
            }
            cells = next_cells;
        }
    }

    fn explore(&self, colours: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
        let Some(target) = first_nontrivial_cell(&colours) else {
            let perm: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
            let code = self.relabelled_rows(&perm);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, perm));
            }
            return;
        };
        for v in 0..self.d {
            if colours[v] != target {
                continue;
            }
            let keys: Vec<Vec<u32>> = (0..self.d)
                .map(|u| vec![colours[u], u32::from(u != v)])
                .collect();
            self.explore(self.refine(rank(&keys)), best);
        }
    }

    fn relabelled_rows(&self, perm: &[usize]) -> Vec<u64> {
        let mut rows = vec![0u64; self.d];
        for i in 0..self.d {
            let mut row = self.above[i];
            while row != 0 {
                let j = row.trailing_zeros() as usize;
                row &= row - 1;
                rows[perm[i]] |= 1 << perm[j];
            }
        }
        rows
    }
}

fn collect_colours(mut bits: u64, colours: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(bits.count_ones() as usize);
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out.push(colours[j]);
    }
    out
}

/// Replaces each key by its rank among the distinct keys.
fn rank(keys: &[Vec<u32>]) -> Vec<u32> {
    let mut sorted: Vec<&Vec<u32>> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).unwrap() as u32)
        .collect()
}

fn count_distinct(colours: &[u32]) -> usize {
    let mut seen = 0u64;
    for &c in colours {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}

/// Colours are dense ranks, so at a leaf they are exactly the positions `0..d`.
fn first_nontrivial_cell(colours: &[u32]) -> Option<u32> {
    let mut counts = vec![0u32; colours.len()];
    for &c in colours {
        counts[c as usize] += 1;
    }
    counts.iter().position(|&n| n > 1).map(|c| c as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for perm in all_permutations(n - 1) {
            for pos in 0..n {
                let mut p = perm.clone();
                p.insert(pos, n - 1);
                out.push(p);
            }
        }
        out
    }

    fn isomorphic_brute_force(a: &Poset, b: &Poset) -> bool {
        a.d() == b.d()
            && all_permutations(a.d())
                .iter()
                .any(|perm| &a.relabel(perm) == b)
    }

    fn all_posets_labelled(d: usize) -> Vec<Poset> {
        let pairs: Vec<(usize, usize)> = (1..=d)
            .flat_map(|i| (1..=d).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let chosen: Vec<_> = (0..pairs.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| pairs[k])
                .collect();
            if let Ok(p) = Poset::from_cover_relations(d, &chosen) {
                if p.relations().len() == chosen.len() && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    #[test]
    fn v_poset_labelling_invariance() {
        let v = Poset::from_cover_relations(3, &[(1, 2), (1, 3)]).unwrap();
        let v_swapped = v.relabel(&[0, 2, 1]);
        assert_eq!(v.canonical_key(), v_swapped.canonical_key());
        let v_moved = Poset::from_cover_relations(3, &[(3, 1), (3, 2)]).unwrap();
        assert_eq!(v.canonical_key(), v_moved.canonical_key());
    }

    #[test]
    fn v_and_lambda_differ() {
        let v = Poset::from_cover_relations(3, &[(1, 2), (1, 3)]).unwrap();
        assert_ne!(v.canonical_key(), v.dual().canonical_key());
    }

    #[test]
    fn keys_agree_with_brute_force_isomorphism_up_to_four() {
        for d in 1..=4 {
            let labelled = all_posets_labelled(d);
            for a in &labelled {
                for b in &labelled {
                    assert_eq!(
                        a.canonical_key() == b.canonical_key(),
                        isomorphic_brute_force(a, b),
                        "{a:?} vs {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn three_element_classes() {
        let mut keys: Vec<_> = all_posets_labelled(3)
            .iter()
            .map(Poset::canonical_key)
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 5);
    }

    #[test]
    fn canonical_form_is_a_relabelling() {
        let p = Poset::from_cover_relations(5, &[(4, 1), (2, 1), (5, 3), (4, 3)]).unwrap();
        let (form, key) = p.canonical_form();
        assert!(isomorphic_brute_force(&p, &form));
        assert_eq!(form.canonical_key(), key);
        assert_eq!(form.canonical_form().0, form);
    }
}
