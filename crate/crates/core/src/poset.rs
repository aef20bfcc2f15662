//! Finite posets, their hat posets and Hasse diagrams.
//!
//! Elements of a poset `P` are numbered `1..=d`. The hat poset adds a fresh
//! bottom with index `0` and a fresh top with index `d + 1`; every index used
//! by [`HatPoset`] lives in `0..=d + 1`.

use std::collections::VecDeque;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest supported poset size. Strict order rows are stored as `u64` bitsets.
pub const MAX_ELEMENTS: usize = 64;

/// A finite poset on `{y_1, ..., y_d}`.
///
/// Both the strict order (as bitset rows) and the cover relation are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    d: usize,
    /// `above[i]` has bit `j` set iff `y_{i+1} < y_{j+1}`.
    above: Vec<u64>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds the poset generated by the relations `y_i < y_j` for `(i, j)` in `pairs`.
    ///
    /// The strict order is the transitive closure of the input; redundant pairs are
    /// absorbed and only genuine covers end up in [`Poset::covers`].
    pub fn from_cover_relations(d: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_size(d)?;
        let mut above = vec![0u64; d];
        for &(i, j) in pairs {
            for index in [i, j] {
                if index == 0 || index > d {
                    return Err(Error::IndexOutOfRange { index, d });
                }
            }
            if i == j {
                return Err(Error::CycleInInput(i, j));
            }
            above[i - 1] |= 1 << (j - 1);
        }
        close_transitively(&mut above);
        for &(i, j) in pairs {
            if above[j - 1] >> (i - 1) & 1 == 1 {
                return Err(Error::CycleInInput(i, j));
            }
        }
        Ok(Self::from_closed_rows(d, above))
    }

    /// Builds a poset from rows that are already a transitively closed strict order.
    pub(crate) fn from_closed_rows(d: usize, above: Vec<u64>) -> Self {
        debug_assert_eq!(above.len(), d);
        let below = transpose(&above);
        let mut covers = Vec::new();
        for i in 0..d {
            let mut row = above[i];
            while row != 0 {
                let j = row.trailing_zeros() as usize;
                row &= row - 1;
                if above[i] & below[j] == 0 {
                    covers.push((i + 1, j + 1));
                }
            }
        }
        Poset { d, above, covers }
    }

    /// The antichain on `d` elements.
    pub fn antichain(d: usize) -> Result<Self> {
        Self::from_cover_relations(d, &[])
    }

    /// The chain `y_1 < y_2 < ... < y_d`.
    pub fn chain(d: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..d).map(|i| (i, i + 1)).collect();
        Self::from_cover_relations(d, &pairs)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `y_i < y_j` for 1-based indices.
    pub fn less_than(&self, i: usize, j: usize) -> bool {
        assert!((1..=self.d).contains(&i) && (1..=self.d).contains(&j));
        self.above[i - 1] >> (j - 1) & 1 == 1
    }

    /// Cover pairs `(i, j)` meaning `y_j` covers `y_i`, sorted lexicographically.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// All comparable pairs `(i, j)` with `y_i < y_j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.d {
            for j in 0..self.d {
                if self.above[i] >> j & 1 == 1 {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub(crate) fn above_rows(&self) -> &[u64] {
        &self.above
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let below = transpose(&self.above);
        (0..self.d)
            .filter(|&i| below[i] == 0)
            .map(|i| i + 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.d)
            .filter(|&i| self.above[i] == 0)
            .map(|i| i + 1)
            .collect()
    }

    /// The dual poset: same elements, order reversed.
    pub fn dual(&self) -> Poset {
        Poset::from_closed_rows(self.d, transpose(&self.above))
    }

    /// Renames element `k + 1` to `perm[k] + 1`. `perm` must be a permutation of `0..d`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.d);
        let mut above = vec![0u64; self.d];
        for i in 0..self.d {
            let mut row = self.above[i];
            while row != 0 {
                let j = row.trailing_zeros() as usize;
                row &= row - 1;
                above[perm[i]] |= 1 << perm[j];
            }
        }
        Poset::from_closed_rows(self.d, above)
    }

    /// Adjoins a fresh bottom and top.
    pub fn hat(&self) -> HatPoset {
        HatPoset::new(self.clone())
    }

    /// True iff all maximal chains of the hat poset have the same length.
    pub fn is_pure(&self) -> bool {
        let hat = self.hat();
        let (shortest, longest) = hat.chain_length_bounds();
        shortest == longest
    }

    /// True iff every connected component of the Hasse diagram of `P` is a chain.
    pub fn is_disjoint_union_of_chains(&self) -> bool {
        let mut ups = vec![0usize; self.d];
        let mut downs = vec![0usize; self.d];
        for &(i, j) in &self.covers {
            ups[i - 1] += 1;
            downs[j - 1] += 1;
        }
        ups.iter().zip(&downs).all(|(&u, &w)| u <= 1 && w <= 1)
    }
}

fn check_size(d: usize) -> Result<()> {
    if d == 0 || d > MAX_ELEMENTS {
        Err(Error::UnsupportedSize(d))
    } else {
        Ok(())
    }
}

fn close_transitively(rows: &mut [u64]) {
    let n = rows.len();
    for k in 0..n {
        let row_k = rows[k];
        for i in 0..n {
            if rows[i] >> k & 1 == 1 {
                rows[i] |= row_k;
            }
        }
    }
}

pub(crate) fn transpose(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let mut out = vec![0u64; n];
    for (i, &row) in rows.iter().enumerate() {
        let mut r = row;
        while r != 0 {
            let j = r.trailing_zeros() as usize;
            r &= r - 1;
            out[j] |= 1 << i;
        }
    }
    out
}

/// `P` with an adjoined bottom `0` and top `d + 1`, together with its Hasse diagram.
#[derive(Clone, Debug)]
pub struct HatPoset {
    base: Poset,
    /// `above[i]` has bit `j` set iff `i < j` in the hat poset.
    above: Vec<u128>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    neighbours: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    distances: Vec<OnceLock<Vec<u32>>>,
}

impl HatPoset {
    fn new(base: Poset) -> Self {
        let d = base.d;
        let n = d + 2;
        let top = d + 1;
        let mut above = vec![0u128; n];
        above[0] = ((1u128 << n) - 1) & !1;
        for i in 0..d {
            above[i + 1] = ((base.above[i] as u128) << 1) | (1u128 << top);
        }

        let mut edges = Vec::new();
        for j in base.minimal_elements() {
            edges.push((0, j));
        }
        edges.extend_from_slice(&base.covers);
        for i in base.maximal_elements() {
            edges.push((i, top));
        }
        edges.sort_unstable();

        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        let mut neighbours = vec![Vec::new(); n];
        for &(lo, hi) in &edges {
            upper_covers[lo].push(hi);
            lower_covers[hi].push(lo);
            neighbours[lo].push(hi);
            neighbours[hi].push(lo);
        }
        for list in upper_covers
            .iter_mut()
            .chain(lower_covers.iter_mut())
            .chain(neighbours.iter_mut())
        {
            list.sort_unstable();
        }

        HatPoset {
            base,
            above,
            upper_covers,
            lower_covers,
            neighbours,
            edges,
            distances: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn d(&self) -> usize {
        self.base.d
    }

    /// Index of the adjoined top element.
    pub fn top(&self) -> usize {
        self.base.d + 1
    }

    /// Number of elements of the hat poset, `d + 2`.
    pub fn len(&self) -> usize {
        self.base.d + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Strict order of the hat poset.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.above[i] >> j & 1 == 1
    }

    /// Hasse edges as `(lower, upper)` pairs, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Returns the edge `{i, j}` oriented as `(lower, upper)`, if it is a Hasse edge.
    pub fn oriented_edge(&self, i: usize, j: usize) -> Option<(usize, usize)> {
        let (lo, hi) = if i < self.len() && j < self.len() && self.less(i, j) {
            (i, j)
        } else if i < self.len() && j < self.len() && self.less(j, i) {
            (j, i)
        } else {
            return None;
        };
        self.upper_covers[lo]
            .binary_search(&hi)
            .ok()
            .map(|_| (lo, hi))
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.oriented_edge(i, j).is_some()
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    /// Neighbours of `i` in the undirected Hasse graph, ascending.
    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.neighbours[i]
    }

    /// Length of a shortest saturated chain from `y` up to `z`.
    pub fn dist(&self, y: usize, z: usize) -> Result<u32> {
        if y >= self.len() || z >= self.len() || !self.less(y, z) {
            return Err(Error::NotComparable(y, z));
        }
        Ok(self.distance_row(y)[z])
    }

    /// Upward BFS distances from `y`; unreachable entries are `u32::MAX`.
    pub(crate) fn distance_row(&self, y: usize) -> &[u32] {
        self.distances[y].get_or_init(|| {
            let mut dist = vec![u32::MAX; self.len()];
            dist[y] = 0;
            let mut queue = VecDeque::from([y]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.upper_covers[v] {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
    }

    /// All saturated chains from the bottom to the top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![0];
        self.extend_chains(&mut stack, &mut out);
        out
    }

    fn extend_chains(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *stack.last().unwrap();
        if last == self.top() {
            out.push(stack.clone());
            return;
        }
        for &next in &self.upper_covers[last] {
            stack.push(next);
            self.extend_chains(stack, out);
            stack.pop();
        }
    }

    /// Checks that `chain` runs from the bottom to the top along Hasse edges.
    pub fn is_maximal_chain(&self, chain: &[usize]) -> bool {
        chain.first() == Some(&0)
            && chain.last() == Some(&self.top())
            && chain
                .windows(2)
                .all(|w| self.upper_covers[w[0]].binary_search(&w[1]).is_ok())
    }

    /// Shortest and longest maximal chain lengths, by dynamic programming over covers.
    pub(crate) fn chain_length_bounds(&self) -> (u32, u32) {
        let order = self.linear_extension();
        let mut shortest = vec![u32::MAX; self.len()];
        let mut longest = vec![0u32; self.len()];
        shortest[0] = 0;
        for &v in &order {
            for &w in &self.upper_covers[v] {
                shortest[w] = shortest[w].min(shortest[v] + 1);
                longest[w] = longest[w].max(longest[v] + 1);
            }
        }
        (shortest[self.top()], longest[self.top()])
    }

    /// Elements sorted so that every element precedes everything above it.
    pub(crate) fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.above[i].count_ones()));
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v_poset() -> Poset {
        Poset::from_cover_relations(3, &[(1, 2), (1, 3)]).unwrap()
    }

    fn diamond() -> Poset {
        Poset::from_cover_relations(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
    }

    fn example_poset() -> Poset {
        Poset::from_cover_relations(3, &[(1, 2)]).unwrap()
    }

    #[test]
    fn from_cover_relations_examples() {
        let p = example_poset();
        assert!(p.less_than(1, 2));
        assert!(!p.less_than(1, 3) && !p.less_than(3, 1) && !p.less_than(2, 3));
        assert_eq!(p.covers(), &[(1, 2)]);

        let single = Poset::from_cover_relations(1, &[]).unwrap();
        assert_eq!(single.d(), 1);
        assert!(single.covers().is_empty());

        let chain = Poset::from_cover_relations(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(chain.covers(), &[(1, 2), (2, 3)]);
        assert!(chain.less_than(1, 3));
    }

    #[test]
    fn from_cover_relations_errors() {
        assert_eq!(
            Poset::from_cover_relations(3, &[(1, 2), (2, 3), (3, 1)]),
            Err(Error::CycleInInput(1, 2))
        );
        assert_eq!(
            Poset::from_cover_relations(2, &[(2, 2)]),
            Err(Error::CycleInInput(2, 2))
        );
        assert_eq!(
            Poset::from_cover_relations(2, &[(1, 3)]),
            Err(Error::IndexOutOfRange { index: 3, d: 2 })
        );
        assert_eq!(Poset::antichain(0), Err(Error::UnsupportedSize(0)));
        assert_eq!(Poset::antichain(65), Err(Error::UnsupportedSize(65)));
        assert!(Poset::chain(64).is_ok());
    }

    #[test]
    fn hat_edges() {
        assert_eq!(
            Poset::chain(3).unwrap().hat().edges(),
            &[(0, 1), (1, 2), (2, 3), (3, 4)]
        );
        assert_eq!(
            example_poset().hat().edges(),
            &[(0, 1), (0, 3), (1, 2), (2, 4), (3, 4)]
        );
        assert_eq!(
            Poset::antichain(2).unwrap().hat().edges(),
            &[(0, 1), (0, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn hat_edge_count_formula() {
        for p in [v_poset(), diamond(), example_poset()] {
            let n = p.covers().len() + p.minimal_elements().len() + p.maximal_elements().len();
            assert_eq!(p.hat().edges().len(), n);
        }
    }

    #[test]
    fn oriented_edges() {
        let hat = v_poset().hat();
        assert_eq!(hat.oriented_edge(2, 1), Some((1, 2)));
        assert_eq!(hat.oriented_edge(4, 3), Some((3, 4)));
        assert_eq!(hat.oriented_edge(0, 4), None);
        assert_eq!(hat.oriented_edge(2, 3), None);
        assert_eq!(hat.oriented_edge(0, 9), None);
    }

    #[test]
    fn distances() {
        let hat = v_poset().hat();
        assert_eq!(hat.dist(1, 2), Ok(1));
        assert_eq!(hat.dist(0, 4), Ok(3));
        assert_eq!(hat.dist(2, 3), Err(Error::NotComparable(2, 3)));
        assert_eq!(hat.dist(2, 1), Err(Error::NotComparable(2, 1)));
        assert_eq!(hat.dist(1, 1), Err(Error::NotComparable(1, 1)));

        let hat = diamond().hat();
        assert_eq!(hat.dist(1, 4), Ok(2));

        // Shortest, not longest: 0 < 3 < 4 beside 0 < 1 < 2 < 4.
        let p = Poset::from_cover_relations(4, &[(1, 2), (2, 4), (3, 4)]).unwrap();
        assert_eq!(p.hat().dist(0, 4), Ok(2));
    }

    #[test]
    fn maximal_chains_examples() {
        assert_eq!(
            Poset::chain(3).unwrap().hat().maximal_chains(),
            vec![vec![0, 1, 2, 3, 4]]
        );
        assert_eq!(
            example_poset().hat().maximal_chains(),
            vec![vec![0, 1, 2, 4], vec![0, 3, 4]]
        );
        let chains = diamond().hat().maximal_chains();
        assert_eq!(chains.len(), 2);
        assert!(chains.iter().all(|c| c.len() == 5));
    }

    #[test]
    fn purity() {
        assert!(Poset::chain(3).unwrap().is_pure());
        assert!(!example_poset().is_pure());
        assert!(diamond().is_pure());
        assert!(Poset::antichain(4).unwrap().is_pure());
    }

    #[test]
    fn disjoint_union_of_chains() {
        assert!(Poset::antichain(3).unwrap().is_disjoint_union_of_chains());
        assert!(!v_poset().is_disjoint_union_of_chains());
        assert!(example_poset().is_disjoint_union_of_chains());
        assert!(!diamond().is_disjoint_union_of_chains());
    }

    #[test]
    fn duality() {
        let a = Poset::antichain(3).unwrap();
        assert_eq!(a.dual(), a);
        let lambda = v_poset().dual();
        assert_eq!(lambda.covers(), &[(2, 1), (3, 1)]);
        let chain = Poset::chain(3).unwrap();
        assert_eq!(chain.dual().relabel(&[2, 1, 0]), chain);
        assert_eq!(v_poset().dual().dual(), v_poset());
    }
}
