//! Paths and cycles in the Hasse diagram of a hat poset, and their height labels.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::HatPoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    Path,
    Cycle,
}

/// Direction of one step along a Hasse edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn sign(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

/// A simple path or cycle in the undirected Hasse graph of a hat poset.
///
/// For cycles the closing step from the last element back to the first is
/// included in `steps`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Walk {
    kind: WalkKind,
    elements: Vec<usize>,
    steps: Vec<Step>,
}

impl Walk {
    pub fn path(hat: &HatPoset, elements: Vec<usize>) -> Result<Walk> {
        Walk::new(hat, elements, WalkKind::Path)
    }

    pub fn cycle(hat: &HatPoset, elements: Vec<usize>) -> Result<Walk> {
        Walk::new(hat, elements, WalkKind::Cycle)
    }

    pub fn new(hat: &HatPoset, elements: Vec<usize>, kind: WalkKind) -> Result<Walk> {
        let min_len = match kind {
            WalkKind::Path => 1,
            WalkKind::Cycle => 3,
        };
        if elements.len() < min_len {
            return Err(Error::InvalidWalk(format!(
                "a {kind:?} needs at least {min_len} elements"
            )));
        }
        let mut seen = vec![false; hat.len()];
        for &e in &elements {
            if e >= hat.len() {
                return Err(Error::InvalidWalk(format!("element {e} out of range")));
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidWalk(format!("element {e} repeats")));
            }
        }
        let closing = match kind {
            WalkKind::Path => None,
            WalkKind::Cycle => Some([*elements.last().unwrap(), elements[0]]),
        };
        let steps = elements
            .windows(2)
            .map(|w| [w[0], w[1]])
            .chain(closing)
            .map(|[a, b]| match hat.oriented_edge(a, b) {
                Some((lo, _)) if lo == a => Ok(Step::Up),
                Some(_) => Ok(Step::Down),
                None => Err(Error::NotAnEdge(a, b)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Walk {
            kind,
            elements,
            steps,
        })
    }

    pub fn kind(&self) -> WalkKind {
        self.kind
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.elements.contains(&element)
    }

    /// Consecutive pairs `(from, to)`, including the closing pair of a cycle.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = self.elements.windows(2).map(|w| (w[0], w[1])).collect();
        if self.kind == WalkKind::Cycle {
            pairs.push((*self.elements.last().unwrap(), self.elements[0]));
        }
        pairs
    }

    /// Equally many up and down steps.
    pub fn is_special(&self) -> bool {
        self.steps.iter().map(|s| s.sign()).sum::<i64>() == 0
    }

    /// A special cycle avoiding at least one of the bottom and the top.
    pub fn is_very_special(&self, hat: &HatPoset) -> bool {
        self.kind == WalkKind::Cycle
            && self.is_special()
            && !(self.contains(0) && self.contains(hat.top()))
    }

    /// The same cycle started at position `shift`.
    pub fn rotated(&self, shift: usize) -> Walk {
        assert_eq!(self.kind, WalkKind::Cycle);
        let mut elements = self.elements.clone();
        elements.rotate_left(shift);
        let mut steps = self.steps.clone();
        steps.rotate_left(shift);
        Walk {
            kind: self.kind,
            elements,
            steps,
        }
    }

    /// The unique height function that moves by one along each step and has minimum 0.
    pub fn mu_labels(&self) -> Result<MuLabeling> {
        let mut heights = Vec::with_capacity(self.elements.len());
        let mut h = 0i64;
        heights.push(h);
        for step in &self.steps[..self.elements.len() - 1] {
            h += step.sign();
            heights.push(h);
        }
        if self.kind == WalkKind::Cycle && h + self.steps.last().unwrap().sign() != 0 {
            return Err(Error::NotConsistent);
        }
        let min = *heights.iter().min().unwrap();
        Ok(MuLabeling {
            elements: self.elements.clone(),
            labels: heights.iter().map(|&x| (x - min) as u32).collect(),
        })
    }
}

/// Height labels of the elements of a walk, aligned with [`Walk::elements`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuLabeling {
    #[serde(skip)]
    elements: Vec<usize>,
    labels: Vec<u32>,
}

impl MuLabeling {
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label_of(&self, element: usize) -> Option<u32> {
        self.elements
            .iter()
            .position(|&e| e == element)
            .map(|k| self.labels[k])
    }

    /// `(element, label)` pairs sorted by element.
    pub fn sorted_pairs(&self) -> Vec<(usize, u32)> {
        let mut pairs: Vec<_> = self
            .elements
            .iter()
            .copied()
            .zip(self.labels.iter().copied())
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

/// Every simple cycle of the Hasse graph, once each up to rotation and reflection.
///
/// A cycle is reported starting at its smallest element, continuing to the smaller
/// of that element's two neighbours on the cycle.
pub fn enumerate_cycles(hat: &HatPoset) -> Cycles<'_> {
    Cycles {
        dfs: Dfs::new(hat, 0),
        start: 0,
    }
}

/// Every simple path from the bottom to the top with as many up as down steps.
pub fn enumerate_special_paths(hat: &HatPoset) -> SpecialPaths<'_> {
    SpecialPaths {
        dfs: Dfs::new(hat, 0),
    }
}

/// Explicit-stack depth-first search over simple paths from a fixed start.
struct Dfs<'a> {
    hat: &'a HatPoset,
    path: Vec<usize>,
    /// Index of the next neighbour to try at each depth.
    cursor: Vec<usize>,
    on_path: Vec<bool>,
    /// Running sum of step signs along `path`.
    height: i64,
}

impl<'a> Dfs<'a> {
    fn new(hat: &'a HatPoset, start: usize) -> Self {
        let mut on_path = vec![false; hat.len()];
        on_path[start] = true;
        Dfs {
            hat,
            path: vec![start],
            cursor: vec![0],
            on_path,
            height: 0,
        }
    }

    fn sign(&self, from: usize, to: usize) -> i64 {
        if self.hat.less(from, to) {
            1
        } else {
            -1
        }
    }

    /// Next candidate neighbour of the current endpoint, or `None` after
    /// backtracking when the endpoint is exhausted. Returns `Err(())` once the
    /// whole tree has been explored.
    fn next_neighbour(&mut self) -> std::result::Result<Option<usize>, ()> {
        let depth = self.path.len() - 1;
        let last = self.path[depth];
        let neighbours = self.hat.neighbours(last);
        let k = self.cursor[depth];
        if k < neighbours.len() {
            self.cursor[depth] += 1;
            return Ok(Some(neighbours[k]));
        }
        if depth == 0 {
            return Err(());
        }
        self.pop();
        Ok(None)
    }

    fn push(&mut self, w: usize) {
        let last = *self.path.last().unwrap();
        self.height += self.sign(last, w);
        self.path.push(w);
        self.cursor.push(0);
        self.on_path[w] = true;
    }

    fn pop(&mut self) {
        let w = self.path.pop().unwrap();
        self.cursor.pop();
        self.on_path[w] = false;
        let last = *self.path.last().unwrap();
        self.height -= self.sign(last, w);
    }
}

pub struct Cycles<'a> {
    dfs: Dfs<'a>,
    start: usize,
}

impl Iterator for Cycles<'_> {
    type Item = Walk;

    fn next(&mut self) -> Option<Walk> {
        let hat = self.dfs.hat;
        while self.start < hat.len() {
            loop {
                let w = match self.dfs.next_neighbour() {
                    Ok(Some(w)) => w,
                    Ok(None) => continue,
                    Err(()) => break,
                };
                let path = &self.dfs.path;
                if w == self.start {
                    if path.len() >= 3 && path[1] < *path.last().unwrap() {
                        let walk = Walk::cycle(hat, path.clone()).expect("DFS yields cycles");
                        return Some(walk);
                    }
                } else if w > self.start && !self.dfs.on_path[w] {
                    self.dfs.push(w);
                }
            }
            self.start += 1;
            if self.start < hat.len() {
                self.dfs = Dfs::new(hat, self.start);
            }
        }
        None
    }
}

pub struct SpecialPaths<'a> {
    dfs: Dfs<'a>,
}

impl Iterator for SpecialPaths<'_> {
    type Item = Walk;

    fn next(&mut self) -> Option<Walk> {
        let hat = self.dfs.hat;
        let top = hat.top();
        loop {
            let w = match self.dfs.next_neighbour() {
                Ok(Some(w)) => w,
                Ok(None) => continue,
                Err(()) => return None,
            };
            if self.dfs.on_path[w] {
                continue;
            }
            if w == top {
                let last = *self.dfs.path.last().unwrap();
                if self.dfs.height + self.dfs.sign(last, w) == 0 {
                    let mut elements = self.dfs.path.clone();
                    elements.push(top);
                    return Some(Walk::path(hat, elements).expect("DFS yields paths"));
                }
            } else {
                self.dfs.push(w);
            }
        }
    }
}
