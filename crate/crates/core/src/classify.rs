//! Combinatorial decision of Q-factoriality and smoothness of `Q_P`.
//!
//! `Q_P` fails to be simplicial exactly when the hat poset has a very special
//! cycle obeying the cycle inequalities, or a special bottom-to-top path obeying
//! the path inequality. Such a walk is reported as the witness.

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{Facet, Hull};
use crate::polytope::PolytopeVertexSet;
use crate::poset::{HatPoset, Poset};
use crate::walk::{enumerate_cycles, enumerate_special_paths, MuLabeling, Walk, WalkKind};

/// `mu(a) - mu(b) <= dist(b, a)` for every pair of walk elements with `b < a`.
fn comparable_pairs_ok(hat: &HatPoset, walk: &Walk, mu: &MuLabeling) -> bool {
    let elements = walk.elements();
    let labels = mu.labels();
    for (ia, &a) in elements.iter().enumerate() {
        for (ib, &b) in elements.iter().enumerate() {
            if hat.less(b, a) {
                let gap = labels[ia] as i64 - labels[ib] as i64;
                if gap > hat.distance_row(b)[a] as i64 {
                    return false;
                }
            }
        }
    }
    true
}

/// Distance from the bottom, with the bottom itself at 0.
pub(crate) fn depth(hat: &HatPoset, x: usize) -> i64 {
    if x == 0 {
        0
    } else {
        hat.distance_row(0)[x] as i64
    }
}

/// Distance to the top, with the top itself at 0.
pub(crate) fn co_depth(hat: &HatPoset, x: usize) -> i64 {
    if x == hat.top() {
        0
    } else {
        hat.distance_row(x)[hat.top()] as i64
    }
}

/// Both cycle inequalities: the comparable-pair bound and
/// `mu(a) - mu(b) <= dist(bottom, a) + dist(b, top)` for all ordered pairs.
pub fn cycle_satisfies_inequalities(hat: &HatPoset, cycle: &Walk, mu: &MuLabeling) -> bool {
    if !comparable_pairs_ok(hat, cycle, mu) {
        return false;
    }
    let elements = cycle.elements();
    let labels = mu.labels();
    // The pairwise bound splits: max(mu(a) - depth(a)) <= min(mu(b) + co_depth(b)).
    let lower = elements
        .iter()
        .zip(labels)
        .map(|(&a, &m)| m as i64 - depth(hat, a))
        .max()
        .unwrap();
    let upper = elements
        .iter()
        .zip(labels)
        .map(|(&b, &m)| m as i64 + co_depth(hat, b))
        .min()
        .unwrap();
    lower <= upper
}

/// The path inequality: `mu(a) - mu(b) <= dist(b, a)` whenever `b < a`.
pub fn path_satisfies_inequalities(hat: &HatPoset, path: &Walk, mu: &MuLabeling) -> bool {
    comparable_pairs_ok(hat, path, mu)
}

/// A walk passes when it certifies that `Q_P` has a non-simplex face.
pub(crate) fn walk_passes(hat: &HatPoset, walk: &Walk) -> Option<MuLabeling> {
    match walk.kind() {
        WalkKind::Cycle => {
            if !walk.is_very_special(hat) {
                return None;
            }
            let mu = walk.mu_labels().ok()?;
            cycle_satisfies_inequalities(hat, walk, &mu).then_some(mu)
        }
        WalkKind::Path => {
            let elements = walk.elements();
            if elements.first() != Some(&0)
                || elements.last() != Some(&hat.top())
                || !walk.is_special()
            {
                return None;
            }
            let mu = walk.mu_labels().ok()?;
            path_satisfies_inequalities(hat, walk, &mu).then_some(mu)
        }
    }
}

/// All passing walks in enumeration order (cycles first), up to `limit`.
pub fn find_witnesses(hat: &HatPoset, limit: Option<usize>) -> Vec<(Walk, MuLabeling)> {
    let limit = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for walk in enumerate_cycles(hat).chain(enumerate_special_paths(hat)) {
        if let Some(mu) = walk_passes(hat, &walk) {
            out.push((walk, mu));
            if out.len() >= limit {
                break;
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Combinatorial,
    Geometric,
    PureShortcut,
}

/// Evidence that `Q_P` is not simplicial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "evidence", rename_all = "lowercase")]
pub enum Witness {
    Walk {
        #[serde(flatten)]
        walk: Walk,
        mu: Vec<u32>,
    },
    Facet(Facet),
}

impl Witness {
    pub fn walk(&self) -> Option<&Walk> {
        match self {
            Witness::Walk { walk, .. } => Some(walk),
            Witness::Facet(_) => None,
        }
    }
}

impl From<(Walk, MuLabeling)> for Witness {
    fn from((walk, mu): (Walk, MuLabeling)) -> Self {
        Witness::Walk {
            walk,
            mu: mu.labels().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub d: usize,
    pub fano: bool,
    pub terminal: bool,
    pub gorenstein: bool,
    pub q_factorial: bool,
    pub smooth: bool,
    pub method: Method,
    /// Fano, terminal and Gorenstein were recomputed geometrically.
    pub verified: bool,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_witnesses: Option<Vec<Witness>>,
}

impl ClassificationReport {
    /// Fano, terminal, Gorenstein, Q-factorial and smooth, in that order.
    pub fn flags(&self) -> [bool; 5] {
        [
            self.fano,
            self.terminal,
            self.gorenstein,
            self.q_factorial,
            self.smooth,
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Recompute the Fano, terminal and Gorenstein flags with the geometric oracle.
    pub verify: bool,
    /// Report every passing walk rather than stopping at the first.
    pub all_witnesses: bool,
    /// Answer pure posets by checking for a disjoint union of chains.
    pub pure_shortcut: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            verify: false,
            all_witnesses: false,
            pure_shortcut: true,
        }
    }
}

/// Classifies `Q_P` with default options.
pub fn classify(p: &Poset) -> ClassificationReport {
    classify_with(p, &ClassifyOptions::default()).expect("no geometric work requested")
}

pub fn classify_with(p: &Poset, options: &ClassifyOptions) -> Result<ClassificationReport> {
    let hat = p.hat();
    let limit = if options.all_witnesses { None } else { Some(1) };

    let (smooth, method, witnesses) = if options.pure_shortcut && p.is_pure() {
        let smooth = p.is_disjoint_union_of_chains();
        let witnesses = if smooth && !options.all_witnesses {
            Vec::new()
        } else {
            find_witnesses(&hat, limit)
        };
        debug_assert_eq!(smooth, witnesses.is_empty());
        (smooth, Method::PureShortcut, witnesses)
    } else {
        let witnesses = find_witnesses(&hat, limit);
        (witnesses.is_empty(), Method::Combinatorial, witnesses)
    };

    let (fano, terminal, gorenstein) = if options.verify {
        let hull = Hull::new(PolytopeVertexSet::build(&hat).vertices().to_vec())?;
        (hull.is_fano()?, hull.is_terminal()?, hull.is_gorenstein())
    } else {
        (true, true, true)
    };

    let witnesses: Vec<Witness> = witnesses.into_iter().map(Witness::from).collect();
    Ok(ClassificationReport {
        d: p.d(),
        fano,
        terminal,
        gorenstein,
        q_factorial: smooth,
        smooth,
        method,
        verified: options.verify,
        witness: witnesses.first().cloned(),
        all_witnesses: options.all_witnesses.then_some(witnesses),
    })
}

/// Classifies `Q_P` from its facets alone.
pub fn classify_geometric(p: &Poset) -> Result<ClassificationReport> {
    let hull = Hull::new(PolytopeVertexSet::build(&p.hat()).vertices().to_vec())?;
    let witness = hull
        .facets()
        .iter()
        .find(|f| f.incident.len() != p.d())
        .cloned()
        .map(Witness::Facet);
    Ok(ClassificationReport {
        d: p.d(),
        fano: hull.is_fano()?,
        terminal: hull.is_terminal()?,
        gorenstein: hull.is_gorenstein(),
        q_factorial: hull.is_simplicial(),
        smooth: hull.is_smooth()?,
        method: Method::Geometric,
        verified: true,
        witness,
        all_witnesses: None,
    })
}
