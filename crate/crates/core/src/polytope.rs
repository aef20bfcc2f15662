//! The lattice polytope `Q_P`: one vertex per Hasse edge of the hat poset.

use std::fmt;
use std::ops::{Add, Index};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::HatPoset;

/// An integer vector in `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticeVector(coords)
    }

    pub fn zero(d: usize) -> Self {
        LatticeVector(vec![0; d])
    }

    /// The `i`-th unit vector, 1-based.
    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = vec![0; d];
        v[i - 1] = 1;
        LatticeVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &[i64]) -> i64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, factor: i64) -> Self {
        LatticeVector(self.0.iter().map(|c| c * factor).collect())
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(coords: Vec<i64>) -> Self {
        LatticeVector(coords)
    }
}

impl Index<usize> for LatticeVector {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;

    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.dim(), rhs.dim());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LatticeVector {
    /// Comma-separated coordinates, e.g. `1,-1,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// `rho({y_i, y_j})` for a Hasse edge of the hat poset, in either orientation.
///
/// With `y_i < y_j`: `e_i` if `y_j` is the top, `-e_j` if `y_i` is the bottom,
/// and `e_i - e_j` otherwise.
pub fn rho(hat: &HatPoset, i: usize, j: usize) -> Result<LatticeVector> {
    let (lo, hi) = hat.oriented_edge(i, j).ok_or(Error::NotAnEdge(i, j))?;
    Ok(rho_oriented(hat.d(), lo, hi))
}

pub(crate) fn rho_oriented(d: usize, lo: usize, hi: usize) -> LatticeVector {
    let mut v = vec![0; d];
    if lo != 0 {
        v[lo - 1] += 1;
    }
    if hi != d + 1 {
        v[hi - 1] -= 1;
    }
    LatticeVector(v)
}

/// Vertex set of `Q_P`, one vertex per Hasse edge in sorted edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolytopeVertexSet {
    d: usize,
    vertices: Vec<LatticeVector>,
    edges: Vec<(usize, usize)>,
}

impl PolytopeVertexSet {
    pub fn build(hat: &HatPoset) -> Self {
        let d = hat.d();
        let edges = hat.edges().to_vec();
        let vertices = edges
            .iter()
            .map(|&(lo, hi)| rho_oriented(d, lo, hi))
            .collect();
        PolytopeVertexSet { d, vertices, edges }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The Hasse edge `(lower, upper)` that produced vertex `k`.
    pub fn edge_of_vertex(&self, k: usize) -> (usize, usize) {
        self.edges[k]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of the vertex produced by the edge `{i, j}`.
    pub fn position_of_edge(&self, i: usize, j: usize) -> Option<usize> {
        self.edges
            .binary_search(&(i, j))
            .or_else(|_| self.edges.binary_search(&(j, i)))
            .ok()
    }
}

/// Sum of `rho` over the consecutive edges of a maximal chain. Always zero.
pub fn maximal_chain_vector_sum(hat: &HatPoset, chain: &[usize]) -> Result<LatticeVector> {
    if !hat.is_maximal_chain(chain) {
        return Err(Error::NotAMaximalChain);
    }
    Ok(chain
        .windows(2)
        .map(|w| rho_oriented(hat.d(), w[0], w[1]))
        .fold(LatticeVector::zero(hat.d()), |acc, v| &acc + &v))
}
