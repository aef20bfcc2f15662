//! Exact facet enumeration and lattice-point tests for full-dimensional point sets.
//!
//! This is the geometric oracle: it knows nothing about posets. Facets are found
//! by brute force over `d`-subsets of the input, so it is meant for `d <= 8`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{determinant, gcd, kernel_vector, rank};
use crate::polytope::LatticeVector;

/// Lattice scans larger than this are refused.
pub const MAX_LATTICE_SCAN: u128 = 50_000_000;

/// A facet `normal . x <= offset` with equality on the facet.
///
/// `normal` is primitive and `offset > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
    /// Positions (into the input point list) of the points lying on the facet.
    pub incident: Vec<usize>,
}

impl Facet {
    pub fn value(&self, x: &[i64]) -> i64 {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// Primitive integer form of the hyperplane through `points`, or `None` if they
/// are affinely dependent. The sign is chosen so that the offset is non-negative
/// (for a hyperplane through the origin, the first non-zero coefficient is positive).
pub fn hyperplane_through(points: &[&LatticeVector]) -> Result<Option<(Vec<i64>, i64)>> {
    let d = points.len();
    let rows: Vec<Vec<i64>> = points.iter().map(|p| p.coords().to_vec()).collect();
    let det = determinant(&rows)?;
    if det != 0 {
        // Cramer: normal_i = det(rows with column i replaced by ones), offset = det.
        let mut normal = Vec::with_capacity(d);
        for i in 0..d {
            let mut m = rows.clone();
            for row in &mut m {
                row[i] = 1;
            }
            normal.push(determinant(&m)?);
        }
        return Ok(Some(normalise(normal, det)));
    }
    Ok(hyperplane_by_kernel(&rows))
}

/// Kernel route: `(a, c)` with `a . p - c = 0` for every row `p`.
pub(crate) fn hyperplane_by_kernel(rows: &[Vec<i64>]) -> Option<(Vec<i64>, i64)> {
    let d = rows.first()?.len();
    let augmented: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(-1);
            r
        })
        .collect();
    let kernel = kernel_vector(&augmented)?;
    // Clear denominators.
    let mut lcm = num_bigint::BigInt::from(1);
    for x in &kernel {
        lcm = num_integer::Integer::lcm(&lcm, x.denominator());
    }
    let scaled: Vec<i64> = kernel
        .iter()
        .map(|x| {
            let v = x.numerator() * (&lcm / x.denominator());
            i64::try_from(v).ok()
        })
        .collect::<Option<_>>()?;
    Some(normalise(scaled[..d].to_vec(), scaled[d]))
}

fn normalise(mut normal: Vec<i64>, mut offset: i64) -> (Vec<i64>, i64) {
    let g = normal.iter().fold(offset, |g, &x| gcd(g, x));
    if g > 1 {
        normal.iter_mut().for_each(|x| *x /= g);
        offset /= g;
    }
    let flip = offset < 0 || (offset == 0 && normal.iter().find(|&&x| x != 0) < Some(&0));
    if flip {
        normal.iter_mut().for_each(|x| *x = -*x);
        offset = -offset;
    }
    (normal, offset)
}

fn check_points(points: &[LatticeVector]) -> Result<usize> {
    let d = points.first().ok_or(Error::DegenerateInput)?.dim();
    if d == 0 || points.iter().any(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch);
    }
    let base = &points[0];
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(base.coords())
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    if diffs.is_empty() || rank(&diffs) < d {
        return Err(Error::DegenerateInput);
    }
    Ok(d)
}

struct FacetScan {
    facets: Vec<Facet>,
    /// Some supporting hyperplane separates the origin from the polytope.
    origin_outside: bool,
}

fn scan_facets(points: &[LatticeVector]) -> Result<FacetScan> {
    let d = check_points(points)?;
    let n = points.len();
    let mut found = BTreeSet::new();
    let mut origin_outside = false;
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        let chosen: Vec<&LatticeVector> = subset.iter().map(|&k| &points[k]).collect();
        if let Some((normal, offset)) = hyperplane_through(&chosen)? {
            let values: Vec<i64> = points.iter().map(|p| p.dot(&normal)).collect();
            let below = values.iter().all(|&v| v <= offset);
            let above = values.iter().all(|&v| v >= offset);
            if offset == 0 {
                if below || above {
                    return Err(Error::OriginOnHyperplane);
                }
            } else if below {
                found.insert((normal, offset));
            } else if above {
                origin_outside = true;
            }
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    let facets = found
        .into_iter()
        .map(|(normal, offset)| {
            let incident = (0..n)
                .filter(|&k| points[k].dot(&normal) == offset)
                .collect();
            Facet {
                normal,
                offset,
                incident,
            }
        })
        .collect();
    Ok(FacetScan {
        facets,
        origin_outside,
    })
}

/// Advances `subset` to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every facet of the convex hull of `points` whose half-space strictly contains the
/// origin, each exactly once, sorted by `(normal, offset)`.
pub fn enumerate_facets(points: &[LatticeVector]) -> Result<Vec<Facet>> {
    Ok(scan_facets(points)?.facets)
}

/// `true` iff every facet lies on a hyperplane `a . x = 1` with `a` integral.
pub fn is_gorenstein(facets: &[Facet]) -> bool {
    facets.iter().all(|f| f.offset == 1)
}

/// `true` iff every facet has exactly `d` incident points.
pub fn is_simplicial(facets: &[Facet]) -> bool {
    facets.iter().all(|f| f.incident.len() == f.normal.len())
}

/// Convex hull of a full-dimensional lattice point set with its facets.
#[derive(Clone, Debug)]
pub struct Hull {
    points: Vec<LatticeVector>,
    facets: Vec<Facet>,
    origin_outside: bool,
}

impl Hull {
    pub fn new(points: Vec<LatticeVector>) -> Result<Self> {
        let scan = scan_facets(&points)?;
        Ok(Hull {
            points,
            facets: scan.facets,
            origin_outside: scan.origin_outside,
        })
    }

    pub fn d(&self) -> usize {
        self.points[0].dim()
    }

    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Positions of input points that are vertices of the hull: those whose incident
    /// facet normals span `R^d`.
    pub fn vertex_positions(&self) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&k| {
                let normals: Vec<Vec<i64>> = self
                    .facets
                    .iter()
                    .filter(|f| f.incident.contains(&k))
                    .map(|f| f.normal.clone())
                    .collect();
                normals.len() >= self.d() && rank(&normals) == self.d()
            })
            .collect()
    }

    /// Origin strictly interior and the only interior lattice point.
    pub fn is_fano(&self) -> Result<bool> {
        if self.origin_outside || self.facets.is_empty() {
            return Ok(false);
        }
        let mut fano = true;
        self.scan_lattice(|x, strictly_inside, _| {
            if strictly_inside && x.iter().any(|&c| c != 0) {
                fano = false;
            }
        })?;
        Ok(fano)
    }

    /// Every lattice point of the hull other than the origin is a vertex.
    pub fn is_terminal(&self) -> Result<bool> {
        if self.origin_outside {
            return Ok(false);
        }
        let vertices: BTreeSet<&[i64]> = self
            .vertex_positions()
            .into_iter()
            .map(|k| self.points[k].coords())
            .collect();
        let mut terminal = true;
        self.scan_lattice(|x, _, inside| {
            if inside && x.iter().any(|&c| c != 0) && !vertices.contains(x) {
                terminal = false;
            }
        })?;
        Ok(terminal)
    }

    pub fn is_gorenstein(&self) -> bool {
        is_gorenstein(&self.facets)
    }

    pub fn is_simplicial(&self) -> bool {
        is_simplicial(&self.facets)
    }

    /// Simplicial, and the vertices of every facet form a basis of `Z^d`.
    pub fn is_smooth(&self) -> Result<bool> {
        if !self.is_simplicial() {
            return Ok(false);
        }
        for facet in &self.facets {
            let rows: Vec<Vec<i64>> = facet
                .incident
                .iter()
                .map(|&k| self.points[k].coords().to_vec())
                .collect();
            if determinant(&rows)?.abs() != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Visits every lattice point of the bounding box with
    /// `(point, strictly inside every facet, weakly inside every facet)`.
    fn scan_lattice(&self, mut visit: impl FnMut(&[i64], bool, bool)) -> Result<()> {
        let d = self.d();
        let lo: Vec<i64> = (0..d)
            .map(|i| self.points.iter().map(|p| p[i]).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|i| self.points.iter().map(|p| p[i]).max().unwrap())
            .collect();
        let total = lo
            .iter()
            .zip(&hi)
            .try_fold(1u128, |acc, (l, h)| acc.checked_mul((h - l + 1) as u128))
            .unwrap_or(u128::MAX);
        if total > MAX_LATTICE_SCAN {
            return Err(Error::LatticeScanTooLarge(total));
        }
        let mut x = lo.clone();
        loop {
            let mut strict = true;
            let mut weak = true;
            for f in &self.facets {
                let v = f.value(&x);
                if v > f.offset {
                    weak = false;
                    strict = false;
                    break;
                }
                if v == f.offset {
                    strict = false;
                }
            }
            visit(&x, strict, weak);
            // Odometer increment.
            let mut i = 0;
            loop {
                if i == d {
                    return Ok(());
                }
                if x[i] < hi[i] {
                    x[i] += 1;
                    break;
                }
                x[i] = lo[i];
                i += 1;
            }
        }
    }
}
