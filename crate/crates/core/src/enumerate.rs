//! Posets up to isomorphism and duality, and the smooth-count table.
//!
//! Every poset on `d` elements arises from one on `d - 1` elements by adding a new
//! maximal element above some order ideal. Candidates are deduplicated by
//! canonical key and each class is represented by its canonical form, so the
//! output does not depend on generation order or worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{self, OpenOptions};
use std::path::Path;

use log::info;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::CanonicalKey;
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::format::to_text;
use crate::poset::{transpose, Poset};

/// Largest `d` accepted by the enumerator.
pub const MAX_ENUMERATION_SIZE: usize = 8;

fn check_enumeration_size(d: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_SIZE).contains(&d) {
        Ok(())
    } else {
        Err(Error::EnumerationTooLarge(d))
    }
}

/// Order ideals (down-closed subsets) of `p` as bitmasks.
fn order_ideals(p: &Poset) -> Vec<u64> {
    let below = transpose(p.above_rows());
    (0u64..1 << p.d())
        .filter(|&mask| {
            let mut rest = mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if below[i] & !mask != 0 {
                    return false;
                }
            }
            true
        })
        .collect()
}

/// `p` with a new maximal element `y_{d+1}` lying above exactly `ideal`.
fn extend(p: &Poset, ideal: u64) -> Poset {
    let d = p.d();
    let mut rows = p.above_rows().to_vec();
    for (i, row) in rows.iter_mut().enumerate() {
        if ideal >> i & 1 == 1 {
            *row |= 1 << d;
        }
    }
    rows.push(0);
    Poset::from_closed_rows(d + 1, rows)
}

fn next_level(previous: &[Poset]) -> Vec<Poset> {
    let found: BTreeMap<CanonicalKey, Poset> = previous
        .par_iter()
        .flat_map_iter(|p| {
            order_ideals(p).into_iter().map(move |ideal| {
                let (form, key) = extend(p, ideal).canonical_form();
                (key, form)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_values().collect()
}

/// Isomorphism classes for every size `1..=d_max`; entry `k` holds size `k + 1`.
pub fn enumerate_levels(d_max: usize) -> Result<Vec<Vec<Poset>>> {
    check_enumeration_size(d_max)?;
    let mut levels = vec![vec![Poset::antichain(1)?.canonical_form().0]];
    while levels.len() < d_max {
        let next = next_level(levels.last().unwrap());
        info!(
            "d = {}: {} isomorphism classes",
            levels.len() + 1,
            next.len()
        );
        levels.push(next);
    }
    Ok(levels)
}

/// One canonical representative per isomorphism class, sorted by canonical key.
pub fn enumerate_posets(d: usize) -> Result<Vec<Poset>> {
    Ok(enumerate_levels(d)?.pop().unwrap())
}

/// Isomorphism classes reduced modulo order reversal.
#[derive(Clone, Debug)]
pub struct DualityQuotient {
    pub representatives: Vec<Poset>,
    pub isomorphism_classes: usize,
    pub self_dual: usize,
}

/// Keeps each class whose key is not larger than the key of its dual.
pub fn quotient_by_duality(classes: &[Poset]) -> DualityQuotient {
    let keyed: Vec<(bool, bool)> = classes
        .par_iter()
        .map(|p| {
            let key = p.canonical_key();
            let dual_key = p.dual().canonical_key();
            (key <= dual_key, key == dual_key)
        })
        .collect();
    let representatives = classes
        .iter()
        .zip(&keyed)
        .filter(|(_, &(keep, _))| keep)
        .map(|(p, _)| p.clone())
        .collect();
    DualityQuotient {
        representatives,
        isomorphism_classes: classes.len(),
        self_dual: keyed.iter().filter(|&&(_, s)| s).count(),
    }
}

/// One row of the classification table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: usize,
    /// Posets up to isomorphism and duality.
    #[serde(rename = "posets")]
    pub poset_count: usize,
    /// Those whose polytope is smooth.
    #[serde(rename = "smooth")]
    pub smooth_count: usize,
}

fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = jobs {
        builder = builder.num_threads(jobs.max(1));
    }
    builder.build().map_err(|e| Error::Io(e.to_string()))
}

fn count_row(d: usize, classes: &[Poset]) -> TableRow {
    let quotient = quotient_by_duality(classes);
    let smooth_count = quotient
        .representatives
        .par_iter()
        .filter(|p| classify(p).smooth)
        .count();
    TableRow {
        d,
        poset_count: quotient.representatives.len(),
        smooth_count,
    }
}

/// Table rows for `d = 1..=d_max`, classifying on `jobs` workers (default: all cores).
pub fn build_table(d_max: usize, jobs: Option<usize>) -> Result<Vec<TableRow>> {
    build_table_resumable(d_max, jobs, None)
}

/// Like [`build_table`], streaming each row to a CSV file as soon as it is known.
///
/// Rows already present in `results` are reused instead of being recomputed.
pub fn build_table_resumable(
    d_max: usize,
    jobs: Option<usize>,
    results: Option<&Path>,
) -> Result<Vec<TableRow>> {
    check_enumeration_size(d_max)?;
    let known: BTreeMap<usize, TableRow> = match results {
        Some(path) if path.exists() => read_results(path)?.into_iter().map(|r| (r.d, r)).collect(),
        _ => BTreeMap::new(),
    };
    let pool = thread_pool(jobs)?;
    pool.install(|| {
        let mut rows = Vec::with_capacity(d_max);
        let mut classes = Vec::new();
        for d in 1..=d_max {
            classes = if d == 1 {
                vec![Poset::antichain(1)?]
            } else {
                next_level(&classes)
            };
            if let Some(row) = known.get(&d) {
                info!("d = {d}: reusing stored row");
                rows.push(*row);
                continue;
            }
            let row = count_row(d, &classes);
            info!(
                "d = {d}: {} posets, {} smooth",
                row.poset_count, row.smooth_count
            );
            if let Some(path) = results {
                append_result(path, &row)?;
            }
            rows.push(row);
        }
        Ok(rows)
    })
}

pub fn read_results(path: &Path) -> Result<Vec<TableRow>> {
    let mut reader = csv::Reader::from_path(path)?;
    let rows = reader
        .deserialize()
        .collect::<std::result::Result<Vec<TableRow>, _>>()?;
    Ok(rows)
}

fn append_result(path: &Path, row: &TableRow) -> Result<()> {
    let fresh = !path.exists() || fs::metadata(path)?.len() == 0;
    let file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut writer = csv::WriterBuilder::new()
        .has_headers(fresh)
        .from_writer(file);
    writer.serialize(row)?;
    writer.flush()?;
    Ok(())
}

pub fn write_table_csv<W: std::io::Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

/// Writes each poset to `dir/<canonical key>.poset`; returns the number written.
pub fn emit_posets(posets: &[Poset], dir: &Path) -> Result<usize> {
    fs::create_dir_all(dir)?;
    let mut names = BTreeSet::new();
    for p in posets {
        let key = p.canonical_key();
        names.insert(key.clone());
        fs::write(dir.join(format!("{key}.poset")), to_text(p))?;
    }
    Ok(names.len())
}
