//! Data sequences that realize a given HVG.

use crate::construct::build_fast;
use crate::error::{HvgError, Result};
use crate::graph::Graph;

fn require_hvg(g: &Graph) -> Result<()> {
    if g.is_hvg() {
        Ok(())
    } else {
        Err(HvgError::NotRealizable(format!("{g} is not an HVG")))
    }
}

/// Permutation realizing `g` when `g` comes from distinct data.
///
/// Vertices are ranked by decreasing nesting degree, ties broken from right
/// to left, and the vertex at rank `r` receives the value `r`. Vertex 1 is
/// always ranked last, so the first entry is `n`.
///
/// The sequence is produced for every HVG; it realizes `g` iff `g` is
/// realizable by pairwise distinct values (see [`is_distinct_realizable`]).
pub fn standard_sequence(g: &Graph) -> Result<Vec<usize>> {
    require_hvg(g)?;
    Ok(standard_sequence_unchecked(g))
}

pub(crate) fn standard_sequence_unchecked(g: &Graph) -> Vec<usize> {
    let profile = g.nesting_profile();
    let mut order: Vec<usize> = (1..=g.n()).collect();
    order.sort_unstable_by(|&a, &b| profile.get(b).cmp(&profile.get(a)).then_with(|| b.cmp(&a)));
    let mut d = vec![0; g.n()];
    for (rank, &v) in order.iter().enumerate() {
        d[v - 1] = rank + 1;
    }
    d
}

/// `d_i = n - d_nest(i)`; realizes every HVG.
pub fn nesting_realization(g: &Graph) -> Vec<usize> {
    let n = g.n();
    g.nesting_profile()
        .as_slice()
        .iter()
        .map(|&k| n - k)
        .collect()
}

/// Whether `g` is the HVG of some sequence with pairwise distinct entries.
pub fn is_distinct_realizable(g: &Graph) -> Result<bool> {
    require_hvg(g)?;
    Ok(is_distinct_realizable_unchecked(g))
}

pub(crate) fn is_distinct_realizable_unchecked(g: &Graph) -> bool {
    let d = standard_sequence_unchecked(g);
    build_fast(&d).map(|h| &h == g).unwrap_or(false)
}
