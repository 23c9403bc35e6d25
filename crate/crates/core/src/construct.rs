//! Building HVGs and VGs from data sequences.

use std::cmp::Ordering;

use crate::error::{HvgError, Result};
use crate::graph::{Edge, Graph};

fn check_len(len: usize) -> Result<()> {
    if len == 0 {
        Err(HvgError::InvalidSize(
            "data sequence must not be empty".into(),
        ))
    } else {
        Ok(())
    }
}

/// HVG straight from the definition: `{i, j}` is an edge iff every `d_k`
/// with `i < k < j` is strictly below both `d_i` and `d_j`.
///
/// Quadratic in the worst case (e.g. strictly decreasing input).
pub fn build_naive<T: PartialOrd>(d: &[T]) -> Result<Graph> {
    check_len(d.len())?;
    let n = d.len();
    let mut edges = Vec::new();
    for i in 0..n {
        // running maximum of the values strictly between i and j
        let mut highest: Option<&T> = None;
        for j in i + 1..n {
            let visible = match highest {
                None => true,
                Some(h) => h < &d[i] && h < &d[j],
            };
            if visible {
                edges.push((i + 1, j + 1));
            }
            if highest.is_none_or(|h| d[j] > *h) {
                highest = Some(&d[j]);
            }
            // nothing further right can see over a value at least d_i
            if highest.is_some_and(|h| *h >= d[i]) {
                break;
            }
        }
    }
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// Feeds every HVG edge of `d` (0-based, unordered emission) to `emit`.
///
/// The stack keeps indices whose values strictly decrease from bottom to top.
/// A new index pops and sees everything strictly lower, then sees the
/// remaining top, which is also dropped when it ties.
pub(crate) fn for_each_edge<T: PartialOrd>(
    d: &[T],
    stack: &mut Vec<usize>,
    mut emit: impl FnMut(usize, usize),
) {
    stack.clear();
    for j in 0..d.len() {
        while let Some(&top) = stack.last() {
            if d[top] < d[j] {
                emit(top, j);
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = stack.last() {
            emit(top, j);
            if d[top].partial_cmp(&d[j]) == Some(Ordering::Equal) {
                stack.pop();
            }
        }
        stack.push(j);
    }
}

/// Same graph as [`build_naive`] in amortized linear time.
pub fn build_fast<T: PartialOrd>(d: &[T]) -> Result<Graph> {
    check_len(d.len())?;
    let mut edges: Vec<Edge> = Vec::with_capacity(2 * d.len());
    let mut stack = Vec::new();
    for_each_edge(d, &mut stack, |i, j| edges.push((i + 1, j + 1)));
    // emissions are grouped by right endpoint; restore lexicographic order
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(d.len(), edges))
}

/// Replaces each entry by the number of entries less than or equal to it.
///
/// The HVG is unchanged, and the result is a permutation of `1..=n` exactly
/// when the input entries are pairwise distinct. Behavior on incomparable
/// values (NaN) is unspecified.
pub fn rank_normalize<T: PartialOrd>(d: &[T]) -> Vec<usize> {
    let cmp = |a: &&T, b: &&T| a.partial_cmp(b).unwrap_or(Ordering::Equal);
    let mut sorted: Vec<&T> = d.iter().collect();
    sorted.sort_by(cmp);
    d.iter()
        .map(|x| sorted.partition_point(|y| *y <= x))
        .collect()
}

/// Points `(t_i, d_i)` with strictly increasing time stamps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimedSequence {
    points: Vec<(i64, i64)>,
}

impl TimedSequence {
    pub fn new(points: Vec<(i64, i64)>) -> Result<Self> {
        check_len(points.len())?;
        if let Some(k) = points.windows(2).position(|w| w[0].0 >= w[1].0) {
            return Err(HvgError::InvalidTime(k + 2));
        }
        Ok(TimedSequence { points })
    }

    /// Uses `t_i = i`.
    pub fn from_values(values: &[i64]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .enumerate()
                .map(|(k, &v)| (k as i64 + 1, v))
                .collect(),
        )
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Natural visibility graph: `{i, j}` is an edge iff every intermediate point
/// lies strictly below the segment from `(t_i, d_i)` to `(t_j, d_j)`.
///
/// The test is done in exact integer arithmetic, multiplied through by
/// `t_j - t_i > 0`.
pub fn build_vg(s: &TimedSequence) -> Graph {
    let p = &s.points;
    let n = p.len();
    let mut edges = Vec::new();
    for i in 0..n {
        let (ti, di) = (p[i].0 as i128, p[i].1 as i128);
        for j in i + 1..n {
            let (tj, dj) = (p[j].0 as i128, p[j].1 as i128);
            let span = tj - ti;
            let visible = p[i + 1..j].iter().all(|&(tk, dk)| {
                let (tk, dk) = (tk as i128, dk as i128);
                dk * span < dj * span + (di - dj) * (tj - tk)
            });
            if visible {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::from_sorted_unchecked(n, edges)
}
