//! Reconstruction of distinct-data HVGs from their ordered degree sequence.
//!
//! The reconstruction repeatedly strips an inner vertex of degree 2 whose
//! two neighbors are adjacent, records its two edges, and decrements the
//! neighbors. Once the sequence reads `(1, 2, …, 2, 1)` the survivors form
//! a chain from vertex 1 to vertex `n`.

use std::fmt;

use crate::error::{HvgError, Result};
use crate::graph::{Edge, Graph};
use crate::realize::is_distinct_realizable_unchecked;

/// Ordered list `(δ_1, …, δ_n)` of vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Validates the shape every HVG degree sequence has: `(0)` for a single
    /// vertex, otherwise positive endpoint degrees and an even sum.
    pub fn new(deltas: Vec<usize>) -> Result<Self> {
        let bad = |msg: &str| Err(HvgError::InvalidDegreeSequence(msg.into()));
        match deltas.as_slice() {
            [] => return bad("empty sequence"),
            [d] if *d != 0 => return bad("a single vertex has degree 0"),
            [_] => {}
            [first, .., last] => {
                if *first == 0 || *last == 0 {
                    return bad("endpoint degrees must be positive");
                }
                if deltas.iter().sum::<usize>() % 2 != 0 {
                    return bad("degree sum must be even");
                }
            }
        }
        Ok(DegreeSequence(deltas))
    }

    pub(crate) fn from_raw(deltas: Vec<usize>) -> Self {
        DegreeSequence(deltas)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// One stripped vertex: its original label and the two edges it carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub removed: usize,
    pub edges: [Edge; 2],
}

/// Protocol of a reconstruction run, labels refer to the input positions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// Inner vertices left once the sequence reached `(1, 2, …, 2, 1)`.
    pub chain: Vec<usize>,
}

fn is_base_shape(deltas: &[usize]) -> bool {
    match deltas {
        [d] => *d == 0,
        [first, inner @ .., last] => *first == 1 && *last == 1 && inner.iter().all(|&d| d == 2),
        [] => false,
    }
}

/// 1-based position of the inner 2 to strip next.
///
/// Position 2 when `δ_2 = 2` and `δ_1 ≠ 1`; otherwise the smallest
/// `3 ≤ i ≤ n-1` with `δ_i = 2` and `δ_{i-1} ≥ 3`.
pub fn select_removable_two(deltas: &[usize]) -> Result<usize> {
    if deltas.len() < 3 || is_base_shape(deltas) {
        return Err(HvgError::InvalidDegreeSequence(
            "nothing to strip: sequence is too short or already a path".into(),
        ));
    }
    if deltas[1] == 2 && deltas[0] != 1 {
        return Ok(2);
    }
    (3..deltas.len())
        .find(|&i| deltas[i - 1] == 2 && deltas[i - 2] >= 3)
        .ok_or_else(|| HvgError::InvalidDegreeSequence("no removable inner 2".into()))
}

/// The unique HVG from distinct data with the given ordered degree sequence.
pub fn from_degree_sequence(deltas: &DegreeSequence) -> Result<Graph> {
    reconstruct(deltas).map(|(g, _)| g)
}

/// Like [`from_degree_sequence`], also returning the reduction protocol.
pub fn reconstruct(deltas: &DegreeSequence) -> Result<(Graph, ReductionTrace)> {
    let invalid = |msg: String| HvgError::InvalidDegreeSequence(msg);
    let n = deltas.len();
    let mut current: Vec<usize> = deltas.as_slice().to_vec();
    let mut labels: Vec<usize> = (1..=n).collect();
    let mut trace = ReductionTrace::default();
    let mut edges: Vec<Edge> = Vec::with_capacity(2 * n);

    while !is_base_shape(&current) {
        let p = select_removable_two(&current)? - 1;
        let (left, mid, right) = (labels[p - 1], labels[p], labels[p + 1]);
        for k in [p - 1, p + 1] {
            if current[k] < 2 {
                return Err(invalid(format!(
                    "degree of vertex {} would drop below 1",
                    labels[k]
                )));
            }
            current[k] -= 1;
        }
        let step = [(left, mid), (mid, right)];
        edges.extend(step);
        trace.steps.push(ReductionStep {
            removed: mid,
            edges: step,
        });
        current.remove(p);
        labels.remove(p);
    }

    edges.extend(labels.windows(2).map(|w| (w[0], w[1])));
    if labels.len() > 2 {
        trace.chain = labels[1..labels.len() - 1].to_vec();
    }

    let g = Graph::new(n, edges)?;
    if g.degree_sequence() != *deltas {
        return Err(invalid(format!(
            "reconstructed graph has degrees ({}) instead",
            g.degree_sequence()
        )));
    }
    if !g.is_hvg() || !is_distinct_realizable_unchecked(&g) {
        return Err(invalid(
            "no HVG from distinct data has this degree sequence".into(),
        ));
    }
    Ok((g, trace))
}
