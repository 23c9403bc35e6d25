//! Labeled graphs on `1..=n` and the structural statistics of HVGs.
//!
//! Two graphs are equal iff they have the same vertex count and the same
//! edge set; vertex labels are never permuted.

use std::fmt;

use crate::construct::build_fast;
use crate::degrees::DegreeSequence;
use crate::error::{HvgError, Result};
use crate::realize::nesting_realization;

/// An unordered pair `{i, j}` stored as `(i, j)` with `i < j`.
pub type Edge = (usize, usize);

/// Simple undirected graph on vertices `1..=n` with a sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

/// Nesting degree of every vertex, indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestingProfile(Vec<usize>);

impl NestingProfile {
    pub fn get(&self, v: usize) -> usize {
        self.0[v - 1]
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
}

impl Graph {
    /// Builds a graph from arbitrary edge pairs. Pairs may be given in
    /// either orientation and repeated; they are normalized, sorted and
    /// deduplicated.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n == 0 {
            return Err(HvgError::InvalidSize(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(HvgError::InvalidEdge(a, b, "self-loop".into()));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == 0 || j > n {
                return Err(HvgError::InvalidEdge(
                    i,
                    j,
                    format!("endpoint outside 1..={n}"),
                ));
            }
            out.push((i, j));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Graph { n, edges: out })
    }

    /// Caller guarantees the edge list is valid, sorted and deduplicated.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(i, j)| 1 <= i && i < j && j <= n));
        Graph { n, edges }
    }

    /// The path `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(HvgError::InvalidSize(
                "path needs at least one vertex".into(),
            ));
        }
        Ok(Graph {
            n,
            edges: (1..n).map(|i| (i, i + 1)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| match () {
                _ if i == v => Some(j),
                _ if j == v => Some(i),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(HvgError::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Number of edges `{i, j}` with `i < v < j`.
    pub fn nesting_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|&&(i, j)| i < v && v < j).count())
    }

    /// All nesting degrees in one `O(n + |E|)` sweep.
    pub fn nesting_profile(&self) -> NestingProfile {
        // diff[v - 1] is the change of the count when stepping onto vertex v
        let mut diff = vec![0isize; self.n];
        for &(i, j) in &self.edges {
            if j > i + 1 {
                diff[i] += 1;
                diff[j - 1] -= 1;
            }
        }
        let mut acc = 0isize;
        let mut out = Vec::with_capacity(self.n);
        for d in &diff {
            acc += d;
            out.push(acc as usize);
        }
        NestingProfile(out)
    }

    /// Increasing list of vertices with nesting degree zero.
    pub fn non_nested(&self) -> Vec<usize> {
        self.nesting_profile()
            .as_slice()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Largest neighbor of `i`.
    pub fn max_neighbor(&self, i: usize) -> Result<usize> {
        self.check_vertex(i)?;
        self.edges
            .iter()
            .filter_map(|&(a, b)| match () {
                _ if a == i => Some(b),
                _ if b == i => Some(a),
                _ => None,
            })
            .max()
            .ok_or(HvgError::NoNeighbor(i))
    }

    /// True iff there are no `i < j < k < l` with edges `{i,k}` and `{j,l}`.
    pub fn is_non_crossing(&self) -> bool {
        for (x, &(i, k)) in self.edges.iter().enumerate() {
            // edges are sorted by left endpoint, so only later ones can start inside
            for &(j, l) in &self.edges[x + 1..] {
                if j >= k {
                    break;
                }
                if i < j && k < l {
                    return false;
                }
            }
        }
        true
    }

    /// Subgraph induced on `i..=j`, relabeled to `1..=j-i+1`.
    pub fn induced_interval(&self, i: usize, j: usize) -> Result<Graph> {
        if i == 0 || i >= j || j > self.n {
            return Err(HvgError::InvalidInterval { i, j, n: self.n });
        }
        Ok(self.interval(i, j))
    }

    /// Same as [`Graph::induced_interval`] but also accepts `i == j`.
    pub(crate) fn interval(&self, i: usize, j: usize) -> Graph {
        debug_assert!(1 <= i && i <= j && j <= self.n);
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| i <= a && b <= j)
            .map(|&(a, b)| (a - i + 1, b - i + 1))
            .collect();
        Graph::from_sorted_unchecked(j - i + 1, edges)
    }

    /// The 1-sum `self + h`: vertex `n` of `self` is glued to vertex 1 of `h`
    /// and vertex `k >= 2` of `h` becomes `n + k - 1`. Summing with the
    /// single-vertex graph is the identity.
    pub fn one_sum(&self, h: &Graph) -> Graph {
        let shift = self.n - 1;
        let mut edges = self.edges.clone();
        edges.extend(h.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        // every edge of h lands at or right of vertex n, so the list stays sorted
        Graph::from_sorted_unchecked(self.n + h.n - 1, edges)
    }

    /// Removes a non-path edge.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph> {
        let (i, j) = if e.0 < e.1 { e } else { (e.1, e.0) };
        if j == i + 1 {
            return Err(HvgError::InvalidEdge(
                i,
                j,
                "path edges cannot be removed".into(),
            ));
        }
        let pos = self
            .edges
            .binary_search(&(i, j))
            .map_err(|_| HvgError::InvalidEdge(i, j, "edge not present".into()))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        let out = Graph::from_sorted_unchecked(self.n, edges);
        debug_assert!(!self.is_hvg() || out.is_hvg());
        Ok(out)
    }

    /// Adds the edge `{j, l}` between two non-nested vertices.
    pub fn add_edge_non_nested(&self, j: usize, l: usize) -> Result<Graph> {
        self.check_vertex(j)?;
        self.check_vertex(l)?;
        let (a, b) = if j < l { (j, l) } else { (l, j) };
        if a == b {
            return Err(HvgError::InvalidEdge(a, b, "self-loop".into()));
        }
        let profile = self.nesting_profile();
        if profile.get(a) != 0 || profile.get(b) != 0 {
            return Err(HvgError::InvalidEdge(
                a,
                b,
                "endpoints must be non-nested".into(),
            ));
        }
        let pos = match self.edges.binary_search(&(a, b)) {
            Ok(_) => return Err(HvgError::InvalidEdge(a, b, "edge already present".into())),
            Err(pos) => pos,
        };
        let mut edges = self.edges.clone();
        edges.insert(pos, (a, b));
        let out = Graph::from_sorted_unchecked(self.n, edges);
        debug_assert!(!self.is_hvg() || out.is_hvg());
        Ok(out)
    }

    /// Adds or removes `{1, n}` without any checks.
    pub(crate) fn flip_edge(&self, a: usize, b: usize) -> Graph {
        let mut edges = self.edges.clone();
        match edges.binary_search(&(a, b)) {
            Ok(pos) => {
                edges.remove(pos);
            }
            Err(pos) => edges.insert(pos, (a, b)),
        }
        Graph::from_sorted_unchecked(self.n, edges)
    }

    /// Deletes vertex `v` and relabels `v+1..=n` to `v..=n-1`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(HvgError::InvalidSize(
                "cannot delete the only vertex".into(),
            ));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| i != v && j != v)
            .map(|&(i, j)| (shift(i), shift(j)))
            .collect();
        Ok(Graph::from_sorted_unchecked(self.n - 1, edges))
    }

    /// Ordered degree sequence `(δ_1, …, δ_n)`.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_raw(self.degrees())
    }

    pub(crate) fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(i, j) in &self.edges {
            deg[i - 1] += 1;
            deg[j - 1] += 1;
        }
        deg
    }

    /// Decides membership in the set of HVGs on `n` vertices.
    ///
    /// Every HVG is realized by `d_i = n - d_nest(i)`, so rebuilding from that
    /// sequence reproduces the graph exactly when it is an HVG at all.
    pub fn is_hvg(&self) -> bool {
        let seq = nesting_realization(self);
        build_fast(&seq).map(|h| &h == self).unwrap_or(false)
    }
}

/// `n=4 {12,14,23,34}`; labels get a dash once they can have two digits.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        let sep = if self.n > 9 { "-" } else { "" };
        for (k, (i, j)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}{sep}{j}")?;
        }
        write!(f, "}}")
    }
}
