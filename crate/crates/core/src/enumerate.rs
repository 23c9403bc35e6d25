//! Exhaustive and bijective enumeration of HVGs, plus the exact counting
//! sequences they are checked against.
//!
//! Brute force covers every permutation of `1..=n` (distinct data) or every
//! sequence in `[n]^n` (arbitrary data, which suffices after rank
//! normalization). The bijective strategies map balanced words through
//! [`psi_inv`] and bracketings through [`xi`]. Both always return graphs
//! sorted by `(n, edge list)`, independent of the worker count.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bijections::{psi_inv, xi, Bracketing, ParenString};
use crate::construct::for_each_edge;
use crate::error::{HvgError, Result};
use crate::graph::{Edge, Graph};

/// Largest `n` accepted by [`enumerate_distinct_bruteforce`].
pub const MAX_DISTINCT_BRUTE: usize = 9;
/// Largest `n` accepted by [`enumerate_all_bruteforce`].
pub const MAX_ALL_BRUTE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    BruteForce,
    Bijective,
}

/// Deduplicated, sorted list of HVGs on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub graphs: Vec<Graph>,
    pub provenance: Provenance,
}

impl Census {
    fn new(n: usize, mut graphs: Vec<Graph>, provenance: Provenance) -> Self {
        graphs.sort_unstable();
        graphs.dedup();
        Census {
            n,
            graphs,
            provenance,
        }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }

    /// Same graph list regardless of how it was produced.
    pub fn same_graphs(&self, other: &Census) -> bool {
        self.n == other.n && self.graphs == other.graphs
    }
}

impl<'a> IntoIterator for &'a Census {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

// Edge {i, j} (0-based, i < j) is bit i * n + j; n <= 11 fits in 128 bits.
type EdgeMask = u128;

fn decode(n: usize, mask: EdgeMask) -> Graph {
    let mut edges: Vec<Edge> = Vec::new();
    let mut m = mask;
    while m != 0 {
        let bit = m.trailing_zeros() as usize;
        edges.push((bit / n + 1, bit % n + 1));
        m &= m - 1;
    }
    Graph::from_sorted_unchecked(n, edges)
}

fn mask_of(d: &[usize], stack: &mut Vec<usize>) -> EdgeMask {
    let n = d.len();
    let mut mask: EdgeMask = 0;
    for_each_edge(d, stack, |i, j| mask |= 1 << (i * n + j));
    mask
}

fn run_with_workers<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(job),
        None => job(),
    }
}

fn check_range(n: usize, max: usize, what: &str) -> Result<()> {
    if n == 0 || n > max {
        Err(HvgError::InvalidSize(format!(
            "{what} enumeration supports 1 <= n <= {max}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Rearranges `v` into the next lexicographic permutation; false at the end.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// All HVGs of permutations of `1..=n`.
pub fn enumerate_distinct_bruteforce(n: usize) -> Result<Census> {
    enumerate_distinct_bruteforce_with(n, None)
}

/// [`enumerate_distinct_bruteforce`] on a dedicated pool of `workers` threads.
pub fn enumerate_distinct_bruteforce_with(n: usize, workers: Option<usize>) -> Result<Census> {
    check_range(n, MAX_DISTINCT_BRUTE, "distinct brute-force")?;
    let masks: HashSet<EdgeMask> = run_with_workers(workers, || {
        (0..n)
            .into_par_iter()
            .map(|first| {
                let mut seen = HashSet::new();
                let mut stack = Vec::with_capacity(n);
                let mut d: Vec<usize> = std::iter::once(first)
                    .chain((0..n).filter(|&x| x != first))
                    .collect();
                loop {
                    seen.insert(mask_of(&d, &mut stack));
                    if !next_permutation(&mut d[1..]) {
                        break;
                    }
                }
                seen
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    });
    let graphs = masks.into_iter().map(|m| decode(n, m)).collect();
    Ok(Census::new(n, graphs, Provenance::BruteForce))
}

/// All HVGs of sequences in `[n]^n`, i.e. every HVG on `n` vertices.
pub fn enumerate_all_bruteforce(n: usize) -> Result<Census> {
    enumerate_all_bruteforce_with(n, None)
}

/// [`enumerate_all_bruteforce`] on a dedicated pool of `workers` threads.
pub fn enumerate_all_bruteforce_with(n: usize, workers: Option<usize>) -> Result<Census> {
    check_range(n, MAX_ALL_BRUTE, "brute-force")?;
    // shard on the first two entries for enough parallel slack
    let heads = if n >= 2 { n * n } else { n };
    let masks: HashSet<EdgeMask> = run_with_workers(workers, || {
        (0..heads)
            .into_par_iter()
            .map(|head| {
                let mut seen = HashSet::new();
                let mut stack = Vec::with_capacity(n);
                let mut d = vec![0usize; n];
                let fixed = if n >= 2 {
                    d[0] = head / n;
                    d[1] = head % n;
                    2
                } else {
                    d[0] = head;
                    1
                };
                loop {
                    seen.insert(mask_of(&d, &mut stack));
                    // odometer over the free positions
                    let mut k = n;
                    loop {
                        if k == fixed {
                            return seen;
                        }
                        k -= 1;
                        d[k] += 1;
                        if d[k] < n {
                            break;
                        }
                        d[k] = 0;
                    }
                }
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    });
    let graphs = masks.into_iter().map(|m| decode(n, m)).collect();
    Ok(Census::new(n, graphs, Provenance::BruteForce))
}

/// HVGs from distinct data via the balanced-parentheses bijection.
pub fn enumerate_distinct_bijective(n: usize) -> Result<Census> {
    if n == 0 {
        return Err(HvgError::InvalidSize("n must be at least 1".into()));
    }
    let graphs = ParenString::all(n - 1).iter().map(psi_inv).collect();
    Ok(Census::new(n, graphs, Provenance::Bijective))
}

/// All HVGs via the bracketing bijection and toggling of `{1, n}`.
pub fn enumerate_all_bijective(n: usize) -> Result<Census> {
    if n < 2 {
        return Err(HvgError::InvalidSize("n must be at least 2".into()));
    }
    if n == 2 {
        return Ok(Census::new(
            2,
            vec![xi(&Bracketing::Letter)],
            Provenance::Bijective,
        ));
    }
    let without: Vec<Graph> = Bracketing::all(n - 1).iter().map(xi).collect();
    let with: Vec<Graph> = without.iter().map(|g| g.flip_edge(1, n)).collect();
    let mut graphs = without;
    graphs.extend(with);
    Ok(Census::new(n, graphs, Provenance::Bijective))
}

/// Catalan number `C_m` from Segner's recurrence `C_{k+1} = Σ C_i C_{k-i}`.
pub fn catalan(m: usize) -> BigUint {
    let mut c: Vec<BigUint> = vec![BigUint::one()];
    for k in 0..m {
        let next = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
        c.push(next);
    }
    c.swap_remove(m)
}

/// Large Schröder number `r_m`: `r_{k+1} = r_k + Σ_{i=0}^{k} r_i r_{k-i}`.
pub fn schroder_large(m: usize) -> BigUint {
    let mut r: Vec<BigUint> = vec![BigUint::one()];
    for k in 0..m {
        let conv: BigUint = (0..=k).map(|i| &r[i] * &r[k - i]).sum();
        let next = &r[k] + conv;
        r.push(next);
    }
    r.swap_remove(m)
}

/// Little Schröder number `s_m` (bracketings of `m + 1` letters), from
/// `(k+2) s_{k+1} = 3(2k+1) s_k - (k-1) s_{k-1}` with `s_0 = s_1 = 1`.
pub fn schroder_little(m: usize) -> BigUint {
    let mut s: Vec<BigUint> = vec![BigUint::one(), BigUint::one()];
    for k in 1..m {
        let lhs = BigUint::from(3 * (2 * k + 1)) * &s[k] - BigUint::from(k - 1) * &s[k - 1];
        let (q, rem) = lhs.div_rem(&BigUint::from(k + 2));
        assert!(
            rem.is_zero(),
            "little Schröder recurrence must divide exactly"
        );
        s.push(q);
    }
    s.swap_remove(m)
}

/// Checks `C_m = 1 + Σ_{k=3}^{m+1} 3/(2k-3) · binom(2k-3, k)` exactly.
pub fn catalan_identity_check(m: usize) -> Result<bool> {
    let mut rhs = BigUint::one();
    for k in 3..=m + 1 {
        let top = BigUint::from(2 * k - 3);
        let numerator = BigUint::from(3u32) * binomial(top.clone(), BigUint::from(k));
        let (q, rem) = numerator.div_rem(&top);
        if !rem.is_zero() {
            return Err(HvgError::ArithmeticIntegrity(format!(
                "3 * binom({top}, {k}) is not divisible by {top}"
            )));
        }
        rhs += q;
    }
    Ok(catalan(m) == rhs)
}

/// Number of HVGs and of distinct ordered degree sequences among them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeCensus {
    pub graphs: usize,
    pub degree_sequences: usize,
}

pub fn degree_census(n: usize) -> Result<DegreeCensus> {
    degree_census_with(n, None)
}

pub fn degree_census_with(n: usize, workers: Option<usize>) -> Result<DegreeCensus> {
    let census = enumerate_all_bruteforce_with(n, workers)?;
    let sequences: HashSet<Vec<usize>> = census.iter().map(Graph::degrees).collect();
    Ok(DegreeCensus {
        graphs: census.len(),
        degree_sequences: sequences.len(),
    })
}
