//! Text formats and command implementations behind the `hvg` binary.
//!
//! Every command is a function from input text to output text so it can be
//! exercised without spawning a process. The binary only handles argument
//! parsing, file access and exit codes.
//!
//! Graph documents come in three projections of the same data:
//!
//! ```text
//! n 4          {"n":4,"edges":[[1,2],[1,4],[2,3],[3,4]]}
//! 1 2
//! 1 4
//! 2 3
//! 3 4
//! ```
//!
//! plus a Graphviz rendering that places all vertices on one rank.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bijections::{psi, psi_inv, xi, xi_inv, Bracketing, ParenString};
use crate::construct::{build_fast, build_naive, build_vg, rank_normalize, TimedSequence};
use crate::degrees::{from_degree_sequence, DegreeSequence};
use crate::enumerate::{
    degree_census_with, enumerate_all_bijective, enumerate_all_bruteforce_with,
    enumerate_distinct_bijective, enumerate_distinct_bruteforce_with, Census,
};
use crate::error::{HvgError, Result};
use crate::graph::Graph;
use crate::realize::{is_distinct_realizable, nesting_realization, standard_sequence};

/// Process exit status for an error.
pub fn exit_code(err: &HvgError) -> i32 {
    match err {
        HvgError::Parse { .. } => 3,
        HvgError::InvalidSize(_) => 5,
        _ => 4,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Naive,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Edges,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizeMode {
    Standard,
    Nesting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codec {
    Parens,
    Brackets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Universe {
    Distinct,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Brute,
    Bijective,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> HvgError {
    HvgError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

/// Splits a line on commas and whitespace, keeping 1-based start columns.
/// Consecutive commas yield an empty token.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let mut after_comma = false;
    for (k, c) in line.char_indices() {
        let sep = c == ',' || c.is_whitespace();
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &line[s..k]));
                start = None;
                after_comma = c == ',';
            }
            (true, None) => {
                if c == ',' {
                    if after_comma || out.is_empty() {
                        out.push((k, ""));
                    }
                    after_comma = true;
                }
            }
            (false, None) => {
                start = Some(k);
                after_comma = false;
            }
            (false, Some(_)) => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

fn parse_decimal(tok: &str) -> Option<f64> {
    let mut dots = 0;
    let mut digits = 0;
    for c in tok.chars() {
        match c {
            '0'..='9' => digits += 1,
            '.' => dots += 1,
            _ => return None,
        }
    }
    if digits == 0 || dots > 1 {
        return None;
    }
    tok.parse().ok()
}

/// Parses a series file: one sequence per line, `#` lines skipped.
pub fn parse_series(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        if is_comment(line) {
            continue;
        }
        let toks = tokens(line);
        if toks.is_empty() {
            return Err(parse_err(lineno, 1, "empty line"));
        }
        let mut seq = Vec::with_capacity(toks.len());
        for (col, tok) in toks {
            let v = parse_decimal(tok).ok_or_else(|| {
                parse_err(
                    lineno,
                    col,
                    format!("expected a non-negative number, found {tok:?}"),
                )
            })?;
            seq.push(v);
        }
        out.push(seq);
    }
    if out.is_empty() {
        return Err(parse_err(1, 1, "no sequences in input"));
    }
    Ok(out)
}

fn parse_integers(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if is_comment(line) {
            continue;
        }
        for (col, tok) in tokens(line) {
            let v = tok.parse::<usize>().map_err(|_| {
                parse_err(
                    k + 1,
                    col,
                    format!("expected a non-negative integer, found {tok:?}"),
                )
            })?;
            out.push(v);
        }
    }
    Ok(out)
}

/// Renders a graph in one of the document formats (no trailing newline).
pub fn render_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edges => {
            let mut s = format!("n {}", g.n());
            for (i, j) in g.edges() {
                let _ = write!(s, "\n{i} {j}");
            }
            s
        }
        GraphFormat::Json => {
            let doc = GraphDoc {
                n: g.n(),
                edges: g.edges().iter().map(|&(i, j)| [i, j]).collect(),
            };
            serde_json::to_string(&doc).expect("graph documents always serialize")
        }
        GraphFormat::Dot => {
            let mut s = String::from("graph hvg {\n  node [shape=circle];\n  { rank=same;");
            for v in 1..=g.n() {
                let _ = write!(s, " {v};");
            }
            s.push_str(" }\n");
            // invisible chain pins the left-to-right order
            if g.n() > 1 {
                let chain: Vec<String> = (1..=g.n()).map(|v| v.to_string()).collect();
                let _ = writeln!(s, "  edge [style=invis]; {};", chain.join(" -- "));
                s.push_str("  edge [style=solid];\n");
            }
            for (i, j) in g.edges() {
                let _ = writeln!(s, "  {i} -- {j};");
            }
            s.push('}');
            s
        }
    }
}

fn render_many(graphs: &[Graph], format: GraphFormat) -> String {
    let sep = match format {
        GraphFormat::Json => "\n",
        _ => "\n\n",
    };
    graphs
        .iter()
        .map(|g| render_graph(g, format))
        .collect::<Vec<_>>()
        .join(sep)
}

/// Parses a graph document; JSON when the text starts with `{`, otherwise
/// the edge-list form.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let doc: GraphDoc = serde_json::from_str(trimmed)
            .map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
        return Graph::new(doc.n, doc.edges.iter().map(|e| (e[0], e[1])));
    }
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        if is_comment(line) || line.trim().is_empty() {
            continue;
        }
        let toks = tokens(line);
        match n {
            None => {
                let [(_, "n"), (col, count)] = toks.as_slice() else {
                    return Err(parse_err(lineno, 1, "expected header \"n <vertex count>\""));
                };
                n = Some(count.parse().map_err(|_| {
                    parse_err(lineno, *col, format!("invalid vertex count {count:?}"))
                })?);
            }
            Some(count) => {
                let [(ci, a), (cj, b)] = toks.as_slice() else {
                    return Err(parse_err(lineno, 1, "expected an edge \"i j\""));
                };
                let i: usize = a
                    .parse()
                    .map_err(|_| parse_err(lineno, *ci, format!("invalid vertex {a:?}")))?;
                let j: usize = b
                    .parse()
                    .map_err(|_| parse_err(lineno, *cj, format!("invalid vertex {b:?}")))?;
                if i >= j {
                    return Err(parse_err(
                        lineno,
                        *ci,
                        "edges are written \"i j\" with i < j",
                    ));
                }
                if i == 0 || j > count {
                    return Err(parse_err(
                        lineno,
                        if i == 0 { *ci } else { *cj },
                        format!("vertex outside 1..={count}"),
                    ));
                }
                edges.push((i, j));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(1, 1, "missing header \"n <vertex count>\""))?;
    Graph::new(n, edges)
}

fn join_numbers(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `build`: one graph document per input sequence.
pub fn cmd_build(input: &str, algo: Algorithm, format: GraphFormat) -> Result<String> {
    let graphs = parse_series(input)?
        .iter()
        .map(|seq| {
            let ranks = rank_normalize(seq);
            match algo {
                Algorithm::Naive => build_naive(&ranks),
                Algorithm::Fast => build_fast(&ranks),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(render_many(&graphs, format))
}

/// `realize`: a data sequence whose HVG is the input graph.
pub fn cmd_realize(input: &str, mode: RealizeMode) -> Result<String> {
    let g = parse_graph(input)?;
    if !g.is_hvg() {
        return Err(HvgError::NotRealizable(format!("{g} is not an HVG")));
    }
    let seq = match mode {
        RealizeMode::Nesting => nesting_realization(&g),
        RealizeMode::Standard => {
            if !is_distinct_realizable(&g)? {
                return Err(HvgError::Domain(format!(
                    "{g} cannot be realized by pairwise distinct values; use --mode nesting"
                )));
            }
            standard_sequence(&g)?
        }
    };
    Ok(join_numbers(&seq))
}

/// `from-degrees`: the unique distinct-data HVG with this degree sequence.
pub fn cmd_from_degrees(input: &str, format: GraphFormat) -> Result<String> {
    let deltas = DegreeSequence::new(parse_integers(input)?)?;
    Ok(render_graph(&from_degree_sequence(&deltas)?, format))
}

/// `encode`: graph document to word.
pub fn cmd_encode(input: &str, codec: Codec) -> Result<String> {
    let g = parse_graph(input)?;
    Ok(match codec {
        Codec::Parens => psi(&g)?.to_string(),
        Codec::Brackets => xi_inv(&g)?.to_string(),
    })
}

/// `decode`: word to graph document. Surrounding whitespace is ignored.
pub fn cmd_decode(input: &str, codec: Codec, lenient: bool, format: GraphFormat) -> Result<String> {
    let word = input.trim();
    let g = match codec {
        Codec::Parens => psi_inv(&ParenString::parse(word)?),
        Codec::Brackets => {
            let b = if lenient {
                Bracketing::parse_lenient(word)?
            } else {
                Bracketing::parse(word)?
            };
            xi(&b)
        }
    };
    Ok(render_graph(&g, format))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub n: usize,
    pub universe: Universe,
    pub strategy: Strategy,
    pub list: bool,
    pub degrees: bool,
    pub workers: Option<usize>,
    pub format: GraphFormat,
}

fn census(opts: &CensusOptions) -> Result<Census> {
    match (opts.universe, opts.strategy) {
        (Universe::Distinct, Strategy::Brute) => {
            enumerate_distinct_bruteforce_with(opts.n, opts.workers)
        }
        (Universe::All, Strategy::Brute) => enumerate_all_bruteforce_with(opts.n, opts.workers),
        (Universe::Distinct, Strategy::Bijective) => enumerate_distinct_bijective(opts.n),
        (Universe::All, Strategy::Bijective) => enumerate_all_bijective(opts.n),
    }
}

/// `census`: count or list the HVGs on `n` vertices.
pub fn cmd_census(opts: &CensusOptions) -> Result<String> {
    if opts.degrees {
        let dc = degree_census_with(opts.n, opts.workers)?;
        return Ok(format!(
            "{} graphs, {} degree sequences",
            dc.graphs, dc.degree_sequences
        ));
    }
    let c = census(opts)?;
    if opts.list {
        Ok(render_many(&c.graphs, opts.format))
    } else {
        Ok(c.len().to_string())
    }
}

/// Result of a randomized visibility-graph search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VgCensus {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub max_value: i64,
    pub distinct: usize,
    /// Trial (1-based) that produced the last new graph.
    pub last_new: u64,
}

impl fmt::Display for VgCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} distinct VGs on {} vertices after {} trials (seed {}, values 0..={}, last new at trial {}); \
             randomized search, not guaranteed exhaustive",
            self.distinct, self.n, self.trials, self.seed, self.max_value, self.last_new
        )
    }
}

/// Largest `n` accepted by [`vg_census`].
pub const MAX_VG_CENSUS: usize = 8;

/// Counts distinct VGs over random integer sequences with `t_i = i`.
pub fn vg_census(n: usize, trials: u64, seed: u64, max_value: i64) -> Result<VgCensus> {
    if n == 0 || n > MAX_VG_CENSUS {
        return Err(HvgError::InvalidSize(format!(
            "vg-census supports 1 <= n <= {MAX_VG_CENSUS}, got {n}"
        )));
    }
    if max_value < 0 {
        return Err(HvgError::Domain("value range must be non-negative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut last_new = 0;
    let mut values = vec![0i64; n];
    for trial in 1..=trials {
        for v in values.iter_mut() {
            *v = rng.gen_range(0..=max_value);
        }
        let s = TimedSequence::from_values(&values)?;
        if seen.insert(build_vg(&s)) {
            last_new = trial;
        }
    }
    Ok(VgCensus {
        n,
        trials,
        seed,
        max_value,
        distinct: seen.len(),
        last_new,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchInput {
    /// Cumulative sum of uniform steps in `[-1, 1)`.
    RandomWalk,
    /// Strictly decreasing run followed by one spike, quadratic for the
    /// definitional builder.
    Adversarial,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub naive_secs: Option<f64>,
    pub fast_secs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub input: BenchInput,
    pub rows: Vec<BenchRow>,
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "input: {:?}", self.input)?;
        writeln!(
            f,
            "{:>10} {:>14} {:>14} {:>10} {:>10}",
            "n", "naive_ms", "fast_ms", "naive_x2", "fast_x2"
        )?;
        let mut prev: Option<&BenchRow> = None;
        for row in &self.rows {
            let naive = row
                .naive_secs
                .map_or("-".to_string(), |s| format!("{:.3}", s * 1e3));
            let ratio = |a: Option<f64>, b: Option<f64>| match (a, b) {
                (Some(a), Some(b)) if b > 0.0 => format!("{:.2}", a / b),
                _ => "-".to_string(),
            };
            let naive_ratio = ratio(row.naive_secs, prev.and_then(|p| p.naive_secs));
            let fast_ratio = ratio(Some(row.fast_secs), prev.map(|p| p.fast_secs));
            writeln!(
                f,
                "{:>10} {:>14} {:>14.3} {:>10} {:>10}",
                row.n,
                naive,
                row.fast_secs * 1e3,
                naive_ratio,
                fast_ratio
            )?;
            prev = Some(row);
        }
        Ok(())
    }
}

pub fn random_walk(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut x = 0.0;
    (0..n)
        .map(|_| {
            x += rng.gen_range(-1.0..1.0);
            x
        })
        .collect()
}

fn adversarial(n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n).rev().map(|k| k as f64).collect();
    if let Some(last) = v.last_mut() {
        *last = n as f64;
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchOptions {
    pub min_n: usize,
    pub max_n: usize,
    pub repetitions: usize,
    pub seed: u64,
    pub input: BenchInput,
    /// Sizes above this skip the definitional builder.
    pub naive_max: usize,
}

/// Times both builders on doubling sizes; panics if they ever disagree.
pub fn bench(opts: &BenchOptions) -> Result<BenchReport> {
    if opts.min_n == 0 || opts.min_n > opts.max_n {
        return Err(HvgError::InvalidSize(format!(
            "need 1 <= min_n <= max_n, got {} and {}",
            opts.min_n, opts.max_n
        )));
    }
    let reps = opts.repetitions.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut rows = Vec::new();
    let mut n = opts.min_n;
    loop {
        let mut fast_best = f64::INFINITY;
        let mut naive_best: Option<f64> = None;
        for _ in 0..reps {
            let data = match opts.input {
                BenchInput::RandomWalk => random_walk(n, &mut rng),
                BenchInput::Adversarial => adversarial(n),
            };
            let t = Instant::now();
            let fast = build_fast(&data)?;
            fast_best = fast_best.min(t.elapsed().as_secs_f64());
            if n <= opts.naive_max {
                let t = Instant::now();
                let naive = build_naive(&data)?;
                let secs = t.elapsed().as_secs_f64();
                naive_best = Some(naive_best.map_or(secs, |b: f64| b.min(secs)));
                assert_eq!(naive, fast, "builders disagree on a size-{n} input");
            }
        }
        rows.push(BenchRow {
            n,
            naive_secs: naive_best,
            fast_secs: fast_best,
        });
        if n >= opts.max_n {
            break;
        }
        n = (n * 2).min(opts.max_n);
    }
    Ok(BenchReport {
        input: opts.input,
        rows,
    })
}
