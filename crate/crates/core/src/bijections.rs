//! Bijections between HVG classes and classical Catalan / Schröder families.
//!
//! - [`psi`] maps an HVG from distinct data on `n` vertices to a balanced
//!   parentheses word with `n - 1` pairs; [`psi_inv`] inverts it.
//! - [`xi`] maps a bracketing of `n` letters to an HVG on `n + 1` vertices
//!   without the edge `{1, n+1}`; [`xi_inv`] inverts it.
//! - [`toggle_top_edge`] exchanges HVGs with and without `{1, n}`.
//!
//! Text forms have no whitespace: parentheses words use `[` and `]`,
//! bracketings use `x`, `(` and `)` with unary and outermost brackets omitted.

use std::fmt;

use crate::error::{HvgError, Result};
use crate::graph::Graph;
use crate::realize::is_distinct_realizable_unchecked;

/// A balanced word over `[` and `]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParenString(String);

impl ParenString {
    pub fn parse(s: &str) -> Result<Self> {
        let mut depth = 0usize;
        for (k, c) in s.chars().enumerate() {
            match c {
                '[' => depth += 1,
                ']' => {
                    if depth == 0 {
                        return Err(HvgError::parse_at(k + 1, "unmatched ']'"));
                    }
                    depth -= 1;
                }
                other => {
                    return Err(HvgError::parse_at(
                        k + 1,
                        format!("unexpected character {other:?}, expected '[' or ']'"),
                    ))
                }
            }
        }
        if depth != 0 {
            return Err(HvgError::parse_at(
                s.chars().count() + 1,
                format!("{depth} unclosed '['"),
            ));
        }
        Ok(ParenString(s.to_owned()))
    }

    pub fn empty() -> Self {
        ParenString(String::new())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of bracket pairs.
    pub fn pairs(&self) -> usize {
        self.0.len() / 2
    }

    /// Inner words `B_1, …, B_k` of the normal representation `[B_1]⋯[B_k]`.
    pub fn blocks(&self) -> Vec<&str> {
        top_level_blocks(&self.0)
    }

    /// Every balanced word with `pairs` pairs, in lexicographic order
    /// (`[` before `]`).
    pub fn all(pairs: usize) -> Vec<ParenString> {
        fn go(open: usize, close: usize, buf: &mut String, out: &mut Vec<ParenString>) {
            if open == 0 && close == 0 {
                out.push(ParenString(buf.clone()));
                return;
            }
            if open > 0 {
                buf.push('[');
                go(open - 1, close + 1, buf, out);
                buf.pop();
            }
            if close > 0 {
                buf.push(']');
                go(open, close - 1, buf, out);
                buf.pop();
            }
        }
        let mut out = Vec::new();
        go(pairs, 0, &mut String::with_capacity(2 * pairs), &mut out);
        out
    }
}

impl fmt::Display for ParenString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn top_level_blocks(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (k, b) in s.bytes().enumerate() {
        if b == b'[' {
            if depth == 0 {
                start = k + 1;
            }
            depth += 1;
        } else {
            depth -= 1;
            if depth == 0 {
                out.push(&s[start..k]);
            }
        }
    }
    out
}

/// A bracketing of a string of identical letters `x`.
///
/// A `Group` always has at least two children.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bracketing {
    Letter,
    Group(Vec<Bracketing>),
}

impl Bracketing {
    /// The trivial bracketing `x⋯x` with `len` letters.
    pub fn trivial(len: usize) -> Result<Self> {
        match len {
            0 => Err(HvgError::InvalidSize(
                "a bracketing has at least one letter".into(),
            )),
            1 => Ok(Bracketing::Letter),
            _ => Ok(Bracketing::Group(vec![Bracketing::Letter; len])),
        }
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        match self {
            Bracketing::Letter => 1,
            Bracketing::Group(children) => children.iter().map(Bracketing::len).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            Bracketing::Letter => true,
            Bracketing::Group(children) => children.iter().all(|c| *c == Bracketing::Letter),
        }
    }

    /// Parses the canonical rendering. Rejects brackets around a single
    /// letter, brackets with a single child and outer brackets.
    pub fn parse(s: &str) -> Result<Self> {
        BracketParser::new(s, false).parse_top()
    }

    /// Like [`Bracketing::parse`] but drops redundant brackets instead of
    /// rejecting them, e.g. `(x)x` becomes `xx` and `((xx))` becomes `xx`.
    pub fn parse_lenient(s: &str) -> Result<Self> {
        BracketParser::new(s, true).parse_top()
    }

    /// Every bracketing with `len` letters.
    pub fn all(len: usize) -> Vec<Bracketing> {
        if len == 0 {
            return Vec::new();
        }
        // single[m]: bracketings of m letters
        // seqs[m]: child lists (one or more children) covering m letters
        let mut single: Vec<Vec<Bracketing>> = vec![Vec::new(); len + 1];
        let mut seqs: Vec<Vec<Vec<Bracketing>>> = vec![Vec::new(); len + 1];
        for m in 1..=len {
            let mut multi: Vec<Vec<Bracketing>> = Vec::new();
            for f in 1..m {
                for head in &single[f] {
                    for tail in &seqs[m - f] {
                        let mut seq = Vec::with_capacity(tail.len() + 1);
                        seq.push(head.clone());
                        seq.extend_from_slice(tail);
                        multi.push(seq);
                    }
                }
            }
            single[m] = if m == 1 {
                vec![Bracketing::Letter]
            } else {
                multi.iter().cloned().map(Bracketing::Group).collect()
            };
            multi.extend(single[m].iter().map(|b| vec![b.clone()]));
            seqs[m] = multi;
        }
        single.swap_remove(len)
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn inner(b: &Bracketing, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match b {
                Bracketing::Letter => f.write_str("x"),
                Bracketing::Group(children) => {
                    for c in children {
                        match c {
                            Bracketing::Letter => f.write_str("x")?,
                            Bracketing::Group(_) => {
                                f.write_str("(")?;
                                inner(c, f)?;
                                f.write_str(")")?;
                            }
                        }
                    }
                    Ok(())
                }
            }
        }
        inner(self, f)
    }
}

struct BracketParser {
    chars: Vec<char>,
    pos: usize,
    lenient: bool,
}

impl BracketParser {
    fn new(src: &str, lenient: bool) -> Self {
        BracketParser {
            chars: src.chars().collect(),
            pos: 0,
            lenient,
        }
    }

    fn err(&self, column: usize, msg: impl Into<String>) -> HvgError {
        HvgError::parse_at(column, msg)
    }

    fn parse_top(mut self) -> Result<Bracketing> {
        let items = self.parse_items()?;
        if self.pos < self.chars.len() {
            return Err(self.err(self.pos + 1, "unmatched ')'"));
        }
        match items.len() {
            0 => Err(self.err(1, "empty bracketing")),
            1 => match items.into_iter().next() {
                Some(Bracketing::Letter) => Ok(Bracketing::Letter),
                Some(group) if self.lenient => Ok(group),
                _ => Err(self.err(1, "outer brackets must be omitted")),
            },
            _ => Ok(Bracketing::Group(items)),
        }
    }

    /// Reads children until a `)` or the end of input.
    fn parse_items(&mut self) -> Result<Vec<Bracketing>> {
        let mut items = Vec::new();
        while let Some(&c) = self.chars.get(self.pos) {
            match c {
                'x' => {
                    items.push(Bracketing::Letter);
                    self.pos += 1;
                }
                '(' => {
                    let open = self.pos + 1;
                    self.pos += 1;
                    let inner = self.parse_items()?;
                    if self.chars.get(self.pos) != Some(&')') {
                        return Err(self.err(open, "unclosed '('"));
                    }
                    self.pos += 1;
                    match inner.len() {
                        0 => return Err(self.err(open, "empty brackets")),
                        1 if self.lenient => items.extend(inner),
                        1 => return Err(self.err(open, "brackets must enclose at least two parts")),
                        _ => items.push(Bracketing::Group(inner)),
                    }
                }
                ')' => break,
                other => {
                    return Err(self.err(
                        self.pos + 1,
                        format!("unexpected character {other:?}, expected 'x', '(' or ')'"),
                    ))
                }
            }
        }
        Ok(items)
    }
}

/// Balanced-parentheses code of an HVG from distinct data.
///
/// With non-nested vertices `i_1 < ⋯ < i_k`, the word is
/// `[ψ(G[i_1+1, i_2])] ⋯ [ψ(G[i_{k-1}+1, i_k])]` and `ψ(P_1)` is empty.
pub fn psi(g: &Graph) -> Result<ParenString> {
    if !g.is_hvg() || !is_distinct_realizable_unchecked(g) {
        return Err(HvgError::Domain(format!(
            "{g} is not an HVG of a sequence with distinct entries"
        )));
    }
    let mut out = String::with_capacity(2 * (g.n() - 1));
    psi_into(g, &mut out);
    Ok(ParenString(out))
}

fn psi_into(g: &Graph, out: &mut String) {
    if g.n() == 1 {
        return;
    }
    let nn = g.non_nested();
    for w in nn.windows(2) {
        out.push('[');
        psi_into(&g.interval(w[0] + 1, w[1]), out);
        out.push(']');
    }
}

/// Inverse of [`psi`]: the one-sum of `overline(ψ⁻¹(B_j))` over the blocks,
/// where `overline(h)` prepends a vertex adjacent to every non-nested vertex
/// of `h`.
pub fn psi_inv(b: &ParenString) -> Graph {
    psi_inv_str(b.as_str())
}

fn psi_inv_str(s: &str) -> Graph {
    let mut acc = single_vertex();
    for block in top_level_blocks(s) {
        acc = acc.one_sum(&overline(&psi_inv_str(block)));
    }
    acc
}

fn single_vertex() -> Graph {
    Graph::from_sorted_unchecked(1, Vec::new())
}

fn overline(h: &Graph) -> Graph {
    let mut edges = vec![(1, 2)];
    edges.extend(h.non_nested().into_iter().map(|i| (1, i + 1)));
    edges.extend(h.edges().iter().map(|&(a, b)| (a + 1, b + 1)));
    Graph::new(h.n() + 1, edges).expect("shifted edges stay in range")
}

/// HVG on `len + 1` vertices encoded by a bracketing of `len` letters.
///
/// Each child of the top level contributes a one-summand: a letter is an
/// edge, a bracketed child is its own image plus the edge spanning it.
pub fn xi(b: &Bracketing) -> Graph {
    match b {
        Bracketing::Letter => Graph::from_sorted_unchecked(2, vec![(1, 2)]),
        Bracketing::Group(children) => {
            let mut acc = single_vertex();
            for c in children {
                let part = match c {
                    Bracketing::Letter => xi(c),
                    Bracketing::Group(_) => {
                        let h = xi(c);
                        let n = h.n();
                        h.flip_edge(1, n)
                    }
                };
                acc = acc.one_sum(&part);
            }
            acc
        }
    }
}

/// Inverse of [`xi`]: splits at the non-nested vertices; a gap of one is a
/// letter, a longer gap is a bracketed child decoded after removing the
/// edge that spans it.
pub fn xi_inv(g: &Graph) -> Result<Bracketing> {
    let n = g.n();
    if n < 2 {
        return Err(HvgError::Domain(
            "a bracketing needs at least two vertices".into(),
        ));
    }
    if !g.is_hvg() {
        return Err(HvgError::Domain(format!("{g} is not an HVG")));
    }
    if n == 2 {
        return Ok(Bracketing::Letter);
    }
    if g.has_edge(1, n) {
        return Err(HvgError::Domain(format!("edge {{1, {n}}} is present")));
    }
    Ok(xi_inv_group(g))
}

fn xi_inv_group(g: &Graph) -> Bracketing {
    let nn = g.non_nested();
    let children = nn
        .windows(2)
        .map(|w| {
            if w[1] == w[0] + 1 {
                Bracketing::Letter
            } else {
                let h = g.interval(w[0], w[1]);
                let last = h.n();
                xi_inv_group(&h.flip_edge(1, last))
            }
        })
        .collect();
    Bracketing::Group(children)
}

/// Adds `{1, n}` if absent, removes it otherwise.
pub fn toggle_top_edge(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n < 3 {
        return Err(HvgError::Domain(
            "toggling {1, n} needs at least three vertices".into(),
        ));
    }
    if !g.is_hvg() {
        return Err(HvgError::Domain(format!("{g} is not an HVG")));
    }
    Ok(g.flip_edge(1, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_naive;

    fn ten() -> Graph {
        build_naive(&[10, 6, 2, 4, 5, 8, 9, 1, 3, 7]).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&Graph::path(1).unwrap()).unwrap().as_str(), "");
        assert_eq!(psi(&ten()).unwrap().as_str(), "[[[][][]][]][[][]]");
        assert_eq!(psi(&Graph::path(5).unwrap()).unwrap().as_str(), "[][][][]");
    }

    #[test]
    fn psi_domain() {
        let c4 = build_naive(&[3, 1, 1, 4]).unwrap();
        assert!(matches!(psi(&c4), Err(HvgError::Domain(_))));
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(psi_inv(&ParenString::empty()), Graph::path(1).unwrap());
        assert_eq!(
            psi_inv(&ParenString::parse("[]").unwrap()),
            Graph::path(2).unwrap()
        );
        let word = ParenString::parse("[[[][][]][]][[][]]").unwrap();
        assert_eq!(psi_inv(&word), ten());
    }

    #[test]
    fn paren_parsing() {
        assert!(ParenString::parse("[[]][]").is_ok());
        assert_eq!(
            ParenString::parse("[]]"),
            Err(HvgError::Parse {
                line: 1,
                column: 3,
                message: "unmatched ']'".into()
            })
        );
        assert!(matches!(
            ParenString::parse("[["),
            Err(HvgError::Parse { column: 3, .. })
        ));
        assert!(matches!(
            ParenString::parse("[x]"),
            Err(HvgError::Parse { column: 2, .. })
        ));
        assert_eq!(
            ParenString::parse("[[]][]").unwrap().blocks(),
            vec!["[]", ""]
        );
    }

    #[test]
    fn paren_generation_counts() {
        let counts: Vec<usize> = (0..8).map(|m| ParenString::all(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&Bracketing::Letter), Graph::path(2).unwrap());
        assert_eq!(
            xi(&Bracketing::parse("xx").unwrap()),
            Graph::path(3).unwrap()
        );
        assert_eq!(
            xi(&Bracketing::trivial(6).unwrap()),
            Graph::path(7).unwrap()
        );

        let b = Bracketing::parse("(xx)((xxx)x(xx))").unwrap();
        let g = xi(&b);
        let p9 = Graph::path(9).unwrap();
        let extra: Vec<_> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| !p9.has_edge(e.0, e.1))
            .collect();
        assert_eq!(extra, vec![(1, 3), (3, 6), (3, 9), (7, 9)]);
        assert!(g.is_hvg());
        assert!(!g.has_edge(1, 9));
        assert_eq!(xi_inv(&g).unwrap(), b);
    }

    #[test]
    fn xi_inverse_of_paths() {
        for n in 2..9 {
            let b = xi_inv(&Graph::path(n).unwrap()).unwrap();
            assert!(b.is_trivial());
            assert_eq!(b.len(), n - 1);
        }
    }

    #[test]
    fn xi_inverse_domain() {
        let tri = build_naive(&[2, 1, 2]).unwrap();
        assert!(matches!(xi_inv(&tri), Err(HvgError::Domain(_))));
        assert!(matches!(
            xi_inv(&Graph::path(1).unwrap()),
            Err(HvgError::Domain(_))
        ));
    }

    #[test]
    fn bracket_parsing() {
        for s in ["x", "xx", "(xx)x", "x(xx)", "(xx)((xxx)x(xx))", "((xx)x)x"] {
            assert_eq!(Bracketing::parse(s).unwrap().to_string(), s);
        }
        for (s, col) in [
            ("(x)x", 1),
            ("x(x)", 2),
            ("(xx)", 1),
            ("((xx))x", 1),
            ("", 1),
            ("x)", 2),
            ("(xx", 1),
            ("xyx", 2),
            ("()x", 1),
        ] {
            match Bracketing::parse(s) {
                Err(HvgError::Parse { column, .. }) => assert_eq!(column, col, "{s}"),
                other => panic!("{s}: {other:?}"),
            }
        }
        assert_eq!(Bracketing::parse_lenient("(x)x").unwrap().to_string(), "xx");
        assert_eq!(Bracketing::parse_lenient("(xx)").unwrap().to_string(), "xx");
        assert_eq!(
            Bracketing::parse_lenient("((xx))x").unwrap().to_string(),
            "(xx)x"
        );
    }

    #[test]
    fn bracket_generation_counts() {
        let counts: Vec<usize> = (1..=8).map(|len| Bracketing::all(len).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 11, 45, 197, 903, 4279]);
        for len in 1..=6 {
            for b in Bracketing::all(len) {
                assert_eq!(b.len(), len);
                assert_eq!(Bracketing::parse(&b.to_string()).unwrap(), b);
            }
        }
    }

    #[test]
    fn toggling() {
        let tri = build_naive(&[2, 1, 2]).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert_eq!(toggle_top_edge(&tri).unwrap(), p3);
        assert_eq!(toggle_top_edge(&p3).unwrap(), tri);
        assert!(toggle_top_edge(&Graph::path(2).unwrap()).is_err());
    }
}
