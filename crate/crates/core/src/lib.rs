//! Horizontal visibility graphs (HVGs).
//!
//! An HVG is the graph on vertices `1..=N` built from a data sequence
//! `d_1, …, d_N`: vertices `i < j` are adjacent iff every strictly
//! intermediate value lies strictly below both `d_i` and `d_j`.
//!
//! The crate covers
//!
//! - the labeled [`Graph`] value type with the structural statistics used
//!   throughout (nesting degree, non-nested vertices, one-sums),
//! - construction from sequences, both definitional and with a monotone
//!   stack ([`construct`]), including ordinary visibility graphs,
//! - realization of a graph by a data sequence ([`realize`]),
//! - reconstruction from the ordered degree sequence ([`degrees`]),
//! - bijections with balanced parentheses and bracketings ([`bijections`]),
//! - exhaustive and bijective enumeration with exact Catalan and Schröder
//!   arithmetic ([`enumerate`]),
//! - the command line front end used by the `hvg` binary ([`cli`]).
//!
//! Vertices are 1-based everywhere.
//!
//! ```
//! use hvg::{build_fast, standard_sequence, psi};
//!
//! let g = build_fast(&[4, 3, 1, 2, 7, 5, 6]).unwrap();
//! assert_eq!(standard_sequence(&g).unwrap(), vec![7, 4, 1, 2, 6, 3, 5]);
//! assert_eq!(psi(&g).unwrap().as_str(), "[[[][]]][[]]");
//! ```

pub mod bijections;
pub mod cli;
pub mod construct;
pub mod degrees;
pub mod enumerate;
mod error;
pub mod graph;
pub mod realize;

pub use bijections::{psi, psi_inv, toggle_top_edge, xi, xi_inv, Bracketing, ParenString};
pub use construct::{build_fast, build_naive, build_vg, rank_normalize, TimedSequence};
pub use degrees::{from_degree_sequence, select_removable_two, DegreeSequence, ReductionTrace};
pub use enumerate::Census;
pub use error::{HvgError, Result};
pub use graph::{Edge, Graph, NestingProfile};
pub use realize::{is_distinct_realizable, nesting_realization, standard_sequence};
