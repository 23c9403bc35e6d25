//! Reconstruct a graph from its ordered degree sequence and print the
//! reduction protocol.
//!
//! cargo run --example degree_reconstruction -- 2 3 2 5 2 2

use hvg::degrees::reconstruct;
use hvg::{build_naive, DegreeSequence};

fn main() -> hvg::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("non-negative integers only"))
        .collect();
    let deltas = DegreeSequence::new(if args.is_empty() {
        vec![2, 3, 2, 5, 2, 2]
    } else {
        args
    })?;

    let (g, trace) = reconstruct(&deltas)?;
    println!("degrees {deltas}");
    for step in &trace.steps {
        let [(a, b), (c, d)] = step.edges;
        println!("  strip vertex {:>2}: edges {a}-{b}, {c}-{d}", step.removed);
    }
    println!("  chain through {:?}", trace.chain);
    println!("graph   {g}");

    // the same sequence can belong to several HVGs once ties are allowed
    let a = build_naive(&[3, 2, 2, 1, 2, 2, 3])?;
    let b = build_naive(&[2, 1, 2, 2, 2, 1, 2])?;
    println!();
    println!("{a}\n{b}\nboth have degrees {}", a.degree_sequence());
    println!(
        "reconstruction picks {}",
        hvg::from_degree_sequence(&a.degree_sequence())?
    );
    Ok(())
}
