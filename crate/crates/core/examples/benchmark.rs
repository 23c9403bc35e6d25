//! Naive against stack-based construction on random walks and on the
//! decreasing-then-spike worst case.
//!
//! cargo run --release --example benchmark

use hvg::cli::{bench, BenchInput, BenchOptions};

fn main() -> hvg::Result<()> {
    let walk = BenchOptions {
        min_n: 10_000,
        max_n: 320_000,
        repetitions: 3,
        seed: 7,
        input: BenchInput::RandomWalk,
        naive_max: 80_000,
    };
    print!("{}", bench(&walk)?);
    println!();
    let worst = BenchOptions {
        min_n: 1_000,
        max_n: 16_000,
        repetitions: 1,
        input: BenchInput::Adversarial,
        naive_max: 16_000,
        ..walk
    };
    print!("{}", bench(&worst)?);
    Ok(())
}
