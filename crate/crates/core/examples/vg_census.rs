//! Randomized count of natural visibility graphs, with the HVG count for
//! comparison.
//!
//! cargo run --release --example vg_census -- 200000

use hvg::cli::vg_census;
use hvg::enumerate::enumerate_all_bruteforce;

fn main() -> hvg::Result<()> {
    let trials: u64 = std::env::args()
        .nth(1)
        .map_or(200_000, |a| a.parse().expect("a trial count"));
    println!("{:>3} {:>6} {:>6} {:>10}", "n", "vgs", "hvgs", "last new");
    for n in 1..=7 {
        let vg = vg_census(n, trials, 42, 1_000)?;
        let hvgs = enumerate_all_bruteforce(n)?.len();
        println!("{n:>3} {:>6} {:>6} {:>10}", vg.distinct, hvgs, vg.last_new);
    }
    println!("(randomized; larger n need more trials)");
    Ok(())
}
