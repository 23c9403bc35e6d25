//! Brute-force censuses checked against the bijective ones.
//!
//! cargo run --release --example census -- 8

use std::collections::HashSet;
use std::time::Instant;

use hvg::enumerate::{
    degree_census, enumerate_all_bijective, enumerate_all_bruteforce, enumerate_distinct_bijective,
    enumerate_distinct_bruteforce, MAX_ALL_BRUTE,
};

fn main() -> hvg::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(7, |a| a.parse().expect("a vertex count"))
        .min(MAX_ALL_BRUTE);

    println!(
        "{:>3} {:>9} {:>9} {:>9} {:>10}",
        "n", "distinct", "all", "degrees", "secs"
    );
    for n in 1..=max {
        let t = Instant::now();
        let d = enumerate_distinct_bruteforce(n)?;
        let a = enumerate_all_bruteforce(n)?;
        assert!(d.same_graphs(&enumerate_distinct_bijective(n)?));
        if n >= 2 {
            assert!(a.same_graphs(&enumerate_all_bijective(n)?));
        }
        let degrees: HashSet<_> = a.iter().map(|g| g.degree_sequence()).collect();
        println!(
            "{n:>3} {:>9} {:>9} {:>9} {:>10.3}",
            d.len(),
            a.len(),
            degrees.len(),
            t.elapsed().as_secs_f64()
        );
    }
    if max >= 7 {
        let dc = degree_census(7)?;
        println!(
            "\nn=7: {} graphs share {} degree sequences",
            dc.graphs, dc.degree_sequences
        );
    }
    Ok(())
}
