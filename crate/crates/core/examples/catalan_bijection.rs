//! Distinct-data HVGs and balanced parentheses.

use hvg::enumerate::{catalan, enumerate_distinct_bijective};
use hvg::{build_naive, psi, psi_inv, ParenString};

fn main() -> hvg::Result<()> {
    let g = build_naive(&[10, 6, 2, 4, 5, 8, 9, 1, 3, 7])?;
    let word = psi(&g)?;
    println!("{g}\n  -> {word}");
    assert_eq!(psi_inv(&word), g);

    println!();
    for w in ParenString::all(3) {
        println!("{:<8} {}", w.as_str(), psi_inv(&w));
    }

    println!();
    for n in 1..=12 {
        let c = enumerate_distinct_bijective(n)?;
        println!(
            "n={n:<3} graphs={:<7} C_{}={}",
            c.len(),
            n - 1,
            catalan(n - 1)
        );
    }
    Ok(())
}
