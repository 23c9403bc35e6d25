//! Bracketings, HVGs without the long edge, and the top-edge toggle.

use hvg::enumerate::{enumerate_all_bijective, schroder_large, schroder_little};
use hvg::{toggle_top_edge, xi, xi_inv, Bracketing};

fn main() -> hvg::Result<()> {
    let b = Bracketing::parse("(xx)((xxx)x(xx))")?;
    let g = xi(&b);
    println!("{b}\n  -> {g}");
    assert_eq!(xi_inv(&g)?, b);
    println!("  toggled: {}", toggle_top_edge(&g)?);

    println!();
    for b in Bracketing::all(4) {
        println!("{:<10} {}", b.to_string(), xi(&b));
    }

    // redundant brackets are rejected unless asked to normalize
    assert!(Bracketing::parse("((x)x)x").is_err());
    println!(
        "\nlenient ((x)x)x -> {}",
        Bracketing::parse_lenient("((x)x)x")?
    );

    println!();
    for n in 2..=10 {
        let c = enumerate_all_bijective(n)?;
        println!(
            "n={n:<3} graphs={:<7} r={:<7} s={}",
            c.len(),
            schroder_large(n - 2),
            schroder_little(n - 2)
        );
    }
    Ok(())
}
