//! Build the horizontal visibility graph of a short series and inspect it.
//!
//! cargo run --example build_hvg -- 4 3 1 2 5

use hvg::cli::{render_graph, GraphFormat};
use hvg::{build_fast, build_naive, rank_normalize};

fn main() -> hvg::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numbers only"))
        .collect();
    let data = if args.is_empty() {
        vec![4.0, 3.0, 1.0, 2.0, 5.0]
    } else {
        args
    };

    let g = build_fast(&data)?;
    assert_eq!(g, build_naive(&data)?);

    println!("data:        {data:?}");
    println!("ranks:       {:?}", rank_normalize(&data));
    println!("graph:       {g}");
    println!("degrees:     {}", g.degree_sequence());
    println!("nesting:     {:?}", g.nesting_profile().as_slice());
    println!("non-nested:  {:?}", g.non_nested());
    println!();
    println!("{}", render_graph(&g, GraphFormat::Dot));
    Ok(())
}
