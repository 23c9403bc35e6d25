//! Recover data sequences from graphs.

use hvg::{build_naive, is_distinct_realizable, nesting_realization, standard_sequence, Graph};

fn show(name: &str, g: &Graph) -> hvg::Result<()> {
    println!("{name}: {g}");
    let nest = nesting_realization(g);
    println!("  nesting realization  {nest:?}");
    assert_eq!(&build_naive(&nest)?, g);
    if is_distinct_realizable(g)? {
        let std = standard_sequence(g)?;
        println!("  standard sequence    {std:?}");
        assert_eq!(&build_naive(&std)?, g);
    } else {
        println!("  no realization with distinct values");
    }
    Ok(())
}

fn main() -> hvg::Result<()> {
    show("HVG(4,3,1,2,7,5,6)", &build_naive(&[4, 3, 1, 2, 7, 5, 6])?)?;
    // the 4-cycle needs a tie between the inner values
    show("C4", &Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)])?)?;
    show("P5", &Graph::path(5)?)?;

    let crossing = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)])?;
    println!("crossing graph is an HVG: {}", crossing.is_hvg());
    Ok(())
}
