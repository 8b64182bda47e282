//! Index tables of the partition map for a few factorizations of N.
//!
//! `cargo run --example partition_map`

use hidden_correlations::partition::{Factorization, QuditSplit};

fn main() -> hidden_correlations::Result<()> {
    for dims in [vec![2, 2], vec![3, 2], vec![2, 3, 2]] {
        let f = Factorization::new(dims)?;
        println!("N = {} as {:?}", f.total(), f.dims());
        for y in 1..=f.total() {
            let x = f.decompose(y)?;
            assert_eq!(f.compose(x.coords())?, y);
            println!("  y = {y:2} <-> x = {:?}", x.coords());
        }
    }

    let split = QuditSplit::new(Factorization::parse("2,3,2")?, 1)?;
    println!(
        "split after axis {}: left block dim {}, right block dim {}",
        split.s(),
        split.dim_left(),
        split.dim_right()
    );
    for y in [1, 2, 7, 12] {
        let (a, b) = split.split_index(y)?;
        println!("  y = {y:2} -> (a, b) = ({a}, {b})");
    }
    Ok(())
}
