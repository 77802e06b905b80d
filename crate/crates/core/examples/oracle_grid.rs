// Cross-checks every decision against the continued-fraction oracles on a grid.
//
// cargo run --release --example oracle_grid

use surd_equiv::arith::is_perfect_square;
use surd_equiv::oracle::{cross_check, CrossCheck};
use surd_equiv::Error;

pub fn run_example() -> Result<(), Error> {
    let mut total = CrossCheck::default();
    for v in (2..=30u64).filter(|&v| !is_perfect_square(&v.into())) {
        for q in 1..=10 {
            total.merge(cross_check(v, q, None)?);
        }
    }
    println!(
        "{} pairs, {} witness matrices, {} disagreements",
        total.pairs,
        total.witnesses,
        total.disagreements.len()
    );
    assert!(total.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Error> {
    run_example()
}
