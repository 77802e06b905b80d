// Continued fractions of m/q + √v, with the period read back as a matrix.
//
// cargo run --example expand_surd

use surd_equiv::{apply_moebius, make_surd, Error, Mat2};

pub fn run_example() -> Result<(), Error> {
    for (m, q, v) in [(1, 12, 7), (5, 12, 7), (1, 12, 979), (5, 12, 979), (0, 1, 2)] {
        let x = make_surd(m, q, v)?;
        let e = x.expand();
        println!("{m}/{q} + sqrt({v}) = {e}   (period length {})", e.period().len());

        // the period fixes the purely periodic tail
        let tail = x.complete_quotient(e.preperiod().len());
        let period = e
            .period()
            .iter()
            .fold(Mat2::identity(), |acc, a| acc.mul(&Mat2::partial_quotient(a.clone())));
        assert_eq!(apply_moebius(&period, &tail)?, tail);

        println!("    discriminant {}", x.discriminant());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Error> {
    run_example()
}
