// How the numbers m/q + √v, 0 <= m < q, split into equivalence classes.
//
// cargo run --example equivalence_classes

use surd_equiv::{Error, Family};

pub fn run_example() -> Result<(), Error> {
    for (v, q) in [(979, 12), (979, 9), (7, 12), (3, 8), (46, 11)] {
        let family = Family::new(v, q)?;
        let report = family.class_summary();
        println!(
            "v = {v}, q = {q}: q0 = {}, {} classes of {}",
            report.q0, report.num_classes, report.class_size
        );
        for class in &report.classes {
            let lengths: Vec<usize> = class
                .iter()
                .map(|&m| family.member(m as i64).expand().period().len())
                .collect();
            println!("    {class:?}  period lengths {lengths:?}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Error> {
    run_example()
}
