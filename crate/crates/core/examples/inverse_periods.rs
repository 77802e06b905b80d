// Inverse and self-inverse periods, decided from q0 and confirmed on the expansions.
//
// cargo run --example inverse_periods

use surd_equiv::oracle::oracle_period_relation;
use surd_equiv::{Error, Family};

pub fn run_example() -> Result<(), Error> {
    let family = Family::new(979, 12)?;
    for (m, n) in [(7, 5), (11, 1), (1, 5)] {
        let decided = family.inverse_periods(m, n)?;
        let relation = oracle_period_relation(&family.member(m), &family.member(n));
        println!("{m}/12 and {n}/12 (v = 979): inverse periods {decided}, expansions say {relation:?}");
        assert_eq!(decided, relation.is_inverse());
    }

    for (v, q) in [(979, 12), (979, 9), (7, 12), (2, 5)] {
        let family = Family::new(v, q)?;
        let m = family.residues()[0] as i64;
        let e = family.member(m).expand();
        println!(
            "{m}/{q} + sqrt({v}): self-inverse period {}, period {:?}",
            family.self_inverse(m)?,
            e.period().iter().map(|a| a.to_string()).collect::<Vec<_>>()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Error> {
    run_example()
}
