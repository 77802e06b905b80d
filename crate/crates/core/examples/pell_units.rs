// Fundamental units of Z[√v] and the data k0, q0 that govern a family m/q + √v.
//
// cargo run --example pell_units

use surd_equiv::{fundamental_unit, pell, Error};

pub fn run_example() -> Result<(), Error> {
    for v in [2, 7, 13, 61, 979] {
        println!("v = {v}: {}", fundamental_unit(v)?);
    }

    let eps = fundamental_unit(7)?;
    println!("(8 + 3 sqrt 7)^2 = {}", eps.pow(2));
    println!("(8 + 3 sqrt 7)^4 = {}", eps.pow(4));

    for (v, q) in [(7, 12), (979, 12), (979, 9)] {
        let d = pell::unit_group_data(v, q)?;
        println!(
            "v = {v}, q = {q}: k0 = {}, c0 mod q^2 = {}, q0 = {}",
            d.k0, d.c0_mod, d.q0
        );
        for q1 in surd_equiv::arith::divisors(q) {
            match pell::solution_from_data(&d, q1)? {
                Some(u) => println!("    gcd(c, q^2) = q*{q1}: ({}, {})", u.r(), u.c()),
                None => println!("    gcd(c, q^2) = q*{q1}: none"),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Error> {
    run_example()
}
