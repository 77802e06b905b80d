// Explicit GL(2, Z) matrices carrying one member of a class to another.
//
// cargo run --example witness_matrix

use surd_equiv::oracle::verify_matrix;
use surd_equiv::{apply_moebius, make_surd, Error, Family, Mat2};

pub fn run_example() -> Result<(), Error> {
    let x = make_surd(1, 12, 7)?;
    let y = make_surd(5, 12, 7)?;

    let known = Mat2::new(37337, 95673, 12192, 31241);
    let image = apply_moebius(&known, &x)?;
    println!("{known} sends 1/12 + sqrt 7 to {image} = 5/12 + sqrt 7: {}", image == y);
    assert!(verify_matrix(&known, &x, &y));

    let family = Family::new(7, 12)?;
    for (m, n) in [(1, 5), (5, 1), (7, 11), (1, 1), (13, -7)] {
        let w = family.witness_matrix(m, n)?;
        let ok = verify_matrix(&w, &family.member(m), &family.member(n));
        println!("{m}/12 -> {n}/12: det {}, verified {ok}\n    {w}", w.det());
        assert!(ok);
    }

    match family.witness_matrix(1, 7) {
        Err(e) => println!("1/12 -> 7/12: {e}"),
        Ok(_) => unreachable!("1/12 + sqrt 7 and 7/12 + sqrt 7 lie in different classes"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Error> {
    run_example()
}
