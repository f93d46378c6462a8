//! Integer polynomials: normalisation, modification and coefficient shape.

use knotstab::polyring::{coeff_profile, is_reciprocal, modification, normalize_alexander, unmodify, IntPoly};

fn run() -> knotstab::Result<()> {
    // -t^3 (t^2 - 3t + 1), as a determinant might return it
    let raw = IntPoly::from_desc(&[-1, 3, -1, 0, 0, 0]);
    let p = normalize_alexander(&raw, None)?;
    println!("normalised: {p}");
    println!("reciprocal: {}", is_reciprocal(&p)?);

    let f = IntPoly::from_desc(&[1, -7, 13, -7, 1]);
    let big_f = modification(&f)?;
    println!("modification of {f}: {big_f}");
    assert_eq!(unmodify(&big_f), f);

    let prof = coeff_profile(&IntPoly::from_desc(&[1, -3, 3, -3, 3, -1]))?;
    println!("profile: {prof:?}");
    Ok(())
}

fn main() {
    run().unwrap();
}
