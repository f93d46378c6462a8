//! Riley and dihedral representation polynomials.

use knotstab::families::Fraction;
use knotstab::reppoly::{dihedral_phi, riley_theta, riley_zero_check};

fn run() -> knotstab::Result<()> {
    for (b, a) in [(2, 5), (5, 7), (9, 16), (1, 4), (3, 10)] {
        let r = Fraction::new(b, a)?;
        println!("theta_{r} = {}", riley_theta(&r)?);
    }
    println!("torus zero lists hold for n <= 8: {}", (1..=8).all(riley_zero_check));
    for p in [3, 5, 7, 9, 11] {
        println!("phi_{p} = {}", dihedral_phi(p)?);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
