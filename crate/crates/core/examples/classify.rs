//! Zero classification: real, unit-circle and other zeros, counted exactly.

use knotstab::families::{appc_vertical_cf, EvenCF};
use knotstab::stability::classify;

fn run() -> knotstab::Result<()> {
    for s in ["[2,-2,-8,2]", "[8,2,-2,-8]", "[10,2,-2,-10]", "[2,2]", "[2,2,-4,-2]"] {
        let cf: EvenCF = s.parse()?;
        let p = cf.alexander();
        let r = classify(&p)?;
        println!("{s:>16}  {p:<28} {:<16} real={} unit={} other={}", r.verdict, r.n_real, r.n_unit, r.n_other);
    }
    println!();
    for k in [-2, -1, 1, 2, 3, 6, 7, 8] {
        let r = classify(&appc_vertical_cf(k)?.alexander())?;
        println!("k={k:>2}  {:<16} real={} unit={} other={}", r.verdict, r.n_real, r.n_unit, r.n_other);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
