//! Two-variable Alexander polynomials of 2-bridge links.

use knotstab::families::EvenCF;
use knotstab::multivar::{alexander_xy, hstable_probe, inversive_check, linking_number, specialize, Mode};

fn run() -> knotstab::Result<()> {
    for s in ["[4,2,-2]", "[2,-2,2,2,-2]", "[4,4,-4]"] {
        let cf: EvenCF = s.parse()?;
        let d = alexander_xy(&cf)?;
        println!("{s}: Delta(x,y) = {d}");
        println!("  lk = {}", linking_number(&cf)?);
        println!("  (t-1)Delta(t,t) = {}", specialize(&d, Mode::Diag)?);
        println!("  Delta(t,1/t)    = {}", specialize(&d, Mode::Reversed)?);
        println!("  {:?}", inversive_check(&cf)?);
        println!("  probe: {:?}", hstable_probe(&d.normalize_units(), 500, 0));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
