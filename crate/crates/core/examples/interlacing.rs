//! Interlacing of real zeros and of unit-circle zeros.

use knotstab::families::EvenCF;
use knotstab::interlace::{interlaced_real, interlaced_unit, proper_position};

fn alex(s: &str) -> knotstab::Result<knotstab::polyring::IntPoly> {
    Ok(s.parse::<EvenCF>()?.alexander())
}

fn run() -> knotstab::Result<()> {
    let f = alex("[4,-2,2,-6,4,-2]")?;
    let g = alex("[4,-2,2,-6,4]")?;
    println!("{f} vs {g}: {:?}", interlaced_real(&f, &g)?);
    println!("proper position: {:?}", proper_position(&f, &g)?);

    let f = alex("[10,2,-2,-10]")?;
    let g = alex("[10,2,-2]")?;
    println!("{f} vs {g}: interlaced = {}", interlaced_real(&f, &g)?.interlaced);

    let f = alex("[2,2,2]")?;
    let g = alex("[2,2]")?;
    println!("{f} vs {g} on the circle: {:?}", interlaced_unit(&f, &g)?);
    Ok(())
}

fn main() {
    run().unwrap();
}
