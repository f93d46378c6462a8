//! The star transform exchanges stable and c-stable reciprocal polynomials.

use knotstab::moebius::star_transform;
use knotstab::polyring::IntPoly;
use knotstab::stability::classify;

fn run() -> knotstab::Result<()> {
    for c in [&[1, -3, 1][..], &[1, -1, 1, -1, 1], &[1, -1, 0, 1, 0, -1, 1], &[1, -7, 13, -7, 1]] {
        let f = IntPoly::from_desc(c);
        let s = star_transform(&f)?;
        let (a, b) = (classify(&f)?, classify(&s)?);
        println!("{f:<24} {:<16} -> {s:<36} {}", a.verdict, b.verdict);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
