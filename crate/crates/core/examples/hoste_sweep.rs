//! Sweep short continued fractions and check the zero-location bounds,
//! writing the rows as CSV to stdout.

use knotstab::cli::{run_sweep, write_csv, Family, SweepSpec};

fn run() -> knotstab::Result<()> {
    let mut spec = SweepSpec::new(Family::CfEnum);
    spec.max_len = 3;
    spec.max_coef = 4;
    let rows = run_sweep(&spec)?;
    let failures = rows.iter().filter(|r| !r.hoste_ok).count();
    write_csv(&rows[..8], &mut std::io::stdout())?;
    println!("{} rows, {failures} with a zero of real part <= -1", rows.len());
    Ok(())
}

fn main() {
    run().unwrap();
}
