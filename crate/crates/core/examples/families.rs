//! Recursively defined families: X_n, Y_n, Salem D_{m,n} and the two
//! vertical/horizontal families with mixed zeros.

use knotstab::families::{appc_horizontal, salem_cf, salem_dmn, xn_alexander, xn_recursion, yn_bundle};
use knotstab::stability::{classify, max_abs_real_zero};

fn run() -> knotstab::Result<()> {
    for n in 1..=5 {
        let g = xn_recursion(n);
        assert_eq!(g, xn_alexander(&vec![1; n], &vec![-1; n])?);
        let r = classify(&g)?;
        println!("X_{n}: delta_max = {:.3}", r.delta_max.unwrap().mid_f64());
    }
    for n in 1..=4 {
        let b = yn_bundle(n)?;
        println!("Y_{n}: g = {}", b.g);
    }
    for (m, n) in [(5, 0), (3, 2)] {
        let d = salem_dmn(m, n)?;
        let mu = max_abs_real_zero(&salem_cf(m as usize, n as usize).alexander())?.unwrap();
        println!("D_{{{m},{n}}} = {d}, mu = {mu:.5}");
    }
    for n in 1..=4 {
        let r = classify(&appc_horizontal(n)?)?;
        println!("horizontal n={n}: {} real={} other={}", r.verdict, r.n_real, r.n_other);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
