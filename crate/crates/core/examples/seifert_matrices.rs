//! Seifert matrices for 2-bridge knots, split-type X_n and a Montesinos link.

use knotstab::families::EvenCF;
use knotstab::polyring::normalize_alexander;
use knotstab::seifert::{
    alexander_poly, seifert_2bridge, seifert_montesinos, seifert_split, signature, stabilize_twists, twisted, CfForm,
    MontesinosSpec, SplitSpec,
};

fn run() -> knotstab::Result<()> {
    let cf: EvenCF = "[2,-2,-8,2]".parse()?;
    let m = seifert_2bridge(&cf, CfForm::TwistedChain)?;
    println!("{cf}: M = {m}");
    println!("  Delta = {}", normalize_alexander(&alexander_poly(&m), Some(cf.sign_product()))?);
    println!("  signature = {}", signature(&m));

    let x2 = seifert_split(&SplitSpec::xn(&[1, 1], &[-1, -1])?)?;
    println!("X_2: Delta = {}", normalize_alexander(&alexander_poly(&x2), None)?);

    let spec = MontesinosSpec { e: 1, tangles: vec!["[2]".parse()?, "[2,-2]".parse()?, "[2,-2]".parse()?] };
    let mm = seifert_montesinos(&spec)?;
    println!("Montesinos: size {}, Delta = {}", mm.size(), normalize_alexander(&alexander_poly(&mm), None)?);

    let s = seifert_2bridge(&"[2,-2]".parse()?, CfForm::TwistedChain)?;
    let k = stabilize_twists(&s);
    let t = twisted(&s, &k);
    println!("twists {k:?} make M + M^T positive definite; signature {}", signature(&t));
    Ok(())
}

fn main() {
    run().unwrap();
}
