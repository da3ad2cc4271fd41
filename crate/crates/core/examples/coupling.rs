//! Couple two elementary systems and check the product rule and κ multiplicativity.

use livsic::analysis::classify_at_i;
use livsic::coupling::{couple, coupling_impedance_closed, coupling_transfer_closed};
use livsic::elementary::make_elementary;
use livsic::lsystem::{impedance_eval, transfer_eval, LSystem};
use livsic::num::{c64, I};

fn kappa(sys: &LSystem) -> livsic::Result<Option<f64>> {
    Ok(classify_at_i(impedance_eval(sys, I)?, 1e-9)?.kappa)
}

pub fn run() -> livsic::Result<()> {
    let (l, m) = (c64(0.0, 0.5), c64(0.0, 0.5));
    let s1 = make_elementary(l)?.system;
    let s2 = make_elementary(m)?.system;
    let coupled = couple(&s1, &s2)?;
    println!("T =\n{}", coupled.system.main());

    let z = c64(0.7, -1.2);
    let product = transfer_eval(&s1, z)? * transfer_eval(&s2, z)?;
    println!("W(z) = {} , W₁(z)W₂(z) = {product}", transfer_eval(&coupled.system, z)?);
    println!("closed-form W = {}", coupling_transfer_closed(l, m)?);
    println!("closed-form V = {}", coupling_impedance_closed(l, m)?);

    println!(
        "κ₁ = {:?}, κ₂ = {:?}, κ = {:?}",
        kappa(&s1)?,
        kappa(&s2)?,
        kappa(&coupled.system)?
    );
    Ok(())
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
