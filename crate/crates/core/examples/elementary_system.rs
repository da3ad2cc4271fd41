//! Build the elementary system for λ₀ and compare its resolvent evaluation
//! with the closed-form transfer and impedance functions.

use livsic::elementary::make_elementary;
use livsic::lsystem::{impedance_eval, transfer_eval, validate, TAU_COLLIGATION};
use livsic::num::{c64, cayley_w_to_v};

pub fn run() -> livsic::Result<()> {
    let theta = make_elementary(c64(1.0, 1.0))?;
    let report = validate(&theta.system, TAU_COLLIGATION);
    println!("colligation residual {:e} (threshold {:e})", report.residual, report.threshold);

    let w = theta.transfer();
    let v = theta.impedance();
    println!("W(z) = {w}");
    println!("V(z) = {v}");

    for z in [c64(0.5, -0.3), c64(-1.0, 2.0), c64(3.0, 0.0)] {
        println!(
            "z = {z}: W {} vs {}, V {} vs {}",
            transfer_eval(&theta.system, z)?,
            w.eval(z)?,
            impedance_eval(&theta.system, z)?,
            v.eval(z)?
        );
    }

    let from_w = cayley_w_to_v(&w)?;
    println!("V recovered from W agrees: {}", from_w.approx_eq(&v, 1e-12));
    Ok(())
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
