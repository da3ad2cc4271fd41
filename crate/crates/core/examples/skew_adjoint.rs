//! Skew-adjoint companion: same c-entropy, and its coupling with the original
//! doubles the entropy.

use livsic::analysis::c_entropy;
use livsic::coupling::{self_skew_coupling, self_skew_impedance_closed};
use livsic::elementary::{make_elementary, make_skew_adjoint};
use livsic::num::{c64, partial_fractions_real_poles};

pub fn run() -> livsic::Result<()> {
    let l = c64(1.0, 1.0);
    let s = c_entropy(&make_elementary(l)?.system)?;
    let skew = make_skew_adjoint(l)?;
    println!("W×(z) = {}", skew.transfer());
    println!("S(Θ) = {s}, S(Θ×) = {}", c_entropy(&skew.system)?);

    let sc = c_entropy(&self_skew_coupling(l)?.system)?;
    let d = s.dissipation();
    println!("S(Θ·Θ×) = {sc}, 2S = {:.12}", 2.0 * s.value());
    println!("D(Θ·Θ×) = {:.12}, 2D − D² = {:.12}", sc.dissipation(), 2.0 * d - d * d);

    let v = self_skew_impedance_closed(l)?;
    println!("V(z) = {v}");
    for atom in partial_fractions_real_poles(&v)?.atoms() {
        println!("  atom at {:.12} with weight {:.12}", atom.location, atom.weight);
    }
    Ok(())
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
