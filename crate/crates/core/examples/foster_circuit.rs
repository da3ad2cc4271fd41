//! Foster synthesis: from a Herglotz function in Foster form to an LC netlist.

use livsic::circuit::{
    foster_to_herglotz, measure_atoms, positive_real_z, skew_coupling_circuit, skew_coupling_foster,
    synthesize, FosterSpec, FosterStage,
};
use livsic::coupling::self_skew_impedance_closed;
use livsic::num::c64;

pub fn run() -> livsic::Result<()> {
    let spec = FosterSpec {
        a0: 0.5,
        stages: vec![FosterStage { a: 2.0, b: 1.0 }, FosterStage { a: 1.0, b: 3.0 }],
    };
    println!("M(z) = {}", foster_to_herglotz(&spec)?);
    let atoms = measure_atoms(&spec)?;
    println!("measure mass at i = {}, first moment = {:e}", atoms.mass_at_i(), atoms.first_moment());
    println!("Z(p) = {}", positive_real_z(&spec)?);

    let net = synthesize(&spec)?;
    print!("{}", net.emit());
    for (k, lc) in net.stages.iter().enumerate() {
        println!("stage {} resonates at {}", k + 1, lc.resonance());
    }

    let l = c64(1.0, 1.0);
    let lc = skew_coupling_circuit(l)?;
    println!("Θ·Θ× block: L = {}, C = {}, ω = {}", lc.stages[0].inductance, lc.stages[0].capacitance, lc.stages[0].resonance());
    let exact = foster_to_herglotz(&skew_coupling_foster(l)?)?;
    println!("Foster data reproduces V: {}", exact.approx_eq(&self_skew_impedance_closed(l)?, 1e-12));
    Ok(())
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
