//! Classify elementary systems and Foster-form functions into Donoghue classes.

use livsic::analysis::classify_elementary;
use livsic::circuit::{classify_foster, FosterSpec, FosterStage};
use livsic::num::c64;

pub fn run() -> livsic::Result<()> {
    for l in [c64(0.0, 1.0), c64(0.0, 0.3), c64(0.0, 3.0), c64(1.0, 1.0)] {
        let c = classify_elementary(l)?;
        match c.kappa {
            Some(k) => println!("λ₀ = {l}: {} with κ = {k:.6}", c.class),
            None => println!("λ₀ = {l}: {} (V(i) has a nonzero real part)", c.class),
        }
    }

    let spec = FosterSpec {
        a0: 1.0,
        stages: vec![FosterStage { a: 2.0, b: 1.0 }],
    };
    let c = classify_foster(&spec)?;
    println!("a₀ = 1, one stage (2, 1): a = {}, class {}", c.a, c.class);
    Ok(())
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
