//! c-entropy and dissipation of elementary systems and of their coupling.

use livsic::analysis::{c_entropy, c_entropy_elementary_closed, compose_dissipation, compose_entropy};
use livsic::coupling::couple;
use livsic::elementary::make_elementary;
use livsic::num::c64;

pub fn run() -> livsic::Result<()> {
    for l in [c64(0.0, 1.0), c64(1.0, 1.0), c64(0.0, 2.0)] {
        let s = c_entropy(&make_elementary(l)?.system)?;
        println!(
            "λ₀ = {l}: S = {s} (closed form {}), D = {:.12}",
            c_entropy_elementary_closed(l)?,
            s.dissipation()
        );
    }

    let s1 = make_elementary(c64(0.0, 2.0))?.system;
    let s2 = make_elementary(c64(0.0, 2.0))?.system;
    let (e1, e2) = (c_entropy(&s1)?, c_entropy(&s2)?);
    let ec = c_entropy(&couple(&s1, &s2)?.system)?;
    println!("coupling: S = {ec}, S₁ + S₂ = {}", compose_entropy(e1, e2));
    println!(
        "coupling: D = {:.12}, D₁ + D₂ − D₁D₂ = {:.12}, 80/81 = {:.12}",
        ec.dissipation(),
        compose_dissipation(e1.dissipation(), e2.dissipation())?,
        80.0 / 81.0
    );
    Ok(())
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
