//! c-entropy surface over λ₀ = x + iy, printed as a coarse text map.

use livsic::analysis::entropy_surface;

pub fn run() -> livsic::Result<()> {
    let surface = entropy_surface(-2.0, 2.0, 0.6, 3.0, 81, 61)?;
    let (i, j) = surface.argmax();
    println!("maximum at x = {}, y = {}: S = {}", surface.xs[i], surface.ys[j], surface.get(i, j));

    let shades = [' ', '.', ':', '-', '=', '+', '*', '#', '%', '@'];
    for j in (0..surface.ys.len()).rev().step_by(5) {
        let line: String = (0..surface.xs.len())
            .step_by(2)
            .map(|i| {
                let s = surface.get(i, j).value();
                shades[((s / 1.5 * 9.0) as usize).min(9)]
            })
            .collect();
        println!("y = {:4.2} |{line}|", surface.ys[j]);
    }
    Ok(())
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
