//! Command-line front end: argument definitions and report rendering.
//!
//! Exit status: 0 on success, 1 on malformed input, 2 on an invariant
//! violation (including a failed `verify`), 3 on a domain error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;

use crate::analysis::{
    c_entropy, c_entropy_elementary_closed, classify_at_i, classify_elementary, compose_dissipation,
    compose_entropy, dissipation_elementary_closed, entropy_surface, DonoghueClassification, Entropy,
    TAU_CLASS,
};
use crate::circuit::{classify_foster, skew_coupling_circuit, synthesize, FosterSpec};
use crate::coupling::{
    couple, coupling_impedance_closed, coupling_transfer_closed, self_skew_impedance_closed,
    self_skew_transfer_closed, CoupledSystem, CouplingDescriptor, FactorDescriptor,
};
use crate::crosscheck;
use crate::elementary::{make_elementary, make_skew_adjoint, ElementaryDescriptor};
use crate::lsystem::{impedance_eval, validate, LSystem, TAU_COLLIGATION};
use crate::num::{fmt_complex, fmt_sig, Complex64, I};
use crate::{Error, Result};

const DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "livsic", version, about = "L-systems with multiplication operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Elementary system for λ₀: W, V, Donoghue class, c-entropy, dissipation.
    Elementary(SystemArgs),
    /// Skew-adjoint companion and its coupling with the original system.
    Skew(SystemArgs),
    /// Coupling of two systems.
    Couple(CoupleArgs),
    /// Donoghue classification from V(i).
    Classify(SystemArgs),
    /// c-entropy and dissipation coefficient.
    Entropy(SystemArgs),
    /// c-entropy surface over λ₀ = x + iy as CSV.
    Surface(SurfaceArgs),
    /// LC netlist from a Foster spec.
    Synth(SynthArgs),
    /// Closed forms vs resolvent evaluation on seeded random systems.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// λ₀ as `re,im`
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, conflicts_with = "input")]
    pub lambda0: Option<Complex64>,
    /// JSON descriptor file
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Write the system descriptor JSON here
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoupleArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "mu0")]
    pub lambda0: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "lambda0")]
    pub mu0: Option<Complex64>,
    /// Either one coupling descriptor or two factor descriptors
    #[arg(long = "in", conflicts_with = "lambda0")]
    pub input: Vec<PathBuf>,
    /// Write the coupled system descriptor JSON here
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    /// `xmin,xmax,ymin,ymax,nx,ny`
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true, default_value = "-2,2,0.6,3,81,61")]
    pub grid: Grid,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Foster spec JSON
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Write the netlist here; a summary goes to stdout instead
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = crosscheck::DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
}

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [re, im] = parts.as_slice() else {
        return Err(format!("expected `re,im`, got `{s}`"));
    };
    let re: f64 = re.parse().map_err(|e| format!("bad real part `{re}`: {e}"))?;
    let im: f64 = im.parse().map_err(|e| format!("bad imaginary part `{im}`: {e}"))?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(format!("non-finite value `{s}`"));
    }
    Ok(Complex64::new(re, im))
}

fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x0, x1, y0, y1, nx, ny] = parts.as_slice() else {
        return Err(format!("expected `xmin,xmax,ymin,ymax,nx,ny`, got `{s}`"));
    };
    let f = |v: &str| v.parse::<f64>().map_err(|e| format!("bad bound `{v}`: {e}"));
    let n = |v: &str| v.parse::<usize>().map_err(|e| format!("bad count `{v}`: {e}"));
    Ok(Grid {
        x_min: f(x0)?,
        x_max: f(x1)?,
        y_min: f(y0)?,
        y_max: f(y1)?,
        nx: n(nx)?,
        ny: n(ny)?,
    })
}

fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn descriptor_json(sys: &LSystem) -> String {
    serde_json::to_string(&sys.to_descriptor()).expect("descriptor serializes")
}

fn descriptor_file(sys: &LSystem) -> String {
    let mut s = serde_json::to_string_pretty(&sys.to_descriptor()).expect("descriptor serializes");
    s.push('\n');
    s
}

fn ensure_valid(sys: &LSystem) -> Result<()> {
    let r = validate(sys, TAU_COLLIGATION);
    if r.passed {
        Ok(())
    } else {
        Err(Error::Colligation {
            residual: r.residual,
            threshold: r.threshold,
        })
    }
}

/// Accumulates `key = value` lines.
struct Report(String);

impl Report {
    fn new(title: &str) -> Self {
        Report(format!("# {title}\n"))
    }

    fn line(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.0.push_str(&format!("{key} = {value}\n"));
        self
    }

    fn section(&mut self, title: &str) -> &mut Self {
        self.0.push_str(&format!("# {title}\n"));
        self
    }

    fn real(&mut self, key: &str, x: f64) -> &mut Self {
        self.line(key, fmt_sig(x, DIGITS))
    }

    fn complex(&mut self, key: &str, z: Complex64) -> &mut Self {
        self.line(key, fmt_complex(z, DIGITS))
    }

    fn classification(&mut self, c: &DonoghueClassification) -> &mut Self {
        self.line("class", c.class)
            .real("a", c.a)
            .line("kappa", c.kappa.map_or("-".to_string(), |k| fmt_sig(k, DIGITS)))
    }

    fn entropy(&mut self, key_s: &str, key_d: &str, s: Entropy) -> &mut Self {
        self.line(key_s, s).real(key_d, s.dissipation())
    }
}

/// Classification from the resolvent value `V(i)`; `None` when `V(i)` is not
/// in the open upper half-plane.
fn classify_system(sys: &LSystem) -> Result<(Complex64, Option<DonoghueClassification>)> {
    let v = impedance_eval(sys, I)?;
    Ok((v, classify_at_i(v, TAU_CLASS).ok()))
}

fn lambda_from(args: &SystemArgs) -> Result<Complex64> {
    if let Some(l) = args.lambda0 {
        return Ok(l);
    }
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| Error::Input("either --lambda0 or --in is required".into()))?;
    let d: ElementaryDescriptor = load_json(path)?;
    if d.skew {
        return Err(Error::Input(format!(
            "{}: expected the parameter of the original system, got a skew-adjoint descriptor",
            path.display()
        )));
    }
    Complex64::try_from(d.lambda0)
}

/// System plus its elementary parameter, from `--lambda0` or a factor descriptor.
fn system_from(args: &SystemArgs) -> Result<(LSystem, Option<Complex64>)> {
    if let Some(l) = args.lambda0 {
        return Ok((make_elementary(l)?.system, Some(l)));
    }
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| Error::Input("either --lambda0 or --in is required".into()))?;
    let d: FactorDescriptor = load_json(path)?;
    let sys = d.to_system()?;
    ensure_valid(&sys)?;
    Ok((sys, d.elementary_parameter()))
}

fn cmd_elementary(args: &SystemArgs) -> Result<String> {
    let lambda0 = lambda_from(args)?;
    let theta = make_elementary(lambda0)?;
    let class = classify_elementary(lambda0)?;
    let s = c_entropy(&theta.system)?;

    let mut r = Report::new("elementary L-system");
    r.complex("lambda0", lambda0)
        .line("system", descriptor_json(&theta.system))
        .real("colligation residual", validate(&theta.system, TAU_COLLIGATION).residual)
        .line("W(z)", theta.transfer())
        .line("V(z)", theta.impedance())
        .complex("V(i)", theta.impedance().eval(I)?)
        .classification(&class)
        .entropy("S", "D", s);
    if let Some(path) = &args.out {
        write_file(path, &descriptor_file(&theta.system))?;
    }
    Ok(r.0)
}

fn cmd_skew(args: &SystemArgs) -> Result<String> {
    let lambda0 = lambda_from(args)?;
    let theta = make_elementary(lambda0)?;
    let skew = make_skew_adjoint(lambda0)?;
    let s = c_entropy(&theta.system)?;
    let s_skew = c_entropy(&skew.system)?;

    let mut r = Report::new("skew-adjoint L-system");
    r.complex("lambda0", lambda0)
        .line("system", descriptor_json(&skew.system))
        .line("W(z)", skew.transfer())
        .line("V(z)", skew.impedance())
        .entropy("S", "D", s_skew)
        .entropy("S(original)", "D(original)", s);

    let coupled = couple(&theta.system, &skew.system)?;
    let s_c = c_entropy(&coupled.system)?;
    let d = s.dissipation();
    let (v_i, class) = classify_system(&coupled.system)?;
    r.section("coupling with the original system")
        .line("system", descriptor_json(&coupled.system))
        .line("W(z)", self_skew_transfer_closed(lambda0)?)
        .line("V(z)", self_skew_impedance_closed(lambda0)?)
        .complex("V(i)", v_i);
    if let Some(c) = &class {
        r.classification(c);
    }
    r.entropy("S", "D", s_c)
        .line("2S", compose_entropy(s, s))
        .real("2D-D^2", 2.0 * d - d * d);
    let ok = match (s_c, s) {
        (Entropy::Infinite, Entropy::Infinite) => true,
        (Entropy::Finite(a), Entropy::Finite(b)) => (a - 2.0 * b).abs() <= 1e-10,
        // |W(−i)| of the coupling may be tiny but nonzero when the factor's is exactly zero.
        (Entropy::Finite(a), Entropy::Infinite) => a > 30.0,
        _ => false,
    } && (s_c.dissipation() - (2.0 * d - d * d)).abs() <= 1e-10;
    r.line("doubling check", if ok { "ok" } else { "FAIL" });

    let lc = skew_coupling_circuit(lambda0)?;
    let stage = lc.stages[0];
    r.section("parallel LC block")
        .real("L", stage.inductance)
        .real("C", stage.capacitance)
        .real("resonance", stage.resonance());

    if let Some(path) = &args.out {
        write_file(path, &descriptor_file(&skew.system))?;
    }
    Ok(r.0)
}

fn factors_from(args: &CoupleArgs) -> Result<(FactorDescriptor, FactorDescriptor)> {
    let elem = |l: Complex64| {
        FactorDescriptor::Elementary(ElementaryDescriptor {
            lambda0: l.into(),
            skew: false,
        })
    };
    match (args.lambda0, args.mu0, args.input.as_slice()) {
        (Some(l), Some(m), []) => Ok((elem(l), elem(m))),
        (None, None, [one]) => {
            let d: CouplingDescriptor = load_json(one)?;
            match <[FactorDescriptor; 2]>::try_from(d.factors) {
                Ok([a, b]) => Ok((a, b)),
                Err(v) => Err(Error::Input(format!(
                    "a coupling needs exactly two factors, got {}",
                    v.len()
                ))),
            }
        }
        (None, None, [a, b]) => Ok((load_json(a)?, load_json(b)?)),
        _ => Err(Error::Input(
            "couple needs --lambda0 and --mu0, one coupling descriptor, or two factor descriptors".into(),
        )),
    }
}

fn cmd_couple(args: &CoupleArgs) -> Result<String> {
    let (f1, f2) = factors_from(args)?;
    let (sys1, sys2) = (f1.to_system()?, f2.to_system()?);
    let CoupledSystem { system, .. } = couple(&sys1, &sys2)?;

    let mut r = Report::new("coupling");
    r.line("system", descriptor_json(&system))
        .real("colligation residual", validate(&system, TAU_COLLIGATION).residual);
    if let (Some(l), Some(m)) = (f1.elementary_parameter(), f2.elementary_parameter()) {
        r.complex("lambda0", l)
            .complex("mu0", m)
            .line("W(z)", coupling_transfer_closed(l, m)?)
            .line("V(z)", coupling_impedance_closed(l, m)?);
    }

    let mut factor_entropy = Vec::with_capacity(2);
    for (k, sys) in [(1, &sys1), (2, &sys2)] {
        let (v_i, class) = classify_system(sys)?;
        let s = c_entropy(sys)?;
        r.section(&format!("factor {k}")).complex("V(i)", v_i);
        if let Some(c) = &class {
            r.classification(c);
        }
        r.entropy("S", "D", s);
        factor_entropy.push(s);
    }

    let (v_i, class) = classify_system(&system)?;
    let s = c_entropy(&system)?;
    let (s1, s2) = (factor_entropy[0], factor_entropy[1]);
    r.section("coupled system").complex("V(i)", v_i);
    if let Some(c) = &class {
        r.classification(c);
    }
    r.entropy("S", "D", s)
        .line("S1+S2", compose_entropy(s1, s2))
        .real("D1+D2-D1*D2", compose_dissipation(s1.dissipation(), s2.dissipation())?);

    if let Some(path) = &args.out {
        write_file(path, &descriptor_file(&system))?;
    }
    Ok(r.0)
}

fn cmd_classify(args: &SystemArgs) -> Result<String> {
    let (sys, lambda0) = system_from(args)?;
    let mut r = Report::new("Donoghue classification");
    let class = match lambda0 {
        Some(l) => {
            r.complex("lambda0", l);
            classify_elementary(l)?
        }
        None => classify_at_i(impedance_eval(&sys, I)?, TAU_CLASS)?,
    };
    r.complex("V(i)", impedance_eval(&sys, I)?).classification(&class);
    Ok(r.0)
}

fn cmd_entropy(args: &SystemArgs) -> Result<String> {
    let (sys, lambda0) = system_from(args)?;
    let mut r = Report::new("c-entropy and dissipation");
    if let Some(l) = lambda0 {
        r.complex("lambda0", l);
    }
    r.entropy("S", "D", c_entropy(&sys)?);
    if let Some(l) = lambda0 {
        r.line("S(closed)", c_entropy_elementary_closed(l)?)
            .real("D(closed)", dissipation_elementary_closed(l)?);
    }
    Ok(r.0)
}

fn cmd_surface(args: &SurfaceArgs) -> Result<Option<String>> {
    let g = args.grid;
    let surface = entropy_surface(g.x_min, g.x_max, g.y_min, g.y_max, g.nx, g.ny)?;
    let csv = surface.to_csv();
    match &args.out {
        Some(path) => {
            write_file(path, &csv)?;
            Ok(None)
        }
        None => Ok(Some(csv)),
    }
}

fn cmd_synth(args: &SynthArgs) -> Result<String> {
    let spec: FosterSpec = load_json(&args.input)?;
    let netlist = synthesize(&spec)?;
    let text = netlist.emit();
    let Some(path) = &args.out else {
        return Ok(text);
    };
    write_file(path, &text)?;
    let mut r = Report::new("Foster synthesis");
    r.line("stages", netlist.stages.len())
        .line(
            "series capacitor",
            netlist.series_capacitor.map_or("-".to_string(), |c| fmt_sig(c, DIGITS)),
        )
        .classification(&classify_foster(&spec)?);
    Ok(r.0)
}

/// Executes one command, writing the report to `out`, and returns the exit
/// status for successful runs.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let (text, status) = match &cli.command {
        Command::Elementary(a) => (Some(cmd_elementary(a)?), 0),
        Command::Skew(a) => (Some(cmd_skew(a)?), 0),
        Command::Couple(a) => (Some(cmd_couple(a)?), 0),
        Command::Classify(a) => (Some(cmd_classify(a)?), 0),
        Command::Entropy(a) => (Some(cmd_entropy(a)?), 0),
        Command::Surface(a) => (cmd_surface(a)?, 0),
        Command::Synth(a) => (Some(cmd_synth(a)?), 0),
        Command::Verify(a) => {
            let report = crosscheck::run(a.seed)?;
            (Some(report.render()), if report.passed() { 0 } else { 2 })
        }
    };
    if let Some(text) = text {
        out.write_all(text.as_bytes())?;
    }
    Ok(status)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_flag_parsing() {
        assert_eq!(parse_complex("1,1").unwrap(), Complex64::new(1.0, 1.0));
        assert_eq!(parse_complex("-0.5, 2").unwrap(), Complex64::new(-0.5, 2.0));
        assert!(parse_complex("1").is_err());
        assert!(parse_complex("1,x").is_err());
        assert!(parse_complex("inf,1").is_err());
    }

    #[test]
    fn grid_flag_parsing() {
        let g = parse_grid("-2,2,0.6,3,81,61").unwrap();
        assert_eq!((g.x_min, g.y_max, g.nx, g.ny), (-2.0, 3.0, 81, 61));
        assert!(parse_grid("-2,2,0.6,3,81").is_err());
        assert!(parse_grid("-2,2,0.6,3,81,x").is_err());
    }
}
