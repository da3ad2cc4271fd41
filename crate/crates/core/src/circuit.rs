//! Foster-form synthesis of rational Herglotz functions
//!
//! ```text
//! M(z) = −a₀/z + Σ a_k z / (b_k² − z²)
//! ```
//!
//! as a series chain of a capacitor `C₀ = 1/a₀` and parallel LC blocks with
//! `L_k = a_k / b_k²`, `C_k = 1 / a_k`. The network impedance is
//! `Z(p) = M(ip)/i`.

use serde::{Deserialize, Serialize};

use crate::analysis::{classify_at_i, DonoghueClassification, TAU_CLASS};
use crate::elementary::check_upper;
use crate::num::{fmt_sig, Atom, AtomicMeasure, Complex64, Polynomial, RationalFunction, I, ONE, ZERO};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FosterStage {
    pub a: f64,
    pub b: f64,
}

/// JSON: `{ "a0": real, "stages": [{"a": real, "b": real}, ..] }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FosterSpec {
    pub a0: f64,
    #[serde(default)]
    pub stages: Vec<FosterStage>,
}

impl FosterSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.a0 >= 0.0 && self.a0.is_finite()) {
            return Err(Error::Spec(format!("a0 must be finite and nonnegative, got {}", self.a0)));
        }
        for (k, s) in self.stages.iter().enumerate() {
            if !(s.a > 0.0 && s.a.is_finite() && s.b > 0.0 && s.b.is_finite()) {
                return Err(Error::Spec(format!(
                    "stage {} needs positive finite a and b, got a = {}, b = {}",
                    k + 1,
                    s.a,
                    s.b
                )));
            }
        }
        for (k, s) in self.stages.iter().enumerate() {
            if self.stages[k + 1..].iter().any(|t| t.b == s.b) {
                return Err(Error::Spec(format!("stage frequency b = {} repeats", s.b)));
            }
        }
        if self.a0 == 0.0 && self.stages.is_empty() {
            return Err(Error::Spec("a0 = 0 with no stages describes an empty network".into()));
        }
        Ok(())
    }

    /// `a = a₀ + Σ a_k / (b_k² + 1)`, so that `M(i) = a·i`.
    pub fn mass_at_i(&self) -> f64 {
        self.a0 + self.stages.iter().map(|s| s.a / (s.b * s.b + 1.0)).sum::<f64>()
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `M(z)` over a common denominator.
pub fn foster_to_herglotz(spec: &FosterSpec) -> Result<RationalFunction> {
    spec.validate()?;
    let mut m = RationalFunction::constant(ZERO);
    if spec.a0 > 0.0 {
        let term = RationalFunction::new(Polynomial::constant(real(-spec.a0)), Polynomial::linear(ZERO, ONE))?;
        m = m.add(&term);
    }
    for s in &spec.stages {
        let term = RationalFunction::new(
            Polynomial::linear(ZERO, real(s.a)),
            Polynomial::new(vec![real(s.b * s.b), ZERO, -ONE]),
        )?;
        m = m.add(&term);
    }
    Ok(m)
}

/// Atoms `{(0, a₀)} ∪ {(±b_k, a_k/2)}` of the representing measure.
pub fn measure_atoms(spec: &FosterSpec) -> Result<AtomicMeasure> {
    spec.validate()?;
    let mut atoms = Vec::with_capacity(2 * spec.stages.len() + 1);
    if spec.a0 > 0.0 {
        atoms.push(Atom {
            location: 0.0,
            weight: spec.a0,
        });
    }
    for s in &spec.stages {
        for location in [-s.b, s.b] {
            atoms.push(Atom {
                location,
                weight: 0.5 * s.a,
            });
        }
    }
    AtomicMeasure::new(atoms)
}

pub fn classify_foster(spec: &FosterSpec) -> Result<DonoghueClassification> {
    spec.validate()?;
    classify_at_i(I * spec.mass_at_i(), TAU_CLASS)
}

/// `Z(p) = M(ip)/i = a₀/p + Σ a_k p / (b_k² + p²)`, as a function of `p`.
pub fn positive_real_z(spec: &FosterSpec) -> Result<RationalFunction> {
    Ok(foster_to_herglotz(spec)?.compose_scale(I).scale(-I))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LcStage {
    pub inductance: f64,
    pub capacitance: f64,
}

impl LcStage {
    pub fn resonance(&self) -> f64 {
        1.0 / (self.inductance * self.capacitance).sqrt()
    }
}

/// Series capacitor followed by a series chain of parallel LC blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct Netlist {
    pub series_capacitor: Option<f64>,
    pub stages: Vec<LcStage>,
}

impl Netlist {
    /// Foster data read back from component values:
    /// `a₀ = 1/C₀`, `a_k = 1/C_k`, `b_k = 1/√(L_k C_k)`.
    pub fn to_foster(&self) -> FosterSpec {
        FosterSpec {
            a0: self.series_capacitor.map_or(0.0, |c| 1.0 / c),
            stages: self
                .stages
                .iter()
                .map(|s| FosterStage {
                    a: 1.0 / s.capacitance,
                    b: s.resonance(),
                })
                .collect(),
        }
    }

    pub fn emit(&self) -> String {
        emit_netlist(self)
    }
}

pub fn synthesize(spec: &FosterSpec) -> Result<Netlist> {
    spec.validate()?;
    Ok(Netlist {
        series_capacitor: (spec.a0 > 0.0).then(|| 1.0 / spec.a0),
        stages: spec
            .stages
            .iter()
            .map(|s| LcStage {
                inductance: s.a / (s.b * s.b),
                capacitance: 1.0 / s.a,
            })
            .collect(),
    })
}

/// Parallel LC block associated with the coupling `Θ·Θ×`:
/// `L = Im λ₀ / |λ₀|²`, `C = 1 / Im λ₀`, resonating at `|λ₀|`.
///
/// These component values carry half the stage weight of the coupling
/// impedance `2 Im λ₀ z / (|λ₀|² − z²)`; [`skew_coupling_foster`] gives the
/// Foster data that reproduces it exactly.
pub fn skew_coupling_circuit(lambda0: Complex64) -> Result<Netlist> {
    check_upper(lambda0)?;
    Ok(Netlist {
        series_capacitor: None,
        stages: vec![LcStage {
            inductance: lambda0.im / lambda0.norm_sqr(),
            capacitance: 1.0 / lambda0.im,
        }],
    })
}

/// Single-stage Foster data `a₁ = 2 Im λ₀`, `b₁ = |λ₀|` of the `Θ·Θ×` impedance.
pub fn skew_coupling_foster(lambda0: Complex64) -> Result<FosterSpec> {
    check_upper(lambda0)?;
    Ok(FosterSpec {
        a0: 0.0,
        stages: vec![FosterStage {
            a: 2.0 * lambda0.im,
            b: lambda0.norm(),
        }],
    })
}

/// Line-oriented netlist: optional `C0 n0 n1 <value>`, then for each stage
/// `Lk` and `Ck` sharing the next node pair, then `.end`. Values carry 12
/// significant digits; lines end with LF.
pub fn emit_netlist(netlist: &Netlist) -> String {
    let mut out = String::new();
    let mut node = 0;
    if let Some(c0) = netlist.series_capacitor {
        out.push_str(&format!("C0 n{} n{} {}\n", node, node + 1, fmt_sig(c0, 12)));
        node += 1;
    }
    for (k, s) in netlist.stages.iter().enumerate() {
        let k = k + 1;
        out.push_str(&format!("L{k} n{} n{} {}\n", node, node + 1, fmt_sig(s.inductance, 12)));
        out.push_str(&format!("C{k} n{} n{} {}\n", node, node + 1, fmt_sig(s.capacitance, 12)));
        node += 1;
    }
    out.push_str(".end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::self_skew_impedance_closed;
    use crate::num::{c64, partial_fractions_real_poles, rel_diff, sample_points};

    fn spec(a0: f64, stages: &[(f64, f64)]) -> FosterSpec {
        FosterSpec {
            a0,
            stages: stages.iter().map(|&(a, b)| FosterStage { a, b }).collect(),
        }
    }

    fn rf(num: Vec<Complex64>, den: Vec<Complex64>) -> RationalFunction {
        RationalFunction::new(Polynomial::new(num), Polynomial::new(den)).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(spec(-1.0, &[]).validate().is_err());
        assert!(spec(0.0, &[]).validate().is_err());
        assert!(spec(1.0, &[(0.0, 1.0)]).validate().is_err());
        assert!(spec(1.0, &[(1.0, -1.0)]).validate().is_err());
        assert!(spec(1.0, &[(1.0, 2.0), (3.0, 2.0)]).validate().is_err());
        assert!(matches!(synthesize(&spec(f64::NAN, &[])), Err(Error::Spec(_))));
        assert!(spec(0.0, &[(1.0, 1.0)]).validate().is_ok());
    }

    #[test]
    fn herglotz_assembly() {
        let m = foster_to_herglotz(&spec(1.0, &[])).unwrap();
        assert!(m.approx_eq(&rf(vec![-ONE], vec![ZERO, ONE]), 1e-15));

        let m = foster_to_herglotz(&spec(0.0, &[(1.0, 1.0)])).unwrap();
        assert!(m.approx_eq(&rf(vec![ZERO, ONE], vec![ONE, ZERO, -ONE]), 1e-15));
        assert!(rel_diff(m.eval(I).unwrap(), I * 0.5) < 1e-15);

        let m = foster_to_herglotz(&spec(1.0, &[(2.0, 1.0)])).unwrap();
        assert!(rel_diff(m.eval(I).unwrap(), I * 2.0) < 1e-15);
    }

    #[test]
    fn atoms_and_mass() {
        let s = spec(1.0, &[(2.0, 1.0)]);
        let m = measure_atoms(&s).unwrap();
        let got: Vec<(f64, f64)> = m.atoms().iter().map(|a| (a.location, a.weight)).collect();
        assert_eq!(got, vec![(-1.0, 1.0), (0.0, 1.0), (1.0, 1.0)]);
        assert_eq!(m.first_moment(), 0.0);
        assert!((m.mass_at_i() - 2.0).abs() < 1e-15);
        assert!((s.mass_at_i() - 2.0).abs() < 1e-15);

        let m = measure_atoms(&spec(1.0, &[])).unwrap();
        assert_eq!(m.atoms(), &[Atom { location: 0.0, weight: 1.0 }]);

        let s = spec(0.0, &[(1.0, 1.0)]);
        let m = measure_atoms(&s).unwrap();
        assert!((m.mass_at_i() - 0.5).abs() < 1e-15);
        let pf = partial_fractions_real_poles(&foster_to_herglotz(&s).unwrap()).unwrap();
        for (x, y) in pf.atoms().iter().zip(m.atoms()) {
            assert!((x.location - y.location).abs() < 1e-12 && (x.weight - y.weight).abs() < 1e-12);
        }
    }

    #[test]
    fn classification() {
        use crate::analysis::DonoghueClass;
        assert_eq!(classify_foster(&spec(1.0, &[])).unwrap().class, DonoghueClass::MHat);
        let c = classify_foster(&spec(1.0, &[(2.0, 1.0)])).unwrap();
        assert_eq!(c.class, DonoghueClass::MHatKappaInverse);
        assert!((c.kappa.unwrap() - 1.0 / 3.0).abs() < 1e-15);
        let c = classify_foster(&spec(0.0, &[(1.0, 1.0)])).unwrap();
        assert_eq!(c.class, DonoghueClass::MHatKappa);
        assert!((c.kappa.unwrap() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn synthesis_values() {
        let n = synthesize(&spec(1.0, &[(2.0, 1.0)])).unwrap();
        assert_eq!(n.series_capacitor, Some(1.0));
        assert_eq!(n.stages, vec![LcStage { inductance: 2.0, capacitance: 0.5 }]);

        let n = synthesize(&spec(0.0, &[(1.0, 1.0)])).unwrap();
        assert_eq!(n.series_capacitor, None);
        assert_eq!(n.stages, vec![LcStage { inductance: 1.0, capacitance: 1.0 }]);

        let n = synthesize(&spec(4.0, &[])).unwrap();
        assert_eq!(n.series_capacitor, Some(0.25));
        assert!(n.stages.is_empty());
        let z = positive_real_z(&spec(4.0, &[])).unwrap();
        assert!(rel_diff(z.eval(c64(2.0, 0.0)).unwrap(), c64(2.0, 0.0)) < 1e-15);
    }

    #[test]
    fn resonance_and_round_trip() {
        let s = spec(0.3, &[(2.0, 0.5), (0.7, 3.0), (5.0, 1.25)]);
        let n = synthesize(&s).unwrap();
        for (stage, want) in n.stages.iter().zip(&s.stages) {
            assert!((stage.resonance() - want.b).abs() <= 1e-12 * want.b);
        }
        let back = n.to_foster();
        assert!((back.a0 - s.a0).abs() < 1e-12);
        for (x, y) in back.stages.iter().zip(&s.stages) {
            assert!((x.a - y.a).abs() < 1e-12 && (x.b - y.b).abs() < 1e-12);
        }
    }

    #[test]
    fn positive_real_examples() {
        let z = positive_real_z(&spec(1.0, &[])).unwrap();
        assert!(z.approx_eq(&rf(vec![ONE], vec![ZERO, ONE]), 1e-15));

        let z = positive_real_z(&spec(0.0, &[(1.0, 1.0)])).unwrap();
        assert!(z.approx_eq(&rf(vec![ZERO, ONE], vec![ONE, ZERO, ONE]), 1e-15));
        assert!(rel_diff(z.eval(ONE).unwrap(), c64(0.5, 0.0)) < 1e-15);

        let s = spec(1.0, &[(2.0, 1.0)]);
        let z = positive_real_z(&s).unwrap();
        let m = foster_to_herglotz(&s).unwrap();
        for p in sample_points(3, 20, 2.0) {
            let branches = ONE / p + p * 2.0 / (ONE + p * p);
            assert!(rel_diff(z.eval(p).unwrap(), branches) < 1e-13);
            assert!(rel_diff(z.eval(p).unwrap(), m.eval(I * p).unwrap() / I) < 1e-13);
        }
    }

    #[test]
    fn skew_circuits() {
        let n = skew_coupling_circuit(c64(1.0, 1.0)).unwrap();
        assert_eq!(n.stages, vec![LcStage { inductance: 0.5, capacitance: 1.0 }]);
        assert!((n.stages[0].resonance() - 2f64.sqrt()).abs() < 1e-12);
        let n = skew_coupling_circuit(I).unwrap();
        assert_eq!(n.stages, vec![LcStage { inductance: 1.0, capacitance: 1.0 }]);
        let n = skew_coupling_circuit(I * 2.0).unwrap();
        assert_eq!(n.stages, vec![LcStage { inductance: 0.5, capacitance: 0.5 }]);
        assert!(matches!(skew_coupling_circuit(c64(1.0, -1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn skew_foster_matches_coupling_impedance() {
        for lam in [I, c64(1.0, 1.0), c64(-0.4, 2.2)] {
            let m = foster_to_herglotz(&skew_coupling_foster(lam).unwrap()).unwrap();
            let v = self_skew_impedance_closed(lam).unwrap();
            assert!(m.approx_eq(&v, 1e-13));
            // The component values of the LC block carry half that weight.
            let half = foster_to_herglotz(&skew_coupling_circuit(lam).unwrap().to_foster()).unwrap();
            assert!(half.scale(c64(2.0, 0.0)).approx_eq(&v, 1e-12));
        }
    }

    #[test]
    fn netlist_text() {
        let n = Netlist {
            series_capacitor: Some(1.0),
            stages: vec![LcStage { inductance: 2.0, capacitance: 0.5 }],
        };
        assert_eq!(
            emit_netlist(&n),
            "C0 n0 n1 1.00000000000\nL1 n1 n2 2.00000000000\nC1 n1 n2 0.500000000000\n.end\n"
        );
        assert_eq!(emit_netlist(&n).lines().count(), 4);

        let n = synthesize(&spec(4.0, &[])).unwrap();
        assert_eq!(n.emit(), "C0 n0 n1 0.250000000000\n.end\n");

        let n = skew_coupling_circuit(I).unwrap();
        assert_eq!(n.emit(), "L1 n0 n1 1.00000000000\nC1 n0 n1 1.00000000000\n.end\n");
    }

    #[test]
    fn spec_json() {
        let s: FosterSpec =
            serde_json::from_str(r#"{"a0": 1, "stages": [{"a": 2, "b": 1}]}"#).unwrap();
        assert_eq!(s, spec(1.0, &[(2.0, 1.0)]));
        assert!(serde_json::from_str::<FosterSpec>(r#"{"a0": 1, "extra": 3}"#).is_err());
    }
}
