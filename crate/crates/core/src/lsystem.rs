//! Matrix colligations `Θ = (T, K, J)` with scalar input-output space.
//!
//! Transfer and impedance functions are computed from their resolvent
//! definitions with dense LU solves,
//!
//! ```text
//! W(z) = 1 − 2i K*(T − zI)⁻¹ K J
//! V(z) = K*(Re T − zI)⁻¹ K
//! ```
//!
//! and serve as the reference against which every closed form is checked.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::num::{Complex64, ComplexJson, I, ONE};
use crate::{Error, Result};

/// Default tolerance for the colligation condition `Im T = K J K*`.
pub const TAU_COLLIGATION: f64 = 1e-9;

/// Directing operator on the one-dimensional input-output space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Directing {
    Plus,
    Minus,
}

impl Directing {
    pub fn value(self) -> f64 {
        match self {
            Directing::Plus => 1.0,
            Directing::Minus => -1.0,
        }
    }

    pub fn from_sign(j: i64) -> Result<Self> {
        match j {
            1 => Ok(Directing::Plus),
            -1 => Ok(Directing::Minus),
            other => Err(Error::Input(format!("directing operator J must be ±1, got {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LSystem {
    main: DMatrix<Complex64>,
    channel: DVector<Complex64>,
    directing: Directing,
}

impl LSystem {
    /// Checks shapes and finiteness only; the colligation condition is
    /// reported by [`validate`].
    pub fn new(
        main: DMatrix<Complex64>,
        channel: DVector<Complex64>,
        directing: Directing,
    ) -> Result<Self> {
        let n = main.nrows();
        if n == 0 || main.ncols() != n {
            return Err(Error::Dimension(format!(
                "main operator must be square and nonempty, got {}×{}",
                main.nrows(),
                main.ncols()
            )));
        }
        if channel.len() != n {
            return Err(Error::Dimension(format!(
                "channel operator has {} rows, state space has dimension {n}",
                channel.len()
            )));
        }
        if main.iter().chain(channel.iter()).any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::Input("non-finite matrix entry".into()));
        }
        Ok(LSystem {
            main,
            channel,
            directing,
        })
    }

    /// One-dimensional system `T = [t]`, `K = [k]`.
    pub fn scalar(t: Complex64, k: Complex64, directing: Directing) -> Result<Self> {
        LSystem::new(
            DMatrix::from_element(1, 1, t),
            DVector::from_element(1, k),
            directing,
        )
    }

    pub fn dim(&self) -> usize {
        self.main.nrows()
    }

    pub fn main(&self) -> &DMatrix<Complex64> {
        &self.main
    }

    pub fn channel(&self) -> &DVector<Complex64> {
        &self.channel
    }

    pub fn directing(&self) -> Directing {
        self.directing
    }

    /// `(T + T*) / 2`
    pub fn real_part(&self) -> DMatrix<Complex64> {
        (&self.main + self.main.adjoint()) * Complex64::new(0.5, 0.0)
    }

    /// `(T − T*) / 2i`
    pub fn imag_part(&self) -> DMatrix<Complex64> {
        (&self.main - self.main.adjoint()) / (I * 2.0)
    }

    /// Frobenius norm of `Im T − K J K*`.
    pub fn colligation_residual(&self) -> f64 {
        let kjk = &self.channel * self.channel.adjoint() * Complex64::new(self.directing.value(), 0.0);
        (self.imag_part() - kjk).norm()
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|j| (j + 1..n).all(|i| self.main[(i, j)] == Complex64::new(0.0, 0.0)))
    }

    /// Eigenvalues of `T`, read off the diagonal when `T` is upper triangular.
    pub fn spectrum(&self) -> Vec<Complex64> {
        if self.is_upper_triangular() {
            return self.main.diagonal().iter().copied().collect();
        }
        self.main
            .clone()
            .schur()
            .eigenvalues()
            .map(|v| v.iter().copied().collect())
            .unwrap_or_default()
    }

    pub fn to_descriptor(&self) -> SystemDescriptor {
        SystemDescriptor {
            main: self
                .main
                .row_iter()
                .map(|row| row.iter().map(|&c| c.into()).collect())
                .collect(),
            channel: self.channel.iter().map(|&c| c.into()).collect(),
            directing: self.directing.value() as i64,
        }
    }

    pub fn from_descriptor(desc: &SystemDescriptor) -> Result<Self> {
        let n = desc.main.len();
        if desc.main.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension("main operator rows must all have length n".into()));
        }
        let entries = desc
            .main
            .iter()
            .flatten()
            .map(|&c| Complex64::try_from(c))
            .collect::<Result<Vec<_>>>()?;
        let channel = desc
            .channel
            .iter()
            .map(|&c| Complex64::try_from(c))
            .collect::<Result<Vec<_>>>()?;
        LSystem::new(
            DMatrix::from_row_slice(n, n, &entries),
            DVector::from_vec(channel),
            Directing::from_sign(desc.directing)?,
        )
    }
}

/// JSON descriptor `{ "T": [[{re,im},..],..], "K": [{re,im},..], "J": 1 }`.
/// `T` is given row by row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDescriptor {
    #[serde(rename = "T")]
    pub main: Vec<Vec<ComplexJson>>,
    #[serde(rename = "K")]
    pub channel: Vec<ComplexJson>,
    #[serde(rename = "J")]
    pub directing: i64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationReport {
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
}

/// Checks `‖Im T − K J K*‖ ≤ tol · (1 + ‖T‖)`.
pub fn validate(sys: &LSystem, tol: f64) -> ValidationReport {
    let residual = sys.colligation_residual();
    let threshold = tol * (1.0 + sys.main.norm());
    ValidationReport {
        residual,
        threshold,
        passed: residual <= threshold,
    }
}

/// Solves `m x = rhs`, treating `min |u_ii| ≤ n·ε·‖m‖` as singular.
fn solve_resolvent(
    m: DMatrix<Complex64>,
    rhs: &DVector<Complex64>,
    z: Complex64,
) -> Result<DVector<Complex64>> {
    let n = m.nrows();
    let scale = m.norm();
    let lu = m.lu();
    let min_pivot = lu
        .u()
        .diagonal()
        .iter()
        .map(|c| c.norm())
        .fold(f64::INFINITY, f64::min);
    if min_pivot <= n as f64 * f64::EPSILON * scale {
        return Err(Error::SingularResolvent { re: z.re, im: z.im });
    }
    lu.solve(rhs)
        .ok_or(Error::SingularResolvent { re: z.re, im: z.im })
}

fn shifted(m: &DMatrix<Complex64>, z: Complex64) -> DMatrix<Complex64> {
    let n = m.nrows();
    m - DMatrix::from_diagonal_element(n, n, z)
}

/// `W(z) = 1 − 2i K*(T − zI)⁻¹ K J`
pub fn transfer_eval(sys: &LSystem, z: Complex64) -> Result<Complex64> {
    let x = solve_resolvent(shifted(&sys.main, z), &sys.channel, z)?;
    let kx = sys.channel.dotc(&x);
    Ok(ONE - I * 2.0 * kx * sys.directing.value())
}

/// `V(z) = K*(Re T − zI)⁻¹ K`
pub fn impedance_eval(sys: &LSystem, z: Complex64) -> Result<Complex64> {
    let y = solve_resolvent(shifted(&sys.real_part(), z), &sys.channel, z)?;
    Ok(sys.channel.dotc(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{c64, rel_diff};

    fn scalar(t: Complex64) -> LSystem {
        LSystem::scalar(t, ONE, Directing::Plus).unwrap()
    }

    #[test]
    fn validate_unit_system() {
        let r = validate(&scalar(I), TAU_COLLIGATION);
        assert_eq!(r.residual, 0.0);
        assert!(r.passed);
    }

    #[test]
    fn validate_broken_colligation() {
        let r = validate(&scalar(c64(0.0, 2.0)), TAU_COLLIGATION);
        assert!((r.residual - 1.0).abs() < 1e-15);
        assert!(!r.passed);
    }

    #[test]
    fn validate_hand_built_coupling() {
        let t = DMatrix::from_row_slice(2, 2, &[I, I * 2.0, c64(0.0, 0.0), I]);
        let k = DVector::from_vec(vec![ONE, ONE]);
        let sys = LSystem::new(t, k, Directing::Plus).unwrap();
        let r = validate(&sys, TAU_COLLIGATION);
        assert!(r.residual <= 1e-14 && r.passed);
    }

    #[test]
    fn negative_directing_colligation() {
        // Im T = −K K* when J = −1.
        let sys = LSystem::scalar(c64(0.5, -4.0), c64(2.0, 0.0), Directing::Minus).unwrap();
        assert!(validate(&sys, TAU_COLLIGATION).passed);
    }

    #[test]
    fn shape_mismatch_rejected() {
        let t = DMatrix::from_element(2, 2, ONE);
        let k = DVector::from_element(3, ONE);
        assert!(matches!(LSystem::new(t, k, Directing::Plus), Err(Error::Dimension(_))));
        let t = DMatrix::from_element(2, 3, ONE);
        let k = DVector::from_element(2, ONE);
        assert!(matches!(LSystem::new(t, k, Directing::Plus), Err(Error::Dimension(_))));
    }

    #[test]
    fn transfer_examples() {
        let w = transfer_eval(&scalar(c64(1.0, 1.0)), -I).unwrap();
        assert!(rel_diff(w, ONE / c64(1.0, 2.0)) < 1e-15);
        assert!((w.norm() - 1.0 / 5f64.sqrt()).abs() < 1e-15);
        assert!(rel_diff(transfer_eval(&scalar(I), I * 2.0).unwrap(), c64(3.0, 0.0)) < 1e-15);
        assert!(matches!(
            transfer_eval(&scalar(I), I),
            Err(Error::SingularResolvent { .. })
        ));
    }

    #[test]
    fn impedance_examples() {
        let v = impedance_eval(&scalar(c64(1.0, 1.0)), I).unwrap();
        assert!(rel_diff(v, c64(0.5, 0.5)) < 1e-15);
        assert!(rel_diff(impedance_eval(&scalar(I), I).unwrap(), I) < 1e-15);
        assert!(matches!(
            impedance_eval(&scalar(I), c64(0.0, 0.0)),
            Err(Error::SingularResolvent { .. })
        ));
    }

    #[test]
    fn cayley_relation_with_negative_directing() {
        let sys = LSystem::scalar(c64(0.5, -4.0), c64(2.0, 0.0), Directing::Minus).unwrap();
        let z = c64(0.3, 0.9);
        let w = transfer_eval(&sys, z).unwrap();
        let v = impedance_eval(&sys, z).unwrap();
        assert!(rel_diff(I * (w - ONE) / (w + ONE) * -1.0, v) < 1e-14);
    }

    #[test]
    fn spectrum_of_triangular_and_general() {
        let t = DMatrix::from_row_slice(2, 2, &[I, I * 2.0, c64(0.0, 0.0), c64(1.0, 1.0)]);
        let sys = LSystem::new(t, DVector::from_element(2, ONE), Directing::Plus).unwrap();
        assert_eq!(sys.spectrum(), vec![I, c64(1.0, 1.0)]);

        let t = DMatrix::from_row_slice(2, 2, &[c64(0.0, 0.0), ONE, ONE, c64(0.0, 0.0)]);
        let sys = LSystem::new(t, DVector::from_element(2, ONE), Directing::Plus).unwrap();
        let mut ev: Vec<f64> = sys.spectrum().iter().map(|c| c.re).collect();
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn descriptor_round_trip() {
        let t = DMatrix::from_row_slice(2, 2, &[I, I * 2.0, c64(0.0, 0.0), c64(1.0, 1.0)]);
        let sys = LSystem::new(t, DVector::from_element(2, ONE), Directing::Plus).unwrap();
        let json = serde_json::to_string(&sys.to_descriptor()).unwrap();
        let back: SystemDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(LSystem::from_descriptor(&back).unwrap(), sys);
    }

    #[test]
    fn descriptor_rejects_bad_input() {
        let bad_j = r#"{"T": [[{"re": 0, "im": 1}]], "K": [{"re": 1, "im": 0}], "J": 2}"#;
        let d: SystemDescriptor = serde_json::from_str(bad_j).unwrap();
        assert!(matches!(LSystem::from_descriptor(&d), Err(Error::Input(_))));
        let ragged = r#"{"T": [[{"re": 0, "im": 1}, {"re": 0, "im": 0}]], "K": [{"re": 1, "im": 0}], "J": 1}"#;
        let d: SystemDescriptor = serde_json::from_str(ragged).unwrap();
        assert!(matches!(LSystem::from_descriptor(&d), Err(Error::Dimension(_))));
    }
}
