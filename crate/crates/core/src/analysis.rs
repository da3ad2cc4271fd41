//! Donoghue-class membership, c-entropy `S = −ln|W(−i)|` and the dissipation
//! coefficient `D = 1 − e^(−2S)`.

use std::fmt;
use std::ops::Add;

use crate::elementary::{self, check_upper};
use crate::lsystem::{transfer_eval, LSystem};
use crate::num::{fmt_sig, Complex64, I};
use crate::{Error, Result};

/// Band for the purely-imaginary test on `V(i)` and for `|a − 1|`.
pub const TAU_CLASS: f64 = 1e-9;
/// `|W(−i)|` at or below this saturates the entropy to `+∞`.
pub const TAU_ZERO: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DonoghueClass {
    /// `M(i) = i`
    MHat,
    /// `M(i) = a·i` with `a < 1`
    MHatKappa,
    /// `M(i) = a·i` with `a > 1`
    MHatKappaInverse,
    /// `M(i)` is not purely imaginary.
    None,
}

impl DonoghueClass {
    pub fn label(self) -> &'static str {
        match self {
            DonoghueClass::MHat => "M_hat",
            DonoghueClass::MHatKappa => "M_hat_kappa",
            DonoghueClass::MHatKappaInverse => "M_hat_kappa_inverse",
            DonoghueClass::None => "none",
        }
    }
}

impl fmt::Display for DonoghueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DonoghueClassification {
    pub class: DonoghueClass,
    /// `None` exactly when `class` is [`DonoghueClass::None`].
    pub kappa: Option<f64>,
    /// `Im V(i)`
    pub a: f64,
}

pub fn classify_at_i(v_at_i: Complex64, tol: f64) -> Result<DonoghueClassification> {
    let a = v_at_i.im;
    if a <= 0.0 || !a.is_finite() || !v_at_i.re.is_finite() {
        return Err(Error::NotHerglotz {
            re: v_at_i.re,
            im: v_at_i.im,
        });
    }
    let (class, kappa) = if v_at_i.re.abs() > tol {
        (DonoghueClass::None, None)
    } else if (a - 1.0).abs() <= tol {
        (DonoghueClass::MHat, Some(0.0))
    } else if a < 1.0 {
        (DonoghueClass::MHatKappa, Some((1.0 - a) / (1.0 + a)))
    } else {
        (DonoghueClass::MHatKappaInverse, Some((a - 1.0) / (1.0 + a)))
    };
    Ok(DonoghueClassification { class, kappa, a })
}

/// Classification of the elementary system from `V(i) = Im λ₀ / (Re λ₀ − i)`.
pub fn classify_elementary(lambda0: Complex64) -> Result<DonoghueClassification> {
    let v = elementary::impedance_closed(lambda0)?.eval(I)?;
    classify_at_i(v, TAU_CLASS)
}

/// Extended nonnegative real used for c-entropy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Entropy {
    Finite(f64),
    Infinite,
}

impl Entropy {
    /// `−ln m`, saturating to `+∞` for `m ≤ TAU_ZERO`.
    pub fn from_modulus(m: f64) -> Entropy {
        if m <= TAU_ZERO {
            Entropy::Infinite
        } else {
            Entropy::Finite(-m.ln())
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Entropy::Infinite)
    }

    /// The value as an `f64`, with `+∞` mapped to `f64::INFINITY`.
    pub fn value(self) -> f64 {
        match self {
            Entropy::Finite(s) => s,
            Entropy::Infinite => f64::INFINITY,
        }
    }

    /// `D = 1 − e^(−2S)`
    pub fn dissipation(self) -> f64 {
        match self {
            Entropy::Finite(s) => -(-2.0 * s).exp_m1(),
            Entropy::Infinite => 1.0,
        }
    }
}

impl Add for Entropy {
    type Output = Entropy;

    fn add(self, rhs: Entropy) -> Entropy {
        match (self, rhs) {
            (Entropy::Finite(a), Entropy::Finite(b)) => Entropy::Finite(a + b),
            _ => Entropy::Infinite,
        }
    }
}

impl fmt::Display for Entropy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entropy::Finite(s) => f.write_str(&fmt_sig(*s, 12)),
            Entropy::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyReport {
    pub entropy: Entropy,
    pub dissipation: f64,
}

impl From<Entropy> for EntropyReport {
    fn from(entropy: Entropy) -> Self {
        EntropyReport {
            entropy,
            dissipation: entropy.dissipation(),
        }
    }
}

/// `S = −ln|W(−i)|` from the resolvent of `sys`.
pub fn c_entropy(sys: &LSystem) -> Result<Entropy> {
    Ok(Entropy::from_modulus(transfer_eval(sys, -I)?.norm()))
}

/// `S = ½ ln[((Re λ₀)² + (1 + Im λ₀)²) / ((Re λ₀)² + (1 − Im λ₀)²)]`
pub fn c_entropy_elementary_closed(lambda0: Complex64) -> Result<Entropy> {
    check_upper(lambda0)?;
    let x2 = lambda0.re * lambda0.re;
    let num = x2 + (1.0 + lambda0.im).powi(2);
    let den = x2 + (1.0 - lambda0.im).powi(2);
    if den == 0.0 {
        return Ok(Entropy::Infinite);
    }
    Ok(Entropy::Finite(0.5 * (num / den).ln()))
}

/// `D = 4 Im λ₀ / ((Re λ₀)² + (1 + Im λ₀)²)`
pub fn dissipation_elementary_closed(lambda0: Complex64) -> Result<f64> {
    check_upper(lambda0)?;
    Ok(4.0 * lambda0.im / (lambda0.re * lambda0.re + (1.0 + lambda0.im).powi(2)))
}

/// Additivity of c-entropy under coupling; `+∞` absorbs.
pub fn compose_entropy(s1: Entropy, s2: Entropy) -> Entropy {
    s1 + s2
}

/// `D = D₁ + D₂ − D₁D₂`
pub fn compose_dissipation(d1: f64, d2: f64) -> Result<f64> {
    for (name, d) in [("D1", d1), ("D2", d2)] {
        if !(0.0..=1.0).contains(&d) {
            return Err(Error::Range { name, value: d });
        }
    }
    Ok(d1 + d2 - d1 * d2)
}

/// c-entropy of the coupling of two elementary systems from their parameters.
pub fn coupling_entropy_closed(lambda0: Complex64, mu0: Complex64) -> Result<Entropy> {
    Ok(c_entropy_elementary_closed(lambda0)? + c_entropy_elementary_closed(mu0)?)
}

/// Dissipation of the coupling of two elementary systems:
///
/// ```text
/// D = [4 Im λ₀ (|μ₀|² + 1) + 4 Im μ₀ (|λ₀|² + 1)]
///     / ([(Re λ₀)² + (1 + Im λ₀)²] [(Re μ₀)² + (1 + Im μ₀)²])
/// ```
pub fn coupling_dissipation_closed(lambda0: Complex64, mu0: Complex64) -> Result<f64> {
    check_upper(lambda0)?;
    check_upper(mu0)?;
    let q = |l: Complex64| l.re * l.re + (1.0 + l.im).powi(2);
    let num = 4.0 * lambda0.im * (mu0.norm_sqr() + 1.0) + 4.0 * mu0.im * (lambda0.norm_sqr() + 1.0);
    Ok(num / (q(lambda0) * q(mu0)))
}

/// c-entropy of the elementary system over a grid of `λ₀ = x + iy`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropySurface {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    /// Row-major: `values[j * xs.len() + i]` belongs to `(xs[i], ys[j])`.
    pub values: Vec<Entropy>,
}

impl EntropySurface {
    pub fn get(&self, i: usize, j: usize) -> Entropy {
        self.values[j * self.xs.len() + i]
    }

    pub fn row(&self, j: usize) -> &[Entropy] {
        let nx = self.xs.len();
        &self.values[j * nx..(j + 1) * nx]
    }

    /// Cell index `(i, j)` of the largest value; the first one on ties.
    pub fn argmax(&self) -> (usize, usize) {
        let mut best = 0;
        for (k, v) in self.values.iter().enumerate() {
            if v.value() > self.values[best].value() {
                best = k;
            }
        }
        (best % self.xs.len(), best / self.xs.len())
    }

    /// CSV with header `x,y,S,D`, one LF-terminated row per cell.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,S,D\n");
        for (j, &y) in self.ys.iter().enumerate() {
            for (i, &x) in self.xs.iter().enumerate() {
                let s = self.get(i, j);
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt_sig(x, 12),
                    fmt_sig(y, 12),
                    s,
                    fmt_sig(s.dissipation(), 12)
                ));
            }
        }
        out
    }
}

/// `n` points from `lo` to `hi` inclusive, each computed as a convex
/// combination of the endpoints.
fn grid_axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let last = (n - 1) as f64;
    (0..n)
        .map(|k| (lo * (last - k as f64) + hi * k as f64) / last)
        .collect()
}

pub fn entropy_surface(
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
    nx: usize,
    ny: usize,
) -> Result<EntropySurface> {
    if y_min.is_nan() || y_min <= 0.0 {
        return Err(Error::Domain(format!("y_min must be positive, got {y_min}")));
    }
    if nx < 2 || ny < 2 {
        return Err(Error::Input(format!("grid needs at least 2×2 cells, got {nx}×{ny}")));
    }
    if ![x_min, x_max, y_max].iter().all(|v| v.is_finite()) || x_max < x_min || y_max < y_min {
        return Err(Error::Input("grid bounds must be finite and ordered".into()));
    }
    let xs = grid_axis(x_min, x_max, nx);
    let ys = grid_axis(y_min, y_max, ny);
    let values = ys
        .iter()
        .flat_map(|&y| xs.iter().map(move |&x| Complex64::new(x, y)))
        .map(c_entropy_elementary_closed)
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropySurface { xs, ys, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::couple;
    use crate::elementary::{make_elementary, make_skew_adjoint};
    use crate::num::c64;

    #[test]
    fn classify_at_i_examples() {
        let c = classify_at_i(I, TAU_CLASS).unwrap();
        assert_eq!((c.class, c.kappa, c.a), (DonoghueClass::MHat, Some(0.0), 1.0));

        let c = classify_at_i(I / 3.0, TAU_CLASS).unwrap();
        assert_eq!(c.class, DonoghueClass::MHatKappa);
        assert!((c.kappa.unwrap() - 0.5).abs() < 1e-15);

        let c = classify_at_i(c64(0.5, 0.5), TAU_CLASS).unwrap();
        assert_eq!((c.class, c.kappa), (DonoghueClass::None, None));
        assert_eq!(c.a, 0.5);
    }

    #[test]
    fn classify_at_i_rejects_lower_half_plane() {
        assert!(matches!(classify_at_i(-I, TAU_CLASS), Err(Error::NotHerglotz { .. })));
        assert!(matches!(classify_at_i(c64(1.0, 0.0), TAU_CLASS), Err(Error::NotHerglotz { .. })));
    }

    #[test]
    fn classify_band_around_one() {
        let c = classify_at_i(c64(1e-12, 1.0 + 5e-10), TAU_CLASS).unwrap();
        assert_eq!((c.class, c.kappa), (DonoghueClass::MHat, Some(0.0)));
    }

    #[test]
    fn classify_elementary_examples() {
        assert_eq!(classify_elementary(I).unwrap().class, DonoghueClass::MHat);
        let c = classify_elementary(I * 3.0).unwrap();
        assert_eq!(c.class, DonoghueClass::MHatKappaInverse);
        assert!((c.kappa.unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(classify_elementary(c64(1.0, 1.0)).unwrap().class, DonoghueClass::None);
        assert!(matches!(classify_elementary(c64(0.0, -1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn entropy_examples() {
        let s = c_entropy(&make_elementary(c64(1.0, 1.0)).unwrap().system).unwrap();
        assert!((s.value() - 0.5 * 5f64.ln()).abs() < 1e-12);
        assert_eq!(c_entropy(&make_elementary(I).unwrap().system).unwrap(), Entropy::Infinite);
        let s = c_entropy(&make_elementary(I * 2.0).unwrap().system).unwrap();
        assert!((s.value() - 3f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn entropy_at_plus_i_agrees() {
        for lam in [c64(1.0, 1.0), c64(-0.3, 2.5), c64(0.0, 0.2)] {
            let sys = make_elementary(lam).unwrap().system;
            let minus = c_entropy(&sys).unwrap().value();
            let plus = transfer_eval(&sys, I).unwrap().norm().ln();
            assert!((minus - plus).abs() < 1e-10);
        }
    }

    #[test]
    fn entropy_singular_at_minus_i() {
        // Skew companion of λ₀ = i has T× = [i]; a system with T = [−i] would be invalid,
        // so build one directly.
        let sys = LSystem::scalar(-I, crate::num::ONE, crate::lsystem::Directing::Minus).unwrap();
        assert!(matches!(c_entropy(&sys), Err(Error::SingularResolvent { .. })));
    }

    #[test]
    fn closed_entropy_examples() {
        let s = c_entropy_elementary_closed(c64(1.0, 1.0)).unwrap();
        assert!((s.value() - 0.5 * 5f64.ln()).abs() < 1e-15);
        assert!(c_entropy_elementary_closed(I).unwrap().is_infinite());
        let a = c_entropy_elementary_closed(I * 0.5).unwrap().value();
        let b = c_entropy_elementary_closed(I * 2.0).unwrap().value();
        assert!((a - 3f64.ln()).abs() < 1e-15 && (a - b).abs() < 1e-15);
    }

    #[test]
    fn closed_dissipation_examples() {
        assert!((dissipation_elementary_closed(c64(1.0, 1.0)).unwrap() - 0.8).abs() < 1e-15);
        assert_eq!(dissipation_elementary_closed(I).unwrap(), 1.0);
        let d = dissipation_elementary_closed(I * 2.0).unwrap();
        assert!((d - 8.0 / 9.0).abs() < 1e-15);
        assert!((Entropy::Finite(3f64.ln()).dissipation() - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn entropy_composition() {
        let s = compose_entropy(Entropy::Finite(0.5 * 5f64.ln()), Entropy::Finite(3f64.ln()));
        assert!((s.value() - 0.5 * 45f64.ln()).abs() < 1e-14);
        let c = couple(
            &make_elementary(c64(1.0, 1.0)).unwrap().system,
            &make_elementary(I * 2.0).unwrap().system,
        )
        .unwrap();
        assert!((c_entropy(&c.system).unwrap().value() - s.value()).abs() < 1e-10);

        assert!(compose_entropy(Entropy::Infinite, Entropy::Finite(3f64.ln())).is_infinite());
        let l3 = Entropy::Finite(3f64.ln());
        assert!((compose_entropy(l3, l3).value() - 2.0 * 3f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn dissipation_composition() {
        let d = 8.0 / 9.0;
        assert!((compose_dissipation(d, d).unwrap() - 80.0 / 81.0).abs() < 1e-15);
        let closed = coupling_dissipation_closed(I * 2.0, I * 2.0).unwrap();
        assert!((closed - 80.0 / 81.0).abs() < 1e-15);
        assert_eq!(compose_dissipation(1.0, 0.3).unwrap(), 1.0);
        assert!((compose_dissipation(0.8, 0.5).unwrap() - 0.9).abs() < 1e-15);
        assert!(matches!(compose_dissipation(1.2, 0.5), Err(Error::Range { .. })));
        assert!(matches!(compose_dissipation(0.2, -0.1), Err(Error::Range { .. })));
    }

    #[test]
    fn skew_companion_shares_entropy() {
        let lam = c64(1.0, 1.0);
        let s = c_entropy(&make_skew_adjoint(lam).unwrap().system).unwrap();
        assert!((s.value() - 0.5 * 5f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn kappa_is_exp_minus_entropy_below_one() {
        for a in [0.1, 0.3, 0.75, 0.99] {
            let kappa = classify_elementary(I * a).unwrap().kappa.unwrap();
            let s = c_entropy(&make_elementary(I * a).unwrap().system).unwrap();
            assert!(((-s.value()).exp() - kappa).abs() < 1e-12);
        }
    }

    #[test]
    fn surface_points() {
        let g = entropy_surface(-2.0, 2.0, 1.0, 2.0, 5, 2).unwrap();
        assert_eq!(g.xs, vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
        assert!(g.get(2, 0).is_infinite());
        assert!((g.get(3, 0).value() - 0.5 * 5f64.ln()).abs() < 1e-15);
        assert!((g.get(2, 1).value() - 3f64.ln()).abs() < 1e-15);
        assert_eq!(g.argmax(), (2, 0));
        assert!(matches!(entropy_surface(-1.0, 1.0, 0.0, 1.0, 3, 3), Err(Error::Domain(_))));
        assert!(entropy_surface(-1.0, 1.0, 0.5, 1.0, 1, 3).is_err());
    }

    #[test]
    fn surface_csv() {
        let g = entropy_surface(0.0, 1.0, 1.0, 2.0, 2, 2).unwrap();
        let csv = g.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "x,y,S,D");
        assert_eq!(lines[1], "0.00000000000,1.00000000000,inf,1.00000000000");
        assert_eq!(lines[2], "1.00000000000,1.00000000000,0.804718956217,0.800000000000");
        assert!(csv.ends_with('\n') && !csv.contains('\r'));
    }
}
