use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Polynomial, ZERO};

/// Roots via eigenvalues of the companion matrix, followed by a few Newton
/// steps against the original coefficients.
pub(crate) fn polynomial_roots(p: &Polynomial) -> Vec<Complex64> {
    let n = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    let lead = p.leading().expect("nonzero polynomial");
    let monic: Vec<Complex64> = p.coeffs().iter().map(|c| c / lead).collect();
    if n == 1 {
        return vec![-monic[0]];
    }

    let mut companion = DMatrix::from_element(n, n, ZERO);
    for i in 1..n {
        companion[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        companion[(i, n - 1)] = -monic[i];
    }
    let eig = companion
        .clone()
        .schur()
        .eigenvalues()
        .expect("complex Schur form is triangular");

    let dp = p.derivative();
    eig.iter().map(|&r| polish(p, &dp, r)).collect()
}

fn polish(p: &Polynomial, dp: &Polynomial, mut r: Complex64) -> Complex64 {
    for _ in 0..4 {
        let d = dp.eval(r);
        if d == ZERO {
            break;
        }
        let next = r - p.eval(r) / d;
        if !(next.re.is_finite() && next.im.is_finite()) || p.eval(next).norm() >= p.eval(r).norm() {
            break;
        }
        r = next;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::c64;

    fn sorted_by_re(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn quadratic_real_roots() {
        let p = Polynomial::new(vec![c64(-2.0, 0.0), ZERO, c64(1.0, 0.0)]);
        let r = sorted_by_re(p.roots());
        assert!((r[0] - c64(-2f64.sqrt(), 0.0)).norm() < 1e-14);
        assert!((r[1] - c64(2f64.sqrt(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn complex_roots_recovered() {
        let want = [c64(1.0, 1.0), c64(-0.5, 2.0), c64(3.0, -0.25), c64(0.0, 0.0)];
        let p = Polynomial::from_roots(&want);
        let got = sorted_by_re(p.roots());
        let want = sorted_by_re(want.to_vec());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).norm() < 1e-12, "{g} vs {w}");
        }
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(Polynomial::constant(c64(2.0, 0.0)).roots().is_empty());
        assert!(Polynomial::zero().roots().is_empty());
    }
}
