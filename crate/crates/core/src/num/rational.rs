use std::fmt;

use num_complex::Complex64;

use super::{rel_diff, sample_points, Polynomial, I, ONE, SAMPLE_COUNT, SAMPLE_SEED, TAU_POLE};
use crate::{Error, Result};

/// Ratio of complex polynomials, kept with a monic denominator.
///
/// No common factors are cancelled. Two rational functions are compared by
/// evaluation on a fixed point set rather than by coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        let lead = den
            .leading()
            .ok_or(Error::Degenerate("zero denominator"))?;
        if num.is_zero() {
            return Ok(Self::polynomial(num));
        }
        if lead == ONE {
            return Ok(RationalFunction { num, den });
        }
        let inv = ONE / lead;
        let mut monic = den.scale(inv).coeffs().to_vec();
        *monic.last_mut().expect("nonzero denominator") = ONE;
        Ok(RationalFunction {
            num: num.scale(inv),
            den: Polynomial::new(monic),
        })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::constant(ONE),
        }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::polynomial(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// Re-normalizes; a no-op on values built through [`new`](Self::new).
    pub fn normalized(&self) -> Self {
        Self::new(self.num.clone(), self.den.clone()).expect("denominator is nonzero")
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let d = self.den.eval(z);
        let threshold = TAU_POLE * self.den.magnitude_at(z);
        if d.norm() < threshold || d.norm() == 0.0 {
            return Err(Error::Pole {
                magnitude: d.norm(),
                threshold,
            });
        }
        Ok(self.num.eval(z) / d)
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RationalFunction::new(num, &self.den * &other.den).expect("product of nonzero denominators")
    }

    pub fn scale(&self, s: Complex64) -> RationalFunction {
        RationalFunction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    /// Substitutes `z ↦ s·z`.
    pub fn compose_scale(&self, s: Complex64) -> RationalFunction {
        RationalFunction::new(self.num.compose_scale(s), self.den.compose_scale(s))
            .expect("nonzero scale keeps the denominator nonzero")
    }

    /// Largest [`rel_diff`] over the fixed comparison points at which both
    /// functions are defined.
    pub fn max_rel_diff(&self, other: &RationalFunction) -> f64 {
        comparison_points(self, other)
            .into_iter()
            .map(|(a, b)| rel_diff(a, b))
            .fold(0.0, f64::max)
    }

    /// Equality by evaluation on the fixed comparison points.
    pub fn approx_eq(&self, other: &RationalFunction, tol: f64) -> bool {
        self.max_rel_diff(other) <= tol
    }
}

/// Values of both functions at the first [`SAMPLE_COUNT`] seeded points where
/// neither has a pole.
fn comparison_points(a: &RationalFunction, b: &RationalFunction) -> Vec<(Complex64, Complex64)> {
    let mut out = Vec::with_capacity(SAMPLE_COUNT);
    for z in sample_points(SAMPLE_SEED, 64 * SAMPLE_COUNT, 3.0) {
        if let (Ok(x), Ok(y)) = (a.eval(z), b.eval(z)) {
            out.push((x, y));
            if out.len() == SAMPLE_COUNT {
                break;
            }
        }
    }
    out
}

pub fn rat_eval(r: &RationalFunction, z: Complex64) -> Result<Complex64> {
    r.eval(z)
}

pub fn rat_mul(r1: &RationalFunction, r2: &RationalFunction) -> RationalFunction {
    r1.mul(r2)
}

/// `V = i(W − 1)(W + 1)⁻¹`, carried out on numerator and denominator.
pub fn cayley_w_to_v(w: &RationalFunction) -> Result<RationalFunction> {
    let den = &w.num + &w.den;
    if den.is_zero() {
        return Err(Error::Degenerate("W + 1 vanishes identically"));
    }
    let num = (&w.num - &w.den).scale(I);
    RationalFunction::new(num, den)
}

/// `W = (1 − iV)(1 + iV)⁻¹`, carried out on numerator and denominator.
pub fn cayley_v_to_w(v: &RationalFunction) -> Result<RationalFunction> {
    let i_num = v.num.scale(I);
    let den = &v.den + &i_num;
    if den.is_zero() {
        return Err(Error::Degenerate("1 + iV vanishes identically"));
    }
    RationalFunction::new(&v.den - &i_num, den)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
