//! The one-dimensional L-system with main operator `T h = λ₀ h` (`Im λ₀ > 0`),
//! channel `K c = √(Im λ₀)·c` and `J = 1`, together with its skew-adjoint
//! companion `T× h = −λ̄₀ h`.

use serde::{Deserialize, Serialize};

use crate::lsystem::{Directing, LSystem};
use crate::num::{is_finite, Complex64, ComplexJson, Polynomial, RationalFunction, ONE};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ElementarySystem {
    pub lambda0: Complex64,
    pub system: LSystem,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkewAdjointSystem {
    /// Parameter of the originating elementary system.
    pub lambda0: Complex64,
    pub system: LSystem,
}

/// JSON descriptor `{ "lambda0": {re, im} }`; `"skew": true` selects the
/// skew-adjoint companion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementaryDescriptor {
    pub lambda0: ComplexJson,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skew: bool,
}

pub(crate) fn check_upper(lambda0: Complex64) -> Result<()> {
    if !is_finite(lambda0) {
        return Err(Error::Domain(format!("λ₀ = {lambda0} is not finite")));
    }
    if lambda0.im <= 0.0 {
        return Err(Error::Domain(format!(
            "Im λ₀ must be positive, got λ₀ = {}{:+}i",
            lambda0.re, lambda0.im
        )));
    }
    Ok(())
}

fn channel(lambda0: Complex64) -> Complex64 {
    Complex64::new(lambda0.im.sqrt(), 0.0)
}

pub fn make_elementary(lambda0: Complex64) -> Result<ElementarySystem> {
    check_upper(lambda0)?;
    Ok(ElementarySystem {
        lambda0,
        system: LSystem::scalar(lambda0, channel(lambda0), Directing::Plus)?,
    })
}

pub fn make_skew_adjoint(lambda0: Complex64) -> Result<SkewAdjointSystem> {
    check_upper(lambda0)?;
    Ok(SkewAdjointSystem {
        lambda0,
        system: LSystem::scalar(-lambda0.conj(), channel(lambda0), Directing::Plus)?,
    })
}

/// `W(z) = (λ̄₀ − z) / (λ₀ − z)`
pub fn transfer_closed(lambda0: Complex64) -> Result<RationalFunction> {
    check_upper(lambda0)?;
    RationalFunction::new(
        Polynomial::linear(lambda0.conj(), -ONE),
        Polynomial::linear(lambda0, -ONE),
    )
}

/// `V(z) = Im λ₀ / (Re λ₀ − z)`
pub fn impedance_closed(lambda0: Complex64) -> Result<RationalFunction> {
    check_upper(lambda0)?;
    RationalFunction::new(
        Polynomial::constant(Complex64::new(lambda0.im, 0.0)),
        Polynomial::linear(Complex64::new(lambda0.re, 0.0), -ONE),
    )
}

/// `W×(z) = (λ₀ + z) / (λ̄₀ + z)`
pub fn skew_transfer_closed(lambda0: Complex64) -> Result<RationalFunction> {
    check_upper(lambda0)?;
    RationalFunction::new(
        Polynomial::linear(lambda0, ONE),
        Polynomial::linear(lambda0.conj(), ONE),
    )
}

/// `V×(z) = −Im λ₀ / (Re λ₀ + z)`
pub fn skew_impedance_closed(lambda0: Complex64) -> Result<RationalFunction> {
    check_upper(lambda0)?;
    RationalFunction::new(
        Polynomial::constant(Complex64::new(-lambda0.im, 0.0)),
        Polynomial::linear(Complex64::new(lambda0.re, 0.0), ONE),
    )
}

impl ElementarySystem {
    pub fn transfer(&self) -> RationalFunction {
        transfer_closed(self.lambda0).expect("λ₀ checked on construction")
    }

    pub fn impedance(&self) -> RationalFunction {
        impedance_closed(self.lambda0).expect("λ₀ checked on construction")
    }
}

impl SkewAdjointSystem {
    pub fn transfer(&self) -> RationalFunction {
        skew_transfer_closed(self.lambda0).expect("λ₀ checked on construction")
    }

    pub fn impedance(&self) -> RationalFunction {
        skew_impedance_closed(self.lambda0).expect("λ₀ checked on construction")
    }
}
