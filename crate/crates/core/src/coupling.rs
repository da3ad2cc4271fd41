//! Coupling `Θ = Θ₁·Θ₂` of two L-systems.
//!
//! The coupled main operator is block upper triangular,
//!
//! ```text
//! T = | T₁  2i K₁K₂* |      K = | K₁ |
//!     | 0   T₂       |          | K₂ |
//! ```
//!
//! so `Im T = K K*` whenever both factors satisfy their own colligation
//! condition with `J = 1`, and the transfer function of the coupling is the
//! product of the factor transfer functions.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::elementary::{self, check_upper, ElementaryDescriptor};
use crate::lsystem::{validate, Directing, LSystem, SystemDescriptor, TAU_COLLIGATION};
use crate::num::{Complex64, Polynomial, RationalFunction, I, ONE};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CoupledSystem {
    pub system: LSystem,
    pub factors: (LSystem, LSystem),
}

pub fn couple(sys1: &LSystem, sys2: &LSystem) -> Result<CoupledSystem> {
    for (idx, sys) in [sys1, sys2].into_iter().enumerate() {
        if sys.directing() != Directing::Plus {
            return Err(Error::Incompatible(format!(
                "factor {} has J = −1; coupling requires J = 1",
                idx + 1
            )));
        }
        let report = validate(sys, TAU_COLLIGATION);
        if !report.passed {
            return Err(Error::Colligation {
                residual: report.residual,
                threshold: report.threshold,
            });
        }
    }

    let (n1, n2) = (sys1.dim(), sys2.dim());
    let n = n1 + n2;
    let mut main = DMatrix::zeros(n, n);
    main.view_mut((0, 0), (n1, n1)).copy_from(sys1.main());
    main.view_mut((n1, n1), (n2, n2)).copy_from(sys2.main());
    let bridge = sys1.channel() * sys2.channel().adjoint() * (I * 2.0);
    main.view_mut((0, n1), (n1, n2)).copy_from(&bridge);

    let mut channel = DVector::zeros(n);
    channel.rows_mut(0, n1).copy_from(sys1.channel());
    channel.rows_mut(n1, n2).copy_from(sys2.channel());

    Ok(CoupledSystem {
        system: LSystem::new(main, channel, Directing::Plus)?,
        factors: (sys1.clone(), sys2.clone()),
    })
}

/// `W(z) = (λ̄₀ − z)(μ̄₀ − z) / ((λ₀ − z)(μ₀ − z))`
pub fn coupling_transfer_closed(lambda0: Complex64, mu0: Complex64) -> Result<RationalFunction> {
    Ok(elementary::transfer_closed(lambda0)?.mul(&elementary::transfer_closed(mu0)?))
}

/// `V(z) = [Im(λ₀+μ₀) z − Im(λ₀μ₀)] / [Re(λ₀+μ₀) z − Re(λ₀μ₀) − z²]`
pub fn coupling_impedance_closed(lambda0: Complex64, mu0: Complex64) -> Result<RationalFunction> {
    check_upper(lambda0)?;
    check_upper(mu0)?;
    let (sum, prod) = (lambda0 + mu0, lambda0 * mu0);
    let re = |x: f64| Complex64::new(x, 0.0);
    RationalFunction::new(
        Polynomial::linear(re(-prod.im), re(sum.im)),
        Polynomial::new(vec![re(-prod.re), re(sum.re), -ONE]),
    )
}

/// `Θ·Θ×`, with main operator `[[λ₀, λ₀ − λ̄₀], [0, −λ̄₀]]`.
pub fn self_skew_coupling(lambda0: Complex64) -> Result<CoupledSystem> {
    let theta = elementary::make_elementary(lambda0)?;
    let skew = elementary::make_skew_adjoint(lambda0)?;
    couple(&theta.system, &skew.system)
}

/// `W(z) = (|λ₀|² − 2i Im λ₀ z − z²) / (|λ₀|² + 2i Im λ₀ z − z²)`
pub fn self_skew_transfer_closed(lambda0: Complex64) -> Result<RationalFunction> {
    check_upper(lambda0)?;
    let m = Complex64::new(lambda0.norm_sqr(), 0.0);
    let b = I * (2.0 * lambda0.im);
    RationalFunction::new(
        Polynomial::new(vec![m, -b, -ONE]),
        Polynomial::new(vec![m, b, -ONE]),
    )
}

/// `V(z) = 2 Im λ₀ z / (|λ₀|² − z²)`
pub fn self_skew_impedance_closed(lambda0: Complex64) -> Result<RationalFunction> {
    check_upper(lambda0)?;
    let zero = Complex64::new(0.0, 0.0);
    RationalFunction::new(
        Polynomial::linear(zero, Complex64::new(2.0 * lambda0.im, 0.0)),
        Polynomial::new(vec![Complex64::new(lambda0.norm_sqr(), 0.0), zero, -ONE]),
    )
}

/// A coupling factor in JSON: either a full matrix descriptor or an
/// elementary `{ "lambda0": .. }` descriptor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FactorDescriptor {
    Matrix(SystemDescriptor),
    Elementary(ElementaryDescriptor),
}

impl FactorDescriptor {
    pub fn to_system(&self) -> Result<LSystem> {
        match self {
            FactorDescriptor::Matrix(d) => LSystem::from_descriptor(d),
            FactorDescriptor::Elementary(d) => {
                let lambda0 = Complex64::try_from(d.lambda0)?;
                Ok(if d.skew {
                    elementary::make_skew_adjoint(lambda0)?.system
                } else {
                    elementary::make_elementary(lambda0)?.system
                })
            }
        }
    }

    /// `λ₀` when the factor is a plain (non-skew) elementary system.
    pub fn elementary_parameter(&self) -> Option<Complex64> {
        match self {
            FactorDescriptor::Elementary(d) if !d.skew => Complex64::try_from(d.lambda0).ok(),
            _ => None,
        }
    }
}

/// JSON descriptor `{ "factors": [<factor>, <factor>] }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CouplingDescriptor {
    pub factors: Vec<FactorDescriptor>,
}

impl CouplingDescriptor {
    pub fn couple(&self) -> Result<CoupledSystem> {
        match self.factors.as_slice() {
            [a, b] => couple(&a.to_system()?, &b.to_system()?),
            other => Err(Error::Input(format!(
                "a coupling needs exactly two factors, got {}",
                other.len()
            ))),
        }
    }
}
