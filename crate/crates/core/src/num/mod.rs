//! Algebraic substrate: complex scalars, polynomials, rational functions, Cayley
//! transforms and atomic measures.

mod format;
mod measure;
mod poly;
mod rational;
mod roots;
mod sample;

pub use format::{fmt_complex, fmt_sig};
pub use measure::{partial_fractions_real_poles, Atom, AtomicMeasure};
pub use num_complex::Complex64;
pub use poly::Polynomial;
pub use rational::{cayley_v_to_w, cayley_w_to_v, rat_eval, rat_mul, RationalFunction};
pub use sample::{rel_diff, sample_points, SAMPLE_COUNT, SAMPLE_SEED};

use serde::{Deserialize, Serialize};

/// Realness and simplicity threshold for computed roots.
pub const TAU_ROOT: f64 = 1e-8;
/// Threshold on the imaginary part (and sign) of extracted residues.
pub const TAU_RESIDUE: f64 = 1e-8;
/// Relative pole threshold for rational evaluation.
pub const TAU_POLE: f64 = 1e-12;

pub const I: Complex64 = Complex64::new(0.0, 1.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[inline]
pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// JSON form of a complex scalar, `{ "re": .., "im": .. }`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

impl TryFrom<ComplexJson> for Complex64 {
    type Error = crate::Error;

    fn try_from(value: ComplexJson) -> crate::Result<Self> {
        let z = c64(value.re, value.im);
        if is_finite(z) {
            Ok(z)
        } else {
            Err(crate::Error::Input(format!(
                "non-finite complex value {}{:+}i",
                value.re, value.im
            )))
        }
    }
}
