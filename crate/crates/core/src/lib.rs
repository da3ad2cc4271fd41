//! Canonical Livšic L-systems built on one-dimensional multiplication operators.
//!
//! The crate covers the whole chain from the operator colligation `(T, K, J)` to
//! observable quantities:
//!
//! - [`num`]: complex polynomials, rational functions, Cayley transforms and
//!   extraction of atomic representing measures.
//! - [`lsystem`]: matrix-backed L-systems whose transfer and impedance functions
//!   are evaluated through resolvent solves. Every closed form in the crate is
//!   cross-checked against this module.
//! - [`elementary`]: the one-dimensional system with main operator `λ₀` and its
//!   skew-adjoint companion `−λ̄₀`.
//! - [`coupling`]: the block-triangular coupling `Θ₁·Θ₂`.
//! - [`analysis`]: Donoghue classification, c-entropy and dissipation.
//! - [`circuit`]: Foster-form LC synthesis and netlist emission.
//! - [`crosscheck`]: seeded closed-form vs resolvent comparison suite.
//! - [`cli`]: command dispatch used by the `livsic` binary.
//!
//! ```
//! use livsic::{analysis, elementary, num::c64};
//!
//! let theta = elementary::make_elementary(c64(1.0, 1.0)).unwrap();
//! let s = analysis::c_entropy(&theta.system).unwrap();
//! assert!((s.value() - 0.5 * 5f64.ln()).abs() < 1e-12);
//! ```

pub mod analysis;
pub mod circuit;
pub mod cli;
pub mod coupling;
pub mod crosscheck;
pub mod elementary;
mod error;
pub mod lsystem;
pub mod num;

pub use error::{Error, Result};
