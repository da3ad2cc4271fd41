use num_complex::Complex64;

use super::{RationalFunction, TAU_RESIDUE, TAU_ROOT, ZERO};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub location: f64,
    pub weight: f64,
}

/// Finite positive measure on the real line, sorted by location.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AtomicMeasure {
    atoms: Vec<Atom>,
}

impl AtomicMeasure {
    pub fn new(mut atoms: Vec<Atom>) -> Result<Self> {
        for a in &atoms {
            if !(a.weight > 0.0 && a.weight.is_finite() && a.location.is_finite()) {
                return Err(Error::Spec(format!(
                    "atom at {} has weight {}",
                    a.location, a.weight
                )));
            }
        }
        atoms.sort_by(|a, b| a.location.total_cmp(&b.location));
        if atoms.windows(2).any(|w| w[0].location == w[1].location) {
            return Err(Error::Spec("atom locations must be distinct".into()));
        }
        Ok(AtomicMeasure { atoms })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight).sum()
    }

    /// `∫ dσ(t) / (t − z)`
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.atoms
            .iter()
            .map(|a| a.weight / (Complex64::new(a.location, 0.0) - z))
            .sum()
    }

    /// `∫ t / (1 + t²) dσ(t)`; zero for measures in the normalized class.
    pub fn first_moment(&self) -> f64 {
        self.atoms
            .iter()
            .map(|a| a.location * a.weight / (1.0 + a.location * a.location))
            .sum()
    }

    /// `∫ dσ(t) / (1 + t²)`, which equals `Im M(i)`.
    pub fn mass_at_i(&self) -> f64 {
        self.atoms
            .iter()
            .map(|a| a.weight / (1.0 + a.location * a.location))
            .sum()
    }
}

/// Recovers the atoms of `r(z) = Σ w_j / (t_j − z)` from a strictly proper
/// rational function with simple real poles and positive weights.
pub fn partial_fractions_real_poles(r: &RationalFunction) -> Result<AtomicMeasure> {
    let (num, den) = (r.num(), r.den());
    if num.is_zero() {
        return Ok(AtomicMeasure::default());
    }
    let (dn, dd) = (num.degree().unwrap_or(0), den.degree().unwrap_or(0));
    if dn >= dd {
        return Err(Error::NotHerglotzAtomic(format!(
            "numerator degree {dn} is not below denominator degree {dd}"
        )));
    }

    let poles = den.roots();
    for p in &poles {
        if p.im.abs() > TAU_ROOT * p.norm().max(1.0) {
            return Err(Error::NotHerglotzAtomic(format!("complex pole at {p}")));
        }
    }
    for (i, p) in poles.iter().enumerate() {
        for q in &poles[i + 1..] {
            if (p - q).norm() <= TAU_ROOT * p.norm().max(1.0) {
                return Err(Error::NotHerglotzAtomic(format!("repeated pole near {p}")));
            }
        }
    }

    let dden = den.derivative();
    let mut atoms = Vec::with_capacity(poles.len());
    for p in poles {
        let t = Complex64::new(p.re, 0.0);
        let slope = dden.eval(t);
        if slope == ZERO {
            return Err(Error::NotHerglotzAtomic(format!("repeated pole near {t}")));
        }
        // r(z) ≈ res/(z − t) near t, so the weight is −res.
        let weight = -(num.eval(t) / slope);
        let scale = weight.norm().max(1.0);
        if weight.im.abs() > TAU_RESIDUE * scale || weight.re <= TAU_RESIDUE * scale {
            return Err(Error::NotHerglotzAtomic(format!(
                "weight {weight} at pole {} is not positive",
                t.re
            )));
        }
        atoms.push(Atom {
            location: t.re,
            weight: weight.re,
        });
    }
    AtomicMeasure::new(atoms).map_err(|e| Error::NotHerglotzAtomic(e.to_string()))
}
