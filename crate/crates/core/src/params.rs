//! Dimensional constants shared by the wave and evolution modules.

/// Mass, light speed and reduced Planck constant in one bundle.
///
/// The default working system is natural units (`c = hbar = 1`); the Gaussian
/// CGS constructor exists so every check can also run with explicit
/// dimensions. All formulas in this crate carry `c` and `hbar` explicitly, so
/// switching systems is a matter of passing a different `PhysParams`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysParams {
    /// Particle mass (g in CGS, 1 by convention in natural units).
    pub mass: f64,
    /// Speed of light (cm/s in CGS).
    pub c: f64,
    /// Reduced Planck constant (erg s in CGS).
    pub hbar: f64,
}

impl PhysParams {
    /// Natural units with unit mass.
    pub fn natural() -> Self {
        Self {
            mass: 1.0,
            c: 1.0,
            hbar: 1.0,
        }
    }

    /// Natural units with the given mass.
    pub fn natural_with_mass(mass: f64) -> Self {
        Self {
            mass,
            c: 1.0,
            hbar: 1.0,
        }
    }

    /// Electron constants in Gaussian CGS units.
    pub fn gaussian_electron() -> Self {
        Self {
            mass: 9.109_383_701_5e-28,
            c: 2.997_924_58e10,
            hbar: 1.054_571_817e-27,
        }
    }

    /// Rest frequency `omega = m c^2 / hbar`.
    pub fn omega(&self) -> f64 {
        self.mass * self.c * self.c / self.hbar
    }

    /// Rest energy `m c^2`.
    pub fn rest_energy(&self) -> f64 {
        self.mass * self.c * self.c
    }

    /// Reduced Compton length `hbar / (m c)`; the natural radius scale.
    pub fn compton_length(&self) -> f64 {
        self.hbar / (self.mass * self.c)
    }
}
