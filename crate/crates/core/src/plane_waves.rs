//! Plane-wave solution families of the free Dirac equation and their printed
//! amplitude tables.
//!
//! Four branches exist: two for positive energy and two for negative energy.
//! In `Consistent` mode a spec must satisfy the dispersion relation
//! `energy^2 = c^2 p^2 + m^2 c^4`; `Literal` mode reproduces the published
//! table values `energy = m c^2`, `p_y = m c` exactly as printed even though
//! they violate dispersion, and the residual of such specs is reported rather
//! than asserted.

use num_complex::Complex64;

use crate::algebra::{dirac_operator, Bispinor, DiracForm};
use crate::error::{CoreError, Result};
use crate::params::PhysParams;
use crate::vec3::{dot3, Vec3};

const DISPERSION_RTOL: f64 = 1e-12;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecMode {
    /// The dispersion relation is enforced at construction.
    Consistent,
    /// Printed-table values, no dispersion constraint.
    Literal,
}

/// One plane-wave solution candidate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWaveSpec {
    /// Branch 1..=4; 1 and 2 carry positive energy, 3 and 4 negative.
    pub branch: u8,
    /// Signed energy.
    pub energy: f64,
    /// Momentum vector; only `p_y` enters the y-propagating phase.
    pub momentum: Vec3,
    pub mass: f64,
    /// Initial phase in radians.
    pub phase: f64,
    /// Overall amplitude scale on the printed amplitude set.
    pub amplitude: f64,
    pub mode: SpecMode,
}

impl PlaneWaveSpec {
    /// Dispersion-consistent spec with the branch's energy sign.
    pub fn consistent(
        branch: u8,
        momentum: Vec3,
        mass: f64,
        phase: f64,
        ph: &PhysParams,
    ) -> Result<Self> {
        validate_branch(branch)?;
        if mass < 0.0 {
            return Err(CoreError::InvalidParam("mass must be non-negative".into()));
        }
        let magnitude = dispersion_energy(momentum, mass, ph);
        let energy = if branch <= 2 { magnitude } else { -magnitude };
        if energy == 0.0 {
            return Err(CoreError::DegenerateSpec(
                "zero energy: massless spec needs nonzero momentum".into(),
            ));
        }
        Ok(Self {
            branch,
            energy,
            momentum,
            mass,
            phase,
            amplitude: 1.0,
            mode: SpecMode::Consistent,
        })
    }

    /// Spec with explicit energy. `Consistent` mode checks dispersion and the
    /// branch sign; `Literal` mode takes the numbers as given.
    pub fn with_energy(
        branch: u8,
        energy: f64,
        momentum: Vec3,
        mass: f64,
        phase: f64,
        mode: SpecMode,
        ph: &PhysParams,
    ) -> Result<Self> {
        validate_branch(branch)?;
        if mode == SpecMode::Consistent {
            let want = dispersion_energy(momentum, mass, ph);
            if (energy.abs() - want).abs() > DISPERSION_RTOL * want.max(f64::MIN_POSITIVE) {
                return Err(CoreError::DegenerateSpec(format!(
                    "energy {energy} violates dispersion (expected magnitude {want})"
                )));
            }
            let sign_ok = if branch <= 2 {
                energy > 0.0
            } else {
                energy < 0.0
            };
            if !sign_ok {
                return Err(CoreError::DegenerateSpec(format!(
                    "branch {branch} does not match the sign of energy {energy}"
                )));
            }
        }
        Ok(Self {
            branch,
            energy,
            momentum,
            mass,
            phase,
            amplitude: 1.0,
            mode,
        })
    }

    /// The published table configuration for the given branch:
    /// `energy = +-m c^2`, `p = (0, m c, 0)`, `phase = pi/2`.
    pub fn printed_table(branch: u8, mass: f64, ph: &PhysParams) -> Result<Self> {
        validate_branch(branch)?;
        let rest = mass * ph.c * ph.c;
        let energy = if branch <= 2 { rest } else { -rest };
        Self::with_energy(
            branch,
            energy,
            [0.0, mass * ph.c, 0.0],
            mass,
            std::f64::consts::FRAC_PI_2,
            SpecMode::Literal,
            ph,
        )
    }

    pub fn with_amplitude(mut self, amplitude: f64) -> Result<Self> {
        if !(amplitude > 0.0) {
            return Err(CoreError::InvalidParam("amplitude must be positive".into()));
        }
        self.amplitude = amplitude;
        Ok(self)
    }
}

fn validate_branch(branch: u8) -> Result<()> {
    if (1..=4).contains(&branch) {
        Ok(())
    } else {
        Err(CoreError::InvalidParam(format!(
            "branch {branch} not in 1..=4"
        )))
    }
}

fn dispersion_energy(momentum: Vec3, mass: f64, ph: &PhysParams) -> f64 {
    let c = ph.c;
    (c * c * dot3(momentum, momentum) + mass * mass * c.powi(4)).sqrt()
}

/// `e^{i phi}` with exact units at the quadrant angles so printed table
/// entries like `i/2` come out bit-exact.
fn unit_phase(phi: f64) -> Complex64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    if phi == 0.0 {
        Complex64::new(1.0, 0.0)
    } else if phi == FRAC_PI_2 {
        Complex64::new(0.0, 1.0)
    } else if phi == PI || phi == -PI {
        Complex64::new(-1.0, 0.0)
    } else if phi == -FRAC_PI_2 || phi == 3.0 * FRAC_PI_2 {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::from_polar(1.0, phi)
    }
}

/// The branch amplitude set, scaled by `amplitude * e^{i phase}`.
pub fn amplitude_set(spec: &PlaneWaveSpec, ph: &PhysParams) -> Result<Bispinor> {
    validate_branch(spec.branch)?;
    let c = ph.c;
    let rest = spec.mass * c * c;
    let (px, py, pz) = (spec.momentum[0], spec.momentum[1], spec.momentum[2]);
    let p_plus = Complex64::new(px, py); // p_x + i p_y
    let p_minus = Complex64::new(px, -py); // p_x - i p_y

    let positive = spec.branch <= 2;
    if positive && spec.energy <= 0.0 {
        return Err(CoreError::DegenerateSpec(format!(
            "branch {} needs positive energy, got {}",
            spec.branch, spec.energy
        )));
    }
    if !positive && spec.energy >= 0.0 {
        return Err(CoreError::DegenerateSpec(format!(
            "branch {} needs negative energy, got {}",
            spec.branch, spec.energy
        )));
    }
    let denom = if positive {
        spec.energy + rest
    } else {
        -spec.energy + rest
    };
    if denom.abs() < 1e-300 {
        return Err(CoreError::DegenerateSpec(
            "vanishing energy denominator".into(),
        ));
    }

    let b = match spec.branch {
        1 => [
            Complex64::new(-c * pz / denom, 0.0),
            -(p_plus * (c / denom)),
            Complex64::new(1.0, 0.0),
            Complex64::ZERO,
        ],
        2 => [
            -(p_minus * (c / denom)),
            Complex64::new(c * pz / denom, 0.0),
            Complex64::ZERO,
            Complex64::new(1.0, 0.0),
        ],
        3 => [
            Complex64::new(1.0, 0.0),
            Complex64::ZERO,
            Complex64::new(c * pz / denom, 0.0),
            p_plus * (c / denom),
        ],
        4 => [
            Complex64::ZERO,
            Complex64::new(1.0, 0.0),
            p_minus * (c / denom),
            Complex64::new(-c * pz / denom, 0.0),
        ],
        _ => unreachable!(),
    };
    let factor = unit_phase(spec.phase) * spec.amplitude;
    Ok(Bispinor::new(b).scale(factor))
}

/// [`amplitude_set`] divided by its norm.
pub fn amplitude_set_unit(spec: &PlaneWaveSpec, ph: &PhysParams) -> Result<Bispinor> {
    let b = amplitude_set(spec, ph)?;
    let n = b.norm();
    if n == 0.0 {
        return Err(CoreError::ZeroField);
    }
    Ok(b.scale(Complex64::new(1.0 / n, 0.0)))
}

/// `psi_j(y, t) = B_j exp(-(i/hbar)(energy t - p_y y))`.
pub fn plane_wave(spec: &PlaneWaveSpec, ph: &PhysParams, y: f64, t: f64) -> Result<Bispinor> {
    let b = amplitude_set(spec, ph)?;
    let arg = -(spec.energy * t - spec.momentum[1] * y) / ph.hbar;
    Ok(b.scale(Complex64::from_polar(1.0, arg)))
}

/// Apply the point Dirac operator with the plane wave's own eigenvalues and
/// return `|op B| / |B|`. Zero exactly when the spec is consistent and the
/// form matches; literal-table specs give an order-one value.
pub fn dirac_plane_residual(spec: &PlaneWaveSpec, ph: &PhysParams, form: DiracForm) -> Result<f64> {
    let b = amplitude_set(spec, ph)?;
    let norm = b.norm();
    if norm == 0.0 {
        return Err(CoreError::ZeroField);
    }
    let op = dirac_operator(spec.energy, spec.momentum, spec.mass, ph.c, form);
    Ok(op.mul_vec(&b).norm() / norm)
}

/// Convenience for tests and reports: the four branch amplitudes of a
/// consistent `(energy, -energy, p)` family.
pub fn amplitude_family(
    momentum: Vec3,
    mass: f64,
    phase: f64,
    ph: &PhysParams,
) -> Result<[Bispinor; 4]> {
    let mut out = [Bispinor::zero(); 4];
    for branch in 1..=4u8 {
        let spec = PlaneWaveSpec::consistent(branch, momentum, mass, phase, ph)?;
        out[branch as usize - 1] = amplitude_set(&spec, ph)?;
    }
    Ok(out)
}
