//! Self-action functionals, the nonlinear residual with its self-consistent
//! interaction volume, and the quartic bilinear identities.
//!
//! Energy and momentum of the wave are localized over a finite volume
//! `delta_tau = zeta r_p^3` as point value times volume; full spatial
//! integrals of a plane wave diverge, so the finite-volume form is the
//! object of study, not an approximation knob.

use num_complex::Complex64;

use crate::algebra::{dirac_alpha, Bispinor, ComplexMatrix4};
use crate::error::{CoreError, Result};
use crate::field_map::{real_invariants, EMField};
use crate::params::PhysParams;
use crate::plane_waves::{amplitude_set, PlaneWaveSpec, SpecMode};
use crate::vec3::Vec3;

const PI8: f64 = 8.0 * std::f64::consts::PI;

/// Volume `zeta * r_p^3` over which the wave's energy is localized.
/// `zeta` defaults to the sphere factor `4 pi / 3` and is configurable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelfActionParams {
    pub delta_tau: f64,
    pub zeta: f64,
    pub r_p: f64,
}

pub const DEFAULT_ZETA: f64 = 4.0 * std::f64::consts::PI / 3.0;

impl SelfActionParams {
    pub fn new(delta_tau: f64, zeta: f64) -> Result<Self> {
        if !(delta_tau >= 0.0) || !delta_tau.is_finite() {
            return Err(CoreError::InvalidParam(format!(
                "delta_tau = {delta_tau} must be finite and non-negative"
            )));
        }
        if !(zeta > 0.0) {
            return Err(CoreError::InvalidParam(format!(
                "zeta = {zeta} must be positive"
            )));
        }
        Ok(Self {
            delta_tau,
            zeta,
            r_p: (delta_tau / zeta).cbrt(),
        })
    }
}

/// Localized energy and momentum of one field configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnergyMomentum {
    pub energy: f64,
    pub momentum: Vec3,
}

/// `(1/8 pi) psi^dag psi`.
pub fn energy_density(psi: &Bispinor) -> f64 {
    psi.norm_sq() / PI8
}

/// `(1/8 pi)(E^2 + H^2)` for real fields. Agrees bit for bit with
/// [`energy_density`] on dictionary-mapped y-waves because both sides sum the
/// four squares in the same association.
pub fn energy_density_em(f: &EMField) -> f64 {
    let inv = real_invariants(f);
    (inv.e_sq + inv.h_sq) / PI8
}

/// `-(c/8 pi) psi^dag alpha psi`, one component per vector matrix.
pub fn momentum_density(psi: &Bispinor, c: f64) -> Vec3 {
    let mut out = [0.0; 3];
    for k in 0..3 {
        let alpha = dirac_alpha(k + 1).expect("index in range");
        out[k] = -(c / PI8) * psi.bilinear(&alpha);
    }
    out
}

/// `(c/4 pi) E x H` for real fields. The y component matches
/// [`momentum_density`] exactly on dictionary-mapped y-waves.
pub fn poynting(f: &EMField, c: f64) -> Vec3 {
    let inv = real_invariants(f);
    let factor = c / (4.0 * std::f64::consts::PI);
    [
        inv.e_cross_h[0] * factor,
        inv.e_cross_h[1] * factor,
        inv.e_cross_h[2] * factor,
    ]
}

/// Point-value-times-volume energy and momentum:
/// `e_p = delta_tau U`, `p_p = -(delta_tau / 8 pi c) psi^dag alpha psi`.
pub fn photon_energy_momentum(psi: &Bispinor, sa: &SelfActionParams, c: f64) -> EnergyMomentum {
    let u = energy_density(psi);
    let s = momentum_density(psi, c);
    EnergyMomentum {
        energy: sa.delta_tau * u,
        momentum: [
            sa.delta_tau * s[0] / (c * c),
            sa.delta_tau * s[1] / (c * c),
            sa.delta_tau * s[2] / (c * c),
        ],
    }
}

/// Residual of `[alpha_0 (e - e_p) + c alpha.(p - p_p)] psi = 0` on the
/// spec's amplitude set, with `(e_p, p_p)` computed from the wave itself.
/// The quartic self-interaction enters as the vector bilinear contracted
/// against the vector matrices componentwise, matching the momentum term.
pub fn nonlinear_residual(
    spec: &PlaneWaveSpec,
    sa: &SelfActionParams,
    ph: &PhysParams,
) -> Result<f64> {
    let psi = amplitude_set(spec, ph)?;
    let norm = psi.norm();
    if norm == 0.0 {
        return Err(CoreError::ZeroField);
    }
    let em = photon_energy_momentum(&psi, sa, ph.c);
    let mut op = ComplexMatrix4::identity().scale(Complex64::new(spec.energy - em.energy, 0.0));
    for k in 0..3 {
        let alpha = dirac_alpha(k + 1).expect("index in range");
        op = op.add(&alpha.scale(Complex64::new(
            ph.c * (spec.momentum[k] - em.momentum[k]),
            0.0,
        )));
    }
    Ok(op.mul_vec(&psi).norm() / norm)
}

/// Self-consistency solution: the volume plus the residual left at it.
#[derive(Clone, Copy, Debug)]
pub struct SelfConsistentSolution {
    pub sa: SelfActionParams,
    pub residual: f64,
}

/// Find `delta_tau` minimizing [`nonlinear_residual`] for a consistent
/// massive spec. Bracketed bisection on the derivative of the squared
/// residual (an exact quadratic in `delta_tau`, so the central difference is
/// exact), followed by a secant polish.
pub fn self_consistent_delta_tau(
    spec: &PlaneWaveSpec,
    ph: &PhysParams,
    zeta: f64,
) -> Result<SelfConsistentSolution> {
    if spec.mass <= 0.0 {
        return Err(CoreError::InvalidParam(
            "self-consistency needs a massive wave".into(),
        ));
    }
    if spec.mode != SpecMode::Consistent {
        return Err(CoreError::InvalidParam(
            "self-consistency needs a dispersion-consistent spec".into(),
        ));
    }
    let upper = 1e3 * (ph.hbar / (spec.mass * ph.c)).powi(3);
    let r_sq = |tau: f64| -> Result<f64> {
        let sa = SelfActionParams::new(tau, zeta)?;
        Ok(nonlinear_residual(spec, &sa, ph)?.powi(2))
    };
    let h = upper * 1e-6;
    let slope = |tau: f64| -> Result<f64> {
        let hi = r_sq(tau + h)?;
        let lo = r_sq((tau - h).max(0.0))?;
        let width = (tau + h) - (tau - h).max(0.0);
        Ok((hi - lo) / width)
    };

    let mut lo = 0.0;
    let mut hi = upper;
    let slope_lo = slope(lo)?;
    let slope_hi = slope(hi)?;
    if slope_lo >= 0.0 || slope_hi <= 0.0 {
        return Err(CoreError::NoBracket { upper });
    }
    for _ in 0..200 {
        let midpoint = 0.5 * (lo + hi);
        if slope(midpoint)? < 0.0 {
            lo = midpoint;
        } else {
            hi = midpoint;
        }
        if hi - lo < upper * 1e-14 {
            break;
        }
    }
    // secant polish on the slope
    let mut a = lo;
    let mut b = hi;
    let mut fa = slope(a)?;
    for _ in 0..8 {
        let fb = slope(b)?;
        if (fb - fa).abs() < f64::MIN_POSITIVE {
            break;
        }
        let next = b - fb * (b - a) / (fb - fa);
        if !next.is_finite() || next < 0.0 || next > upper {
            break;
        }
        a = b;
        fa = fb;
        b = next;
    }
    let best = b.clamp(0.0, upper);
    let sa = SelfActionParams::new(best, zeta)?;
    let residual = nonlinear_residual(spec, &sa, ph)?;
    Ok(SelfConsistentSolution { sa, residual })
}

/// Momentum-term sign of the printed linear Lagrangian density.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LinearForm {
    /// `psi^dag (e + c alpha.p + beta m c^2) psi`.
    PlusMomentum,
    /// Same with the momentum sign flipped.
    MinusMomentum,
}

/// Linear Lagrangian density on a plane wave, evaluated with the wave's own
/// eigenvalues. Zero on solutions of the matching equation.
pub fn lagrangian_linear(
    spec: &PlaneWaveSpec,
    ph: &PhysParams,
    form: LinearForm,
) -> Result<Complex64> {
    let psi = amplitude_set(spec, ph)?;
    let sign = match form {
        LinearForm::PlusMomentum => 1.0,
        LinearForm::MinusMomentum => -1.0,
    };
    let op = crate::algebra::dirac_operator(
        spec.energy,
        [
            sign * spec.momentum[0],
            sign * spec.momentum[1],
            sign * spec.momentum[2],
        ],
        spec.mass,
        ph.c,
        crate::algebra::DiracForm::Plus,
    );
    Ok(psi.inner(&op.mul_vec(&psi)))
}

/// Field form of the linear density:
/// `dU/dt + div S - i (omega / 8 pi)(E^2 - H^2)` for real fields, with the
/// derivative terms supplied analytically by the caller.
pub fn lagrangian_linear_em(f: &EMField, du_dt: f64, div_s: f64, omega: f64) -> Complex64 {
    let inv = real_invariants(f);
    Complex64::new(du_dt + div_s, -(omega / PI8) * (inv.e_sq - inv.h_sq))
}

/// Normalized field form of the nonlinear density:
/// `(1/8 pi)(E^2 - H^2) + delta_tau / ((8 pi)^2 m c^2) [(E^2 - H^2)^2 + 4 (E.H)^2]`.
pub fn lagrangian_nonlinear_em(
    f: &EMField,
    sa: &SelfActionParams,
    mass: f64,
    ph: &PhysParams,
) -> Result<f64> {
    if !(mass > 0.0) {
        return Err(CoreError::InvalidParam("mass must be positive".into()));
    }
    let inv = real_invariants(f);
    let x = inv.e_sq - inv.h_sq;
    let quartic = x * x + 4.0 * inv.e_dot_h * inv.e_dot_h;
    Ok(x / PI8 + sa.delta_tau / (PI8 * PI8 * mass * ph.c * ph.c) * quartic)
}

/// Both sides of `(E^2 + H^2)^2 - 4 (E x H)^2 = (E^2 - H^2)^2 + 4 (E.H)^2`.
pub fn invariant_identity_check(f: &EMField) -> (f64, f64) {
    let inv = real_invariants(f);
    let cross_sq = inv.e_cross_h[0] * inv.e_cross_h[0]
        + inv.e_cross_h[1] * inv.e_cross_h[1]
        + inv.e_cross_h[2] * inv.e_cross_h[2];
    let sum = inv.e_sq + inv.h_sq;
    let diff = inv.e_sq - inv.h_sq;
    (
        sum * sum - 4.0 * cross_sq,
        diff * diff + 4.0 * inv.e_dot_h * inv.e_dot_h,
    )
}

/// Both sides of the quartic bilinear rearrangement
/// `(psi^dag psi)^2 - sum_k (psi^dag alpha_k psi)^2
///  = (psi^dag alpha_4 psi)^2 + (psi^dag alpha_5 psi)^2`.
pub fn fierz_check(psi: &Bispinor) -> (f64, f64) {
    let lhs = vector_gap(psi);
    let b4 = psi.bilinear(&dirac_alpha(4).expect("index in range"));
    let b5 = psi.bilinear(&dirac_alpha(5).expect("index in range"));
    (lhs, b4 * b4 + b5 * b5)
}

/// The printed variant that subtracts the `alpha_3` bilinear instead of
/// adding the `alpha_5` one. Evaluated so reports can state which reading
/// actually holds.
pub fn fierz_check_printed(psi: &Bispinor) -> (f64, f64) {
    let lhs = vector_gap(psi);
    let b4 = psi.bilinear(&dirac_alpha(4).expect("index in range"));
    let b3 = psi.bilinear(&dirac_alpha(3).expect("index in range"));
    (lhs, b4 * b4 - b3 * b3)
}

fn vector_gap(psi: &Bispinor) -> f64 {
    let s = psi.norm_sq();
    let mut v_sq = 0.0;
    for k in 1..=3 {
        let b = psi.bilinear(&dirac_alpha(k).expect("index in range"));
        v_sq += b * b;
    }
    s * s - v_sq
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuarticBasis {
    /// `(psi^dag alpha_0 psi)^2 - (psi^dag alpha psi)^2`.
    Alpha,
    /// `(psi^dag alpha_4 psi)^2 + (psi^dag alpha_5 psi)^2`.
    Fierz,
}

/// Quartic interaction term `delta_tau / 8 pi` times the chosen bilinear
/// combination. The two bases agree pointwise by the rearrangement identity.
pub fn lagrangian_nonlinear_quantum(
    psi: &Bispinor,
    sa: &SelfActionParams,
    basis: QuarticBasis,
) -> f64 {
    let combo = match basis {
        QuarticBasis::Alpha => vector_gap(psi),
        QuarticBasis::Fierz => {
            let (_, rhs) = fierz_check(psi);
            rhs
        }
    };
    sa.delta_tau / PI8 * combo
}
