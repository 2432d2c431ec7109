//! Classical nonlinear-electrodynamics baselines: the limiting-field
//! Lagrangian with its weak-field expansion, the quartic vacuum-polarization
//! density, and the finite-field radial profile of a point charge.
//!
//! Both printed Lagrangian forms are evaluated exactly as given; where their
//! sign conventions differ the comparison is measured by the callers, not
//! reconciled here.

use std::io::{self, Write};

use crate::error::{CoreError, Result};
use crate::field_map::{real_invariants, EMField};

const PI4: f64 = 4.0 * std::f64::consts::PI;
const PI8: f64 = 8.0 * std::f64::consts::PI;

/// CODATA fine-structure constant.
pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;

/// Scales of the limiting-field theory. `r0 = sqrt(charge / limit_field)` is
/// derived at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BIParams {
    /// Inverse field-strength scale.
    pub a: f64,
    /// Point charge.
    pub charge: f64,
    /// Limiting field strength.
    pub limit_field: f64,
    /// Radius scale `sqrt(charge / limit_field)`.
    pub r0: f64,
}

impl BIParams {
    pub fn new(a: f64, charge: f64, limit_field: f64) -> Result<Self> {
        if !(a > 0.0) || !(charge > 0.0) || !(limit_field > 0.0) {
            return Err(CoreError::InvalidParam(
                "a, charge and limit_field must all be positive".into(),
            ));
        }
        Ok(Self {
            a,
            charge,
            limit_field,
            r0: (charge / limit_field).sqrt(),
        })
    }
}

/// Full limiting-field Lagrangian
/// `(1 / 4 pi a^2) (1 - sqrt(1 + a^2 (E^2 - B^2) - a^4 (E.B)^2))`,
/// with `B` the magnetic vector. Errors when the radicand goes negative.
pub fn bi_lagrangian(f: &EMField, a: f64) -> Result<f64> {
    let inv = real_invariants(f);
    let radicand = 1.0 + a * a * (inv.e_sq - inv.h_sq) - a.powi(4) * inv.e_dot_h * inv.e_dot_h;
    if radicand < 0.0 {
        return Err(CoreError::DomainError(format!(
            "field beyond the limiting bound, radicand = {radicand}"
        )));
    }
    Ok((1.0 - radicand.sqrt()) / (PI4 * a * a))
}

/// Weak-field expansion
/// `-(1/8 pi)(E^2 - B^2) + (a^2 / 32 pi)[(E^2 - B^2)^2 + 4 (E.B)^2]`.
pub fn bi_weak_field(f: &EMField, a: f64) -> f64 {
    let inv = real_invariants(f);
    let x = inv.e_sq - inv.h_sq;
    -x / PI8 + a * a / (32.0 * std::f64::consts::PI) * (x * x + 4.0 * inv.e_dot_h * inv.e_dot_h)
}

/// Soft precondition of the expansion: `a^2 E^2` and `a^2 B^2` at most 0.3.
pub fn weak_field_ok(f: &EMField, a: f64) -> bool {
    let inv = real_invariants(f);
    a * a * inv.e_sq.max(inv.h_sq) <= 0.3
}

/// Quartic vacuum-polarization density
/// `-(1/8 pi)(E^2 - H^2) + (alpha_q^2 / 360 pi^2)[(E^2 - H^2)^2 + 7 (E.H)^2]`.
/// Some prints pair the quadratic invariants as `(B^2 - H^2)`; this evaluator
/// uses `(E, H)`, the pairing the weak-field expansion above is built on.
pub fn heisenberg_euler(f: &EMField, alpha_q: f64) -> f64 {
    let inv = real_invariants(f);
    let x = inv.e_sq - inv.h_sq;
    -x / PI8
        + alpha_q * alpha_q / (360.0 * std::f64::consts::PI * std::f64::consts::PI)
            * (x * x + 7.0 * inv.e_dot_h * inv.e_dot_h)
}

/// Radial profile of the point charge: the induction stays `charge / r^2`
/// while the field saturates at the limiting value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialFields {
    /// `D = charge / r^2`, singular at the origin.
    pub d: f64,
    /// `E = charge / sqrt(r^4 + r0^4)`, finite everywhere.
    pub e: f64,
    /// Effective vacuum permittivity `sqrt(1 + r0^4 / r^4)`.
    pub eps_eff: f64,
}

pub fn bi_radial_fields(r: f64, p: &BIParams) -> Result<RadialFields> {
    if !(r > 0.0) {
        return Err(CoreError::InvalidParam(format!(
            "radius {r} must be positive"
        )));
    }
    let r0r = p.r0 / r;
    Ok(RadialFields {
        d: p.charge / (r * r),
        e: p.charge / (r.powi(4) + p.r0.powi(4)).sqrt(),
        eps_eff: (1.0 + r0r.powi(4)).sqrt(),
    })
}

/// CSV dump of the radial profile, columns `r_over_r0, d, e, eps_eff`.
pub fn write_radial_profile<W: Write>(
    w: &mut W,
    p: &BIParams,
    r_over_r0: &[f64],
) -> io::Result<()> {
    writeln!(w, "r_over_r0,d,e,eps_eff")?;
    for &x in r_over_r0 {
        let fields = bi_radial_fields(x * p.r0, p)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e.to_string()))?;
        writeln!(w, "{},{},{},{}", x, fields.d, fields.e, fields.eps_eff)?;
    }
    Ok(())
}

/// Least-squares slope of `ln y` against `ln x`; the measured order of a
/// power law.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..xs.len() {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    num / den
}
