//! The electromagnetic face of the mass term: imaginary electric and
//! magnetic currents, the conservation-law identity that fixes them, and the
//! tangential displacement current of a wave moving on a ring.
//!
//! The two current-carrying Maxwell systems differ only in the sign of the
//! `i omega / c` terms; a bispinor-mapped wave solves one of them and its
//! componentwise field conjugate solves the other.

use num_complex::Complex64;

use crate::algebra::{dirac_operator, Bispinor, DiracForm};
use crate::error::{CoreError, Result};
use crate::field_map::EMField;
use crate::grid::FieldGrid1D;
use crate::vec3::{cscale3, CVec3, Vec3};

const PI4: f64 = 4.0 * std::f64::consts::PI;

/// The imaginary sources `j_e = (i omega / 4 pi) E`, `j_m = (i omega / 4 pi) H`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MassCurrents {
    pub electric: CVec3,
    pub magnetic: CVec3,
}

pub fn mass_currents(f: &EMField, omega: f64) -> Result<MassCurrents> {
    if omega < 0.0 {
        return Err(CoreError::InvalidParam(format!(
            "omega = {omega} must be non-negative"
        )));
    }
    let factor = Complex64::new(0.0, omega / PI4);
    Ok(MassCurrents {
        electric: cscale3(f.e, factor),
        magnetic: cscale3(f.h, factor),
    })
}

/// Max-norm residuals of the four current-carrying Maxwell equations on two
/// stored time levels, split into real and imaginary parts:
/// `[re_1, im_1, re_2, im_2, re_3, im_3, re_4, im_4]`.
///
/// With `DiracForm::Plus` the electric rows carry `+i omega / c` and the
/// magnetic rows `-i omega / c`; `Minus` flips all four signs. Fields come
/// from the grid's bispinors via the y-wave dictionary. The stencil is the
/// two-level midpoint one, second order in both steps.
pub fn maxwell_mass_residual(
    prev: &FieldGrid1D,
    next: &FieldGrid1D,
    omega: f64,
    c: f64,
    form: DiracForm,
) -> Result<[f64; 8]> {
    if prev.len() < 3 {
        return Err(CoreError::GridTooSmall {
            got: prev.len(),
            min: 3,
        });
    }
    let dt = next.time_step_from(prev)?;
    let s = form.sign();
    let n = prev.len();
    let dy = prev.dy();
    let i_unit = Complex64::new(0.0, 1.0);

    // field components per point: (E_x, E_z, H_x, H_z)
    let fields = |psi: &Bispinor| -> [Complex64; 4] {
        [psi.0[0], psi.0[1], -i_unit * psi.0[2], -i_unit * psi.0[3]]
    };
    let mid: Vec<[Complex64; 4]> = (0..n)
        .map(|j| {
            let a = fields(&prev.values()[j]);
            let b = fields(&next.values()[j]);
            [
                (a[0] + b[0]) / 2.0,
                (a[1] + b[1]) / 2.0,
                (a[2] + b[2]) / 2.0,
                (a[3] + b[3]) / 2.0,
            ]
        })
        .collect();

    let mut worst = [0.0f64; 8];
    for j in 0..n {
        let a = fields(&prev.values()[j]);
        let b = fields(&next.values()[j]);
        let jp = (j + 1) % n;
        let jm = (j + n - 1) % n;
        let d_dy = |comp: usize| (mid[jp][comp] - mid[jm][comp]) / (2.0 * dy);
        let d_dt = |comp: usize| (b[comp] - a[comp]) / dt;
        let m = &mid[j];

        let rows = [
            d_dt(0) / c - d_dy(3) + i_unit * (s * omega / c) * m[0],
            d_dt(1) / c + d_dy(2) + i_unit * (s * omega / c) * m[1],
            d_dt(2) / c + d_dy(1) - i_unit * (s * omega / c) * m[2],
            d_dt(3) / c - d_dy(0) - i_unit * (s * omega / c) * m[3],
        ];
        for (eq, r) in rows.iter().enumerate() {
            worst[2 * eq] = worst[2 * eq].max(r.re.abs());
            worst[2 * eq + 1] = worst[2 * eq + 1].max(r.im.abs());
        }
    }
    Ok(worst)
}

/// Componentwise field conjugation: the configuration whose `E, H` are the
/// complex conjugates of the grid's. In bispinor form that is
/// `(conj psi_1, conj psi_2, -conj psi_3, -conj psi_4)`.
pub fn conjugate_configuration(grid: &FieldGrid1D) -> FieldGrid1D {
    grid.map(|psi| {
        Bispinor::new([
            psi.0[0].conj(),
            psi.0[1].conj(),
            -psi.0[2].conj(),
            -psi.0[3].conj(),
        ])
    })
}

/// `|(alpha_0 e_p +- c alpha.p_p +- m c^2 beta) psi| / |psi|`.
///
/// Vanishes when `(e_p, p_p)` equal a solving plane wave's own eigenvalues;
/// with `(0, 0)` it collapses to `m c^2` because `beta` is unitary.
pub fn connection_mass_check(
    psi: &Bispinor,
    eps_p: f64,
    p_p: Vec3,
    mass: f64,
    c: f64,
    form: DiracForm,
) -> Result<f64> {
    let norm = psi.norm();
    if norm == 0.0 {
        return Err(CoreError::ZeroField);
    }
    let op = dirac_operator(eps_p, p_p, mass, c, form);
    Ok(op.mul_vec(psi).norm() / norm)
}

/// Normal and tangential displacement-current parts of a field riding a ring.
///
/// Canonical frame: the normal unit vector is `x`, the tangent is `y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RingCurrent {
    /// `-(1/4 pi) dE/dt` along the normal.
    pub normal: Vec3,
    /// `(omega_p / 4 pi) E` along the tangent.
    pub tangential: Vec3,
    /// Angular velocity `v_p / r_p`.
    pub omega_p: f64,
    pub radius: f64,
}

impl RingCurrent {
    /// Scalar bookkeeping form `j_n + i j_tau` on the canonical axes.
    pub fn complex_form(&self) -> Complex64 {
        Complex64::new(self.normal[0], self.tangential[1])
    }

    pub fn normal_magnitude(&self) -> f64 {
        self.normal[0].abs()
    }

    pub fn tangential_magnitude(&self) -> f64 {
        self.tangential[1].abs()
    }
}

pub fn ring_displacement_current(
    e_mag: f64,
    de_dt: f64,
    v_p: f64,
    r_p: f64,
) -> Result<RingCurrent> {
    if !(r_p > 0.0) {
        return Err(CoreError::InvalidParam(format!(
            "ring radius {r_p} must be positive"
        )));
    }
    let omega_p = v_p / r_p;
    Ok(RingCurrent {
        normal: [-de_dt / PI4, 0.0, 0.0],
        tangential: [0.0, omega_p * e_mag / PI4, 0.0],
        omega_p,
        radius: r_p,
    })
}
