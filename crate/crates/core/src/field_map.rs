//! The bispinor <-> electromagnetic-field dictionary and the spin-1 (curl)
//! form of the vacuum Maxwell equations.
//!
//! The dictionary is defined for waves along the y axis only: the bispinor
//! packs `(E_x, E_z, i H_x, i H_z)` and the conjugate row is its Hermitian
//! conjugate. Other propagation directions are out of scope here and the
//! strict map rejects fields with longitudinal components rather than guess
//! a matrix convention for them.

use num_complex::Complex64;

use crate::algebra::Bispinor;
use crate::error::{CoreError, Result};
use crate::grid::FieldGrid1D;
use crate::vec3::{cross3, dot3, CVec3, Vec3};

const CI: Complex64 = Complex64::new(0.0, 1.0);

/// Electric and magnetic field at a point. Components are complex so the
/// massive theory's waves fit; ordinary real fields use [`EMField::from_real`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EMField {
    pub e: CVec3,
    pub h: CVec3,
}

impl EMField {
    pub fn zero() -> Self {
        Self {
            e: [Complex64::ZERO; 3],
            h: [Complex64::ZERO; 3],
        }
    }

    pub fn from_real(e: Vec3, h: Vec3) -> Self {
        let lift = |v: Vec3| [v[0].into(), v[1].into(), v[2].into()];
        Self {
            e: lift(e),
            h: lift(h),
        }
    }

    pub fn e_real(&self) -> Vec3 {
        [self.e[0].re, self.e[1].re, self.e[2].re]
    }

    pub fn h_real(&self) -> Vec3 {
        [self.h[0].re, self.h[1].re, self.h[2].re]
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.e
            .iter()
            .chain(self.h.iter())
            .all(|z| z.im.abs() <= tol)
    }

    pub fn conjugate(&self) -> Self {
        let conj = |v: CVec3| [v[0].conj(), v[1].conj(), v[2].conj()];
        Self {
            e: conj(self.e),
            h: conj(self.h),
        }
    }
}

/// Real-field invariants used by the Lagrangian evaluators. Imaginary parts
/// are ignored; callers on the massive (complex) side work with bilinears
/// instead.
#[derive(Clone, Copy, Debug)]
pub struct FieldInvariants {
    pub e_sq: f64,
    pub h_sq: f64,
    pub e_dot_h: f64,
    pub e_cross_h: Vec3,
}

pub fn real_invariants(f: &EMField) -> FieldInvariants {
    let e = f.e_real();
    let h = f.h_real();
    FieldInvariants {
        e_sq: dot3(e, e),
        h_sq: dot3(h, h),
        e_dot_h: dot3(e, h),
        e_cross_h: cross3(e, h),
    }
}

/// The complex pair `F = E + iH`, `F* = E - iH` packing both Maxwell vectors.
/// For real fields `F*` is the conjugate of `F`; for complex fields the two
/// are independent and both are carried. (The second member is sometimes
/// written with a conjugated magnetic vector; the two readings coincide for
/// real fields and the unconjugated form is used throughout.)
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CramersVector {
    pub f: CVec3,
    pub f_star: CVec3,
}

impl CramersVector {
    pub fn from_field(field: &EMField) -> Self {
        let mut f = [Complex64::ZERO; 3];
        let mut f_star = [Complex64::ZERO; 3];
        for k in 0..3 {
            f[k] = field.e[k] + CI * field.h[k];
            f_star[k] = field.e[k] - CI * field.h[k];
        }
        Self { f, f_star }
    }

    pub fn to_field(&self) -> EMField {
        let mut e = [Complex64::ZERO; 3];
        let mut h = [Complex64::ZERO; 3];
        for k in 0..3 {
            e[k] = (self.f[k] + self.f_star[k]) / 2.0;
            h[k] = (self.f[k] - self.f_star[k]) / (2.0 * CI);
        }
        EMField { e, h }
    }
}

/// `(E_x, E_z, i H_x, i H_z)`. Longitudinal components are ignored.
pub fn fields_to_bispinor(f: &EMField) -> Bispinor {
    Bispinor::new([f.e[0], f.e[2], CI * f.h[0], CI * f.h[2]])
}

/// Like [`fields_to_bispinor`] but errors when `E_y` or `H_y` is nonzero.
pub fn fields_to_bispinor_strict(f: &EMField) -> Result<Bispinor> {
    if f.e[1].norm() != 0.0 || f.h[1].norm() != 0.0 {
        return Err(CoreError::InvalidParam(
            "longitudinal components E_y, H_y must vanish for the y-wave map".into(),
        ));
    }
    Ok(fields_to_bispinor(f))
}

/// Inverse dictionary: `E_x = psi_1`, `E_z = psi_2`, `H_x = -i psi_3`,
/// `H_z = -i psi_4`, with `E_y = H_y = 0`.
pub fn bispinor_to_fields(psi: &Bispinor) -> EMField {
    EMField {
        e: [psi.0[0], Complex64::ZERO, psi.0[1]],
        h: [-CI * psi.0[2], Complex64::ZERO, -CI * psi.0[3]],
    }
}

/// Dense 3x3 complex matrix, just enough for the spin-1 generators.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ComplexMatrix3 {
    pub entries: [[Complex64; 3]; 3],
}

impl ComplexMatrix3 {
    pub fn zero() -> Self {
        Self {
            entries: [[Complex64::ZERO; 3]; 3],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.entries[i][i] = Complex64::ONE;
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Complex64::ZERO;
                for k in 0..3 {
                    acc += self.entries[i][k] * rhs.entries[k][j];
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for i in 0..3 {
            for j in 0..3 {
                out.entries[i][j] += rhs.entries[i][j];
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for i in 0..3 {
            for j in 0..3 {
                out.entries[i][j] -= rhs.entries[i][j];
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for i in 0..3 {
            for j in 0..3 {
                out.entries[i][j] *= s;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &CVec3) -> CVec3 {
        let mut out = [Complex64::ZERO; 3];
        for i in 0..3 {
            let mut acc = Complex64::ZERO;
            for j in 0..3 {
                acc += self.entries[i][j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.sub(rhs).max_abs()
    }
}

/// Spin-1 generators `(S_k)_ij = -i eps_kij`; with these, `(S.p) F` is the
/// curl and the spin-1 wave equation reduces to the two vacuum curl
/// equations.
pub fn spin1_matrices() -> [ComplexMatrix3; 3] {
    let mut s = [ComplexMatrix3::zero(); 3];
    for k in 0..3 {
        for i in 0..3 {
            for j in 0..3 {
                s[k].entries[i][j] = Complex64::new(0.0, -levi_civita(k, i, j));
            }
        }
    }
    s
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn s2_apply(v: &CVec3) -> CVec3 {
    // S_2 row action: (i v_z, 0, -i v_x)
    [CI * v[2], Complex64::ZERO, -CI * v[0]]
}

fn grid_to_f(grid: &FieldGrid1D) -> Vec<CVec3> {
    // F_x = psi_1 + psi_3, F_z = psi_2 + psi_4, F_y = 0 for y-waves.
    grid.values()
        .iter()
        .map(|p| [p.0[0] + p.0[2], Complex64::ZERO, p.0[1] + p.0[3]])
        .collect()
}

fn centered_dy_c3(values: &[CVec3], dy: f64, j: usize) -> CVec3 {
    let n = values.len();
    let prev = values[(j + n - 1) % n];
    let next = values[(j + 1) % n];
    let mut out = [Complex64::ZERO; 3];
    for k in 0..3 {
        out[k] = (next[k] - prev[k]) / (2.0 * dy);
    }
    out
}

/// Max-norm residual of the spin-1 wave equation `(i/c) dF/dt = (S.p) F`
/// (momentum operator `-i d/dy`) on two stored time levels.
///
/// Time derivative and midpoint average make the stencil second order at the
/// half-level, so on an exact vacuum plane wave the result is
/// `O(dt^2 + dy^2)`.
pub fn maxwell_spin1_residual(prev: &FieldGrid1D, next: &FieldGrid1D, c: f64) -> Result<f64> {
    if prev.len() < 3 {
        return Err(CoreError::GridTooSmall {
            got: prev.len(),
            min: 3,
        });
    }
    let dt = next.time_step_from(prev)?;
    let f_prev = grid_to_f(prev);
    let f_next = grid_to_f(next);
    let n = f_prev.len();
    let dy = prev.dy();
    let mid: Vec<CVec3> = (0..n)
        .map(|j| {
            let mut v = [Complex64::ZERO; 3];
            for k in 0..3 {
                v[k] = (f_prev[j][k] + f_next[j][k]) / 2.0;
            }
            v
        })
        .collect();
    let mut worst: f64 = 0.0;
    for j in 0..n {
        let dmid = centered_dy_c3(&mid, dy, j);
        // (i/c) dF/dt - (S.p)F with (S.p)F = -i S_2 dF/dy
        let curl_part = s2_apply(&dmid);
        for k in 0..3 {
            let r = CI / c * (f_next[j][k] - f_prev[j][k]) / dt + CI * curl_part[k];
            worst = worst.max(r.norm());
        }
    }
    Ok(worst)
}

/// Leapfrog evolution of the mapped Cramers pair `(F, F*)` under the spin-1
/// wave equation, returned as a bispinor grid again.
///
/// Three-level leapfrog with a midpoint bootstrap; second order, explicitly
/// different from the trapezoidal stepper in [`crate::evolution`] so the two
/// discretizations can be compared against each other.
pub fn spin1_evolve(grid: &FieldGrid1D, c: f64, dt: f64, steps: usize) -> Result<FieldGrid1D> {
    let n = grid.len();
    if n < 3 {
        return Err(CoreError::GridTooSmall { got: n, min: 3 });
    }
    let cfl = c * dt / grid.dy();
    if cfl > 1.0 + 1e-12 {
        return Err(CoreError::StabilityViolation { cfl });
    }
    if steps == 0 {
        return Ok(grid.clone());
    }

    let dy = grid.dy();
    let f0 = grid_to_f(grid);
    let fs0: Vec<CVec3> = grid
        .values()
        .iter()
        .map(|p| [p.0[0] - p.0[2], Complex64::ZERO, p.0[1] - p.0[3]])
        .collect();

    // dF/dt = -c S_2 dF/dy, dF*/dt = +c S_2 dF*/dy
    let rhs = |fv: &[CVec3], sign: f64| -> Vec<CVec3> {
        (0..fv.len())
            .map(|j| {
                let d = centered_dy_c3(fv, dy, j);
                let s = s2_apply(&d);
                [s[0] * (sign * c), s[1] * (sign * c), s[2] * (sign * c)]
            })
            .collect()
    };
    let advance_pair = |fv: &[CVec3], sign: f64, steps: usize| -> Vec<CVec3> {
        let mut prev = fv.to_vec();
        // midpoint bootstrap for the first level
        let k1 = rhs(&prev, sign);
        let half: Vec<CVec3> = prev
            .iter()
            .zip(&k1)
            .map(|(p, k)| {
                let mut v = *p;
                for m in 0..3 {
                    v[m] += k[m] * (dt / 2.0);
                }
                v
            })
            .collect();
        let k2 = rhs(&half, sign);
        let mut cur: Vec<CVec3> = prev
            .iter()
            .zip(&k2)
            .map(|(p, k)| {
                let mut v = *p;
                for m in 0..3 {
                    v[m] += k[m] * dt;
                }
                v
            })
            .collect();
        for _ in 1..steps {
            let k = rhs(&cur, sign);
            let next: Vec<CVec3> = prev
                .iter()
                .zip(&k)
                .map(|(p, kk)| {
                    let mut v = *p;
                    for m in 0..3 {
                        v[m] += kk[m] * (2.0 * dt);
                    }
                    v
                })
                .collect();
            prev = cur;
            cur = next;
        }
        cur
    };

    let f = advance_pair(&f0, -1.0, steps);
    let fs = advance_pair(&fs0, 1.0, steps);

    let values: Vec<Bispinor> = f
        .iter()
        .zip(&fs)
        .map(|(fv, sv)| {
            Bispinor::new([
                (fv[0] + sv[0]) / 2.0,
                (fv[2] + sv[2]) / 2.0,
                (fv[0] - sv[0]) / 2.0,
                (fv[2] - sv[2]) / 2.0,
            ])
        })
        .collect();
    let mut out = FieldGrid1D::new(values, dy, grid.time())?;
    out.set_time(grid.time() + steps as f64 * dt);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn map_examples() {
        let psi = fields_to_bispinor(&EMField::from_real([1.0, 0.0, 0.0], [0.0; 3]));
        assert_eq!(
            psi,
            Bispinor::new([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
        );

        assert_eq!(fields_to_bispinor(&EMField::zero()), Bispinor::zero());

        let psi = fields_to_bispinor(&EMField::from_real([0.0, 0.0, 2.0], [3.0, 0.0, 0.0]));
        assert_eq!(
            psi,
            Bispinor::new([c(0.0, 0.0), c(2.0, 0.0), c(0.0, 3.0), c(0.0, 0.0)])
        );
    }

    #[test]
    fn inverse_map_examples() {
        let f = bispinor_to_fields(&Bispinor::new([
            c(1.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
        ]));
        assert_eq!(f.e_real(), [1.0, 0.0, 0.0]);
        assert_eq!(f.h_real(), [0.0, 0.0, 0.0]);

        let f = bispinor_to_fields(&Bispinor::new([
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 1.0),
            c(0.0, 0.0),
        ]));
        assert_eq!(f.h_real(), [1.0, 0.0, 0.0]);
        assert_eq!(f.e_real(), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn strict_map_rejects_longitudinal_fields() {
        let f = EMField::from_real([0.0, 0.5, 0.0], [0.0; 3]);
        assert!(fields_to_bispinor_strict(&f).is_err());
        let ok = EMField::from_real([1.0, 0.0, 2.0], [3.0, 0.0, 4.0]);
        assert!(fields_to_bispinor_strict(&ok).is_ok());
    }

    #[test]
    fn hermitian_conjugate_is_the_row_form() {
        let f = EMField::from_real([1.0, 0.0, 2.0], [3.0, 0.0, 4.0]);
        let psi = fields_to_bispinor(&f);
        let row = psi.conj();
        assert_eq!(
            row,
            Bispinor::new([c(1.0, 0.0), c(2.0, 0.0), c(0.0, -3.0), c(0.0, -4.0)])
        );
    }

    #[test]
    fn spin1_commutator_and_casimir() {
        let [s1, s2, s3] = spin1_matrices();
        let comm = s1.mul(&s2).sub(&s2.mul(&s1));
        assert!(comm.max_abs_diff(&s3.scale(c(0.0, 1.0))) == 0.0);

        let casimir = s1.mul(&s1).add(&s2.mul(&s2)).add(&s3.mul(&s3));
        assert!(casimir.max_abs_diff(&ComplexMatrix3::identity().scale(c(2.0, 0.0))) == 0.0);
    }

    #[test]
    fn spin1_s3_eigenvector() {
        let [_, _, s3] = spin1_matrices();
        let inv_sqrt2 = 1.0 / 2.0_f64.sqrt();
        let v: CVec3 = [c(inv_sqrt2, 0.0), c(0.0, inv_sqrt2), c(0.0, 0.0)];
        let sv = s3.mul_vec(&v);
        for k in 0..3 {
            assert!((sv[k] - v[k]).norm() < 1e-15);
        }
    }

    #[test]
    fn spin_dot_is_cross_product() {
        // (S.a) v = i (a x v); with a = -i d/dy this is the curl.
        let s = spin1_matrices();
        let a = [0.3, -1.2, 0.7];
        let v: CVec3 = [c(1.0, 0.5), c(-0.2, 0.1), c(0.0, -2.0)];
        let mut sv = [Complex64::ZERO; 3];
        for k in 0..3 {
            let m = s[k].scale(c(a[k], 0.0));
            let mv = m.mul_vec(&v);
            for i in 0..3 {
                sv[i] += mv[i];
            }
        }
        for i in 0..3 {
            let (j, k) = ([1, 2, 0][i], [2, 0, 1][i]);
            let cross_i = a[j] * v[k] - a[k] * v[j];
            assert!((sv[i] - c(0.0, 1.0) * cross_i).norm() < 1e-14);
        }
    }

    fn vacuum_wave_grid(n: usize, t: f64) -> FieldGrid1D {
        // E_x = cos(k(y - t)), H_z = -cos(k(y - t)), k = 2 pi, c = 1
        let k = 2.0 * std::f64::consts::PI;
        FieldGrid1D::from_fn(n, 1.0, t, |y| {
            let phase = k * (y - t);
            fields_to_bispinor(&EMField::from_real(
                [phase.cos(), 0.0, 0.0],
                [0.0, 0.0, -phase.cos()],
            ))
        })
        .unwrap()
    }

    #[test]
    fn spin1_residual_on_vacuum_wave_converges() {
        let mut errs = Vec::new();
        for n in [256usize, 512] {
            let dt = 0.5 / n as f64;
            let prev = vacuum_wave_grid(n, 0.0);
            let next = vacuum_wave_grid(n, dt);
            errs.push(maxwell_spin1_residual(&prev, &next, 1.0).unwrap());
        }
        assert!(errs[0] < 1e-3, "residual {}", errs[0]);
        let order = (errs[0] / errs[1]).log2();
        assert!((order - 2.0).abs() < 0.1, "order {order}");
    }

    #[test]
    fn reverse_roundtrip_is_the_identity_on_complex_bispinors() {
        // bispinor -> fields -> bispinor is exact for arbitrary complex input
        let mut seed = 0x5eed_cafe_u64;
        let mut next = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (seed >> 11) as f64 / (1u64 << 53) as f64 * 4.0 - 2.0
        };
        for _ in 0..100 {
            let psi = Bispinor::new([
                c(next(), next()),
                c(next(), next()),
                c(next(), next()),
                c(next(), next()),
            ]);
            let back = fields_to_bispinor(&bispinor_to_fields(&psi));
            assert_eq!(back, psi);
        }
    }

    #[test]
    fn spin1_residual_zero_on_static_field() {
        let grid = |t: f64| {
            FieldGrid1D::from_fn(16, 1.0, t, |_| {
                fields_to_bispinor(&EMField::from_real([0.7, 0.0, -0.1], [0.0, 0.0, 0.4]))
            })
            .unwrap()
        };
        let r = maxwell_spin1_residual(&grid(0.0), &grid(0.125), 1.0).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn spin1_residual_detects_wrong_magnetic_sign() {
        let k = 2.0 * std::f64::consts::PI;
        let bad = |n: usize, t: f64| {
            FieldGrid1D::from_fn(n, 1.0, t, |y| {
                let phase = k * (y - t);
                fields_to_bispinor(&EMField::from_real(
                    [phase.cos(), 0.0, 0.0],
                    [0.0, 0.0, phase.cos()],
                ))
            })
            .unwrap()
        };
        let mut errs = Vec::new();
        for n in [128usize, 256] {
            let dt = 0.5 / n as f64;
            errs.push(maxwell_spin1_residual(&bad(n, 0.0), &bad(n, dt), 1.0).unwrap());
        }
        assert!(
            errs[0] > 0.5,
            "wrong-sign residual should be O(1), got {}",
            errs[0]
        );
        assert!(errs[1] > 0.5, "residual must not converge, got {}", errs[1]);
    }

    #[test]
    fn cramers_pair_recovers_fields() {
        let f = EMField::from_real([0.3, 0.0, -1.1], [2.0, 0.0, 0.25]);
        let cv = CramersVector::from_field(&f);
        for k in 0..3 {
            assert!((cv.f[k] + cv.f_star[k] - f.e[k] * 2.0).norm() < 1e-15);
            assert!((cv.f[k] - cv.f_star[k] - c(0.0, 2.0) * f.h[k]).norm() < 1e-15);
        }
        let back = cv.to_field();
        for k in 0..3 {
            assert!((back.e[k] - f.e[k]).norm() < 1e-15);
            assert!((back.h[k] - f.h[k]).norm() < 1e-15);
        }
    }

    proptest! {
        #[test]
        fn roundtrip_is_exact(
            ex in -10.0f64..10.0, ez in -10.0f64..10.0,
            hx in -10.0f64..10.0, hz in -10.0f64..10.0,
        ) {
            let f = EMField::from_real([ex, 0.0, ez], [hx, 0.0, hz]);
            let back = bispinor_to_fields(&fields_to_bispinor(&f));
            prop_assert_eq!(back.e_real(), f.e_real());
            prop_assert_eq!(back.h_real(), f.h_real());
        }

        #[test]
        fn map_is_linear(
            ex in -3.0f64..3.0, ez in -3.0f64..3.0,
            hx in -3.0f64..3.0, hz in -3.0f64..3.0,
            s in -4.0f64..4.0,
        ) {
            let f = EMField::from_real([ex, 0.0, ez], [hx, 0.0, hz]);
            let scaled = EMField::from_real([s * ex, 0.0, s * ez], [s * hx, 0.0, s * hz]);
            let lhs = fields_to_bispinor(&scaled);
            let rhs = fields_to_bispinor(&f).scale(Complex64::new(s, 0.0));
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
        }
    }
}
