//! Dictionary suite: roundtrip, linearity, the spin-1 generators and the
//! spin-1 wave-equation residual.

use num_complex::Complex64;
use serde_json::json;

use emdirac_core::field_map::{
    bispinor_to_fields, fields_to_bispinor, maxwell_spin1_residual, spin1_matrices, ComplexMatrix3,
    CramersVector, EMField,
};
use emdirac_core::FieldGrid1D;

use super::{orders, orders_in, random_mapped_field, vacuum_grid, SuiteCtx};
use crate::report::{CheckRecord, SuiteReport};

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut checks = Vec::new();

    {
        let id = "field-map.roundtrip";
        let mut rng = ctx.rng(id);
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let f = random_mapped_field(&mut rng);
            let back = bispinor_to_fields(&fields_to_bispinor(&f));
            for k in 0..3 {
                worst = worst.max((back.e[k] - f.e[k]).norm());
                worst = worst.max((back.h[k] - f.h[k]).norm());
            }
        }
        let tol = ctx.tol(id, 0.0);
        checks.push(CheckRecord::asserted(
            id,
            "2.5",
            "definition",
            Some(tol),
            json!({ "max_deviation": worst, "samples": 1000 }),
            worst <= tol,
        ));
    }

    {
        let id = "field-map.linearity";
        let mut rng = ctx.rng(id);
        let mut worst: f64 = 0.0;
        for _ in 0..200 {
            let f = random_mapped_field(&mut rng);
            let g = random_mapped_field(&mut rng);
            let sum = EMField {
                e: [f.e[0] + g.e[0], f.e[1] + g.e[1], f.e[2] + g.e[2]],
                h: [f.h[0] + g.h[0], f.h[1] + g.h[1], f.h[2] + g.h[2]],
            };
            let lhs = fields_to_bispinor(&sum);
            let rhs = fields_to_bispinor(&f).add(&fields_to_bispinor(&g));
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
        let tol = ctx.tol(id, 0.0);
        checks.push(CheckRecord::asserted(
            id,
            "2.5",
            "definition",
            Some(tol),
            json!({ "max_deviation": worst }),
            worst <= tol,
        ));
    }

    {
        let id = "field-map.spin1-generators";
        let [s1, s2, s3] = spin1_matrices();
        let i_unit = Complex64::new(0.0, 1.0);
        let mut worst: f64 = 0.0;
        let pairs = [(&s1, &s2, &s3), (&s2, &s3, &s1), (&s3, &s1, &s2)];
        for (a, b, c) in pairs {
            let comm = a.mul(b).sub(&b.mul(a));
            worst = worst.max(comm.max_abs_diff(&c.scale(i_unit)));
        }
        let casimir = s1.mul(&s1).add(&s2.mul(&s2)).add(&s3.mul(&s3));
        worst = worst
            .max(casimir.max_abs_diff(&ComplexMatrix3::identity().scale(Complex64::new(2.0, 0.0))));
        let tol = ctx.tol(id, 0.0);
        checks.push(CheckRecord::asserted(
            id,
            "plumbing",
            "definition",
            Some(tol),
            json!({ "max_deviation": worst }),
            worst <= tol,
        ));
    }

    {
        // (S.a) v = i (a x v): the reduction that turns the wave equation
        // into the two curl equations
        let id = "field-map.spin1-curl-reduction";
        let s = spin1_matrices();
        let mut rng = ctx.rng(id);
        let mut worst: f64 = 0.0;
        use rand::Rng;
        for _ in 0..100 {
            let a = [
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            ];
            let v = [
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            ];
            let mut sv = [Complex64::ZERO; 3];
            for k in 0..3 {
                let mv = s[k].scale(Complex64::new(a[k], 0.0)).mul_vec(&v);
                for i in 0..3 {
                    sv[i] += mv[i];
                }
            }
            for i in 0..3 {
                let (j, k) = ([1, 2, 0][i], [2, 0, 1][i]);
                let cross = a[j] * v[k] - a[k] * v[j];
                worst = worst.max((sv[i] - Complex64::new(0.0, 1.0) * cross).norm());
            }
        }
        let tol = ctx.tol(id, 1e-14);
        checks.push(CheckRecord::asserted(
            id,
            "1.1",
            "definition",
            Some(tol),
            json!({ "max_deviation": worst }),
            worst <= tol,
        ));
    }

    {
        let id = "field-map.spin1-residual-convergence";
        let mut errs = Vec::new();
        for &n in ctx.grid_sizes() {
            let dt = 0.5 / (n as f64 * ctx.ph.c);
            let prev = vacuum_grid(&ctx.ph, n, 0.0);
            let next = vacuum_grid(&ctx.ph, n, dt);
            errs.push(maxwell_spin1_residual(&prev, &next, ctx.ph.c).expect("residual"));
        }
        let tol = ctx.tol(id, 1e-3);
        let order_ok = orders_in(&errs, 2.0, 0.1);
        let finest = *errs.last().unwrap();
        checks.push(CheckRecord::asserted(
            id,
            "1.1",
            "oracle",
            Some(tol),
            json!({ "errors": errs.clone(), "orders": orders(&errs) }),
            order_ok && finest <= tol,
        ));
    }

    {
        // flipping the magnetic sign breaks the solution: residual stays O(1)
        let id = "field-map.spin1-negative-control";
        let k = 2.0 * std::f64::consts::PI;
        let bad = |n: usize, t: f64| {
            FieldGrid1D::from_fn(n, 1.0, t, |y| {
                let phase = k * (y - ctx.ph.c * t);
                fields_to_bispinor(&EMField::from_real(
                    [phase.cos(), 0.0, 0.0],
                    [0.0, 0.0, phase.cos()],
                ))
            })
            .expect("valid grid")
        };
        let mut values = Vec::new();
        for &n in ctx.grid_sizes() {
            let dt = 0.5 / (n as f64 * ctx.ph.c);
            values.push(maxwell_spin1_residual(&bad(n, 0.0), &bad(n, dt), ctx.ph.c).unwrap());
        }
        let ok = values.iter().all(|&v| v > 0.5);
        checks.push(CheckRecord::asserted(
            id,
            "1.1",
            "oracle",
            None,
            json!({ "residuals": values }),
            ok,
        ));
    }

    {
        let id = "field-map.cramers-invariant";
        let mut rng = ctx.rng(id);
        let mut worst: f64 = 0.0;
        for _ in 0..200 {
            let f = random_mapped_field(&mut rng);
            let cv = CramersVector::from_field(&f);
            for k in 0..3 {
                worst = worst.max((cv.f[k] + cv.f_star[k] - f.e[k] * 2.0).norm());
                worst =
                    worst.max((cv.f[k] - cv.f_star[k] - Complex64::new(0.0, 2.0) * f.h[k]).norm());
            }
        }
        let tol = ctx.tol(id, 0.0);
        checks.push(CheckRecord::asserted(
            id,
            "1.1",
            "definition",
            Some(tol),
            json!({ "max_deviation": worst }),
            worst <= tol,
        ));
    }

    SuiteReport {
        suite: "field-map".into(),
        checks,
    }
}
