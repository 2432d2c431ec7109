//! Matrix-algebra suite: anticommutators, the vector-square relation, and
//! the constructed sixth matrix.

use rand::Rng;
use serde_json::json;

use emdirac_core::algebra::{alpha5, alpha_dot, anticommutator, dirac_alpha, ComplexMatrix4};

use super::{random_spinor, SuiteCtx};
use crate::report::{CheckRecord, SuiteReport};

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut checks = Vec::new();

    {
        let id = "algebra.anticommutators";
        let two_id = ComplexMatrix4::identity().scale(2.0.into());
        let mut worst: f64 = 0.0;
        for i in 1..=4usize {
            for j in 1..=4usize {
                let ai = dirac_alpha(i).expect("index");
                let aj = dirac_alpha(j).expect("index");
                let want = if i == j {
                    two_id
                } else {
                    ComplexMatrix4::zero()
                };
                worst = worst.max(anticommutator(&ai, &aj).max_abs_diff(&want));
            }
        }
        let tol = ctx.tol(id, 0.0);
        checks.push(CheckRecord::asserted(
            id,
            "2.8",
            "definition",
            Some(tol),
            json!({ "max_deviation": worst }),
            worst <= tol,
        ));
    }

    {
        let id = "algebra.alpha-dot-square";
        let mut rng = ctx.rng(id);
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let v = [
                rng.random_range(-5.0..5.0),
                rng.random_range(-5.0..5.0),
                rng.random_range(-5.0..5.0),
            ];
            let v_sq = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            let m = alpha_dot(v);
            let diff = m
                .mul(&m)
                .max_abs_diff(&ComplexMatrix4::identity().scale(v_sq.into()));
            worst = worst.max(diff / v_sq.max(f64::MIN_POSITIVE));
        }
        let tol = ctx.tol(id, 1e-13);
        checks.push(CheckRecord::asserted(
            id,
            "2.8",
            "oracle",
            Some(tol),
            json!({ "max_relative_deviation": worst, "samples": 1000 }),
            worst <= tol,
        ));
    }

    {
        let id = "algebra.hermitian-unitary";
        let mut worst: f64 = 0.0;
        for i in 1..=5usize {
            let a = dirac_alpha(i).expect("index");
            worst = worst.max(a.max_abs_diff(&a.dagger()));
            worst = worst.max(a.dagger().mul(&a).max_abs_diff(&ComplexMatrix4::identity()));
        }
        let tol = ctx.tol(id, 0.0);
        checks.push(CheckRecord::asserted(
            id,
            "2.0",
            "definition",
            Some(tol),
            json!({ "max_deviation": worst }),
            worst <= tol,
        ));
    }

    {
        // the constructed matrix and the identity it was selected by
        let id = "algebra.alpha5-construction";
        let choice = alpha5();
        let m = &choice.matrix;
        let mut rng = ctx.rng(id);
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let psi = random_spinor(&mut rng);
            let s = psi.norm_sq();
            let mut v_sq = 0.0;
            for k in 1..=3usize {
                let b = psi.bilinear(&dirac_alpha(k).expect("index"));
                v_sq += b * b;
            }
            let b4 = psi.bilinear(&dirac_alpha(4).expect("index"));
            let b5 = psi.bilinear(m);
            let gap = (s * s - v_sq - b4 * b4 - b5 * b5).abs();
            worst = worst.max(gap / (s * s).max(f64::MIN_POSITIVE));
        }
        let rows: Vec<String> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| format!("{:+.0}{:+.0}i", m[(i, j)].re, m[(i, j)].im))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let tol = ctx.tol(id, 1e-12);
        checks.push(CheckRecord::asserted(
            id,
            "5.18",
            "oracle",
            Some(tol),
            json!({
                "product": format!("{}{}", if choice.sign > 0.0 { "+" } else { "-" }, choice.product),
                "signed_candidates": choice.candidates_found,
                "matrix_rows": rows,
                "max_relative_gap": worst,
            }),
            worst <= tol && choice.candidates_found == 2,
        ));
    }

    SuiteReport {
        suite: "algebra".into(),
        checks,
    }
}
