//! Evolution suite: transport accuracy, rest-frame phase, norm conservation,
//! dispersion and the second-order factorization diagnostics.

use num_complex::Complex64;
use serde_json::json;

use emdirac_core::algebra::{Bispinor, DiracForm};
use emdirac_core::evolution::{dirac_residual, evolve, factorization_residual, measure_dispersion};
use emdirac_core::field_map::spin1_evolve;
use emdirac_core::FieldGrid1D;

use super::{orders, orders_in, vacuum_grid, SuiteCtx};
use crate::report::{CheckRecord, SuiteReport};

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut checks = Vec::new();
    let ph = &ctx.ph;

    {
        // one full box transit returns the massless wave to itself
        let id = "evolution.periodic-return";
        let mut errs = Vec::new();
        for &n in ctx.grid_sizes() {
            let g = vacuum_grid(ph, n, 0.0);
            let period = 1.0 / ph.c;
            let steps = (period / (0.5 * g.dy() / ph.c)).round() as usize;
            let dt = period / steps as f64;
            let out = evolve(&g, 0.0, ph, dt, steps, DiracForm::Plus).expect("evolve");
            errs.push(out.max_diff(&g));
        }
        let tol = ctx.tol(id, 1e-3);
        let ok = orders_in(&errs, 2.0, 0.1) && errs[errs.len() / 2] <= tol;
        checks.push(CheckRecord::asserted(
            id,
            "2.11",
            "oracle",
            Some(tol),
            json!({ "errors": errs.clone(), "orders": orders(&errs) }),
            ok,
        ));
    }

    {
        // uniform massive state: pure rest-frequency rotation
        let id = "evolution.zero-mode-phase";
        let length = 2.0 * std::f64::consts::PI * ph.compton_length();
        let uniform = FieldGrid1D::from_fn(64, length, 0.0, |_| {
            Bispinor::new([
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ONE,
                Complex64::ZERO,
            ])
        })
        .expect("grid");
        let period = 2.0 * std::f64::consts::PI / ph.omega();
        let steps = 256;
        let out = evolve(
            &uniform,
            ph.mass,
            ph,
            period / steps as f64,
            steps,
            DiracForm::Plus,
        )
        .expect("evolve");
        let err = out.max_diff(&uniform);
        let tol = ctx.tol(id, 1e-3);
        checks.push(CheckRecord::asserted(
            id,
            "3.8",
            "oracle",
            Some(tol),
            json!({ "phase_error_per_period": err }),
            err <= tol,
        ));
    }

    {
        let id = "evolution.norm-conservation";
        let mut drifts = Vec::new();
        for mass in [0.0, ph.mass] {
            let g = vacuum_grid(ph, 256, 0.0);
            let period = 1.0 / ph.c;
            let steps = (period / (0.5 * g.dy() / ph.c)).round() as usize;
            let out = evolve(&g, mass, ph, period / steps as f64, steps, DiracForm::Plus).unwrap();
            drifts.push((out.norm() - g.norm()).abs() / g.norm());
        }
        let tol = ctx.tol(id, 1e-6);
        let ok = drifts.iter().all(|&d| d <= tol);
        checks.push(CheckRecord::asserted(
            id,
            "plumbing",
            "definition",
            Some(tol),
            json!({ "relative_drift": drifts }),
            ok,
        ));
    }

    {
        // measured frequencies against the energy relation at three
        // (mass, wavenumber) corners
        let id = "evolution.dispersion";
        let n = *ctx.grid_sizes().last().unwrap();
        let lam = ph.compton_length();
        let box_massive = 2.0 * std::f64::consts::PI * lam;
        let cases = [
            (ph.mass, 0.0, box_massive),
            (ph.mass, 1.0 / lam, box_massive),
            (0.0, 2.0 * std::f64::consts::PI, 1.0),
        ];
        let mut rels = Vec::new();
        for (mass, k, length) in cases {
            let omega = measure_dispersion(k, n, length, mass, ph).expect("dispersion");
            let want =
                ((ph.c * ph.hbar * k).powi(2) + (mass * ph.c * ph.c).powi(2)).sqrt() / ph.hbar;
            rels.push((omega - want).abs() / want);
        }
        let tol = ctx.tol(id, 2e-3);
        let ok = rels.iter().all(|&r| r <= tol);
        checks.push(CheckRecord::asserted(
            id,
            "2.3",
            "oracle",
            Some(tol),
            json!({ "relative_errors": rels }),
            ok,
        ));
    }

    {
        let id = "evolution.factorization";
        let mut kgs = Vec::new();
        let mut gaps = Vec::new();
        for &n in ctx.grid_sizes() {
            let dt = 0.5 / (n as f64 * ph.c);
            let g0 = vacuum_grid(ph, n, 0.0);
            let g1 = vacuum_grid(ph, n, dt);
            let g2 = vacuum_grid(ph, n, 2.0 * dt);
            let (kg, gap) = factorization_residual(&g0, &g1, &g2, ph).expect("residual");
            let scale = (2.0 * std::f64::consts::PI * ph.hbar * ph.c).powi(2);
            kgs.push(kg / scale);
            gaps.push(gap / scale);
        }
        let tol = ctx.tol(id, 1e-2);
        let ok =
            orders_in(&kgs, 2.0, 0.15) && orders_in(&gaps, 2.0, 0.15) && kgs[kgs.len() / 2] <= tol;
        checks.push(CheckRecord::asserted(
            id,
            "2.9",
            "oracle",
            Some(tol),
            json!({ "kg": kgs.clone(), "factor_gap": gaps.clone(), "kg_orders": orders(&kgs) }),
            ok,
        ));
    }

    {
        // operator identity on data that does not solve anything
        let id = "evolution.factor-vs-direct";
        let field = |y: f64, t: f64| {
            let a = (2.0 * std::f64::consts::PI * (y - 0.3 * ph.c * t)).sin();
            let b = 0.05 * (4.0 * std::f64::consts::PI * (y + 0.7 * ph.c * t)).cos();
            Bispinor::new([
                Complex64::new(a, 0.2 * b),
                Complex64::new(b, 0.0),
                Complex64::new(0.5 * b, -0.3 * a),
                Complex64::new(0.1, 0.4 * a + b),
            ])
        };
        let mut gaps = Vec::new();
        for &n in ctx.grid_sizes() {
            let dt = 0.5 / (n as f64 * ph.c);
            let make = |t: f64| FieldGrid1D::from_fn(n, 1.0, t, |y| field(y, t)).unwrap();
            let (_, gap) =
                factorization_residual(&make(0.0), &make(dt), &make(2.0 * dt), ph).unwrap();
            let scale = (2.0 * std::f64::consts::PI * ph.hbar * ph.c).powi(2);
            gaps.push(gap / scale);
        }
        let tol = ctx.tol(id, 1e-2);
        let ok = orders_in(&gaps, 2.0, 0.3) && gaps[gaps.len() / 2] <= tol;
        checks.push(CheckRecord::asserted(
            id,
            "2.8",
            "definition",
            Some(tol),
            json!({ "gaps": gaps.clone(), "orders": orders(&gaps) }),
            ok,
        ));
    }

    {
        // two independent discretizations of the same massless dynamics
        let id = "evolution.massless-equivalence";
        let mut diffs = Vec::new();
        for &n in ctx.grid_sizes() {
            let g0 = vacuum_grid(ph, n, 0.0);
            let period = 1.0 / ph.c;
            let steps = (period / (0.5 * g0.dy() / ph.c)).round() as usize;
            let dt = period / steps as f64;
            let dirac_path = evolve(&g0, 0.0, ph, dt, steps, DiracForm::Plus).unwrap();
            let spin1_path = spin1_evolve(&g0, ph.c, dt, steps).unwrap();
            diffs.push(dirac_path.max_diff(&spin1_path));
        }
        let tol = ctx.tol(id, 5e-3);
        let ok = orders_in(&diffs, 2.0, 0.25) && diffs[diffs.len() / 2] <= tol;
        checks.push(CheckRecord::asserted(
            id,
            "1.1",
            "oracle",
            Some(tol),
            json!({ "differences": diffs.clone(), "orders": orders(&diffs) }),
            ok,
        ));
    }

    {
        // residual stencil against the dictionary-mapped vacuum wave
        let id = "evolution.dirac-residual";
        let mut errs = Vec::new();
        for &n in ctx.grid_sizes() {
            let dt = 0.5 / (n as f64 * ph.c);
            let prev = vacuum_grid(ph, n, 0.0);
            let next = vacuum_grid(ph, n, dt);
            let r = dirac_residual(&prev, &next, 0.0, ph, DiracForm::Plus).unwrap();
            errs.push(r / (2.0 * std::f64::consts::PI * ph.hbar * ph.c));
        }
        let tol = ctx.tol(id, 1e-3);
        let ok = orders_in(&errs, 2.0, 0.1) && *errs.last().unwrap() <= tol;
        checks.push(CheckRecord::asserted(
            id,
            "2.11",
            "oracle",
            Some(tol),
            json!({ "errors": errs.clone(), "orders": orders(&errs) }),
            ok,
        ));
    }

    SuiteReport {
        suite: "evolution".into(),
        checks,
    }
}
