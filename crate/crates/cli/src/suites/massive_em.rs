//! Mass-as-current suite: imaginary sources, the two current-carrying
//! systems, the conservation-law identity and the ring displacement current.

use num_complex::Complex64;
use serde_json::json;

use emdirac_core::algebra::DiracForm;
use emdirac_core::field_map::EMField;
use emdirac_core::massive_em::{
    conjugate_configuration, connection_mass_check, mass_currents, maxwell_mass_residual,
    ring_displacement_current,
};
use emdirac_core::plane_waves::amplitude_set;

use super::{
    massive_row_scale, massive_wave_grid, massive_wave_specs, orders, orders_in, vacuum_grid,
    SuiteCtx,
};
use crate::report::{CheckRecord, SuiteReport};

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut checks = Vec::new();
    let ph = &ctx.ph;

    {
        let id = "massive-em.mass-currents";
        let omega = ph.omega();
        let f = EMField::from_real([1.0, 0.0, 2.0], [3.0, 0.0, 0.0]);
        let j = mass_currents(&f, omega).expect("currents");
        let factor = Complex64::new(0.0, omega / (4.0 * std::f64::consts::PI));
        let mut worst: f64 = 0.0;
        for k in 0..3 {
            worst = worst.max((j.electric[k] - factor * f.e[k]).norm());
            worst = worst.max((j.magnetic[k] - factor * f.h[k]).norm());
        }
        let zero = mass_currents(&f, 0.0).expect("currents");
        for k in 0..3 {
            worst = worst.max(zero.electric[k].norm());
            worst = worst.max(zero.magnetic[k].norm());
        }
        let tol = ctx.tol(id, 0.0);
        checks.push(CheckRecord::asserted(
            id,
            "3.13",
            "definition",
            Some(tol),
            json!({ "max_deviation": worst }),
            worst <= tol,
        ));
    }

    {
        // the superposed consistent wave solves the minus-sign system; all
        // eight scalar residuals converge at second order
        let id = "massive-em.residual-convergence";
        let scale = massive_row_scale(ph) * 2.0; // two unit-amplitude branches
        let mut history: Vec<[f64; 8]> = Vec::new();
        for &n in ctx.grid_sizes() {
            let dt = 0.4 * massive_wave_grid(ph, n, 0.0).dy() / ph.c;
            let prev = massive_wave_grid(ph, n, 0.0);
            let next = massive_wave_grid(ph, n, dt);
            history.push(
                maxwell_mass_residual(&prev, &next, ph.omega(), ph.c, DiracForm::Minus)
                    .expect("residual"),
            );
        }
        let tol = ctx.tol(id, 1e-3);
        let mut ok = true;
        let mut all_orders = Vec::new();
        for comp in 0..8 {
            let errs: Vec<f64> = history.iter().map(|r| r[comp] / scale).collect();
            ok &= orders_in(&errs, 2.0, 0.1);
            ok &= *errs.last().unwrap() <= tol;
            all_orders.push(orders(&errs));
        }
        checks.push(CheckRecord::asserted(
            id,
            "3.12",
            "oracle",
            Some(tol),
            json!({ "orders_per_component": all_orders }),
            ok,
        ));
    }

    {
        let id = "massive-em.conjugate-system";
        let scale = massive_row_scale(ph) * 2.0;
        let mut history: Vec<[f64; 8]> = Vec::new();
        for &n in ctx.grid_sizes() {
            let dt = 0.4 * massive_wave_grid(ph, n, 0.0).dy() / ph.c;
            let prev = conjugate_configuration(&massive_wave_grid(ph, n, 0.0));
            let next = conjugate_configuration(&massive_wave_grid(ph, n, dt));
            history.push(
                maxwell_mass_residual(&prev, &next, ph.omega(), ph.c, DiracForm::Plus)
                    .expect("residual"),
            );
        }
        let tol = ctx.tol(id, 1e-3);
        let mut ok = true;
        for comp in 0..8 {
            let errs: Vec<f64> = history.iter().map(|r| r[comp] / scale).collect();
            ok &= orders_in(&errs, 2.0, 0.1);
            ok &= *errs.last().unwrap() <= tol;
        }
        checks.push(CheckRecord::asserted(
            id,
            "3.11",
            "oracle",
            Some(tol),
            json!({ "components": 8 }),
            ok,
        ));
    }

    {
        // swapping system sign and conjugating the fields leaves all maxima
        // unchanged
        let id = "massive-em.conjugation-symmetry";
        let n = ctx.grid_sizes()[0];
        let dt = 0.4 * massive_wave_grid(ph, n, 0.0).dy() / ph.c;
        let prev = massive_wave_grid(ph, n, 0.0);
        let next = massive_wave_grid(ph, n, dt);
        let direct =
            maxwell_mass_residual(&prev, &next, ph.omega(), ph.c, DiracForm::Minus).unwrap();
        let swapped = maxwell_mass_residual(
            &conjugate_configuration(&prev),
            &conjugate_configuration(&next),
            ph.omega(),
            ph.c,
            DiracForm::Plus,
        )
        .unwrap();
        let scale = massive_row_scale(ph) * 2.0;
        let worst = direct
            .iter()
            .zip(&swapped)
            .map(|(a, b)| (a - b).abs() / scale)
            .fold(0.0f64, f64::max);
        let tol = ctx.tol(id, 1e-13);
        checks.push(CheckRecord::asserted(
            id,
            "3.12",
            "definition",
            Some(tol),
            json!({ "max_relative_gap": worst }),
            worst <= tol,
        ));
    }

    {
        // omega = 0 collapses the system to sourceless form: a vacuum wave
        // passes
        let id = "massive-em.massless-reduction";
        let n = ctx.grid_sizes()[ctx.grid_sizes().len() - 1];
        let dt = 0.5 / (n as f64 * ph.c);
        let prev = vacuum_grid(ph, n, 0.0);
        let next = vacuum_grid(ph, n, dt);
        let r = maxwell_mass_residual(&prev, &next, 0.0, ph.c, DiracForm::Minus).unwrap();
        let worst = r.iter().fold(0.0f64, |a, &b| a.max(b)) / (2.0 * std::f64::consts::PI);
        let tol = ctx.tol(id, 1e-3);
        checks.push(CheckRecord::asserted(
            id,
            "3.11",
            "definition",
            Some(tol),
            json!({ "max_scaled_residual": worst }),
            worst <= tol,
        ));
    }

    {
        // a vacuum wave does not satisfy the massive system: the current
        // rows stay order one instead of converging
        let id = "massive-em.negative-control";
        let k = 2.0 * std::f64::consts::PI;
        let omega = ph.c * k; // mass frequency comparable to the wave frequency
        let mut maxima = Vec::new();
        for &n in ctx.grid_sizes() {
            let dt = 0.5 / (n as f64 * ph.c);
            let prev = vacuum_grid(ph, n, 0.0);
            let next = vacuum_grid(ph, n, dt);
            let r = maxwell_mass_residual(&prev, &next, omega, ph.c, DiracForm::Minus).unwrap();
            maxima.push(r.iter().fold(0.0f64, |a, &b| a.max(b)) / k);
        }
        let ok = maxima.iter().all(|&v| v > 0.1);
        checks.push(CheckRecord::asserted(
            id,
            "3.13",
            "oracle",
            None,
            json!({ "scaled_residuals": maxima }),
            ok,
        ));
    }

    {
        let id = "massive-em.connection-identity";
        let (s1, _) = massive_wave_specs(ph);
        let psi = amplitude_set(&s1, ph).expect("amplitudes");
        let rest = ph.rest_energy();
        let matched =
            connection_mass_check(&psi, s1.energy, s1.momentum, s1.mass, ph.c, DiracForm::Plus)
                .unwrap()
                / rest;
        let collapsed =
            connection_mass_check(&psi, 0.0, [0.0; 3], s1.mass, ph.c, DiracForm::Plus).unwrap();
        let collapse_gap = (collapsed - rest).abs() / rest;
        let tol = ctx.tol(id, 1e-12);
        checks.push(CheckRecord::asserted(
            id,
            "3.6",
            "oracle",
            Some(tol),
            json!({
                "matched_residual_over_rest": matched,
                "zero_momentum_gap": collapse_gap,
            }),
            matched <= tol && collapse_gap <= tol,
        ));
    }

    {
        // a wave riding a Compton-radius ring at light speed sources exactly
        // the imaginary current magnitude
        let id = "massive-em.ring-current-linkage";
        let e_mag = 1.0;
        let rc = ring_displacement_current(e_mag, 0.0, ph.c, ph.compton_length()).unwrap();
        let f = EMField::from_real([e_mag, 0.0, 0.0], [0.0; 3]);
        let j = mass_currents(&f, ph.omega()).unwrap();
        let rel = (rc.tangential_magnitude() - j.electric[0].norm()).abs() / j.electric[0].norm();
        let tol = ctx.tol(id, 1e-12);
        checks.push(CheckRecord::asserted(
            id,
            "3.18",
            "oracle",
            Some(tol),
            json!({ "relative_gap": rel, "omega_p_over_omega": rc.omega_p / ph.omega() }),
            rel <= tol,
        ));
    }

    {
        let id = "massive-em.ring-geometry";
        let rc =
            ring_displacement_current(2.0, 0.7, 1.3 * ph.c, 0.4 * ph.compton_length()).unwrap();
        let dot = rc.normal[0] * rc.tangential[0]
            + rc.normal[1] * rc.tangential[1]
            + rc.normal[2] * rc.tangential[2];
        let z = rc.complex_form();
        let ok = dot == 0.0 && z.re == rc.normal[0] && z.im == rc.tangential[1];
        checks.push(CheckRecord::asserted(
            id,
            "3.19",
            "definition",
            Some(0.0),
            json!({ "normal_dot_tangent": dot }),
            ok,
        ));
    }

    SuiteReport {
        suite: "massive-em".into(),
        checks,
    }
}
