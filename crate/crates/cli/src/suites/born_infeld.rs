//! Nonlinear-electrodynamics baseline suite: both printed Lagrangians, the
//! limiting-field point-charge profile and the weak-field limits.

use serde_json::json;

use emdirac_core::born_infeld::{
    bi_lagrangian, bi_radial_fields, bi_weak_field, heisenberg_euler, log_log_slope, weak_field_ok,
    BIParams, FINE_STRUCTURE,
};
use emdirac_core::field_map::{real_invariants, EMField};

use super::SuiteCtx;
use crate::report::{CheckRecord, SuiteReport};

const PI8: f64 = 8.0 * std::f64::consts::PI;

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut checks = Vec::new();
    let p = BIParams::new(1.0, 1.0, 1.0).expect("params");

    {
        let id = "born-infeld.radial-profile";
        let at_r0 = bi_radial_fields(p.r0, &p).unwrap();
        let sqrt2_gap = (at_r0.eps_eff - 2.0_f64.sqrt()).abs();
        let near = bi_radial_fields(p.r0 / 100.0, &p).unwrap();
        let e0 = p.charge / (p.r0 * p.r0);
        let saturation_gap = (near.e - e0).abs() / e0;
        let far = bi_radial_fields(10.0 * p.r0, &p).unwrap();
        let ratio_gap = (far.d / far.e - far.eps_eff).abs();
        let ok = sqrt2_gap <= ctx.tol("born-infeld.radial-profile", 1e-14)
            && saturation_gap <= 1e-7
            && ratio_gap <= 1e-14;
        checks.push(CheckRecord::asserted(
            id,
            "1.8",
            "oracle",
            Some(1e-14),
            json!({
                "sqrt2_gap": sqrt2_gap,
                "saturation_gap": saturation_gap,
                "ratio_gap": ratio_gap,
            }),
            ok,
        ));
    }

    {
        let id = "born-infeld.profile-monotonicity";
        let mut ok = true;
        let mut last = f64::INFINITY;
        for i in 1..200 {
            let rf = bi_radial_fields(0.05 * i as f64 * p.r0, &p).unwrap();
            ok &= rf.eps_eff >= 1.0 && rf.eps_eff <= last;
            ok &= rf.e <= p.limit_field * (1.0 + 1e-12) && rf.e <= rf.d;
            last = rf.eps_eff;
        }
        let tail = bi_radial_fields(1e6 * p.r0, &p).unwrap();
        ok &= (tail.eps_eff - 1.0).abs() < 1e-11;
        checks.push(CheckRecord::asserted(
            id,
            "1.7",
            "definition",
            None,
            json!({ "eps_eff_at_1e6_r0": tail.eps_eff }),
            ok,
        ));
    }

    {
        // deviation from the plain field density scales as a^2
        let id = "born-infeld.maxwell-limit";
        let f = EMField::from_real([0.8, 0.1, 0.0], [0.0, 0.3, 0.4]);
        let inv = real_invariants(&f);
        let maxwell = -(inv.e_sq - inv.h_sq) / PI8;
        let a_values = [1e-3, 2e-3, 4e-3, 8e-3];
        let devs: Vec<f64> = a_values
            .iter()
            .map(|&a| (bi_lagrangian(&f, a).unwrap() - maxwell).abs())
            .collect();
        let slope = log_log_slope(&a_values, &devs);
        let tol = ctx.tol(id, 0.05);
        checks.push(CheckRecord::asserted(
            id,
            "1.3",
            "oracle",
            Some(tol),
            json!({ "slope": slope }),
            (slope - 2.0).abs() <= tol,
        ));
    }

    {
        let id = "born-infeld.weak-field-agreement";
        let a = 1.0;
        let f = EMField::from_real([0.05, 0.0, 0.0], [0.0; 3]);
        let full = bi_lagrangian(&f, a).unwrap();
        let weak = bi_weak_field(&f, a);
        let rel = (full - weak).abs() / full.abs();
        let tol = ctx.tol(id, 1e-4);
        checks.push(CheckRecord::asserted(
            id,
            "1.4",
            "oracle",
            Some(tol),
            json!({ "relative_gap_at_ae_005": rel, "soft_check_ok": weak_field_ok(&f, a) }),
            rel <= tol,
        ));

        // measured degradation of the expansion as the field grows
        let es = [0.02, 0.04, 0.08, 0.16];
        let devs: Vec<f64> = es
            .iter()
            .map(|&e| {
                let f = EMField::from_real([e, 0.0, 0.0], [0.0; 3]);
                ((bi_lagrangian(&f, a).unwrap() - bi_weak_field(&f, a))
                    / bi_lagrangian(&f, a).unwrap())
                .abs()
            })
            .collect();
        checks.push(CheckRecord::informational(
            "born-infeld.weak-field-degradation",
            "1.4",
            "oracle",
            json!({ "ae": es, "relative_gaps": devs, "measured_order": log_log_slope(&es, &devs) }),
        ));
    }

    {
        // coefficient structure of the two quartic densities: 7 against 4 on
        // the (E.H)^2 invariant
        let id = "born-infeld.quartic-coefficients";
        let f = EMField::from_real([1.0, 0.0, 0.0], [1.0, 0.0, 0.0]);
        let he = heisenberg_euler(&f, 1.0) * 360.0 * std::f64::consts::PI.powi(2);
        let bi = bi_weak_field(&f, 1.0) * 32.0 * std::f64::consts::PI;
        let physical = heisenberg_euler(&f, FINE_STRUCTURE);
        let ok = (he - 7.0).abs() <= 1e-12 && (bi - 4.0).abs() <= 1e-12;
        checks.push(CheckRecord::asserted(
            id,
            "1.5",
            "table",
            Some(1e-12),
            json!({
                "edoth_coefficient_vacuum_polarization": he,
                "edoth_coefficient_limiting_field": bi,
                "density_at_fine_structure": physical,
            }),
            ok,
        ));
    }

    {
        let id = "born-infeld.quartic-positivity";
        let mut ok = true;
        for i in 0..100 {
            let x = i as f64 * 0.13;
            let f = EMField::from_real([x.sin(), x.cos(), 0.3], [-x.cos(), 0.2 * x.sin(), 1.0]);
            let inv = real_invariants(&f);
            let linear = -(inv.e_sq - inv.h_sq) / PI8;
            ok &= bi_weak_field(&f, 0.4) - linear >= 0.0;
        }
        checks.push(CheckRecord::asserted(
            id,
            "1.4",
            "definition",
            None,
            json!({ "samples": 100 }),
            ok,
        ));
    }

    {
        // the full form errors out past the limiting bound instead of going
        // complex
        let id = "born-infeld.domain-guard";
        let over = EMField::from_real([0.0; 3], [2.0, 0.0, 0.0]);
        let ok = bi_lagrangian(&over, 1.0).is_err();
        checks.push(CheckRecord::asserted(
            id,
            "1.3",
            "definition",
            None,
            json!({ "rejects_past_bound": ok }),
            ok,
        ));
    }

    SuiteReport {
        suite: "born-infeld".into(),
        checks,
    }
}
