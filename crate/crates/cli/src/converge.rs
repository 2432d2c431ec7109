//! Grid-refinement studies: run one named check across the configured sizes
//! and report error and measured order per size.

use serde::Serialize;

use emdirac_core::algebra::{Bispinor, DiracForm};
use emdirac_core::evolution::{
    dirac_residual, evolve_with_scheme, factorization_residual, TimeScheme,
};
use emdirac_core::field_map::{maxwell_spin1_residual, spin1_evolve};
use emdirac_core::massive_em::maxwell_mass_residual;
use emdirac_core::{FieldGrid1D, PhysParams};
use num_complex::Complex64;

use crate::config::RunConfig;
use crate::report::csv_field;
use crate::suites::{massive_row_scale, massive_wave_grid, vacuum_grid};

/// `(check id, operation driven by the study)`.
pub const CONVERGENCE_CHECKS: &[(&str, &str)] = &[
    ("evolution.advect-m0", "evolution::evolve"),
    ("evolution.zero-mode", "evolution::evolve"),
    ("evolution.dirac-residual", "evolution::dirac_residual"),
    (
        "evolution.factorization",
        "evolution::factorization_residual",
    ),
    ("evolution.massless-equivalence", "field_map::spin1_evolve"),
    ("evolution.static-zero", "evolution::evolve"),
    (
        "field-map.spin1-residual",
        "field_map::maxwell_spin1_residual",
    ),
    ("massive-em.residual", "massive_em::maxwell_mass_residual"),
];

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub error: f64,
    pub order: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceTable {
    pub check: String,
    pub first_order: bool,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("table serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,error,order\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{}\n",
                row.n,
                row.error,
                csv_field(&row.order)
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{:>8} {:>14} {:>8}\n", "n", "error", "order");
        for row in &self.rows {
            out.push_str(&format!(
                "{:>8} {:>14.6e} {:>8}\n",
                row.n, row.error, row.order
            ));
        }
        out
    }
}

/// Near-roundoff errors get an `exact` order instead of a meaningless ratio.
const EXACT_FLOOR: f64 = 1e-13;

fn table_from_errors(
    check: &str,
    first_order: bool,
    ns: &[usize],
    errs: &[f64],
) -> ConvergenceTable {
    let mut rows = Vec::new();
    for (i, (&n, &e)) in ns.iter().zip(errs).enumerate() {
        let order = if e <= EXACT_FLOOR {
            "exact".to_string()
        } else if i == 0 || errs[i - 1] <= EXACT_FLOOR {
            "-".to_string()
        } else {
            format!("{:.2}", (errs[i - 1] / e).log2())
        };
        rows.push(ConvergenceRow { n, error: e, order });
    }
    ConvergenceTable {
        check: check.to_string(),
        first_order,
        rows,
    }
}

pub fn convergence_study(
    cfg: &RunConfig,
    check: &str,
    first_order: bool,
) -> Result<ConvergenceTable, String> {
    if cfg.grid_sizes.len() < 3 {
        return Err(format!(
            "a convergence study needs at least 3 grid sizes, got {}",
            cfg.grid_sizes.len()
        ));
    }
    if !CONVERGENCE_CHECKS.iter().any(|(id, _)| *id == check) {
        let names: Vec<&str> = CONVERGENCE_CHECKS.iter().map(|(id, _)| *id).collect();
        return Err(format!(
            "unknown convergence check '{check}', expected one of: {}",
            names.join(", ")
        ));
    }
    let ph = cfg.units.params();
    let scheme = if first_order {
        TimeScheme::BackwardEuler
    } else {
        TimeScheme::Trapezoidal
    };
    let ns = cfg.grid_sizes.clone();
    let errs: Vec<f64> = ns
        .iter()
        .map(|&n| run_check(check, n, &ph, scheme))
        .collect();
    Ok(table_from_errors(check, first_order, &ns, &errs))
}

fn run_check(check: &str, n: usize, ph: &PhysParams, scheme: TimeScheme) -> f64 {
    match check {
        "evolution.advect-m0" => {
            let g = vacuum_grid(ph, n, 0.0);
            let period = 1.0 / ph.c;
            let steps = (period / (0.5 * g.dy() / ph.c)).round() as usize;
            let dt = period / steps as f64;
            let out = evolve_with_scheme(&g, 0.0, ph, dt, steps, DiracForm::Plus, scheme).unwrap();
            out.max_diff(&g)
        }
        "evolution.zero-mode" => {
            let length = 2.0 * std::f64::consts::PI * ph.compton_length();
            let uniform = FieldGrid1D::from_fn(n.max(8), length, 0.0, |_| {
                Bispinor::new([
                    Complex64::ZERO,
                    Complex64::ZERO,
                    Complex64::ONE,
                    Complex64::ZERO,
                ])
            })
            .unwrap();
            let period = 2.0 * std::f64::consts::PI / ph.omega();
            let steps = 4 * n;
            let out = evolve_with_scheme(
                &uniform,
                ph.mass,
                ph,
                period / steps as f64,
                steps,
                DiracForm::Plus,
                scheme,
            )
            .unwrap();
            out.max_diff(&uniform)
        }
        "evolution.dirac-residual" => {
            let dt = 0.5 / (n as f64 * ph.c);
            let prev = vacuum_grid(ph, n, 0.0);
            let next = vacuum_grid(ph, n, dt);
            dirac_residual(&prev, &next, 0.0, ph, DiracForm::Plus).unwrap()
                / (2.0 * std::f64::consts::PI * ph.hbar * ph.c)
        }
        "evolution.factorization" => {
            let dt = 0.5 / (n as f64 * ph.c);
            let g0 = vacuum_grid(ph, n, 0.0);
            let g1 = vacuum_grid(ph, n, dt);
            let g2 = vacuum_grid(ph, n, 2.0 * dt);
            let (kg, _) = factorization_residual(&g0, &g1, &g2, ph).unwrap();
            kg / (2.0 * std::f64::consts::PI * ph.hbar * ph.c).powi(2)
        }
        "evolution.massless-equivalence" => {
            let g0 = vacuum_grid(ph, n, 0.0);
            let period = 1.0 / ph.c;
            let steps = (period / (0.5 * g0.dy() / ph.c)).round() as usize;
            let dt = period / steps as f64;
            let dirac_path =
                evolve_with_scheme(&g0, 0.0, ph, dt, steps, DiracForm::Plus, scheme).unwrap();
            let spin1_path = spin1_evolve(&g0, ph.c, dt, steps).unwrap();
            dirac_path.max_diff(&spin1_path)
        }
        "evolution.static-zero" => {
            let g = FieldGrid1D::from_fn(n, 1.0, 0.0, |_| Bispinor::zero()).unwrap();
            let dt = 0.5 / (n as f64 * ph.c);
            let out = evolve_with_scheme(&g, 0.0, ph, dt, 16, DiracForm::Plus, scheme).unwrap();
            out.max_diff(&g)
        }
        "field-map.spin1-residual" => {
            let dt = 0.5 / (n as f64 * ph.c);
            let prev = vacuum_grid(ph, n, 0.0);
            let next = vacuum_grid(ph, n, dt);
            maxwell_spin1_residual(&prev, &next, ph.c).unwrap()
        }
        "massive-em.residual" => {
            let dt = 0.4 * massive_wave_grid(ph, n, 0.0).dy() / ph.c;
            let prev = massive_wave_grid(ph, n, 0.0);
            let next = massive_wave_grid(ph, n, dt);
            let r =
                maxwell_mass_residual(&prev, &next, ph.omega(), ph.c, DiracForm::Minus).unwrap();
            r.iter().fold(0.0f64, |a, &b| a.max(b)) / (massive_row_scale(ph) * 2.0)
        }
        other => unreachable!("validated name {other}"),
    }
}
