//! Cross-module equivalences: the spin-1 field form, the bispinor form and
//! the current-carrying systems must all converge on the same waves.

use emdirac_core::algebra::DiracForm;
use emdirac_core::evolution::{dirac_residual, evolve};
use emdirac_core::field_map::{fields_to_bispinor, maxwell_spin1_residual, spin1_evolve, EMField};
use emdirac_core::massive_em::{conjugate_configuration, maxwell_mass_residual};
use emdirac_core::plane_waves::{dirac_plane_residual, plane_wave, PlaneWaveSpec};
use emdirac_core::{FieldGrid1D, PhysParams};

fn vacuum_grid(ph: &PhysParams, n: usize, t: f64) -> FieldGrid1D {
    let k = 2.0 * std::f64::consts::PI;
    FieldGrid1D::from_fn(n, 1.0, t, |y| {
        let phase = k * (y - ph.c * t);
        fields_to_bispinor(&EMField::from_real(
            [phase.cos(), 0.0, 0.0],
            [0.0, 0.0, -phase.cos()],
        ))
    })
    .unwrap()
}

fn orders(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}

#[test]
fn massless_residuals_converge_together_at_second_order() {
    let ph = PhysParams::natural();
    let mut spin1 = Vec::new();
    let mut dirac = Vec::new();
    for n in [128usize, 256, 512] {
        let dt = 0.5 / n as f64;
        let prev = vacuum_grid(&ph, n, 0.0);
        let next = vacuum_grid(&ph, n, dt);
        spin1.push(maxwell_spin1_residual(&prev, &next, ph.c).unwrap());
        dirac.push(dirac_residual(&prev, &next, 0.0, &ph, DiracForm::Plus).unwrap());
    }
    for order in orders(&spin1) {
        assert!((order - 2.0).abs() < 0.1, "spin-1 order {order}");
    }
    for order in orders(&dirac) {
        assert!((order - 2.0).abs() < 0.1, "dirac order {order}");
    }
    assert!(spin1[1] < 1e-3, "spin-1 residual at n=256: {}", spin1[1]);
}

#[test]
fn massive_equivalence_eight_residuals_and_analytic_wave() {
    let ph = PhysParams::natural();
    let spec1 = PlaneWaveSpec::consistent(1, [0.0, 2.0, 0.0], 1.0, 0.0, &ph).unwrap();
    let spec2 = PlaneWaveSpec::consistent(2, [0.0, 2.0, 0.0], 1.0, 0.0, &ph).unwrap();
    // each polarization solves the operator form exactly
    assert!(dirac_plane_residual(&spec1, &ph, DiracForm::Plus).unwrap() < 1e-12);
    assert!(dirac_plane_residual(&spec2, &ph, DiracForm::Plus).unwrap() < 1e-12);

    // superpose both polarizations so every field component is active
    let length = 2.0 * std::f64::consts::PI;
    let grids = |n: usize, t: f64| {
        FieldGrid1D::from_fn(n, length, t, |y| {
            plane_wave(&spec1, &ph, y, t)
                .unwrap()
                .add(&plane_wave(&spec2, &ph, y, t).unwrap())
        })
        .unwrap()
    };
    let mut per_component: Vec<[f64; 8]> = Vec::new();
    for n in [128usize, 256, 512] {
        let dt = 0.4 * length / n as f64;
        let prev = grids(n, 0.0);
        let next = grids(n, dt);
        per_component
            .push(maxwell_mass_residual(&prev, &next, ph.omega(), ph.c, DiracForm::Minus).unwrap());
    }
    for comp in 0..8 {
        let errs: Vec<f64> = per_component.iter().map(|r| r[comp]).collect();
        for order in orders(&errs) {
            assert!((order - 2.0).abs() < 0.1, "component {comp} order {order}");
        }
    }

    // the conjugate configuration solves the opposite-sign system
    let n = 256;
    let dt = 0.4 * length / n as f64;
    let prev = conjugate_configuration(&grids(n, 0.0));
    let next = conjugate_configuration(&grids(n, dt));
    let r = maxwell_mass_residual(&prev, &next, ph.omega(), ph.c, DiracForm::Plus).unwrap();
    assert!(r.iter().all(|&x| x < 1e-2), "{r:?}");
}

#[test]
fn two_evolutions_agree_on_mapped_massless_fields() {
    let ph = PhysParams::natural();
    let mut diffs = Vec::new();
    for n in [128usize, 256, 512] {
        let g0 = vacuum_grid(&ph, n, 0.0);
        let dt0 = 0.5 * g0.dy();
        let steps = (1.0 / dt0).round() as usize;
        let dt = 1.0 / steps as f64;
        let dirac_path = evolve(&g0, 0.0, &ph, dt, steps, DiracForm::Plus).unwrap();
        let spin1_path = spin1_evolve(&g0, ph.c, dt, steps).unwrap();
        diffs.push(dirac_path.max_diff(&spin1_path));
    }
    assert!(diffs[1] < 5e-3, "difference at n=256: {}", diffs[1]);
    for order in orders(&diffs) {
        assert!((order - 2.0).abs() < 0.25, "order {order}");
    }
}

#[test]
fn evolve_measures_order_two_on_the_translation_solution() {
    let ph = PhysParams::natural();
    let mut errs = Vec::new();
    for n in [128usize, 256, 512] {
        let g0 = vacuum_grid(&ph, n, 0.0);
        let dt0 = 0.5 * g0.dy();
        let steps = (1.0 / dt0).round() as usize;
        let dt = 1.0 / steps as f64;
        let out = evolve(&g0, 0.0, &ph, dt, steps, DiracForm::Plus).unwrap();
        errs.push(out.max_diff(&g0));
    }
    for order in orders(&errs) {
        assert!((order - 2.0).abs() < 0.1, "order {order}");
    }
}
