//! The check-id manifest: every id a suite can emit maps to exactly one
//! library operation. A test asserts the bijection in both directions.

/// `(check id, library operation it exercises)`.
pub const CHECK_MANIFEST: &[(&str, &str)] = &[
    ("algebra.anticommutators", "algebra::anticommutator"),
    ("algebra.alpha-dot-square", "algebra::alpha_dot"),
    ("algebra.hermitian-unitary", "algebra::dirac_alpha"),
    ("algebra.alpha5-construction", "algebra::alpha5"),
    ("field-map.roundtrip", "field_map::bispinor_to_fields"),
    ("field-map.linearity", "field_map::fields_to_bispinor"),
    ("field-map.spin1-generators", "field_map::spin1_matrices"),
    (
        "field-map.spin1-curl-reduction",
        "field_map::spin1_matrices",
    ),
    (
        "field-map.spin1-residual-convergence",
        "field_map::maxwell_spin1_residual",
    ),
    (
        "field-map.spin1-negative-control",
        "field_map::maxwell_spin1_residual",
    ),
    (
        "field-map.cramers-invariant",
        "field_map::CramersVector::from_field",
    ),
    (
        "plane-waves.amplitude-table-positive",
        "plane_waves::amplitude_set",
    ),
    (
        "plane-waves.amplitude-table-negative",
        "plane_waves::amplitude_set",
    ),
    ("plane-waves.amplitude-ratio", "plane_waves::amplitude_set"),
    ("plane-waves.branch-support", "plane_waves::amplitude_set"),
    ("plane-waves.orthogonality", "plane_waves::amplitude_family"),
    (
        "plane-waves.residual-consistent",
        "plane_waves::dirac_plane_residual",
    ),
    ("plane-waves.standing-wave", "plane_waves::plane_wave"),
    (
        "plane-waves.literal-dispersion",
        "plane_waves::dirac_plane_residual",
    ),
    ("massive-em.mass-currents", "massive_em::mass_currents"),
    (
        "massive-em.residual-convergence",
        "massive_em::maxwell_mass_residual",
    ),
    (
        "massive-em.conjugate-system",
        "massive_em::maxwell_mass_residual",
    ),
    (
        "massive-em.conjugation-symmetry",
        "massive_em::conjugate_configuration",
    ),
    (
        "massive-em.massless-reduction",
        "massive_em::maxwell_mass_residual",
    ),
    (
        "massive-em.negative-control",
        "massive_em::maxwell_mass_residual",
    ),
    (
        "massive-em.connection-identity",
        "massive_em::connection_mass_check",
    ),
    (
        "massive-em.ring-current-linkage",
        "massive_em::ring_displacement_current",
    ),
    (
        "massive-em.ring-geometry",
        "massive_em::ring_displacement_current",
    ),
    ("evolution.periodic-return", "evolution::evolve"),
    ("evolution.zero-mode-phase", "evolution::evolve"),
    ("evolution.norm-conservation", "evolution::evolve"),
    ("evolution.dispersion", "evolution::measure_dispersion"),
    (
        "evolution.factorization",
        "evolution::factorization_residual",
    ),
    (
        "evolution.factor-vs-direct",
        "evolution::factorization_residual",
    ),
    ("evolution.massless-equivalence", "field_map::spin1_evolve"),
    ("evolution.dirac-residual", "evolution::dirac_residual"),
    ("nonlinear.energy-consistency", "nonlinear::energy_density"),
    (
        "nonlinear.momentum-consistency",
        "nonlinear::momentum_density",
    ),
    (
        "nonlinear.invariant-identity",
        "nonlinear::invariant_identity_check",
    ),
    ("nonlinear.fierz-identity", "nonlinear::fierz_check"),
    (
        "nonlinear.fierz-printed-variant",
        "nonlinear::fierz_check_printed",
    ),
    (
        "nonlinear.quartic-basis-agreement",
        "nonlinear::lagrangian_nonlinear_quantum",
    ),
    (
        "nonlinear.quartic-field-chain",
        "nonlinear::lagrangian_nonlinear_em",
    ),
    (
        "nonlinear.linear-lagrangian",
        "nonlinear::lagrangian_linear",
    ),
    (
        "nonlinear.lagrangian-momentum-sign",
        "nonlinear::lagrangian_linear",
    ),
    (
        "nonlinear.self-consistency",
        "nonlinear::self_consistent_delta_tau",
    ),
    (
        "nonlinear.volume-scaling",
        "nonlinear::self_consistent_delta_tau",
    ),
    (
        "born-infeld.radial-profile",
        "born_infeld::bi_radial_fields",
    ),
    (
        "born-infeld.profile-monotonicity",
        "born_infeld::bi_radial_fields",
    ),
    ("born-infeld.maxwell-limit", "born_infeld::bi_lagrangian"),
    (
        "born-infeld.weak-field-agreement",
        "born_infeld::bi_weak_field",
    ),
    (
        "born-infeld.weak-field-degradation",
        "born_infeld::bi_weak_field",
    ),
    (
        "born-infeld.quartic-coefficients",
        "born_infeld::heisenberg_euler",
    ),
    (
        "born-infeld.quartic-positivity",
        "born_infeld::bi_weak_field",
    ),
    ("born-infeld.domain-guard", "born_infeld::bi_lagrangian"),
];

pub fn operation_for(check_id: &str) -> Option<&'static str> {
    CHECK_MANIFEST
        .iter()
        .find(|(id, _)| *id == check_id)
        .map(|(_, op)| *op)
}
