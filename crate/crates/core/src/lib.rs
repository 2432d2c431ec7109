// `!(x > 0.0)` guards keep NaN on the error path; a plain `x <= 0.0` would
// let NaN through. Index loops over fixed 3/4-sized arrays stay as written.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

//! Numerical toolkit for the electromagnetic form of the Dirac equation.
//!
//! The crate verifies, at desk scale, the chain that links the vacuum Maxwell
//! equations to the massive Dirac equation and onward to a self-interacting
//! nonlinear field equation:
//!
//! * [`algebra`] builds the Dirac matrices and certifies their relations.
//! * [`field_map`] is the bispinor <-> (E, H) dictionary for waves along y,
//!   plus the spin-1 (curl) form of the vacuum Maxwell equations.
//! * [`plane_waves`] constructs the four plane-wave amplitude families and
//!   their printed tables.
//! * [`massive_em`] expresses the mass term as imaginary Maxwell currents and
//!   as the tangential displacement current of a wave on a ring.
//! * [`evolution`] is a 1+1D periodic evolution engine with dispersion and
//!   factorization diagnostics.
//! * [`nonlinear`] holds the self-action functionals, the nonlinear residual
//!   with its self-consistent volume, and the quartic bilinear identities.
//! * [`born_infeld`] evaluates the classical nonlinear-electrodynamics
//!   baselines and the finite-field point-charge profile.

pub mod algebra;
pub mod born_infeld;
pub mod error;
pub mod evolution;
pub mod field_map;
pub mod grid;
pub mod massive_em;
pub mod nonlinear;
pub mod params;
pub mod plane_waves;
pub mod vec3;

pub use algebra::{Bispinor, ComplexMatrix4, DiracForm};
pub use error::{CoreError, Result};
pub use field_map::{CramersVector, EMField};
pub use grid::FieldGrid1D;
pub use params::PhysParams;
pub use plane_waves::{PlaneWaveSpec, SpecMode};
