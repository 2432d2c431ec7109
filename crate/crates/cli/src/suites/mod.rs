//! Verification suites. Each suite turns one module's invariants and worked
//! examples into report rows; `all` strings the seven together.

pub mod algebra;
pub mod born_infeld;
pub mod evolution;
pub mod field_map;
pub mod massive_em;
pub mod nonlinear;
pub mod plane_waves;

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use emdirac_core::algebra::Bispinor;
use emdirac_core::field_map::fields_to_bispinor;
use emdirac_core::plane_waves::{plane_wave, PlaneWaveSpec};
use emdirac_core::{EMField, FieldGrid1D, PhysParams};
use num_complex::Complex64;

use crate::config::{RunConfig, UnitsMode};
use crate::report::{RunReport, SuiteReport};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Algebra,
    FieldMap,
    PlaneWaves,
    MassiveEm,
    Evolution,
    Nonlinear,
    BornInfeld,
    All,
}

impl Suite {
    pub const NAMES: &'static [&'static str] = &[
        "algebra",
        "field-map",
        "plane-waves",
        "massive-em",
        "evolution",
        "nonlinear",
        "born-infeld",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "algebra" => Ok(Suite::Algebra),
            "field-map" => Ok(Suite::FieldMap),
            "plane-waves" => Ok(Suite::PlaneWaves),
            "massive-em" => Ok(Suite::MassiveEm),
            "evolution" => Ok(Suite::Evolution),
            "nonlinear" => Ok(Suite::Nonlinear),
            "born-infeld" => Ok(Suite::BornInfeld),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}', expected one of: {}",
                Suite::NAMES.join(", ")
            )),
        }
    }
}

/// Shared state handed to every suite.
pub struct SuiteCtx<'a> {
    pub cfg: &'a RunConfig,
    pub ph: PhysParams,
}

impl<'a> SuiteCtx<'a> {
    pub fn new(cfg: &'a RunConfig) -> Self {
        Self {
            cfg,
            ph: cfg.units.params(),
        }
    }

    /// Deterministic per-check stream: the run seed mixed with the check id.
    pub fn rng(&self, check_id: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ fnv1a(check_id))
    }

    pub fn tol(&self, check_id: &str, default: f64) -> f64 {
        self.cfg
            .tolerances
            .get(check_id)
            .copied()
            .unwrap_or(default)
    }

    /// Zero in natural units where printed values are bit-exact; a roundoff
    /// allowance when explicit constants enter every product.
    pub fn table_tol(&self) -> f64 {
        match self.cfg.units {
            UnitsMode::Natural => 0.0,
            UnitsMode::Gaussian => 1e-12,
        }
    }

    pub fn grid_sizes(&self) -> &[usize] {
        &self.cfg.grid_sizes
    }
}

pub fn fnv1a(s: &str) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Successive refinement orders `log2(e_i / e_{i+1})`.
pub fn orders(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}

pub fn orders_in(errors: &[f64], want: f64, slack: f64) -> bool {
    !errors.iter().any(|e| !e.is_finite())
        && orders(errors).iter().all(|o| (o - want).abs() <= slack)
}

/// Uniform real y-transverse field with components in [-3, 3).
pub fn random_mapped_field(rng: &mut ChaCha8Rng) -> EMField {
    EMField::from_real(
        [
            rng.random_range(-3.0..3.0),
            0.0,
            rng.random_range(-3.0..3.0),
        ],
        [
            rng.random_range(-3.0..3.0),
            0.0,
            rng.random_range(-3.0..3.0),
        ],
    )
}

/// Uniform real field with all six components active.
pub fn random_full_field(rng: &mut ChaCha8Rng) -> EMField {
    EMField::from_real(
        [
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        ],
        [
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        ],
    )
}

pub fn random_spinor(rng: &mut ChaCha8Rng) -> Bispinor {
    let mut c = [Complex64::ZERO; 4];
    for z in &mut c {
        *z = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    }
    Bispinor::new(c)
}

/// Right-moving vacuum wave `E_x = cos(k(y - ct))`, `H_z = -E_x` on a unit
/// box; identical numbers in every unit system because the box length is
/// dimensionally free for massless fields.
pub fn vacuum_grid(ph: &PhysParams, n: usize, t: f64) -> FieldGrid1D {
    let k = 2.0 * std::f64::consts::PI;
    FieldGrid1D::from_fn(n, 1.0, t, |y| {
        let phase = k * (y - ph.c * t);
        fields_to_bispinor(&EMField::from_real(
            [phase.cos(), 0.0, 0.0],
            [0.0, 0.0, -phase.cos()],
        ))
    })
    .expect("valid grid")
}

/// Box of one reduced Compton circumference: mode number m carries momentum
/// `m * mass * c`.
pub fn massive_box(ph: &PhysParams) -> f64 {
    2.0 * std::f64::consts::PI * ph.compton_length()
}

/// Both positive-energy polarizations superposed at mode 2, so all four
/// field components are active in the current-carrying system.
pub fn massive_wave_specs(ph: &PhysParams) -> (PlaneWaveSpec, PlaneWaveSpec) {
    let p_y = 2.0 * ph.mass * ph.c;
    let s1 =
        PlaneWaveSpec::consistent(1, [0.0, p_y, 0.0], ph.mass, 0.0, ph).expect("consistent spec");
    let s2 =
        PlaneWaveSpec::consistent(2, [0.0, p_y, 0.0], ph.mass, 0.0, ph).expect("consistent spec");
    (s1, s2)
}

pub fn massive_wave_grid(ph: &PhysParams, n: usize, t: f64) -> FieldGrid1D {
    let (s1, s2) = massive_wave_specs(ph);
    FieldGrid1D::from_fn(n, massive_box(ph), t, |y| {
        plane_wave(&s1, ph, y, t)
            .expect("valid spec")
            .add(&plane_wave(&s2, ph, y, t).expect("valid spec"))
    })
    .expect("valid grid")
}

/// Dimensionless normalizer for current-system residual rows: rows scale as
/// `(energy / hbar c) * amplitude`.
pub fn massive_row_scale(ph: &PhysParams) -> f64 {
    let (s1, _) = massive_wave_specs(ph);
    s1.energy / (ph.hbar * ph.c)
}

pub fn run_suites(cfg: &RunConfig, suite: Suite) -> RunReport {
    let ctx = SuiteCtx::new(cfg);
    let mut report = RunReport::new(cfg.seed, cfg.units.label(), cfg.fixed_clock);
    let list: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Algebra,
            Suite::FieldMap,
            Suite::PlaneWaves,
            Suite::MassiveEm,
            Suite::Evolution,
            Suite::Nonlinear,
            Suite::BornInfeld,
        ],
        one => vec![one],
    };
    for s in list {
        report.suites.push(dispatch(&ctx, s));
    }
    report
}

fn dispatch(ctx: &SuiteCtx, suite: Suite) -> SuiteReport {
    match suite {
        Suite::Algebra => algebra::run(ctx),
        Suite::FieldMap => field_map::run(ctx),
        Suite::PlaneWaves => plane_waves::run(ctx),
        Suite::MassiveEm => massive_em::run(ctx),
        Suite::Evolution => evolution::run(ctx),
        Suite::Nonlinear => nonlinear::run(ctx),
        Suite::BornInfeld => born_infeld::run(ctx),
        Suite::All => unreachable!("expanded by run_suites"),
    }
}
