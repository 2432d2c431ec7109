//! Dirac matrices and the 4x4 complex matrix algebra everything else rests on.
//!
//! The five generators are `alpha_0 = 1`, the three off-diagonal `alpha_k`
//! built from Pauli blocks, and `alpha_4 = beta = diag(1, 1, -1, -1)`. All
//! entries lie in `{0, +-1, +-i}`, so products and anticommutators of the
//! generators are exact in double precision and the algebra checks can use
//! zero tolerance.
//!
//! A sixth matrix `alpha_5` is not part of the generator set; it is fixed
//! constructively by [`alpha5`] as the signed generator product that closes
//! the quartic bilinear identity used in the nonlinear module.

use std::fmt;
use std::ops::Index;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{CoreError, Result};

const C0: Complex64 = Complex64::new(0.0, 0.0);
const C1: Complex64 = Complex64::new(1.0, 0.0);
const CI: Complex64 = Complex64::new(0.0, 1.0);

/// Dense 4x4 complex matrix.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix4 {
    entries: [[Complex64; 4]; 4],
}

impl ComplexMatrix4 {
    pub fn from_rows(entries: [[Complex64; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn zero() -> Self {
        Self {
            entries: [[C0; 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = C1;
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = C0;
                for k in 0..4 {
                    acc += self.entries[i][k] * rhs.entries[k][j];
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] += rhs.entries[i][j];
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] -= rhs.entries[i][j];
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] *= s;
            }
        }
        out
    }

    /// Hermitian conjugate (conjugate transpose).
    pub fn dagger(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] = self.entries[j][i].conj();
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Bispinor) -> Bispinor {
        let mut out = [C0; 4];
        for i in 0..4 {
            let mut acc = C0;
            for j in 0..4 {
                acc += self.entries[i][j] * v.0[j];
            }
            out[i] = acc;
        }
        Bispinor(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.sub(rhs).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.dagger()) <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.dagger().mul(self).max_abs_diff(&Self::identity()) <= tol
    }

    /// Row-major flattening used for a deterministic total order on matrices.
    fn lex_key(&self) -> [(f64, f64); 16] {
        let mut key = [(0.0, 0.0); 16];
        for i in 0..4 {
            for j in 0..4 {
                key[i * 4 + j] = (self.entries[i][j].re, self.entries[i][j].im);
            }
        }
        key
    }
}

impl Index<(usize, usize)> for ComplexMatrix4 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i][j]
    }
}

impl fmt::Debug for ComplexMatrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "{:?}", row)?;
        }
        Ok(())
    }
}

/// Four-component complex column vector.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Bispinor(pub [Complex64; 4]);

impl Bispinor {
    pub fn new(c: [Complex64; 4]) -> Self {
        Self(c)
    }

    pub fn zero() -> Self {
        Self([C0; 4])
    }

    /// `psi^dag psi`. Summed as (1,2)+(3,4); the field-side energy sums
    /// associate the same way, which keeps the two routes bit-identical.
    pub fn norm_sq(&self) -> f64 {
        (self.0[0].norm_sqr() + self.0[1].norm_sqr())
            + (self.0[2].norm_sqr() + self.0[3].norm_sqr())
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Hermitian inner product `self^dag other`, same (1,2)+(3,4) association
    /// as [`Bispinor::norm_sq`].
    pub fn inner(&self, other: &Self) -> Complex64 {
        (self.0[0].conj() * other.0[0] + self.0[1].conj() * other.0[1])
            + (self.0[2].conj() * other.0[2] + self.0[3].conj() * other.0[3])
    }

    /// Real bilinear `psi^dag M psi` for Hermitian `M`.
    pub fn bilinear(&self, m: &ComplexMatrix4) -> f64 {
        self.inner(&m.mul_vec(self)).re
    }

    pub fn conj(&self) -> Self {
        Self([
            self.0[0].conj(),
            self.0[1].conj(),
            self.0[2].conj(),
            self.0[3].conj(),
        ])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self([self.0[0] * s, self.0[1] * s, self.0[2] * s, self.0[3] * s])
    }

    pub fn add(&self, other: &Self) -> Self {
        Self([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
            self.0[3] + other.0[3],
        ])
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self([
            self.0[0] - other.0[0],
            self.0[1] - other.0[1],
            self.0[2] - other.0[2],
            self.0[3] - other.0[3],
        ])
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }
}

/// Which of the two conjugate operator sign patterns is meant.
///
/// `Plus` pairs `+c alpha.p` with `+beta m c^2`, `Minus` flips both signs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiracForm {
    Plus,
    Minus,
}

impl DiracForm {
    /// +1 for `Plus`, -1 for `Minus`.
    pub fn sign(self) -> f64 {
        match self {
            DiracForm::Plus => 1.0,
            DiracForm::Minus => -1.0,
        }
    }
}

fn alpha1() -> ComplexMatrix4 {
    ComplexMatrix4::from_rows([
        [C0, C0, C0, C1],
        [C0, C0, C1, C0],
        [C0, C1, C0, C0],
        [C1, C0, C0, C0],
    ])
}

fn alpha2() -> ComplexMatrix4 {
    ComplexMatrix4::from_rows([
        [C0, C0, C0, -CI],
        [C0, C0, CI, C0],
        [C0, -CI, C0, C0],
        [CI, C0, C0, C0],
    ])
}

fn alpha3() -> ComplexMatrix4 {
    ComplexMatrix4::from_rows([
        [C0, C0, C1, C0],
        [C0, C0, C0, -C1],
        [C1, C0, C0, C0],
        [C0, -C1, C0, C0],
    ])
}

fn alpha4() -> ComplexMatrix4 {
    ComplexMatrix4::from_rows([
        [C1, C0, C0, C0],
        [C0, C1, C0, C0],
        [C0, C0, -C1, C0],
        [C0, C0, C0, -C1],
    ])
}

/// The matrix `alpha_index`.
///
/// Index 0 is the identity, 1..=3 the vector matrices, 4 is `beta`, and 5 is
/// the constructed matrix from [`alpha5`]. Anything else is an error.
pub fn dirac_alpha(index: usize) -> Result<ComplexMatrix4> {
    match index {
        0 => Ok(ComplexMatrix4::identity()),
        1 => Ok(alpha1()),
        2 => Ok(alpha2()),
        3 => Ok(alpha3()),
        4 => Ok(alpha4()),
        5 => Ok(alpha5().matrix),
        _ => Err(CoreError::InvalidAlphaIndex(index)),
    }
}

/// `AB + BA`.
pub fn anticommutator(a: &ComplexMatrix4, b: &ComplexMatrix4) -> ComplexMatrix4 {
    a.mul(b).add(&b.mul(a))
}

/// `v1 alpha_1 + v2 alpha_2 + v3 alpha_3`. Its square is `|v|^2` times the
/// identity, which is the anticommutation relation in vector form.
pub fn alpha_dot(v: [f64; 3]) -> ComplexMatrix4 {
    let mut out = ComplexMatrix4::zero();
    for (k, alpha) in [alpha1(), alpha2(), alpha3()].iter().enumerate() {
        out = out.add(&alpha.scale(Complex64::new(v[k], 0.0)));
    }
    out
}

/// The point-operator `energy*alpha_0 +- c alpha.p +- beta m c^2` with both
/// signs tied to `form`.
pub fn dirac_operator(
    energy: f64,
    momentum: [f64; 3],
    mass: f64,
    c: f64,
    form: DiracForm,
) -> ComplexMatrix4 {
    let s = form.sign();
    ComplexMatrix4::identity()
        .scale(Complex64::new(energy, 0.0))
        .add(&alpha_dot(momentum).scale(Complex64::new(s * c, 0.0)))
        .add(&alpha4().scale(Complex64::new(s * mass * c * c, 0.0)))
}

/// How the `alpha_5` search settled on its matrix.
#[derive(Clone, Debug)]
pub struct AlphaFiveChoice {
    pub matrix: ComplexMatrix4,
    /// Sign in front of the generator product.
    pub sign: f64,
    /// Generator factors in ascending index order, e.g. `a1*a2*a3*a4`.
    pub product: String,
    /// Number of signed candidates that passed all filters (the matrix and
    /// its negative both close the identity).
    pub candidates_found: usize,
}

/// Deterministic 64-bit mixer for the search's random spinors.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn next_unit(&mut self) -> f64 {
        // 53 uniform bits in [0, 1)
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn next_symmetric(&mut self) -> f64 {
        2.0 * self.next_unit() - 1.0
    }

    fn next_bispinor(&mut self) -> Bispinor {
        let mut c = [C0; 4];
        for z in &mut c {
            *z = Complex64::new(self.next_symmetric(), self.next_symmetric());
        }
        Bispinor(c)
    }
}

/// Quartic bilinear gap `(psi^dag psi)^2 - sum_k (psi^dag alpha_k psi)^2
/// - (psi^dag beta psi)^2 - (psi^dag M psi)^2` for a candidate `M`.
fn quartic_identity_gap(psi: &Bispinor, candidate: &ComplexMatrix4) -> f64 {
    let s = psi.norm_sq();
    let v1 = psi.bilinear(&alpha1());
    let v2 = psi.bilinear(&alpha2());
    let v3 = psi.bilinear(&alpha3());
    let b = psi.bilinear(&alpha4());
    let m = psi.bilinear(candidate);
    let lhs = s * s - (v1 * v1 + v2 * v2 + v3 * v3);
    let rhs = b * b + m * m;
    (lhs - rhs).abs()
}

fn find_alpha5() -> AlphaFiveChoice {
    let generators = [alpha1(), alpha2(), alpha3(), alpha4()];
    let names = ["a1", "a2", "a3", "a4"];
    let mut rng = SplitMix64(0x00c0_ffee_d1ac_0001);
    let spinors: Vec<Bispinor> = (0..1000).map(|_| rng.next_bispinor()).collect();

    let mut passing: Vec<(ComplexMatrix4, f64, String)> = Vec::new();
    for mask in 0u32..16 {
        let mut product = ComplexMatrix4::identity();
        let mut label_parts = Vec::new();
        for bit in 0..4 {
            if mask & (1 << bit) != 0 {
                product = product.mul(&generators[bit]);
                label_parts.push(names[bit]);
            }
        }
        let label = if label_parts.is_empty() {
            "1".to_string()
        } else {
            label_parts.join("*")
        };
        for sign in [1.0f64, -1.0] {
            let m = product.scale(Complex64::new(sign, 0.0));
            if !m.is_hermitian(0.0) {
                continue;
            }
            if m.mul(&m).max_abs_diff(&ComplexMatrix4::identity()) != 0.0 {
                continue;
            }
            let worst = spinors
                .iter()
                .map(|psi| {
                    let scale = psi.norm_sq().powi(2).max(f64::MIN_POSITIVE);
                    quartic_identity_gap(psi, &m) / scale
                })
                .fold(0.0, f64::max);
            if worst <= 1e-12 {
                passing.push((m, sign, label.clone()));
            }
        }
    }

    assert!(
        !passing.is_empty(),
        "no signed generator product closes the quartic bilinear identity"
    );
    // Deterministic pick: smallest row-major (re, im) key.
    passing.sort_by(|a, b| {
        a.0.lex_key()
            .partial_cmp(&b.0.lex_key())
            .expect("matrix entries are finite")
    });
    let count = passing.len();
    let (matrix, sign, product) = passing.into_iter().next().unwrap();
    AlphaFiveChoice {
        matrix,
        sign,
        product,
        candidates_found: count,
    }
}

/// The constructed `alpha_5`, cached after the first search.
pub fn alpha5() -> &'static AlphaFiveChoice {
    static CELL: OnceLock<AlphaFiveChoice> = OnceLock::new();
    CELL.get_or_init(find_alpha5)
}
