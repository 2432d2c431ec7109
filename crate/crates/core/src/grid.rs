//! Uniform periodic 1-D lattice of bispinors along y.

use std::io::{self, Write};

use num_complex::Complex64;

use crate::algebra::Bispinor;
use crate::error::{CoreError, Result};

/// Bispinor samples on a periodic grid `y_j = j * dy`, `j = 0..n`, carrying
/// its own time stamp. Residual stencils need `n >= 3`; the spectral
/// evolution additionally wants `n` even and `>= 8`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldGrid1D {
    values: Vec<Bispinor>,
    dy: f64,
    time: f64,
}

impl FieldGrid1D {
    pub fn new(values: Vec<Bispinor>, dy: f64, time: f64) -> Result<Self> {
        if values.len() < 3 {
            return Err(CoreError::GridTooSmall {
                got: values.len(),
                min: 3,
            });
        }
        if !(dy > 0.0) || !dy.is_finite() {
            return Err(CoreError::InvalidGrid(format!(
                "dy = {dy} must be positive"
            )));
        }
        Ok(Self { values, dy, time })
    }

    /// Sample `f(y)` on `n` points over a periodic box of the given length.
    pub fn from_fn(n: usize, length: f64, time: f64, f: impl Fn(f64) -> Bispinor) -> Result<Self> {
        if !(length > 0.0) {
            return Err(CoreError::InvalidGrid(format!(
                "length = {length} must be positive"
            )));
        }
        let dy = length / n as f64;
        let values = (0..n).map(|j| f(j as f64 * dy)).collect();
        Self::new(values, dy, time)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn dy(&self) -> f64 {
        self.dy
    }

    pub fn length(&self) -> f64 {
        self.dy * self.values.len() as f64
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn set_time(&mut self, t: f64) {
        self.time = t;
    }

    pub fn values(&self) -> &[Bispinor] {
        &self.values
    }

    pub fn y(&self, j: usize) -> f64 {
        j as f64 * self.dy
    }

    /// Discrete norm `sum psi^dag psi * dy`.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|p| p.norm_sq()).sum::<f64>() * self.dy
    }

    /// Largest single-component modulus difference against another grid.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max)
    }

    pub fn map(&self, f: impl Fn(&Bispinor) -> Bispinor) -> Self {
        Self {
            values: self.values.iter().map(f).collect(),
            dy: self.dy,
            time: self.time,
        }
    }

    /// Check that two grids share geometry and return their time separation.
    pub fn time_step_from(&self, earlier: &Self) -> Result<f64> {
        if self.len() != earlier.len() {
            return Err(CoreError::GridMismatch(format!(
                "point counts differ: {} vs {}",
                earlier.len(),
                self.len()
            )));
        }
        if self.dy != earlier.dy {
            return Err(CoreError::GridMismatch(format!(
                "spacings differ: {} vs {}",
                earlier.dy, self.dy
            )));
        }
        let dt = self.time - earlier.time;
        if !(dt > 0.0) {
            return Err(CoreError::GridMismatch(format!(
                "time levels must be increasing, got dt = {dt}"
            )));
        }
        Ok(dt)
    }

    /// CSV dump with columns `y, re_psi1, im_psi1, ..., re_psi4, im_psi4`.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(
            w,
            "y,re_psi1,im_psi1,re_psi2,im_psi2,re_psi3,im_psi3,re_psi4,im_psi4"
        )?;
        for (j, psi) in self.values.iter().enumerate() {
            write!(w, "{}", self.y(j))?;
            for comp in &psi.0 {
                write!(w, ",{},{}", comp.re, comp.im)?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

/// Centered periodic first difference of one component column.
pub(crate) fn centered_dy(values: &[Bispinor], dy: f64, j: usize) -> Bispinor {
    let n = values.len();
    let prev = values[(j + n - 1) % n];
    let next = values[(j + 1) % n];
    next.sub(&prev).scale(Complex64::new(1.0 / (2.0 * dy), 0.0))
}

/// Centered periodic second difference.
pub(crate) fn second_dy(values: &[Bispinor], dy: f64, j: usize) -> Bispinor {
    let n = values.len();
    let prev = values[(j + n - 1) % n];
    let here = values[j];
    let next = values[(j + 1) % n];
    next.add(&prev)
        .sub(&here.scale(Complex64::new(2.0, 0.0)))
        .scale(Complex64::new(1.0 / (dy * dy), 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_tiny_grids() {
        let vals = vec![Bispinor::zero(); 2];
        assert!(matches!(
            FieldGrid1D::new(vals, 0.1, 0.0),
            Err(CoreError::GridTooSmall { got: 2, min: 3 })
        ));
    }

    #[test]
    fn rejects_bad_spacing() {
        let vals = vec![Bispinor::zero(); 8];
        assert!(FieldGrid1D::new(vals, 0.0, 0.0).is_err());
    }

    #[test]
    fn csv_has_nine_columns() {
        let g = FieldGrid1D::from_fn(4, 1.0, 0.0, |y| {
            Bispinor::new([
                Complex64::new(y, 0.0),
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO,
            ])
        })
        .unwrap();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap().split(',').count(), 9);
        assert_eq!(lines.count(), 4);
    }

    #[test]
    fn centered_difference_is_exact_on_linear_phase() {
        // d/dy of e^{iky} on the grid equals i sin(k dy)/dy times the value.
        let n = 16;
        let length = 2.0 * std::f64::consts::PI;
        let k = 2.0;
        let g = FieldGrid1D::from_fn(n, length, 0.0, |y| {
            Bispinor::new([
                Complex64::from_polar(1.0, k * y),
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO,
            ])
        })
        .unwrap();
        let sym = Complex64::new(0.0, (k * g.dy()).sin() / g.dy());
        for j in 0..n {
            let d = centered_dy(g.values(), g.dy(), j);
            let want = g.values()[j].scale(sym);
            assert!(d.max_abs_diff(&want) < 1e-13);
        }
    }
}
