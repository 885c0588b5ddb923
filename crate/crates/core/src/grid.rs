//! Periodic uniform grid and cell-averaged fields.
//!
//! The whole line is truncated to a periodic box of length `L` with the
//! solution compactly supported in the middle half; the mass leaking toward
//! the boundary is monitored by [`Field::boundary_mass_fraction`].

use crate::error::{Error, Result};

/// Uniform periodic grid with a power-of-two cell count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralGrid {
    n: usize,
    length: f64,
}

impl SpectralGrid {
    pub fn new(n: usize, length: f64) -> Result<Self> {
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid {
                detail: format!("cell count must be a power of two >= 8, got {n}"),
            });
        }
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::InvalidGrid {
                detail: format!("box length must be positive, got {length}"),
            });
        }
        Ok(Self { n, length })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn dx(&self) -> f64 {
        self.length / self.n as f64
    }

    /// Center of cell `j`; the box is `[-L/2, L/2)`.
    pub fn center(&self, j: usize) -> f64 {
        -0.5 * self.length + (j as f64 + 0.5) * self.dx()
    }

    /// Left edge of cell `j`.
    pub fn left_edge(&self, j: usize) -> f64 {
        -0.5 * self.length + j as f64 * self.dx()
    }

    /// Index of the cell containing `x`, with periodic wrapping.
    pub fn cell_of(&self, x: f64) -> usize {
        let l = self.length;
        let mut y = (x + 0.5 * l) / l;
        y -= y.floor();
        let j = (y * self.n as f64) as usize;
        j.min(self.n - 1)
    }

    /// Signed integer wavenumber of FFT bin `j` (Nyquist mapped to -n/2).
    pub fn wavenumber(&self, j: usize) -> i64 {
        if j <= self.n / 2 - 1 {
            j as i64
        } else {
            j as i64 - self.n as i64
        }
    }
}

/// Cell-averaged scalar state on a [`SpectralGrid`] at a fixed time.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    values: Vec<f64>,
    grid: SpectralGrid,
    time: f64,
}

impl Field {
    pub fn new(grid: SpectralGrid, values: Vec<f64>, time: f64) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::GridMismatch {
                expected: grid.n(),
                got: values.len(),
            });
        }
        Ok(Self { values, grid, time })
    }

    pub fn zeros(grid: SpectralGrid) -> Self {
        Self {
            values: vec![0.0; grid.n()],
            grid,
            time: 0.0,
        }
    }

    pub fn constant(grid: SpectralGrid, c: f64) -> Self {
        Self {
            values: vec![c; grid.n()],
            grid,
            time: 0.0,
        }
    }

    /// Sample a function at cell centers.
    pub fn from_fn(grid: SpectralGrid, f: impl Fn(f64) -> f64) -> Self {
        let values = (0..grid.n()).map(|j| f(grid.center(j))).collect();
        Self {
            values,
            grid,
            time: 0.0,
        }
    }

    pub fn grid(&self) -> SpectralGrid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn set_time(&mut self, t: f64) {
        self.time = t;
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Discrete L2 norm: sqrt(sum v_j^2 dx).
    pub fn l2_norm(&self) -> f64 {
        let dx = self.grid.dx();
        (self.values.iter().map(|v| v * v).sum::<f64>() * dx).sqrt()
    }

    pub fn l1_norm(&self) -> f64 {
        let dx = self.grid.dx();
        self.values.iter().map(|v| v.abs()).sum::<f64>() * dx
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Cyclic shift by a whole number of cells; positive `k` moves content
    /// toward larger x, i.e. returns g(x) = f(x - k dx).
    pub fn translate_cells(&self, k: isize) -> Field {
        let n = self.values.len() as isize;
        let mut out = vec![0.0; self.values.len()];
        for (j, slot) in out.iter_mut().enumerate() {
            let src = (j as isize - k).rem_euclid(n) as usize;
            *slot = self.values[src];
        }
        Field {
            values: out,
            grid: self.grid,
            time: self.time,
        }
    }

    /// Fraction of the squared mass sitting outside the middle half of the
    /// box. This is the periodic-truncation diagnostic.
    pub fn boundary_mass_fraction(&self) -> f64 {
        let quarter = 0.25 * self.grid.length();
        let mut outside = 0.0;
        let mut total = 0.0;
        for (j, v) in self.values.iter().enumerate() {
            let x = self.grid.center(j);
            let m = v * v;
            total += m;
            if x.abs() > quarter {
                outside += m;
            }
        }
        if total == 0.0 {
            0.0
        } else {
            outside / total
        }
    }

    pub fn check_bound(&self, bound: f64) -> Result<()> {
        let max_abs = self.max_abs();
        if max_abs > bound {
            return Err(Error::Blowup {
                time: self.time,
                max_abs,
            });
        }
        Ok(())
    }
}
