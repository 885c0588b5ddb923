//! The nonlocal source operator, chiefly the Hilbert transform.
//!
//! On the periodic box the Hilbert transform is exact as a Fourier
//! multiplier: bin k is multiplied by -i sgn(k). The k = 0 bin (where the
//! symbol is undefined) and the unpaired Nyquist bin are annihilated, so the
//! output is real and mean-free. FFT normalization is forward-unnormalized,
//! inverse divided by n, which pins golden outputs bit-for-bit.

use std::cell::RefCell;
use std::sync::Arc;

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::grid::{Field, SpectralGrid};

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// The source term G of the balance law.
#[derive(Clone)]
pub enum SourceOperator {
    /// G = 0: the plain conservation law.
    Zero,
    /// G = H, the Hilbert transform. An L2 isometry, not bounded on L-inf.
    Hilbert,
    /// A pointwise map u -> g(u) with a known Lipschitz constant. Bounded on
    /// L-inf, and trivially translation invariant.
    BoundedCustom { map: ScalarFn, lipschitz: f64 },
}

impl std::fmt::Debug for SourceOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SourceOperator::Zero => write!(f, "SourceOperator::Zero"),
            SourceOperator::Hilbert => write!(f, "SourceOperator::Hilbert"),
            SourceOperator::BoundedCustom { lipschitz, .. } => {
                write!(f, "SourceOperator::BoundedCustom(lip={lipschitz})")
            }
        }
    }
}

impl SourceOperator {
    /// Pointwise sine source, the stock bounded-custom example.
    pub fn pointwise_sin() -> Self {
        SourceOperator::BoundedCustom {
            map: Arc::new(f64::sin),
            lipschitz: 1.0,
        }
    }

    /// Lipschitz constant of G on L2.
    pub fn lipschitz_bound(&self) -> f64 {
        match self {
            SourceOperator::Zero => 0.0,
            SourceOperator::Hilbert => 1.0,
            SourceOperator::BoundedCustom { lipschitz, .. } => *lipschitz,
        }
    }

    /// Whether G maps L-inf into L-inf.
    pub fn linf_bounded(&self) -> bool {
        !matches!(self, SourceOperator::Hilbert)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SourceOperator::Zero)
    }
}

fn fft_roundtrip(values: &[f64], multiplier: impl Fn(i64) -> Complex<f64>) -> Vec<f64> {
    let n = values.len();
    let mut buf: Vec<Complex<f64>> = values.iter().map(|&v| Complex::new(v, 0.0)).collect();
    PLANNER.with(|p| {
        let mut planner = p.borrow_mut();
        let fwd = planner.plan_fft_forward(n);
        fwd.process(&mut buf);
        for (j, c) in buf.iter_mut().enumerate() {
            let k = if j <= n / 2 - 1 { j as i64 } else { j as i64 - n as i64 };
            *c *= multiplier(k);
        }
        let inv = planner.plan_fft_inverse(n);
        inv.process(&mut buf);
    });
    let scale = 1.0 / n as f64;
    buf.into_iter().map(|c| c.re * scale).collect()
}

/// Hilbert transform of a field via the -i sgn(k) multiplier.
///
/// The mean is annihilated and the output's L2 norm equals the norm of the
/// mean-free part of the input (up to the empty Nyquist bin on fields that
/// are band-limited below it).
pub fn hilbert_transform(grid: SpectralGrid, f: &Field) -> Result<Field> {
    if f.grid() != grid {
        return Err(Error::GridMismatch {
            expected: grid.n(),
            got: f.grid().n(),
        });
    }
    let n = grid.n() as i64;
    let values = fft_roundtrip(f.values(), |k| {
        if k == 0 || k == -n / 2 {
            Complex::new(0.0, 0.0)
        } else if k > 0 {
            Complex::new(0.0, -1.0)
        } else {
            Complex::new(0.0, 1.0)
        }
    });
    let mut out = Field::new(grid, values, f.time())?;
    out.set_time(f.time());
    Ok(out)
}

/// Evaluate G on a field.
pub fn apply_source(op: &SourceOperator, grid: SpectralGrid, f: &Field) -> Result<Field> {
    if f.grid() != grid {
        return Err(Error::GridMismatch {
            expected: grid.n(),
            got: f.grid().n(),
        });
    }
    match op {
        SourceOperator::Zero => Ok(Field::new(grid, vec![0.0; grid.n()], f.time())?),
        SourceOperator::Hilbert => hilbert_transform(grid, f),
        SourceOperator::BoundedCustom { map, .. } => {
            let values = f.values().iter().map(|&v| map(v)).collect();
            Field::new(grid, values, f.time())
        }
    }
}

/// Residual of translation equivariance: || G(tau f) - tau G(f) ||_2 for a
/// grid-aligned shift. Non-aligned shifts are rejected.
pub fn translation_equivariance_check(
    op: &SourceOperator,
    grid: SpectralGrid,
    f: &Field,
    shift: f64,
) -> Result<f64> {
    let dx = grid.dx();
    let cells = shift / dx;
    let rounded = cells.round();
    if (cells - rounded).abs() > 1e-9 {
        return Err(Error::UnalignedShift { shift, dx });
    }
    let k = rounded as isize;
    let shifted_first = apply_source(op, grid, &f.translate_cells(k))?;
    let applied_first = apply_source(op, grid, f)?.translate_cells(k);
    let diff: Vec<f64> = shifted_first
        .values()
        .iter()
        .zip(applied_first.values())
        .map(|(a, b)| a - b)
        .collect();
    Ok(Field::new(grid, diff, f.time())?.l2_norm())
}
