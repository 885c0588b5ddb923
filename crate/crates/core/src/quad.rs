//! Adaptive Simpson quadrature.
//!
//! The integrands in this crate are smooth on each interval they are applied
//! to, so plain adaptive Simpson with Richardson extrapolation is enough. The
//! subdivision budget is capped; when the cap is hit the achieved error is
//! reported instead of silently accepting the value.

use crate::error::{Error, Result};

/// Default absolute tolerance used by the dissipation integrals.
pub const DEFAULT_ABS_TOL: f64 = 1e-10;

/// Hard cap on the number of subintervals.
pub const MAX_INTERVALS: usize = 1 << 20;

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub intervals: usize,
}

struct Segment {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Integrate `f` over `[a, b]` to absolute tolerance `abs_tol`.
///
/// Orientation is respected: `a > b` yields the negated integral.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            intervals: 0,
        });
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };

    let fa = f(lo);
    let fb = f(hi);
    let m = 0.5 * (lo + hi);
    let fm = f(m);
    let whole = simpson(lo, hi, fa, fm, fb);

    let mut stack = vec![Segment {
        a: lo,
        b: hi,
        fa,
        fm,
        fb,
        whole,
        tol: abs_tol.max(f64::MIN_POSITIVE),
    }];
    let mut value = 0.0;
    let mut err = 0.0;
    let mut intervals = 1usize;

    while let Some(seg) = stack.pop() {
        let m = 0.5 * (seg.a + seg.b);
        let lm = 0.5 * (seg.a + m);
        let rm = 0.5 * (m + seg.b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(seg.a, m, seg.fa, flm, seg.fm);
        let right = simpson(m, seg.b, seg.fm, frm, seg.fb);
        let delta = left + right - seg.whole;

        if delta.abs() <= 15.0 * seg.tol || intervals >= MAX_INTERVALS {
            value += left + right + delta / 15.0;
            err += delta.abs() / 15.0;
        } else {
            intervals += 1;
            stack.push(Segment {
                a: seg.a,
                b: m,
                fa: seg.fa,
                fm: flm,
                fb: seg.fm,
                whole: left,
                tol: 0.5 * seg.tol,
            });
            stack.push(Segment {
                a: m,
                b: seg.b,
                fa: seg.fm,
                fm: frm,
                fb: seg.fb,
                whole: right,
                tol: 0.5 * seg.tol,
            });
        }
    }

    if err > abs_tol && intervals >= MAX_INTERVALS {
        return Err(Error::Quadrature {
            value: sign * value,
            achieved: err,
            requested: abs_tol,
        });
    }
    Ok(QuadResult {
        value: sign * value,
        error_estimate: err,
        intervals,
    })
}
