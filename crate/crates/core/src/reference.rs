//! Piecewise-smooth reference solution.
//!
//! The reference has the form `ubar(x, t) = phi(x - s(t)) + w(x - s(t), t)`:
//! a fixed profile `phi` with a log-Lipschitz cusp at the origin, a smooth
//! one-sided perturbation `w` carrying the jump, and a shock path `s` driven
//! by the Rankine-Hugoniot speed of the one-sided traces.
//!
//! `ubar` is not an exact solution of the balance law; it solves it up to a
//! residual field which [`ReferenceSolution::residual_field`] measures so the
//! stability ledger can carry it as an explicit correction.

use crate::calculus::{shock_speed_unchecked, ConvexFlux};
use crate::error::{Error, Result};
use crate::grid::{Field, SpectralGrid};
use crate::source::{apply_source, SourceOperator};

const FRAC_2_PI: f64 = std::f64::consts::FRAC_2_PI;

/// Smooth even cutoff: 1 on `|x| <= 1`, 0 on `|x| >= 2`, non-increasing in
/// between. Built from the standard `exp(-1/t)` partition.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bump;

fn g(t: f64) -> f64 {
    if t > 0.0 {
        (-1.0 / t).exp()
    } else {
        0.0
    }
}

fn g_d1(t: f64) -> f64 {
    if t > 0.0 {
        (-1.0 / t).exp() / (t * t)
    } else {
        0.0
    }
}

impl Bump {
    pub fn eval(&self, x: f64) -> f64 {
        let r = x.abs();
        if r <= 1.0 {
            1.0
        } else if r >= 2.0 {
            0.0
        } else {
            let a = g(2.0 - r);
            let b = g(r - 1.0);
            a / (a + b)
        }
    }

    pub fn d1(&self, x: f64) -> f64 {
        let r = x.abs();
        if !(1.0..2.0).contains(&r) {
            return 0.0;
        }
        let a = g(2.0 - r);
        let b = g(r - 1.0);
        let da = -g_d1(2.0 - r);
        let db = g_d1(r - 1.0);
        let slope = (da * b - a * db) / ((a + b) * (a + b));
        if x >= 0.0 {
            slope
        } else {
            -slope
        }
    }
}

/// The cusp profile `(2/pi) |x| ln|x| m(x)`; continuous with value 0 at the
/// origin, compactly supported in `[-2, 2]`.
pub fn cusp(bump: &Bump, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let r = x.abs();
    if r >= 2.0 {
        return 0.0;
    }
    FRAC_2_PI * r * r.ln() * bump.eval(x)
}

/// Derivative of the cusp profile. Diverges logarithmically at the origin,
/// which callers must exclude.
pub fn cusp_d1(bump: &Bump, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::Singularity { x });
    }
    let r = x.abs();
    if r >= 2.0 {
        return Ok(0.0);
    }
    let sgn = if x > 0.0 { 1.0 } else { -1.0 };
    Ok(FRAC_2_PI * (1.0 + r.ln()) * sgn * bump.eval(x) + FRAC_2_PI * r * r.ln() * bump.d1(x))
}

/// Smooth one-sided perturbation: constant-in-x plateaus with linear drift
/// in time, cut off smoothly away from the jump. The left/right values at
/// the origin carry the whole jump of the reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SidePerturbation {
    pub left: f64,
    pub left_rate: f64,
    pub right: f64,
    pub right_rate: f64,
}

impl Default for SidePerturbation {
    fn default() -> Self {
        Self {
            left: 1.0,
            left_rate: 0.0,
            right: -1.0,
            right_rate: 0.0,
        }
    }
}

/// Cutoff for the perturbation plateaus: 1 on `|x| <= 1.5`, 0 on `|x| >= 3`.
fn side_cutoff(bump: &Bump, x: f64) -> f64 {
    bump.eval(2.0 * x / 3.0)
}

fn side_cutoff_d1(bump: &Bump, x: f64) -> f64 {
    bump.d1(2.0 * x / 3.0) * (2.0 / 3.0)
}

impl SidePerturbation {
    pub fn left_value(&self, t: f64) -> f64 {
        self.left + self.left_rate * t
    }

    pub fn right_value(&self, t: f64) -> f64 {
        self.right + self.right_rate * t
    }

    /// One-sided evaluation; the origin itself belongs to the right branch.
    pub fn eval(&self, bump: &Bump, x: f64, t: f64) -> f64 {
        if x < 0.0 {
            self.left_value(t) * side_cutoff(bump, x)
        } else {
            self.right_value(t) * side_cutoff(bump, x)
        }
    }

    pub fn d1(&self, bump: &Bump, x: f64, t: f64) -> f64 {
        if x < 0.0 {
            self.left_value(t) * side_cutoff_d1(bump, x)
        } else {
            self.right_value(t) * side_cutoff_d1(bump, x)
        }
    }

    pub fn dt(&self, bump: &Bump, x: f64) -> f64 {
        if x < 0.0 {
            self.left_rate * side_cutoff(bump, x)
        } else {
            self.right_rate * side_cutoff(bump, x)
        }
    }

    /// Jump of the reference across the shock: w(0-) - w(0+).
    pub fn jump(&self, t: f64) -> f64 {
        self.left_value(t) - self.right_value(t)
    }
}

/// One explicit fourth-order step of the shock ODE `s' = sigma(traces)`,
/// with the traces re-evaluated at every stage time.
pub fn evolve_shock(w: &SidePerturbation, flux: &ConvexFlux, t: f64, s: f64, dt: f64) -> f64 {
    let speed = |tau: f64| shock_speed_unchecked(flux, w.right_value(tau), w.left_value(tau));
    let k1 = speed(t);
    let k2 = speed(t + 0.5 * dt);
    let k3 = k2;
    let k4 = speed(t + dt);
    s + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
}

/// Densely sampled shock path on a uniform time grid.
#[derive(Debug, Clone)]
pub struct ShockPath {
    t0: f64,
    dt: f64,
    s: Vec<f64>,
}

impl ShockPath {
    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.s.len()).map(move |k| self.t0 + k as f64 * self.dt)
    }

    pub fn end_time(&self) -> f64 {
        self.t0 + (self.s.len() - 1) as f64 * self.dt
    }

    pub fn eval(&self, t: f64) -> f64 {
        if self.s.len() == 1 {
            return self.s[0];
        }
        let pos = ((t - self.t0) / self.dt).clamp(0.0, (self.s.len() - 1) as f64);
        let k = (pos.floor() as usize).min(self.s.len() - 2);
        let frac = pos - k as f64;
        self.s[k] * (1.0 - frac) + self.s[k + 1] * frac
    }
}

/// The assembled reference solution.
#[derive(Debug, Clone)]
pub struct ReferenceSolution {
    bump: Bump,
    w: SidePerturbation,
    flux: ConvexFlux,
    path: ShockPath,
    delta_floor: f64,
}

impl ReferenceSolution {
    /// Build the reference over `[0, t_end]`, advancing the shock with step
    /// `dt` and checking the jump floor at every node.
    pub fn build(
        w: SidePerturbation,
        flux: ConvexFlux,
        s0: f64,
        delta_floor: f64,
        t_end: f64,
        dt: f64,
    ) -> Result<Self> {
        assert!(dt > 0.0 && t_end >= 0.0);
        let bump = Bump;
        let steps = (t_end / dt).ceil() as usize;
        let mut s = Vec::with_capacity(steps + 1);
        s.push(s0);
        let mut cur = s0;
        for k in 0..steps {
            let t = k as f64 * dt;
            if w.jump(t) <= delta_floor {
                return Err(Error::GapViolation { time: t });
            }
            cur = evolve_shock(&w, &flux, t, cur, dt);
            s.push(cur);
        }
        if w.jump(steps as f64 * dt) <= delta_floor {
            return Err(Error::GapViolation {
                time: steps as f64 * dt,
            });
        }
        Ok(Self {
            bump,
            w,
            flux,
            path: ShockPath { t0: 0.0, dt, s },
            delta_floor,
        })
    }

    pub fn bump(&self) -> &Bump {
        &self.bump
    }

    pub fn perturbation(&self) -> &SidePerturbation {
        &self.w
    }

    pub fn flux(&self) -> &ConvexFlux {
        &self.flux
    }

    pub fn delta_floor(&self) -> f64 {
        self.delta_floor
    }

    pub fn shock_position(&self, t: f64) -> f64 {
        self.path.eval(t)
    }

    /// Exact shock speed at time `t` (Rankine-Hugoniot of the traces).
    pub fn shock_speed_at(&self, t: f64) -> f64 {
        shock_speed_unchecked(&self.flux, self.w.right_value(t), self.w.left_value(t))
    }

    /// Trace from the left of the shock: ubar(s(t)-, t) = w(0-, t).
    pub fn trace_left(&self, t: f64) -> f64 {
        self.w.left_value(t)
    }

    /// Trace from the right of the shock: ubar(s(t)+, t) = w(0+, t).
    pub fn trace_right(&self, t: f64) -> f64 {
        self.w.right_value(t)
    }

    /// Jump across the shock; the cusp contributes nothing.
    pub fn jump(&self, t: f64) -> f64 {
        self.w.jump(t)
    }

    pub fn evaluate(&self, x: f64, t: f64) -> f64 {
        let xi = x - self.shock_position(t);
        cusp(&self.bump, xi) + self.w.eval(&self.bump, xi, t)
    }

    /// Spatial derivative away from the shock.
    pub fn evaluate_d1(&self, x: f64, t: f64) -> Result<f64> {
        let xi = x - self.shock_position(t);
        Ok(cusp_d1(&self.bump, xi)? + self.w.d1(&self.bump, xi, t))
    }

    /// Cell averages of `ubar(. + shift, t)`, with the cell containing the
    /// (shifted) discontinuity split at it and each piece represented by its
    /// midpoint. Sampling a field this way and comparing it against the same
    /// sampling at the same shift reproduces zero exactly.
    pub fn cell_averages(&self, grid: SpectralGrid, shift: f64, t: f64) -> Vec<f64> {
        let s = self.shock_position(t);
        let xs = s - shift;
        let dx = grid.dx();
        let jump_cell = if xs >= -0.5 * grid.length() && xs < 0.5 * grid.length() {
            Some(grid.cell_of(xs))
        } else {
            None
        };
        (0..grid.n())
            .map(|j| {
                if jump_cell == Some(j) {
                    let xl = grid.left_edge(j);
                    let wl = xs - xl;
                    let wr = dx - wl;
                    let mut acc = 0.0;
                    if wl > 0.0 {
                        acc += wl * self.evaluate(xl + 0.5 * wl + shift, t);
                    }
                    if wr > 0.0 {
                        acc += wr * self.evaluate(xs + 0.5 * wr + shift, t);
                    }
                    acc / dx
                } else {
                    self.evaluate(grid.center(j) + shift, t)
                }
            })
            .collect()
    }

    /// Initial data of the reference as a grid field.
    pub fn initial_field(&self, grid: SpectralGrid) -> Result<Field> {
        Field::new(grid, self.cell_averages(grid, 0.0, 0.0), 0.0)
    }

    /// Squared L2 norm of the spatial slope off the shock, by midpoint
    /// sampling with the shock cell split. The log-squared singularity is
    /// integrable, so this converges under refinement.
    pub fn slope_l2_sq(&self, grid: SpectralGrid, t: f64) -> f64 {
        let s = self.shock_position(t);
        let dx = grid.dx();
        let jump_cell = if s >= -0.5 * grid.length() && s < 0.5 * grid.length() {
            Some(grid.cell_of(s))
        } else {
            None
        };
        let mut acc = 0.0;
        for j in 0..grid.n() {
            if jump_cell == Some(j) {
                let xl = grid.left_edge(j);
                let wl = s - xl;
                let wr = dx - wl;
                for (w, x) in [(wl, xl + 0.5 * wl), (wr, s + 0.5 * wr)] {
                    if w > 0.0 {
                        if let Ok(d) = self.evaluate_d1(x, t) {
                            acc += w * d * d;
                        }
                    }
                }
            } else if let Ok(d) = self.evaluate_d1(grid.center(j), t) {
                acc += dx * d * d;
            }
        }
        acc
    }

    /// Residual of the balance law along the reference:
    /// `r = (A'(ubar) - s') ubar_x + w_t - G(ubar)`, sampled at cell centers.
    pub fn residual_field(
        &self,
        grid: SpectralGrid,
        t: f64,
        src: &SourceOperator,
    ) -> Result<Field> {
        let s = self.shock_position(t);
        let sdot = self.shock_speed_at(t);
        let sampled = Field::new(grid, self.cell_averages(grid, 0.0, t), t)?;
        let g_of_ubar = apply_source(src, grid, &sampled)?;
        let mut values = Vec::with_capacity(grid.n());
        for j in 0..grid.n() {
            let mut x = grid.center(j);
            // Nudge off the exact singular point if a center lands on it.
            if (x - s).abs() < 1e-12 * grid.dx() {
                x += 1e-6 * grid.dx();
            }
            let xi = x - s;
            let slope = cusp_d1(&self.bump, xi)? + self.w.d1(&self.bump, xi, t);
            let ubar = cusp(&self.bump, xi) + self.w.eval(&self.bump, xi, t);
            let r = (self.flux.d1(ubar) - sdot) * slope + self.w.dt(&self.bump, xi)
                - g_of_ubar.values()[j];
            values.push(r);
        }
        Field::new(grid, values, t)
    }
}
