//! Flux/entropy pairs and the pointwise relative quantities built on them.
//!
//! Everything downstream (shock dissipation, the solver, the stability
//! ledger) evaluates through this module, so derivatives are supplied
//! analytically for each built-in pair. A finite-difference cross-check
//! exists for validation only; it never backs a production evaluation.

use std::sync::Arc;

use crate::error::{Error, Result};

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Identity checks between analytic routes are held to this tolerance.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Analytic derivatives must match finite differences this closely.
pub const DERIVATIVE_TOL: f64 = 1e-6;

/// A strictly convex flux on a symmetric admissible range `[-B, B]`.
///
/// `d1` and `d2` are analytic; `validate` cross-checks them against finite
/// differences and samples the convexity requirement.
#[derive(Clone)]
pub struct ConvexFlux {
    name: &'static str,
    a: ScalarFn,
    a1: ScalarFn,
    a2: ScalarFn,
    bound: f64,
}

impl std::fmt::Debug for ConvexFlux {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ConvexFlux({}, bound={})", self.name, self.bound)
    }
}

impl ConvexFlux {
    pub fn new(
        name: &'static str,
        a: impl Fn(f64) -> f64 + Send + Sync + 'static,
        a1: impl Fn(f64) -> f64 + Send + Sync + 'static,
        a2: impl Fn(f64) -> f64 + Send + Sync + 'static,
        bound: f64,
    ) -> Self {
        assert!(bound > 0.0, "admissible range must be nonempty");
        Self {
            name,
            a: Arc::new(a),
            a1: Arc::new(a1),
            a2: Arc::new(a2),
            bound,
        }
    }

    /// A(u) = u^2 / 2.
    pub fn burgers(bound: f64) -> Self {
        Self::new("burgers", |u| 0.5 * u * u, |u| u, |_| 1.0, bound)
    }

    /// A(u) = u^4. Convex, with a degenerate (A'' = 0) point at the origin.
    pub fn quartic(bound: f64) -> Self {
        Self::new(
            "quartic",
            |u| u.powi(4),
            |u| 4.0 * u.powi(3),
            |u| 12.0 * u * u,
            bound,
        )
    }

    /// A(u) = cosh(u). Strictly convex with non-constant curvature.
    pub fn cosh(bound: f64) -> Self {
        Self::new("cosh", f64::cosh, f64::sinh, f64::cosh, bound)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn bound(&self) -> f64 {
        self.bound
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.a)(u)
    }

    pub fn d1(&self, u: f64) -> f64 {
        (self.a1)(u)
    }

    pub fn d2(&self, u: f64) -> f64 {
        (self.a2)(u)
    }

    /// Range check. Operations refuse out-of-range states instead of clamping.
    pub fn check(&self, u: f64) -> Result<()> {
        if u.is_finite() && u.abs() <= self.bound {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                value: u,
                bound: self.bound,
            })
        }
    }

    /// Min and max of A'' sampled densely over the admissible range.
    pub fn d2_range(&self, samples: usize) -> (f64, f64) {
        sample_range(|u| self.d2(u), self.bound, samples)
    }

    /// Max of |A'| sampled densely over the admissible range.
    pub fn max_abs_d1(&self, samples: usize) -> f64 {
        sample_range(|u| self.d1(u).abs(), self.bound, samples).1
    }

    /// Cross-check `d1` against centered differences of `eval` and sample
    /// strict convexity. Returns the worst derivative mismatch.
    pub fn validate(&self, samples: usize) -> Result<f64> {
        let mut worst = 0.0f64;
        let h = 1e-6 * self.bound.max(1.0);
        for i in 0..=samples {
            let u = -self.bound + 2.0 * self.bound * (i as f64) / (samples as f64);
            let fd = (self.eval(u + h) - self.eval(u - h)) / (2.0 * h);
            let scale = 1.0 + self.d1(u).abs();
            worst = worst.max((fd - self.d1(u)).abs() / scale);
            if self.d2(u) <= 0.0 {
                return Err(Error::InvalidQuadruple {
                    detail: format!("flux {} is not strictly convex at u = {u}", self.name),
                });
            }
        }
        if worst > DERIVATIVE_TOL {
            return Err(Error::InvalidQuadruple {
                detail: format!(
                    "flux {} derivative mismatch {worst:.3e} exceeds {DERIVATIVE_TOL:.1e}",
                    self.name
                ),
            });
        }
        Ok(worst)
    }
}

fn sample_range(f: impl Fn(f64) -> f64, bound: f64, samples: usize) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..=samples {
        let u = -bound + 2.0 * bound * (i as f64) / (samples as f64);
        let v = f(u);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

/// An entropy `eta` with its flux `q` satisfying the compatibility relation
/// `q' = A' eta'`, together with the underlying convex flux.
#[derive(Clone)]
pub struct EntropyFluxPair {
    flux: ConvexFlux,
    name: &'static str,
    eta: ScalarFn,
    eta1: ScalarFn,
    eta2: ScalarFn,
    qf: ScalarFn,
}

impl std::fmt::Debug for EntropyFluxPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "EntropyFluxPair({}, bound={})", self.name, self.flux.bound())
    }
}

impl EntropyFluxPair {
    pub fn new(
        flux: ConvexFlux,
        name: &'static str,
        eta: impl Fn(f64) -> f64 + Send + Sync + 'static,
        eta1: impl Fn(f64) -> f64 + Send + Sync + 'static,
        eta2: impl Fn(f64) -> f64 + Send + Sync + 'static,
        qf: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            flux,
            name,
            eta: Arc::new(eta),
            eta1: Arc::new(eta1),
            eta2: Arc::new(eta2),
            qf: Arc::new(qf),
        }
    }

    /// Burgers flux with the quadratic entropy: A = u^2/2, eta = u^2/2, q = u^3/3.
    pub fn burgers_quadratic(bound: f64) -> Self {
        Self::new(
            ConvexFlux::burgers(bound),
            "burgers/quadratic",
            |u| 0.5 * u * u,
            |u| u,
            |_| 1.0,
            |u| u * u * u / 3.0,
        )
    }

    /// Quartic flux with the quartic entropy: A = u^4, eta = u^4, q = 16 u^7 / 7.
    ///
    /// Both A'' and eta'' vanish at the origin, so this pair exercises the
    /// identity-based algebra but not the strict-convexity constants.
    pub fn quartic(bound: f64) -> Self {
        Self::new(
            ConvexFlux::quartic(bound),
            "quartic/quartic",
            |u| u.powi(4),
            |u| 4.0 * u.powi(3),
            |u| 12.0 * u * u,
            |u| 16.0 * u.powi(7) / 7.0,
        )
    }

    /// Burgers flux with the quartic entropy: q' = u * 4u^3, so q = 4 u^5 / 5.
    pub fn burgers_quartic(bound: f64) -> Self {
        Self::new(
            ConvexFlux::burgers(bound),
            "burgers/quartic",
            |u| u.powi(4),
            |u| 4.0 * u.powi(3),
            |u| 12.0 * u * u,
            |u| 4.0 * u.powi(5) / 5.0,
        )
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn flux(&self) -> &ConvexFlux {
        &self.flux
    }

    pub fn bound(&self) -> f64 {
        self.flux.bound()
    }

    pub fn eta(&self, u: f64) -> f64 {
        (self.eta)(u)
    }

    pub fn eta_d1(&self, u: f64) -> f64 {
        (self.eta1)(u)
    }

    pub fn eta_d2(&self, u: f64) -> f64 {
        (self.eta2)(u)
    }

    pub fn q(&self, u: f64) -> f64 {
        (self.qf)(u)
    }

    pub fn check(&self, u: f64) -> Result<()> {
        self.flux.check(u)
    }

    /// Min and max of eta'' sampled densely over the admissible range.
    pub fn eta_d2_range(&self, samples: usize) -> (f64, f64) {
        sample_range(|u| self.eta_d2(u), self.bound(), samples)
    }

    /// eta(u) - eta(v) - eta'(v) (u - v). Nonnegative, zero only at u = v.
    pub fn relative_entropy(&self, u: f64, v: f64) -> Result<f64> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.eta(u) - self.eta(v) - self.eta_d1(v) * (u - v))
    }

    /// q(u) - q(v) - eta'(v) (A(u) - A(v)).
    pub fn relative_entropy_flux(&self, u: f64, v: f64) -> Result<f64> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.q(u) - self.q(v) - self.eta_d1(v) * (self.flux.eval(u) - self.flux.eval(v)))
    }

    /// A(u) - A(v) - A'(v) (u - v). Nonnegative by convexity of A.
    pub fn relative_flux(&self, u: f64, v: f64) -> Result<f64> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.flux.eval(u) - self.flux.eval(v) - self.flux.d1(v) * (u - v))
    }

    /// eta'(u) - eta'(v) - eta''(v) (u - v). Identically zero for quadratic eta.
    pub fn relative_entropy_d1(&self, u: f64, v: f64) -> Result<f64> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.eta_d1(u) - self.eta_d1(v) - self.eta_d2(v) * (u - v))
    }

    /// Check `q' = A' eta'` and the analytic derivatives of eta against
    /// finite differences; sample strict convexity of eta.
    pub fn validate(&self, samples: usize) -> Result<f64> {
        let worst_flux = self.flux.validate(samples)?;
        let b = self.bound();
        let h = 1e-6 * b.max(1.0);
        let mut worst = worst_flux;
        for i in 0..=samples {
            let u = -b + 2.0 * b * (i as f64) / (samples as f64);
            let q_fd = (self.q(u + h) - self.q(u - h)) / (2.0 * h);
            let compat = self.flux.d1(u) * self.eta_d1(u);
            let scale = 1.0 + compat.abs();
            worst = worst.max((q_fd - compat).abs() / scale);
            let eta_fd = (self.eta(u + h) - self.eta(u - h)) / (2.0 * h);
            worst = worst.max((eta_fd - self.eta_d1(u)).abs() / (1.0 + self.eta_d1(u).abs()));
            if self.eta_d2(u) < 0.0 {
                return Err(Error::InvalidQuadruple {
                    detail: format!("entropy of {} is concave at u = {u}", self.name),
                });
            }
        }
        if worst > DERIVATIVE_TOL {
            return Err(Error::InvalidQuadruple {
                detail: format!(
                    "pair {} compatibility mismatch {worst:.3e} exceeds {DERIVATIVE_TOL:.1e}",
                    self.name
                ),
            });
        }
        Ok(worst)
    }
}

/// Rankine-Hugoniot speed: divided difference of A, extended by A' on the
/// diagonal. Exactly symmetric in its two arguments.
pub fn shock_speed(flux: &ConvexFlux, v: f64, w: f64) -> Result<f64> {
    flux.check(v)?;
    flux.check(w)?;
    Ok(shock_speed_unchecked(flux, v, w))
}

pub(crate) fn shock_speed_unchecked(flux: &ConvexFlux, v: f64, w: f64) -> f64 {
    if v == w {
        flux.d1(v)
    } else {
        (flux.eval(v) - flux.eval(w)) / (v - w)
    }
}

/// Partial derivative of the shock speed in its first slot, with the
/// diagonal value A''(v)/2.
pub fn shock_speed_d1(flux: &ConvexFlux, v: f64, w: f64) -> Result<f64> {
    flux.check(v)?;
    flux.check(w)?;
    if v == w {
        Ok(0.5 * flux.d2(v))
    } else {
        let sigma = shock_speed_unchecked(flux, v, w);
        Ok((flux.d1(v) - sigma) / (v - w))
    }
}

/// Supremum of |d sigma / d v| over the admissible square, by dense sampling
/// (including the diagonal, where the value is A''/2).
pub fn sigma_slope_sup(flux: &ConvexFlux, samples: usize) -> f64 {
    let b = flux.bound();
    let mut sup = 0.0f64;
    for i in 0..=samples {
        let v = -b + 2.0 * b * (i as f64) / (samples as f64);
        sup = sup.max(0.5 * flux.d2(v).abs());
        for j in 0..=samples {
            let w = -b + 2.0 * b * (j as f64) / (samples as f64);
            if v != w {
                let sigma = shock_speed_unchecked(flux, v, w);
                sup = sup.max(((flux.d1(v) - sigma) / (v - w)).abs());
            }
        }
    }
    sup
}

/// One finite-difference ladder rung for the smoothness check below.
#[derive(Debug, Clone, Copy)]
pub struct SigmaSlopeEstimate {
    pub step: f64,
    /// Forward difference in the first slot, second slot on the diagonal.
    pub forward: f64,
    /// Centered difference in the first slot, second slot on the diagonal.
    pub centered: f64,
    /// Forward difference in the first slot with the second slot offset
    /// below the diagonal (skew approach).
    pub skew: f64,
}

#[derive(Debug, Clone)]
pub struct SigmaC1Report {
    pub base_point: f64,
    pub target: f64,
    pub estimates: Vec<SigmaSlopeEstimate>,
    /// Fitted log-log convergence order per estimator (forward, centered,
    /// skew). `None` when the errors sit at rounding level throughout.
    pub observed_orders: [Option<f64>; 3],
    /// Theoretical orders of the three estimators.
    pub theoretical_orders: [f64; 3],
    pub pass: bool,
}

/// Finite-difference probes of `d sigma / d v` approaching the diagonal at
/// `x0` from several directions; all must converge to A''(x0)/2.
pub fn sigma_c1_check(flux: &ConvexFlux, x0: f64, steps: &[f64]) -> Result<SigmaC1Report> {
    flux.check(x0)?;
    let target = 0.5 * flux.d2(x0);
    let sig = |v: f64, w: f64| shock_speed_unchecked(flux, v, w);

    let mut estimates = Vec::with_capacity(steps.len());
    for &h in steps {
        estimates.push(SigmaSlopeEstimate {
            step: h,
            forward: (sig(x0 + h, x0) - sig(x0, x0)) / h,
            centered: (sig(x0 + h, x0) - sig(x0 - h, x0)) / (2.0 * h),
            skew: (sig(x0 + h, x0 - h) - sig(x0, x0 - h)) / h,
        });
    }

    let theoretical = [1.0, 2.0, 1.0];
    let mut orders = [None; 3];
    let mut pass = true;
    for (k, pick) in [
        (0usize, (|e: &SigmaSlopeEstimate| e.forward) as fn(&SigmaSlopeEstimate) -> f64),
        (1, |e: &SigmaSlopeEstimate| e.centered),
        (2, |e: &SigmaSlopeEstimate| e.skew),
    ] {
        let errs: Vec<(f64, f64)> = estimates
            .iter()
            .map(|e| (e.step, (pick(e) - target).abs()))
            .collect();
        if errs.iter().all(|&(_, e)| e < 1e-13 * (1.0 + target.abs())) {
            // Exact to rounding (e.g. quadratic flux: sigma is affine in
            // each slot, so every difference quotient hits the target).
            orders[k] = None;
            continue;
        }
        let fit: Vec<(f64, f64)> = errs
            .iter()
            .filter(|&&(_, e)| e > 1e-14)
            .map(|&(h, e)| (h.ln(), e.ln()))
            .collect();
        if fit.len() < 2 {
            pass = false;
            continue;
        }
        let slope = least_squares_slope(&fit);
        orders[k] = Some(slope);
        let converging = errs.first().unwrap().1 >= errs.last().unwrap().1;
        if slope < 0.9 * theoretical[k] || !converging {
            pass = false;
        }
    }

    Ok(SigmaC1Report {
        base_point: x0,
        target,
        estimates,
        observed_orders: orders,
        theoretical_orders: theoretical,
        pass,
    })
}

pub(crate) fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// The four states around a tracked discontinuity: rough-solution traces
/// `(u_plus, u_minus)` and reference traces `(ubar_plus, ubar_minus)`,
/// together with the jump floor `delta` and the state bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShockQuadruple {
    pub u_plus: f64,
    pub u_minus: f64,
    pub ubar_plus: f64,
    pub ubar_minus: f64,
    pub delta: f64,
    pub bound: f64,
}

impl ShockQuadruple {
    pub fn new(
        u_plus: f64,
        u_minus: f64,
        ubar_plus: f64,
        ubar_minus: f64,
        delta: f64,
        bound: f64,
    ) -> Result<Self> {
        let q = Self {
            u_plus,
            u_minus,
            ubar_plus,
            ubar_minus,
            delta,
            bound,
        };
        q.validate_full()?;
        Ok(q)
    }

    /// Ordering and boundedness only; the jump floor on the reference side is
    /// relaxed to `ubar_minus >= ubar_plus`.
    pub fn validate_lax(&self) -> Result<()> {
        if self.u_minus < self.u_plus {
            return Err(Error::InvalidQuadruple {
                detail: format!(
                    "rough side violates u_minus >= u_plus: {} < {}",
                    self.u_minus, self.u_plus
                ),
            });
        }
        if self.ubar_minus < self.ubar_plus {
            return Err(Error::InvalidQuadruple {
                detail: format!(
                    "reference side violates ubar_minus >= ubar_plus: {} < {}",
                    self.ubar_minus, self.ubar_plus
                ),
            });
        }
        for v in [self.u_plus, self.u_minus, self.ubar_plus, self.ubar_minus] {
            if !v.is_finite() || v.abs() > self.bound {
                return Err(Error::OutOfRange {
                    value: v,
                    bound: self.bound,
                });
            }
        }
        Ok(())
    }

    /// Full validity: Lax ordering, boundedness and the strict jump floor.
    pub fn validate_full(&self) -> Result<()> {
        self.validate_lax()?;
        if !(self.delta > 0.0) {
            return Err(Error::InvalidQuadruple {
                detail: format!("jump floor must be positive, got {}", self.delta),
            });
        }
        if self.ubar_minus - self.ubar_plus < self.delta {
            return Err(Error::InvalidQuadruple {
                detail: format!(
                    "reference jump {} below floor {}",
                    self.ubar_minus - self.ubar_plus,
                    self.delta
                ),
            });
        }
        Ok(())
    }

    pub fn denominator(&self) -> f64 {
        (self.u_plus - self.ubar_plus).powi(2) + (self.u_minus - self.ubar_minus).powi(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn relative_entropy_quadratic_matches_half_square() {
        let pair = EntropyFluxPair::burgers_quadratic(8.0);
        assert_abs_diff_eq!(pair.relative_entropy(3.0, 1.0).unwrap(), 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(pair.relative_entropy(0.7, 0.7).unwrap(), 0.0);
    }

    #[test]
    fn relative_entropy_quartic_direct_evaluation() {
        // eta = u^4: eta(1) - eta(0) - eta'(0)(1 - 0) = 1.
        let pair = EntropyFluxPair::burgers_quartic(8.0);
        assert_abs_diff_eq!(pair.relative_entropy(1.0, 0.0).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn relative_entropy_flux_burgers_values() {
        let pair = EntropyFluxPair::burgers_quadratic(8.0);
        // q = u^3/3: q(1) - q(0) - eta'(0)(A(1) - A(0)) = 1/3.
        assert_relative_eq!(
            pair.relative_entropy_flux(1.0, 0.0).unwrap(),
            1.0 / 3.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(pair.relative_entropy_flux(0.7, 0.7).unwrap(), 0.0);
        // q(0) - q(1) - eta'(1)(A(0) - A(1)) = -1/3 + 1/2 = 1/6.
        assert_relative_eq!(
            pair.relative_entropy_flux(0.0, 1.0).unwrap(),
            1.0 / 6.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn relative_flux_burgers_is_half_square() {
        let pair = EntropyFluxPair::burgers_quadratic(8.0);
        assert_abs_diff_eq!(pair.relative_flux(2.0, 0.0).unwrap(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn relative_entropy_d1_vanishes_for_quadratic() {
        let pair = EntropyFluxPair::burgers_quadratic(8.0);
        for (u, v) in [(1.0, -2.0), (0.3, 0.9), (-4.0, 4.0)] {
            assert_abs_diff_eq!(pair.relative_entropy_d1(u, v).unwrap(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn relative_entropy_d1_quartic_matches_symbolic() {
        let pair = EntropyFluxPair::burgers_quartic(8.0);
        // eta' = 4u^3: 4(1) - 4(0.5)^3 - 12(0.5)^2 (0.5) = 4 - 0.5 - 1.5 = 2.
        assert_relative_eq!(
            pair.relative_entropy_d1(1.0, 0.5).unwrap(),
            2.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn out_of_range_is_an_error() {
        let pair = EntropyFluxPair::burgers_quadratic(2.0);
        assert!(matches!(
            pair.relative_entropy(3.0, 0.0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            pair.relative_flux(0.0, -2.5),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn shock_speed_burgers_is_arithmetic_mean() {
        let flux = ConvexFlux::burgers(8.0);
        assert_abs_diff_eq!(shock_speed(&flux, 0.0, 2.0).unwrap(), 1.0);
        assert_abs_diff_eq!(shock_speed(&flux, 1.3, 1.3).unwrap(), 1.3);
    }

    #[test]
    fn shock_speed_quartic_odd_symmetry() {
        let flux = ConvexFlux::quartic(8.0);
        assert_abs_diff_eq!(shock_speed(&flux, 1.0, -1.0).unwrap(), 0.0);
    }

    #[test]
    fn sigma_c1_burgers_hits_half() {
        let flux = ConvexFlux::burgers(8.0);
        let report = sigma_c1_check(&flux, 0.0, &[1e-2, 1e-3, 1e-4, 1e-5]).unwrap();
        assert_abs_diff_eq!(report.target, 0.5);
        assert!(report.pass);
        // Quadratic flux: sigma is affine in each slot, every probe is exact.
        assert!(report.observed_orders.iter().all(Option::is_none));
    }

    #[test]
    fn sigma_c1_quartic_converges_to_six() {
        let flux = ConvexFlux::quartic(8.0);
        let report = sigma_c1_check(&flux, 1.0, &[1e-2, 1e-3, 1e-4, 1e-5]).unwrap();
        assert_abs_diff_eq!(report.target, 6.0);
        assert!(report.pass, "orders: {:?}", report.observed_orders);
    }

    #[test]
    fn pair_validation_accepts_builtins() {
        EntropyFluxPair::burgers_quadratic(8.0).validate(200).unwrap();
        EntropyFluxPair::burgers_quartic(8.0).validate(200).unwrap();
        ConvexFlux::cosh(8.0).validate(200).unwrap();
    }

    #[test]
    fn quartic_flux_degenerates_at_origin() {
        // The quartic flux is convex but not strictly so at u = 0; the
        // validator reports that honestly.
        assert!(ConvexFlux::quartic(8.0).validate(200).is_err());
    }

    #[test]
    fn quadruple_invariants_enforced() {
        assert!(ShockQuadruple::new(0.0, 1.0, -1.0, 2.0, 1.0, 4.0).is_ok());
        // Lax violation on the rough side.
        assert!(ShockQuadruple::new(1.0, 0.0, -1.0, 2.0, 1.0, 4.0).is_err());
        // Jump floor violation.
        assert!(ShockQuadruple::new(0.0, 1.0, 0.0, 0.5, 1.0, 4.0).is_err());
        // Bound violation.
        assert!(ShockQuadruple::new(0.0, 5.0, -1.0, 2.0, 1.0, 4.0).is_err());
    }

    proptest! {
        #[test]
        fn relative_entropy_is_comparable_to_l2(u in -7.9f64..7.9, v in -7.9f64..7.9) {
            let pair = EntropyFluxPair::burgers_quadratic(8.0);
            let (lo, hi) = pair.eta_d2_range(64);
            let e = pair.relative_entropy(u, v).unwrap();
            let d2 = (u - v) * (u - v);
            prop_assert!(e >= 0.5 * lo * d2 - 1e-12);
            prop_assert!(e <= 0.5 * hi * d2 + 1e-12);
        }

        #[test]
        fn relative_flux_is_pinched_by_curvature(u in -7.9f64..7.9, v in -7.9f64..7.9) {
            let pair = EntropyFluxPair::burgers_quartic(8.0);
            let (m, big_m) = pair.flux().d2_range(256);
            let z = pair.relative_flux(u, v).unwrap();
            let d2 = (u - v) * (u - v);
            prop_assert!(z >= 0.5 * m * d2 - 1e-10);
            prop_assert!(z <= 0.5 * big_m * d2 + 1e-10 * (1.0 + d2 * d2));
        }

        #[test]
        fn shock_speed_is_exactly_symmetric(v in -8.0f64..8.0, w in -8.0f64..8.0) {
            let flux = ConvexFlux::cosh(8.0);
            let a = shock_speed(&flux, v, w).unwrap();
            let b = shock_speed(&flux, w, v).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn relative_entropy_positive_definite(u in -7.9f64..7.9, v in -7.9f64..7.9) {
            let pair = EntropyFluxPair::burgers_quadratic(8.0);
            let e = pair.relative_entropy(u, v).unwrap();
            if u == v {
                prop_assert_eq!(e, 0.0);
            } else {
                prop_assert!(e > 0.0);
            }
        }
    }
}
