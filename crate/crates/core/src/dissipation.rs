//! Shock dissipation algebra.
//!
//! The dissipation functional of a tracked discontinuity,
//!
//! ```text
//! D = q(u+; ubar+) - q(u-; ubar-) - sigma(u+, u-) (eta(u+|ubar+) - eta(u-|ubar-)),
//! ```
//!
//! rewrites as a signed sum of integrals over the symmetric difference of
//! the jump intervals. Both routes are implemented and cross-checked; the
//! quantified negativity constant is estimated by sampling because no
//! closed form exists for it.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::calculus::{shock_speed_unchecked, EntropyFluxPair, ShockQuadruple};
use crate::error::Result;
use crate::quad::{adaptive_simpson, DEFAULT_ABS_TOL};
use crate::rng::stream_rng;

/// One signed interval of the symmetric-difference decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedInterval {
    pub lo: f64,
    pub hi: f64,
    /// +1 when the interval lies inside the rough jump interval, -1 otherwise.
    pub sign: f64,
}

impl SignedInterval {
    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }

    pub fn width(&self) -> f64 {
        (self.hi - self.lo).max(0.0)
    }
}

/// Symmetric difference of `(u_plus, u_minus)` and `(ubar_plus, ubar_minus)`
/// split into (at most) a left and a right piece with their signs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalDecomposition {
    pub i: SignedInterval,
    pub j: SignedInterval,
}

/// The five relative orderings of the two jump intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingCase {
    /// The open intervals do not intersect.
    Disjoint,
    /// ubar+ <= u+ <= ubar- <= u-
    ReferenceLeads,
    /// u+ <= ubar+ <= ubar- <= u-
    ReferenceInside,
    /// ubar+ <= u+ <= u- <= ubar-
    RoughInside,
    /// u+ <= ubar+ <= u- <= ubar-
    RoughLeads,
}

impl OrderingCase {
    pub fn label(&self) -> &'static str {
        match self {
            OrderingCase::Disjoint => "disjoint",
            OrderingCase::ReferenceLeads => "reference-leads",
            OrderingCase::ReferenceInside => "reference-inside",
            OrderingCase::RoughInside => "rough-inside",
            OrderingCase::RoughLeads => "rough-leads",
        }
    }
}

/// Classify the relative position of the two jump intervals.
pub fn classify(q4: &ShockQuadruple) -> OrderingCase {
    let (a, b) = (q4.u_plus, q4.u_minus);
    let (c, d) = (q4.ubar_plus, q4.ubar_minus);
    if b <= c || d <= a {
        OrderingCase::Disjoint
    } else if c <= a && b <= d {
        OrderingCase::RoughInside
    } else if a <= c && d <= b {
        OrderingCase::ReferenceInside
    } else if c <= a {
        OrderingCase::ReferenceLeads
    } else {
        OrderingCase::RoughLeads
    }
}

/// Direct evaluation of the dissipation functional with the Rankine-Hugoniot
/// speed of the rough-side states. The jump floor is not required here.
pub fn dissipation_direct(pair: &EntropyFluxPair, q4: &ShockQuadruple) -> Result<f64> {
    q4.validate_lax()?;
    for v in [q4.u_plus, q4.u_minus, q4.ubar_plus, q4.ubar_minus] {
        pair.check(v)?;
    }
    let sigma = shock_speed_unchecked(pair.flux(), q4.u_plus, q4.u_minus);
    dissipation_with_speed(pair, q4, sigma)
}

/// Same functional with an externally supplied speed (the ledger uses the
/// characteristic speed here).
pub fn dissipation_with_speed(pair: &EntropyFluxPair, q4: &ShockQuadruple, speed: f64) -> Result<f64> {
    let qp = pair.relative_entropy_flux(q4.u_plus, q4.ubar_plus)?;
    let qm = pair.relative_entropy_flux(q4.u_minus, q4.ubar_minus)?;
    let ep = pair.relative_entropy(q4.u_plus, q4.ubar_plus)?;
    let em = pair.relative_entropy(q4.u_minus, q4.ubar_minus)?;
    Ok(qp - qm - speed * (ep - em))
}

/// Split the symmetric difference of the two jump intervals into the left
/// and right pieces with their signs. Handles every ordering, including
/// empty pieces and identical intervals.
pub fn decompose_intervals(q4: &ShockQuadruple) -> IntervalDecomposition {
    let (a, b) = (q4.u_plus, q4.u_minus);
    let (c, d) = (q4.ubar_plus, q4.ubar_minus);
    if b <= c || d <= a {
        // Disjoint: the symmetric difference is both intervals, and neither
        // is contained in the other, so the rough one carries +1.
        return IntervalDecomposition {
            i: SignedInterval { lo: a, hi: b, sign: 1.0 },
            j: SignedInterval { lo: c, hi: d, sign: -1.0 },
        };
    }
    let left = SignedInterval {
        lo: a.min(c),
        hi: a.max(c),
        sign: if a < c { 1.0 } else { -1.0 },
    };
    let right = SignedInterval {
        lo: b.min(d),
        hi: b.max(d),
        sign: if d < b { 1.0 } else { -1.0 },
    };
    IntervalDecomposition { i: left, j: right }
}

/// B(I): integral over I of eta''(u) [ (A(u) - sigma u) - K ] du, where K is
/// the common value of A - sigma u at the rough states.
fn interval_term(
    pair: &EntropyFluxPair,
    interval: &SignedInterval,
    sigma: f64,
    k_level: f64,
    abs_tol: f64,
) -> Result<f64> {
    if interval.is_empty() {
        return Ok(0.0);
    }
    let flux = pair.flux().clone();
    let pair = pair.clone();
    let q = adaptive_simpson(
        |u| pair.eta_d2(u) * ((flux.eval(u) - sigma * u) - k_level),
        interval.lo,
        interval.hi,
        abs_tol,
    )?;
    Ok(q.value)
}

/// Interval form of the dissipation functional: eps(I) B(I) + eps(J) B(J).
pub fn dissipation_interval_form(pair: &EntropyFluxPair, q4: &ShockQuadruple) -> Result<f64> {
    q4.validate_lax()?;
    for v in [q4.u_plus, q4.u_minus, q4.ubar_plus, q4.ubar_minus] {
        pair.check(v)?;
    }
    let sigma = shock_speed_unchecked(pair.flux(), q4.u_plus, q4.u_minus);
    let k_level = pair.flux().eval(q4.u_plus) - sigma * q4.u_plus;
    let dec = decompose_intervals(q4);
    let bi = interval_term(pair, &dec.i, sigma, k_level, DEFAULT_ABS_TOL)?;
    let bj = interval_term(pair, &dec.j, sigma, k_level, DEFAULT_ABS_TOL)?;
    Ok(dec.i.sign * bi + dec.j.sign * bj)
}

/// The two signed terms separately, for the sign-structure checks.
pub fn signed_interval_terms(pair: &EntropyFluxPair, q4: &ShockQuadruple) -> Result<(f64, f64)> {
    q4.validate_lax()?;
    let sigma = shock_speed_unchecked(pair.flux(), q4.u_plus, q4.u_minus);
    let k_level = pair.flux().eval(q4.u_plus) - sigma * q4.u_plus;
    let dec = decompose_intervals(q4);
    let bi = interval_term(pair, &dec.i, sigma, k_level, DEFAULT_ABS_TOL)?;
    let bj = interval_term(pair, &dec.j, sigma, k_level, DEFAULT_ABS_TOL)?;
    Ok((dec.i.sign * bi, dec.j.sign * bj))
}

#[derive(Debug, Clone, Copy)]
pub struct LaxCheck {
    pub entropic: bool,
    /// q(u_R) - q(u_L) - sigma (eta(u_R) - eta(u_L)); entropic iff <= 0.
    pub margin: f64,
}

/// Entropy-dissipation margin of the shock `(u_L, u_R)`. For a strictly
/// convex pair the sign of the margin is equivalent to the Lax condition
/// `u_L >= u_R`.
pub fn lax_entropic_check(pair: &EntropyFluxPair, u_l: f64, u_r: f64) -> Result<LaxCheck> {
    pair.check(u_l)?;
    pair.check(u_r)?;
    let sigma = shock_speed_unchecked(pair.flux(), u_l, u_r);
    let margin = pair.q(u_r) - pair.q(u_l) - sigma * (pair.eta(u_r) - pair.eta(u_l));
    Ok(LaxCheck {
        entropic: margin <= 0.0,
        margin,
    })
}

/// Closed-form antiderivative of (u - u_plus)(u - u_minus) from a to b.
pub fn f_integral(u_plus: f64, u_minus: f64, a: f64, b: f64) -> f64 {
    let piece = |x: f64| {
        let d = x - u_plus;
        d * d * (d / 3.0 + (u_plus - u_minus) / 2.0)
    };
    piece(b) - piece(a)
}

/// Dissipation and its ratio to the squared trace mismatch.
///
/// Returns `(D, -D / ((u+ - ubar+)^2 + (u- - ubar-)^2))`; when the
/// denominator vanishes the ratio is `+inf` and `D` is zero.
pub fn negativity_margin(pair: &EntropyFluxPair, q4: &ShockQuadruple) -> Result<(f64, f64)> {
    q4.validate_full()?;
    let d = dissipation_direct(pair, q4)?;
    let denom = q4.denominator();
    if denom == 0.0 {
        return Ok((0.0, f64::INFINITY));
    }
    Ok((d, -d / denom))
}

/// One row of a negativity scan.
#[derive(Debug, Clone, Copy)]
pub struct ScanRow {
    pub q4: ShockQuadruple,
    pub d: f64,
    pub ratio: f64,
    pub case: OrderingCase,
}

/// Result of sampling the dissipation ratio over valid quadruples.
#[derive(Debug, Clone)]
pub struct NegativityScan {
    pub delta: f64,
    pub bound: f64,
    pub samples: usize,
    /// Estimated negativity constant: the minimum finite ratio seen.
    pub c_est: f64,
    pub worst: Option<ScanRow>,
    pub rows: Vec<ScanRow>,
}

/// Deterministic boundary configurations of the three case-sets: jump gaps
/// at 0, delta/2 and delta, trace mismatches at the delta/2 closeness
/// thresholds, and states pushed to the bound.
fn corner_quadruples(delta: f64, bound: f64) -> Vec<ShockQuadruple> {
    let mut out = Vec::new();
    let ubar_plus_grid = [-bound, -bound + 0.25 * delta, -0.5 * delta, 0.0, bound - delta];
    let gaps = [delta, 1.5 * delta, (2.0 * bound - 1e-9).min(4.0 * delta)];
    let offsets = [
        -0.5 * delta + 1e-9,
        -0.25 * delta,
        0.0,
        0.25 * delta,
        0.5 * delta - 1e-9,
    ];
    let widths = [0.0, 0.25 * delta, 0.5 * delta, delta, 2.0 * delta];
    for &cp in &ubar_plus_grid {
        for &gap in &gaps {
            let cm = cp + gap;
            if cm > bound || cp < -bound {
                continue;
            }
            for &off in &offsets {
                for &w in &widths {
                    let up = cp + off;
                    let um = up + w;
                    if up < -bound || um > bound || um < up {
                        continue;
                    }
                    out.push(ShockQuadruple {
                        u_plus: up,
                        u_minus: um,
                        ubar_plus: cp,
                        ubar_minus: cm,
                        delta,
                        bound,
                    });
                    // Mirror anchored to the right endpoint.
                    let um2 = cm + off;
                    let up2 = um2 - w;
                    if um2 <= bound && up2 >= -bound && um2 >= up2 {
                        out.push(ShockQuadruple {
                            u_plus: up2,
                            u_minus: um2,
                            ubar_plus: cp,
                            ubar_minus: cm,
                            delta,
                            bound,
                        });
                    }
                }
            }
        }
    }
    out.retain(|q| q.validate_full().is_ok());
    out
}

/// Latin-hypercube draw of `count` valid quadruples, sharded by `stream`.
fn latin_hypercube(delta: f64, bound: f64, count: usize, seed: u64, stream: u64) -> Vec<ShockQuadruple> {
    let mut rng = stream_rng(seed, stream);
    let mut perms: Vec<Vec<usize>> = (0..4)
        .map(|_| {
            let mut p: Vec<usize> = (0..count).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect();
    let jitter: Vec<[f64; 4]> = (0..count)
        .map(|_| [rng.gen(), rng.gen(), rng.gen(), rng.gen()])
        .collect();
    let unit = |perm: &Vec<usize>, i: usize, j: f64| (perm[i] as f64 + j) / count as f64;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let c1 = unit(&perms[0], i, jitter[i][0]);
        let c2 = unit(&perms[1], i, jitter[i][1]);
        let c3 = unit(&perms[2], i, jitter[i][2]);
        let c4 = unit(&perms[3], i, jitter[i][3]);
        let ubar_plus = -bound + c1 * (2.0 * bound - delta);
        let ubar_minus = (ubar_plus + delta) + c2 * (bound - ubar_plus - delta);
        let u_plus = -bound + c3 * 2.0 * bound;
        let u_minus = u_plus + c4 * (bound - u_plus);
        let q4 = ShockQuadruple {
            u_plus,
            u_minus,
            ubar_plus,
            ubar_minus,
            delta,
            bound,
        };
        if q4.validate_full().is_ok() {
            out.push(q4);
        }
    }
    perms.clear();
    out
}

/// Scan the negativity ratio over `count` Latin-hypercube samples plus the
/// deterministic corner set. `keep_rows` controls whether every row is
/// retained (for CSV export) or only the extremes.
pub fn sample_negativity(
    pair: &EntropyFluxPair,
    delta: f64,
    bound: f64,
    count: usize,
    seed: u64,
    keep_rows: bool,
) -> Result<NegativityScan> {
    let shards = 8usize;
    let per_shard = count.div_ceil(shards);
    let mut quadruples: Vec<ShockQuadruple> = (0..shards)
        .into_par_iter()
        .map(|s| latin_hypercube(delta, bound, per_shard, seed, s as u64))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    quadruples.extend(corner_quadruples(delta, bound));

    let rows: Vec<ScanRow> = quadruples
        .par_iter()
        .map(|q4| {
            let (d, ratio) = negativity_margin(pair, q4)?;
            Ok(ScanRow {
                q4: *q4,
                d,
                ratio,
                case: classify(q4),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut c_est = f64::INFINITY;
    let mut worst = None;
    for row in &rows {
        if row.ratio.is_finite() && row.ratio < c_est {
            c_est = row.ratio;
            worst = Some(*row);
        }
    }
    Ok(NegativityScan {
        delta,
        bound,
        samples: rows.len(),
        c_est,
        worst,
        rows: if keep_rows { rows } else { Vec::new() },
    })
}

/// Random quadruples satisfying only the Lax-side orderings (no jump floor),
/// for the oracle-equivalence sweeps.
pub fn sample_lax_quadruples(bound: f64, count: usize, seed: u64) -> Vec<ShockQuadruple> {
    let mut rng = stream_rng(seed, 101);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut draw = || -bound + 2.0 * bound * rng.gen::<f64>();
        let (a, b) = (draw(), draw());
        let (c, d) = (draw(), draw());
        let q4 = ShockQuadruple {
            u_plus: a.min(b),
            u_minus: a.max(b),
            ubar_plus: c.min(d),
            ubar_minus: c.max(d),
            delta: 0.0,
            bound,
        };
        if q4.validate_lax().is_ok() {
            out.push(q4);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn burgers() -> EntropyFluxPair {
        EntropyFluxPair::burgers_quadratic(8.0)
    }

    fn q4(up: f64, um: f64, cp: f64, cm: f64) -> ShockQuadruple {
        ShockQuadruple {
            u_plus: up,
            u_minus: um,
            ubar_plus: cp,
            ubar_minus: cm,
            delta: 0.0,
            bound: 8.0,
        }
    }

    #[test]
    fn matched_traces_dissipate_nothing() {
        let pair = burgers();
        let q = q4(0.0, 1.0, 0.0, 1.0);
        assert_abs_diff_eq!(dissipation_direct(&pair, &q).unwrap(), 0.0, epsilon = 1e-15);
        let degenerate = q4(0.5, 0.5, 0.25, 0.25);
        assert_abs_diff_eq!(
            dissipation_direct(&pair, &degenerate).unwrap(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn decomposition_of_the_reference_inside_case() {
        // (u+, u-) = (0, 1), (ubar+, ubar-) = (-1, 2): both pieces outside
        // the rough interval, signs -1.
        let d = decompose_intervals(&q4(0.0, 1.0, -1.0, 2.0));
        assert_eq!(d.i, SignedInterval { lo: -1.0, hi: 0.0, sign: -1.0 });
        assert_eq!(d.j, SignedInterval { lo: 1.0, hi: 2.0, sign: -1.0 });
    }

    #[test]
    fn decomposition_of_the_rough_outside_case() {
        let d = decompose_intervals(&q4(-1.0, 2.0, 0.0, 1.0));
        assert_eq!(d.i, SignedInterval { lo: -1.0, hi: 0.0, sign: 1.0 });
        assert_eq!(d.j, SignedInterval { lo: 1.0, hi: 2.0, sign: 1.0 });
    }

    #[test]
    fn identical_intervals_decompose_to_nothing() {
        let d = decompose_intervals(&q4(0.0, 1.0, 0.0, 1.0));
        assert!(d.i.is_empty());
        assert!(d.j.is_empty());
    }

    #[test]
    fn interval_form_matches_direct_on_the_worked_case() {
        let pair = burgers();
        let q = q4(0.0, 1.0, -1.0, 2.0);
        let direct = dissipation_direct(&pair, &q).unwrap();
        let interval = dissipation_interval_form(&pair, &q).unwrap();
        assert_relative_eq!(direct, interval, epsilon = 1e-10);
    }

    #[test]
    fn empty_decomposition_gives_zero_interval_form() {
        let pair = burgers();
        let q = q4(0.3, 1.4, 0.3, 1.4);
        assert_abs_diff_eq!(
            dissipation_interval_form(&pair, &q).unwrap(),
            0.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn lax_check_burgers_worked_values() {
        let pair = burgers();
        let e = lax_entropic_check(&pair, 1.0, -1.0).unwrap();
        assert!(e.entropic);
        // sigma = 0: margin = q(-1) - q(1) = -2/3.
        assert_relative_eq!(e.margin, -2.0 / 3.0, epsilon = 1e-14);
        let ne = lax_entropic_check(&pair, -1.0, 1.0).unwrap();
        assert!(!ne.entropic);
        assert_relative_eq!(ne.margin, 2.0 / 3.0, epsilon = 1e-14);
        let boundary = lax_entropic_check(&pair, 0.4, 0.4).unwrap();
        assert_abs_diff_eq!(boundary.margin, 0.0);
    }

    #[test]
    fn f_integral_worked_value_and_degenerate_interval() {
        assert_relative_eq!(f_integral(0.0, 1.0, 0.0, 1.0), -1.0 / 6.0, epsilon = 1e-15);
        assert_eq!(f_integral(0.3, 0.9, 0.5, 0.5), 0.0);
    }

    #[test]
    fn f_integral_is_symmetric_between_expansions() {
        // Second closed form expanded around u_minus instead of u_plus.
        let alt = |up: f64, um: f64, a: f64, b: f64| {
            let piece = |x: f64| {
                let d = x - um;
                d * d * (d / 3.0 + (um - up) / 2.0)
            };
            piece(b) - piece(a)
        };
        for (up, um, a, b) in [(0.0, 1.0, -0.5, 2.0), (-1.3, 0.7, 0.0, 0.5), (2.0, 2.0, -1.0, 1.0)] {
            assert_relative_eq!(f_integral(up, um, a, b), alt(up, um, a, b), epsilon = 1e-12);
        }
    }

    #[test]
    fn f_integral_matches_quadrature() {
        for (up, um, a, b) in [(0.0, 1.0, 0.0, 1.0), (-2.0, 3.0, -1.0, 4.0)] {
            let q = adaptive_simpson(|u| (u - up) * (u - um), a, b, 1e-12).unwrap();
            assert_abs_diff_eq!(f_integral(up, um, a, b), q.value, epsilon = 1e-10);
        }
    }

    #[test]
    fn negativity_margin_boundary_case() {
        let pair = burgers();
        let q = ShockQuadruple::new(0.0, 1.5, 0.0, 1.5, 1.0, 4.0).unwrap();
        let (d, ratio) = negativity_margin(&pair, &q).unwrap();
        assert_eq!(d, 0.0);
        assert!(ratio.is_infinite());
    }

    #[test]
    fn reference_leads_case_obeys_the_f_bound() {
        // u+ <= ubar+ <= ubar- <= u- : D <= (max A''/2)(inf eta'') (F(u+, ubar+) + F(ubar-, u-)).
        // For the Burgers/quadratic pair both constants are exactly 1/2 and 1.
        let pair = burgers();
        let q = ShockQuadruple::new(-0.4, 1.6, 0.0, 1.2, 1.0, 4.0).unwrap();
        let d = dissipation_direct(&pair, &q).unwrap();
        let bound = 0.5
            * (f_integral(q.u_plus, q.u_minus, q.u_plus, q.ubar_plus)
                + f_integral(q.u_plus, q.u_minus, q.ubar_minus, q.u_minus));
        assert!(d <= bound + 1e-12, "d = {d}, bound = {bound}");
        // Burgers/quadratic attains the bound exactly.
        assert_relative_eq!(d, bound, epsilon = 1e-10);
    }

    #[test]
    fn scan_finds_a_positive_constant() {
        let pair = burgers();
        let scan = sample_negativity(&pair, 1.0, 4.0, 2000, 7, false).unwrap();
        assert!(scan.c_est > 0.0, "c_est = {}", scan.c_est);
        assert!(scan.samples >= 2000);
    }

    #[test]
    fn close_traces_never_produce_the_disjoint_case() {
        // With the jump floor and both closeness conditions, the disjoint
        // ordering is geometrically impossible.
        let delta = 1.0;
        for q in corner_quadruples(delta, 4.0) {
            let sep = q.u_minus - q.u_plus >= 0.5 * delta;
            let close_plus = (q.u_plus - q.ubar_plus).abs() < 0.5 * delta;
            let close_minus = (q.u_minus - q.ubar_minus).abs() < 0.5 * delta;
            if sep && close_plus && close_minus {
                assert_ne!(classify(&q), OrderingCase::Disjoint, "{q:?}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn interval_form_agrees_with_direct(seed in 0u64..10_000) {
            let pair = burgers();
            let q = sample_lax_quadruples(4.0, 1, seed)[0];
            let direct = dissipation_direct(&pair, &q).unwrap();
            let interval = dissipation_interval_form(&pair, &q).unwrap();
            let rel = (direct - interval).abs() / (direct.abs() + 1e-14);
            prop_assert!(rel < 1e-8, "direct {direct} vs interval {interval}");
        }

        #[test]
        fn signed_terms_are_nonpositive(seed in 0u64..10_000) {
            let pair = burgers();
            let q = sample_lax_quadruples(4.0, 1, seed)[0];
            let (ti, tj) = signed_interval_terms(&pair, &q).unwrap();
            prop_assert!(ti <= 1e-12);
            prop_assert!(tj <= 1e-12);
        }

        #[test]
        fn decomposition_is_a_partition(seed in 0u64..10_000) {
            let q = sample_lax_quadruples(4.0, 1, seed)[0];
            let d = decompose_intervals(&q);
            // The pieces are disjoint and their widths add up to the width
            // of the symmetric difference.
            prop_assert!(d.i.hi <= d.j.lo + 1e-15 || d.i.is_empty() || d.j.is_empty());
            let rough = q.u_minus - q.u_plus;
            let reference = q.ubar_minus - q.ubar_plus;
            let overlap = (q.u_minus.min(q.ubar_minus) - q.u_plus.max(q.ubar_plus)).max(0.0);
            let sym_diff = rough + reference - 2.0 * overlap;
            prop_assert!((d.i.width() + d.j.width() - sym_diff).abs() < 1e-12);
        }

        #[test]
        fn lax_equivalence_on_random_pairs(ul in -4.0f64..4.0, ur in -4.0f64..4.0) {
            let pair = burgers();
            let check = lax_entropic_check(&pair, ul, ur).unwrap();
            if check.margin.abs() > 1e-12 {
                prop_assert_eq!(check.entropic, ul >= ur);
            }
        }
    }
}
