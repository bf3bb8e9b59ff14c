//! Scalar root finding, scalar maximization, damped fixed-point iteration
//! and finite differences.
//!
//! These are the workhorses of the entry solver and of the verification
//! oracle. All routines are deterministic and allocate at most the state
//! vector of the iteration.

use crate::error::{Error, Result};

/// Inverse golden ratio, `(sqrt(5) - 1) / 2`.
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Finds a root of `f` on `[lo, hi]` by bisection.
///
/// `f(lo)` and `f(hi)` must have opposite signs (or one of them be zero).
/// Stops when the bracket is narrower than `abs_tol`.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, abs_tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo.signum() == f_hi.signum() {
        return Err(Error::InvalidArgument(format!(
            "bisection needs a sign change on [{lo}, {hi}] (f = {f_lo}, {f_hi})"
        )));
    }
    // 200 halvings exhaust f64 resolution on any finite bracket.
    for _ in 0..200 {
        if hi - lo <= abs_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Result of a scalar maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Scalar maximizer: bracket by step doubling from a starting guess, then
/// golden-section refinement.
///
/// Non-finite objective values are treated as `-inf`, so objectives may
/// signal infeasible trial points by returning `NaN`.
#[derive(Debug, Clone, Copy)]
pub struct Maximizer {
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// Final bracket width.
    pub tol: f64,
    pub max_doublings: usize,
    pub max_iterations: usize,
}

impl Default for Maximizer {
    fn default() -> Self {
        Self {
            lower: None,
            upper: None,
            tol: 1e-10,
            max_doublings: 80,
            max_iterations: 400,
        }
    }
}

impl Maximizer {
    pub fn bounded_below(lower: f64) -> Self {
        Self {
            lower: Some(lower),
            ..Self::default()
        }
    }

    pub fn bounded_above(upper: f64) -> Self {
        Self {
            upper: Some(upper),
            ..Self::default()
        }
    }

    fn clamp(&self, x: f64) -> f64 {
        let x = self.lower.map_or(x, |lo| x.max(lo));
        self.upper.map_or(x, |hi| x.min(hi))
    }

    /// Maximizes `f` starting from `x0` with an initial step `step`.
    ///
    /// The returned point is the best one evaluated, so its value is never
    /// below `f(x0)`.
    pub fn maximize<F>(&self, mut f: F, x0: f64, step: f64) -> Result<Maximum>
    where
        F: FnMut(f64) -> f64,
    {
        let mut evaluations = 0usize;
        let mut best = (f64::NAN, f64::NEG_INFINITY);
        let mut eval = |x: f64, best: &mut (f64, f64)| {
            evaluations += 1;
            let v = f(x);
            let v = if v.is_finite() { v } else { f64::NEG_INFINITY };
            if v > best.1 || best.0.is_nan() {
                *best = (x, v);
            }
            v
        };

        let x0 = self.clamp(x0);
        let step = step.abs().max(f64::EPSILON * x0.abs().max(1.0));
        let f0 = eval(x0, &mut best);

        let up = self.clamp(x0 + step);
        let f_up = if up != x0 {
            eval(up, &mut best)
        } else {
            f64::NEG_INFINITY
        };
        let (mut lo, mut hi);
        if f_up > f0 {
            (lo, hi) = self.expand(&mut eval, &mut best, x0, up, f_up, step, 1.0)?;
        } else {
            let down = self.clamp(x0 - step);
            let f_down = if down != x0 {
                eval(down, &mut best)
            } else {
                f64::NEG_INFINITY
            };
            if f_down > f0 {
                (hi, lo) = self.expand(&mut eval, &mut best, x0, down, f_down, step, -1.0)?;
            } else {
                lo = down;
                hi = up;
            }
        }
        if !(f0.is_finite() || best.1.is_finite()) {
            return Err(Error::InvalidArgument(
                "objective is not finite anywhere in the initial bracket".into(),
            ));
        }

        // Golden-section refinement on [lo, hi].
        let mut x1 = hi - INV_PHI * (hi - lo);
        let mut x2 = lo + INV_PHI * (hi - lo);
        let mut f1 = eval(x1, &mut best);
        let mut f2 = eval(x2, &mut best);
        let mut iterations = 0;
        while hi - lo > self.tol && iterations < self.max_iterations {
            iterations += 1;
            if f1 < f2 {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + INV_PHI * (hi - lo);
                f2 = eval(x2, &mut best);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - INV_PHI * (hi - lo);
                f1 = eval(x1, &mut best);
            }
        }
        Ok(Maximum {
            x: best.0,
            value: best.1,
            evaluations,
        })
    }

    /// Walks from `inner` through `outer` in direction `dir`, doubling the
    /// step, until the objective decreases. Returns `(behind, ahead)`
    /// endpoints of a bracket around the maximum, ordered along `dir`.
    #[allow(clippy::too_many_arguments)]
    fn expand<E>(
        &self,
        eval: &mut E,
        best: &mut (f64, f64),
        inner: f64,
        outer: f64,
        f_outer: f64,
        step: f64,
        dir: f64,
    ) -> Result<(f64, f64)>
    where
        E: FnMut(f64, &mut (f64, f64)) -> f64,
    {
        let (mut behind, mut current, mut f_current) = (inner, outer, f_outer);
        let mut h = step;
        for _ in 0..self.max_doublings {
            h *= 2.0;
            let next = self.clamp(current + dir * h);
            if next == current {
                // Pinned against a bound.
                return Ok((behind, current));
            }
            let f_next = eval(next, best);
            if f_next < f_current {
                return Ok((behind, next));
            }
            behind = current;
            current = next;
            f_current = f_next;
        }
        Err(Error::Unbounded("scalar maximization"))
    }
}

/// Outcome of [`damped_fixed_point`].
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPoint {
    pub x: Vec<f64>,
    pub iterations: usize,
    pub last_change: f64,
}

/// Iterates `x <- (1 - damping) x + damping G(x)` until the largest
/// component change falls below `tol`.
///
/// `map` writes `G(x)` into its second argument.
pub fn damped_fixed_point<G>(
    mut map: G,
    x0: Vec<f64>,
    damping: f64,
    max_iterations: usize,
    tol: f64,
    solver: &'static str,
) -> Result<FixedPoint>
where
    G: FnMut(&[f64], &mut [f64]) -> Result<()>,
{
    let mut x = x0;
    let mut image = vec![0.0; x.len()];
    let mut last_change = f64::INFINITY;
    for iteration in 1..=max_iterations {
        map(&x, &mut image)?;
        last_change = 0.0f64;
        for (xi, gi) in x.iter_mut().zip(&image) {
            let next = (1.0 - damping) * *xi + damping * gi;
            last_change = last_change.max((next - *xi).abs());
            *xi = next;
        }
        if !last_change.is_finite() {
            break;
        }
        if last_change < tol {
            return Ok(FixedPoint {
                x,
                iterations: iteration,
                last_change,
            });
        }
    }
    Err(Error::NoConvergence {
        solver,
        iterations: max_iterations,
        residual: last_change,
    })
}

/// Finite-difference step: `1e-5` relative with an absolute floor of `1e-8`.
pub fn fd_step(x: f64) -> f64 {
    (1e-5 * x.abs()).max(1e-8)
}

/// Central difference of `f` at `x` using [`fd_step`].
pub fn central_difference<F>(mut f: F, x: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    let h = fd_step(x);
    (f(x + h) - f(x - h)) / (2.0 * h)
}
