//! Numerical best-response oracle.
//!
//! Re-solves every stage of the game by direct optimization, without using
//! the closed-form equilibrium expressions, and checks that a candidate
//! symmetric point is a stage-wise best response:
//!
//! 1. CP investment: `c_m` maximizes the CP profit given everything else.
//! 2. Pricing: each ISP price solves the price-stage first-order system,
//!    anticipating CP investments; solved as a damped fixed point.
//! 3. Side payments (non-neutral): each CP's payment row maximizes its
//!    profit, with the price stage re-solved at every trial.
//! 4. ISP investment: `t_n` maximizes ISP profit with all later stages
//!    re-solved (non-neutral), or with prices held (neutral, where price and
//!    investment are chosen together).
//!
//! Profits are evaluated with [`crate::model`] on full strategy profiles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::equilibria::{equilibrium, pi_markup, reaction_ratio, EquilibriumPoint};
use crate::error::{Error, Result};
use crate::model::{cp_profit, gamma, isp_profit, pow0, MarketParams, Regime, StageProfile};
use crate::numeric::{damped_fixed_point, Maximizer, Maximum};

/// Damping of the price-stage iteration.
pub const PRICE_DAMPING: f64 = 0.5;
pub const PRICE_MAX_ITERATIONS: usize = 10_000;
/// Largest price change accepted as converged.
pub const PRICE_TOL: f64 = 1e-12;
/// Above this many ISPs the nested investment search is skipped.
pub const MAX_ISPS_FOR_INVESTMENT_CHECK: usize = 4;

/// Pass/fail thresholds of [`verify_equilibrium`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative first-order-condition residuals.
    pub foc: f64,
    /// Absolute residual of the price-sum identity.
    pub price_sum: f64,
    /// Allowed distance of the own price slope from -1.
    pub slope: f64,
    /// Allowed magnitude of cross price slopes.
    pub cross_slope: f64,
    /// Deviation gains are accepted up to `max(gain_abs, gain_rel * |profit|)`.
    pub gain_rel: f64,
    pub gain_abs: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            foc: 1e-8,
            price_sum: 1e-10,
            slope: 1e-3,
            cross_slope: 1e-6,
            gain_rel: 1e-6,
            gain_abs: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn gain_tolerance(&self, profit: f64) -> f64 {
        self.gain_abs.max(self.gain_rel * profit.abs())
    }
}

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::InvalidArgument(format!(
            "{what} has length {got}, expected {want}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Stage 4: CP investment

/// `A_m = Σ_n (a - q_m(n)) t_n^w e^{-p_n(m)/θ}`: the per-unit-investment ad
/// margin CP `m` collects across ISPs.
pub fn ad_margin(params: &MarketParams, t: &[f64], q_row: &[f64], p_col: &[f64]) -> f64 {
    t.iter()
        .zip(q_row)
        .zip(p_col)
        .map(|((t_n, q_n), p_n)| (params.a - q_n) * pow0(*t_n, params.w) * (-p_n / params.theta).exp())
        .sum()
}

/// Closed-form CP investment `((vγ/β) A_m)^{1/(1-v)}`, zero when `A_m <= 0`.
pub fn best_response_cp_investment(params: &MarketParams, gamma: f64, t: &[f64], q_row: &[f64], p_col: &[f64]) -> f64 {
    cp_investment_for_margin(params, gamma, ad_margin(params, t, q_row, p_col))
}

fn cp_investment_for_margin(params: &MarketParams, gamma: f64, margin: f64) -> f64 {
    if margin <= 0.0 {
        return 0.0;
    }
    (params.v * gamma / params.beta * margin).powf(1.0 / (1.0 - params.v))
}

/// CP investment found by maximizing the CP profit directly over `c >= 0`.
pub fn cp_investment_by_search(
    params: &MarketParams,
    gamma: f64,
    t: &[f64],
    q_row: &[f64],
    p_col: &[f64],
) -> Result<f64> {
    let margin = ad_margin(params, t, q_row, p_col);
    let profit = |c: f64| gamma * pow0(c, params.v) * margin - params.beta * (c + params.c_e);
    Ok(Maximizer::bounded_below(0.0).maximize(profit, 1.0, 0.1)?.x)
}

// ---------------------------------------------------------------------------
// Stage 3: user prices

/// Residuals `θ/(p_n + q_n) - 1 - (v/(1-v)) s_n` of the price first-order
/// conditions for one CP column, where `s_n` is ISP `n`'s share of `A_m`.
pub fn price_foc_residuals(params: &MarketParams, t: &[f64], q_row: &[f64], p_col: &[f64]) -> Vec<f64> {
    let kappa = params.v / (1.0 - params.v);
    let margin = ad_margin(params, t, q_row, p_col);
    (0..t.len())
        .map(|n| {
            let term = (params.a - q_row[n]) * pow0(t[n], params.w) * (-p_col[n] / params.theta).exp();
            params.theta / (p_col[n] + q_row[n]) - 1.0 - kappa * term / margin
        })
        .collect()
}

/// Residual of `Σ_n 1/(p_n + q_n) = (v/(1-v) + N) / θ`.
pub fn price_sum_residual(params: &MarketParams, q_row: &[f64], p_col: &[f64]) -> f64 {
    let lhs: f64 = q_row.iter().zip(p_col).map(|(q, p)| 1.0 / (p + q)).sum();
    lhs - (params.v / (1.0 - params.v) + q_row.len() as f64) / params.theta
}

/// Equilibrium prices `p_n(m)` of all ISPs for one CP, given investments and
/// that CP's side payments.
pub fn price_column(params: &MarketParams, t: &[f64], q_row: &[f64]) -> Result<Vec<f64>> {
    check_len("investment vector", t.len(), params.n)?;
    check_len("side-payment row", q_row.len(), params.n)?;
    if t.iter().any(|x| !(x.is_finite() && *x >= 0.0)) || !t.iter().any(|x| *x > 0.0) {
        return Err(Error::InvalidArgument(
            "price stage needs non-negative investments with at least one positive".into(),
        ));
    }
    let MarketParams { a, theta, v, w, .. } = *params;
    let kappa = v / (1.0 - v);
    let q_mean = q_row.iter().sum::<f64>() / q_row.len() as f64;
    let start = vec![theta * pi_markup(params.n, v) - q_mean; params.n];
    let mut terms = vec![0.0; params.n];

    let map = |p: &[f64], out: &mut [f64]| -> Result<()> {
        for n in 0..p.len() {
            terms[n] = (a - q_row[n]) * pow0(t[n], w) * (-p[n] / theta).exp();
        }
        let margin: f64 = terms.iter().sum();
        if margin.is_nan() || margin <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "price stage: ad margin {margin} is not positive"
            )));
        }
        for n in 0..p.len() {
            let denom = 1.0 + kappa * terms[n] / margin;
            if denom.is_nan() || denom <= 0.0 {
                return Err(Error::InvalidArgument("price stage: no interior price".into()));
            }
            out[n] = theta / denom - q_row[n];
        }
        Ok(())
    };
    Ok(damped_fixed_point(
        map,
        start,
        PRICE_DAMPING,
        PRICE_MAX_ITERATIONS,
        PRICE_TOL,
        "price stage",
    )?
    .x)
}

/// Price-stage equilibrium for every CP: returns the `N x M` price matrix
/// for the `M x N` side-payment matrix `q`.
pub fn price_stage_equilibrium(params: &MarketParams, t: &[f64], q: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let columns = q
        .iter()
        .map(|row| price_column(params, t, row))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..params.n)
        .map(|n| columns.iter().map(|col| col[n]).collect())
        .collect())
}

// ---------------------------------------------------------------------------
// Stage 2: side payments

/// `A_m` after the price stage has reacted to the side-payment row.
fn margin_after_pricing(params: &MarketParams, t: &[f64], q_row: &[f64]) -> Result<f64> {
    let p_col = price_column(params, t, q_row)?;
    Ok(ad_margin(params, t, q_row, &p_col))
}

/// Side-payment row maximizing one CP's profit (equivalently its ad margin
/// `A_m`, since the optimized CP profit is increasing in `A_m`), with the
/// price stage re-solved at every trial. Coordinate ascent from `q_start`.
pub fn best_response_side_payment(params: &MarketParams, t: &[f64], q_start: &[f64]) -> Result<Vec<f64>> {
    check_len("side-payment row", q_start.len(), params.n)?;
    let mut q = q_start.to_vec();
    let search = Maximizer::bounded_above(params.a);
    for _sweep in 0..25 {
        let mut largest_move = 0.0f64;
        for n in 0..q.len() {
            let x0 = q[n];
            let mut trial = q.clone();
            let best = search.maximize(
                |x| {
                    trial[n] = x;
                    margin_after_pricing(params, t, &trial).unwrap_or(f64::NAN)
                },
                x0,
                0.05 * (1.0 + x0.abs()),
            )?;
            largest_move = largest_move.max((best.x - x0).abs());
            q[n] = best.x;
        }
        if largest_move < 1e-7 * (1.0 + params.a.abs()) {
            break;
        }
    }
    Ok(q)
}

// ---------------------------------------------------------------------------
// Stage 1: ISP investment

/// Profit of ISP `n` when ISPs invest `t` and every later stage is re-solved.
///
/// Non-neutral: CPs pick side payments (numerically, starting from
/// `q_start`), ISPs then price, CPs invest. Neutral: prices stay at
/// `prices` (ISP price and investment are chosen together) and CPs invest.
pub fn isp_profit_after_investment(
    params: &MarketParams,
    m: usize,
    regime: Regime,
    t: &[f64],
    n: usize,
    downstream: Downstream,
) -> Result<f64> {
    let gamma = gamma(params, m as f64)?;
    let (q_row, p_col) = match regime {
        Regime::NonNeutral => {
            let q_row = best_response_side_payment(params, t, &vec![downstream.q_start; params.n])?;
            let p_col = price_column(params, t, &q_row)?;
            (q_row, p_col)
        }
        Regime::Neutral => (vec![0.0; params.n], vec![downstream.price; params.n]),
    };
    // All CPs face the same problem.
    let c = best_response_cp_investment(params, gamma, t, &q_row, &p_col);
    let profile = StageProfile {
        t: t.to_vec(),
        q: vec![q_row; m],
        p: p_col.iter().map(|p| vec![*p; m]).collect(),
        c: vec![c; m],
    };
    isp_profit(params, &profile, n)
}

/// Values held by the investment-stage re-solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Downstream {
    /// Neutral user price.
    pub price: f64,
    /// Starting point of the side-payment search.
    pub q_start: f64,
}

impl Downstream {
    pub fn for_point(point: &EquilibriumPoint) -> Self {
        Self {
            price: point.p,
            q_start: point.q,
        }
    }
}

/// Best response of ISP `n` in investment, other ISPs investing `t_others`.
pub fn best_response_isp_investment(
    params: &MarketParams,
    m: usize,
    regime: Regime,
    n: usize,
    t_others: &[f64],
    downstream: Downstream,
) -> Result<Maximum> {
    check_len("other ISP investments", t_others.len(), params.n.saturating_sub(1))?;
    if n >= params.n {
        return Err(Error::InvalidArgument(format!("ISP index {n} out of range")));
    }
    if t_others.iter().any(|x| x.is_nan() || *x <= 0.0) {
        return Err(Error::InvalidArgument("other ISP investments must be positive".into()));
    }
    let start = if t_others.is_empty() {
        1.0
    } else {
        t_others.iter().sum::<f64>() / t_others.len() as f64
    };
    let mut t = Vec::with_capacity(params.n);
    t.extend_from_slice(&t_others[..n]);
    t.push(start);
    t.extend_from_slice(&t_others[n..]);
    Maximizer::bounded_below(0.0).maximize(
        |x| {
            if x <= 0.0 && t_others.is_empty() {
                return 0.0;
            }
            t[n] = x;
            isp_profit_after_investment(params, m, regime, &t, n, downstream).unwrap_or(f64::NAN)
        },
        start,
        0.05 * start,
    )
}

// ---------------------------------------------------------------------------
// Verification

/// Stage values recomputed by the oracle at the candidate point.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct StageSolutions {
    /// Best-response CP investment (direct maximization).
    pub c: Option<f64>,
    /// Re-solved price-stage equilibrium price.
    pub p: Option<f64>,
    /// Best-response side payment (non-neutral).
    pub q: Option<f64>,
    /// Best-response ISP investment.
    pub t: Option<f64>,
}

/// Outcome of [`verify_point`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub regime: Regime,
    pub m: usize,
    /// Relative first-order-condition residuals (absolute for `price_sum`).
    pub foc_residuals: BTreeMap<String, f64>,
    /// Finite-difference price slopes with respect to a side payment.
    pub slopes: BTreeMap<String, f64>,
    /// Profit improvement of the best unilateral deviation, per stage.
    pub deviation_gains: BTreeMap<String, f64>,
    pub gain_tolerances: BTreeMap<String, f64>,
    pub max_deviation_gain: f64,
    pub stage_solutions: StageSolutions,
    pub stage_errors: BTreeMap<String, String>,
    pub warnings: Vec<String>,
    pub passed: bool,
}

/// Checks the closed-form equilibrium with `m` CPs.
pub fn verify_equilibrium(
    params: &MarketParams,
    m: usize,
    regime: Regime,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let point = equilibrium(params, m, regime)?;
    verify_point(params, &point, tol)
}

/// Checks an arbitrary symmetric candidate point. Stage failures are
/// recorded in the report rather than returned.
pub fn verify_point(params: &MarketParams, point: &EquilibriumPoint, tol: &Tolerances) -> Result<VerificationReport> {
    let params = params.validate()?;
    if point.m == 0 {
        return Err(Error::InvalidArgument("verification needs at least one CP".into()));
    }
    let mut report = VerificationReport {
        regime: point.regime,
        m: point.m,
        foc_residuals: BTreeMap::new(),
        slopes: BTreeMap::new(),
        deviation_gains: BTreeMap::new(),
        gain_tolerances: BTreeMap::new(),
        max_deviation_gain: 0.0,
        stage_solutions: StageSolutions::default(),
        stage_errors: BTreeMap::new(),
        warnings: Vec::new(),
        passed: false,
    };

    foc_residuals(&params, point, &mut report.foc_residuals);
    if point.regime == Regime::NonNeutral {
        match price_slopes(&params, point) {
            Ok((own, cross)) => {
                report.slopes.insert("dp_dq_own".into(), own);
                report.slopes.insert("dp_dq_cross".into(), cross);
            }
            Err(e) => {
                report.stage_errors.insert("slopes".into(), e.to_string());
            }
        }
    }

    let profile = point.profile(&params);
    let record = |report: &mut VerificationReport, stage: &str, outcome: Result<(f64, f64)>| match outcome {
        Ok((equilibrium_value, best_value)) => {
            report
                .deviation_gains
                .insert(stage.into(), (best_value - equilibrium_value).max(0.0));
            report
                .gain_tolerances
                .insert(stage.into(), tol.gain_tolerance(equilibrium_value));
        }
        Err(e) => {
            report.stage_errors.insert(stage.into(), e.to_string());
        }
    };

    let cp_stage = cp_investment_deviation(&params, &profile).map(|(c, eq, best)| {
        report.stage_solutions.c = Some(c);
        (eq, best)
    });
    record(&mut report, "cp_investment", cp_stage);

    let price_stage = price_deviation(&params, &profile).map(|(p, eq, best)| {
        report.stage_solutions.p = Some(p);
        (eq, best)
    });
    record(&mut report, "price", price_stage);

    if point.regime == Regime::NonNeutral {
        let q_stage = side_payment_deviation(&params, &profile).map(|(q, eq, best)| {
            report.stage_solutions.q = Some(q);
            (eq, best)
        });
        record(&mut report, "side_payment", q_stage);
    }

    if params.n > MAX_ISPS_FOR_INVESTMENT_CHECK {
        report.warnings.push(format!(
            "investment stage not searched: N = {} exceeds {MAX_ISPS_FOR_INVESTMENT_CHECK}",
            params.n
        ));
    } else {
        let t_stage = investment_deviation(&params, point).map(|(t, eq, best)| {
            report.stage_solutions.t = Some(t);
            (eq, best)
        });
        record(&mut report, "investment", t_stage);
    }

    report.max_deviation_gain = report.deviation_gains.values().copied().fold(0.0, f64::max);
    let focs_ok = report.foc_residuals.iter().all(|(name, r)| {
        let limit = if name == "price_sum" { tol.price_sum } else { tol.foc };
        r.abs() <= limit
    });
    let slopes_ok = report
        .slopes
        .get("dp_dq_own")
        .is_none_or(|s| (s + 1.0).abs() <= tol.slope)
        && report
            .slopes
            .get("dp_dq_cross")
            .is_none_or(|s| s.abs() <= tol.cross_slope);
    let gains_ok = report
        .deviation_gains
        .iter()
        .all(|(stage, gain)| *gain <= report.gain_tolerances[stage]);
    report.passed = focs_ok && slopes_ok && gains_ok && report.stage_errors.is_empty();
    Ok(report)
}

/// Analytic stationarity residuals of every stage at a symmetric point.
fn foc_residuals(params: &MarketParams, point: &EquilibriumPoint, out: &mut BTreeMap<String, f64>) {
    let MarketParams {
        a,
        theta,
        v,
        w,
        alpha,
        beta,
        ..
    } = *params;
    let nf = params.n_f64();
    let (mf, g, t, c, p, q) = (point.m as f64, point.gamma, point.t, point.c, point.p, point.q);
    let t_vec = vec![t; params.n];
    let q_row = vec![q; params.n];
    let p_col = vec![p; params.n];
    let margin = ad_margin(params, &t_vec, &q_row, &p_col);

    // d/dc [γ c^v A - β c] = 0
    out.insert(
        "cp_investment".into(),
        (v * g * c.powf(v - 1.0) * margin / beta - 1.0).abs(),
    );
    let price = price_foc_residuals(params, &t_vec, &q_row, &p_col)
        .into_iter()
        .fold(0.0, |acc: f64, r| acc.max(r.abs()));
    out.insert("price".into(), price);
    out.insert("price_sum".into(), price_sum_residual(params, &q_row, &p_col).abs());

    let margin_share = p + q;
    match point.regime {
        Regime::NonNeutral => {
            // Own slope -1 and zero cross slopes reduce dA/dq = 0 to 1 - (a - q)/θ = 0.
            out.insert("side_payment".into(), (1.0 - (a - q) / theta).abs());
            // (1-v) K / (M H) = (w / t)(1 - R)
            let e = v / (1.0 - v);
            let k_unscaled = alpha / g * (theta * e * v * g / beta).powf(-e);
            let h = t.powf(w / (1.0 - v))
                * margin_share.powf(1.0 / (1.0 - v))
                * (-p / (theta * (1.0 - v))).exp()
                * (theta - margin_share).powf(-e);
            let r = reaction_ratio(params.n, v);
            out.insert(
                "investment".into(),
                ((1.0 - v) * k_unscaled * t / (mf * h * w * (1.0 - r)) - 1.0).abs(),
            );
        }
        Regime::Neutral => {
            // Prices held: revenue elasticity in own t is w (1 + (v/(1-v)) / N).
            let revenue = mf * margin_share * g * c.powf(v) * t.powf(w) * (-p / theta).exp();
            let elasticity = w * (1.0 + v / ((1.0 - v) * nf));
            out.insert("investment".into(), (revenue * elasticity / (t * alpha) - 1.0).abs());
        }
    }
}

/// Central-difference slopes of CP 0's price column with respect to its
/// side payment to ISP 0: `(dp_0/dq_0, max_{n != 0} |dp_n/dq_0|)`.
fn price_slopes(params: &MarketParams, point: &EquilibriumPoint) -> Result<(f64, f64)> {
    let t = vec![point.t; params.n];
    let h = 1e-5 * point.q.abs().max(params.theta);
    let solve = |shift: f64| {
        let mut q_row = vec![point.q; params.n];
        q_row[0] += shift;
        price_column(params, &t, &q_row)
    };
    let (up, down) = (solve(h)?, solve(-h)?);
    let own = (up[0] - down[0]) / (2.0 * h);
    let cross = (1..params.n)
        .map(|n| ((up[n] - down[n]) / (2.0 * h)).abs())
        .fold(0.0, f64::max);
    Ok((own, cross))
}

/// `(best c, profit at the point, best profit)` for CP 0.
fn cp_investment_deviation(params: &MarketParams, profile: &StageProfile) -> Result<(f64, f64, f64)> {
    let equilibrium_value = cp_profit(params, profile, 0)?;
    let mut trial = profile.clone();
    let best = Maximizer::bounded_below(0.0).maximize(
        |c| {
            trial.c[0] = c;
            cp_profit(params, &trial, 0).unwrap_or(f64::NAN)
        },
        profile.c[0],
        0.05 * profile.c[0].max(1e-3),
    )?;
    Ok((best.x, equilibrium_value, best.value))
}

fn column(profile: &StageProfile, m: usize) -> Vec<f64> {
    profile.p.iter().map(|row| row[m]).collect()
}

/// `(re-solved price, ISP 0 profit at the point, best profit)`: ISP 0 moves
/// its price for CP 0, CP 0 re-optimizes its investment.
fn price_deviation(params: &MarketParams, profile: &StageProfile) -> Result<(f64, f64, f64)> {
    let gamma = gamma(params, profile.num_cps() as f64)?;
    let solved = price_column(params, &profile.t, &profile.q[0])?;
    let equilibrium_value = isp_profit(params, profile, 0)?;
    let mut trial = profile.clone();
    let p0 = profile.p[0][0];
    let best = Maximizer::default().maximize(
        |p| {
            trial.p[0][0] = p;
            trial.c[0] = best_response_cp_investment(params, gamma, &trial.t, &trial.q[0], &column(&trial, 0));
            isp_profit(params, &trial, 0).unwrap_or(f64::NAN)
        },
        p0,
        0.05 * params.theta,
    )?;
    Ok((solved[0], equilibrium_value, best.value))
}

/// `(mean best side payment, CP 0 profit at the point, best profit)`: CP 0
/// moves its payment row, prices of column 0 and its investment react.
fn side_payment_deviation(params: &MarketParams, profile: &StageProfile) -> Result<(f64, f64, f64)> {
    let gamma = gamma(params, profile.num_cps() as f64)?;
    let value = |q_row: &[f64]| -> Result<f64> {
        let p_col = price_column(params, &profile.t, q_row)?;
        let mut trial = profile.clone();
        trial.q[0] = q_row.to_vec();
        for (n, p) in p_col.iter().enumerate() {
            trial.p[n][0] = *p;
        }
        trial.c[0] = best_response_cp_investment(params, gamma, &trial.t, q_row, &p_col);
        cp_profit(params, &trial, 0)
    };
    let equilibrium_value = value(&profile.q[0])?;
    let best_q = best_response_side_payment(params, &profile.t, &profile.q[0])?;
    let best_value = value(&best_q)?.max(equilibrium_value);
    let mean = best_q.iter().sum::<f64>() / best_q.len() as f64;
    Ok((mean, equilibrium_value, best_value))
}

/// `(best t, ISP 0 profit at the point, best profit)` with later stages re-solved.
fn investment_deviation(params: &MarketParams, point: &EquilibriumPoint) -> Result<(f64, f64, f64)> {
    let downstream = Downstream::for_point(point);
    let t = vec![point.t; params.n];
    let equilibrium_value = isp_profit_after_investment(params, point.m, point.regime, &t, 0, downstream)?;
    let best = best_response_isp_investment(params, point.m, point.regime, 0, &t[1..], downstream)?;
    Ok((best.x, equilibrium_value, best.value.max(equilibrium_value)))
}
