//! Closed-form symmetric equilibria of the investment/pricing game for a
//! fixed number of CPs, in both regimes.
//!
//! Neutral: ISPs choose investment and user price simultaneously, then CPs
//! invest. Non-neutral: ISPs invest, CPs choose side payments, ISPs price,
//! CPs invest. Both are solved by backward induction; all powers are taken
//! in log space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{self, ln_gamma, MarketParams, Regime, StageProfile};

/// Equilibrium markup factor `π = 1 / (1 + v / (N (1 - v)))`; the total
/// per-click margin `p + q` equals `θ π` in both regimes.
pub fn pi_markup(n: usize, v: f64) -> f64 {
    1.0 / (1.0 + v / (n as f64 * (1.0 - v)))
}

/// Price-reaction ratio `R` of the non-neutral investment stage. Zero for a
/// single ISP, strictly inside `(0, 1)` otherwise.
pub fn reaction_ratio(n: usize, v: f64) -> f64 {
    let pi = pi_markup(n, v);
    let nf = n as f64;
    (nf - 1.0) / nf * (1.0 / pi + v / (1.0 - pi) - 1.0) / (1.0 / pi + 1.0 / (1.0 - pi) - 1.0)
}

/// A symmetric equilibrium for a fixed number of CPs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumPoint {
    pub regime: Regime,
    /// Number of CPs.
    pub m: usize,
    /// ISP investment.
    pub t: f64,
    /// CP investment.
    pub c: f64,
    /// User price per click.
    pub p: f64,
    /// Side payment per click (zero when neutral).
    pub q: f64,
    /// Markup factor.
    pub pi: f64,
    /// Price-reaction ratio (non-neutral only).
    pub r: Option<f64>,
    pub gamma: f64,
    /// Investment scale constant (non-neutral only).
    pub k_tilde: Option<f64>,
    /// Auxiliary investment term (neutral only).
    pub x: Option<f64>,
}

fn check_m(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidArgument("equilibrium needs at least one CP".into()));
    }
    Ok(m as f64)
}

/// Unique equilibrium of the neutral game with `m` CPs.
pub fn neutral_equilibrium(params: &MarketParams, m: usize) -> Result<EquilibriumPoint> {
    let params = params.validate()?;
    let mf = check_m(m)?;
    let MarketParams {
        a,
        theta,
        v,
        w,
        k,
        alpha,
        beta,
        ..
    } = params;
    let ln_n = params.n_f64().ln();
    let pi = pi_markup(params.n, v);
    let ln_diversity = (-(-k * mf).exp_m1()).ln();

    let ln_x = ln_diversity / (1.0 - v) + (theta * w / alpha).ln() + (v + w - 1.0) / (1.0 - v) * ln_n;
    // ln(0) = -inf for a = 0 sends both investments to zero.
    let ln_ad = (a * v / beta).ln();
    let scale = 1.0 / (1.0 - v - w);
    let ln_t = ((1.0 - v) * ln_x + v * ln_ad - pi) * scale;
    let ln_c =
        (w * ln_x + (1.0 - w) * ln_ad - pi) * scale + (ln_diversity - (1.0 - v) * mf.ln() + w * ln_n) / (1.0 - v);

    Ok(EquilibriumPoint {
        regime: Regime::Neutral,
        m,
        t: ln_t.exp(),
        c: ln_c.exp(),
        p: theta * pi,
        q: 0.0,
        pi,
        r: None,
        gamma: ln_gamma(&params, mf).exp(),
        k_tilde: None,
        x: Some(ln_x.exp()),
    })
}

/// Unique symmetric equilibrium of the non-neutral game with `m` CPs.
pub fn nonneutral_equilibrium(params: &MarketParams, m: usize) -> Result<EquilibriumPoint> {
    let params = params.validate()?;
    let mf = check_m(m)?;
    let MarketParams {
        a,
        theta,
        v,
        w,
        alpha,
        beta,
        ..
    } = params;
    let pi = pi_markup(params.n, v);
    let r = reaction_ratio(params.n, v);
    let q = a - theta;
    let p = theta * (1.0 + pi) - a;
    let ln_g = ln_gamma(&params, mf);

    let ln_k_tilde = alpha.ln() - ln_g - v / (1.0 - v) * ((v / (1.0 - v)).ln() + (v / beta).ln() + ln_g);
    let ln_t = ((1.0 - v) * ((1.0 - r).ln() + mf.ln() - ln_k_tilde + w.ln() - (1.0 - v).ln()) + theta.ln() + q / theta
        - pi
        + pi.ln()
        - v * (1.0 - pi).ln())
        / (1.0 - v - w);
    let ln_c =
        ((v / beta).ln() + ln_g + params.n_f64().ln() + theta.ln() + w * ln_t + a / theta - (1.0 + pi)) / (1.0 - v);

    Ok(EquilibriumPoint {
        regime: Regime::NonNeutral,
        m,
        t: ln_t.exp(),
        c: ln_c.exp(),
        p,
        q,
        pi,
        r: Some(r),
        gamma: ln_g.exp(),
        k_tilde: Some(ln_k_tilde.exp()),
        x: None,
    })
}

/// Equilibrium of the requested regime.
pub fn equilibrium(params: &MarketParams, m: usize, regime: Regime) -> Result<EquilibriumPoint> {
    match regime {
        Regime::Neutral => neutral_equilibrium(params, m),
        Regime::NonNeutral => nonneutral_equilibrium(params, m),
    }
}

impl EquilibriumPoint {
    /// The point as a full strategy profile with `params.n` ISPs.
    pub fn profile(&self, params: &MarketParams) -> StageProfile {
        StageProfile::symmetric(params.n, self.m, self.t, self.c, self.p, self.q)
    }

    pub fn user_welfare(&self, params: &MarketParams) -> f64 {
        model::user_welfare(params, self.m, self.gamma, self.c, self.t, self.p)
    }

    /// Closed-form CP profit with CP investment already optimized.
    pub fn cp_profit(&self, params: &MarketParams) -> f64 {
        let MarketParams {
            a,
            theta,
            v,
            w,
            beta,
            c_e,
            ..
        } = *params;
        // Neutral is the same expression at q = 0.
        let ln_rev = (params.n_f64().ln() + (a - self.q).ln() + self.gamma.ln() - v * (beta / v).ln()
            + w * self.t.ln()
            + self.q / theta
            - self.pi)
            / (1.0 - v);
        ln_rev.exp() * (1.0 - v) - beta * c_e
    }

    /// Closed-form ISP profit with downstream decisions substituted.
    pub fn isp_profit(&self, params: &MarketParams) -> f64 {
        let MarketParams {
            a,
            theta,
            v,
            w,
            alpha,
            beta,
            ..
        } = *params;
        let (mf, g, pi, t) = (self.m as f64, self.gamma, self.pi, self.t);
        let e = v / (1.0 - v);
        let ln_rev = match self.regime {
            Regime::NonNeutral => {
                (mf * theta * g).ln()
                    + e * (theta * e * v * g / beta).ln()
                    + w / (1.0 - v) * t.ln()
                    + (self.q / theta - pi) / (1.0 - v)
                    + pi.ln() / (1.0 - v)
                    - e * (1.0 - pi).ln()
            }
            Regime::Neutral => {
                (mf * theta * pi * g).ln() + e * (params.n_f64() * a * v * g / beta).ln() + w / (1.0 - v) * t.ln()
                    - pi / (1.0 - v)
            }
        };
        ln_rev.exp() - alpha * t
    }
}

/// Closed-form per-CP equilibrium profit net of entry cost.
pub fn cp_profit_at_equilibrium(params: &MarketParams, m: usize, regime: Regime) -> Result<f64> {
    Ok(equilibrium(params, m, regime)?.cp_profit(params))
}

/// Closed-form per-ISP equilibrium profit.
pub fn isp_profit_at_equilibrium(params: &MarketParams, m: usize, regime: Regime) -> Result<f64> {
    Ok(equilibrium(params, m, regime)?.isp_profit(params))
}
