//! Exogenous parameters and the primitive economic functions of the market.
//!
//! `N` ISPs each serve their own user population; `M` CPs sell content to
//! all of them. A click by an ISP-`n` user on CP-`m` content costs the user
//! `p_n(m)`, earns the CP the ad revenue `a` and, outside the neutral regime,
//! transfers the side payment `q_m(n)` from the CP to the ISP.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exogenous model parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarketParams {
    /// Ad revenue per click.
    pub a: f64,
    /// User price insensitivity (mean willingness to pay per click).
    pub theta: f64,
    /// Demand sensitivity to CP investment.
    pub v: f64,
    /// Demand sensitivity to ISP investment.
    pub w: f64,
    /// User preference for content variety.
    pub k: f64,
    /// ISP outside option.
    pub alpha: f64,
    /// CP outside option.
    pub beta: f64,
    /// CP entry cost.
    pub c_e: f64,
    /// Number of ISPs.
    #[serde(rename = "N")]
    pub n: usize,
}

impl Default for MarketParams {
    /// The reference scenario used throughout the figures.
    fn default() -> Self {
        Self {
            a: 15.0,
            theta: 10.0,
            v: 0.3,
            w: 0.3,
            k: 0.1,
            alpha: 1.2,
            beta: 1.2,
            c_e: 0.15,
            n: 2,
        }
    }
}

impl MarketParams {
    /// Checks every admissibility constraint and returns the parameters
    /// unchanged, or names the first violated constraint.
    pub fn validate(self) -> Result<Self> {
        let p = &self;
        let finite = [
            ("a", p.a),
            ("theta", p.theta),
            ("v", p.v),
            ("w", p.w),
            ("k", p.k),
            ("alpha", p.alpha),
            ("beta", p.beta),
            ("c_e", p.c_e),
        ];
        if let Some((name, value)) = finite.iter().find(|(_, x)| !x.is_finite()) {
            return Err(Error::InvalidParams(format!("{name} = {value} is not finite")));
        }
        let checks: [(bool, String); 10] = [
            (p.v > 0.0 && p.v < 1.0, format!("v must lie in (0, 1), got {}", p.v)),
            (p.w > 0.0 && p.w < 1.0, format!("w must lie in (0, 1), got {}", p.w)),
            (
                p.v + p.w < 1.0,
                format!("v + w must be < 1 (decreasing returns), got {}", p.v + p.w),
            ),
            (p.theta > 0.0, format!("theta must be > 0, got {}", p.theta)),
            (p.k > 0.0, format!("k must be > 0, got {}", p.k)),
            (p.a >= 0.0, format!("a must be >= 0, got {}", p.a)),
            (p.c_e >= 0.0, format!("c_e must be >= 0, got {}", p.c_e)),
            (p.alpha > 1.0, format!("alpha must be > 1, got {}", p.alpha)),
            (p.beta > 1.0, format!("beta must be > 1, got {}", p.beta)),
            (p.n >= 1, "N must be at least 1".to_string()),
        ];
        match checks.into_iter().find(|(ok, _)| !ok) {
            Some((_, msg)) => Err(Error::InvalidParams(msg)),
            None => Ok(self),
        }
    }

    /// Number of ISPs as a float.
    pub fn n_f64(&self) -> f64 {
        self.n as f64
    }
}

/// Regulatory regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// Side payments are forced to zero.
    Neutral,
    /// CPs choose (possibly negative) per-click side payments to ISPs.
    NonNeutral,
}

impl Regime {
    pub const ALL: [Regime; 2] = [Regime::Neutral, Regime::NonNeutral];

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Neutral => "neutral",
            Regime::NonNeutral => "nonneutral",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "neutral" => Ok(Regime::Neutral),
            "nonneutral" => Ok(Regime::NonNeutral),
            other => Err(Error::InvalidArgument(format!(
                "unknown regime {other:?} (expected neutral or nonneutral)"
            ))),
        }
    }
}

/// Content-diversity weight `γ = (1 - e^{-kM}) / (M^{1-v} N^{1-w})`.
///
/// `m` is real so that the `M·γ` curve can be sampled between integers.
pub fn gamma(params: &MarketParams, m: f64) -> Result<f64> {
    if m.is_nan() || m <= 0.0 || m.is_infinite() {
        return Err(Error::InvalidArgument(format!(
            "gamma needs a positive CP count, got {m}"
        )));
    }
    Ok(ln_gamma(params, m).exp())
}

/// `ln γ`, computed without forming the powers.
pub(crate) fn ln_gamma(params: &MarketParams, m: f64) -> f64 {
    (-(-params.k * m).exp_m1()).ln() - (1.0 - params.v) * m.ln() - (1.0 - params.w) * params.n_f64().ln()
}

/// `x^e` for `x >= 0`, with `0^e = 0`.
pub(crate) fn pow0(x: f64, e: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.powf(e)
    }
}

/// Clicks of ISP-`n` users on CP-`m` content:
/// `B = γ c^v t^w e^{-p/θ}`.
pub fn demand_per_pair(params: &MarketParams, gamma: f64, c_m: f64, t_n: f64, price: f64) -> f64 {
    gamma * pow0(c_m, params.v) * pow0(t_n, params.w) * (-price / params.theta).exp()
}

/// A full (possibly asymmetric) strategy profile for fixed `N` and `M`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageProfile {
    /// ISP investments, length `N`.
    pub t: Vec<f64>,
    /// Side payments, `q[m][n]` is paid by CP `m` per click of ISP-`n` users.
    pub q: Vec<Vec<f64>>,
    /// User prices, `p[n][m]` is charged by ISP `n` per click on CP `m`.
    pub p: Vec<Vec<f64>>,
    /// CP investments, length `M`.
    pub c: Vec<f64>,
}

impl StageProfile {
    /// Profile in which every player of a side plays the same value.
    pub fn symmetric(n_isps: usize, m_cps: usize, t: f64, c: f64, p: f64, q: f64) -> Self {
        Self {
            t: vec![t; n_isps],
            q: vec![vec![q; n_isps]; m_cps],
            p: vec![vec![p; m_cps]; n_isps],
            c: vec![c; m_cps],
        }
    }

    pub fn num_isps(&self) -> usize {
        self.t.len()
    }

    pub fn num_cps(&self) -> usize {
        self.c.len()
    }

    /// Checks dimensions, signs and finiteness.
    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.num_isps(), self.num_cps());
        if n == 0 || m == 0 {
            return Err(Error::InvalidArgument(
                "profile needs at least one ISP and one CP".into(),
            ));
        }
        if self.q.len() != m || self.q.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(format!("side payments must be {m}x{n}")));
        }
        if self.p.len() != n || self.p.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidArgument(format!("prices must be {n}x{m}")));
        }
        if self.t.iter().chain(&self.c).any(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(Error::InvalidArgument(
                "investments must be finite and non-negative".into(),
            ));
        }
        if self.q.iter().chain(&self.p).flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument("prices and side payments must be finite".into()));
        }
        Ok(())
    }

    fn check(&self, params: &MarketParams) -> Result<f64> {
        self.validate()?;
        if self.num_isps() != params.n {
            return Err(Error::InvalidArgument(format!(
                "profile has {} ISPs but N = {}",
                self.num_isps(),
                params.n
            )));
        }
        gamma(params, self.num_cps() as f64)
    }
}

/// ISP profit `Σ_m (p_n(m) + q_m(n)) B_{n,m} - α t_n`.
pub fn isp_profit(params: &MarketParams, profile: &StageProfile, n: usize) -> Result<f64> {
    let gamma = profile.check(params)?;
    let t_n = *profile
        .t
        .get(n)
        .ok_or_else(|| Error::InvalidArgument(format!("ISP index {n} out of range")))?;
    let revenue: f64 = (0..profile.num_cps())
        .map(|m| {
            let price = profile.p[n][m];
            (price + profile.q[m][n]) * demand_per_pair(params, gamma, profile.c[m], t_n, price)
        })
        .sum();
    Ok(revenue - params.alpha * t_n)
}

/// CP profit `Σ_n (a - q_m(n)) B_{n,m} - β (c_m + c_e)`.
pub fn cp_profit(params: &MarketParams, profile: &StageProfile, m: usize) -> Result<f64> {
    let gamma = profile.check(params)?;
    let c_m = *profile
        .c
        .get(m)
        .ok_or_else(|| Error::InvalidArgument(format!("CP index {m} out of range")))?;
    let revenue: f64 = (0..profile.num_isps())
        .map(|n| (params.a - profile.q[m][n]) * demand_per_pair(params, gamma, c_m, profile.t[n], profile.p[n][m]))
        .sum();
    Ok(revenue - params.beta * (c_m + params.c_e))
}

/// User surplus at a symmetric point: `N M γ θ c^v t^w e^{-p/θ}`, i.e. θ times
/// the total number of clicks.
pub fn user_welfare(params: &MarketParams, m: usize, gamma: f64, c: f64, t: f64, p: f64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    params.n_f64() * m as f64 * params.theta * demand_per_pair(params, gamma, c, t, p)
}
