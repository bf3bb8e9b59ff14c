//! Parameter sweeps, regime comparison and figure-data reproduction.

mod config;
mod figures;
mod format;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::entry::{market_outcome, MarketOutcome};
use crate::error::{Error, Result};
use crate::model::{MarketParams, Regime};

pub use config::{load_config, parse_config};
pub use figures::{fig3_curve, reproduce_figures, FigureManifest, FIG3_POINTS};
pub use format::{sig6, sweep_csv, SWEEP_HEADER};

/// A sweepable market parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "theta")]
    Theta,
    #[serde(rename = "v")]
    V,
    #[serde(rename = "w")]
    W,
    #[serde(rename = "k")]
    K,
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "beta")]
    Beta,
    #[serde(rename = "c_e")]
    CE,
    #[serde(rename = "N")]
    N,
}

impl Axis {
    pub const ALL: [Axis; 9] = [
        Axis::A,
        Axis::Theta,
        Axis::V,
        Axis::W,
        Axis::K,
        Axis::Alpha,
        Axis::Beta,
        Axis::CE,
        Axis::N,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Axis::A => "a",
            Axis::Theta => "theta",
            Axis::V => "v",
            Axis::W => "w",
            Axis::K => "k",
            Axis::Alpha => "alpha",
            Axis::Beta => "beta",
            Axis::CE => "c_e",
            Axis::N => "N",
        }
    }

    pub fn get(self, params: &MarketParams) -> f64 {
        match self {
            Axis::A => params.a,
            Axis::Theta => params.theta,
            Axis::V => params.v,
            Axis::W => params.w,
            Axis::K => params.k,
            Axis::Alpha => params.alpha,
            Axis::Beta => params.beta,
            Axis::CE => params.c_e,
            Axis::N => params.n as f64,
        }
    }

    /// `params` with this parameter set to `value`. Fails only for a
    /// non-integer or non-positive ISP count; other values are validated
    /// by [`MarketParams::validate`].
    pub fn apply(self, mut params: MarketParams, value: f64) -> Result<MarketParams> {
        match self {
            Axis::A => params.a = value,
            Axis::Theta => params.theta = value,
            Axis::V => params.v = value,
            Axis::W => params.w = value,
            Axis::K => params.k = value,
            Axis::Alpha => params.alpha = value,
            Axis::Beta => params.beta = value,
            Axis::CE => params.c_e = value,
            Axis::N => {
                if !(value >= 1.0 && value.fract() == 0.0 && value <= u32::MAX as f64) {
                    return Err(Error::InvalidParams(format!("N = {value} is not a positive integer")));
                }
                params.n = value as usize;
            }
        }
        Ok(params)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let axis = match s {
            "a" => Axis::A,
            "theta" => Axis::Theta,
            "v" => Axis::V,
            "w" => Axis::W,
            "k" => Axis::K,
            "alpha" => Axis::Alpha,
            "beta" => Axis::Beta,
            "c_e" | "c-e" => Axis::CE,
            "N" | "n" => Axis::N,
            _ => return Err(Error::InvalidArgument(format!("unknown parameter {s:?}"))),
        };
        Ok(axis)
    }
}

/// Values taken by the swept parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepValues {
    List(Vec<f64>),
    /// `steps` equally spaced points from `from` to `to` inclusive.
    Grid {
        from: f64,
        to: f64,
        steps: usize,
    },
}

impl SweepValues {
    pub fn points(&self) -> Vec<f64> {
        match *self {
            SweepValues::List(ref values) => values.clone(),
            SweepValues::Grid { from, to, steps } => linspace(from, to, steps),
        }
    }
}

/// `steps` equally spaced points with both endpoints exact.
pub fn linspace(from: f64, to: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => vec![],
        1 => vec![from],
        _ => (0..steps)
            .map(|i| {
                if i + 1 == steps {
                    to
                } else {
                    from + (to - from) * i as f64 / (steps - 1) as f64
                }
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub axis: Axis,
    pub values: SweepValues,
    pub regimes: Vec<Regime>,
}

impl SweepSpec {
    pub fn grid(axis: Axis, from: f64, to: f64, steps: usize) -> Self {
        Self {
            axis,
            values: SweepValues::Grid { from, to, steps },
            regimes: Regime::ALL.to_vec(),
        }
    }

    pub fn list(axis: Axis, values: Vec<f64>) -> Self {
        Self {
            axis,
            values: SweepValues::List(values),
            regimes: Regime::ALL.to_vec(),
        }
    }

    /// Checks the sweep definition and returns the parameter set of every grid point.
    pub fn expand(&self, base: &MarketParams) -> Result<Vec<(f64, MarketParams)>> {
        let points = self.values.points();
        if points.is_empty() {
            return Err(Error::InvalidArgument("sweep has no values".into()));
        }
        if self.regimes.is_empty() {
            return Err(Error::InvalidArgument("sweep has no regimes".into()));
        }
        points
            .into_iter()
            .map(|value| {
                let params = self.axis.apply(*base, value)?.validate().map_err(|e| match e {
                    Error::InvalidParams(msg) => {
                        Error::InvalidParams(format!("sweep point {}={value}: {msg}", self.axis))
                    }
                    other => other,
                })?;
                Ok((value, params))
            })
            .collect()
    }
}

/// One sweep point under one regime.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub axis: Axis,
    pub value: f64,
    pub regime: Regime,
    #[serde(rename = "M")]
    pub m: usize,
    pub t: f64,
    pub c: f64,
    pub p: f64,
    pub q: f64,
    pub uw: f64,
    pub isp_profit_each: f64,
    pub cp_profit_each: f64,
    /// Set when this point failed; the numeric fields are then meaningless.
    pub error: Option<String>,
}

impl SweepRow {
    pub fn from_outcome(axis: Axis, value: f64, outcome: &MarketOutcome) -> Self {
        let (t, c, p, q) = outcome.point.map_or((0.0, 0.0, 0.0, 0.0), |e| (e.t, e.c, e.p, e.q));
        Self {
            axis,
            value,
            regime: outcome.regime,
            m: outcome.m,
            t,
            c,
            p,
            q,
            uw: outcome.uw,
            isp_profit_each: outcome.isp_profit_each,
            cp_profit_each: outcome.cp_profit_each,
            error: None,
        }
    }

    fn failed(axis: Axis, value: f64, regime: Regime, error: &Error) -> Self {
        Self {
            error: Some(error.to_string()),
            ..Self::from_outcome(axis, value, &MarketOutcome::empty(regime))
        }
    }
}

/// Runs the entry game and the resulting equilibrium at every sweep point.
/// Rows are ordered by (value, regime); a failing point yields a row with
/// `error` set and the sweep continues.
pub fn sweep(params: &MarketParams, spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let mut regimes = spec.regimes.clone();
    regimes.sort();
    regimes.dedup();
    let mut points = spec.expand(params)?;
    points.sort_by(|x, y| x.0.total_cmp(&y.0));

    let mut rows = Vec::with_capacity(points.len() * regimes.len());
    for (value, point_params) in points {
        for &regime in &regimes {
            rows.push(match market_outcome(&point_params, regime) {
                Ok(outcome) => SweepRow::from_outcome(spec.axis, value, &outcome),
                Err(e) => SweepRow::failed(spec.axis, value, regime, &e),
            });
        }
    }
    Ok(rows)
}

/// Regime with the higher user welfare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preference {
    Neutral,
    NonNeutral,
    Indifferent,
}

/// Both regimes side by side. Deltas are non-neutral minus neutral.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeComparison {
    pub params: MarketParams,
    pub neutral: MarketOutcome,
    pub nonneutral: MarketOutcome,
    pub delta_m: i64,
    pub delta_uw: f64,
    /// User price difference; absent when either market is empty.
    pub delta_p: Option<f64>,
    pub preferred: Preference,
}

pub fn compare_regimes(params: &MarketParams) -> Result<RegimeComparison> {
    let params = params.validate()?;
    let neutral = market_outcome(&params, Regime::Neutral)?;
    let nonneutral = market_outcome(&params, Regime::NonNeutral)?;
    let delta_uw = nonneutral.uw - neutral.uw;
    let preferred = if delta_uw > 0.0 {
        Preference::NonNeutral
    } else if delta_uw < 0.0 {
        Preference::Neutral
    } else {
        Preference::Indifferent
    };
    Ok(RegimeComparison {
        params,
        delta_m: nonneutral.m as i64 - neutral.m as i64,
        delta_uw,
        delta_p: match (nonneutral.point, neutral.point) {
            (Some(x), Some(y)) => Some(x.p - y.p),
            _ => None,
        },
        neutral,
        nonneutral,
        preferred,
    })
}
