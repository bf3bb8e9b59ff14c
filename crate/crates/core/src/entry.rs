//! CP entry game.
//!
//! CPs keep entering while the per-CP equilibrium profit stays non-negative.
//! As a function of `M`, that profit has the shape of
//! `g(M) = M^w γ(M) ∝ (1 - e^{-kM}) / M^{1-v-w}`: increasing up to the peak
//! `M*` and decreasing afterwards, so the entry count is the unique crossing
//! to the right of the peak.

use serde::{Deserialize, Serialize};

use crate::equilibria::{equilibrium, EquilibriumPoint};
use crate::error::{Error, Result};
use crate::model::{MarketParams, Regime};
use crate::numeric::bisect;

/// Largest CP count the entry scan will visit.
pub const MAX_ENTRANTS: usize = 1_000_000;

/// The peak `M*` of `g`: the unique `x > 0` with
/// `x = ((1 - v - w) / k) (e^{kx} - 1)`, to absolute tolerance `1e-10`.
pub fn m_star(v: f64, w: f64, k: f64) -> Result<f64> {
    let s = 1.0 - v - w;
    if !(v + w > 0.0 && s > 0.0 && k > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "m_star needs 0 < v + w < 1 and k > 0 (v = {v}, w = {w}, k = {k})"
        )));
    }
    let f = |x: f64| x - s / k * (k * x).exp_m1();
    // f is concave, zero at 0 with slope v + w > 0: positive then negative.
    let mut hi = 1.0 / k;
    let mut lo = 0.0;
    while f(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    if lo == 0.0 {
        lo = hi;
        while f(lo) <= 0.0 {
            lo *= 0.5;
        }
    }
    bisect(f, lo, hi, 1e-10)
}

/// `g(M) = (1 - e^{-kM}) / M^{1-v-w}`, the shape driver of the CP profit.
pub fn diversity_shape(v: f64, w: f64, k: f64, m: f64) -> f64 {
    -(-k * m).exp_m1() / m.powf(1.0 - v - w)
}

/// Outcome of the entry game for one regime.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntryResult {
    pub regime: Regime,
    pub m_star: f64,
    /// Number of CPs that enter (0 when entry never pays).
    pub entered: usize,
    pub profitable: bool,
    /// CP profit at `entered` (at the best integer near `M*` when nobody enters).
    pub cp_profit_at_m: f64,
    /// CP profit with one more entrant.
    pub cp_profit_at_m_plus_1: f64,
}

fn cp_profit(params: &MarketParams, m: usize, regime: Regime) -> Result<f64> {
    Ok(equilibrium(params, m, regime)?.cp_profit(params))
}

/// Solves the entry game: the unique `M >= 1` with `Π(M) >= 0 > Π(M + 1)`,
/// or zero entrants when the profit is negative at both integers around `M*`.
pub fn entry_count(params: &MarketParams, regime: Regime) -> Result<EntryResult> {
    let params = params.validate()?;
    let peak = m_star(params.v, params.w, params.k)?;

    let floor = (peak.floor() as usize).max(1);
    let ceil = (peak.ceil() as usize).max(1);
    let (mut m, mut profit) = (floor, cp_profit(&params, floor, regime)?);
    if ceil != floor {
        let at_ceil = cp_profit(&params, ceil, regime)?;
        if at_ceil > profit {
            (m, profit) = (ceil, at_ceil);
        }
    }

    if profit < 0.0 {
        let next = cp_profit(&params, m + 1, regime)?;
        return Ok(EntryResult {
            regime,
            m_star: peak,
            entered: 0,
            profitable: false,
            cp_profit_at_m: profit,
            cp_profit_at_m_plus_1: next,
        });
    }

    // Past the peak the profit only decreases; walk to the sign change.
    loop {
        if m >= MAX_ENTRANTS {
            return Err(Error::EntryScanCap(MAX_ENTRANTS));
        }
        let next = cp_profit(&params, m + 1, regime)?;
        if next < 0.0 {
            return Ok(EntryResult {
                regime,
                m_star: peak,
                entered: m,
                profitable: true,
                cp_profit_at_m: profit,
                cp_profit_at_m_plus_1: next,
            });
        }
        m += 1;
        profit = next;
    }
}

/// Market after free entry: entry count, equilibrium, welfare and profits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarketOutcome {
    pub regime: Regime,
    pub m: usize,
    pub point: Option<EquilibriumPoint>,
    /// User welfare.
    pub uw: f64,
    pub isp_profit_each: f64,
    pub cp_profit_each: f64,
}

impl MarketOutcome {
    pub fn empty(regime: Regime) -> Self {
        Self {
            regime,
            m: 0,
            point: None,
            uw: 0.0,
            isp_profit_each: 0.0,
            cp_profit_each: 0.0,
        }
    }

    /// Outcome with a fixed number of CPs, bypassing the entry game.
    pub fn with_cps(params: &MarketParams, regime: Regime, m: usize) -> Result<Self> {
        if m == 0 {
            return Ok(Self::empty(regime));
        }
        let point = equilibrium(params, m, regime)?;
        Ok(Self {
            regime,
            m,
            point: Some(point),
            uw: point.user_welfare(params),
            isp_profit_each: point.isp_profit(params),
            cp_profit_each: point.cp_profit(params),
        })
    }
}

/// Runs the entry game and evaluates the resulting market.
pub fn market_outcome(params: &MarketParams, regime: Regime) -> Result<MarketOutcome> {
    let entry = entry_count(params, regime)?;
    MarketOutcome::with_cps(params, regime, entry.entered)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn defaults() -> MarketParams {
        MarketParams::default()
    }

    /// Independent root: scan on a fine grid for the sign change of
    /// `4 (e^{0.1x} - 1) - x` (resp. `2 (e^{0.2x} - 1) - x`), then bisect by hand.
    fn scan_root(s: f64, k: f64) -> f64 {
        let f = |x: f64| s / k * ((k * x).exp() - 1.0) - x;
        let mut x = 0.5;
        while f(x) < 0.0 {
            x += 0.5;
        }
        let (mut a, mut b) = (x - 0.5, x);
        for _ in 0..100 {
            let mid = 0.5 * (a + b);
            if f(mid) < 0.0 {
                a = mid
            } else {
                b = mid
            }
        }
        a
    }

    #[test]
    fn m_star_values() {
        let m = m_star(0.3, 0.3, 0.1).unwrap();
        assert!((m - scan_root(0.4, 0.1)).abs() < 1e-9, "{m}");
        // Reference root from an external Brent solver.
        assert!((m - 16.187_881_252_646_815).abs() < 1e-9, "{m}");
        assert!((m - 16.20).abs() < 0.05, "{m}");
        assert!(m > 16.0 && m < 16.5);
        let m = m_star(0.3, 0.3, 0.2).unwrap();
        assert!((m - scan_root(0.4, 0.2)).abs() < 1e-9, "{m}");
        assert!((m - 8.093_940_626_323_414).abs() < 1e-9, "{m}");
    }

    #[test]
    fn m_star_residual_is_tiny() {
        for (v, w, k) in [(0.3, 0.3, 0.1), (0.05, 0.05, 2.0), (0.45, 0.5, 0.01), (0.1, 0.2, 0.7)] {
            let m = m_star(v, w, k).unwrap();
            let s = 1.0 - v - w;
            let f = |x: f64| x - s / k * (k * x).exp_m1();
            // Root located within 1e-10; f has slope of order one there.
            assert!(f(m - 1e-9) > 0.0 && f(m + 1e-9) < 0.0, "{v} {w} {k}: {m}");
        }
    }

    #[test]
    fn m_star_bracket_signs() {
        let f = |x: f64| x - 0.4 / 0.1 * (0.1 * x).exp_m1();
        assert!(f(1e-6) > 0.0);
        assert!(f(1e3) < 0.0);
    }

    #[test]
    fn m_star_rejects_bad_exponents() {
        assert!(m_star(0.5, 0.5, 0.1).is_err());
        assert!(m_star(0.3, 0.3, 0.0).is_err());
    }

    #[test]
    fn shape_is_unimodal_around_m_star() {
        for (v, w, k) in [(0.3, 0.3, 0.1), (0.1, 0.4, 0.05), (0.2, 0.2, 0.5)] {
            let peak = m_star(v, w, k).unwrap();
            let grid: Vec<f64> = (1..2000).map(|i| i as f64 * 0.05 * peak / 10.0).collect();
            for pair in grid.windows(2) {
                let (g0, g1) = (diversity_shape(v, w, k, pair[0]), diversity_shape(v, w, k, pair[1]));
                if pair[1] < peak {
                    assert!(g1 > g0, "not increasing at {}", pair[0]);
                } else if pair[0] > peak {
                    assert!(g1 < g0, "not decreasing at {}", pair[0]);
                }
            }
        }
    }

    #[test]
    fn cp_profit_follows_the_shape() {
        for params in [
            defaults(),
            MarketParams { a: 12.0, ..defaults() },
            MarketParams {
                k: 0.3,
                theta: 20.0,
                ..defaults()
            },
            MarketParams {
                v: 0.2,
                w: 0.4,
                n: 3,
                ..defaults()
            },
        ] {
            let peak = m_star(params.v, params.w, params.k).unwrap();
            for regime in Regime::ALL {
                let profits: Vec<f64> = (1..120).map(|m| cp_profit(&params, m, regime).unwrap()).collect();
                let shapes: Vec<f64> = (1..120)
                    .map(|m| diversity_shape(params.v, params.w, params.k, m as f64))
                    .collect();
                let argmax = |xs: &[f64]| xs.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
                assert_eq!(argmax(&profits), argmax(&shapes));
                for i in 1..profits.len() {
                    assert_eq!(
                        profits[i] > profits[i - 1],
                        shapes[i] > shapes[i - 1],
                        "{regime} M={} peak={peak}",
                        i + 1
                    );
                }
            }
        }
    }

    #[test]
    fn entry_at_defaults() {
        let nn = entry_count(&defaults(), Regime::NonNeutral).unwrap();
        assert_eq!(nn.entered, 67);
        assert!(nn.profitable && nn.cp_profit_at_m >= 0.0 && nn.cp_profit_at_m_plus_1 < 0.0);
        let ne = entry_count(&defaults(), Regime::Neutral).unwrap();
        assert_eq!(ne.entered, 37);
        assert!(ne.entered >= ne.m_star.floor() as usize);
    }

    #[test]
    fn no_entry_with_low_ad_revenue() {
        let p = MarketParams {
            a: 10.0 + 8.0 / 9.0,
            ..defaults()
        };
        for regime in Regime::ALL {
            let e = entry_count(&p, regime).unwrap();
            assert_eq!(e.entered, 0);
            assert!(!e.profitable && e.cp_profit_at_m < 0.0);
        }
    }

    #[test]
    fn outcomes_at_defaults_and_empty_markets() {
        let o = market_outcome(&defaults(), Regime::NonNeutral).unwrap();
        assert_eq!(o.m, 67);
        assert!((o.uw / 17.353 - 1.0).abs() < 0.01);
        let o = market_outcome(
            &MarketParams {
                theta: 6.0,
                ..defaults()
            },
            Regime::Neutral,
        )
        .unwrap();
        assert_eq!((o.m, o.uw, o.point), (0, 0.0, None));
        let p = MarketParams {
            c_e: 0.04 + 7.0 * 0.48 / 9.0,
            ..defaults()
        };
        assert_eq!(market_outcome(&p, Regime::NonNeutral).unwrap().uw, 0.0);
    }

    #[test]
    fn entry_grows_with_ad_revenue() {
        for regime in Regime::ALL {
            let mut prev = 0;
            for i in 0..10 {
                let a = 10.0 + 8.0 * i as f64 / 9.0;
                let m = entry_count(&MarketParams { a, ..defaults() }, regime).unwrap().entered;
                assert!(m >= prev, "{regime} a={a}");
                prev = m;
            }
        }
    }

    #[test]
    fn zero_entry_cost_hits_the_scan_cap() {
        // Profit stays positive for every M when entry is free.
        let p = MarketParams { c_e: 0.0, ..defaults() };
        assert!(matches!(entry_count(&p, Regime::Neutral), Err(Error::EntryScanCap(_))));
    }
}
