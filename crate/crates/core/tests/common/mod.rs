#![allow(dead_code)]

pub mod published;

use std::path::Path;
use std::sync::OnceLock;

use netneut::equilibria::equilibrium;
use netneut::harness::Axis;
use netneut::model::{cp_profit, isp_profit};
use netneut::{reproduce_figures, MarketParams, Regime};

use published::{Field, Series, FIG3_CURVE, FIG3_MARKERS};

/// One parsed line of a sweep CSV.
#[derive(Debug, Clone)]
pub struct Row {
    pub axis: String,
    pub value: f64,
    pub regime: String,
    pub m: f64,
    pub t: f64,
    pub c: f64,
    pub p: f64,
    pub q: f64,
    pub uw: f64,
}

impl Row {
    pub fn field(&self, field: Field) -> f64 {
        match field {
            Field::M => self.m,
            Field::T => self.t,
            Field::C => self.c,
            Field::Uw => self.uw,
            Field::P => self.p,
            Field::Q => self.q,
        }
    }

    pub fn params(&self) -> MarketParams {
        let axis: Axis = self.axis.parse().unwrap();
        axis.apply(MarketParams::default(), self.value).unwrap()
    }

    pub fn regime(&self) -> Regime {
        self.regime.parse().unwrap()
    }
}

pub fn read_sweep_csv(path: &Path) -> Vec<Row> {
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(netneut::harness::SWEEP_HEADER));
    lines
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            assert_eq!(f.len(), 11, "{line}");
            let num = |i: usize| f[i].parse::<f64>().unwrap();
            Row {
                axis: f[0].into(),
                value: num(1),
                regime: f[2].into(),
                m: num(3),
                t: num(4),
                c: num(5),
                p: num(6),
                q: num(7),
                uw: num(8),
            }
        })
        .collect()
}

/// Figure datasets at the reference parameters, generated once per process.
pub fn figures_dir() -> &'static Path {
    static DIR: OnceLock<tempfile::TempDir> = OnceLock::new();
    DIR.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        reproduce_figures(&MarketParams::default(), dir.path()).unwrap();
        dir
    })
    .path()
}

pub fn panel_file(axis: &str) -> &'static str {
    match axis {
        "theta" => "fig2_theta.csv",
        "a" => "fig2_a.csv",
        "v" => "fig4_v.csv",
        "c_e" => "fig4_c_e.csv",
        _ => panic!("no panel for {axis}"),
    }
}

pub fn panel_rows(axis: &str) -> Vec<Row> {
    read_sweep_csv(&figures_dir().join(panel_file(axis)))
}

/// Compares one published series with the emitted dataset. Counts must
/// match exactly, published zeros must be exact zeros, prices must agree
/// to the printed precision and every other value within 1%.
pub fn check_series(series: &Series) -> Result<(), String> {
    let rows: Vec<Row> = panel_rows(series.axis)
        .into_iter()
        .filter(|r| r.regime == series.regime)
        .collect();
    if rows.len() != 10 {
        return Err(format!("{} rows for {} {}", rows.len(), series.axis, series.regime));
    }
    let mut errors = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let want = series.values[i];
        let got = match series.field {
            // Prices are reported even where no CP enters.
            Field::P | Field::Q if row.m == 0.0 => {
                let e = equilibrium(&row.params(), 1, row.regime()).unwrap();
                if series.field == Field::P {
                    e.p
                } else {
                    e.q
                }
            }
            field => row.field(field),
        };
        let ok = match series.field {
            Field::M => got == want,
            Field::P | Field::Q => (got - want).abs() <= 1e-4 * want.abs().max(1.0),
            _ if want == 0.0 => got == 0.0,
            _ => (got - want).abs() <= 0.01 * want.abs(),
        };
        if !ok {
            errors.push(format!("x={} published {want} got {got}", series.x[i]));
        }
    }
    if errors.is_empty() {
        Ok(())
    } else {
        Err(format!(
            "{} {:?} {}: {}",
            series.axis,
            series.field,
            series.regime,
            errors.join("; ")
        ))
    }
}

/// Diversity curve within 0.5% at every published point, markers likewise.
pub fn check_fig3() -> Result<(), String> {
    let text = std::fs::read_to_string(figures_dir().join("fig3_mgamma.csv")).unwrap();
    let curve: Vec<(f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (m, g) = l.split_once(',').unwrap();
            (m.parse().unwrap(), g.parse().unwrap())
        })
        .collect();
    let mut errors = Vec::new();
    // The published curve starts at the origin; the dataset omits M = 0.
    let published = &FIG3_CURVE[1..];
    if curve.len() != published.len() {
        errors.push(format!("{} curve points, published {}", curve.len(), published.len()));
    }
    for ((m, mg), (pm, pmg)) in curve.iter().zip(published) {
        if (m - pm).abs() > 1e-3 || (mg - pmg).abs() > 0.005 * pmg {
            errors.push(format!("M={pm}: published {pmg} got ({m}, {mg})"));
        }
    }
    let text = std::fs::read_to_string(figures_dir().join("fig3_markers.csv")).unwrap();
    for (regime, m, mg) in FIG3_MARKERS {
        let line = text.lines().find(|l| l.starts_with(&format!("{regime},"))).unwrap();
        let f: Vec<&str> = line.split(',').collect();
        let (got_m, got_mg): (usize, f64) = (f[1].parse().unwrap(), f[2].parse().unwrap());
        if got_m != m || (got_mg - mg).abs() > 0.005 * mg {
            errors.push(format!(
                "{regime} marker: published ({m}, {mg}) got ({got_m}, {got_mg})"
            ));
        }
    }
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors.join("; "))
    }
}

/// Parameter sets of every regression point where CPs enter, with the entry count.
pub fn regression_points() -> Vec<(MarketParams, Regime, usize)> {
    ["theta", "a", "v", "c_e"]
        .into_iter()
        .flat_map(panel_rows)
        .filter(|r| r.m > 0.0)
        .map(|r| (r.params(), r.regime(), r.m as usize))
        .collect()
}

/// Largest relative gap between closed-form profits and direct evaluation
/// on the equilibrium profile, over all regression points.
pub fn worst_profit_identity_gap() -> f64 {
    let mut worst = 0.0f64;
    for (params, regime, m) in regression_points() {
        let e = equilibrium(&params, m, regime).unwrap();
        let profile = e.profile(&params);
        for (closed, direct) in [
            (e.cp_profit(&params), cp_profit(&params, &profile, 0).unwrap()),
            (e.isp_profit(&params), isp_profit(&params, &profile, 0).unwrap()),
        ] {
            worst = worst.max((closed - direct).abs() / direct.abs());
        }
    }
    worst
}
