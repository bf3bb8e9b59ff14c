//! Figure datasets: one CSV per panel plus a JSON manifest.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{linspace, sig6, sweep, sweep_csv, Axis, SweepSpec};
use crate::entry::entry_count;
use crate::error::{Error, Result};
use crate::model::{gamma, MarketParams, Regime};

/// Grid size of the `M γ` curve, counting the excluded `M = 0` point.
pub const FIG3_POINTS: usize = 40;
pub const FIG3_M_MAX: f64 = 134.0;

/// Panel sweeps: file name, axis, grid.
const SWEEP_PANELS: [(&str, Axis, f64, f64, usize); 4] = [
    ("fig2_theta.csv", Axis::Theta, 6.0, 30.0, 10),
    ("fig2_a.csv", Axis::A, 10.0, 18.0, 10),
    ("fig4_v.csv", Axis::V, 0.1, 0.4, 10),
    ("fig4_c_e.csv", Axis::CE, 0.04, 0.52, 10),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PanelEntry {
    pub file: String,
    /// Swept parameter, or `M` for the diversity curve.
    pub axis: String,
    pub grid: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarkerEntry {
    pub regime: Regime,
    #[serde(rename = "M")]
    pub m: usize,
    pub m_gamma: f64,
}

/// Written as `manifest.json` next to the datasets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureManifest {
    pub params: MarketParams,
    pub panels: Vec<PanelEntry>,
    pub markers_file: String,
    pub markers: Vec<MarkerEntry>,
    /// Sweep points that failed, as `file: axis=value regime: message`.
    pub failures: Vec<String>,
}

/// `(M, M γ(M))` on `FIG3_POINTS` equally spaced points of `[0, FIG3_M_MAX]`,
/// without `M = 0`.
pub fn fig3_curve(params: &MarketParams) -> Result<Vec<(f64, f64)>> {
    linspace(0.0, FIG3_M_MAX, FIG3_POINTS)
        .into_iter()
        .skip(1)
        .map(|m| Ok((m, m * gamma(params, m)?)))
        .collect()
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

/// Regenerates every figure dataset into `out_dir` (created if needed).
/// Output is byte-identical across runs with the same parameters.
pub fn reproduce_figures(defaults: &MarketParams, out_dir: &Path) -> Result<FigureManifest> {
    let params = defaults.validate()?;
    std::fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut panels = Vec::new();
    let mut failures = Vec::new();

    for (file, axis, from, to, steps) in SWEEP_PANELS {
        let rows = sweep(&params, &SweepSpec::grid(axis, from, to, steps))?;
        for row in &rows {
            if let Some(e) = &row.error {
                failures.push(format!("{file}: {axis}={} {}: {e}", row.value, row.regime));
            }
        }
        write(out_dir, file, &sweep_csv(&rows))?;
        panels.push(PanelEntry {
            file: file.into(),
            axis: axis.as_str().into(),
            grid: linspace(from, to, steps),
        });
    }

    let curve = fig3_curve(&params)?;
    let mut csv = String::from("M,m_gamma\n");
    for (m, mg) in &curve {
        writeln!(csv, "{},{}", sig6(*m), sig6(*mg)).unwrap();
    }
    write(out_dir, "fig3_mgamma.csv", &csv)?;
    panels.push(PanelEntry {
        file: "fig3_mgamma.csv".into(),
        axis: "M".into(),
        grid: curve.iter().map(|(m, _)| *m).collect(),
    });

    let mut markers = Vec::new();
    let mut csv = String::from("regime,M,m_gamma\n");
    for regime in Regime::ALL {
        let m = entry_count(&params, regime)?.entered;
        let m_gamma = if m == 0 {
            0.0
        } else {
            m as f64 * gamma(&params, m as f64)?
        };
        writeln!(csv, "{regime},{m},{}", sig6(m_gamma)).unwrap();
        markers.push(MarkerEntry { regime, m, m_gamma });
    }
    write(out_dir, "fig3_markers.csv", &csv)?;

    let manifest = FigureManifest {
        params,
        panels,
        markers_file: "fig3_markers.csv".into(),
        markers,
        failures,
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write(out_dir, "manifest.json", &(json + "\n"))?;
    Ok(manifest)
}
