// Writes every figure dataset. Pass an output directory, or the datasets
// go to a `netneut-figures` directory under the system temp dir.
//
// ```bash
// cargo run --example reproduce_figures -- out/
// ```

use std::path::PathBuf;

use netneut::{reproduce_figures, MarketParams};

pub fn run_example() -> netneut::Result<()> {
    let out = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("netneut-figures"));
    let manifest = reproduce_figures(&MarketParams::default(), &out)?;
    println!("wrote to {}", out.display());
    for panel in &manifest.panels {
        println!("  {} ({} points over {})", panel.file, panel.grid.len(), panel.axis);
    }
    for marker in &manifest.markers {
        println!(
            "  marker {}: M = {}, M gamma = {:.4}",
            marker.regime, marker.m, marker.m_gamma
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> netneut::Result<()> {
    run_example()
}
