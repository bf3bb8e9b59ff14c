// Certifies the closed-form equilibria with the numerical best-response
// oracle, then shows a perturbed point being rejected.
//
// ```bash
// cargo run --example verify_oracle
// ```

use netneut::entry::entry_count;
use netneut::equilibria::equilibrium;
use netneut::oracle::{verify_equilibrium, verify_point, Tolerances};
use netneut::{MarketParams, Regime};

pub fn run_example() -> netneut::Result<()> {
    let params = MarketParams::default();
    let tol = Tolerances::default();

    for regime in Regime::ALL {
        let m = entry_count(&params, regime)?.entered;
        let report = verify_equilibrium(&params, m, regime, &tol)?;
        let worst_foc = report.foc_residuals.values().copied().fold(0.0, f64::max);
        println!(
            "{regime:>10} M={m}: passed={} worst FOC residual {worst_foc:.1e}, max deviation gain {:.1e}",
            report.passed, report.max_deviation_gain
        );
        if let Some(t) = report.stage_solutions.t {
            println!("            searched t = {t:.6}");
        }
    }

    let mut bad = equilibrium(&params, 67, Regime::NonNeutral)?;
    bad.t *= 1.5;
    let report = verify_point(&params, &bad, &tol)?;
    println!(
        "t x 1.5: passed={} investment gain {:.4} (best t = {:.4})",
        report.passed,
        report.deviation_gains.get("investment").copied().unwrap_or(f64::NAN),
        report.stage_solutions.t.unwrap_or(f64::NAN),
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> netneut::Result<()> {
    run_example()
}
