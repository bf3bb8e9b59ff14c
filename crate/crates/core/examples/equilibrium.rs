// Closed-form equilibria of both regimes for a fixed number of CPs.
//
// ```bash
// cargo run --example equilibrium
// ```

use netneut::equilibria::equilibrium;
use netneut::{MarketParams, Regime};

pub fn run_example() -> netneut::Result<()> {
    let params = MarketParams::default();
    let m = 50;
    println!("N = {} ISPs, M = {m} CPs", params.n);
    for regime in Regime::ALL {
        let e = equilibrium(&params, m, regime)?;
        println!(
            "{regime:>10}: t = {:.4}  c = {:.5}  p = {:.4}  q = {:.4}  UW = {:.4}  ISP profit = {:.4}  CP profit = {:.6}",
            e.t,
            e.c,
            e.p,
            e.q,
            e.user_welfare(&params),
            e.isp_profit(&params),
            e.cp_profit(&params),
        );
    }

    // Both regimes share the same per-click margin p + q.
    let neutral = equilibrium(&params, m, Regime::Neutral)?;
    let nonneutral = equilibrium(&params, m, Regime::NonNeutral)?;
    println!(
        "margin: neutral {:.6}, non-neutral {:.6}",
        neutral.p + neutral.q,
        nonneutral.p + nonneutral.q
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> netneut::Result<()> {
    run_example()
}
