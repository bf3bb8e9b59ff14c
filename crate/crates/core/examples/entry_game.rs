// Free entry of content providers: how many CPs enter, and what the
// market looks like afterwards.
//
// ```bash
// cargo run --example entry_game
// ```

use netneut::entry::{entry_count, m_star};
use netneut::{market_outcome, MarketParams, Regime};

pub fn run_example() -> netneut::Result<()> {
    let params = MarketParams::default();
    let m_star = m_star(params.v, params.w, params.k)?;
    println!("diversity peak M* = {m_star:.4}");

    for regime in Regime::ALL {
        let entry = entry_count(&params, regime)?;
        let market = market_outcome(&params, regime)?;
        println!(
            "{regime:>10}: {} CPs enter (profit {:.3e} at M, {:.3e} at M+1), UW = {:.4}",
            entry.entered, entry.cp_profit_at_m, entry.cp_profit_at_m_plus_1, market.uw
        );
    }

    // Low ad revenue: only negative side payments keep CPs in the market.
    let poor = MarketParams { a: 12.0, ..params };
    for regime in Regime::ALL {
        println!("a = 12, {regime:>10}: {} CPs", entry_count(&poor, regime)?.entered);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> netneut::Result<()> {
    run_example()
}
