// Which regime serves users better, across a few market conditions.
//
// ```bash
// cargo run --example compare_regimes
// ```

use netneut::{compare_regimes, MarketParams};

pub fn run_example() -> netneut::Result<()> {
    let base = MarketParams::default();
    let cases = [
        ("reference", base),
        ("price-insensitive users", MarketParams { theta: 30.0, ..base }),
        ("rich advertising", MarketParams { a: 18.0, ..base }),
        ("costly entry", MarketParams { c_e: 0.3, ..base }),
    ];
    for (label, params) in cases {
        let cmp = compare_regimes(&params)?;
        println!(
            "{label:<24} UW neutral {:>8.4}  non-neutral {:>8.4}  dM {:+4}  -> {:?}",
            cmp.neutral.uw, cmp.nonneutral.uw, cmp.delta_m, cmp.preferred
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> netneut::Result<()> {
    run_example()
}
