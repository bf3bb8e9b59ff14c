// Sweeps user price insensitivity and prints the rows as CSV.
//
// ```bash
// cargo run --example parameter_sweep
// ```

use netneut::harness::{sweep, sweep_csv, Axis, SweepSpec};
use netneut::MarketParams;

pub fn run_example() -> netneut::Result<()> {
    let rows = sweep(&MarketParams::default(), &SweepSpec::grid(Axis::Theta, 6.0, 30.0, 10))?;
    print!("{}", sweep_csv(&rows));
    Ok(())
}

#[allow(dead_code)]
fn main() -> netneut::Result<()> {
    run_example()
}
