use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use netneut::entry::{entry_count, market_outcome, MarketOutcome};
use netneut::harness::{
    compare_regimes, load_config, reproduce_figures, sweep, sweep_csv, Axis, SweepSpec, SweepValues,
};
use netneut::oracle::{verify_equilibrium, Tolerances};
use netneut::{Error, MarketParams, Regime};

const EXIT_VERIFICATION_FAILED: u8 = 3;

/// Equilibria, entry and welfare of a two-sided ISP/CP market.
#[derive(Parser)]
#[command(name = "netneut", version)]
struct Cli {
    #[command(flatten)]
    params: ParamArgs,
    #[command(subcommand)]
    command: Command,
}

/// Market parameters. Defaults are the reference values; a `--config` file
/// is applied first and individual flags override it.
#[derive(Args)]
struct ParamArgs {
    /// key = value parameter file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, global = true)]
    theta: Option<f64>,
    #[arg(long, global = true)]
    v: Option<f64>,
    #[arg(long, global = true)]
    w: Option<f64>,
    #[arg(long, global = true)]
    k: Option<f64>,
    #[arg(long, global = true)]
    alpha: Option<f64>,
    #[arg(long, global = true)]
    beta: Option<f64>,
    #[arg(long = "c-e", alias = "c_e", global = true)]
    c_e: Option<f64>,
    /// Number of ISPs
    #[arg(long = "N", global = true)]
    n: Option<usize>,
}

impl ParamArgs {
    fn resolve(&self) -> netneut::Result<MarketParams> {
        let mut p = match &self.config {
            Some(path) => load_config(path, MarketParams::default())?,
            None => MarketParams::default(),
        };
        let overrides = [
            (&mut p.a, self.a),
            (&mut p.theta, self.theta),
            (&mut p.v, self.v),
            (&mut p.w, self.w),
            (&mut p.k, self.k),
            (&mut p.alpha, self.alpha),
            (&mut p.beta, self.beta),
            (&mut p.c_e, self.c_e),
        ];
        for (slot, value) in overrides {
            if let Some(value) = value {
                *slot = value;
            }
        }
        if let Some(n) = self.n {
            p.n = n;
        }
        p.validate()
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Equilibrium of one regime, at the free-entry CP count unless --M is given
    Eval {
        #[arg(long)]
        regime: Regime,
        /// Number of CPs
        #[arg(long = "M")]
        m: Option<usize>,
    },
    /// Free-entry CP count
    Entry {
        /// Restrict to one regime
        #[arg(long)]
        regime: Option<Regime>,
    },
    /// Sweep one parameter over a linear grid
    Sweep {
        #[arg(long)]
        param: Axis,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        /// Comma-separated regimes
        #[arg(long, value_delimiter = ',', default_value = "neutral,nonneutral")]
        regimes: Vec<Regime>,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Check equilibria against the numerical best-response oracle
    Verify {
        /// Restrict to one regime
        #[arg(long)]
        regime: Option<Regime>,
        /// Number of CPs; defaults to the free-entry count
        #[arg(long = "M")]
        m: Option<usize>,
        /// First-order-condition residual tolerance
        #[arg(long)]
        tol_foc: Option<f64>,
        /// Relative deviation-gain tolerance
        #[arg(long)]
        tol_gain: Option<f64>,
    },
    /// Write every figure dataset and a manifest
    Figures {
        #[arg(long)]
        out: PathBuf,
    },
    /// Both regimes side by side
    Compare,
}

fn print_json<T: Serialize>(value: &T) -> netneut::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::Io {
            path: "<stdout>".into(),
            source: e,
        }),
        _ => Ok(()),
    }
}

fn regimes(selected: Option<Regime>) -> Vec<Regime> {
    selected.map_or_else(|| Regime::ALL.to_vec(), |r| vec![r])
}

fn run(cli: Cli) -> netneut::Result<u8> {
    let params = cli.params.resolve()?;
    match cli.command {
        Command::Eval { regime, m } => {
            let outcome = match m {
                Some(m) => MarketOutcome::with_cps(&params, regime, m)?,
                None => market_outcome(&params, regime)?,
            };
            print_json(&outcome)?;
        }
        Command::Entry { regime } => {
            let results = regimes(regime)
                .into_iter()
                .map(|r| entry_count(&params, r))
                .collect::<netneut::Result<Vec<_>>>()?;
            print_json(&results)?;
        }
        Command::Sweep {
            param,
            from,
            to,
            steps,
            regimes,
            out,
            format,
        } => {
            let spec = SweepSpec {
                axis: param,
                values: SweepValues::Grid { from, to, steps },
                regimes,
            };
            let rows = sweep(&params, &spec)?;
            let text = match format {
                Format::Csv => sweep_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
            };
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| Error::Io { path, source: e })?,
                None => print!("{text}"),
            }
        }
        Command::Verify {
            regime,
            m,
            tol_foc,
            tol_gain,
        } => {
            let mut tol = Tolerances::default();
            if let Some(x) = tol_foc {
                tol.foc = x;
            }
            if let Some(x) = tol_gain {
                tol.gain_rel = x;
            }
            let mut reports = Vec::new();
            for regime in regimes(regime) {
                let m = match m {
                    Some(m) => m,
                    None => match entry_count(&params, regime)?.entered {
                        0 => {
                            return Err(Error::InvalidArgument(format!(
                                "no CP enters under the {regime} regime; pass --M"
                            )))
                        }
                        m => m,
                    },
                };
                reports.push(verify_equilibrium(&params, m, regime, &tol)?);
            }
            print_json(&reports)?;
            if reports.iter().any(|r| !r.passed) {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
        }
        Command::Figures { out } => {
            let manifest = reproduce_figures(&params, &out)?;
            print_json(&manifest)?;
        }
        Command::Compare => print_json(&compare_regimes(&params)?)?,
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
