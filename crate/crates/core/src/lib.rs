//! Equilibria of a two-sided market in which `N` ISPs sell access to users
//! and `M` content providers (CPs) earn per-click advertising revenue.
//!
//! Two regimes are modelled. Under the neutral regime ISPs charge users
//! only; under the non-neutral regime CPs also pay ISPs a per-click side
//! payment, chosen before user prices are set.
//!
//! - [`model`]: parameters, demand, profits and user welfare.
//! - [`equilibria`]: closed-form symmetric equilibria for a given `M`.
//! - [`entry`]: the CP entry game and the resulting market outcome.
//! - [`oracle`]: numerical best-response checks of a candidate equilibrium.
//! - [`harness`]: parameter sweeps, regime comparison, figure datasets.
//!
//! ```
//! use netneut::{market_outcome, MarketParams, Regime};
//!
//! let market = market_outcome(&MarketParams::default(), Regime::NonNeutral).unwrap();
//! assert_eq!(market.m, 67);
//! ```

pub mod entry;
pub mod equilibria;
pub mod error;
pub mod harness;
pub mod model;
pub mod numeric;
pub mod oracle;

pub use entry::{entry_count, market_outcome, EntryResult, MarketOutcome};
pub use equilibria::{equilibrium, EquilibriumPoint};
pub use error::{Error, Result};
pub use harness::{compare_regimes, reproduce_figures, sweep, Axis, RegimeComparison, SweepRow, SweepSpec};
pub use model::{MarketParams, Regime};
pub use oracle::{verify_equilibrium, verify_point, Tolerances, VerificationReport};
