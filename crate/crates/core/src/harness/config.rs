//! `key = value` parameter files.
//!
//! Blank lines and lines starting with `#` are ignored. Keys are the
//! parameter names `a`, `theta`, `v`, `w`, `k`, `alpha`, `beta`, `c_e`, `N`.

use std::path::Path;

use super::Axis;
use crate::error::{Error, Result};
use crate::model::MarketParams;

/// Applies every assignment in `text` on top of `base`. The result is not
/// validated, so later overrides can still repair it.
pub fn parse_config(text: &str, base: MarketParams) -> Result<MarketParams> {
    let mut params = base;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |why: &str| Error::InvalidArgument(format!("config line {}: {why}: {raw:?}", lineno + 1));
        let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value"))?;
        let axis: Axis = key.trim().parse().map_err(|_| bad("unknown key"))?;
        let value: f64 = value.trim().parse().map_err(|_| bad("value is not a number"))?;
        params = axis
            .apply(params, value)
            .map_err(|_| bad("N must be a positive integer"))?;
    }
    Ok(params)
}

pub fn load_config(path: &Path, base: MarketParams) -> Result<MarketParams> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_config(&text, base)
}
