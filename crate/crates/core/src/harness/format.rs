//! Fixed-precision number formatting and CSV emission.

use std::fmt::Write as _;

use super::SweepRow;

pub const SWEEP_HEADER: &str = "axis,value,regime,M,t,c,p,q,uw,isp_profit,cp_profit";

/// Formats `x` with 6 significant digits, `%g` style: plain notation for
/// decimal exponents in `[-4, 6)`, scientific otherwise, trailing zeros
/// dropped. `NaN` and infinities print as `NaN`, `inf`, `-inf`.
pub fn sig6(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    // Rounding to 6 digits first fixes the exponent (9.999996 -> 1.00000e1).
    let sci = format!("{x:.5e}");
    let (mantissa, exponent) = sci.split_once('e').expect("exponent present");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-4..6).contains(&exponent) {
        let decimals = (5 - exponent).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Renders sweep rows as CSV. Rows carrying an error print `NaN` in every
/// result column.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        let result = if row.error.is_some() {
            vec![f64::NAN; 8]
        } else {
            vec![
                row.m as f64,
                row.t,
                row.c,
                row.p,
                row.q,
                row.uw,
                row.isp_profit_each,
                row.cp_profit_each,
            ]
        };
        write!(out, "{},{},{}", row.axis, sig6(row.value), row.regime).unwrap();
        for x in result {
            write!(out, ",{}", sig6(x)).unwrap();
        }
        out.push('\n');
    }
    out
}
