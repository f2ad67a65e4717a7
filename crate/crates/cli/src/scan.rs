use std::io::Write;

use mathieu_core::series::{eval_alternating, eval_mathieu_direct};
use mathieu_core::SeriesParams;
use rayon::prelude::*;
use serde::Serialize;

use crate::eval::Series;
use crate::{fmt_num, CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub h: f64,
    pub value: f64,
    pub half_width: f64,
}

#[derive(Serialize)]
struct CsvRow {
    h: String,
    value: String,
    half_width: String,
}

/// Largest increase between consecutive rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monotonicity {
    pub max_upward_jump: f64,
    /// Sum of the two half-widths at the location of `max_upward_jump`.
    pub combined_half_width: f64,
    /// Some consecutive pair has disjoint enclosures with the later one above.
    pub certified_increase: bool,
}

pub fn grid(h_min: f64, h_max: f64, steps: usize) -> CliResult<Vec<f64>> {
    if steps < 2 {
        return Err(CliError::Usage(format!("--steps must be at least 2, got {steps}")));
    }
    if !(h_min >= 0.0) || !(h_min < h_max) || !h_max.is_finite() {
        return Err(CliError::Usage(format!(
            "need 0 <= h-min < h-max, got [{h_min}, {h_max}]"
        )));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i + 1 == steps { h_max } else { h_min + (h_max - h_min) * (i as f64 / last) })
        .collect())
}

pub fn run_scan(series: Series, h_min: f64, h_max: f64, steps: usize, tol: f64) -> CliResult<Vec<ScanRow>> {
    let hs = grid(h_min, h_max, steps)?;
    let eval = match series {
        Series::F => eval_mathieu_direct,
        Series::S => eval_alternating,
        Series::Fmu => return Err(CliError::Usage("scan supports F and S".into())),
    };
    hs.par_iter()
        .map(|&h| {
            let r = eval(&SeriesParams::new(h, tol))?;
            Ok(ScanRow {
                h,
                value: r.value,
                half_width: r.half_width(),
            })
        })
        .collect()
}

pub fn monotonicity(rows: &[ScanRow]) -> Monotonicity {
    let mut m = Monotonicity {
        max_upward_jump: f64::NEG_INFINITY,
        combined_half_width: 0.0,
        certified_increase: false,
    };
    for w in rows.windows(2) {
        let jump = w[1].value - w[0].value;
        let combined = w[0].half_width + w[1].half_width;
        if jump > m.max_upward_jump {
            m.max_upward_jump = jump;
            m.combined_half_width = combined;
        }
        if jump > combined {
            m.certified_increase = true;
        }
    }
    m
}

pub fn write_csv<W: Write>(rows: &[ScanRow], mut out: W) -> CliResult<()> {
    {
        let mut w = csv::Writer::from_writer(&mut out);
        for r in rows {
            w.serialize(CsvRow {
                h: fmt_num(r.h),
                value: fmt_num(r.value),
                half_width: fmt_num(r.half_width),
            })?;
        }
        w.flush()?;
    }
    let m = monotonicity(rows);
    writeln!(
        out,
        "# monotonicity: max_upward_jump={} combined_half_width={} certified_increase={}",
        fmt_num(m.max_upward_jump),
        fmt_num(m.combined_half_width),
        m.certified_increase
    )?;
    Ok(())
}
