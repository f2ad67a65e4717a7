use std::fmt::Write as _;

use mathieu_core::powser::{format_rational, fsecond_numerator_series, rational, Rational};
use mathieu_core::quad::{integral_f, integral_f_parts, integral_s};
use mathieu_core::series::{eval_alternating, eval_generalized, eval_mathieu_direct};
use mathieu_core::zeta::{eval_expansion, eval_expansion_alternating};
use mathieu_core::{Method, SeriesParams, SumResult};

use crate::{fmt_num, CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    F,
    S,
    Fmu,
}

impl Series {
    pub fn as_str(self) -> &'static str {
        match self {
            Series::F => "F",
            Series::S => "S",
            Series::Fmu => "Fmu",
        }
    }
}

pub fn evaluate(series: Series, method: Method, h: f64, mu: Option<f64>, tol: f64) -> CliResult<SumResult> {
    if mu.is_some() && series != Series::Fmu {
        return Err(CliError::Usage(format!("--mu only applies to Fmu, not {}", series.as_str())));
    }
    let params = SeriesParams::new(h, tol);
    let r = match (series, method) {
        (Series::F, Method::Direct) => eval_mathieu_direct(&params)?,
        (Series::F, Method::Integral) => integral_f(h, tol)?,
        (Series::F, Method::IntegralParts) => integral_f_parts(h, tol)?,
        (Series::F, Method::Expansion) => eval_expansion(h, tol)?,
        (Series::S, Method::Direct) => eval_alternating(&params)?,
        (Series::S, Method::Integral) => integral_s(h, tol)?,
        (Series::S, Method::Expansion) => eval_expansion_alternating(h, tol)?,
        (Series::Fmu, Method::Direct) => {
            let mu = mu.ok_or_else(|| CliError::Usage("Fmu needs --mu".into()))?;
            eval_generalized(&params.with_mu(mu))?
        }
        (s, m) => {
            return Err(CliError::Usage(format!(
                "method {m} is not available for series {}",
                s.as_str()
            )))
        }
    };
    Ok(r)
}

pub fn render_eval(series: Series, h: f64, mu: Option<f64>, r: &SumResult) -> String {
    let mut out = String::new();
    let unit = match r.method {
        Method::Integral | Method::IntegralParts => "panels",
        _ => "terms",
    };
    writeln!(out, "series: {}", series.as_str()).unwrap();
    writeln!(out, "method: {}", r.method).unwrap();
    writeln!(out, "h: {}", fmt_num(h)).unwrap();
    if let Some(mu) = mu {
        writeln!(out, "mu: {}", fmt_num(mu)).unwrap();
    }
    writeln!(out, "value: {}", fmt_num(r.value)).unwrap();
    writeln!(out, "enclosure: [{}, {}]", fmt_num(r.enclosure.lo()), fmt_num(r.enclosure.hi())).unwrap();
    writeln!(out, "width: {}", fmt_num(r.enclosure.width())).unwrap();
    writeln!(out, "{unit}: {}", r.terms_used).unwrap();
    out
}

/// Printed bracket `[1, 1, 23/126, 1/14]` with leading factor `-1/10`.
pub fn printed_bracket() -> (Rational, Vec<Rational>) {
    (
        rational(-1, 10),
        vec![rational(1, 1), rational(1, 1), rational(23, 126), rational(1, 14)],
    )
}

fn bracket_line(k: usize, lead: &Rational, bracket: &[Rational]) -> String {
    let mut terms = Vec::with_capacity(bracket.len());
    for (i, b) in bracket.iter().enumerate() {
        terms.push(match i {
            0 => format_rational(b),
            1 => format!("{}·x", format_rational(b)),
            _ => format!("{}·x^{i}", format_rational(b)),
        });
    }
    format!("{}·x^{k}·[{} + …]", format_rational(lead), terms.join(" + "))
}

pub fn render_coeffs(order: usize) -> CliResult<String> {
    let series = fsecond_numerator_series(order)?;
    let mut out = String::new();
    let listed: Vec<String> = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| format!("x^{k}: {}", format_rational(c)))
        .collect();
    writeln!(out, "{}", listed.join(", ")).unwrap();
    if let Some((k, lead, bracket)) = series.normalized() {
        writeln!(out, "normalized: {}", bracket_line(k, &lead, &bracket)).unwrap();
    }
    let (lead, bracket) = printed_bracket();
    writeln!(out, "printed:    {}", bracket_line(5, &lead, &bracket)).unwrap();
    Ok(out)
}
