use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mathieu_cli::claims::run_claims;
use mathieu_cli::eval::{evaluate, render_coeffs, render_eval, Series};
use mathieu_cli::report::{render, Format};
use mathieu_cli::scan::{run_scan, write_csv};
use mathieu_cli::{CliError, CliResult};
use mathieu_core::series::DEFAULT_TOL;
use mathieu_core::Method;

#[derive(Parser, Debug)]
#[command(name = "mathieu", version, about = "Certified evaluation of Mathieu's series and related claims")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate F, S or Fmu at one h
    Eval {
        #[arg(value_enum)]
        series: SeriesArg,
        #[arg(value_enum)]
        method: Option<MethodArg>,
        #[arg(long = "method", value_enum, conflicts_with = "method")]
        method_flag: Option<MethodArg>,
        #[arg(long, allow_negative_numbers = true)]
        h: f64,
        /// Exponent for Fmu
        #[arg(long, allow_negative_numbers = true)]
        mu: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Exact Taylor coefficients of the second-derivative numerator
    Coeffs {
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Verify the registry of published claims
    Claims {
        #[arg(long, value_enum, default_value_t = FormatArg::Md)]
        format: FormatArg,
        /// Output file. Prints to stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate F or S on an even grid as CSV
    Scan {
        #[arg(value_enum)]
        series: SeriesArg,
        #[arg(long, allow_negative_numbers = true)]
        h_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        h_max: f64,
        /// Number of grid points, endpoints included
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesArg {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "Fmu", alias = "fmu")]
    Fmu,
}

impl From<SeriesArg> for Series {
    fn from(s: SeriesArg) -> Self {
        match s {
            SeriesArg::F => Series::F,
            SeriesArg::S => Series::S,
            SeriesArg::Fmu => Series::Fmu,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Direct,
    Integral,
    IntegralParts,
    Expansion,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Direct => Method::Direct,
            MethodArg::Integral => Method::Integral,
            MethodArg::IntegralParts => Method::IntegralParts,
            MethodArg::Expansion => Method::Expansion,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Md,
    Json,
    Csv,
}

fn write_out(out: Option<&PathBuf>, body: &[u8]) -> CliResult<()> {
    match out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            f.write_all(body)?;
            f.flush()?;
        }
        None => io::stdout().lock().write_all(body)?,
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Eval { series, method, method_flag, h, mu, tol } => {
            let method = method.or(method_flag).unwrap_or(MethodArg::Direct);
            let r = evaluate(series.into(), method.into(), h, mu, tol)?;
            print!("{}", render_eval(series.into(), h, mu, &r));
        }
        Command::Coeffs { order } => {
            if order < 5 {
                return Err(CliError::Usage(format!("--order must be at least 5, got {order}")));
            }
            print!("{}", render_coeffs(order)?);
        }
        Command::Claims { format, out } => {
            let format = match format {
                FormatArg::Md => Format::Md,
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            };
            let verdicts = run_claims()?;
            write_out(out.as_ref(), render(&verdicts, format)?.as_bytes())?;
        }
        Command::Scan { series, h_min, h_max, steps, tol, out } => {
            let rows = run_scan(series.into(), h_min, h_max, steps, tol)?;
            let mut body = Vec::new();
            write_csv(&rows, &mut body)?;
            write_out(out.as_ref(), &body)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mathieu: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
