//! Front end for `mathieu-core`: evaluation, coefficient export, the claims
//! report and parameter scans.

pub mod claims;
mod error;
pub mod eval;
pub mod report;
pub mod scan;

pub use error::{CliError, CliResult};

/// Fixed 17-significant-digit scientific notation used by every output format.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}
