//! Semi-infinite quadrature for exponentially damped oscillatory integrands,
//! and the two integral representations of Mathieu's series:
//!
//! ```text
//!   2√h F(h) = ∫₀^∞ x/(eˣ−1) · sin(√h x) dx
//!   F(h)     = 1/(2h) + 1/(2h²) ∫₀^∞ f″(x) (1 − cos √h x) dx
//! ```
//!
//! The integral is truncated at `X`, split into panels no longer than half an
//! oscillation period, and each panel gets a fixed Gauss–Legendre rule. The
//! panel length is halved per refinement level; the enclosure is the finest
//! value widened by twice the last refinement difference, the truncated tail
//! and a rounding slack.

use std::f64::consts::PI;

use crate::kernel::{bose_kernel, fermi_kernel, fsecond_closed};
use crate::series::rounding_slack;
use crate::{CompensatedSum, Enclosure, Error, Method, Result, SumResult};

/// Longest panel used when the integrand does not oscillate quickly.
pub const MAX_PANEL: f64 = 2.0;
pub const DEFAULT_NODES: usize = 20;
pub const DEFAULT_REFINEMENT_LEVELS: u32 = 4;
/// Refinement disagreement beyond `NONCONVERGENCE_FACTOR × tol` is an error.
pub const NONCONVERGENCE_FACTOR: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    /// Upper integration limit `X`.
    pub truncation: f64,
    /// Panel length at the coarsest level.
    pub panel_length: f64,
    pub nodes_per_panel: usize,
    /// Maximum number of halvings after the coarsest level.
    pub refinement_levels: u32,
    pub tol: f64,
    /// Constant `C` in the integrand envelope `|g(x)| ≤ C (x+1) e^{−x}` beyond `X`.
    pub tail_envelope: f64,
}

impl QuadConfig {
    /// Configuration for an integrand oscillating like `sin(ωx)` (`ω = 0` for none).
    pub fn for_frequency(omega: f64, tol: f64) -> Self {
        let panel = if omega > 0.0 {
            (PI / omega).min(MAX_PANEL)
        } else {
            MAX_PANEL
        };
        Self {
            truncation: truncation_for(tol),
            panel_length: panel,
            nodes_per_panel: DEFAULT_NODES,
            refinement_levels: DEFAULT_REFINEMENT_LEVELS,
            tol,
            tail_envelope: 2.0,
        }
    }

    /// `∫_X^∞ C (x+1) e^{−x} dx = C (X+2) e^{−X}`.
    pub fn tail_bound(&self) -> f64 {
        let x = self.truncation;
        self.tail_envelope * (x + 2.0) * (-x).exp()
    }
}

/// Smallest `X ≥ 50` (in steps of 5) with `X e^{−X} < tol/10`.
pub fn truncation_for(tol: f64) -> f64 {
    let mut x: f64 = 50.0;
    while x * (-x).exp() >= tol / 10.0 && x < 700.0 {
        x += 5.0;
    }
    x
}

/// Gauss–Legendre nodes and weights on `[−1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // three-term recurrence for P_n and its derivative
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pnm1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pnm1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

struct Level {
    value: f64,
    magnitude: f64,
    panels: u64,
}

fn integrate_level<F: Fn(f64) -> f64>(g: &F, cfg: &QuadConfig, rule: &(Vec<f64>, Vec<f64>), panel: f64) -> Level {
    let panels = (cfg.truncation / panel).ceil().max(1.0) as u64;
    let width = cfg.truncation / panels as f64;
    let half = 0.5 * width;
    let mut acc = CompensatedSum::new();
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * width;
        for (t, w) in rule.0.iter().zip(&rule.1) {
            acc.add(w * half * g(mid + half * t));
        }
    }
    Level {
        value: acc.value(),
        magnitude: acc.magnitude(),
        panels,
    }
}

/// `∫₀^∞ g(x) dx` for `g` bounded by `C x e^{−θx}`, `θ ≥ 1/2`.
pub fn quad_semiinfinite<F: Fn(f64) -> f64>(integrand: F, cfg: &QuadConfig) -> Result<SumResult> {
    if !(cfg.truncation > 0.0 && cfg.panel_length > 0.0 && cfg.nodes_per_panel > 0 && cfg.tol > 0.0) {
        return Err(Error::Precondition(format!("invalid quadrature configuration {cfg:?}")));
    }
    let rule = gauss_legendre(cfg.nodes_per_panel);
    let mut panel = cfg.panel_length;
    let mut finest = integrate_level(&integrand, cfg, &rule, panel);
    let mut diff = f64::INFINITY;
    for _ in 0..cfg.refinement_levels.max(1) {
        panel *= 0.5;
        let next = integrate_level(&integrand, cfg, &rule, panel);
        diff = (next.value - finest.value).abs();
        finest = next;
        if 2.0 * diff <= cfg.tol {
            break;
        }
    }
    if diff > NONCONVERGENCE_FACTOR * cfg.tol {
        return Err(Error::NonConvergence {
            disagreement: diff,
            tol: cfg.tol,
        });
    }
    let radius = 2.0 * diff + cfg.tail_bound() + rounding_slack(finest.value.abs() + finest.magnitude);
    let enclosure = Enclosure::around(finest.value, radius);
    Ok(SumResult::new(enclosure, finest.panels, Method::Integral))
}

fn require_positive_h(h: f64) -> Result<()> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Domain(format!(
            "integral representations need h > 0, got {h}"
        )));
    }
    Ok(())
}

fn require_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol <= crate::series::MAX_TOL) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            reason: "must lie in (0, 1e-2]",
        });
    }
    Ok(())
}

/// `F(h) = (1/(2√h)) ∫₀^∞ x/(eˣ−1) sin(√h x) dx`.
pub fn integral_f(h: f64, tol: f64) -> Result<SumResult> {
    require_positive_h(h)?;
    require_tol(tol)?;
    let omega = h.sqrt();
    let scale = 0.5 / omega;
    let cfg = QuadConfig::for_frequency(omega, tol / scale);
    let r = quad_semiinfinite(|x| bose_kernel(x) * (omega * x).sin(), &cfg)?;
    Ok(SumResult::new(r.enclosure.scale(scale), r.terms_used, Method::Integral))
}

/// `S(h) = (1/(2√h)) ∫₀^∞ x/(eˣ+1) sin(√h x) dx`.
pub fn integral_s(h: f64, tol: f64) -> Result<SumResult> {
    require_positive_h(h)?;
    require_tol(tol)?;
    let omega = h.sqrt();
    let scale = 0.5 / omega;
    let cfg = QuadConfig::for_frequency(omega, tol / scale);
    let r = quad_semiinfinite(|x| fermi_kernel(x) * (omega * x).sin(), &cfg)?;
    Ok(SumResult::new(r.enclosure.scale(scale), r.terms_used, Method::Integral))
}

/// `F(h) = 1/(2h) + (1/(2h²)) ∫₀^∞ f″(x)(1 − cos √h x) dx`, with `1 − cos θ = 2 sin²(θ/2)`.
pub fn integral_f_parts(h: f64, tol: f64) -> Result<SumResult> {
    require_positive_h(h)?;
    require_tol(tol)?;
    let omega = h.sqrt();
    let scale = 0.5 / (h * h);
    let cfg = QuadConfig::for_frequency(omega, tol / scale);
    let r = quad_semiinfinite(
        |x| {
            let s = (0.5 * omega * x).sin();
            2.0 * fsecond_closed(x) * s * s
        },
        &cfg,
    )?;
    let enclosure = r.enclosure.scale(scale) + Enclosure::point(0.5 / h);
    Ok(SumResult::new(enclosure, r.terms_used, Method::IntegralParts))
}
