//! Registry of the published assertions about `F`, `S` and the Bose kernel,
//! each paired with a recomputation. Verdicts come from the numbers.

use std::f64::consts::PI;

use mathieu_core::bounds::{check_bound, BoundKind, BoundStatus};
use mathieu_core::kernel::{
    f_closed, finite_difference, fprime_as_printed, fprime_closed, fsecond_as_printed_expanded,
    fsecond_as_printed_rational, fsecond_closed, Derivative,
};
use mathieu_core::powser::{
    all_negative_from, format_rational, fprime_limit_at_zero, fsecond_numerator_series, rational,
    rational_to_f64, Rational,
};
use mathieu_core::series::{eval_alternating, eval_mathieu_direct};
use mathieu_core::zeta::{eta_int, eval_expansion, expansion_coeff, zeta_int};
use mathieu_core::{Enclosure, SeriesParams};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::eval::printed_bracket;
use crate::scan::{monotonicity, run_scan};
use crate::{eval::Series, fmt_num, CliResult};

/// Gap required between two enclosures, relative to their width, before a
/// comparison counts as separated.
pub const SEPARATION_FACTOR: f64 = 1e3;
pub const CLAIMS_TOL: f64 = 1e-12;
const FD_STEP: f64 = 1e-3;
/// Agreement required between a corrected derivative and finite differences.
pub const CHAIN_TOL: f64 = 1e-6;
const PRINTED_S_SUP: f64 = 0.9015;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    RefutedAsPrinted,
    VerifiedWithCorrection,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::RefutedAsPrinted => "refuted-as-printed",
            Status::VerifiedWithCorrection => "verified-with-correction",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_num(self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Value {
    Number { value: Num },
    Count { value: u64 },
    Interval { lo: Num, hi: Num },
    Rational { value: String },
    /// Distance between two intervals and the larger of their widths.
    Separation { gap: Num, width: Num },
    /// Exact comparison of a computed rational with the printed one.
    Identity { computed: String, printed: String, equal: bool },
}

impl Value {
    fn number(x: f64) -> Self {
        Value::Number { value: Num(x) }
    }

    fn interval(e: &Enclosure) -> Self {
        Value::Interval {
            lo: Num(e.lo()),
            hi: Num(e.hi()),
        }
    }

    fn separation(gap: f64, width: f64) -> Self {
        Value::Separation {
            gap: Num(gap),
            width: Num(width),
        }
    }

    fn identity(computed: &Rational, printed: &Rational) -> Self {
        Value::Identity {
            computed: format_rational(computed),
            printed: format_rational(printed),
            equal: computed == printed,
        }
    }

    /// Disjoint intervals, or an exact identity.
    pub fn is_decisive(&self) -> bool {
        match self {
            Value::Separation { gap, .. } => gap.0 > 0.0,
            Value::Identity { .. } => true,
            _ => false,
        }
    }

    /// Disjoint by at least [`SEPARATION_FACTOR`] widths.
    pub fn is_well_separated(&self) -> bool {
        match self {
            Value::Separation { gap, width } => gap.0 > 0.0 && gap.0 >= SEPARATION_FACTOR * width.0,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence {
    pub key: String,
    pub description: String,
    #[serde(flatten)]
    pub value: Value,
}

fn ev(key: impl Into<String>, description: impl Into<String>, value: Value) -> Evidence {
    Evidence {
        key: key.into(),
        description: description.into(),
        value,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimVerdict {
    pub id: String,
    pub reference: String,
    pub statement: String,
    pub status: Status,
    /// How the verdict was reached: `certified`, `exact`, `finite differences` or `grid evidence`.
    pub basis: String,
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subclaims: Vec<ClaimVerdict>,
}

impl ClaimVerdict {
    /// A decided verdict carries at least one decisive comparison.
    pub fn is_well_formed(&self) -> bool {
        let own = self.status == Status::Inconclusive || self.evidence.iter().any(|e| e.value.is_decisive());
        own && self.subclaims.iter().all(ClaimVerdict::is_well_formed)
    }

    pub fn evidence(&self, key: &str) -> Option<&Evidence> {
        self.evidence.iter().find(|e| e.key == key)
    }

    pub fn subclaim(&self, id: &str) -> Option<&ClaimVerdict> {
        self.subclaims.iter().find(|c| c.id == id)
    }
}

struct Claim {
    id: &'static str,
    reference: &'static str,
    statement: &'static str,
    assess: fn() -> CliResult<Assessment>,
}

struct Assessment {
    status: Status,
    basis: &'static str,
    evidence: Vec<Evidence>,
    subclaims: Vec<ClaimVerdict>,
}

const REGISTRY: [Claim; 10] = [
    Claim {
        id: "C1",
        reference: "upper bound of the Mathieu conjecture",
        statement: "F(h) < 1/(2h) for h > 0",
        assess: c1,
    },
    Claim {
        id: "C2",
        reference: "refined upper bound on [0, 2)",
        statement: "F(h) < 1/(1+h)^2 + 2/(4+h)^2 + 1/(2(4+h)) for 0 <= h < 2",
        assess: c2,
    },
    Claim {
        id: "C3",
        reference: "lower bound from the kernel representation",
        statement: "F(h) > 1/(2h) - 1/(6h^2) for h > 0",
        assess: c3,
    },
    Claim {
        id: "C4",
        reference: "printed closed form of the derivative of f",
        statement: "f'(x) as printed equals the derivative of f",
        assess: c4,
    },
    Claim {
        id: "C5",
        reference: "printed second derivative, expanded and rational forms",
        statement: "f''(x) as printed equals the second derivative of f",
        assess: c5,
    },
    Claim {
        id: "C6",
        reference: "Taylor expansion of the second-derivative numerator",
        statement: "numerator = -x^5/10 [1 + x + 23/126 x^2 + 1/14 x^3 + ...]",
        assess: c6,
    },
    Claim {
        id: "C7",
        reference: "expansion of F in Riemann zeta values",
        statement: "2F(h) = zeta(2) - h zeta(4)/3! + h^2 zeta(6)/5! - ...",
        assess: c7,
    },
    Claim {
        id: "C8",
        reference: "comparison with available estimates",
        statement: "F(h) > pi^2/6 for small h",
        assess: c8,
    },
    Claim {
        id: "C9",
        reference: "alternating series, second open problem",
        statement: "S(h) is decreasing with range [0, 0.9015]",
        assess: c9,
    },
    Claim {
        id: "C10",
        reference: "limit of the first derivative at the origin",
        statement: "f'(0+) = 1/6",
        assess: c10,
    },
];

/// Evaluates every registry entry, concurrently, in registry order.
pub fn run_claims() -> CliResult<Vec<ClaimVerdict>> {
    REGISTRY
        .par_iter()
        .map(|c| {
            let a = (c.assess)()?;
            Ok(ClaimVerdict {
                id: c.id.into(),
                reference: c.reference.into(),
                statement: c.statement.into(),
                status: a.status,
                basis: a.basis.into(),
                evidence: a.evidence,
                subclaims: a.subclaims,
            })
        })
        .collect()
}

pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let ratio = hi / lo;
    (0..n)
        .map(|i| match i {
            0 => lo,
            i if i + 1 == n => hi,
            i => lo * ratio.powf(i as f64 / (n - 1) as f64),
        })
        .collect()
}

pub fn bound_grid(kind: BoundKind) -> Vec<f64> {
    match kind {
        BoundKind::Refined => (0..40).map(|i| 2.0 * i as f64 / 40.0).collect(),
        _ => log_grid(1e-2, 1e4, 60),
    }
}

fn bound_claim(kind: BoundKind) -> CliResult<Assessment> {
    let checks = bound_grid(kind)
        .par_iter()
        .map(|&h| check_bound(h, kind, CLAIMS_TOL))
        .collect::<mathieu_core::Result<Vec<_>>>()?;
    let count = |s: BoundStatus| checks.iter().filter(|c| c.status == s).count() as u64;
    let (holds, fails, undecided) = (count(BoundStatus::Holds), count(BoundStatus::Fails), count(BoundStatus::Undecided));
    let tightest = checks
        .iter()
        .min_by(|a, b| a.margin().total_cmp(&b.margin()))
        .expect("nonempty grid");
    let widest = checks.iter().map(|c| c.series_enclosure.width()).fold(0.0, f64::max);
    let status = if fails > 0 {
        Status::RefutedAsPrinted
    } else if undecided > 0 {
        Status::Inconclusive
    } else {
        Status::Verified
    };
    let evidence = vec![
        ev("grid-points", format!("points checked with check_bound({})", kind.as_str()), Value::Count { value: checks.len() as u64 }),
        ev("holds", "points where the bound holds", Value::Count { value: holds }),
        ev("fails", "points where the bound fails", Value::Count { value: fails }),
        ev("undecided", "points undecided after refinement", Value::Count { value: undecided }),
        ev("tightest-h", "h with the smallest margin", Value::number(tightest.h)),
        ev("tightest-enclosure", "eval_mathieu_direct enclosure at tightest-h", Value::interval(&tightest.series_enclosure)),
        ev("tightest-bound", "bound value at tightest-h", Value::number(tightest.bound_value)),
        ev(
            "tightest-separation",
            "gap between bound and enclosure at tightest-h, against its width",
            Value::separation(tightest.margin(), tightest.series_enclosure.width()),
        ),
        ev("max-width", "widest enclosure on the grid", Value::number(widest)),
    ];
    Ok(Assessment {
        status,
        basis: "certified",
        evidence,
        subclaims: vec![],
    })
}

fn c1() -> CliResult<Assessment> {
    bound_claim(BoundKind::HalfInverse)
}

fn c2() -> CliResult<Assessment> {
    bound_claim(BoundKind::Refined)
}

fn c3() -> CliResult<Assessment> {
    bound_claim(BoundKind::Lower)
}

/// Points where the derivative chain is sampled.
pub fn chain_points() -> Vec<f64> {
    (1..=20).map(|i| 0.25 * i as f64).collect()
}

/// Compares `candidate` with a finite difference of `base` at `x`.
fn fd_comparison(
    base: fn(f64) -> f64,
    candidate: fn(f64) -> f64,
    x: f64,
    key: &str,
    label: &str,
) -> CliResult<(Vec<Evidence>, bool)> {
    let d = finite_difference(base, x, Derivative::First, FD_STEP)?;
    let c = candidate(x);
    let fd_box = Enclosure::around(d.value, d.error_estimate);
    let gap = if fd_box.contains(c) { -(c - d.value).abs() } else { fd_box.separation(&Enclosure::point(c)) };
    let width = fd_box.width();
    let sep = Value::separation(gap, width);
    // finite differences carry no rigorous bound, so demand a wide margin
    let decisive = sep.is_well_separated();
    Ok((
        vec![
            ev(format!("{key}-fd"), format!("finite difference at x = {x}"), Value::interval(&fd_box)),
            ev(format!("{key}-value"), format!("{label} at x = {x}"), Value::number(c)),
            ev(format!("{key}-separation"), format!("{label} against the finite difference"), sep),
        ],
        decisive,
    ))
}

/// Sub-claim: `corrected` matches finite differences of `base` at every chain point.
fn corrected_chain(id: &str, statement: &str, base: fn(f64) -> f64, corrected: fn(f64) -> f64) -> CliResult<ClaimVerdict> {
    let (mut worst, mut scale): (f64, f64) = (0.0, 0.0);
    for x in chain_points() {
        let d = finite_difference(base, x, Derivative::First, FD_STEP)?;
        worst = worst.max((d.value - corrected(x)).abs());
        scale = scale.max(d.error_estimate);
    }
    // at x = 1 the printed and corrected forms are far apart; the corrected one sits inside
    let (evidence_x1, _) = fd_comparison(base, corrected, 1.0, "x1", "corrected form")?;
    let status = if worst < CHAIN_TOL { Status::VerifiedWithCorrection } else { Status::Inconclusive };
    let mut evidence = vec![
        ev("points", "chain points 0.25, 0.5, ..., 5", Value::Count { value: 20 }),
        ev("max-error", "max |finite difference - corrected form|", Value::number(worst)),
        ev(
            "error-margin",
            "1e-6 tolerance minus max-error, against the largest finite-difference error estimate",
            Value::separation(CHAIN_TOL - worst, 2.0 * scale),
        ),
    ];
    evidence.extend(evidence_x1);
    Ok(ClaimVerdict {
        id: id.into(),
        reference: "corrected form".into(),
        statement: statement.into(),
        status,
        basis: "finite differences".into(),
        evidence,
        subclaims: vec![],
    })
}

fn c4() -> CliResult<Assessment> {
    let (evidence, decisive) = fd_comparison(f_closed, fprime_as_printed, 1.0, "printed", "printed f'")?;
    let correction = corrected_chain("C4.corrected", "derivative of f equals the corrected f'", f_closed, fprime_closed)?;
    Ok(Assessment {
        status: if decisive { Status::RefutedAsPrinted } else { Status::Inconclusive },
        basis: "finite differences",
        evidence,
        subclaims: vec![correction],
    })
}

fn c5() -> CliResult<Assessment> {
    let (mut evidence, expanded) =
        fd_comparison(fprime_closed, fsecond_as_printed_expanded, 1.0, "expanded", "printed expanded f''")?;
    let (more, rational_form) =
        fd_comparison(fprime_closed, fsecond_as_printed_rational, 1.0, "rational", "printed rational f''")?;
    evidence.extend(more);
    let correction =
        corrected_chain("C5.corrected", "derivative of f' equals the corrected f''", fprime_closed, fsecond_closed)?;
    Ok(Assessment {
        status: if expanded && rational_form { Status::RefutedAsPrinted } else { Status::Inconclusive },
        basis: "finite differences",
        evidence,
        subclaims: vec![correction],
    })
}

/// Highest order of the exact numerator series used for the sign check.
pub const SIGN_ORDER: usize = 20;

fn c6() -> CliResult<Assessment> {
    let series = fsecond_numerator_series(8)?;
    let (k, lead, bracket) = series.normalized().expect("numerator is nonzero");
    let (printed_lead, printed_bracket) = printed_bracket();
    let lead_gap = rational_to_f64(&(&lead - &printed_lead)).abs();
    let mut evidence = vec![
        ev("leading-order", "power of the leading term", Value::Count { value: k as u64 }),
        ev("leading", "leading coefficient, exact", Value::identity(&lead, &printed_lead)),
        ev("leading-separation", "|computed - printed| leading coefficient, exact", Value::separation(lead_gap, 0.0)),
    ];
    for i in 2..bracket.len().min(printed_bracket.len()) {
        evidence.push(ev(
            format!("bracket-x{i}"),
            format!("bracket coefficient of x^{i}, exact"),
            Value::identity(&bracket[i], &printed_bracket[i]),
        ));
    }
    let status = if lead == printed_lead { Status::Verified } else { Status::RefutedAsPrinted };

    let wide = fsecond_numerator_series(SIGN_ORDER)?;
    let exact_negative = all_negative_from(&wide, 5);
    let samples: Vec<f64> = (1..=400).map(|i| 0.1 * i as f64).collect();
    let max_sampled = samples.iter().map(|&x| fsecond_closed(x)).fold(f64::NEG_INFINITY, f64::max);
    let sign = ClaimVerdict {
        id: "C6.sign".into(),
        reference: "sign of the second derivative".into(),
        statement: "f''(x) < 0 for x > 0".into(),
        status: if exact_negative && max_sampled < 0.0 { Status::Verified } else { Status::Inconclusive },
        basis: "exact".into(),
        evidence: vec![
            ev(
                "negative-coefficients",
                format!("numerator coefficients x^5..x^{SIGN_ORDER} all negative"),
                Value::Identity {
                    computed: exact_negative.to_string(),
                    printed: "true".into(),
                    equal: exact_negative,
                },
            ),
            ev("leading", "leading numerator coefficient", Value::Rational { value: format_rational(&lead) }),
            ev("samples", "closed-form f'' samples on (0, 40]", Value::Count { value: samples.len() as u64 }),
            ev("max-sampled", "largest sampled f''", Value::number(max_sampled)),
        ],
        subclaims: vec![],
    };
    Ok(Assessment {
        status,
        basis: "exact",
        evidence,
        subclaims: vec![sign],
    })
}

/// `h` values where the corrected expansion is checked against direct sums.
pub const EXPANSION_CHECKS: [f64; 5] = [0.01, 0.1, 0.25, 0.5, 0.9];

fn c7() -> CliResult<Assessment> {
    let f0 = eval_mathieu_direct(&SeriesParams::new(0.0, CLAIMS_TOL))?;
    let first = expansion_coeff(1)?;
    let point_gap = |x: f64| f0.enclosure.separation(&Enclosure::point(x));
    let evidence = vec![
        ev("direct-F0", "eval_mathieu_direct enclosure of F(0)", Value::interval(&f0.enclosure)),
        ev("printed-first", "printed first term zeta(2)", Value::number(first.as_printed)),
        ev(
            "printed-first-separation",
            "printed first term against F(0)",
            Value::separation(point_gap(first.as_printed), f0.enclosure.width()),
        ),
        ev("printed-halved-first", "printed first term zeta(2)/2", Value::number(first.as_printed_halved)),
        ev(
            "printed-halved-separation",
            "halved printed first term against F(0)",
            Value::separation(point_gap(first.as_printed_halved), f0.enclosure.width()),
        ),
        ev("corrected-first", "corrected first term zeta(3)", Value::interval(&first.corrected_enclosure)),
    ];
    let refuted = evidence.iter().filter(|e| e.key.ends_with("separation")).all(|e| e.value.is_decisive());

    let mut sub = Vec::new();
    let mut all_overlap = true;
    for &h in &EXPANSION_CHECKS {
        let d = eval_mathieu_direct(&SeriesParams::new(h, 1e-10))?;
        let e = eval_expansion(h, 1e-10)?;
        all_overlap &= d.enclosure.overlaps(&e.enclosure);
        sub.push(ev(format!("direct-h{h}"), format!("eval_mathieu_direct at h = {h}"), Value::interval(&d.enclosure)));
        sub.push(ev(format!("expansion-h{h}"), format!("eval_expansion at h = {h}"), Value::interval(&e.enclosure)));
    }
    let z3 = zeta_int(3, CLAIMS_TOL)?;
    let joint = f0.enclosure.overlaps(&z3.enclosure);
    sub.push(ev("zeta3", "zeta_int(3), the corrected value at h = 0", Value::interval(&z3.enclosure)));
    sub.push(ev(
        "halved-vs-zeta3",
        "halved printed first term against zeta_int(3)",
        Value::separation(
            z3.enclosure.separation(&Enclosure::point(first.as_printed_halved)),
            z3.enclosure.width(),
        ),
    ));
    let corrected = ClaimVerdict {
        id: "C7.corrected".into(),
        reference: "expansion in odd zeta values".into(),
        statement: "F(h) = sum (-1)^(m-1) m zeta(2m+1) h^(m-1) for 0 <= h < 1".into(),
        status: if all_overlap && joint { Status::Verified } else { Status::Inconclusive },
        basis: "certified".into(),
        evidence: sub,
        subclaims: vec![],
    };
    Ok(Assessment {
        status: if refuted { Status::RefutedAsPrinted } else { Status::Inconclusive },
        basis: "certified",
        evidence,
        subclaims: vec![corrected],
    })
}

fn c8() -> CliResult<Assessment> {
    let target = PI * PI / 6.0;
    let hs: Vec<f64> = (0..=50).map(|i| 0.5 * i as f64 / 50.0).collect();
    let rs = hs
        .par_iter()
        .map(|&h| eval_mathieu_direct(&SeriesParams::new(h, 1e-10)))
        .collect::<mathieu_core::Result<Vec<_>>>()?;
    let sup = rs.iter().map(|r| r.enclosure.hi()).fold(f64::NEG_INFINITY, f64::max);
    let width = rs.iter().map(|r| r.enclosure.width()).fold(0.0, f64::max);
    let z2 = zeta_int(2, CLAIMS_TOL)?;
    let z3 = zeta_int(3, CLAIMS_TOL)?;
    let gap = z2.enclosure.lo() - sup;
    let evidence = vec![
        ev("grid-points", "eval_mathieu_direct on 51 points of [0, 0.5]", Value::Count { value: hs.len() as u64 }),
        ev("sup-hi", "largest enclosure upper end on the grid", Value::number(sup)),
        ev("zeta3", "zeta_int(3)", Value::interval(&z3.enclosure)),
        ev("zeta2", "zeta_int(2) = pi^2/6", Value::interval(&z2.enclosure)),
        ev("pi2-over-6", "pi^2/6 in floating point", Value::number(target)),
        ev(
            "separation",
            "zeta_int(2) lower end minus sup-hi, against the widest enclosure",
            Value::separation(gap, width.max(z2.enclosure.width())),
        ),
    ];
    let refuted = evidence.last().is_some_and(|e| e.value.is_decisive());
    Ok(Assessment {
        status: if refuted { Status::RefutedAsPrinted } else { Status::Inconclusive },
        basis: "certified",
        evidence,
        subclaims: vec![],
    })
}

pub const C9_STEPS: usize = 201;
pub const C9_TOL: f64 = 1e-10;

fn c9() -> CliResult<Assessment> {
    let rows = run_scan(Series::S, 0.0, 50.0, C9_STEPS, C9_TOL)?;
    let m = monotonicity(&rows);
    let eta3 = eta_int(3, CLAIMS_TOL)?;
    let s0 = eval_alternating(&SeriesParams::new(0.0, C9_TOL))?;
    let first = rows[0];
    let last = rows[rows.len() - 1];
    let sup = rows.iter().map(|r| r.value).fold(f64::NEG_INFINITY, f64::max);
    let sup_hw = rows.iter().filter(|r| r.value == sup).map(|r| r.half_width).fold(0.0, f64::max);
    let (inf_row, inf) = rows
        .iter()
        .map(|r| (r, r.value))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("nonempty scan");
    let sup_ok = (sup - PRINTED_S_SUP).abs() <= 5e-5 && sup - sup_hw <= eta3.enclosure.hi();
    let inf_ok = inf >= -inf_row.half_width;
    let lower_end = Enclosure::around(last.value, last.half_width);
    let upper_end = Enclosure::around(first.value, first.half_width);
    let evidence = vec![
        ev("grid-points", "eval_alternating on an even grid of [0, 50]", Value::Count { value: rows.len() as u64 }),
        ev("tol", "requested tolerance per point", Value::number(C9_TOL)),
        ev("sup", "largest value on the grid", Value::number(sup)),
        ev("eta3", "eta_int(3), the value at h = 0", Value::interval(&eta3.enclosure)),
        ev("S0", "eval_alternating enclosure at h = 0", Value::interval(&s0.enclosure)),
        ev("printed-sup", "printed upper end of the range", Value::number(PRINTED_S_SUP)),
        ev("sup-minus-printed", "sup - 0.9015", Value::number(sup - PRINTED_S_SUP)),
        ev("inf", "smallest value on the grid", Value::number(inf)),
        ev("max-upward-jump", "largest increase between neighbours", Value::number(m.max_upward_jump)),
        ev("jump-half-widths", "combined half-widths at that pair", Value::number(m.combined_half_width)),
        ev(
            "certified-increase",
            "some neighbour pair certifiably increases",
            Value::Identity {
                computed: m.certified_increase.to_string(),
                printed: "false".into(),
                equal: !m.certified_increase,
            },
        ),
        ev(
            "positive-end",
            "S(50) enclosure above 0",
            Value::separation(lower_end.lo(), lower_end.width()),
        ),
        ev(
            "ends-separation",
            "S(0) enclosure above S(50) enclosure",
            Value::separation(upper_end.lo() - lower_end.hi(), upper_end.width().max(lower_end.width())),
        ),
    ];
    let status = if m.certified_increase || !inf_ok {
        Status::RefutedAsPrinted
    } else if sup_ok {
        Status::Verified
    } else {
        Status::Inconclusive
    };
    Ok(Assessment {
        status,
        basis: "grid evidence",
        evidence,
        subclaims: vec![],
    })
}

fn c10() -> CliResult<Assessment> {
    let limit = fprime_limit_at_zero();
    let printed = rational(1, 6);
    let near = fprime_closed(1e-6);
    Ok(Assessment {
        status: if limit == printed { Status::Verified } else { Status::RefutedAsPrinted },
        basis: "exact",
        evidence: vec![
            ev("limit", "fprime_limit_at_zero, exact", Value::identity(&limit, &printed)),
            ev("near-zero", "closed-form f' at x = 1e-6", Value::number(near)),
        ],
        subclaims: vec![],
    })
}
