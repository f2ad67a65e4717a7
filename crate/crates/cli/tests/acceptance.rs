//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::fs;
use std::process::{Command, ExitCode};
use std::time::Instant;

use mathieu_core::bounds::{check_bound, BoundKind, BoundStatus};
use mathieu_core::kernel::{
    f_closed, finite_difference, fprime_as_printed, fprime_closed, fsecond_as_printed_expanded,
    fsecond_as_printed_rational, fsecond_closed, Derivative,
};
use mathieu_core::powser::{bose_series, fprime_limit_at_zero, fsecond_numerator_series, rational, RationalSeries};
use mathieu_core::quad::{integral_f, integral_f_parts, quad_semiinfinite, QuadConfig};
use mathieu_core::series::{eval_alternating, eval_generalized, eval_mathieu_direct};
use mathieu_core::zeta::{eval_expansion, zeta_int};
use mathieu_core::SeriesParams;
use mathieu_cli::claims::{bound_grid, chain_points};
use serde_json::Value;

type Check = Result<String, String>;

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn ac1() -> Check {
    let tol = 1e-8;
    let mut failures = Vec::new();
    for h in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0] {
        let mut encs = vec![
            eval_mathieu_direct(&SeriesParams::new(h, tol)).map_err(e)?.enclosure,
            integral_f(h, tol).map_err(e)?.enclosure,
            integral_f_parts(h, tol).map_err(e)?.enclosure,
        ];
        if h < 1.0 {
            encs.push(eval_expansion(h, tol).map_err(e)?.enclosure);
        }
        for i in 0..encs.len() {
            for j in i + 1..encs.len() {
                if !encs[i].overlaps(&encs[j]) {
                    failures.push(format!("h={h} pair ({i},{j})"));
                }
            }
        }
    }
    ensure(failures.is_empty(), format!("7 h values, tol 1e-8, non-overlapping pairs: {failures:?}"))
}

fn ac2() -> Check {
    let mut tally = [0usize; 3];
    let mut points = 0;
    for (kind, grid) in [
        (BoundKind::HalfInverse, bound_grid(BoundKind::HalfInverse)),
        (BoundKind::Lower, bound_grid(BoundKind::Lower)),
        (BoundKind::Refined, bound_grid(BoundKind::Refined)),
    ] {
        for h in grid {
            points += 1;
            let c = check_bound(h, kind, 1e-12).map_err(e)?;
            tally[match c.status {
                BoundStatus::Holds => 0,
                BoundStatus::Fails => 1,
                BoundStatus::Undecided => 2,
            }] += 1;
        }
    }
    ensure(
        points == 160 && tally[1] == 0 && tally[2] == 0,
        format!("{points} checks: holds {}, fails {}, undecided {}", tally[0], tally[1], tally[2]),
    )
}

fn ac3() -> Check {
    let mut worst: f64 = 0.0;
    for a in [1.0, 2.0, 3.0] {
        for b in [0.5, 1.0, 2.0] {
            let cfg = QuadConfig::for_frequency(b, 1e-12);
            let cos = quad_semiinfinite(|x| (-a * x).exp() * (b * x).cos(), &cfg).map_err(e)?;
            let sin = quad_semiinfinite(|x| x * (-a * x).exp() * (b * x).sin(), &cfg).map_err(e)?;
            let r2 = a * a + b * b;
            worst = worst.max((cos.value - a / r2).abs());
            worst = worst.max((sin.value - 2.0 * a * b / (r2 * r2)).abs());
        }
    }
    ensure(worst < 1e-10, format!("3x3 grid, max abs error {worst:.3e} (< 1e-10)"))
}

fn ac4() -> Check {
    let r = rational;
    let numerator = fsecond_numerator_series(8).map_err(e)?;
    let expected_numerator = RationalSeries::new(vec![
        r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1),
        r(-1, 30), r(-1, 30), r(-23, 1260), r(-1, 140),
    ]);
    let u = bose_series(6);
    let expected_u = RationalSeries::new(vec![r(1, 1), r(-1, 2), r(1, 12), r(0, 1), r(-1, 720), r(0, 1), r(1, 30240)]);
    let limit = fprime_limit_at_zero();
    ensure(
        numerator == expected_numerator && u == expected_u && limit == r(1, 6),
        format!("numerator(8) = {numerator}, u(6) = {u}, f'(0+) = {limit}"),
    )
}

fn mathieu(args: &[&str]) -> Result<Vec<u8>, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_mathieu")).args(args).output().map_err(e)?;
    if !o.status.success() {
        return Err(format!("mathieu {args:?} exited with {:?}", o.status.code()));
    }
    Ok(o.stdout)
}

fn num(v: &Value) -> f64 {
    v.as_str().and_then(|s| s.parse().ok()).unwrap_or(f64::NAN)
}

fn well_separated(claim: &Value) -> bool {
    claim["evidence"].as_array().into_iter().flatten().any(|ev| {
        ev["kind"] == "separation" && {
            let (gap, width) = (num(&ev["gap"]), num(&ev["width"]));
            gap > 0.0 && gap >= 1e3 * width
        }
    })
}

fn evidence<'a>(claim: &'a Value, key: &str) -> Option<&'a Value> {
    claim["evidence"].as_array()?.iter().find(|ev| ev["key"] == key)
}

fn ac5() -> Check {
    let out = mathieu(&["claims", "--format", "json"])?;
    let verdicts: Vec<Value> = serde_json::from_slice(&out).map_err(e)?;
    let find = |id: &str| verdicts.iter().find(|v| v["id"] == id);
    let sub = |id: &str, sid: &str| {
        find(id).and_then(|v| v["subclaims"].as_array()?.iter().find(|s| s["id"] == sid).cloned())
    };
    let mut problems = Vec::new();
    if verdicts.len() != 10 {
        problems.push(format!("{} verdicts", verdicts.len()));
    }
    for id in ["C1", "C2", "C3", "C10"] {
        if find(id).map(|v| v["status"] != "verified").unwrap_or(true) {
            problems.push(format!("{id} not verified"));
        }
    }
    for id in ["C4", "C5", "C6", "C7", "C8"] {
        match find(id) {
            Some(v) if v["status"] == "refuted-as-printed" && well_separated(v) => {}
            _ => problems.push(format!("{id} not refuted with separation >= 1e3 x width")),
        }
    }
    for (id, sid) in [("C6", "C6.sign"), ("C7", "C7.corrected")] {
        if sub(id, sid).map(|s| s["status"] != "verified").unwrap_or(true) {
            problems.push(format!("{sid} not verified"));
        }
    }
    let c9 = find("C9").ok_or("no C9")?;
    let sup = evidence(c9, "sup").map(|ev| num(&ev["value"])).unwrap_or(f64::NAN);
    let increase = evidence(c9, "certified-increase").map(|ev| ev["computed"] == "true").unwrap_or(true);
    if c9["basis"] != "grid evidence" || !((sup - 0.90154).abs() <= 1e-4) || increase {
        problems.push(format!("C9 sup {sup}, certified increase {increase}"));
    }
    ensure(
        problems.is_empty(),
        format!("10 verdicts, C9 sup {sup:.7}, problems: {problems:?}"),
    )
}

fn ac6() -> Check {
    let s = eval_alternating(&SeriesParams::new(0.0, 1e-9)).map_err(e)?;
    let z = zeta_int(3, 1e-13).map_err(e)?;
    let target = z.enclosure.scale(0.75);
    ensure(
        s.enclosure.contains_interval(&target) && s.enclosure.width() <= 2e-9,
        format!("S(0) in {}, 3/4 zeta(3) in {target}, width {:.3e}", s.enclosure, s.enclosure.width()),
    )
}

fn ac7() -> Check {
    let chain: [(fn(f64) -> f64, fn(f64) -> f64); 2] = [(f_closed, fprime_closed), (fprime_closed, fsecond_closed)];
    let mut worst: f64 = 0.0;
    let points = chain_points();
    for x in &points {
        for (base, derived) in chain {
            let d = finite_difference(base, *x, Derivative::First, 1e-3).map_err(e)?;
            worst = worst.max((d.value - derived(*x)).abs());
        }
        let d2 = finite_difference(f_closed, *x, Derivative::Second, 1e-3).map_err(e)?;
        worst = worst.max((d2.value - fsecond_closed(*x)).abs());
    }
    let fp = finite_difference(f_closed, 1.0, Derivative::First, 1e-3).map_err(e)?.value;
    let fpp = finite_difference(fprime_closed, 1.0, Derivative::First, 1e-3).map_err(e)?.value;
    let printed_margin = [
        (fprime_as_printed(1.0) - fp).abs(),
        (fsecond_as_printed_expanded(1.0) - fpp).abs(),
        (fsecond_as_printed_rational(1.0) - fpp).abs(),
    ]
    .into_iter()
    .fold(f64::INFINITY, f64::min);
    ensure(
        points.len() == 20 && worst < 1e-6 && printed_margin > 1e-2,
        format!("20 points, chain error {worst:.3e} (< 1e-6), printed forms off by >= {printed_margin:.3e} at x = 1"),
    )
}

fn ac8() -> Check {
    let g15 = eval_generalized(&SeriesParams::new(0.0, 1e-9).with_mu(1.5)).map_err(e)?;
    let g3 = eval_generalized(&SeriesParams::new(0.0, 1e-9).with_mu(3.0)).map_err(e)?;
    let z2 = zeta_int(2, 1e-13).map_err(e)?;
    let z5 = zeta_int(5, 1e-13).map_err(e)?;
    let mut mismatched = Vec::new();
    for h in [0.0, 0.05, 0.3, 0.7, 1.0, 2.5, 7.0, 20.0, 150.0, 1e3] {
        let g = eval_generalized(&SeriesParams::new(h, 1e-9).with_mu(2.0)).map_err(e)?;
        let d = eval_mathieu_direct(&SeriesParams::new(h, 1e-9)).map_err(e)?;
        if !g.enclosure.overlaps(&d.enclosure) {
            mismatched.push(h);
        }
    }
    ensure(
        g15.enclosure.contains_interval(&z2.enclosure) && g3.enclosure.contains_interval(&z5.enclosure) && mismatched.is_empty(),
        format!("mu=1.5 {} vs zeta(2), mu=3 {} vs zeta(5), mu=2 mismatches {mismatched:?}", g15.enclosure, g3.enclosure),
    )
}

fn ac9() -> Check {
    let dir = tempfile::tempdir().map_err(e)?;
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    for name in ["a", "b"] {
        mathieu(&["claims", "--format", "json", "--out", &path(&format!("claims-{name}.json"))])?;
        mathieu(&["scan", "S", "--h-min", "0", "--h-max", "50", "--steps", "201", "--out", &path(&format!("scan-{name}.csv"))])?;
    }
    let same = |a: &str, b: &str| -> Result<bool, String> {
        Ok(fs::read(path(a)).map_err(e)? == fs::read(path(b)).map_err(e)?)
    };
    let claims = same("claims-a.json", "claims-b.json")?;
    let scan = same("scan-a.csv", "scan-b.csv")?;
    ensure(claims && scan, format!("claims json identical: {claims}, scan csv identical: {scan}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Check); 9] = [
        ("AC1", "three-way agreement", ac1),
        ("AC2", "bounds on grids", ac2),
        ("AC3", "Laplace oracles", ac3),
        ("AC4", "exact coefficients", ac4),
        ("AC5", "claims report", ac5),
        ("AC6", "alternating anchor", ac6),
        ("AC7", "derivative chain", ac7),
        ("AC8", "generalized series", ac8),
        ("AC9", "determinism", ac9),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (id, name, check) in criteria {
        let t = Instant::now();
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("[{tag}] {id} {name}: {detail} ({:.2}s)", t.elapsed().as_secs_f64());
    }
    println!("{} of 9 criteria passed in {:.2}s", 9 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
