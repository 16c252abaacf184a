//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs as part of `cargo test`; `cargo test --test acceptance`
//! runs it alone.

use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use hker_core::humbert::{phi2_auto, phi2_direct, phi2_f21_series, psi2_direct, Path};
use hker_core::specfun::hyp_pfq;
use hker_core::{Phi2Params, Psi2Params, Scalar, ToleranceSpec};
use serde_json::Value;

fn hker(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hker")).args(args).env_remove("HKER_DEFAULT_TOL").output().expect("spawn hker")
}

fn reports(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout).lines().map(|l| serde_json::from_str(l).expect("report json")).collect()
}

/// Run a `check` invocation and require exit 0, the expected reports all
/// passing, and a wall-clock budget.
fn check_passes(args: &[&str], names: &[&str], budget: Duration) -> Result<String, String> {
    let start = Instant::now();
    let o = hker(args);
    let elapsed = start.elapsed();
    let rs = reports(&o);
    if o.status.code() != Some(0) {
        return Err(format!("exit {:?}: {}", o.status.code(), String::from_utf8_lossy(&o.stderr)));
    }
    let got: Vec<&str> = rs.iter().filter_map(|r| r["identity_name"].as_str()).collect();
    if got != names {
        return Err(format!("reports for {got:?}, expected {names:?}"));
    }
    if elapsed > budget {
        return Err(format!("took {elapsed:?}, budget {budget:?}"));
    }
    let worst = rs
        .iter()
        .map(|r| {
            format!("{} max_rel_err={:.2e}", r["identity_name"].as_str().unwrap(), r["max_rel_err"].as_f64().unwrap())
        })
        .collect::<Vec<_>>()
        .join(", ");
    Ok(format!("{worst} in {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

type Criterion = dyn Fn() -> Result<String, String>;

fn r(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

fn criterion_reductions() -> Result<String, String> {
    let three = check_passes(
        &["check", "equal-args", "--samples", "50", "--tol", "1e-10"],
        &["equal-args"],
        Duration::from_secs(5),
    )
    .and_then(|a| {
        check_passes(&["check", "antisym", "--samples", "50", "--tol", "1e-10"], &["antisym"], Duration::from_secs(5))
            .map(|b| format!("{a}; {b}"))
    })
    .and_then(|ab| {
        check_passes(
            &["check", "antisym-2a", "--samples", "50", "--tol", "1e-10"],
            &["antisym-2a"],
            Duration::from_secs(5),
        )
        .map(|c| format!("{ab}; {c}"))
    })?;
    let tol = ToleranceSpec::default();
    let p = Phi2Params::new(r(1.0), r(1.0), r(2.0)).map_err(|e| e.to_string())?;
    let auto = phi2_auto(&p, r(0.5), r(0.5), &tol).map_err(|e| e.to_string())?;
    let direct = phi2_direct(&p, r(0.5), r(0.5), &tol).map_err(|e| e.to_string())?;
    let e = 0.5f64.exp();
    for (label, v) in [("closed form", auto.series.value), ("direct", direct.value)] {
        let err = (v - r(e)).norm() / e;
        if err > 1e-12 {
            return Err(format!("phi2(1,1;2;0.5,0.5) {label} off by {err:.2e}"));
        }
    }
    if auto.path != Path::EqualArgs {
        return Err(format!("spot value took path {}", auto.path));
    }
    Ok(format!("{three}; spot value e^0.5 within 1e-12"))
}

fn criterion_degenerate() -> Result<String, String> {
    let start = Instant::now();
    let tol = ToleranceSpec::default();
    // c near a pole: rejected by construction, via the library and the CLI
    for c in [0.0, -1.0, -3.0 + 5e-9] {
        match Phi2Params::new(r(1.0), r(1.0), r(c)) {
            Err(e) if e.to_string() == "c at nonpositive integer" => {}
            other => return Err(format!("phi2 with c = {c}: {other:?}")),
        }
        if Psi2Params::new(r(1.0), r(1.5), r(c)).is_ok() {
            return Err(format!("psi2 accepted c = {c}"));
        }
    }
    if Phi2Params::new(r(1.0), r(1.0), r(-3.0 + 1e-6)).is_err() {
        return Err("c = -3 + 1e-6 wrongly rejected".into());
    }
    let o = hker(&["eval", "phi2", "--a", "1", "--b", "1", "--c", "0", "--x", "0.1", "--y", "0.1"]);
    if o.status.code() != Some(2) || !String::from_utf8_lossy(&o.stderr).contains("c at nonpositive integer") {
        return Err(format!("CLI c = 0 gave exit {:?}", o.status.code()));
    }
    // x = y = 0 is exactly one on every route
    let p = Phi2Params::new(r(0.7), r(1.3), r(2.1)).unwrap();
    let q = Psi2Params::new(r(0.7), r(1.3), r(2.1)).unwrap();
    let zero = r(0.0);
    let ones = [
        phi2_direct(&p, zero, zero, &tol).map(|s| s.value),
        phi2_f21_series(&p, zero, zero, &tol).map(|s| s.value),
        phi2_auto(&p, zero, zero, &tol).map(|s| s.series.value),
        psi2_direct(&q, zero, zero, &tol).map(|s| s.value),
    ];
    for v in ones {
        if v != Ok(r(1.0)) {
            return Err(format!("value at the origin: {v:?}"));
        }
    }
    // x = 0 collapses to 1F1(b; c; y)
    let y = r(0.8);
    let want = hyp_pfq(&[p.b()], &[p.c()], y, &tol).unwrap().value;
    let got = phi2_f21_series(&p, zero, y, &tol).unwrap().value;
    let auto = phi2_auto(&p, zero, y, &tol).unwrap();
    if (got - want).norm() > 1e-15 * want.norm() || auto.path != Path::Axis || auto.series.value != want {
        return Err(format!("x = 0 fallback: {got} / {} vs {want}", auto.series.value));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("pole guard, origin and axis collapse in {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

fn criterion_determinism() -> Result<String, String> {
    let runs = [
        hker(&["check", "all", "--seed", "1"]),
        hker(&["check", "all", "--seed", "1"]),
        hker(&["check", "all", "--seed", "1", "--jobs", "4"]),
        hker(&["check", "all", "--seed", "1", "--jobs", "4"]),
    ];
    for (i, o) in runs.iter().enumerate() {
        if o.status.code() != Some(0) {
            return Err(format!("run {i} exited {:?}", o.status.code()));
        }
    }
    if runs.iter().any(|o| o.stdout != runs[0].stdout) {
        return Err("outputs differ between runs".into());
    }
    let n = reports(&runs[0]).len();
    if n != 9 {
        return Err(format!("{n} reports, expected 9"));
    }
    Ok(format!("{n} reports, {} bytes identical across 4 runs (jobs 1 and 4)", runs[0].stdout.len()))
}

fn main() -> ExitCode {
    let budget = Duration::from_secs(5);
    let criteria: Vec<(&str, Box<Criterion>)> = vec![
        (
            "1 theorem1 equivalence",
            Box::new(move || {
                check_passes(
                    &["check", "theorem1", "--samples", "100", "--seed", "1", "--tol", "1e-10"],
                    &["theorem1"],
                    budget,
                )
            }),
        ),
        (
            "2 gauss closed form",
            Box::new(move || check_passes(&["check", "gauss", "--samples", "50", "--tol", "1e-8"], &["gauss"], budget)),
        ),
        (
            "3 kummer closed form",
            Box::new(move || {
                check_passes(&["check", "kummer", "--samples", "50", "--tol", "1e-9"], &["kummer"], budget)
            }),
        ),
        ("4 reductions", Box::new(criterion_reductions)),
        (
            "5 psi2 representation",
            Box::new(move || {
                check_passes(&["check", "psi2-b", "--samples", "100", "--tol", "1e-10"], &["psi2-b"], budget)
            }),
        ),
        (
            "6 auxiliary identities",
            Box::new(move || {
                check_passes(&["check", "poch-shift", "--samples", "500", "--tol", "1e-12"], &["poch-shift"], budget)
                    .and_then(|a| {
                        check_passes(
                            &["check", "diag-reindex", "--samples", "20", "--tol", "1e-12"],
                            &["diag-reindex"],
                            budget,
                        )
                        .map(|b| format!("{a}; {b}"))
                    })
            }),
        ),
        ("7 degenerate inputs", Box::new(criterion_degenerate)),
        ("8 determinism", Box::new(criterion_determinism)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
