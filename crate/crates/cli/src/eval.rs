use std::collections::BTreeMap;
use std::time::Instant;

use hker_core::humbert::{
    phi2_antisym, phi2_antisym_2a, phi2_auto, phi2_direct, phi2_equal_args, phi2_f21_series_oriented, psi2_auto,
    psi2_direct, psi2_f21_series_oriented, Path,
};
use hker_core::specfun::{
    gauss_sum_closed, hyp2f1_at_minus_one, hyp2f1_at_one, hyp_pfq, kummer_sum_closed, SeriesValue, ToleranceSpec,
};
use hker_core::{Error, Phi2Params, Psi2Params, Scalar};

use crate::args::{series_tolerance, EvalArgs, Function, Method, PointArgs};
use crate::format::{format_machine, format_plain, to_json};
use crate::record::{csv_field, finite, ComplexValue, OutputRecord};
use crate::{Cli, CliError, Format, Output, EXIT_NOT_CONVERGED, EXIT_OK};

/// Named inputs of one evaluation.
pub type Inputs = BTreeMap<String, Scalar>;

/// A value and the route label that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluated {
    pub path: &'static str,
    pub series: SeriesValue,
}

/// Check that exactly the inputs of `function` are present.
pub(crate) fn collect_inputs(function: Function, point: &PointArgs, provided: &[&str]) -> Result<Inputs, CliError> {
    let mut inputs = Inputs::new();
    for name in ["a", "b", "c", "x", "y", "z"] {
        let wanted = function.arity().contains(&name);
        match (point.get(name), wanted) {
            (Some(v), true) => {
                inputs.insert(name.to_string(), v);
            }
            (Some(_), false) => {
                return Err(CliError::invalid(
                    "invalid_parameter",
                    format!("--{name} is not an input of {}", function.name()),
                ))
            }
            (None, true) if !provided.contains(&name) => {
                return Err(CliError::invalid("invalid_parameter", format!("{} needs --{name}", function.name())))
            }
            (None, _) => {}
        }
    }
    Ok(inputs)
}

fn method_unavailable(function: Function, method: Method, why: &str) -> Error {
    Error::InvalidParameter(format!("method {} not available for {}: {why}", method.name(), function.name()))
}

fn labelled(path: &'static str, series: SeriesValue) -> Evaluated {
    Evaluated { path, series }
}

/// Evaluate `function` at `inputs` with the requested method.
pub fn evaluate(function: Function, method: Method, inputs: &Inputs, tol: &ToleranceSpec) -> Result<Evaluated, Error> {
    let get = |n: &str| inputs.get(n).copied().ok_or_else(|| Error::InvalidParameter(format!("missing {n}")));
    match function {
        Function::Phi2 => {
            let p = Phi2Params::new(get("a")?, get("b")?, get("c")?)?;
            eval_phi2(&p, get("x")?, get("y")?, method, tol)
        }
        Function::Psi2 => {
            let p = Psi2Params::new(get("a")?, get("b")?, get("c")?)?;
            eval_psi2(&p, get("x")?, get("y")?, method, tol)
        }
        Function::Hyp2f1 => eval_2f1(get("a")?, get("b")?, get("c")?, get("z")?, method, tol),
        Function::Hyp1f1 | Function::Hyp1f2 | Function::Hyp0f1 => {
            if matches!(method, Method::Closed | Method::F21Series) {
                return Err(method_unavailable(function, method, "only direct summation applies"));
            }
            let (num, den) = match function {
                Function::Hyp1f1 => (vec![get("a")?], vec![get("b")?]),
                Function::Hyp1f2 => (vec![get("a")?], vec![get("b")?, get("c")?]),
                _ => (vec![], vec![get("b")?]),
            };
            Ok(labelled("direct", hyp_pfq(&num, &den, get("z")?, tol)?))
        }
    }
}

fn phi2_closed(p: &Phi2Params, x: Scalar, y: Scalar, tol: &ToleranceSpec) -> Option<Result<Evaluated, Error>> {
    let (a, b, c) = (p.a(), p.b(), p.c());
    let zero = Scalar::new(0.0, 0.0);
    let out = if y == x {
        phi2_equal_args(a, b, c, x, tol).map(|s| labelled(Path::EqualArgs.as_str(), s))
    } else if b == a && y == -x && c == a * 2.0 {
        phi2_antisym_2a(a, x, tol).map(|s| labelled(Path::Antisym2a.as_str(), s))
    } else if b == a && y == -x {
        phi2_antisym(a, c, x, tol).map(|s| labelled(Path::Antisym.as_str(), s))
    } else if x == zero {
        hyp_pfq(&[b], &[c], y, tol).map(|s| labelled(Path::Axis.as_str(), s))
    } else if y == zero {
        hyp_pfq(&[a], &[c], x, tol).map(|s| labelled(Path::Axis.as_str(), s))
    } else {
        return None;
    };
    Some(out)
}

fn oriented_label(swapped: bool) -> &'static str {
    if swapped {
        Path::F21SeriesSwapped.as_str()
    } else {
        Path::F21Series.as_str()
    }
}

fn eval_phi2(p: &Phi2Params, x: Scalar, y: Scalar, method: Method, tol: &ToleranceSpec) -> Result<Evaluated, Error> {
    match method {
        Method::Direct => Ok(labelled("direct", phi2_direct(p, x, y, tol)?)),
        Method::F21Series => {
            let (s, swapped) = phi2_f21_series_oriented(p, x, y, tol)?;
            Ok(labelled(oriented_label(swapped), s))
        }
        Method::Auto => {
            let pv = phi2_auto(p, x, y, tol)?;
            Ok(labelled(pv.path.as_str(), pv.series))
        }
        Method::Closed => phi2_closed(p, x, y, tol).unwrap_or_else(|| {
            Err(method_unavailable(Function::Phi2, method, "needs y = x, b = a with y = -x, or a zero argument"))
        }),
    }
}

fn eval_psi2(p: &Psi2Params, x: Scalar, y: Scalar, method: Method, tol: &ToleranceSpec) -> Result<Evaluated, Error> {
    let zero = Scalar::new(0.0, 0.0);
    match method {
        Method::Direct => Ok(labelled("direct", psi2_direct(p, x, y, tol)?)),
        Method::F21Series => {
            let (s, swapped) = psi2_f21_series_oriented(p, x, y, tol)?;
            Ok(labelled(oriented_label(swapped), s))
        }
        Method::Auto => {
            let pv = psi2_auto(p, x, y, tol)?;
            Ok(labelled(pv.path.as_str(), pv.series))
        }
        Method::Closed if x == zero => Ok(labelled("axis", hyp_pfq(&[p.a()], &[p.c()], y, tol)?)),
        Method::Closed if y == zero => Ok(labelled("axis", hyp_pfq(&[p.a()], &[p.b()], x, tol)?)),
        Method::Closed => Err(method_unavailable(Function::Psi2, method, "needs a zero argument")),
    }
}

fn eval_2f1(
    a: Scalar,
    b: Scalar,
    c: Scalar,
    z: Scalar,
    method: Method,
    tol: &ToleranceSpec,
) -> Result<Evaluated, Error> {
    let one = Scalar::new(1.0, 0.0);
    let closed = || -> Option<Result<Evaluated, Error>> {
        if z == one {
            Some(gauss_sum_closed(a, b, c).map(|v| labelled("gauss", SeriesValue::exact(v, 0))))
        } else if z == -one && c == one + a - b {
            Some(kummer_sum_closed(a, b).map(|v| labelled("kummer", SeriesValue::exact(v, 0))))
        } else {
            None
        }
    };
    let summed = || -> Result<Evaluated, Error> {
        if z == one {
            Ok(labelled("richardson", hyp2f1_at_one(a, b, c, tol)?))
        } else if z == -one {
            Ok(labelled("levin", hyp2f1_at_minus_one(a, b, c, tol)?))
        } else {
            Ok(labelled("direct", hyp_pfq(&[a, b], &[c], z, tol)?))
        }
    };
    match method {
        Method::Direct => summed(),
        Method::Closed => closed().unwrap_or_else(|| {
            Err(method_unavailable(Function::Hyp2f1, method, "needs z = 1, or z = -1 with c = 1 + a - b"))
        }),
        Method::Auto => closed().unwrap_or_else(summed),
        Method::F21Series => Err(method_unavailable(Function::Hyp2f1, method, "applies to phi2 and psi2 only")),
    }
}

pub(crate) fn run(cli: &Cli, args: &EvalArgs, echo: &str) -> Result<Output, CliError> {
    let tol = series_tolerance(args.tol, cli.max_terms)?;
    let inputs = collect_inputs(args.function, &args.point, &[])?;
    let start = Instant::now();
    let ev = evaluate(args.function, args.method, &inputs, &tol)?;
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let record = OutputRecord {
        command: echo.to_string(),
        function: args.function.name().to_string(),
        inputs: inputs.iter().map(|(k, v)| (k.clone(), ComplexValue::from(*v))).collect(),
        method: args.method.name().to_string(),
        path: ev.path.to_string(),
        value: ev.series.value.into(),
        terms_used: ev.series.terms_used,
        est_tail: finite(ev.series.est_tail),
        converged: ev.series.converged,
        wall_time_ms,
    };
    let lines = match cli.format.unwrap_or(Format::Json) {
        Format::Json => vec![to_json(&record)],
        Format::Csv => vec![OutputRecord::CSV_HEADER.to_string(), csv_row(&record)],
        Format::Plain => plain(&record),
    };
    let code = if record.converged { EXIT_OK } else { EXIT_NOT_CONVERGED };
    Ok(Output { lines, code })
}

fn complex_text(z: ComplexValue, fmt: fn(f64) -> String) -> String {
    if z.im == 0.0 {
        fmt(z.re)
    } else {
        format!("{},{}", fmt(z.re), fmt(z.im))
    }
}

fn optional(x: Option<f64>, fmt: fn(f64) -> String) -> String {
    x.map(fmt).unwrap_or_default()
}

fn csv_row(r: &OutputRecord) -> String {
    let inputs =
        r.inputs.iter().map(|(k, v)| format!("{k}={}", complex_text(*v, format_machine))).collect::<Vec<_>>().join(";");
    [
        csv_field(&r.command),
        r.function.clone(),
        csv_field(&inputs),
        r.method.clone(),
        r.path.clone(),
        format_machine(r.value.re),
        format_machine(r.value.im),
        r.terms_used.to_string(),
        optional(r.est_tail, format_machine),
        r.converged.to_string(),
        format_machine(r.wall_time_ms),
    ]
    .join(",")
}

fn plain(r: &OutputRecord) -> Vec<String> {
    let inputs =
        r.inputs.iter().map(|(k, v)| format!("{k}={}", complex_text(*v, format_plain))).collect::<Vec<_>>().join(" ");
    let value = if r.value.im == 0.0 {
        format_plain(r.value.re)
    } else {
        format!(
            "{} {} {}i",
            format_plain(r.value.re),
            if r.value.im < 0.0 { "-" } else { "+" },
            format_plain(r.value.im.abs())
        )
    };
    vec![
        format!("{}({inputs}) = {value}", r.function),
        format!(
            "method {} via {}, {} terms, est_tail {}, {}, {} ms",
            r.method,
            r.path,
            r.terms_used,
            r.est_tail.map(format_plain).unwrap_or_else(|| "n/a".into()),
            if r.converged { "converged" } else { "NOT converged" },
            format_plain(r.wall_time_ms)
        ),
    ]
}
