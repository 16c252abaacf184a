use hker_core::Scalar;

use crate::args::{series_tolerance, TableArgs};
use crate::eval::{collect_inputs, evaluate};
use crate::format::{format_machine, format_plain, to_json};
use crate::record::TableRow;
use crate::{Cli, CliError, Format, Output, EXIT_NOT_CONVERGED, EXIT_OK};

fn conflict(msg: impl Into<String>) -> CliError {
    CliError::invalid("conflicting_sweep", msg)
}

/// The swept variable and its endpoints.
fn sweep_of(args: &TableArgs) -> Result<(&'static str, f64, f64), CliError> {
    let candidates = [("x", args.x_from, args.x_to), ("y", args.y_from, args.y_to), ("z", args.z_from, args.z_to)];
    let given: Vec<_> = candidates.iter().filter(|(_, f, t)| f.is_some() || t.is_some()).collect();
    match given.as_slice() {
        [] => Err(conflict("no sweep variable: give --x-from/--x-to, --y-from/--y-to or --z-from/--z-to")),
        [(name, Some(from), Some(to))] => Ok((name, *from, *to)),
        [(name, _, _)] => Err(conflict(format!("sweep over {name} needs both --{name}-from and --{name}-to"))),
        _ => Err(conflict("more than one sweep variable")),
    }
}

pub(crate) fn run(cli: &Cli, args: &TableArgs) -> Result<Output, CliError> {
    let (var, from, to) = sweep_of(args)?;
    if !args.function.arity().contains(&var) {
        return Err(conflict(format!("{} has no argument {var}", args.function.name())));
    }
    if args.point.get(var).is_some() {
        return Err(conflict(format!("--{var} is both fixed and swept")));
    }
    if args.y_eq_x && args.y_eq_neg_x {
        return Err(conflict("--y-eq-x and --y-eq-neg-x are mutually exclusive"));
    }
    let tie = if args.y_eq_x {
        Some(1.0)
    } else if args.y_eq_neg_x {
        Some(-1.0)
    } else {
        None
    };
    if tie.is_some() && (var != "x" || args.point.y.is_some() || !args.function.arity().contains(&"y")) {
        return Err(conflict("tying y to x needs a sweep over x, no --y, and a function of x and y"));
    }
    if args.steps < 2 {
        return Err(CliError::invalid("invalid_parameter", "steps must be at least 2"));
    }
    if !(from.is_finite() && to.is_finite()) {
        return Err(CliError::invalid("invalid_parameter", "sweep endpoints must be finite"));
    }

    let tol = series_tolerance(args.tol, cli.max_terms)?;
    let mut provided = vec![var];
    if tie.is_some() {
        provided.push("y");
    }
    let base = collect_inputs(args.function, &args.point, &provided)?;

    let n = args.steps;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let t = if i == n - 1 { to } else { from + (to - from) * i as f64 / (n - 1) as f64 };
        let mut inputs = base.clone();
        inputs.insert(var.to_string(), Scalar::new(t, 0.0));
        if let Some(sign) = tie {
            inputs.insert("y".to_string(), Scalar::new(sign * t, 0.0));
        }
        let ev = evaluate(args.function, args.method, &inputs, &tol)?;
        rows.push(TableRow::new(t, &ev.series));
    }

    let lines = match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => std::iter::once(TableRow::CSV_HEADER.to_string()).chain(rows.iter().map(csv_row)).collect(),
        Format::Json => rows.iter().map(to_json).collect(),
        Format::Plain => rows.iter().map(plain_row).collect(),
    };
    let code = if rows.iter().all(|r| r.converged) { EXIT_OK } else { EXIT_NOT_CONVERGED };
    Ok(Output { lines, code })
}

fn csv_row(r: &TableRow) -> String {
    format!(
        "{},{},{},{},{},{}",
        format_machine(r.sweep),
        format_machine(r.value_re),
        format_machine(r.value_im),
        r.terms,
        r.est_tail.map(format_machine).unwrap_or_default(),
        r.converged
    )
}

fn plain_row(r: &TableRow) -> String {
    format!(
        "{:>14}  {:>14} {:>14}  {:>6}  {:>10}  {}",
        format_plain(r.sweep),
        format_plain(r.value_re),
        format_plain(r.value_im),
        r.terms,
        r.est_tail.map(format_plain).unwrap_or_else(|| "n/a".into()),
        if r.converged { "ok" } else { "NOT converged" }
    )
}
