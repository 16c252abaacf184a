use hker_core::verify::{check_identity_par, find_identity, registry, Identity};
use hker_core::{IdentityReport, ParamDomain};

use crate::args::CheckArgs;
use crate::format::{format_machine, format_plain, to_json};
use crate::record::csv_field;
use crate::{Cli, CliError, Format, Output, EXIT_CHECK_FAILED, EXIT_OK};

const CSV_HEADER: &str = "identity,samples,seed,generator,check_tol,max_rel_err,failures,pass";

/// `a=0.1:2,c=0.6:4` → [("a", 0.1, 2.0), ("c", 0.6, 4.0)].
pub(crate) fn parse_overrides(s: &str) -> Result<Vec<(String, f64, f64)>, CliError> {
    let bad = |part: &str| {
        CliError::invalid("invalid_domain", format!("malformed domain override {part:?}, expected name=lo:hi"))
    };
    s.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let (name, range) = part.split_once('=').ok_or_else(|| bad(part))?;
            let (lo, hi) = range.split_once(':').ok_or_else(|| bad(part))?;
            let lo: f64 = lo.trim().parse().map_err(|_| bad(part))?;
            let hi: f64 = hi.trim().parse().map_err(|_| bad(part))?;
            let name = name.trim();
            if name.is_empty() {
                return Err(bad(part));
            }
            Ok((name.to_string(), lo, hi))
        })
        .collect()
}

fn selected(name: &str) -> Result<Vec<&'static Identity>, CliError> {
    if name == "all" {
        return Ok(registry().iter().collect());
    }
    find_identity(name)
        .map(|id| vec![id])
        .ok_or_else(|| CliError::from(hker_core::Error::UnknownIdentity(name.to_string())))
}

fn domain_for(id: &Identity, args: &CheckArgs, overrides: &[(String, f64, f64)]) -> Result<ParamDomain, CliError> {
    let mut domain = id.default_domain();
    for (name, lo, hi) in overrides {
        if domain.ranges.contains_key(name) {
            domain.override_range(name, *lo, *hi)?;
        }
    }
    domain.complex |= args.complex;
    if let Some(r) = args.exclusion_radius {
        domain.exclusion_radius = r;
    }
    domain.validate()?;
    Ok(domain)
}

pub(crate) fn run(cli: &Cli, args: &CheckArgs) -> Result<Output, CliError> {
    let identities = selected(&args.identity)?;
    let overrides = match &args.domain {
        Some(s) => parse_overrides(s)?,
        None => Vec::new(),
    };
    for (name, _, _) in &overrides {
        if !identities.iter().any(|id| id.default_domain().ranges.contains_key(name)) {
            return Err(CliError::invalid(
                "invalid_domain",
                format!("no selected identity has a parameter named {name:?}"),
            ));
        }
    }
    if let Some(t) = args.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::invalid("invalid_tolerance", "tol must be positive and finite"));
        }
    }
    if args.samples == Some(0) {
        return Err(CliError::invalid("invalid_parameter", "samples must be at least 1"));
    }
    // Validate every domain before running anything.
    let domains = identities.iter().map(|id| domain_for(id, args, &overrides)).collect::<Result<Vec<_>, _>>()?;

    let mut reports = Vec::with_capacity(identities.len());
    for (id, domain) in identities.iter().zip(&domains) {
        let samples = args.samples.unwrap_or(id.default_samples);
        let tol = args.tol.unwrap_or(id.default_tol);
        reports.push(check_identity_par(id.name, domain, samples, args.seed, tol, cli.jobs.max(1))?);
    }

    let lines = match cli.format.unwrap_or(Format::Json) {
        Format::Json => reports.iter().map(to_json).collect(),
        Format::Csv => std::iter::once(CSV_HEADER.to_string()).chain(reports.iter().map(csv_row)).collect(),
        Format::Plain => reports.iter().flat_map(plain).collect(),
    };
    let code = if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok(Output { lines, code })
}

fn csv_row(r: &IdentityReport) -> String {
    [
        csv_field(&r.identity_name),
        r.samples.to_string(),
        r.seed.to_string(),
        csv_field(&r.generator),
        format_machine(r.check_tol),
        format_machine(r.max_rel_err),
        r.failures.len().to_string(),
        r.pass.to_string(),
    ]
    .join(",")
}

fn plain(r: &IdentityReport) -> Vec<String> {
    let mut out = vec![format!(
        "{:<13} {}  samples={} seed={} max_rel_err={} tol={}",
        r.identity_name,
        if r.pass { "PASS" } else { "FAIL" },
        r.samples,
        r.seed,
        format_plain(r.max_rel_err),
        format_plain(r.check_tol)
    )];
    for f in &r.failures {
        let point = f
            .point
            .iter()
            .map(|(k, v)| {
                if v.im == 0.0 {
                    format!("{k}={}", format_plain(v.re))
                } else {
                    format!("{k}={},{}", format_plain(v.re), format_plain(v.im))
                }
            })
            .collect::<Vec<_>>()
            .join(" ");
        let err = f.rel_err.map(format_plain).unwrap_or_else(|| "n/a".into());
        out.push(format!("  #{} {}: rel_err={err} at {point}", f.index, f.diagnostic));
    }
    out
}
