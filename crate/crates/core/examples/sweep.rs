//! Runs every registered identity with its default domain and prints a summary line.

use hker_core::verify::{check_identity, registry};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for id in registry() {
        let start = std::time::Instant::now();
        let mut d = id.default_domain();
        d.complex = std::env::var("COMPLEX").is_ok();
        let r = check_identity(id.name, &d, id.default_samples, seed, id.default_tol).expect("sweep");
        println!(
            "{:<13} pass={:<5} samples={:<4} max_rel_err={:.3e} tol={:.0e} failures={} ({:.2?})",
            r.identity_name,
            r.pass,
            r.samples,
            r.max_rel_err,
            r.check_tol,
            r.failures.len(),
            start.elapsed()
        );
    }
}
