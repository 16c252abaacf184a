//! Criterion benchmarks for `hker-core`; run with `cargo bench -p hker-bench`.
