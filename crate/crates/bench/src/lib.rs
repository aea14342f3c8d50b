//! Criterion benchmarks for `sylowfact-core`; see `benches/sweeps.rs`.
