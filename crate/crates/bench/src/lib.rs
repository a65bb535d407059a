//! Criterion benchmarks for ospchar live in `benches/`.
