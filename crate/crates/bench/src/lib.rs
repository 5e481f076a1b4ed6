//! Criterion benchmarks for the `tricomplex` crate live in `benches/`.
