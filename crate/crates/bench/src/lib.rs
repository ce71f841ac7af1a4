//! Criterion benchmarks for the solver live under `benches/`.
