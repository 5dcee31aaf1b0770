//! Criterion benchmarks for `witten-core`; see `benches/`.
