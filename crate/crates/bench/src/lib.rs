//! Criterion benchmarks for `polyarc-core`; see `benches/`.
