//! Criterion benchmarks for `ngsh-core`; see `benches/`.
