//! Benchmarks for `groupoid-core`; see `benches/`.
