//! Benchmark harness for ecover-core; see `benches/`.
