//! Benchmarks for the invariant engine live in `benches/`.
