//! Criterion benchmarks for the `strongnear` crate; see `benches/`.
