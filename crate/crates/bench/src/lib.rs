//! Criterion benchmarks for `sec3-core`; see `benches/pipeline.rs`.
