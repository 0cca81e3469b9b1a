//! Benchmark-only crate; see `benches/triangles.rs`.
