//! Benchmarks for the gradalg engines live in `benches/`.
