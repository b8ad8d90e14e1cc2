//! Benchmarks for the kernel live in `benches/`; this crate has no library code.
