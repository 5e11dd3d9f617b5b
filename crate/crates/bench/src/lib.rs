//! Criterion benchmarks for the counting kernels and constructions; see
//! `benches/kernels.rs`.
