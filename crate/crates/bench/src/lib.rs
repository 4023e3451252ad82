//! Criterion benchmarks for hessdd; see `benches/`.
