//! Chain-statistics engine and command-line surface for the `coxchar`
//! library: runs divisibility sweeps across the four Coxeter families,
//! persists exact per-rank records, and renders character tables.

pub mod chain;
pub mod cli;
pub mod verify;
