//! Core library: exact quantum simulation of singlet/triplet measurement
//! protocols and the statistics behind them.

pub mod qsim;

pub use qsim::{DensityOperator, Projector, StateVector};
