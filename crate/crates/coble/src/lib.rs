//! Exact verification toolkit for the S6-symmetric quartic threefolds
//! `X_t`, the Coble fourfold, Verra threefolds and the Cremona-Richmond
//! configuration.

pub mod algebra;
pub mod cli;
pub mod crconfig;
pub mod groups;
pub mod maps;
pub mod report;
pub mod reps;
pub mod varieties;
