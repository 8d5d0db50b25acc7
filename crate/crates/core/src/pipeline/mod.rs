//! Datasets, training from configuration, evaluation, copy-origin analysis,
//! ablation grids and dataset statistics.

mod ablation;
mod dataset;
mod eval;
mod experiment;
mod stats;

pub use ablation::*;
pub use dataset::*;
pub use eval::*;
pub use experiment::*;
pub use stats::*;
