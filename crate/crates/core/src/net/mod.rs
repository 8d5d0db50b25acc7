//! The encoder-decoder network with attention and copying.

mod checkpoint;
mod gradcheck;
mod model;
mod params;

pub use checkpoint::{Checkpoint, CheckpointHeader, TensorInfo, MAGIC, VERSION};
pub use gradcheck::{gradient_check, GroupError};
pub use model::*;
pub use params::*;

#[cfg(test)]
mod tests;
