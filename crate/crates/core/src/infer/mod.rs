//! Beam-search decoding and candidate patch handling.

mod beam;
mod patch;
mod repair;
mod validate;

pub use beam::*;
pub use patch::*;
pub use repair::*;
pub use validate::*;

#[cfg(test)]
mod tests;
