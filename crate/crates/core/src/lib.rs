//! One-line program repair with a pointer-generator sequence-to-sequence
//! model.
//!
//! The pipeline takes a buggy Java file and a suspicious line number, builds
//! an abstract buggy context (markers around the line, the full buggy
//! method, fields and signatures of the rest of the class, truncated to a
//! token budget), runs beam search over a trained encoder-decoder with
//! attention and a copy mechanism, and turns the surviving hypotheses into
//! ranked unified diffs.
//!
//! | module       | what it does |
//! |--------------|--------------|
//! | [`lexer`]    | Java tokenization and re-spacing of predicted lines |
//! | [`context`]  | abstract buggy context construction and truncation |
//! | [`vocab`]    | vocabulary and per-sample extended ids for copying |
//! | [`net`]      | the network, exact gradients, checkpoints |
//! | [`train`]    | SGD training loop, perplexity, token accuracy |
//! | [`infer`]    | beam search, patch preparation, validation hooks |
//! | [`pipeline`] | datasets, evaluation, copy-origin analysis, ablations, stats |
//! | [`corpus`]   | synthetic bug/fix corpus generator |

pub mod context;
pub mod corpus;
pub mod error;
pub mod infer;
pub mod lexer;
pub mod net;
pub mod pipeline;
pub mod train;
pub mod vocab;

pub use error::{Error, Result};
