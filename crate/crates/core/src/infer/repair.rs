//! Context building, decoding and patch preparation for one task.

use super::beam::{beam_search, BeamConfig, NetStepper};
use super::patch::{decode_hypothesis, prepare_patches, DecodedHypothesis, PatchCandidate, PrepareOptions};
use crate::context::{abstract_class, AbstractBuggyContext, RepairTask};
use crate::error::Result;
use crate::net::Checkpoint;
use crate::vocab::{encode_pair, EncodedSample};

#[derive(Debug, Clone)]
pub struct RepairOutput {
    pub context: AbstractBuggyContext,
    pub sample: EncodedSample,
    pub hypotheses: Vec<DecodedHypothesis>,
    pub candidates: Vec<PatchCandidate>,
}

/// Beam-decodes a prepared context into token hypotheses.
pub fn generate(ck: &Checkpoint, context: &AbstractBuggyContext, cfg: &BeamConfig) -> Result<(EncodedSample, Vec<DecodedHypothesis>)> {
    let sample = encode_pair(&context.texts(), None, &ck.vocab)?;
    let stepper = NetStepper::new(
        &ck.model,
        &sample.src_ids,
        &sample.src_ext_ids,
        sample.extended_len(ck.vocab.len()),
    )?;
    let hyps = beam_search(&stepper, cfg)?
        .into_iter()
        .map(|h| decode_hypothesis(&h.ids, h.log_prob, &ck.vocab, &sample.oov_list))
        .collect::<Result<Vec<_>>>()?;
    Ok((sample, hyps))
}

/// Builds the context the checkpoint was trained on, decodes and prepares
/// candidate patches for the task's buggy line.
pub fn repair(ck: &Checkpoint, task: &RepairTask, cfg: &BeamConfig, opts: &PrepareOptions) -> Result<RepairOutput> {
    let context = abstract_class(task)?.apply(&ck.context)?;
    let (sample, hypotheses) = generate(ck, &context, cfg)?;
    let candidates = prepare_patches(&hypotheses, task, opts)?;
    Ok(RepairOutput {
        context,
        sample,
        hypotheses,
        candidates,
    })
}
