//! Central finite-difference check of the analytic gradients.

use super::model::Model;
use crate::error::Result;
use crate::vocab::EncodedSample;

/// Agreement between analytic and numeric gradients for one tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupError {
    pub name: String,
    /// `||a - n|| / max(||a||, ||n||)`, 0 when both vanish
    pub relative_error: f64,
    pub max_abs_error: f64,
    pub elements: usize,
}

/// Perturbs every parameter by `+-eps` and compares the central difference
/// of the loss with the backpropagated gradient.
pub fn gradient_check(model: &Model, sample: &EncodedSample, eps: f64) -> Result<Vec<GroupError>> {
    let (_, grads) = model.gradients(sample)?;
    let analytic: Vec<(String, Vec<f64>)> = grads.tensors().into_iter().map(|(n, v, _)| (n, v.to_vec())).collect();
    let mut probe = model.clone();
    let mut out = Vec::with_capacity(analytic.len());
    for (k, (name, a)) in analytic.iter().enumerate() {
        let (mut diff, mut na, mut nn, mut max_abs) = (0.0, 0.0, 0.0, 0.0f64);
        for (e, &ga) in a.iter().enumerate() {
            let orig = probe.params.tensors_mut()[k].1[e];
            probe.params.tensors_mut()[k].1[e] = orig + eps;
            let plus = probe.sequence_loss(sample, 0.0, None)?;
            probe.params.tensors_mut()[k].1[e] = orig - eps;
            let minus = probe.sequence_loss(sample, 0.0, None)?;
            probe.params.tensors_mut()[k].1[e] = orig;
            let gn = (plus - minus) / (2.0 * eps);
            diff += (ga - gn) * (ga - gn);
            na += ga * ga;
            nn += gn * gn;
            max_abs = max_abs.max((ga - gn).abs());
        }
        let denom = f64::sqrt(f64::max(na, nn));
        out.push(GroupError {
            name: name.clone(),
            relative_error: if denom > 0.0 { diff.sqrt() / denom } else { 0.0 },
            max_abs_error: max_abs,
            elements: a.len(),
        });
    }
    Ok(out)
}
