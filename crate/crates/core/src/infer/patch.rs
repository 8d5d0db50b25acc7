//! Turning decoded hypotheses into source patches.

use diffy::DiffOptions;
use serde::{Deserialize, Serialize};

use crate::context::RepairTask;
use crate::error::{Error, Result};
use crate::lexer::{detokenize, Token, TokenKind};
use crate::vocab::{decode_texts, Vocabulary, EOS_ID};

/// A hypothesis as token text, in beam order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecodedHypothesis {
    pub tokens: Vec<String>,
    pub log_prob: f64,
}

impl DecodedHypothesis {
    /// Whitespace-separated tokens, log-probability 0.
    pub fn from_text(text: &str) -> Self {
        Self {
            tokens: text.split_whitespace().map(String::from).collect(),
            log_prob: 0.0,
        }
    }
}

/// Maps extended ids back to text, dropping the end token.
pub fn decode_hypothesis(ids: &[usize], log_prob: f64, vocab: &Vocabulary, oov: &[String]) -> Result<DecodedHypothesis> {
    let ids = match ids.last() {
        Some(&EOS_ID) => &ids[..ids.len() - 1],
        _ => ids,
    };
    Ok(DecodedHypothesis {
        tokens: decode_texts(ids, vocab, oov)?,
        log_prob,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatchStatus {
    Generated,
    Compilable,
    Plausible,
    /// plausible and confirmed equivalent to the human fix by an operator
    Correct,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatchCandidate {
    /// 1-based position in the beam output
    pub rank: usize,
    pub tokens: Vec<String>,
    pub log_prob: f64,
    pub prepared_line: String,
    pub patched_source: String,
    pub diff: String,
    pub status: PatchStatus,
    pub note: Option<String>,
}

impl PatchCandidate {
    /// Records the operator's equivalence verdict; only plausible patches
    /// can be correct.
    pub fn mark_correct(&mut self) -> Result<()> {
        if self.status != PatchStatus::Plausible {
            return Err(Error::InvalidTask(format!("patch {} is {:?}, not plausible", self.rank, self.status)));
        }
        self.status = PatchStatus::Correct;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrepareOptions {
    /// path shown in the diff headers
    pub file_name: String,
    /// drop later candidates whose prepared line repeats an earlier one
    pub dedup: bool,
}

impl Default for PrepareOptions {
    fn default() -> Self {
        Self {
            file_name: "Buggy.java".into(),
            dedup: false,
        }
    }
}

/// Replaces line `line_no` (1-based) keeping its indentation and line ending.
pub fn splice_line(source: &str, line_no: usize, new_line: &str) -> Result<String> {
    let lines: Vec<&str> = source.split_inclusive('\n').collect();
    if line_no == 0 || line_no > lines.len() {
        return Err(Error::InvalidTask(format!("line {line_no} is outside the file")));
    }
    let old = lines[line_no - 1];
    let body = old.trim_end_matches(['\n', '\r']);
    let ending = &old[body.len()..];
    let indent: String = body.chars().take_while(|c| c.is_whitespace()).collect();
    let mut out = String::with_capacity(source.len() + new_line.len());
    for (i, l) in lines.iter().enumerate() {
        if i == line_no - 1 {
            out.push_str(&indent);
            out.push_str(new_line);
            out.push_str(ending);
        } else {
            out.push_str(l);
        }
    }
    Ok(out)
}

pub fn unified_diff(original: &str, modified: &str, file_name: &str) -> String {
    DiffOptions::new()
        .set_original_filename(format!("a/{file_name}"))
        .set_modified_filename(format!("b/{file_name}"))
        .create_patch(original, modified)
        .to_string()
}

/// Re-spaced line for a hypothesis, or `None` if it is empty or holds a
/// special or marker token.
pub fn prepare_line(tokens: &[String]) -> Option<String> {
    if tokens.is_empty() {
        return None;
    }
    let toks: Vec<Token> = tokens.iter().map(|t| Token::from_lexeme(t)).collect();
    if toks.iter().any(|t| matches!(t.kind, TokenKind::Marker | TokenKind::Special)) {
        return None;
    }
    detokenize(&toks).ok()
}

/// Filters hypotheses with unknown or special tokens (and empty ones),
/// re-spaces the rest and splices each into the buggy line of the task's
/// class source. Beam order is preserved.
pub fn prepare_patches(hyps: &[DecodedHypothesis], task: &RepairTask, opts: &PrepareOptions) -> Result<Vec<PatchCandidate>> {
    let mut out: Vec<PatchCandidate> = Vec::new();
    for (i, h) in hyps.iter().enumerate() {
        let Some(line) = prepare_line(&h.tokens) else { continue };
        if opts.dedup && out.iter().any(|c| c.prepared_line == line) {
            continue;
        }
        let patched = splice_line(&task.class_source, task.buggy_line, &line)?;
        out.push(PatchCandidate {
            rank: i + 1,
            tokens: h.tokens.clone(),
            log_prob: h.log_prob,
            diff: unified_diff(&task.class_source, &patched, &opts.file_name),
            prepared_line: line,
            patched_source: patched,
            status: PatchStatus::Generated,
            note: None,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FOO: &str = "class Foo {\n    int bar;\n    int increment() {\n        return bar-1;\n    }\n}\n";

    fn foo_hypotheses() -> Vec<DecodedHypothesis> {
        ["return <unk> ;", "return Foo . bar ;", "return bar ;", "return bar + 1 ;", "return 1 ;"]
            .iter()
            .map(|s| DecodedHypothesis::from_text(s))
            .collect()
    }

    #[test]
    fn unknown_hypothesis_is_dropped_and_rest_respaced() {
        let task = RepairTask::new("foo", FOO, 4);
        let c = prepare_patches(&foo_hypotheses(), &task, &PrepareOptions::default()).unwrap();
        let lines: Vec<&str> = c.iter().map(|c| c.prepared_line.as_str()).collect();
        assert_eq!(lines, ["return Foo.bar;", "return bar;", "return bar+1;", "return 1;"]);
        assert_eq!(c.iter().map(|c| c.rank).collect::<Vec<_>>(), [2, 3, 4, 5]);
    }

    #[test]
    fn diff_applies_and_keeps_indentation() {
        let task = RepairTask::new("foo", FOO, 4);
        let c = prepare_patches(&foo_hypotheses(), &task, &PrepareOptions::default()).unwrap();
        let first = &c[0];
        assert!(first.patched_source.contains("\n        return Foo.bar;\n"));
        assert!(first.diff.starts_with("--- a/Buggy.java\n+++ b/Buggy.java\n"));
        assert!(first.diff.contains("-        return bar-1;\n+        return Foo.bar;\n"));
        let patch = diffy::Patch::from_str(&first.diff).unwrap();
        assert_eq!(diffy::apply(FOO, &patch).unwrap(), first.patched_source);
    }

    #[test]
    fn all_unknown_gives_nothing() {
        let task = RepairTask::new("foo", FOO, 4);
        let hyps = vec![DecodedHypothesis::from_text("<unk> ;"), DecodedHypothesis::from_text("")];
        assert!(prepare_patches(&hyps, &task, &PrepareOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn identical_line_kept_unless_dedup() {
        let task = RepairTask::new("foo", FOO, 4);
        let hyps = vec![
            DecodedHypothesis::from_text("return bar - 1 ;"),
            DecodedHypothesis::from_text("return bar - 1 ;"),
        ];
        assert_eq!(prepare_patches(&hyps, &task, &PrepareOptions::default()).unwrap().len(), 2);
        let dedup = PrepareOptions { dedup: true, ..Default::default() };
        let c = prepare_patches(&hyps, &task, &dedup).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].prepared_line, "return bar-1;");
    }

    #[test]
    fn splice_handles_crlf_and_bounds() {
        assert_eq!(splice_line("a\r\n\tb\r\n", 2, "c").unwrap(), "a\r\n\tc\r\n");
        assert_eq!(splice_line("a\nb", 2, "c").unwrap(), "a\nc");
        assert!(splice_line("a\n", 3, "c").is_err());
        assert!(splice_line("a\n", 0, "c").is_err());
    }

    #[test]
    fn only_plausible_can_be_marked_correct() {
        let task = RepairTask::new("foo", FOO, 4);
        let mut c = prepare_patches(&foo_hypotheses(), &task, &PrepareOptions::default()).unwrap();
        assert!(c[0].mark_correct().is_err());
        c[0].status = PatchStatus::Plausible;
        c[0].mark_correct().unwrap();
        assert_eq!(c[0].status, PatchStatus::Correct);
    }
}
