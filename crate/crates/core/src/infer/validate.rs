//! Running external compile and test hooks against candidate patches.

use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::patch::{PatchCandidate, PatchStatus};
use crate::error::{Error, Result};

/// Shell command templates; `{file}` is replaced by the patched file path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationHooks {
    pub compile_cmd: Option<String>,
    pub test_cmd: Option<String>,
    #[serde(default = "default_timeout")]
    pub timeout_secs: u64,
}

fn default_timeout() -> u64 {
    300
}

impl Default for ValidationHooks {
    fn default() -> Self {
        Self {
            compile_cmd: None,
            test_cmd: None,
            timeout_secs: default_timeout(),
        }
    }
}

enum HookOutcome {
    Passed,
    Failed(Option<i32>),
    TimedOut,
}

fn run_hook(template: &str, file: &Path, timeout: Duration) -> Result<HookOutcome> {
    let cmd = template.replace("{file}", &file.display().to_string());
    let mut child = Command::new("sh")
        .arg("-c")
        .arg(&cmd)
        .current_dir(file.parent().unwrap_or(Path::new(".")))
        .stdin(Stdio::null())
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .map_err(|e| Error::io(Path::new("sh"), e))?;
    let start = Instant::now();
    loop {
        if let Some(status) = child.try_wait().map_err(|e| Error::io(Path::new("sh"), e))? {
            return Ok(if status.success() {
                HookOutcome::Passed
            } else {
                HookOutcome::Failed(status.code())
            });
        }
        if start.elapsed() >= timeout {
            let _ = child.kill();
            let _ = child.wait();
            return Ok(HookOutcome::TimedOut);
        }
        std::thread::sleep(Duration::from_millis(10));
    }
}

/// Writes the patched source to a scratch directory under `file_name` and
/// runs the hooks: compile failure leaves the patch generated, a compiling
/// patch whose tests fail is compilable, and passing both makes it
/// plausible. A missing hook stops promotion at that stage.
pub fn validate_patch(candidate: &PatchCandidate, file_name: &str, hooks: &ValidationHooks) -> Result<(PatchStatus, Option<String>)> {
    let dir = tempfile::tempdir().map_err(|e| Error::io(Path::new("tempdir"), e))?;
    let name = Path::new(file_name).file_name().unwrap_or(file_name.as_ref());
    let path = dir.path().join(name);
    std::fs::write(&path, &candidate.patched_source).map_err(|e| Error::io(&path, e))?;
    let timeout = Duration::from_secs(hooks.timeout_secs);
    let stages = [(&hooks.compile_cmd, "compile"), (&hooks.test_cmd, "test")];
    let mut status = PatchStatus::Generated;
    for (i, (hook, stage)) in stages.into_iter().enumerate() {
        let Some(template) = hook else {
            return Ok((status, Some(format!("no {stage} hook"))));
        };
        match run_hook(template, &path, timeout)? {
            HookOutcome::Passed => {
                status = if i == 0 { PatchStatus::Compilable } else { PatchStatus::Plausible };
            }
            HookOutcome::Failed(code) => {
                let code = code.map_or("signal".to_string(), |c| c.to_string());
                return Ok((status, Some(format!("{stage} failed ({code})"))));
            }
            HookOutcome::TimedOut => {
                return Ok((PatchStatus::Generated, Some(format!("{stage} timed out after {}s", hooks.timeout_secs))));
            }
        }
    }
    Ok((status, None))
}

/// Validates every candidate in place.
pub fn validate_all(candidates: &mut [PatchCandidate], file_name: &str, hooks: &ValidationHooks) -> Result<()> {
    for c in candidates.iter_mut() {
        let (status, note) = validate_patch(c, file_name, hooks)?;
        c.status = status;
        c.note = note;
    }
    Ok(())
}

/// Cumulative category sizes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryCounts {
    pub generated: usize,
    pub compilable: usize,
    pub plausible: usize,
    pub correct: usize,
}

impl CategoryCounts {
    pub fn from_candidates(candidates: &[PatchCandidate]) -> Self {
        let at_least = |s: PatchStatus| candidates.iter().filter(|c| c.status >= s).count();
        Self {
            generated: candidates.len(),
            compilable: at_least(PatchStatus::Compilable),
            plausible: at_least(PatchStatus::Plausible),
            correct: at_least(PatchStatus::Correct),
        }
    }

    pub fn is_nested(&self) -> bool {
        self.correct <= self.plausible && self.plausible <= self.compilable && self.compilable <= self.generated
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::RepairTask;
    use crate::infer::patch::{prepare_patches, DecodedHypothesis, PrepareOptions};

    fn candidate(line: &str) -> PatchCandidate {
        let task = RepairTask::new("t", "class A {\n  int f() {\n    return 0;\n  }\n}\n", 3);
        prepare_patches(&[DecodedHypothesis::from_text(line)], &task, &PrepareOptions::default())
            .unwrap()
            .remove(0)
    }

    fn hooks(compile: &str, test: &str) -> ValidationHooks {
        ValidationHooks {
            compile_cmd: Some(compile.into()),
            test_cmd: Some(test.into()),
            timeout_secs: 5,
        }
    }

    #[test]
    fn statuses_follow_hook_results() {
        let c = candidate("return 1 ;");
        assert_eq!(validate_patch(&c, "A.java", &hooks("false", "true")).unwrap().0, PatchStatus::Generated);
        assert_eq!(validate_patch(&c, "A.java", &hooks("true", "false")).unwrap().0, PatchStatus::Compilable);
        assert_eq!(validate_patch(&c, "A.java", &hooks("true", "true")).unwrap().0, PatchStatus::Plausible);
        let none = ValidationHooks::default();
        assert_eq!(validate_patch(&c, "A.java", &none).unwrap().0, PatchStatus::Generated);
    }

    #[test]
    fn hooks_see_the_patched_file() {
        let c = candidate("return 1 ;");
        let h = hooks("grep -q 'return 1;' {file}", "test -f A.java");
        assert_eq!(validate_patch(&c, "A.java", &h).unwrap().0, PatchStatus::Plausible);
        let other = candidate("return 2 ;");
        assert_eq!(validate_patch(&other, "A.java", &h).unwrap().0, PatchStatus::Generated);
    }

    #[test]
    fn timeout_leaves_generated() {
        let c = candidate("return 1 ;");
        let h = ValidationHooks {
            compile_cmd: Some("sleep 5".into()),
            test_cmd: None,
            timeout_secs: 0,
        };
        let (status, note) = validate_patch(&c, "A.java", &h).unwrap();
        assert_eq!(status, PatchStatus::Generated);
        assert!(note.unwrap().contains("timed out"));
    }

    #[test]
    fn counts_are_cumulative() {
        let mut cs: Vec<PatchCandidate> = (0..4).map(|i| candidate(&format!("return {i} ;"))).collect();
        cs[1].status = PatchStatus::Compilable;
        cs[2].status = PatchStatus::Plausible;
        cs[3].status = PatchStatus::Correct;
        let counts = CategoryCounts::from_candidates(&cs);
        assert_eq!(counts, CategoryCounts { generated: 4, compilable: 3, plausible: 2, correct: 1 });
        assert!(counts.is_nested());
    }
}
