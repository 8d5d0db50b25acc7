//! Loading, filtering and splitting repair datasets.
//!
//! Two on-disk formats are read:
//!
//! * `raw-java`: one directory per sample holding `buggy.java`, `meta`
//!   (TOML with `line` and optional `id`) and `fix.txt` (the fixed line);
//! * `token-pairs`: a directory with `src.txt` and `tgt.txt`, one sample per
//!   line, tokens separated by whitespace, sources carrying the bug markers.
//!
//! Datasets are written and re-read as JSON lines.

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::context::{abstract_class, AbstractBuggyContext, RepairTask};
use crate::error::{Error, Result};
use crate::lexer::{texts, tokenize};

/// Fixes of this many tokens or more are rejected.
pub const MAX_FIX_TOKENS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    RawJava,
    TokenPairs,
    Jsonl,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw-java" => Ok(Format::RawJava),
            "token-pairs" => Ok(Format::TokenPairs),
            "jsonl" => Ok(Format::Jsonl),
            _ => Err(Error::Config(format!("unknown dataset format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitTag {
    Train,
    Valid,
    Test,
}

/// One (context, fix) pair. `task` is present when the sample came from
/// source files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub id: String,
    /// untruncated abstract buggy context
    pub context: AbstractBuggyContext,
    pub fix: Vec<String>,
    pub task: Option<RepairTask>,
}

impl Sample {
    pub fn from_task(task: RepairTask) -> Result<Self> {
        let fix_text = task
            .reference_fix
            .clone()
            .ok_or_else(|| Error::Dataset(format!("{}: no reference fix", task.task_id)))?;
        let fix = texts(&tokenize(&fix_text)?);
        Ok(Self {
            id: task.task_id.clone(),
            context: abstract_class(&task)?,
            fix,
            task: Some(task),
        })
    }

    /// Hash of the token-level (context, fix) pair.
    pub fn pair_hash(&self) -> String {
        let mut h = Sha256::new();
        for t in &self.context.tokens {
            h.update(t.text.as_bytes());
            h.update([0u8]);
        }
        h.update([1u8]);
        for t in &self.fix {
            h.update(t.as_bytes());
            h.update([0u8]);
        }
        hex::encode(h.finalize())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub samples: Vec<Sample>,
    pub split: Option<SplitTag>,
    pub provenance: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub loaded: usize,
    pub duplicates: usize,
    /// (sample id, reason)
    pub rejected: Vec<(String, String)>,
}

#[derive(Debug, Deserialize)]
struct Meta {
    line: usize,
    id: Option<String>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn fix_line(text: &str) -> std::result::Result<String, String> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    match lines.len() {
        0 => Err("fix deletes the line".into()),
        1 => Ok(lines[0].trim().to_string()),
        n => Err(format!("fix spans {n} lines")),
    }
}

fn check_fix(fix: &[String]) -> std::result::Result<(), String> {
    if fix.is_empty() {
        Err("fix deletes the line".into())
    } else if fix.len() >= MAX_FIX_TOKENS {
        Err(format!("fix has {} tokens", fix.len()))
    } else {
        Ok(())
    }
}

fn load_raw_sample(dir: &Path) -> std::result::Result<Sample, String> {
    let source = read(&dir.join("buggy.java")).map_err(|e| e.to_string())?;
    let meta: Meta = toml::from_str(&read(&dir.join("meta")).map_err(|e| e.to_string())?).map_err(|e| format!("meta: {e}"))?;
    let fix = fix_line(&read(&dir.join("fix.txt")).map_err(|e| e.to_string())?)?;
    let id = meta
        .id
        .unwrap_or_else(|| dir.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default());
    let sample = Sample::from_task(RepairTask::new(id, source, meta.line).with_fix(fix)).map_err(|e| e.to_string())?;
    check_fix(&sample.fix)?;
    Ok(sample)
}

fn dir_name(p: &Path) -> String {
    p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Loads a dataset; malformed samples are skipped and listed in the report,
/// exact duplicates are dropped.
pub fn ingest_dataset(path: &Path, format: Format) -> Result<(Dataset, IngestReport)> {
    let mut report = IngestReport::default();
    let mut candidates: Vec<Sample> = Vec::new();
    match format {
        Format::RawJava => {
            let mut dirs: Vec<_> = fs::read_dir(path)
                .map_err(|e| Error::io(path, e))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_dir())
                .collect();
            dirs.sort();
            for dir in dirs {
                match load_raw_sample(&dir) {
                    Ok(s) => candidates.push(s),
                    Err(reason) => {
                        log::warn!("skipping {}: {reason}", dir.display());
                        report.rejected.push((dir_name(&dir), reason));
                    }
                }
            }
        }
        Format::TokenPairs => {
            let src = read(&path.join("src.txt"))?;
            let tgt = read(&path.join("tgt.txt"))?;
            let (src, tgt): (Vec<&str>, Vec<&str>) = (src.lines().collect(), tgt.lines().collect());
            if src.len() != tgt.len() {
                return Err(Error::Dataset(format!("{} source lines but {} target lines", src.len(), tgt.len())));
            }
            for (i, (s, t)) in src.iter().zip(&tgt).enumerate() {
                let id = format!("{}:{}", dir_name(path), i + 1);
                let words: Vec<String> = s.split_whitespace().map(String::from).collect();
                let fix: Vec<String> = t.split_whitespace().map(String::from).collect();
                let sample = AbstractBuggyContext::from_token_texts(&words)
                    .map_err(|e| e.to_string())
                    .and_then(|context| {
                        check_fix(&fix)?;
                        Ok(Sample { id: id.clone(), context, fix, task: None })
                    });
                match sample {
                    Ok(s) => candidates.push(s),
                    Err(reason) => {
                        log::warn!("skipping {id}: {reason}");
                        report.rejected.push((id, reason));
                    }
                }
            }
        }
        Format::Jsonl => {
            for (i, line) in read(path)?.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Sample>(line) {
                    Ok(s) => candidates.push(s),
                    Err(e) => report.rejected.push((format!("line {}", i + 1), e.to_string())),
                }
            }
        }
    }
    let mut seen = HashSet::new();
    let mut samples = Vec::with_capacity(candidates.len());
    for s in candidates {
        if seen.insert(s.pair_hash()) {
            samples.push(s);
        } else {
            report.duplicates += 1;
        }
    }
    report.loaded = samples.len();
    Ok((
        Dataset {
            samples,
            split: None,
            provenance: path.display().to_string(),
        },
        report,
    ))
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn with_split(mut self, split: SplitTag) -> Self {
        self.split = Some(split);
        self
    }

    pub fn write_jsonl(&self, path: &Path) -> Result<()> {
        let mut f = fs::File::create(path).map_err(|e| Error::io(path, e))?;
        for s in &self.samples {
            let line = serde_json::to_string(s)?;
            writeln!(f, "{line}").map_err(|e| Error::io(path, e))?;
        }
        Ok(())
    }

    /// Drops samples whose (context, fix) pair occurs in `other`.
    pub fn remove_overlap(&mut self, other: &Dataset) -> usize {
        let theirs: HashSet<String> = other.samples.iter().map(Sample::pair_hash).collect();
        let before = self.samples.len();
        self.samples.retain(|s| !theirs.contains(&s.pair_hash()));
        before - self.samples.len()
    }
}

/// Fails if any (context, fix) pair appears in both datasets.
pub fn check_disjoint(train: &Dataset, test: &Dataset) -> Result<()> {
    let ours: HashSet<String> = train.samples.iter().map(Sample::pair_hash).collect();
    if let Some(s) = test.samples.iter().find(|s| ours.contains(&s.pair_hash())) {
        return Err(Error::Dataset(format!("sample {} appears in both training and test data", s.id)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CLASS: &str = "class A {\n  int f(int x) {\n    return x-1;\n  }\n}\n";

    fn write_sample(root: &Path, name: &str, source: &str, line: usize, fix: &str) {
        let d = root.join(name);
        fs::create_dir_all(&d).unwrap();
        fs::write(d.join("buggy.java"), source).unwrap();
        fs::write(d.join("meta"), format!("line = {line}\nid = \"{name}\"\n")).unwrap();
        fs::write(d.join("fix.txt"), fix).unwrap();
    }

    #[test]
    fn raw_java_filters_and_dedups() {
        let dir = tempfile::tempdir().unwrap();
        write_sample(dir.path(), "a", CLASS, 3, "return x+1;\n");
        write_sample(dir.path(), "b", CLASS, 3, "return x + 1;");
        write_sample(dir.path(), "c", CLASS, 3, "\n");
        write_sample(dir.path(), "d", CLASS, 3, "x++;\nreturn x;");
        write_sample(dir.path(), "e", CLASS, 1, "class B {");
        fs::create_dir_all(dir.path().join("f")).unwrap();
        let (ds, rep) = ingest_dataset(dir.path(), Format::RawJava).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds.samples[0].fix, ["return", "x", "+", "1", ";"]);
        assert_eq!(rep.duplicates, 1);
        let rejected: Vec<&str> = rep.rejected.iter().map(|r| r.0.as_str()).collect();
        assert_eq!(rejected, ["c", "d", "e", "f"]);
        assert!(rep.rejected[0].1.contains("deletes"));
        assert!(rep.rejected[2].1.contains("outside"));
    }

    #[test]
    fn token_pairs_and_jsonl_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("src.txt"), "int f ( ) { <START_BUG> return 0 ; <END_BUG> }\nno markers here\n").unwrap();
        fs::write(dir.path().join("tgt.txt"), "return 1 ;\nreturn 2 ;\n").unwrap();
        let (ds, rep) = ingest_dataset(dir.path(), Format::TokenPairs).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(rep.rejected.len(), 1);
        let jsonl = dir.path().join("d.jsonl");
        ds.write_jsonl(&jsonl).unwrap();
        let (back, _) = ingest_dataset(&jsonl, Format::Jsonl).unwrap();
        assert_eq!(back.samples, ds.samples);
    }

    #[test]
    fn mismatched_pair_files_fail() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("src.txt"), "a\nb\n").unwrap();
        fs::write(dir.path().join("tgt.txt"), "a\n").unwrap();
        assert!(ingest_dataset(dir.path(), Format::TokenPairs).is_err());
    }

    #[test]
    fn overlap_detection() {
        let s = Sample::from_task(RepairTask::new("a", CLASS, 3).with_fix("return x+1;")).unwrap();
        let train = Dataset { samples: vec![s.clone()], split: Some(SplitTag::Train), provenance: "t".into() };
        let mut test = Dataset { samples: vec![s], split: Some(SplitTag::Test), provenance: "t".into() };
        assert!(check_disjoint(&train, &test).is_err());
        assert_eq!(test.remove_overlap(&train), 1);
        check_disjoint(&train, &test).unwrap();
    }
}
