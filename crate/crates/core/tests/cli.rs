use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const TINY: &str = r#"
vocab_size = 40
beam = 5
max_len = 20

[model]
emb_dim = 8
hidden = 8

[train]
batch_size = 4
iterations = 20
eval_every = 10
eval_train_samples = 8
"#;

const FOO: &str = "class Foo {
   int i = 0;
   int bar;
   Foo (int bar){
       this.bar = bar;
   }
   int decrement(){
       return bar-1;
   }
   int increment(){
       return bar-1;
   }
}
";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linefix"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn test_split() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/minicorpus/test")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["repair", "--help"])), 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&run(&[])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["repair", "--line", "3"])), 1);
    assert_eq!(code(&run(&["stats", "--data", "x", "--beam", "many"])), 1);
}

#[test]
fn runtime_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("Foo.java");
    std::fs::write(&file, FOO).unwrap();
    let missing = dir.path().join("none.ckpt");
    let out = run(&["repair", "--file", s(&file), "--line", "11", "--checkpoint", s(&missing)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(code(&run(&["stats", "--data", s(&dir.path().join("nothing"))])), 2);
    assert_eq!(code(&run(&["stats", "--data", s(&test_split()), "--format", "csv"])), 2);
}

#[test]
fn ingest_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let out_file = dir.path().join("test.jsonl");
    let out = run(&["ingest", "--data", s(&test_split()), "--out", s(&out_file)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert_eq!(text.lines().count(), 60);

    let stats = run(&["stats", "--data", s(&out_file), "--top", "3", "--truncation", "50"]);
    assert_eq!(code(&stats), 0);
    let report = String::from_utf8(stats.stdout).unwrap();
    assert!(report.starts_with("samples: 60\n"), "{report}");
    assert_eq!(report.lines().filter(|l| l.starts_with(char::is_numeric)).count(), 3);
}

#[test]
fn train_then_repair_eval_and_analyse() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("tiny.toml");
    std::fs::write(&cfg, TINY).unwrap();
    let ck = dir.path().join("model.ckpt");
    let metrics = dir.path().join("metrics.csv");
    let snaps = dir.path().join("snaps");
    let out = run(&[
        "--config", s(&cfg), "--seed", "3", "--checkpoint", s(&ck),
        "train", "--data", s(&test_split()), "--metrics", s(&metrics), "--snapshots", s(&snaps),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(ck.exists());
    assert_eq!(std::fs::read_to_string(&metrics).unwrap().lines().count(), 1 + 4);
    assert_eq!(std::fs::read_dir(&snaps).unwrap().count(), 2);

    let file = dir.path().join("Foo.java");
    std::fs::write(&file, FOO).unwrap();
    let common = ["--config", s(&cfg), "--checkpoint", s(&ck)];
    let repair = bin().args(common).args(["repair", "--file", s(&file), "--line", "11"]).output().unwrap();
    assert_eq!(code(&repair), 0, "{}", String::from_utf8_lossy(&repair.stderr));
    let diffs = String::from_utf8(repair.stdout).unwrap();
    let stderr = String::from_utf8(repair.stderr).unwrap();
    assert!(stderr.contains("candidates"), "{stderr}");
    for block in diffs.split("--- a/").skip(1) {
        assert!(block.starts_with("Foo.java\n+++ b/Foo.java\n"), "{block}");
        assert_eq!(block.lines().filter(|l| l.starts_with('+') && !l.starts_with("+++")).count(), 1);
    }

    let outside = bin().args(common).args(["repair", "--file", s(&file), "--line", "3"]).output().unwrap();
    assert_eq!(code(&outside), 2);

    let eval = bin().args(common).args(["--beam", "3", "eval", "--data", s(&test_split())]).output().unwrap();
    assert_eq!(code(&eval), 0);
    assert!(String::from_utf8(eval.stdout).unwrap().contains("/60"));

    let copy = bin().args(common).args(["copy-analysis", "--data", s(&test_split())]).output().unwrap();
    assert_eq!(code(&copy), 0);
    assert!(String::from_utf8(copy.stdout).unwrap().starts_with("solved: "));
}
