use std::path::{Path, PathBuf};

use linefix::corpus::{generate, Pattern, MINI_TEST, MINI_TRAIN};
use linefix::pipeline::{build_vocab, check_disjoint, dataset_stats, ingest_dataset, Dataset, Format};
use linefix::context::ContextOptions;

fn split(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/minicorpus").join(name)
}

fn load(name: &str) -> Dataset {
    let (ds, report) = ingest_dataset(&split(name), Format::RawJava).unwrap();
    assert!(report.rejected.is_empty(), "{:?}", report.rejected);
    assert_eq!(report.duplicates, 0);
    ds
}

#[test]
fn bundled_files_match_the_generator() {
    for (name, (seed, n)) in [("train", MINI_TRAIN), ("test", MINI_TEST)] {
        let tasks = generate(seed, n, &Pattern::ALL);
        assert_eq!(std::fs::read_dir(split(name)).unwrap().count(), n);
        for (_, t) in tasks {
            let dir = split(name).join(&t.task_id);
            assert_eq!(std::fs::read_to_string(dir.join("buggy.java")).unwrap(), t.class_source);
            let fix = std::fs::read_to_string(dir.join("fix.txt")).unwrap();
            assert_eq!(fix.trim_end(), t.reference_fix.unwrap());
        }
    }
}

#[test]
fn loads_without_rejects_and_splits_are_disjoint() {
    let train = load("train");
    let test = load("test");
    assert_eq!((train.len(), test.len()), (MINI_TRAIN.1, MINI_TEST.1));
    check_disjoint(&train, &test).unwrap();
}

#[test]
fn punctuation_ranks_near_the_top() {
    let vocab = build_vocab(&load("train"), 60, &ContextOptions::default()).unwrap();
    for p in [";", ".", "(", ")"] {
        let id = vocab.id(p).unwrap();
        assert!(id < 24, "{p} at {id}");
    }
}

#[test]
fn truncation_rate_is_a_reproducible_fraction() {
    let ds = load("test");
    let a = dataset_stats(&ds, 50).unwrap();
    let b = dataset_stats(&ds, 50).unwrap();
    assert!(a.truncation_rate > 0.0 && a.truncation_rate < 1.0, "{}", a.truncation_rate);
    assert_eq!(a.truncation_rate, b.truncation_rate);
    assert_eq!(dataset_stats(&ds, 10_000).unwrap().truncation_rate, 0.0);
}
