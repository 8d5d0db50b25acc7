//! Exact-match evaluation on the bundled test split, followed by the
//! analysis of where copied tokens come from.
//!
//! ```text
//! cargo run --release --example evaluate -- minicorpus.ckpt [beam]
//! ```

use std::path::Path;

use linefix::infer::BeamConfig;
use linefix::net::Checkpoint;
use linefix::pipeline::{copy_origin_analysis, evaluate_exact_match, ingest_dataset, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let ck = Checkpoint::load(args.next().unwrap_or_else(|| "minicorpus.ckpt".into()).as_ref())?;
    let beam = args.next().map_or(Ok(50), |s| s.parse())?;
    let test_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/minicorpus/test");
    let (test, _) = ingest_dataset(&test_dir, Format::RawJava)?;
    let report = evaluate_exact_match(&ck, &test, &BeamConfig::with_beam(beam))?;
    println!("exact match {}/{} with beam {beam}", report.solved, report.total);
    println!("methods under 100 tokens: {}/{}", report.medium_solved, report.medium_total);
    let mut ranks: Vec<usize> = report.verdicts.iter().filter_map(|v| v.rank).collect();
    ranks.sort_unstable();
    println!("ranks of the correct line: {ranks:?}");
    let copy = copy_origin_analysis(&ck, &test, &report)?;
    for (bucket, n) in &copy.histogram {
        println!("{bucket:?}: {n}");
    }
    if let Some(d) = copy.median_distance() {
        println!("median distance of copied context tokens: {d}");
    }
    Ok(())
}
