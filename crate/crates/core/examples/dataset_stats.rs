//! Length distributions, truncation rate and token frequencies of a
//! dataset; defaults to the bundled training split.

use std::path::PathBuf;

use linefix::pipeline::{dataset_stats, ingest_dataset, Format};

fn main() -> linefix::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/minicorpus/train"));
    let (data, report) = ingest_dataset(&dir, Format::RawJava)?;
    println!("{} loaded, {} duplicates, {} rejected", report.loaded, report.duplicates, report.rejected.len());
    for limit in [40, 60, 1000] {
        println!("truncation rate at {limit}: {:.3}", dataset_stats(&data, limit)?.truncation_rate);
    }
    print!("{}", dataset_stats(&data, 1000)?.render(15));
    Ok(())
}
