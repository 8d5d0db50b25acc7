//! Runs compile and test hooks over prepared patches and counts how many
//! reach each stage. The hooks here are stand-ins built from `grep`.

use linefix::context::RepairTask;
use linefix::infer::{prepare_patches, validate_all, CategoryCounts, DecodedHypothesis, PatchStatus, PrepareOptions, ValidationHooks};

const FOO: &str = "class Foo {
   int bar;
   int increment(){
       return bar-1;
   }
}
";

fn main() -> linefix::Result<()> {
    let hyps: Vec<DecodedHypothesis> = ["return bar + 1 ;", "return Foo . bar ;", "return 1 ;", "return <unk> ;", "return bar + ;"]
        .iter()
        .map(|t| DecodedHypothesis::from_text(t))
        .collect();
    let task = RepairTask::new("Foo", FOO, 4).with_fix("return bar+1;");
    let mut candidates = prepare_patches(&hyps, &task, &PrepareOptions::default())?;
    let hooks = ValidationHooks {
        compile_cmd: Some("! grep -q '+;' {file}".into()),
        test_cmd: Some("grep -q 'bar' {file} && ! grep -q 'Foo.bar' {file}".into()),
        timeout_secs: 10,
    };
    validate_all(&mut candidates, "Foo.java", &hooks)?;
    for c in candidates.iter_mut() {
        if c.status == PatchStatus::Plausible && Some(c.prepared_line.as_str()) == task.reference_fix.as_deref() {
            c.mark_correct()?;
        }
        println!("{:<18} {:<11?} {}", c.prepared_line, c.status, c.note.as_deref().unwrap_or(""));
    }
    let counts = CategoryCounts::from_candidates(&candidates);
    println!("{counts:?}, nested: {}", counts.is_nested());
    Ok(())
}
