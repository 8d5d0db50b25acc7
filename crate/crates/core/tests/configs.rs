use std::path::Path;

use linefix::infer::ValidationHooks;
use linefix::pipeline::{resolve_entries, AblationGrid, ExperimentConfig};

fn read(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)).unwrap()
}

#[test]
fn mini_config_round_trips() {
    let cfg = ExperimentConfig::from_toml(&read("mini.toml")).unwrap();
    cfg.validate().unwrap();
    assert_eq!(cfg.model.hidden, 32);
    assert_eq!(cfg.context.limit, Some(1000));
    assert_eq!(ExperimentConfig::from_toml(&cfg.to_toml().unwrap()).unwrap(), cfg);
}

#[test]
fn ablation_grid_resolves_against_mini() {
    let golden = ExperimentConfig::from_toml(&read("mini.toml")).unwrap();
    let grid = AblationGrid::from_toml(&read("ablation.toml")).unwrap();
    let entries = resolve_entries(&golden, &grid).unwrap();
    let baseline = &entries.iter().find(|(e, _)| e.id == "baseline").unwrap().1;
    assert!(!baseline.model.copy);
    assert_eq!(baseline.beam, 1);
    assert!(!baseline.context.markers);
    for (_, cfg) in &entries {
        cfg.validate().unwrap();
    }
}

#[test]
fn hooks_file_parses() {
    let hooks: ValidationHooks = toml::from_str(&read("hooks.toml")).unwrap();
    assert_eq!(hooks.timeout_secs, 300);
    assert!(hooks.compile_cmd.unwrap().contains("{file}"));
}
