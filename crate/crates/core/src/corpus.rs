//! Synthetic one-line bug/fix corpus.
//!
//! Every sample is a small class with freshly invented identifiers and one
//! buggy line inside a method. Patterns differ in where the tokens of the
//! fix come from:
//!
//! | pattern          | buggy line            | fix                   | fix tokens from |
//! |------------------|-----------------------|-----------------------|-----------------|
//! | `Increment`      | `return v - 1;`       | `return v + 1;`       | line            |
//! | `Boundary`       | `if (p > v) {`        | `if (p >= v) {`       | line            |
//! | `NullCheck`      | `if (p == null) {`    | `if (p != null) {`    | line            |
//! | `SwapOperands`   | `return p / v;`       | `return v / p;`       | line            |
//! | `NegateBoolean`  | `return true;`        | `return false;`       | vocabulary      |
//! | `SentinelZero`   | `return -1;`          | `return 0;`           | vocabulary      |
//! | `WrongVariable`  | `return typo + v;`    | `return p + v;`       | method          |
//! | `WrongCall`      | `return typo(p);`     | `return helper(p);`   | class           |
//! | `WrongField`     | `this.typo = p;`      | `this.field = p;`     | class           |

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::context::RepairTask;
use crate::error::{Error, Result};
use crate::lexer::is_keyword;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    Increment,
    Boundary,
    NullCheck,
    SwapOperands,
    NegateBoolean,
    SentinelZero,
    WrongVariable,
    WrongCall,
    WrongField,
}

impl Pattern {
    pub const ALL: [Pattern; 9] = [
        Pattern::Increment,
        Pattern::Boundary,
        Pattern::NullCheck,
        Pattern::SwapOperands,
        Pattern::NegateBoolean,
        Pattern::SentinelZero,
        Pattern::WrongVariable,
        Pattern::WrongCall,
        Pattern::WrongField,
    ];
}

const ONSETS: [&str; 16] = ["b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z", "ch", "st"];
const VOWELS: [&str; 5] = ["a", "e", "i", "o", "u"];
const CODAS: [&str; 6] = ["", "", "n", "r", "x", "l"];

struct Names<'a> {
    rng: &'a mut ChaCha8Rng,
    used: HashSet<String>,
}

impl Names<'_> {
    fn fresh(&mut self, capital: bool) -> String {
        loop {
            let syllables = self.rng.gen_range(2..=3);
            let mut s = String::new();
            for _ in 0..syllables {
                s.push_str(ONSETS.choose(self.rng).expect("non-empty"));
                s.push_str(VOWELS.choose(self.rng).expect("non-empty"));
                s.push_str(CODAS.choose(self.rng).expect("non-empty"));
            }
            if capital {
                s = s[..1].to_uppercase() + &s[1..];
            }
            if !is_keyword(&s) && self.used.insert(s.clone()) {
                return s;
            }
        }
    }
}

/// Method text (lines without indentation), index of the buggy line within
/// it, and the fixed line.
fn target_method(p: Pattern, n: &mut Names, field: &str, helper: &str, k: u32) -> (Vec<String>, usize, String) {
    let name = n.fresh(false);
    let param = n.fresh(false);
    let local = n.fresh(false);
    let lines = |v: &[String]| v.to_vec();
    match p {
        Pattern::Increment => (
            lines(&[
                format!("public int {name}(int {param}) {{"),
                format!("int {local} = {param} * {k};"),
                format!("return {local} - 1;"),
                "}".into(),
            ]),
            2,
            format!("return {local} + 1;"),
        ),
        Pattern::Boundary => (
            lines(&[
                format!("public int {name}(int {param}) {{"),
                format!("int {local} = {k};"),
                format!("if ({param} > {local}) {{"),
                format!("return {param};"),
                "}".into(),
                format!("return {local};"),
                "}".into(),
            ]),
            2,
            format!("if ({param} >= {local}) {{"),
        ),
        Pattern::NullCheck => (
            lines(&[
                format!("public boolean {name}(String {param}) {{"),
                format!("if ({param} == null) {{"),
                format!("return {param}.isEmpty();"),
                "}".into(),
                format!("return {field} > {k};"),
                "}".into(),
            ]),
            1,
            format!("if ({param} != null) {{"),
        ),
        Pattern::SwapOperands => (
            lines(&[
                format!("public int {name}(int {param}) {{"),
                format!("int {local} = {field} + {k};"),
                format!("return {param} / {local};"),
                "}".into(),
            ]),
            2,
            format!("return {local} / {param};"),
        ),
        Pattern::NegateBoolean => (
            lines(&[
                format!("public boolean {name}(int {param}) {{"),
                format!("{field} = {param} + {k};"),
                "return true;".into(),
                "}".into(),
            ]),
            2,
            "return false;".into(),
        ),
        Pattern::SentinelZero => (
            lines(&[
                format!("public int {name}(int {param}) {{"),
                format!("if ({param} < {k}) {{"),
                format!("return {param};"),
                "}".into(),
                "return -1;".into(),
                "}".into(),
            ]),
            4,
            "return 0;".into(),
        ),
        Pattern::WrongVariable => {
            let typo = n.fresh(false);
            (
                lines(&[
                    format!("public int {name}(int {param}) {{"),
                    format!("int {local} = {k} * {field};"),
                    format!("return {typo} + {local};"),
                    "}".into(),
                ]),
                2,
                format!("return {param} + {local};"),
            )
        }
        Pattern::WrongCall => {
            let typo = n.fresh(false);
            (
                lines(&[
                    format!("public int {name}(int {param}) {{"),
                    format!("return {typo}({param});"),
                    "}".into(),
                ]),
                1,
                format!("return {helper}({param});"),
            )
        }
        Pattern::WrongField => {
            let typo = n.fresh(false);
            (
                lines(&[
                    format!("public void {name}(int {param}) {{"),
                    format!("this.{typo} = {param};"),
                    "}".into(),
                ]),
                1,
                format!("this.{field} = {param};"),
            )
        }
    }
}

/// One sample of the given pattern.
pub fn make_sample(rng: &mut ChaCha8Rng, pattern: Pattern, id: &str) -> RepairTask {
    let mut names = Names { rng, used: HashSet::new() };
    let class = names.fresh(true);
    let field = names.fresh(false);
    let label = names.fresh(false);
    let helper = names.fresh(false);
    let ctor_arg = names.fresh(false);
    let helper_arg = names.fresh(false);
    let other = names.fresh(false);
    let k = names.rng.gen_range(2..10);
    let k2 = names.rng.gen_range(2..10);
    let with_label = names.rng.gen_bool(0.5);
    let other_first = names.rng.gen_bool(0.5);
    let (method, bug_idx, fix) = target_method(pattern, &mut names, &field, &helper, k);

    let mut out: Vec<String> = vec![format!("public class {class} {{")];
    out.push(format!("    private int {field};"));
    if with_label {
        out.push(format!("    private String {label} = \"{}\";", label.to_uppercase()));
    }
    out.push(String::new());
    out.push(format!("    public {class}(int {ctor_arg}) {{"));
    out.push(format!("        this.{field} = {ctor_arg};"));
    out.push("    }".into());
    out.push(String::new());
    out.push(format!("    private int {helper}(int {helper_arg}) {{"));
    out.push(format!("        return {helper_arg} * {k2};"));
    out.push("    }".into());
    let other_method = [
        String::new(),
        format!("    public boolean {other}() {{"),
        format!("        return {field} > {k2};"),
        "    }".into(),
    ];
    if other_first {
        out.extend(other_method.iter().cloned());
    }
    out.push(String::new());
    let mut depth = 1usize;
    let mut buggy_line = 0;
    for (i, l) in method.iter().enumerate() {
        if l.starts_with('}') {
            depth -= 1;
        }
        out.push(format!("{}{}", "    ".repeat(depth), l));
        if i == bug_idx {
            buggy_line = out.len();
        }
        if l.ends_with('{') {
            depth += 1;
        }
    }
    if !other_first {
        out.extend(other_method.iter().cloned());
    }
    out.push("}".into());
    let mut source = out.join("\n");
    source.push('\n');
    RepairTask::new(id, source, buggy_line).with_fix(fix)
}

/// Seed and size of the bundled training split.
pub const MINI_TRAIN: (u64, usize) = (1, 400);
/// Seed and size of the bundled test split.
pub const MINI_TEST: (u64, usize) = (2, 60);

/// `count` samples cycling through the patterns in a seeded order.
pub fn generate(seed: u64, count: usize, patterns: &[Pattern]) -> Vec<(Pattern, RepairTask)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut order = patterns.to_vec();
    for i in 0..count {
        if i % order.len() == 0 {
            order.shuffle(&mut rng);
        }
        let p = order[i % order.len()];
        out.push((p, make_sample(&mut rng, p, &format!("s{seed}-{i:04}"))));
    }
    out
}

/// Writes tasks in the raw-java layout, one directory per task.
pub fn write_raw_java(dir: &Path, tasks: &[RepairTask]) -> Result<()> {
    for t in tasks {
        let d = dir.join(&t.task_id);
        fs::create_dir_all(&d).map_err(|e| Error::io(&d, e))?;
        let fix = t.reference_fix.as_deref().ok_or_else(|| Error::Dataset(format!("{}: no fix", t.task_id)))?;
        let files = [
            ("buggy.java", t.class_source.clone()),
            ("meta", format!("line = {}\nid = \"{}\"\n", t.buggy_line, t.task_id)),
            ("fix.txt", format!("{fix}\n")),
        ];
        for (name, text) in files {
            let p = d.join(name);
            fs::write(&p, text).map_err(|e| Error::io(&p, e))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::{abstract_class, Origin};
    use crate::lexer::{texts, tokenize};

    #[test]
    fn every_pattern_builds_a_context() {
        for (p, task) in generate(5, 90, &Pattern::ALL) {
            let ctx = abstract_class(&task).unwrap_or_else(|e| panic!("{p:?}: {e}\n{}", task.class_source));
            let line = task.buggy_line_text().unwrap().trim().to_string();
            let fix = texts(&tokenize(task.reference_fix.as_deref().unwrap()).unwrap());
            assert_ne!(texts(&tokenize(&line).unwrap()), fix, "{p:?}");
            let origin_of = |tok: &str| {
                ctx.tokens.iter().zip(&ctx.origins).filter(|(t, _)| t.text == tok).map(|(_, o)| *o).min()
            };
            let line_toks = texts(&tokenize(&line).unwrap());
            let furthest = fix
                .iter()
                .filter(|t| t.chars().next().is_some_and(|c| c.is_alphabetic()) && !is_keyword(t))
                .filter_map(|t| origin_of(t))
                .max();
            match p {
                Pattern::WrongVariable => assert_eq!(furthest, Some(Origin::BuggyMethod)),
                Pattern::WrongCall | Pattern::WrongField => assert_eq!(furthest, Some(Origin::BuggyClass)),
                Pattern::NegateBoolean | Pattern::SentinelZero => assert_eq!(furthest, None),
                _ => {
                    assert_eq!(furthest, Some(Origin::BuggyLine), "{p:?}");
                    assert!(fix.iter().all(|t| line_toks.contains(t) || [">=", "!=", "+"].contains(&t.as_str())));
                }
            }
        }
    }

    #[test]
    fn generation_is_seeded() {
        let a = generate(1, 12, &Pattern::ALL);
        assert_eq!(a, generate(1, 12, &Pattern::ALL));
        assert_ne!(a, generate(2, 12, &Pattern::ALL));
    }
}
