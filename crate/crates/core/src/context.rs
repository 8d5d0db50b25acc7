//! Abstract buggy context: the model input built from a buggy class and a
//! suspicious line.
//!
//! The buggy line is wrapped in `<START_BUG>` / `<END_BUG>`, the method that
//! contains it is kept in full, and the rest of the class is reduced to its
//! fields, initializer blocks and the signatures of the other methods and
//! constructors (their bodies become an empty `{ }` pair). Member boundaries
//! come from brace matching on the token stream; no Java parser is involved.
//! Nested types that do not contain the bug are stripped like methods.
//!
//! Package and import declarations are dropped. Static and instance
//! initializer blocks are both kept verbatim.
//!
//! [`truncate`] then cuts the sequence to a token budget: if the marked line
//! alone exceeds the budget its prefix is kept, otherwise the whole line is
//! kept and the remaining budget is split two thirds before, one third
//! after (`after = floor(r / 3)`), with any side that runs out of tokens
//! handing its share to the other.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexer::{self, Token, TokenKind, TokenSequence, END_BUG, START_BUG};

pub const DEFAULT_LIMIT: usize = 1000;

/// One bug location: the class, the suspicious line and optionally the
/// developer's fix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairTask {
    pub task_id: String,
    pub class_source: String,
    /// 1-based line number of the suspicious line.
    pub buggy_line: usize,
    /// Inclusive line range of the buggy method, derived when absent.
    pub method_span: Option<(usize, usize)>,
    pub reference_fix: Option<String>,
}

impl RepairTask {
    pub fn new(task_id: impl Into<String>, class_source: impl Into<String>, buggy_line: usize) -> Self {
        Self {
            task_id: task_id.into(),
            class_source: class_source.into(),
            buggy_line,
            method_span: None,
            reference_fix: None,
        }
    }

    pub fn with_fix(mut self, fix: impl Into<String>) -> Self {
        self.reference_fix = Some(fix.into());
        self
    }

    /// The original text of the buggy line, without its line terminator.
    pub fn buggy_line_text(&self) -> Option<&str> {
        self.class_source.lines().nth(self.buggy_line.checked_sub(1)?)
    }
}

/// Where a context token came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    BuggyLine,
    BuggyMethod,
    BuggyClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ContextScope {
    /// Class abstraction around the buggy method.
    Full,
    /// The buggy line alone.
    LineOnly,
}

/// Knobs for turning a full context into the model input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ContextOptions {
    pub scope: ContextScope,
    pub markers: bool,
    /// `None` disables truncation; written as 0 in config files.
    #[serde(with = "limit_serde")]
    pub limit: Option<usize>,
}

mod limit_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(v.unwrap_or(0) as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<usize>, D::Error> {
        let v = usize::deserialize(d)?;
        Ok((v > 0).then_some(v))
    }
}

impl Default for ContextOptions {
    fn default() -> Self {
        Self {
            scope: ContextScope::Full,
            markers: true,
            limit: Some(DEFAULT_LIMIT),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AbstractBuggyContext {
    pub tokens: TokenSequence,
    pub origins: Vec<Origin>,
    pub truncated: bool,
    /// Tokens in the buggy method (markers excluded) before truncation.
    pub method_tokens: usize,
}

impl AbstractBuggyContext {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn texts(&self) -> Vec<String> {
        lexer::texts(&self.tokens)
    }

    /// Inclusive index range of the buggy line, markers included.
    pub fn line_span(&self) -> Option<(usize, usize)> {
        let first = self.origins.iter().position(|o| *o == Origin::BuggyLine)?;
        let last = self.origins.iter().rposition(|o| *o == Origin::BuggyLine)?;
        Some((first, last))
    }

    /// Builds a context from pre-tokenized text (one sample of a token-pair
    /// corpus). Tokens between the markers are attributed to the buggy line
    /// and everything else to the class, since no finer provenance exists.
    pub fn from_token_texts(words: &[String]) -> Result<Self> {
        let tokens: TokenSequence = words.iter().map(|w| Token::from_lexeme(w)).collect();
        let start = tokens.iter().position(|t| t.text == START_BUG).ok_or(Error::MissingMarkers)?;
        let end = tokens.iter().rposition(|t| t.text == END_BUG).ok_or(Error::MissingMarkers)?;
        if end < start {
            return Err(Error::MissingMarkers);
        }
        let origins = (0..tokens.len())
            .map(|i| if (start..=end).contains(&i) { Origin::BuggyLine } else { Origin::BuggyClass })
            .collect();
        Ok(Self {
            tokens,
            origins,
            truncated: false,
            method_tokens: end - start - 1,
        })
    }

    fn select(&self, range: Range<usize>) -> Self {
        Self {
            tokens: self.tokens[range.clone()].to_vec(),
            origins: self.origins[range.clone()].to_vec(),
            truncated: self.truncated || range.len() < self.tokens.len(),
            method_tokens: self.method_tokens,
        }
    }

    fn filter(&self, keep: impl Fn(&Token, Origin) -> bool) -> Self {
        let (tokens, origins) = self
            .tokens
            .iter()
            .zip(&self.origins)
            .filter(|(t, o)| keep(t, **o))
            .map(|(t, o)| (t.clone(), *o))
            .unzip();
        Self {
            tokens,
            origins,
            truncated: self.truncated,
            method_tokens: self.method_tokens,
        }
    }

    pub fn truncate(&self, limit: usize) -> Result<Self> {
        if limit == 0 {
            return Err(Error::Config("truncation limit must be at least 1".into()));
        }
        let (start, end) = self.line_span().ok_or(Error::MissingMarkers)?;
        Ok(self.select(truncation_window(self.len(), start, end, limit)))
    }

    /// Applies scope, marker and truncation options.
    pub fn apply(&self, opts: &ContextOptions) -> Result<Self> {
        let mut ctx = match opts.scope {
            ContextScope::Full => self.clone(),
            ContextScope::LineOnly => self.filter(|_, o| o == Origin::BuggyLine),
        };
        if !opts.markers {
            ctx = ctx.filter(|t, _| !t.is_marker());
        }
        if let Some(limit) = opts.limit {
            ctx = ctx.truncate(limit)?;
        }
        Ok(ctx)
    }

    /// Lays the context out as source text: each token keeps its original
    /// line and column, removed regions disappear, and the markers sit on
    /// their own lines at the buggy line's indentation.
    pub fn render(&self) -> String {
        let line_indent = self
            .tokens
            .iter()
            .zip(&self.origins)
            .find(|(t, o)| **o == Origin::BuggyLine && !t.is_marker())
            .map_or(1, |(t, _)| t.col);
        let mut out = String::new();
        let mut prev: Option<&Token> = None;
        for tok in &self.tokens {
            let new_line = match prev {
                None => true,
                Some(p) => p.is_marker() || tok.is_marker() || p.line != tok.line,
            };
            if new_line {
                if prev.is_some() {
                    out.push('\n');
                }
                let col = if tok.is_marker() { line_indent } else { tok.col };
                out.push_str(&" ".repeat(col.saturating_sub(1)));
            } else if let Some(p) = prev {
                let end = p.col + p.text.chars().count();
                if tok.col > end {
                    out.push_str(&" ".repeat(tok.col - end));
                } else if tok.col < end && lexer::needs_space(p, tok, false, false) {
                    out.push(' ');
                }
            }
            out.push_str(&tok.text);
            prev = Some(tok);
        }
        out
    }
}

/// The window kept by truncation, for a sequence of `len` tokens whose
/// marked line spans `start..=end`.
pub fn truncation_window(len: usize, start: usize, end: usize, limit: usize) -> Range<usize> {
    if len <= limit {
        return 0..len;
    }
    let line_len = end - start + 1;
    if line_len >= limit {
        return start..start + limit;
    }
    let budget = limit - line_len;
    let avail_before = start;
    let avail_after = len - 1 - end;
    let mut after = budget / 3;
    let mut before = budget - after;
    if before > avail_before {
        before = avail_before;
        after = (budget - before).min(avail_after);
    }
    if after > avail_after {
        after = avail_after;
        before = (budget - after).min(avail_before);
    }
    start - before..end + after + 1
}

/// Truncates a marked token sequence to at most `limit` tokens.
pub fn truncate(tokens: &[Token], limit: usize) -> Result<TokenSequence> {
    if limit == 0 {
        return Err(Error::Config("truncation limit must be at least 1".into()));
    }
    let start = tokens.iter().position(|t| t.text == START_BUG).ok_or(Error::MissingMarkers)?;
    let end = tokens[start..]
        .iter()
        .position(|t| t.text == END_BUG)
        .map(|i| i + start)
        .ok_or(Error::MissingMarkers)?;
    Ok(tokens[truncation_window(tokens.len(), start, end, limit)].to_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MemberKind {
    Type,
    Method,
    Initializer,
    /// Fields, abstract methods, enum constants, stray semicolons.
    Plain,
    /// `package` / `import`.
    Header,
}

#[derive(Debug, Clone, Copy)]
struct Member {
    kind: MemberKind,
    start: usize,
    /// Index of the body's `{`, if the member has a block body.
    open: Option<usize>,
    /// Inclusive.
    end: usize,
}

struct Abstractor<'a> {
    toks: &'a [Token],
    matching: Vec<usize>,
    buggy_line: usize,
    out: Vec<Token>,
    origins: Vec<Origin>,
    method_tokens: usize,
    found: bool,
}

fn match_braces(toks: &[Token]) -> Result<Vec<usize>> {
    let mut matching = vec![usize::MAX; toks.len()];
    let mut stack = Vec::new();
    for (i, t) in toks.iter().enumerate() {
        match t.text.as_str() {
            "{" => stack.push(i),
            "}" => {
                let open = stack
                    .pop()
                    .ok_or_else(|| Error::InvalidTask(format!("unbalanced `}}` on line {}", t.line)))?;
                matching[open] = i;
                matching[i] = open;
            }
            _ => {}
        }
    }
    if let Some(&open) = stack.last() {
        return Err(Error::InvalidTask(format!("unclosed `{{` on line {}", toks[open].line)));
    }
    Ok(matching)
}

impl<'a> Abstractor<'a> {
    fn next_member(&self, start: usize, limit: usize) -> Member {
        let toks = self.toks;
        if matches!(toks[start].text.as_str(), "package" | "import") {
            let end = (start..limit).find(|&j| toks[j].text == ";").unwrap_or(limit - 1);
            return Member { kind: MemberKind::Header, start, open: None, end };
        }
        let mut parens = 0i32;
        let mut assigned = false;
        let mut j = start;
        while j < limit {
            match toks[j].text.as_str() {
                "(" => parens += 1,
                ")" => parens -= 1,
                "=" if parens == 0 => assigned = true,
                ";" if parens == 0 => {
                    return Member { kind: MemberKind::Plain, start, open: None, end: j };
                }
                "{" if assigned || parens > 0 => {
                    // array initializer, anonymous class or lambda inside a field
                    j = self.matching[j];
                }
                "{" => {
                    let kind = self.classify(start, j);
                    return Member { kind, start, open: Some(j), end: self.matching[j] };
                }
                "}" => {
                    // stray closing brace of an enclosing body; ends the member list
                    return Member { kind: MemberKind::Plain, start, open: None, end: j.saturating_sub(1).max(start) };
                }
                _ => {}
            }
            j += 1;
        }
        Member { kind: MemberKind::Plain, start, open: None, end: limit - 1 }
    }

    fn classify(&self, start: usize, open: usize) -> MemberKind {
        let header = &self.toks[start..open];
        let mut parens = 0i32;
        for (k, t) in header.iter().enumerate() {
            match t.text.as_str() {
                "(" => parens += 1,
                ")" => parens -= 1,
                "class" | "interface" | "enum" if parens == 0 => return MemberKind::Type,
                "record" if parens == 0 && header.get(k + 1).is_some_and(|n| n.kind == TokenKind::Identifier) => {
                    return MemberKind::Type
                }
                _ => {}
            }
        }
        if header.is_empty() || header.iter().all(|t| t.text == "static") {
            return MemberKind::Initializer;
        }
        if header.last().is_some_and(|t| t.text == ")") || header.iter().any(|t| t.text == "throws") {
            return MemberKind::Method;
        }
        MemberKind::Type
    }

    fn lines(&self, m: &Member) -> (usize, usize) {
        (self.toks[m.start].line, self.toks[m.end].line)
    }

    fn emit(&mut self, range: Range<usize>, origin: Origin) {
        for i in range {
            self.out.push(self.toks[i].clone());
            self.origins.push(origin);
        }
    }

    fn emit_stripped(&mut self, m: &Member) {
        let open = m.open.expect("stripped member has a body");
        self.emit(m.start..open + 1, Origin::BuggyClass);
        self.emit(m.end..m.end + 1, Origin::BuggyClass);
    }

    fn emit_buggy_method(&mut self, m: &Member) -> Result<()> {
        let range = m.start..m.end + 1;
        let on_line: Vec<usize> = range.clone().filter(|&i| self.toks[i].line == self.buggy_line).collect();
        let (Some(&first), Some(&last)) = (on_line.first(), on_line.last()) else {
            return Err(Error::InvalidTask(format!("buggy line {} is empty", self.buggy_line)));
        };
        self.emit(m.start..first, Origin::BuggyMethod);
        self.out.push(Token::marker(START_BUG, self.buggy_line));
        self.origins.push(Origin::BuggyLine);
        self.emit(first..last + 1, Origin::BuggyLine);
        self.out.push(Token::marker(END_BUG, self.buggy_line));
        self.origins.push(Origin::BuggyLine);
        self.emit(last + 1..m.end + 1, Origin::BuggyMethod);
        self.method_tokens = range.len();
        self.found = true;
        Ok(())
    }

    /// Walks the members in `range`, emitting the abstraction.
    fn body(&mut self, range: Range<usize>) -> Result<()> {
        let mut i = range.start;
        while i < range.end {
            let m = self.next_member(i, range.end);
            let (lo, hi) = self.lines(&m);
            let contains = (lo..=hi).contains(&self.buggy_line);
            match m.kind {
                MemberKind::Header if contains => return Err(Error::LineOutsideMethod(self.buggy_line)),
                MemberKind::Header => {}
                MemberKind::Plain | MemberKind::Initializer if contains => {
                    return Err(Error::LineOutsideMethod(self.buggy_line))
                }
                MemberKind::Plain | MemberKind::Initializer => self.emit(m.start..m.end + 1, Origin::BuggyClass),
                MemberKind::Method if contains => self.emit_buggy_method(&m)?,
                MemberKind::Type if contains => {
                    let open = m.open.expect("type has a body");
                    if self.toks[open].line == self.buggy_line || self.toks[m.end].line == self.buggy_line {
                        return Err(Error::LineOutsideMethod(self.buggy_line));
                    }
                    self.emit(m.start..open + 1, Origin::BuggyClass);
                    self.body(open + 1..m.end)?;
                    self.emit(m.end..m.end + 1, Origin::BuggyClass);
                }
                MemberKind::Method | MemberKind::Type => self.emit_stripped(&m),
            }
            i = m.end + 1;
        }
        Ok(())
    }
}

/// Builds the untruncated abstract buggy context of a task.
pub fn abstract_class(task: &RepairTask) -> Result<AbstractBuggyContext> {
    if let Some((lo, hi)) = task.method_span {
        if !(lo..=hi).contains(&task.buggy_line) {
            return Err(Error::InvalidTask(format!(
                "buggy line {} lies outside the method span {lo}..={hi}",
                task.buggy_line
            )));
        }
    }
    let toks = lexer::tokenize(&task.class_source)?;
    if toks.iter().any(|t| t.is_marker()) {
        return Err(Error::InvalidTask("source already contains bug markers".into()));
    }
    let mut ab = Abstractor {
        matching: match_braces(&toks)?,
        toks: &toks,
        buggy_line: task.buggy_line,
        out: Vec::new(),
        origins: Vec::new(),
        method_tokens: 0,
        found: false,
    };
    ab.body(0..toks.len())?;
    if !ab.found {
        return Err(Error::LineOutsideMethod(task.buggy_line));
    }
    Ok(AbstractBuggyContext {
        tokens: ab.out,
        origins: ab.origins,
        truncated: false,
        method_tokens: ab.method_tokens,
    })
}

/// Builds the abstract buggy context and truncates it to `limit` tokens.
pub fn build_abstract_buggy_context(task: &RepairTask, limit: usize) -> Result<AbstractBuggyContext> {
    abstract_class(task)?.truncate(limit)
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn words(ctx: &AbstractBuggyContext) -> String {
        ctx.texts().join(" ")
    }

    #[test]
    fn foo_context() {
        let ctx = build_abstract_buggy_context(&RepairTask::new("foo", FOO, 11), 1000).unwrap();
        assert_eq!(
            words(&ctx),
            "class Foo { int i = 0 ; int bar ; Foo ( int bar ) { } int decrement ( ) { } \
             int increment ( ) { <START_BUG> return bar - 1 ; <END_BUG> } }"
        );
        assert!(!ctx.truncated);
        let origin_of = |text: &str| ctx.origins[ctx.texts().iter().position(|t| t == text).unwrap()];
        assert_eq!(origin_of("increment"), Origin::BuggyMethod);
        assert_eq!(origin_of("decrement"), Origin::BuggyClass);
        assert_eq!(origin_of("<START_BUG>"), Origin::BuggyLine);
        assert_eq!(origin_of("return"), Origin::BuggyLine);
        assert_eq!(ctx.method_tokens, 11);
    }

    #[test]
    fn markers_enclose_only_line_tokens() {
        let ctx = abstract_class(&RepairTask::new("foo", FOO, 11)).unwrap();
        let (s, e) = ctx.line_span().unwrap();
        assert_eq!(ctx.tokens[s].text, START_BUG);
        assert_eq!(ctx.tokens[e].text, END_BUG);
        assert!(ctx.origins[s..=e].iter().all(|o| *o == Origin::BuggyLine));
        assert_eq!(ctx.origins.len(), ctx.tokens.len());
    }

    #[test]
    fn single_method_class() {
        let src = "class A {\n  void f() {\n    x = 1;\n  }\n}\n";
        let ctx = build_abstract_buggy_context(&RepairTask::new("a", src, 3), 1000).unwrap();
        assert_eq!(words(&ctx), "class A { void f ( ) { <START_BUG> x = 1 ; <END_BUG> } }");
        assert!(!ctx.truncated);
    }

    #[test]
    fn line_outside_method() {
        for line in [1, 2, 3] {
            let err = abstract_class(&RepairTask::new("foo", FOO, line)).unwrap_err();
            assert!(matches!(err, Error::LineOutsideMethod(_)), "line {line}: {err}");
        }
        let src = "class A {\n  static {\n    x = 1;\n  }\n  void f() {}\n}\n";
        assert!(matches!(abstract_class(&RepairTask::new("a", src, 3)), Err(Error::LineOutsideMethod(3))));
    }

    #[test]
    fn empty_line_rejected() {
        let src = "class A {\n  void f() {\n\n    x = 1; // c\n  }\n}\n";
        assert!(matches!(abstract_class(&RepairTask::new("a", src, 3)), Err(Error::InvalidTask(_))));
        let src = "class A {\n  void f() {\n    // only a comment\n  }\n}\n";
        assert!(matches!(abstract_class(&RepairTask::new("a", src, 3)), Err(Error::InvalidTask(_))));
    }

    #[test]
    fn method_span_must_contain_line() {
        let mut task = RepairTask::new("foo", FOO, 11);
        task.method_span = Some((7, 9));
        assert!(matches!(abstract_class(&task), Err(Error::InvalidTask(_))));
        task.method_span = Some((10, 12));
        assert!(abstract_class(&task).is_ok());
    }

    #[test]
    fn imports_dropped_initializers_and_nested_types() {
        let src = "package p;
import java.util.List;
public class A extends B implements C {
  static { init(); }
  { x = 2; }
  private int[] xs = {1, 2};
  private Runnable r = new Runnable() { public void run() { go(); } };
  static class Inner { void g() { h(); } }
  @Override
  public String toString() throws IOException {
    return s;
  }
  abstract void k();
  void f(int a) {
    if (a > 0) {
      a--;
    }
    new Thread() { public void run() { y(); } }.start();
  }
}
";
        let ctx = abstract_class(&RepairTask::new("a", src, 16)).unwrap();
        let text = words(&ctx);
        assert!(text.starts_with("public class A extends B implements C {"), "{text}");
        assert!(text.contains("static { init ( ) ; }"));
        assert!(text.contains("{ x = 2 ; }"));
        assert!(text.contains("private int [ ] xs = { 1 , 2 } ;"));
        assert!(text.contains("new Runnable ( ) { public void run ( ) { go ( ) ; } } ;"));
        assert!(text.contains("static class Inner { }"));
        assert!(text.contains("@ Override public String toString ( ) throws IOException { }"));
        assert!(text.contains("abstract void k ( ) ;"));
        assert!(text.contains("<START_BUG> a -- ; <END_BUG>"));
        assert!(text.contains("new Thread ( ) { public void run ( ) { y ( ) ; } } . start ( ) ;"));
        assert!(!text.contains("import"));
    }

    #[test]
    fn bug_in_nested_class_method() {
        let src = "class O {\n  int f;\n  class I {\n    int g() {\n      return 1;\n    }\n    int h() { return 2; }\n  }\n  void k() { z(); }\n}\n";
        let ctx = abstract_class(&RepairTask::new("o", src, 5)).unwrap();
        assert_eq!(
            words(&ctx),
            "class O { int f ; class I { int g ( ) { <START_BUG> return 1 ; <END_BUG> } int h ( ) { } } void k ( ) { } }"
        );
    }

    #[test]
    fn unbalanced_braces() {
        assert!(matches!(abstract_class(&RepairTask::new("a", "class A { void f() {\n x;\n}", 2)), Err(Error::InvalidTask(_))));
    }

    #[test]
    fn window_arithmetic() {
        // 5000 tokens, 100-token line in the middle
        assert_eq!(truncation_window(5000, 2450, 2549, 1000), 1850..2850);
        assert_eq!(truncation_window(800, 10, 20, 1000), 0..800);
        assert_eq!(truncation_window(5000, 100, 1299, 1000), 100..1100);
        // not enough before: surplus flows after
        assert_eq!(truncation_window(5000, 10, 19, 100), 0..100);
        // not enough after
        assert_eq!(truncation_window(5000, 4980, 4989, 100), 4900..5000);
    }

    #[test]
    fn truncate_requires_markers() {
        let toks = lexer::tokenize("a b c").unwrap();
        assert!(matches!(truncate(&toks, 2), Err(Error::MissingMarkers)));
        let toks = lexer::tokenize("a <START_BUG> b <END_BUG> c").unwrap();
        assert!(matches!(truncate(&toks, 0), Err(Error::Config(_))));
        assert_eq!(lexer::texts(&truncate(&toks, 3).unwrap()), ["<START_BUG>", "b", "<END_BUG>"]);
    }

    #[test]
    fn options() {
        let ctx = abstract_class(&RepairTask::new("foo", FOO, 11)).unwrap();
        let line = ctx
            .apply(&ContextOptions { scope: ContextScope::LineOnly, markers: true, limit: Some(1000) })
            .unwrap();
        assert_eq!(words(&line), "<START_BUG> return bar - 1 ; <END_BUG>");
        let bare = ctx
            .apply(&ContextOptions { scope: ContextScope::LineOnly, markers: false, limit: None })
            .unwrap();
        assert_eq!(words(&bare), "return bar - 1 ;");
        let short = ctx.apply(&ContextOptions { limit: Some(10), ..Default::default() }).unwrap();
        assert_eq!(short.len(), 10);
        assert!(short.truncated);
    }

    #[test]
    fn token_pair_contexts() {
        let words: Vec<String> = "int x ; <START_BUG> return x ; <END_BUG> }".split(' ').map(String::from).collect();
        let ctx = AbstractBuggyContext::from_token_texts(&words).unwrap();
        assert_eq!(ctx.line_span(), Some((3, 7)));
        assert_eq!(ctx.origins[0], Origin::BuggyClass);
        assert!(AbstractBuggyContext::from_token_texts(&words[..3]).is_err());
    }
}
