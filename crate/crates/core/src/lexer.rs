//! Java tokenizer and the inverse re-spacing used when a predicted token
//! sequence is turned back into a source line.
//!
//! Comments are dropped, string and char literals are single tokens with
//! their quotes, numeric literals keep prefixes and suffixes, and operators
//! are matched longest-first. The bug markers `<START_BUG>` / `<END_BUG>`
//! and the `<unk>` placeholder are recognised as whole tokens so that
//! marked contexts and raw model output can be lexed as well.
//!
//! # Spacing table
//!
//! [`detokenize`] joins tokens with a fixed table (see [`needs_space`]):
//!
//! | left                   | right                        | result |
//! |------------------------|------------------------------|--------|
//! | any                    | `;` `,` `)` `]` `.` `...` `::` | join |
//! | `(` `[` `.` `::` `@`   | any                          | join   |
//! | word (not `this`/`super`) keyword | `(`               | space  |
//! | other                  | `(` `[`                      | join   |
//! | any                    | `++` `--` (postfix)          | join   |
//! | `!` `~` `++` `--` (prefix) | any                      | join   |
//! | spaced operator        | any / any | spaced operator  | space  |
//! | arithmetic/bitwise/relational operator | any          | join   |
//! | generic `<` / `>`      | inside the type argument list | join  |
//! | everything else (word/word, `,`/x, `;`/x, `{`/`}`)   | | space  |
//!
//! Spaced operators are the assignment family, `==`, `!=`, `&&`, `||`,
//! `?`, `:` and `->`. Whenever joining two tokens would make them lex
//! differently (`a` `b`, `-` `-`, `>` `>=`) a space is inserted regardless
//! of the table, so `tokenize(detokenize(t)) == t` for lexer output.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const START_BUG: &str = "<START_BUG>";
pub const END_BUG: &str = "<END_BUG>";
pub const UNK: &str = "<unk>";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TokenKind {
    Identifier,
    Keyword,
    LiteralNumber,
    LiteralString,
    LiteralChar,
    Operator,
    Separator,
    /// `<START_BUG>` or `<END_BUG>`.
    Marker,
    /// Model vocabulary placeholders such as `<unk>`; never produced from
    /// Java text other than the literal `<unk>`.
    Special,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
    /// 1-based source line.
    pub line: usize,
    /// 1-based column (in chars) of the first character.
    pub col: usize,
}

impl Token {
    pub fn new(text: impl Into<String>, kind: TokenKind, line: usize, col: usize) -> Self {
        Self {
            text: text.into(),
            kind,
            line,
            col,
        }
    }

    pub fn marker(text: &str, line: usize) -> Self {
        Self::new(text, TokenKind::Marker, line, 0)
    }

    pub fn is_marker(&self) -> bool {
        self.kind == TokenKind::Marker
    }

    /// Builds a token from a bare lexeme, classifying it the way the lexer
    /// would. Used for model output, which carries no positions.
    pub fn from_lexeme(text: &str) -> Self {
        let kind = match tokenize(text) {
            Ok(toks) if toks.len() == 1 && toks[0].text == text => toks[0].kind,
            _ if text.starts_with('<') && text.ends_with('>') => TokenKind::Special,
            _ => TokenKind::Identifier,
        };
        Self::new(text, kind, 0, 0)
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

pub type TokenSequence = Vec<Token>;

pub fn texts(tokens: &[Token]) -> Vec<String> {
    tokens.iter().map(|t| t.text.clone()).collect()
}

const KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "false",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "null",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "true",
    "try",
    "void",
    "volatile",
    "while",
];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.binary_search(&word).is_ok()
}

// Longest first so the scan below can stop at the first prefix match.
const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "=", ">", "<", "!", "~", "?", ":",
    "+", "-", "*", "/", "&", "|", "^", "%", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@",
];

fn punct_kind(op: &str) -> TokenKind {
    match op {
        "(" | ")" | "{" | "}" | "[" | "]" | ";" | "," | "." | "..." | "@" | "::" => {
            TokenKind::Separator
        }
        _ => TokenKind::Operator,
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_part(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Scanner {
    fn new(src: &str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(i, c)| self.peek(i) == Some(c))
    }

    fn take_while(&mut self, out: &mut String, pred: impl Fn(char) -> bool) {
        while let Some(c) = self.peek(0) {
            if !pred(c) {
                break;
            }
            out.push(c);
            self.bump();
        }
    }

    fn skip_trivia(&mut self) -> Result<()> {
        loop {
            match self.peek(0) {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('/') if self.peek(1) == Some('/') => {
                    while let Some(c) = self.peek(0) {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                Some('/') if self.peek(1) == Some('*') => {
                    let line = self.line;
                    self.bump();
                    self.bump();
                    loop {
                        match self.peek(0) {
                            None => return Err(Error::Lex { line, msg: "unterminated block comment".into() }),
                            Some('*') if self.peek(1) == Some('/') => {
                                self.bump();
                                self.bump();
                                break;
                            }
                            Some(_) => {
                                self.bump();
                            }
                        }
                    }
                }
                _ => return Ok(()),
            }
        }
    }

    fn quoted(&mut self, quote: char, what: &str) -> Result<String> {
        let line = self.line;
        let mut text = String::new();
        text.push(self.bump().unwrap_or(quote));
        loop {
            match self.bump() {
                None | Some('\n') => {
                    return Err(Error::Lex { line, msg: format!("unterminated {what} literal") })
                }
                Some('\\') => {
                    text.push('\\');
                    match self.bump() {
                        None | Some('\n') => {
                            return Err(Error::Lex { line, msg: format!("unterminated {what} literal") })
                        }
                        Some(c) => text.push(c),
                    }
                }
                Some(c) if c == quote => {
                    text.push(c);
                    return Ok(text);
                }
                Some(c) => text.push(c),
            }
        }
    }

    fn text_block(&mut self) -> Result<String> {
        let line = self.line;
        let mut text = String::from("\"\"\"");
        for _ in 0..3 {
            self.bump();
        }
        loop {
            if self.starts_with("\"\"\"") {
                for _ in 0..3 {
                    self.bump();
                }
                text.push_str("\"\"\"");
                return Ok(text);
            }
            match self.bump() {
                None => return Err(Error::Lex { line, msg: "unterminated text block".into() }),
                Some('\\') => {
                    text.push('\\');
                    if let Some(c) = self.bump() {
                        text.push(c);
                    }
                }
                Some(c) => text.push(c),
            }
        }
    }

    fn number(&mut self) -> String {
        let mut text = String::new();
        let hex = self.peek(0) == Some('0') && matches!(self.peek(1), Some('x' | 'X'));
        let bin = self.peek(0) == Some('0') && matches!(self.peek(1), Some('b' | 'B'));
        if hex || bin {
            text.push(self.bump().unwrap());
            text.push(self.bump().unwrap());
            self.take_while(&mut text, |c| c.is_ascii_hexdigit() || c == '_');
            if hex && self.peek(0) == Some('.') {
                text.push('.');
                self.bump();
                self.take_while(&mut text, |c| c.is_ascii_hexdigit() || c == '_');
            }
            if hex && matches!(self.peek(0), Some('p' | 'P')) {
                self.exponent(&mut text);
            }
        } else {
            self.take_while(&mut text, |c| c.is_ascii_digit() || c == '_');
            if self.peek(0) == Some('.') {
                let next = self.peek(1);
                let fraction = match next {
                    Some(c) if c.is_ascii_digit() => true,
                    Some('e' | 'E' | 'f' | 'F' | 'd' | 'D') => true,
                    Some(c) => !(is_ident_start(c) || c == '.'),
                    None => true,
                };
                if text.is_empty() || fraction {
                    text.push('.');
                    self.bump();
                    self.take_while(&mut text, |c| c.is_ascii_digit() || c == '_');
                }
            }
            if matches!(self.peek(0), Some('e' | 'E')) {
                self.exponent(&mut text);
            }
        }
        if let Some(c @ ('l' | 'L' | 'f' | 'F' | 'd' | 'D')) = self.peek(0) {
            text.push(c);
            self.bump();
        }
        text
    }

    fn exponent(&mut self, text: &mut String) {
        let sign = matches!(self.peek(1), Some('+' | '-'));
        let digit_at = if sign { 2 } else { 1 };
        if !self.peek(digit_at).is_some_and(|c| c.is_ascii_digit()) {
            return;
        }
        text.push(self.bump().unwrap());
        if sign {
            text.push(self.bump().unwrap());
        }
        self.take_while(text, |c| c.is_ascii_digit() || c == '_');
    }
}

/// Splits Java source into tokens, dropping whitespace and comments.
pub fn tokenize(source: &str) -> Result<TokenSequence> {
    let mut sc = Scanner::new(source);
    let mut out = Vec::new();
    loop {
        sc.skip_trivia()?;
        let Some(c) = sc.peek(0) else { break };
        let (line, col) = (sc.line, sc.col);
        let (text, kind) = if c == '<' && [START_BUG, END_BUG, UNK].iter().any(|m| sc.starts_with(m)) {
            let m = [START_BUG, END_BUG, UNK].into_iter().find(|m| sc.starts_with(m)).unwrap();
            for _ in 0..m.chars().count() {
                sc.bump();
            }
            let kind = if m == UNK { TokenKind::Special } else { TokenKind::Marker };
            (m.to_string(), kind)
        } else if c == '"' && sc.starts_with("\"\"\"") {
            (sc.text_block()?, TokenKind::LiteralString)
        } else if c == '"' {
            (sc.quoted('"', "string")?, TokenKind::LiteralString)
        } else if c == '\'' {
            (sc.quoted('\'', "char")?, TokenKind::LiteralChar)
        } else if c.is_ascii_digit() || (c == '.' && sc.peek(1).is_some_and(|d| d.is_ascii_digit())) {
            (sc.number(), TokenKind::LiteralNumber)
        } else if is_ident_start(c) {
            let mut word = String::new();
            sc.take_while(&mut word, is_ident_part);
            let kind = if is_keyword(&word) { TokenKind::Keyword } else { TokenKind::Identifier };
            (word, kind)
        } else if let Some(op) = OPERATORS.iter().find(|op| sc.starts_with(op)) {
            for _ in 0..op.len() {
                sc.bump();
            }
            (op.to_string(), punct_kind(op))
        } else {
            return Err(Error::Lex { line, msg: format!("unexpected character {c:?}") });
        };
        out.push(Token { text, kind, line, col });
    }
    Ok(out)
}

const SPACED_OPS: &[&str] = &[
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=", "==", "!=", "&&",
    "||", "?", ":", "->",
];

fn is_word(t: &Token) -> bool {
    matches!(
        t.kind,
        TokenKind::Identifier
            | TokenKind::Keyword
            | TokenKind::LiteralNumber
            | TokenKind::LiteralString
            | TokenKind::LiteralChar
    )
}

/// Marks `<` / `>` tokens that delimit a type-argument list, e.g. the
/// brackets in `Map<String, List<T>>` or `Comparable<?>`.
fn generic_brackets(tokens: &[Token]) -> Vec<bool> {
    let mut generic = vec![false; tokens.len()];
    let mut i = 0;
    while i < tokens.len() {
        let t = &tokens[i].text;
        let opens = t == "<"
            && i > 0
            && (tokens[i - 1].kind == TokenKind::Identifier || tokens[i - 1].text == ".");
        if !opens {
            i += 1;
            continue;
        }
        let mut depth = 0i32;
        let mut close = None;
        for (j, tok) in tokens.iter().enumerate().skip(i) {
            match tok.text.as_str() {
                "<" => depth += 1,
                ">" => depth -= 1,
                ">>" => depth -= 2,
                ">>>" => depth -= 3,
                "," | "?" | "." | "[" | "]" | "&" | "extends" | "super" => {}
                _ if tok.kind == TokenKind::Identifier => {}
                _ if matches!(tok.text.as_str(), "int" | "long" | "double" | "float" | "boolean" | "char" | "byte" | "short") => {}
                _ => break,
            }
            if depth <= 0 {
                if depth == 0 {
                    close = Some(j);
                }
                break;
            }
        }
        if let Some(j) = close {
            for flag in &mut generic[i..=j] {
                *flag = true;
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    generic
}

/// The spacing table: whether a space goes between `left` and `right`.
/// `left_generic` / `right_generic` say whether each token sits inside a
/// type-argument list.
pub fn needs_space(left: &Token, right: &Token, left_generic: bool, right_generic: bool) -> bool {
    let (l, r) = (left.text.as_str(), right.text.as_str());
    if matches!(r, ";" | "," | ")" | "]" | "." | "..." | "::") {
        return false;
    }
    if matches!(l, "(" | "[" | "." | "::" | "@") {
        return false;
    }
    if l == "," {
        return true;
    }
    if left_generic && right_generic {
        // inside `<...>`: only `extends`/`super` bounds get spaces
        return l == "extends" || l == "super" || r == "extends" || r == "super";
    }
    if r == "(" {
        return left.kind == TokenKind::Keyword && !matches!(l, "this" | "super")
            || SPACED_OPS.contains(&l);
    }
    if r == "[" {
        return SPACED_OPS.contains(&l) || l == "return";
    }
    if left_generic && l.starts_with('>') {
        // closing `>` of a type: `List<T> x`, `Comparable<?>)`
        return is_word(right) || r == "{";
    }
    if right_generic && r == "<" {
        return false;
    }
    if matches!(r, "++" | "--") {
        return !(is_word(left) || matches!(l, ")" | "]"));
    }
    if matches!(l, "!" | "~") {
        return false;
    }
    if matches!(l, "++" | "--") {
        return !(is_word(right) || r == "(");
    }
    if SPACED_OPS.contains(&l) || SPACED_OPS.contains(&r) {
        return true;
    }
    if left.kind == TokenKind::Operator || right.kind == TokenKind::Operator {
        // `return -1` / `return !x`: keyword before an operator keeps its space
        return left.kind == TokenKind::Keyword && right.kind == TokenKind::Operator;
    }
    true
}

fn lexes_as(joined: &str, parts: &[&Token]) -> bool {
    match tokenize(joined) {
        Ok(toks) => {
            toks.len() == parts.len()
                && toks.iter().zip(parts).all(|(a, b)| a.text == b.text && a.kind == b.kind)
        }
        Err(_) => false,
    }
}

/// Re-spaces a single line of tokens into source text.
pub fn detokenize(tokens: &[Token]) -> Result<String> {
    if let Some(bad) = tokens
        .iter()
        .find(|t| matches!(t.kind, TokenKind::Marker | TokenKind::Special))
    {
        return Err(Error::Detokenize(format!("token {} cannot be rendered", bad.text)));
    }
    let generic = generic_brackets(tokens);
    let mut out = String::new();
    let mut prev_joined = false;
    for (i, tok) in tokens.iter().enumerate() {
        if i > 0 {
            let prev = &tokens[i - 1];
            let mut space = needs_space(prev, tok, generic[i - 1], generic[i]);
            if !space {
                space = !lexes_as(&format!("{}{}", prev.text, tok.text), &[prev, tok]);
            }
            if !space && prev_joined {
                // three-way merges such as `.` `.` `.`
                let before = &tokens[i - 2];
                let triple = format!("{}{}{}", before.text, prev.text, tok.text);
                space = !lexes_as(&triple, &[before, prev, tok]);
            }
            if space {
                out.push(' ');
            }
            prev_joined = !space;
        }
        out.push_str(&tok.text);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex(src: &str) -> Vec<String> {
        texts(&tokenize(src).unwrap())
    }

    fn line(words: &[&str]) -> String {
        let toks: Vec<Token> = words.iter().map(|w| Token::from_lexeme(w)).collect();
        detokenize(&toks).unwrap()
    }

    #[test]
    fn keywords_sorted_for_binary_search() {
        let mut sorted = KEYWORDS.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, KEYWORDS);
    }

    #[test]
    fn simple_return() {
        assert_eq!(lex("return bar-1;"), ["return", "bar", "-", "1", ";"]);
        assert!(lex("").is_empty());
        assert!(lex("  // only a comment\n").is_empty());
    }

    #[test]
    fn comments_and_compound_operators() {
        assert_eq!(
            lex("if (a <= b) { /* c */ x++; }"),
            ["if", "(", "a", "<=", "b", ")", "{", "x", "++", ";", "}"]
        );
        assert_eq!(lex("/** doc */ a >>>= b -> c :: d"), ["a", ">>>=", "b", "->", "c", "::", "d"]);
    }

    #[test]
    fn literals() {
        assert_eq!(lex("x = \"a b\\\"c\";"), ["x", "=", "\"a b\\\"c\"", ";"]);
        assert_eq!(lex("c = '\\n';"), ["c", "=", "'\\n'", ";"]);
        assert_eq!(lex("0x1F 10e-9 3L 1.5f .5 1e10 0b101 1_000"), ["0x1F", "10e-9", "3L", "1.5f", ".5", "1e10", "0b101", "1_000"]);
        let toks = tokenize("10e-15").unwrap();
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].kind, TokenKind::LiteralNumber);
        assert_eq!(lex("a[1].length"), ["a", "[", "1", "]", ".", "length"]);
        assert_eq!(lex("x = 1.;"), ["x", "=", "1.", ";"]);
    }

    #[test]
    fn annotations_and_markers() {
        assert_eq!(lex("@Override void f()"), ["@", "Override", "void", "f", "(", ")"]);
        let toks = tokenize("<START_BUG> return <unk> ; <END_BUG>").unwrap();
        assert_eq!(toks[0].kind, TokenKind::Marker);
        assert_eq!(toks[2].kind, TokenKind::Special);
        assert_eq!(toks[4].kind, TokenKind::Marker);
        assert_eq!(lex("a<b"), ["a", "<", "b"]);
    }

    #[test]
    fn unicode_identifiers_verbatim() {
        assert_eq!(lex("int größe = 1;"), ["int", "größe", "=", "1", ";"]);
    }

    #[test]
    fn positions() {
        let toks = tokenize("class A {\n  int x;\n}").unwrap();
        assert_eq!((toks[3].line, toks[3].col), (2, 3));
        assert_eq!(toks.last().unwrap().line, 3);
    }

    #[test]
    fn lex_errors_name_the_line() {
        match tokenize("a\n\"open") {
            Err(Error::Lex { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(tokenize("x /* never closed"), Err(Error::Lex { line: 1, .. })));
        assert!(matches!(tokenize("'a"), Err(Error::Lex { .. })));
    }

    #[test]
    fn respacing_examples() {
        assert_eq!(line(&["return", "Foo", ".", "bar", ";"]), "return Foo.bar;");
        assert_eq!(line(&["return", "bar", "+", "1", ";"]), "return bar+1;");
        assert_eq!(line(&["return", "1", ";"]), "return 1;");
        assert_eq!(line(&["int", "i", "=", "0", ";"]), "int i = 0;");
        assert_eq!(line(&["if", "(", "a", "==", "null", ")", "{"]), "if (a == null) {");
        assert_eq!(line(&["x", "++", ";"]), "x++;");
        assert_eq!(line(&["return", "-", "1", ";"]), "return -1;");
        assert_eq!(line(&["a", "-", "-", "b"]), "a- -b");
        assert_eq!(line(&["List", "<", "String", ">", "xs", "=", "f", "(", ")", ";"]), "List<String> xs = f();");
        assert_eq!(
            line(&["return", "getPct", "(", "(", "(", "Comparable", "<", "?", ">", ")", "(", "v", ")", ")", ")", ";"]),
            "return getPct(((Comparable<?>)(v)));"
        );
        assert_eq!(line(&["foo", "(", "a", ",", "b", ")", ";"]), "foo(a, b);");
        assert_eq!(line(&["for", "(", "int", "i", "=", "0", ";", "i", "<", "n", ";", "i", "++", ")", "{"]), "for (int i = 0; i<n; i++) {");
        assert_eq!(line(&["@", "Override"]), "@Override");
        assert_eq!(line(&["return", "!", "done", ";"]), "return !done;");
        assert_eq!(line(&["int", "[", "]", "a", ";"]), "int[] a;");
    }

    #[test]
    fn detokenize_rejects_markers_and_unk() {
        let toks = tokenize("return <unk> ;").unwrap();
        assert!(detokenize(&toks).is_err());
        let toks = tokenize("<START_BUG> x ;").unwrap();
        assert!(detokenize(&toks).is_err());
    }

    #[test]
    fn from_lexeme_kinds() {
        assert_eq!(Token::from_lexeme("return").kind, TokenKind::Keyword);
        assert_eq!(Token::from_lexeme("\"a b\"").kind, TokenKind::LiteralString);
        assert_eq!(Token::from_lexeme("<unk>").kind, TokenKind::Special);
        assert_eq!(Token::from_lexeme("<s>").kind, TokenKind::Special);
        assert_eq!(Token::from_lexeme("+=").kind, TokenKind::Operator);
    }
}
