//! Recursive-descent parser for group expressions.
//!
//! ```text
//! expr   := term { "x" term }
//! term   := factor [ ":" factor "[" action "]" ]
//! factor := atom { "wr" atom }                     (right-associative)
//! atom   := ( "C" int | "Ab(" int { "," int } ")" | name | "(" expr ")" )
//!           { "/" "<" word { "," word } ">" }
//! action := "inv" | "triv" | "perm:" cycles { ";" cycles }
//! word   := element label | "#" int
//! ```

use semiabelian::catalog::is_catalog_name;
use thiserror::Error;

use crate::ast::{ActionSpec, GroupExpr, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: unknown group name `{name}`")]
    UnknownName {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{line}:{column}: malformed action `{text}`: {reason}")]
    Action {
        line: usize,
        column: usize,
        text: String,
        reason: String,
    },
}

pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser {
        src: text.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.expected(&["\"x\"", "\"wr\"", "\":\"", "\"/\"", "end of input"]));
    }
    Ok(e)
}

struct Parser {
    src: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn line_col(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.src[..pos.min(self.src.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn expected(&self, what: &[&str]) -> ParseError {
        let (line, column) = self.line_col(self.pos);
        let found = match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        };
        ParseError::Syntax {
            line,
            column,
            expected: what.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.expected(&[&format!("\"{c}\"")]))
        }
    }

    /// Operator keywords end at anything but a lowercase letter, so `C2xC2`
    /// and `C2 wrC2` both parse.
    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let n = kw.chars().count();
        let matches = self.src.len() >= self.pos + n
            && self.src[self.pos..self.pos + n].iter().copied().eq(kw.chars())
            && !self
                .src
                .get(self.pos + n)
                .is_some_and(|c| c.is_ascii_lowercase());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expr(&mut self) -> Result<GroupExpr, ParseError> {
        let mut left = self.term()?;
        while self.eat_keyword("x") {
            let right = self.term()?;
            left = GroupExpr::Direct(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GroupExpr, ParseError> {
        let base = self.factor()?;
        if !self.eat(':') {
            return Ok(base);
        }
        let top = self.factor()?;
        self.expect('[')?;
        let start = self.pos;
        while self.peek().is_some_and(|c| c != ']') {
            self.pos += 1;
        }
        let raw: String = self.src[start..self.pos].iter().collect();
        let action = parse_action(raw.trim()).map_err(|reason| {
            let (line, column) = self.line_col(start);
            ParseError::Action {
                line,
                column,
                text: raw.trim().to_string(),
                reason,
            }
        })?;
        self.expect(']')?;
        Ok(GroupExpr::Semidirect {
            base: Box::new(base),
            top: Box::new(top),
            action,
        })
    }

    fn factor(&mut self) -> Result<GroupExpr, ParseError> {
        let base = self.atom()?;
        if self.eat_keyword("wr") {
            let top = self.factor()?;
            return Ok(GroupExpr::Wreath(Box::new(base), Box::new(top)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<GroupExpr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut e = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                e
            }
            Some(c) if c.is_ascii_uppercase() => {
                let letters = self.take_while(|c| c.is_ascii_alphabetic());
                match letters.as_str() {
                    "C" => GroupExpr::Cyclic(self.integer()?),
                    "Ab" => {
                        self.expect('(')?;
                        let mut xs = vec![self.integer()?];
                        while self.eat(',') {
                            xs.push(self.integer()?);
                        }
                        self.expect(')')?;
                        GroupExpr::Abelian(xs)
                    }
                    _ => {
                        let digits = self.take_while(|c| c.is_ascii_digit());
                        let name = letters + &digits;
                        if !is_catalog_name(&name) {
                            let (line, column) = self.line_col(start);
                            return Err(ParseError::UnknownName { line, column, name });
                        }
                        GroupExpr::Named(name)
                    }
                }
            }
            _ => return Err(self.expected(&["\"C<n>\"", "\"Ab(...)\"", "group name", "\"(\""])),
        };
        while self.eat('/') {
            self.expect('<')?;
            let mut words = vec![self.word()?];
            while self.eat(',') {
                words.push(self.word()?);
            }
            self.expect('>')?;
            e = GroupExpr::Quotient(Box::new(e), words);
        }
        Ok(e)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += 1;
        }
        self.src[start..self.pos].iter().collect()
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| {
            self.pos = start;
            self.expected(&["integer"])
        })
    }

    /// A raw chunk up to a `,` or `>` outside brackets.
    fn word(&mut self) -> Result<Word, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(c) = self.peek() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' if depth > 0 => depth -= 1,
                ',' | '>' if depth == 0 => break,
                _ => {}
            }
            self.pos += 1;
        }
        let raw: String = self.src[start..self.pos].iter().collect();
        let raw = raw.trim();
        if raw.is_empty() || depth > 0 {
            self.pos = start;
            return Err(self.expected(&["element label", "\"#<index>\""]));
        }
        if let Some(ix) = raw.strip_prefix('#') {
            return ix.parse().map(Word::Index).map_err(|_| {
                self.pos = start;
                self.expected(&["\"#<index>\""])
            });
        }
        Ok(Word::Label(raw.to_string()))
    }
}

fn parse_action(raw: &str) -> Result<ActionSpec, String> {
    match raw {
        "inv" => return Ok(ActionSpec::Inv),
        "triv" => return Ok(ActionSpec::Triv),
        _ => {}
    }
    let Some(body) = raw.strip_prefix("perm:") else {
        return Err("expected inv, triv or perm:<cycles>".into());
    };
    body.split(';').map(parse_cycles).collect::<Result<_, _>>().map(ActionSpec::Perm)
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut rest = text.trim();
    let mut cycles = Vec::new();
    let mut seen = std::collections::HashSet::new();
    if rest.is_empty() {
        return Err("empty permutation; write () for the identity".into());
    }
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| format!("expected a cycle `(a b ...)` at `{rest}`"))?;
        let cycle: Vec<usize> = inner
            .0
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| format!("`{s}` is not an element index")))
            .collect::<Result<_, _>>()?;
        for &x in &cycle {
            if !seen.insert(x) {
                return Err(format!("index {x} appears twice"));
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = inner.1.trim_start();
    }
    Ok(cycles)
}
