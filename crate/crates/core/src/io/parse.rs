//! Fact-style text formats: one `head(arg, ...).` statement at a time,
//! `#` comments to end of line.

use std::collections::{BTreeMap, BTreeSet};

use crate::classical::{Af, ClassicalLabel, ClassicalLabeling};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fas::Fas;
use crate::fuzzy_set::{ArgumentId, FuzzySet};
use crate::labeling::{FuzzyLabeling, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl Position {
    fn error(self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    text: String,
    at: Position,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Statement {
    head: Token,
    args: Vec<Token>,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    at: Position,
}

fn word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '.'
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            at: Position { line: 1, column: 1 },
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.at.line += 1;
            self.at.column = 1;
        } else {
            self.at.column += 1;
        }
        Some(c)
    }

    fn skip_blank(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == '#' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, wanted: char) -> Result<()> {
        self.skip_blank();
        let at = self.at;
        match self.bump() {
            Some(c) if c == wanted => Ok(()),
            Some(c) => Err(at.error(format!("expected `{wanted}`, found `{c}`"))),
            None => Err(at.error(format!("expected `{wanted}`, found end of input"))),
        }
    }

    /// A name or decimal literal. A trailing `.` is left for the statement
    /// terminator.
    fn word(&mut self, what: &str) -> Result<Token> {
        self.skip_blank();
        let at = self.at;
        let mut text = String::new();
        while let Some(&c) = self.chars.peek() {
            if !word_char(c) {
                break;
            }
            text.push(c);
            self.bump();
        }
        if text.is_empty() {
            return Err(match self.chars.peek() {
                Some(c) => at.error(format!("expected {what}, found `{c}`")),
                None => at.error(format!("expected {what}, found end of input")),
            });
        }
        Ok(Token { text, at })
    }

    fn statement(&mut self) -> Result<Option<Statement>> {
        self.skip_blank();
        if self.chars.peek().is_none() {
            return Ok(None);
        }
        let head = self.word("a statement")?;
        self.expect('(')?;
        let mut args = vec![self.word("an argument")?];
        loop {
            self.skip_blank();
            let at = self.at;
            match self.bump() {
                Some(',') => args.push(self.word("an argument")?),
                Some(')') => break,
                Some(c) => return Err(at.error(format!("expected `,` or `)`, found `{c}`"))),
                None => return Err(at.error("unterminated statement")),
            }
        }
        self.expect('.')?;
        Ok(Some(Statement { head, args }))
    }
}

fn statements(text: &str) -> Result<Vec<Statement>> {
    let mut lexer = Lexer::new(text);
    let mut out = Vec::new();
    while let Some(s) = lexer.statement()? {
        out.push(s);
    }
    Ok(out)
}

fn name(tok: &Token) -> Result<ArgumentId> {
    ArgumentId::new(tok.text.as_str()).map_err(|e| tok.at.error(e.to_string()))
}

fn degree(tok: &Token) -> Result<Degree> {
    tok.text.parse::<Degree>().map_err(|e| tok.at.error(e.to_string()))
}

fn arity(st: &Statement, expected: usize) -> Result<()> {
    if st.args.len() != expected {
        return Err(st.head.at.error(format!(
            "`{}` takes {expected} arguments, found {}",
            st.head.text,
            st.args.len()
        )));
    }
    Ok(())
}

fn unknown_head(st: &Statement, allowed: &str) -> Error {
    st.head
        .at
        .error(format!("unknown statement `{}`; expected {allowed}", st.head.text))
}

/// A parsed system with the declaration site of each argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FasDocument {
    pub source: String,
    pub fas: Fas,
    pub positions: BTreeMap<ArgumentId, Position>,
}

/// Parses `arg(name, degree).` and `att(from, to, weight).` statements.
pub fn parse_fas(text: &str) -> Result<FasDocument> {
    let mut fas = Fas::new();
    let mut positions = BTreeMap::new();
    for st in statements(text)? {
        match st.head.text.as_str() {
            "arg" => {
                arity(&st, 2)?;
                let id = name(&st.args[0])?;
                let d = degree(&st.args[1])?;
                fas.add_argument(id.clone(), d)
                    .map_err(|e| st.head.at.error(e.to_string()))?;
                positions.insert(id, st.head.at);
            }
            "att" => {
                arity(&st, 3)?;
                let from = name(&st.args[0])?;
                let to = name(&st.args[1])?;
                let w = degree(&st.args[2])?;
                fas.add_attack(from, to, w)
                    .map_err(|e| st.head.at.error(e.to_string()))?;
            }
            _ => return Err(unknown_head(&st, "`arg` or `att`")),
        }
    }
    Ok(FasDocument {
        source: text.to_string(),
        fas,
        positions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingDocument {
    pub source: String,
    pub labeling: FuzzyLabeling,
}

/// Parses `lab(name, a, r, u).` statements. Postulates are not enforced.
pub fn parse_labeling(text: &str) -> Result<LabelingDocument> {
    let mut labeling = FuzzyLabeling::new();
    for st in statements(text)? {
        if st.head.text != "lab" {
            return Err(unknown_head(&st, "`lab`"));
        }
        arity(&st, 4)?;
        let id = name(&st.args[0])?;
        let t = Triple::new(degree(&st.args[1])?, degree(&st.args[2])?, degree(&st.args[3])?);
        if labeling.insert(id.clone(), t).is_some() {
            return Err(st.head.at.error(format!("duplicate argument `{id}`")));
        }
    }
    Ok(LabelingDocument {
        source: text.to_string(),
        labeling,
    })
}

/// Parses `ext(name, degree).` statements into a fuzzy set.
pub fn parse_extension(text: &str) -> Result<FuzzySet> {
    let mut seen = BTreeSet::new();
    let mut set = FuzzySet::new();
    for st in statements(text)? {
        if st.head.text != "ext" {
            return Err(unknown_head(&st, "`ext`"));
        }
        arity(&st, 2)?;
        let id = name(&st.args[0])?;
        if !seen.insert(id.clone()) {
            return Err(st.head.at.error(format!("duplicate argument `{id}`")));
        }
        set.insert(id, degree(&st.args[1])?);
    }
    Ok(set)
}

/// Parses `arg(name).` and `att(from, to).` statements.
pub fn parse_af(text: &str) -> Result<Af> {
    let mut af = Af::new();
    for st in statements(text)? {
        let r = match st.head.text.as_str() {
            "arg" => {
                arity(&st, 1)?;
                af.add_argument(name(&st.args[0])?)
            }
            "att" => {
                arity(&st, 2)?;
                af.add_attack(name(&st.args[0])?, name(&st.args[1])?)
            }
            _ => return Err(unknown_head(&st, "`arg` or `att`")),
        };
        r.map_err(|e| st.head.at.error(e.to_string()))?;
    }
    Ok(af)
}

/// Parses `lab(name, in|out|undec).` statements.
pub fn parse_classical_labeling(text: &str) -> Result<ClassicalLabeling> {
    let mut lab = ClassicalLabeling::new();
    for st in statements(text)? {
        if st.head.text != "lab" {
            return Err(unknown_head(&st, "`lab`"));
        }
        arity(&st, 2)?;
        let id = name(&st.args[0])?;
        let label: ClassicalLabel = st.args[1]
            .text
            .parse()
            .map_err(|e: Error| st.args[1].at.error(e.to_string()))?;
        if lab.insert(id.clone(), label).is_some() {
            return Err(st.head.at.error(format!("duplicate argument `{id}`")));
        }
    }
    Ok(lab)
}
