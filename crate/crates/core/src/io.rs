//! Text formats for function tables (`.qpf`), set functions (`.qsf`) and
//! unary maps (`.qum`).
//!
//! ```text
//! qpf 1                    qsf 1                    qum 1
//! chain <m> arity <n>      arity <n> chain <m>      chain <m>
//! <mⁿ values>              <2ⁿ values>              <m values>
//! ```
//!
//! Values are whitespace separated and may span any number of lines. Function
//! tables list values with the last coordinate varying fastest; set functions
//! list them in bitmask order.

use thiserror::Error;

use crate::chain::{Chain, Elem};
use crate::error::Error;
use crate::func::{self, DiscreteFunction, UnaryMap};
use crate::poly::SetFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("expected `{expected}`, found `{found}`")]
    BadMagic { expected: &'static str, found: String },
    #[error("unsupported format version `{0}`")]
    UnsupportedVersion(String),
    #[error("malformed header: expected `{0}`")]
    MalformedHeader(&'static str),
    #[error("`{0}` is not a nonnegative integer")]
    InvalidNumber(String),
    #[error("value {value} out of range for a chain of size {size}")]
    OutOfRange { value: u64, size: usize },
    #[error("expected {expected} values, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("{0}")]
    Invalid(Box<Error>),
}

/// Any of the three file kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableFile {
    Function(DiscreteFunction),
    SetFunction(SetFunction),
    UnaryMap(UnaryMap),
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    lines: Vec<(usize, &'a str)>,
    end: (usize, usize),
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
        let end = lines.last().map_or((1, 1), |&(n, l)| (n, l.chars().count() + 1));
        Lexer { lines, end }
    }

    fn tokens_of(line: usize, text: &'a str) -> Vec<Token<'a>> {
        let mut out = Vec::new();
        let mut start = None;
        for (col, (byte, ch)) in text.char_indices().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((b, c))) => {
                    out.push(Token { text: &text[b..byte], line, column: c + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, c)) = start {
            out.push(Token { text: &text[b..], line, column: c + 1 });
        }
        out
    }

    /// Tokens of the `k`-th nonblank line, with its line number.
    fn header_line(&self, k: usize) -> Option<(usize, Vec<Token<'a>>)> {
        self.lines
            .iter()
            .filter(|(_, l)| !l.trim().is_empty())
            .nth(k)
            .map(|&(n, l)| (n, Self::tokens_of(n, l)))
    }

    /// Tokens after the first two nonblank lines.
    fn body(&self) -> Vec<Token<'a>> {
        let mut seen = 0;
        let mut out = Vec::new();
        for &(n, l) in &self.lines {
            if seen < 2 {
                if !l.trim().is_empty() {
                    seen += 1;
                }
                continue;
            }
            out.extend(Self::tokens_of(n, l));
        }
        out
    }
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn number(tok: &Token<'_>) -> Result<u64, ParseError> {
    tok.text
        .parse::<u64>()
        .map_err(|_| err(tok.line, tok.column, ParseErrorKind::InvalidNumber(tok.text.to_string())))
}

fn magic(lex: &Lexer<'_>, expected: &'static str) -> Result<(), ParseError> {
    let (line, toks) = lex.header_line(0).ok_or_else(|| err(1, 1, ParseErrorKind::Empty))?;
    let first = toks[0];
    if first.text != expected {
        return Err(err(line, first.column, ParseErrorKind::BadMagic {
            expected,
            found: first.text.to_string(),
        }));
    }
    match toks.get(1) {
        Some(v) if v.text == "1" && toks.len() == 2 => Ok(()),
        Some(v) => Err(err(line, v.column, ParseErrorKind::UnsupportedVersion(v.text.to_string()))),
        None => Err(err(line, first.column + first.text.len(), ParseErrorKind::MalformedHeader("<magic> 1"))),
    }
}

/// Parses the second header line against a `key value` pattern such as
/// `["chain", "arity"]`; returns the values in order.
fn header_fields(
    lex: &Lexer<'_>,
    keys: &[&str],
    shape: &'static str,
) -> Result<(usize, Vec<(u64, Token<'static>)>), ParseError> {
    let (line, toks) = lex
        .header_line(1)
        .ok_or_else(|| err(lex.end.0 + 1, 1, ParseErrorKind::MalformedHeader(shape)))?;
    if toks.len() != 2 * keys.len() {
        let col = toks.get(2 * keys.len()).map_or(toks.last().map_or(1, |t| t.column), |t| t.column);
        return Err(err(line, col, ParseErrorKind::MalformedHeader(shape)));
    }
    let mut out = Vec::new();
    for (pair, key) in toks.chunks(2).zip(keys) {
        if pair[0].text != *key {
            return Err(err(line, pair[0].column, ParseErrorKind::MalformedHeader(shape)));
        }
        let pos = Token { text: "", line, column: pair[1].column };
        out.push((number(&pair[1])?, pos));
    }
    Ok((line, out))
}

fn chain_from(size: u64, at: Token<'_>) -> Result<Chain, ParseError> {
    Chain::new(usize::try_from(size).unwrap_or(usize::MAX))
        .map_err(|e| err(at.line, at.column, ParseErrorKind::Invalid(Box::new(e))))
}

fn values(lex: &Lexer<'_>, chain: Chain, expected: usize) -> Result<Vec<Elem>, ParseError> {
    let body = lex.body();
    let mut out = Vec::with_capacity(expected);
    for tok in &body {
        let v = number(tok)?;
        if v >= chain.size() as u64 {
            return Err(err(tok.line, tok.column, ParseErrorKind::OutOfRange { value: v, size: chain.size() }));
        }
        out.push(v as Elem);
    }
    if out.len() != expected {
        let (line, column) = match body.get(expected) {
            Some(extra) => (extra.line, extra.column),
            None => lex.end,
        };
        return Err(err(line, column, ParseErrorKind::WrongCount { expected, got: out.len() }));
    }
    Ok(out)
}

pub fn parse_function(text: &str) -> Result<DiscreteFunction, ParseError> {
    let lex = Lexer::new(text);
    magic(&lex, "qpf")?;
    let (_, fields) = header_fields(&lex, &["chain", "arity"], "chain <m> arity <n>")?;
    let chain = chain_from(fields[0].0, fields[0].1)?;
    let (arity, at) = fields[1];
    let invalid = |e: Error| err(at.line, at.column, ParseErrorKind::Invalid(Box::new(e)));
    let arity = usize::try_from(arity).unwrap_or(usize::MAX);
    let len = func::table_len(chain.size(), arity).map_err(invalid)?;
    let table = values(&lex, chain, len)?;
    DiscreteFunction::new(chain, arity, table).map_err(invalid)
}

pub fn parse_set_function(text: &str) -> Result<SetFunction, ParseError> {
    let lex = Lexer::new(text);
    magic(&lex, "qsf")?;
    let (_, fields) = header_fields(&lex, &["arity", "chain"], "arity <n> chain <m>")?;
    let (arity, at) = fields[0];
    let chain = chain_from(fields[1].0, fields[1].1)?;
    let invalid = |e: Error| err(at.line, at.column, ParseErrorKind::Invalid(Box::new(e)));
    if arity == 0 || arity > crate::chain::MAX_SUBSET_ARITY as u64 {
        let e = if arity == 0 { Error::ZeroArity } else { Error::TooLarge { m: 2, n: arity as usize } };
        return Err(invalid(e));
    }
    let table = values(&lex, chain, 1 << arity)?;
    SetFunction::new(chain, arity as usize, table).map_err(invalid)
}

pub fn parse_unary_map(text: &str) -> Result<UnaryMap, ParseError> {
    let lex = Lexer::new(text);
    magic(&lex, "qum")?;
    let (_, fields) = header_fields(&lex, &["chain"], "chain <m>")?;
    let chain = chain_from(fields[0].0, fields[0].1)?;
    let table = values(&lex, chain, chain.size())?;
    UnaryMap::new(chain, table).map_err(|e| err(1, 1, ParseErrorKind::Invalid(Box::new(e))))
}

/// Dispatches on the magic word of the first line.
pub fn parse_any(text: &str) -> Result<TableFile, ParseError> {
    let lex = Lexer::new(text);
    let (line, toks) = lex.header_line(0).ok_or_else(|| err(1, 1, ParseErrorKind::Empty))?;
    match toks[0].text {
        "qpf" => parse_function(text).map(TableFile::Function),
        "qsf" => parse_set_function(text).map(TableFile::SetFunction),
        "qum" => parse_unary_map(text).map(TableFile::UnaryMap),
        other => Err(err(line, toks[0].column, ParseErrorKind::BadMagic {
            expected: "qpf, qsf or qum",
            found: other.to_string(),
        })),
    }
}

fn join_values(values: &[Elem]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn format_function(f: &DiscreteFunction) -> String {
    format!("qpf 1\nchain {} arity {}\n{}\n", f.chain().size(), f.arity(), join_values(f.table()))
}

pub fn format_set_function(alpha: &SetFunction) -> String {
    format!("qsf 1\narity {} chain {}\n{}\n", alpha.arity(), alpha.chain().size(), join_values(alpha.values()))
}

pub fn format_unary_map(phi: &UnaryMap) -> String {
    format!("qum 1\nchain {}\n{}\n", phi.chain().size(), join_values(phi.values()))
}
