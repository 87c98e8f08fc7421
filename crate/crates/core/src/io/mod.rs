//! Text formats for instances, assignments and solve reports.
//!
//! Instance grammars are line oriented. Tokens are separated by runs of
//! spaces or tabs, LF and CRLF line endings are both accepted, and writers
//! emit LF. Every rejection carries a 1-based line and column.

mod instances;
mod report;
mod sidecar;

pub use instances::{
    parse_assignment, parse_graph, parse_ilp, parse_knapsack, parse_qubo, parse_rqubo, write_assignment,
    write_graph, write_ilp, write_knapsack, write_qubo, write_rqubo,
};
pub use report::{parse_report, write_report, write_report_with, ReportExtras};
pub use sidecar::ReductionSidecar;

use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::ParseDiagnostic;

type ParseResult<T> = Result<T, ParseDiagnostic>;

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic::new(self.line, self.column, message)
    }

    fn int(&self) -> ParseResult<BigInt> {
        BigInt::from_str(self.text).map_err(|_| self.error(format!("expected an integer, found `{}`", self.text)))
    }

    fn count(&self) -> ParseResult<usize> {
        if !self.text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.error(format!("expected a non-negative integer, found `{}`", self.text)));
        }
        self.text
            .parse()
            .map_err(|_| self.error(format!("`{}` is too large", self.text)))
    }

    fn keyword(&self, expected: &str) -> ParseResult<()> {
        if self.text == expected {
            Ok(())
        } else {
            Err(self.error(format!("expected `{expected}`, found `{}`", self.text)))
        }
    }
}

#[derive(Debug, Clone)]
struct Line<'a> {
    number: usize,
    /// Column just past the last character, for "missing token" diagnostics.
    end_column: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    /// Requires exactly `count` tokens.
    fn exact(&self, count: usize, what: &str) -> ParseResult<&[Token<'a>]> {
        if self.tokens.len() < count {
            return Err(ParseDiagnostic::new(
                self.number,
                self.end_column,
                format!("{what}: expected {count} fields, found {}", self.tokens.len()),
            ));
        }
        if let Some(extra) = self.tokens.get(count) {
            return Err(extra.error(format!("{what}: unexpected extra field `{}`", extra.text)));
        }
        Ok(&self.tokens)
    }
}

/// Splits `text` into non-blank lines that are not comments.
fn lex<'a>(text: &'a str, is_comment: impl Fn(&Token<'a>) -> bool) -> Vec<Line<'a>> {
    let mut lines = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        let mut column = 0;
        for (byte, ch) in raw.char_indices() {
            column += 1;
            if ch == ' ' || ch == '\t' {
                if let Some((s, col)) = start.take() {
                    tokens.push(Token {
                        text: &raw[s..byte],
                        line: idx + 1,
                        column: col,
                    });
                }
            } else if start.is_none() {
                start = Some((byte, column));
            }
        }
        if let Some((s, col)) = start {
            tokens.push(Token {
                text: &raw[s..],
                line: idx + 1,
                column: col,
            });
        }
        if tokens.is_empty() || is_comment(&tokens[0]) {
            continue;
        }
        lines.push(Line {
            number: idx + 1,
            end_column: column + 1,
            tokens,
        });
    }
    lines
}

fn hash_comment(tok: &Token<'_>) -> bool {
    tok.text.starts_with('#')
}

/// Sequential access to lexed lines with end-of-input diagnostics.
struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    /// Number of physical lines in the input.
    eof_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, is_comment: impl Fn(&Token<'a>) -> bool) -> Self {
        Self {
            lines: lex(text, is_comment),
            pos: 0,
            eof_line: text.lines().count(),
        }
    }

    fn next(&mut self, what: &str) -> ParseResult<Line<'a>> {
        match self.lines.get(self.pos) {
            Some(line) => {
                self.pos += 1;
                Ok(line.clone())
            }
            None => Err(ParseDiagnostic::new(
                self.eof_line + 1,
                1,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    fn finish(&self) -> ParseResult<()> {
        match self.lines.get(self.pos) {
            Some(line) => Err(line.tokens[0].error("unexpected content after the last record")),
            None => Ok(()),
        }
    }
}
