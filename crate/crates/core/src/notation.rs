//! The two-row equation layout: `yāva 0 yā 10 rū 8°` over `yāva 1 yā 0 rū 1`.
//!
//! Each row is one side of the equation; equality is implied by the layout
//! and an explicit `=` is rejected. Labels stand for x², x and the absolute
//! term. A negative coefficient carries a ring after it (`8°`) or, in ASCII,
//! a minus before it (`-8`); both forms are read in either encoding. Lenient
//! parsing also takes `+`, `x` or `×` as the negative mark, a regional
//! variant that is never written back out.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Rational;
use crate::bija::{Equation, Paksha};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Encoding {
    #[default]
    Unicode,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ParseMode {
    #[default]
    Strict,
    Lenient,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationErrorKind {
    #[error("anachronistic token {0:?}: the equality is understood from the layout")]
    Anachronistic(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("label {0} appears twice")]
    DuplicateLabel(&'static str),
    #[error("label {0} out of order (expected yāva, yā, rū)")]
    LabelOrder(&'static str),
    #[error("missing integer after {0}")]
    MissingNumber(&'static str),
    #[error("{0:?} is not an integer")]
    BadNumber(String),
    #[error("expected two rows, found {0}")]
    RowCount(usize),
    #[error("empty row")]
    EmptyRow,
    #[error("notation carries integers only; clear denominators first")]
    NonInteger,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct NotationError {
    pub line: usize,
    pub column: usize,
    pub kind: NotationErrorKind,
}

impl NotationError {
    fn at(line: usize, column: usize, kind: NotationErrorKind) -> Self {
        NotationError { line, column, kind }
    }
}

/// Two text rows: the first side on top, the second below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotationDocument {
    pub rows: [String; 2],
    pub encoding: Encoding,
    /// Source line of each row, for error positions.
    pub lines: [usize; 2],
}

impl NotationDocument {
    pub fn new(top: impl Into<String>, bottom: impl Into<String>) -> Self {
        let rows = [top.into(), bottom.into()];
        let encoding = if rows.iter().any(|r| !r.is_ascii()) { Encoding::Unicode } else { Encoding::Ascii };
        NotationDocument { rows, encoding, lines: [1, 2] }
    }

    /// Rows with runs of whitespace collapsed.
    pub fn canonical_rows(&self) -> [String; 2] {
        self.rows.clone().map(|r| r.split_whitespace().collect::<Vec<_>>().join(" "))
    }
}

impl FromStr for NotationDocument {
    type Err = NotationError;

    /// Reads the file format: blank lines and `#` comments are skipped.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let rows: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        if rows.len() != 2 {
            let line = rows.get(2).map_or(1, |r| r.0);
            return Err(NotationError::at(line, 1, NotationErrorKind::RowCount(rows.len())));
        }
        let mut doc = NotationDocument::new(rows[0].1.trim_end(), rows[1].1.trim_end());
        doc.lines = [rows[0].0, rows[1].0];
        Ok(doc)
    }
}

impl fmt::Display for NotationDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.rows[0])?;
        writeln!(f, "{}", self.rows[1])
    }
}

const LABELS: [(&str, &str); 3] = [("yāva", "yava"), ("yā", "ya"), ("rū", "ru")];

fn label_index(token: &str) -> Option<usize> {
    let plain: String = token.chars().filter(|&c| c != '\u{0304}').collect::<String>().to_lowercase();
    LABELS.iter().position(|(u, a)| {
        // decomposed input: the macron was dropped above
        let a_only = u.replace('ā', "a").replace('ū', "u");
        plain == *u || plain == *a || plain == a_only
    })
}

fn is_ring(c: char) -> bool {
    matches!(c, '°' | '˚' | '∘')
}

fn is_lenient_mark(c: char) -> bool {
    matches!(c, '+' | 'x' | 'X' | '×')
}

fn parse_number(token: &str, mode: ParseMode) -> Result<BigInt, NotationErrorKind> {
    let bad = || NotationErrorKind::BadNumber(token.to_string());
    let mut body = token;
    let mut marks = 0;
    if let Some(c) = body.chars().next().filter(|&c| c == '-' || (mode == ParseMode::Lenient && is_lenient_mark(c))) {
        body = &body[c.len_utf8()..];
        marks += 1;
    }
    if let Some(c) = body.chars().last().filter(|&c| is_ring(c) || (mode == ParseMode::Lenient && is_lenient_mark(c))) {
        body = &body[..body.len() - c.len_utf8()];
        marks += 1;
    }
    if marks > 1 || body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let n: BigInt = body.parse().map_err(|_| bad())?;
    Ok(if marks == 1 { -n } else { n })
}

fn parse_row(row: &str, line: usize, mode: ParseMode) -> Result<Paksha, NotationError> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (col, c) in row.chars().enumerate().chain(std::iter::once((row.chars().count(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(col),
            (true, Some(s)) => {
                let t: String = row.chars().skip(s).take(col - s).collect();
                tokens.push((s + 1, t));
                start = None;
            }
            _ => {}
        }
    }
    if tokens.is_empty() {
        return Err(NotationError::at(line, 1, NotationErrorKind::EmptyRow));
    }
    if let Some((col, t)) = tokens.iter().find(|(_, t)| t.contains('=')) {
        return Err(NotationError::at(line, *col, NotationErrorKind::Anachronistic(t.clone())));
    }

    let mut coeffs: [Option<BigInt>; 3] = [None, None, None];
    let mut last = None;
    let mut iter = tokens.into_iter();
    while let Some((col, token)) = iter.next() {
        let idx = label_index(&token)
            .ok_or_else(|| NotationError::at(line, col, NotationErrorKind::UnknownLabel(token.clone())))?;
        let name = LABELS[idx].0;
        if coeffs[idx].is_some() {
            return Err(NotationError::at(line, col, NotationErrorKind::DuplicateLabel(name)));
        }
        if last.is_some_and(|l| l > idx) {
            return Err(NotationError::at(line, col, NotationErrorKind::LabelOrder(name)));
        }
        let (ncol, ntoken) = iter
            .next()
            .ok_or_else(|| NotationError::at(line, col + token.chars().count(), NotationErrorKind::MissingNumber(name)))?;
        if label_index(&ntoken).is_some() {
            return Err(NotationError::at(line, ncol, NotationErrorKind::MissingNumber(name)));
        }
        let n = parse_number(&ntoken, mode).map_err(|k| NotationError::at(line, ncol, k))?;
        coeffs[idx] = Some(n);
        last = Some(idx);
    }
    let [yava, ya, ru] = coeffs.map(|c| Rational::from_integer(c.unwrap_or_default()));
    Ok(Paksha { yava, ya, ru })
}

/// Reads the layout only; no arithmetic between the rows.
pub fn parse(doc: &NotationDocument, mode: ParseMode) -> Result<Equation, NotationError> {
    let left = parse_row(&doc.rows[0], doc.lines[0], mode)?;
    let right = parse_row(&doc.rows[1], doc.lines[1], mode)?;
    Ok(Equation::new(left, right))
}

/// Parse the file format in one go.
pub fn parse_text(text: &str, mode: ParseMode) -> Result<Equation, NotationError> {
    parse(&text.parse()?, mode)
}

fn render_row(p: &Paksha, encoding: Encoding) -> Result<String, NotationError> {
    let mut parts = Vec::with_capacity(6);
    for (c, (u, a)) in p.coefficients().into_iter().zip(LABELS) {
        if !c.is_integer() {
            return Err(NotationError::at(0, 0, NotationErrorKind::NonInteger));
        }
        let magnitude = c.abs();
        let number = match (c.is_negative(), encoding) {
            (false, _) => magnitude.to_string(),
            (true, Encoding::Unicode) => format!("{magnitude}°"),
            (true, Encoding::Ascii) => format!("-{magnitude}"),
        };
        parts.push(match encoding {
            Encoding::Unicode => u.to_string(),
            Encoding::Ascii => a.to_string(),
        });
        parts.push(number);
    }
    Ok(parts.join(" "))
}

/// Two rows with every label written, zeros included.
pub fn render(e: &Equation, encoding: Encoding) -> Result<NotationDocument, NotationError> {
    let rows = [render_row(&e.left, encoding)?, render_row(&e.right, encoding)?];
    Ok(NotationDocument { rows, encoding, lines: [1, 2] })
}

/// Multiply both sides by the least common denominator of all coefficients.
pub fn clear_denominators(e: &Equation) -> Equation {
    let all = e.left.coefficients().into_iter().chain(e.right.coefficients());
    let m = Rational::from_integer(Rational::common_denominator(all));
    Equation::new(e.left.scale(&m), e.right.scale(&m))
}
