//! Line-oriented text formats.
//!
//! Instance file:
//!
//! ```text
//! # comment
//! m 2
//! values 18 10 6 4
//! ```
//!
//! Precedence file (jobs in list order; a dependency must name a job
//! declared on an earlier line):
//!
//! ```text
//! m 3
//! job 1 30
//! job 4 20
//! job 5 40 4
//! ```
//!
//! Blank lines and lines whose first non-blank character is `#` are
//! ignored. Tokens are separated by ASCII whitespace. Integers are unsigned
//! decimal.
//!
//! Machine-readable records are single lines of space-separated `key=value`
//! pairs. List values are comma-separated; lists of lists (partition parts)
//! separate the inner lists with `|`. Item indices are 1-based.

use std::fmt::Write as _;

use partmono_core::precedence::{Job, PrecedenceInstance};
use partmono_core::{Instance, Partition};
use thiserror::Error;

/// A syntax or validation error with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// A whitespace-separated token and its 1-based column.
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_ascii_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// Numbered content lines, without blanks and comments.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, tokens(line)))
        }
    })
}

fn integer(line: usize, tok: Token<'_>) -> Result<u64, ParseError> {
    tok.text
        .parse::<u64>()
        .map_err(|_| ParseError::new(line, tok.column, format!("expected an unsigned integer, found {:?}", tok.text)))
}

fn single_integer(line: usize, toks: &[Token<'_>]) -> Result<u64, ParseError> {
    match toks {
        [_, value] => integer(line, *value),
        [kw] => Err(ParseError::new(line, kw.column + kw.text.len(), format!("`{}` needs a value", kw.text))),
        [_, _, extra, ..] => Err(ParseError::new(line, extra.column, "unexpected extra token")),
        [] => unreachable!("content lines are nonempty"),
    }
}

/// Parses an instance file into a validated [`Instance`].
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut m: Option<(usize, Token<'_>, u64)> = None;
    let mut values: Option<(usize, Token<'_>, Vec<u64>)> = None;
    for (line, toks) in content_lines(text) {
        let kw = toks[0];
        match kw.text {
            "m" => {
                if m.is_some() {
                    return Err(ParseError::new(line, kw.column, "duplicate `m` line"));
                }
                m = Some((line, toks[1.min(toks.len() - 1)], single_integer(line, &toks)?));
            }
            "values" => {
                if values.is_some() {
                    return Err(ParseError::new(line, kw.column, "duplicate `values` line"));
                }
                if toks.len() < 2 {
                    return Err(ParseError::new(line, kw.column + kw.text.len(), "`values` needs at least one value"));
                }
                let v = toks[1..].iter().map(|t| integer(line, *t)).collect::<Result<Vec<_>, _>>()?;
                if let Some(pos) = v.iter().position(|&x| x == 0) {
                    return Err(ParseError::new(line, toks[pos + 1].column, "values must be positive"));
                }
                values = Some((line, kw, v));
            }
            other => {
                return Err(ParseError::new(line, kw.column, format!("unknown keyword {other:?} (expected `m` or `values`)")))
            }
        }
    }
    let last = text.lines().count().max(1);
    let (m_line, m_tok, m) = m.ok_or_else(|| ParseError::new(last, 1, "missing `m` line"))?;
    let (v_line, v_tok, values) = values.ok_or_else(|| ParseError::new(last, 1, "missing `values` line"))?;
    let m = usize::try_from(m).map_err(|_| ParseError::new(m_line, m_tok.column, "bin count too large"))?;
    Instance::new(values, m).map_err(|e| {
        let (line, column) = match e {
            partmono_core::InstanceError::TooFewBins(_) => (m_line, m_tok.column),
            _ => (v_line, v_tok.column),
        };
        ParseError::new(line, column, e.to_string())
    })
}

/// Renders an instance in the instance-file format.
pub fn write_instance(inst: &Instance) -> String {
    format!("m {}\nvalues {}\n", inst.m(), join(inst.values(), " "))
}

/// Parses a precedence file.
pub fn parse_precedence(text: &str) -> Result<PrecedenceInstance, ParseError> {
    let mut m: Option<(usize, Token<'_>, u64)> = None;
    let mut jobs: Vec<Job> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut first_job_line = None;
    for (line, toks) in content_lines(text) {
        let kw = toks[0];
        match kw.text {
            "m" => {
                if m.is_some() {
                    return Err(ParseError::new(line, kw.column, "duplicate `m` line"));
                }
                m = Some((line, toks[1.min(toks.len() - 1)], single_integer(line, &toks)?));
            }
            "job" => {
                first_job_line.get_or_insert(line);
                let (id, time) = match &toks[..] {
                    [_, id, time, ..] => (*id, integer(line, *time)?),
                    _ => {
                        return Err(ParseError::new(line, kw.column, "expected `job <id> <time> [dep-id ...]`"))
                    }
                };
                if time == 0 {
                    return Err(ParseError::new(line, toks[2].column, "processing time must be positive"));
                }
                if jobs.iter().any(|j| j.id == id.text) {
                    return Err(ParseError::new(line, id.column, format!("job id {:?} declared twice", id.text)));
                }
                let me = jobs.len();
                for dep in &toks[3..] {
                    let from = if dep.text == id.text {
                        me
                    } else {
                        jobs.iter().position(|j| j.id == dep.text).ok_or_else(|| {
                            ParseError::new(
                                line,
                                dep.column,
                                format!("dependency {:?} is not a previously declared job", dep.text),
                            )
                        })?
                    };
                    edges.push((from, me));
                }
                jobs.push(Job::new(id.text, time));
            }
            other => {
                return Err(ParseError::new(line, kw.column, format!("unknown keyword {other:?} (expected `m` or `job`)")))
            }
        }
    }
    let last = text.lines().count().max(1);
    let (m_line, m_tok, m) = m.ok_or_else(|| ParseError::new(last, 1, "missing `m` line"))?;
    let m = usize::try_from(m).map_err(|_| ParseError::new(m_line, m_tok.column, "machine count too large"))?;
    if m == 0 {
        return Err(ParseError::new(m_line, m_tok.column, "machine count must be at least 1"));
    }
    PrecedenceInstance::new(jobs, &edges, m)
        .map_err(|e| ParseError::new(first_job_line.unwrap_or(m_line), 1, e.to_string()))
}

/// Renders a precedence instance in the precedence-file format.
pub fn write_precedence(inst: &PrecedenceInstance) -> String {
    let mut out = format!("m {}\n", inst.m());
    for (j, job) in inst.jobs().iter().enumerate() {
        let _ = write!(out, "job {} {}", job.id, job.time);
        for &p in inst.preds(j) {
            let _ = write!(out, " {}", inst.jobs()[p].id);
        }
        out.push('\n');
    }
    out
}

pub fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// 1-based indices of one part, comma-separated.
pub fn one_based(indices: &[usize]) -> String {
    join(&indices.iter().map(|i| i + 1).collect::<Vec<_>>(), ",")
}

/// All parts as `1,2|3|...`.
pub fn parts_field(p: &Partition) -> String {
    p.parts().iter().map(|part| one_based(part)).collect::<Vec<_>>().join("|")
}

/// `m=<m> values=<v1,v2,...>`, the instance part of every record.
pub fn instance_fields(inst: &Instance) -> String {
    format!("m={} values={}", inst.m(), join(inst.values(), ","))
}

/// Splits a record line into `(key, value)` pairs.
pub fn record_fields(line: &str) -> Vec<(&str, &str)> {
    line.split_ascii_whitespace().filter_map(|kv| kv.split_once('=')).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("record has no `{0}` field")]
    Missing(&'static str),
    #[error("field `{0}` is not a valid integer list")]
    BadInteger(&'static str),
    #[error(transparent)]
    Instance(#[from] partmono_core::InstanceError),
}

/// Recovers the instance from a machine-readable record.
pub fn instance_from_record(line: &str) -> Result<Instance, RecordError> {
    let fields = record_fields(line);
    let get = |key: &'static str| {
        fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).ok_or(RecordError::Missing(key))
    };
    let m = get("m")?.parse::<usize>().map_err(|_| RecordError::BadInteger("m"))?;
    let values = get("values")?
        .split(',')
        .map(|v| v.parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| RecordError::BadInteger("values"))?;
    Ok(Instance::new(values, m)?)
}

/// Sums of a `parts` field, re-derived from the instance values.
pub fn sums_from_parts_field(inst: &Instance, parts: &str) -> Option<Vec<u64>> {
    parts
        .split('|')
        .map(|part| {
            if part.is_empty() {
                return Some(0);
            }
            part.split(',')
                .map(|i| i.parse::<usize>().ok().and_then(|i| inst.values().get(i.checked_sub(1)?).copied()))
                .sum()
        })
        .collect()
}
