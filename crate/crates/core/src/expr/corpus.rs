use std::time::Instant;

use crate::catalog;
use crate::fock::Family;
use crate::report::CheckReport;
use crate::{Error, Result};

use super::{identity_residual, parse, EvalContext, Expr, ParseError};

pub const CORPUS_TEXT: &str = include_str!("../../corpus/identities.txt");

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub line: usize,
    pub family: Family,
    pub degree: Option<usize>,
    pub name: String,
    pub source: String,
    pub expr: Expr,
}

fn line_error(line: usize, message: String) -> Error {
    Error::Parse(ParseError { line, col: 1, message, expected: vec![] })
}

/// Parses the checked-in corpus.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (i, raw) in CORPUS_TEXT.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = text.splitn(4, '|').map(str::trim).collect();
        let [family, degree, name, source] = fields[..] else {
            return Err(line_error(line, "expected `family | degree | name | expression`".into()));
        };
        let family: Family = family.parse().map_err(|_| line_error(line, format!("unknown family `{family}`")))?;
        let degree = match degree {
            "auto" => None,
            d => Some(d.parse().map_err(|_| line_error(line, format!("bad degree `{d}`")))?),
        };
        let expr = parse(source).map_err(|e| ParseError { line, ..e })?;
        out.push(CorpusEntry { line, family, degree, name: name.into(), source: source.into(), expr });
    }
    Ok(out)
}

/// Evaluates every corpus entry of the context's family.
pub fn run_corpus(ctx: &EvalContext, entries: &[CorpusEntry], tol: f64) -> Vec<CheckReport> {
    let spec = ctx.spec();
    entries
        .iter()
        .filter(|e| e.family == spec.family())
        .map(|e| {
            let started = Instant::now();
            match identity_residual(ctx, &e.expr, e.degree) {
                Ok((res, window)) => {
                    CheckReport::new(catalog::EXPR, &e.name, Some(spec), ctx.dim(), window, res, tol, started)
                }
                Err(err) => CheckReport::errored(catalog::EXPR, &e.name, Some(spec), ctx.dim(), &err, tol),
            }
            .with_note(e.source.clone())
        })
        .collect()
}

