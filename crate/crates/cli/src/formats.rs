//! Plain-text formats.
//!
//! Points: one per line, `m+1` comma-separated element encodings (`1,0,2`).
//! Inputs are canonicalized on read.
//!
//! Polynomials: one term per line, `coeff; e0,e1,...,em`. The degree is taken
//! from the first term and every other term must match it.
//!
//! Blank lines and lines starting with `#` are ignored by both readers.

use std::fmt::Write as _;

use prm_core::{Elem, Field, HomPoly, ProjPoint, ProjectiveSpace};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("no terms found; the degree of an empty polynomial cannot be inferred")]
    EmptyPolynomial,
}

fn line_err(line: usize, message: impl ToString) -> FormatError {
    FormatError::Line {
        line,
        message: message.to_string(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_list(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad integer {:?}: {e}", x.trim()))
        })
        .collect()
}

fn parse_elements(field: &Field, s: &str) -> Result<Vec<Elem>, String> {
    parse_list(s)?
        .into_iter()
        .map(|v| field.element(v).map_err(|e| e.to_string()))
        .collect()
}

pub fn parse_points(text: &str, space: &ProjectiveSpace<'_>) -> Result<Vec<ProjPoint>, FormatError> {
    content_lines(text)
        .map(|(n, l)| {
            let v = parse_elements(space.field(), l).map_err(|e| line_err(n, e))?;
            space.canonicalize(&v).map_err(|e| line_err(n, e))
        })
        .collect()
}

pub fn format_coords(coords: &[Elem]) -> String {
    coords
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn emit_points(points: &[ProjPoint]) -> String {
    points
        .iter()
        .map(|p| format_coords(p.coords()) + "\n")
        .collect()
}

pub fn parse_poly(text: &str, field: &Field, nvars: usize) -> Result<HomPoly, FormatError> {
    let mut terms = Vec::new();
    let mut degree = None;
    for (n, l) in content_lines(text) {
        let (coeff, exps) = l
            .split_once(';')
            .ok_or_else(|| line_err(n, "expected `coeff; e0,e1,...`"))?;
        let coeff = parse_elements(field, coeff)
            .map_err(|e| line_err(n, e))?
            .pop()
            .ok_or_else(|| line_err(n, "missing coefficient"))?;
        let exps: Vec<u32> = parse_list(exps)
            .map_err(|e| line_err(n, e))?
            .into_iter()
            .map(|e| u32::try_from(e).map_err(|_| line_err(n, "exponent too large")))
            .collect::<Result<_, _>>()?;
        if exps.len() != nvars {
            return Err(line_err(
                n,
                format!("expected {nvars} exponents, found {}", exps.len()),
            ));
        }
        let d: u32 = exps.iter().sum();
        match degree {
            None => degree = Some(d),
            Some(expected) if expected != d => {
                return Err(line_err(
                    n,
                    format!("term has degree {d}, earlier terms have degree {expected}"),
                ))
            }
            _ => {}
        }
        terms.push((exps, coeff));
    }
    let degree = degree.ok_or(FormatError::EmptyPolynomial)?;
    Ok(HomPoly::from_terms(field, nvars, degree, terms).expect("terms validated above"))
}

pub fn emit_poly(poly: &HomPoly) -> String {
    let mut out = String::new();
    for (exps, c) in poly.terms() {
        let e: Vec<String> = exps.iter().map(u32::to_string).collect();
        writeln!(out, "{c}; {}", e.join(",")).unwrap();
    }
    out
}

/// Generator-matrix entries as CSV, one line per row.
pub fn emit_matrix_csv(entries: &[Vec<Elem>]) -> String {
    entries
        .iter()
        .map(|row| format_coords(row) + "\n")
        .collect()
}
