//! Tuple files: optional `! name: e1 e2 …` header lines, one per dimension,
//! followed by one relation tuple per line with fields separated by tabs or
//! commas. `#` starts a comment line.

use std::collections::HashMap;
use std::fmt::Write;

use super::{data_lines, separator_of};
use crate::context::{Dimension, NContext};
use crate::error::{Error, Result};

pub fn parse_tuples(text: &str) -> Result<NContext> {
    let mut header: Vec<Dimension> = Vec::new();
    let mut body: Vec<(usize, Vec<&str>)> = Vec::new();
    let mut separator = None;

    for (line, raw) in data_lines(text) {
        let trimmed = raw.trim();
        if let Some(decl) = trimmed.strip_prefix('!') {
            if !body.is_empty() {
                return Err(Error::parse(line, "dimension header after the first tuple"));
            }
            let (name, elements) = decl
                .split_once(':')
                .ok_or_else(|| Error::parse(line, "header line needs `! name: elements`"))?;
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(Error::parse(
                    line,
                    format!("invalid dimension name `{name}`"),
                ));
            }
            let dim = Dimension::new(name, elements.split_whitespace())
                .map_err(|e| Error::parse(line, e.to_string()))?;
            header.push(dim);
            continue;
        }
        let sep = *separator.get_or_insert_with(|| separator_of(raw));
        let fields: Vec<&str> = raw.split(sep).map(str::trim).collect();
        if let Some(bad) = fields
            .iter()
            .find(|f| f.is_empty() || f.contains(char::is_whitespace))
        {
            return Err(Error::parse(line, format!("invalid label `{bad}`")));
        }
        if let Some((first_line, first)) = body.first() {
            if fields.len() != first.len() {
                return Err(Error::parse(
                    line,
                    format!(
                        "tuple has {} fields but line {first_line} has {}",
                        fields.len(),
                        first.len()
                    ),
                ));
            }
        }
        body.push((line, fields));
    }

    if header.is_empty() {
        let Some((_, first)) = body.first() else {
            let last = text.lines().count().max(1);
            return Err(Error::parse(last, "no dimension header and no tuples"));
        };
        let arity = first.len();
        let mut seen: Vec<HashMap<&str, usize>> = vec![HashMap::new(); arity];
        let mut elements: Vec<Vec<&str>> = vec![Vec::new(); arity];
        let mut tuples = Vec::with_capacity(body.len());
        for (_, fields) in &body {
            let row = fields
                .iter()
                .enumerate()
                .map(|(i, &label)| {
                    *seen[i].entry(label).or_insert_with(|| {
                        elements[i].push(label);
                        elements[i].len() - 1
                    })
                })
                .collect();
            tuples.push(row);
        }
        let dims = elements
            .into_iter()
            .enumerate()
            .map(|(i, e)| Dimension::new(format!("dim{}", i + 1), e))
            .collect::<Result<Vec<_>>>()?;
        return NContext::new(dims, tuples);
    }

    let mut tuples = Vec::with_capacity(body.len());
    for (line, fields) in &body {
        if fields.len() != header.len() {
            return Err(Error::parse(
                *line,
                format!(
                    "tuple has {} fields but the header declares {} dimensions",
                    fields.len(),
                    header.len()
                ),
            ));
        }
        let mut row = Vec::with_capacity(fields.len());
        for (d, label) in header.iter().zip(fields) {
            row.push(d.position(label).ok_or_else(|| {
                Error::parse(
                    *line,
                    format!("unknown element `{label}` in dimension `{}`", d.name()),
                )
            })?);
        }
        tuples.push(row);
    }
    NContext::new(header, tuples)
}

/// Writes a context as a tab-separated tuple file with a full header, so
/// that element order and cross-less elements survive a round trip.
pub fn write_tuples(ctx: &NContext) -> String {
    let mut out = String::new();
    for d in ctx.dims() {
        let _ = writeln!(out, "! {}: {}", d.name(), d.elements().join(" "));
    }
    for t in ctx.relation() {
        let labels: Vec<&str> = t.iter().zip(ctx.dims()).map(|(&e, d)| d.label(e)).collect();
        let _ = writeln!(out, "{}", labels.join("\t"));
    }
    out
}
