//! File formats: tuple files, 2D cross tables, concept listings, DOT
//! diagrams, and seeded random contexts.

mod dot;
mod output;
mod random;
mod table;
mod tuples;

pub use dot::export_dot;
pub use output::{serialize_concepts, OutputFormat};
pub use random::{generate_random, SplitMix64};
pub use table::parse_cross_table;
pub use tuples::{parse_tuples, write_tuples};

/// Input syntaxes accepted by [`parse_context`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    /// Cross table if the first data line starts with a separator (an empty
    /// corner cell), tuple file otherwise.
    Auto,
    Tuples,
    Table,
}

pub fn parse_context(text: &str, format: InputFormat) -> crate::Result<crate::NContext> {
    match format {
        InputFormat::Tuples => parse_tuples(text),
        InputFormat::Table => parse_cross_table(text),
        InputFormat::Auto => {
            let first = data_lines(text).next().map(|(_, l)| l);
            match first {
                Some(l) if l.starts_with(',') || l.starts_with('\t') => parse_cross_table(text),
                _ => parse_tuples(text),
            }
        }
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

pub(crate) fn separator_of(line: &str) -> char {
    if line.contains('\t') {
        '\t'
    } else {
        ','
    }
}
