//! 2D cross tables: a header row of attribute labels after an empty
//! corner cell, then one row per object with `x`, `X` or `×` marking a
//! cross and an empty cell marking its absence.

use super::{data_lines, separator_of};
use crate::context::{Dimension, NContext};
use crate::error::{Error, Result};

pub fn parse_cross_table(text: &str) -> Result<NContext> {
    let mut lines = data_lines(text);
    let (first_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(text.lines().count().max(1), "empty cross table"))?;
    let sep = separator_of(header);
    let attributes: Vec<&str> = header.split(sep).skip(1).map(str::trim).collect();
    let attributes = Dimension::new("attributes", attributes)
        .map_err(|e| Error::parse(first_line, e.to_string()))?;

    let mut objects = Vec::new();
    let mut crosses = Vec::new();
    for (line, raw) in lines {
        let cells: Vec<&str> = raw.split(sep).map(str::trim).collect();
        if cells.len() != attributes.len() + 1 {
            return Err(Error::parse(
                line,
                format!(
                    "row has {} cells, expected {}",
                    cells.len(),
                    attributes.len() + 1
                ),
            ));
        }
        let o = objects.len();
        objects.push(cells[0]);
        for (a, cell) in cells[1..].iter().enumerate() {
            match *cell {
                "x" | "X" | "×" => crosses.push(vec![o, a]),
                "" => {}
                other => {
                    return Err(Error::parse(line, format!("unexpected cell `{other}`")));
                }
            }
        }
    }
    let objects =
        Dimension::new("objects", objects).map_err(|e| Error::parse(first_line, e.to_string()))?;
    NContext::new(vec![objects, attributes], crosses)
}
