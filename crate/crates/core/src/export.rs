//! Rendering of multiplication tables as markdown, CSV and JSON.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{format_terms, Algebra};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::InvalidParameter(format!("unknown table format `{other}`"))),
        }
    }
}

impl fmt::Display for TableFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableFormat::Markdown => "md",
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
        })
    }
}

pub fn render(a: &Algebra, format: TableFormat) -> String {
    match format {
        TableFormat::Markdown => markdown(a),
        TableFormat::Csv => csv(a),
        TableFormat::Json => a.to_json_string(),
    }
}

fn entry(a: &Algebra, i: usize, j: usize) -> String {
    format_terms(a.basis_names(), a.basis_product(i, j))
}

/// Products of non-unit basis elements. The corner cell holds the unit and
/// the unit row and column are left out, as they only repeat the headers.
pub fn markdown(a: &Algebra) -> String {
    let names = a.basis_names();
    let mut out = String::new();
    let row = |cells: Vec<String>| format!("| {} |\n", cells.join(" | "));
    out.push_str(&row(names.to_vec()));
    out.push_str(&row(vec!["---".to_string(); names.len()]));
    for (i, name) in names.iter().enumerate().skip(1) {
        let mut cells = vec![name.clone()];
        cells.extend((1..a.dim()).map(|j| entry(a, i, j)));
        out.push_str(&row(cells));
    }
    out
}

/// The full table including the unit, one row per left factor.
pub fn csv(a: &Algebra) -> String {
    let names = a.basis_names();
    let mut out = String::new();
    let quote = |s: &str| {
        if s.contains([',', '"', ' ']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    let mut header = vec![String::new()];
    header.extend(names.iter().map(|n| quote(n)));
    out.push_str(&header.join(","));
    out.push('\n');
    for (i, name) in names.iter().enumerate() {
        let mut cells = vec![quote(name)];
        cells.extend((0..a.dim()).map(|j| quote(&entry(a, i, j))));
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kingdon::{build_kingdon, FormedSpace};

    #[test]
    fn exterior_markdown() {
        let ka = build_kingdon(&FormedSpace::diagonal_ints(&[0, 0, 0]).unwrap()).unwrap();
        let md = markdown(ka.algebra());
        let expected = "\
| 1 | i | j | k | ij | jk | ki | ω |
| --- | --- | --- | --- | --- | --- | --- | --- |
| i | 0 | ij | -ki | 0 | -ω | 0 | 0 |
| j | -ij | 0 | jk | 0 | 0 | -ω | 0 |
| k | ki | -jk | 0 | -ω | 0 | 0 | 0 |
| ij | 0 | 0 | ω | 0 | 0 | 0 | 0 |
| jk | ω | 0 | 0 | 0 | 0 | 0 | 0 |
| ki | 0 | ω | 0 | 0 | 0 | 0 | 0 |
| ω | 0 | 0 | 0 | 0 | 0 | 0 | 0 |
";
        assert_eq!(md, expected);
    }

    #[test]
    fn csv_includes_unit() {
        let ka = build_kingdon(&FormedSpace::diagonal_ints(&[-2, -2, -2]).unwrap()).unwrap();
        let c = csv(ka.algebra());
        assert_eq!(c.lines().count(), 9);
        assert!(c.lines().nth(1).unwrap().starts_with("1,1,i,j,k"));
        assert!(c.lines().nth(2).unwrap().starts_with("i,i,-1,ij,-ki"));
    }

    #[test]
    fn format_names_round_trip() {
        for f in [TableFormat::Markdown, TableFormat::Csv, TableFormat::Json] {
            assert_eq!(f.to_string().parse::<TableFormat>().unwrap(), f);
        }
        assert!("xml".parse::<TableFormat>().is_err());
    }
}
