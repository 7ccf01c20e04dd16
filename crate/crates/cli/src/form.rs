//! Parsing of `--form` arguments.

use kingdon_core::{Error, FormedSpace, Matrix, Scalar};

/// Accepts a preset (`zero3`, `oct`, `split-oct`), `diag:a,b,c` with
/// rational entries, or a JSON symmetric matrix such as `[[0,1],[1,"1/2"]]`.
pub fn parse_form(s: &str) -> Result<FormedSpace, Error> {
    let s = s.trim();
    let gram = match s {
        "zero3" => Matrix::zeros(3, 3),
        "oct" => diagonal(&["-2", "-2", "-2"])?,
        "split-oct" => diagonal(&["-2", "-2", "2"])?,
        _ => {
            if let Some(rest) = s.strip_prefix("diag:") {
                let entries: Vec<&str> = if rest.trim().is_empty() { Vec::new() } else { rest.split(',').collect() };
                diagonal(&entries)?
            } else if s.starts_with('[') {
                let rows: Vec<Vec<Scalar>> = serde_json::from_str(s)?;
                if rows.is_empty() {
                    Matrix::zeros(0, 0)
                } else {
                    Matrix::from_rows(rows)?
                }
            } else {
                return Err(Error::InvalidParameter(format!(
                    "unknown form `{s}`; expected zero3, oct, split-oct, diag:a,b,c or a JSON matrix"
                )));
            }
        }
    };
    FormedSpace::new(gram)
}

fn diagonal(entries: &[&str]) -> Result<Matrix, Error> {
    let d = entries
        .iter()
        .map(|e| e.parse::<Scalar>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_diagonal(&d))
}

/// Comma-separated rationals, as taken by `cd --gammas`.
pub fn parse_scalars(s: &str) -> Result<Vec<Scalar>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|e| e.parse::<Scalar>().map_err(Error::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        assert!(parse_form("zero3").unwrap().gram().is_zero());
        let ints = |v: &[i64]| v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>();
        assert_eq!(parse_form("oct").unwrap().diag(), ints(&[-2, -2, -2]));
        assert_eq!(parse_form("split-oct").unwrap().diag(), ints(&[-2, -2, 2]));
    }

    #[test]
    fn diagonal_and_json() {
        let fs = parse_form("diag:1/2,0,-3").unwrap();
        assert_eq!(fs.diag()[0], Scalar::new(1, 2));
        let fs = parse_form("[[0,1,0],[1,0,0],[0,0,\"-2\"]]").unwrap();
        assert_eq!(fs.dim(), 3);
        assert_eq!(parse_form("diag:").unwrap().dim(), 0);
    }

    #[test]
    fn bad_forms() {
        assert!(parse_form("octonions").is_err());
        assert!(parse_form("diag:1,x").is_err());
        assert!(matches!(parse_form("[[1,2],[3,4]]"), Err(Error::NonSymmetric)));
        assert!(matches!(parse_form("diag:1,1,1,1"), Err(Error::DimensionTooLarge(4))));
    }

    #[test]
    fn gammas() {
        assert_eq!(parse_scalars("-1,1/2").unwrap(), vec![-Scalar::one(), Scalar::new(1, 2)]);
        assert!(parse_scalars("").unwrap().is_empty());
        assert!(parse_scalars("1,,2").is_err());
    }
}
