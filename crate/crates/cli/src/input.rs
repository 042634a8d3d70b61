//! Point files and inline points.
//!
//! A point file is UTF-8 text with one point per line and whitespace
//! separated coordinates. `#` starts a comment, blank lines are skipped, and an
//! optional `dim <d>` line fixes the dimension. Coordinates are integers,
//! fractions `p/q` or decimals, all read as exact rationals.

use std::fs;
use std::io::Read;
use std::str::FromStr;

use tropconv::{Rat, TropPoint};

use crate::error::{CliError, CliResult};

/// How rows map to points of `TP^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `d + 1` homogeneous coordinates, canonicalized.
    Projective,
    /// `d` chart coordinates; a leading zero is prepended.
    Affine,
}

/// Parses one number as an exact rational.
pub fn parse_rational(token: &str) -> Option<Rat> {
    if token.contains('/') {
        return Rat::from_str(token).ok();
    }
    let (sign, digits) = match token.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", token.strip_prefix('+').unwrap_or(token)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let numerator = format!("{sign}{}{frac}", if int.is_empty() { "0" } else { int });
    Rat::from_str(&format!("{numerator}/1{}", "0".repeat(frac.len()))).ok()
}

/// Raw numeric rows of a point or matrix file, with their line numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct Rows {
    pub dim: Option<usize>,
    pub rows: Vec<(usize, Vec<Rat>)>,
}

fn parse_error(source: &str, line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        source_name: source.to_string(),
        line,
        message: message.into(),
    }
}

/// Tokenizes `text`; all rows must have the same length.
pub fn parse_rows(text: &str, source: &str) -> CliResult<Rows> {
    let mut dim = None;
    let mut rows: Vec<(usize, Vec<Rat>)> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace().peekable();
        if tokens.peek() == Some(&"dim") {
            tokens.next();
            let value = tokens.next().ok_or_else(|| parse_error(source, line, "missing value after `dim`"))?;
            if tokens.next().is_some() || dim.is_some() || !rows.is_empty() {
                return Err(parse_error(source, line, "`dim <d>` must be a single header line before the points"));
            }
            let d: usize = value
                .parse()
                .map_err(|_| parse_error(source, line, format!("invalid dimension `{value}`")))?;
            if d == 0 {
                return Err(parse_error(source, line, "dimension must be at least 1"));
            }
            dim = Some(d);
            continue;
        }
        let row = tokens
            .map(|t| parse_rational(t).ok_or_else(|| parse_error(source, line, format!("invalid number `{t}`"))))
            .collect::<CliResult<Vec<Rat>>>()?;
        if let Some((first_line, first)) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_error(
                    source,
                    line,
                    format!("row has {} entries but line {first_line} has {}", row.len(), first.len()),
                ));
            }
        }
        rows.push((line, row));
    }
    if rows.is_empty() {
        return Err(parse_error(source, last_line.max(1), "no points in input"));
    }
    Ok(Rows { dim, rows })
}

/// Turns a row into a point.
pub fn row_to_point(row: &[Rat], mode: Mode) -> Option<TropPoint> {
    match mode {
        Mode::Projective => TropPoint::canonicalize(row.to_vec()).ok(),
        Mode::Affine => TropPoint::from_affine(row).ok(),
    }
}

fn arity(d: usize, mode: Mode) -> usize {
    match mode {
        Mode::Projective => d + 1,
        Mode::Affine => d,
    }
}

/// Parses a point file.
pub fn parse_points(text: &str, source: &str, mode: Mode) -> CliResult<Vec<TropPoint>> {
    let rows = parse_rows(text, source)?;
    let (first_line, first) = &rows.rows[0];
    if let Some(d) = rows.dim {
        if first.len() != arity(d, mode) {
            return Err(parse_error(
                source,
                *first_line,
                format!("expected {} entries for dimension {d}, found {}", arity(d, mode), first.len()),
            ));
        }
    }
    rows.rows
        .iter()
        .map(|(line, row)| {
            row_to_point(row, mode).ok_or_else(|| match mode {
                Mode::Projective => parse_error(source, *line, "a projective point needs at least 2 coordinates"),
                Mode::Affine => parse_error(source, *line, "an affine point needs at least 1 coordinate"),
            })
        })
        .collect()
}

/// Parses an inline point such as `0,2,2` or `"0 2 2"`.
pub fn parse_point_arg(arg: &str, mode: Mode) -> CliResult<TropPoint> {
    let row = arg
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).ok_or_else(|| CliError::Usage(format!("invalid number `{t}` in point `{arg}`"))))
        .collect::<CliResult<Vec<Rat>>>()?;
    row_to_point(&row, mode).ok_or_else(|| CliError::Usage(format!("point `{arg}` has too few coordinates")))
}

/// Reads a path, or `stdin` for `-` or no path. Returns the text and a name
/// for error messages.
pub fn read_source(path: Option<&str>, stdin: &mut dyn Read) -> CliResult<(String, String)> {
    match path {
        None | Some("-") => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Io(format!("<stdin>: {e}")))?;
            Ok((text, "<stdin>".to_string()))
        }
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| CliError::Io(format!("{p}: {e}")))?;
            Ok((text, p.to_string()))
        }
    }
}

/// Formats points so that [`parse_points`] reads them back unchanged.
pub fn write_points(points: &[TropPoint], mode: Mode) -> String {
    let mut out = String::new();
    if let Some(p) = points.first() {
        out.push_str(&format!("dim {}\n", p.dim()));
    }
    for p in points {
        let coords: Vec<String> = match mode {
            Mode::Projective => p.coords().iter().map(ToString::to_string).collect(),
            Mode::Affine => p.affine_chart().iter().map(ToString::to_string).collect(),
        };
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropconv::{rat, ratio};

    #[test]
    fn numbers() {
        assert_eq!(parse_rational("3"), Some(rat(3)));
        assert_eq!(parse_rational("-7/14"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("1.25"), Some(ratio(5, 4)));
        assert_eq!(parse_rational("-.5"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("+2."), Some(rat(2)));
        assert_eq!(parse_rational("0.1"), Some(ratio(1, 10)));
        for bad in ["", ".", "1/0", "abc", "1e3", "--1", "1.2.3", "0x10"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }

    #[test]
    fn projective_simplex() {
        let pts = parse_points("0 1 1\n1 0 1\n1 1 0", "t", Mode::Projective).unwrap();
        assert_eq!(pts, tropconv::hypersimplex(2, 1).unwrap());
    }

    #[test]
    fn affine_row() {
        let pts = parse_points("1/2 3", "t", Mode::Affine).unwrap();
        assert_eq!(pts[0].coords(), &[rat(0), ratio(1, 2), rat(3)]);
    }

    #[test]
    fn ragged_rows() {
        let err = parse_points("0 1\n0 1 1", "t", Mode::Projective).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn comments_header_and_errors() {
        let text = "# triangle\ndim 2\n\n0 1 1 # first\n1 0 1\n";
        assert_eq!(parse_points(text, "t", Mode::Projective).unwrap().len(), 2);
        assert!(matches!(
            parse_points("dim 3\n0 1 1", "t", Mode::Projective),
            Err(CliError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_points("0 1 x", "t", Mode::Projective), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_points("# nothing\n\n", "t", Mode::Projective), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse_points("5", "t", Mode::Projective), Err(CliError::Parse { line: 1, .. })));
    }

    #[test]
    fn inline_points() {
        assert_eq!(parse_point_arg("0,2,2", Mode::Projective).unwrap(), TropPoint::from_ints(&[0, 2, 2]).unwrap());
        assert_eq!(parse_point_arg("0 2", Mode::Affine).unwrap(), TropPoint::from_ints(&[0, 0, 2]).unwrap());
        assert!(parse_point_arg("1,q", Mode::Projective).is_err());
    }

    #[test]
    fn round_trip() {
        let pts = tropconv::hypersimplex(3, 2).unwrap();
        for mode in [Mode::Projective, Mode::Affine] {
            assert_eq!(parse_points(&write_points(&pts, mode), "t", mode).unwrap(), pts);
        }
    }
}
