//! Text format for matrices over finite fields.
//!
//! ```text
//! # Khazad diffusion matrix
//! field 2 8 0x11D
//! n 8
//! 01_x 03_x 04_x 05_x 06_x 08_x 0B_x 07_x
//! ...
//! ```
//!
//! The `field` line carries the characteristic, the extension degree and the
//! integer-encoded defining polynomial (base-p digit i is the coefficient of
//! x^i). Entries are hex when suffixed `_x` or prefixed `0x`, decimal
//! otherwise. Lines starting with `#` and blank lines are ignored.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::field::{Field, FieldError};
use crate::matrix::FqMatrix;

#[derive(Debug)]
pub enum ParseError {
    Io(std::io::Error),
    Syntax { line: usize, col: usize, msg: String },
    EntryOutOfField { line: usize, col: usize, value: u64, q: u64 },
    Field { line: usize, err: FieldError },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Io(e) => write!(f, "cannot read matrix file: {e}"),
            ParseError::Syntax { line, col, msg } => write!(f, "line {line}, col {col}: {msg}"),
            ParseError::EntryOutOfField { line, col, value, q } => write!(
                f,
                "line {line}, col {col}: entry {value} is not an element of a field of order {q}"
            ),
            ParseError::Field { line, err } => write!(f, "line {line}: {err}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<std::io::Error> for ParseError {
    fn from(e: std::io::Error) -> Self {
        ParseError::Io(e)
    }
}

/// Reads and validates a matrix file.
pub fn parse_matrix_file(path: &Path) -> Result<(Arc<Field>, FqMatrix), ParseError> {
    let text = std::fs::read_to_string(path)?;
    parse_matrix_str(&text)
}

/// Parses matrix-file content from a string.
pub fn parse_matrix_str(text: &str) -> Result<(Arc<Field>, FqMatrix), ParseError> {
    let mut lines = significant_lines(text);

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| syntax(0, 1, "missing `field p m poly` line"))?;
    if header.is_empty() || header[0].1 != "field" {
        return Err(syntax(line_no, 1, "expected `field p m poly`"));
    }
    if header.len() != 4 {
        return Err(syntax(line_no, 1, "expected `field p m poly` with three arguments"));
    }
    let p = parse_decimal(line_no, &header[1])?;
    let m = parse_decimal(line_no, &header[2])?;
    let poly_code = parse_integer_token(line_no, &header[3])?;
    let m =
        u32::try_from(m).map_err(|_| syntax(line_no, header[2].0, "extension degree too large"))?;
    let field = Field::from_encoded_poly(p, m, poly_code)
        .map_err(|err| ParseError::Field { line: line_no, err })?;
    let field = Arc::new(field);
    let q = field.order();

    let (line_no, size) = lines.next().ok_or_else(|| syntax(0, 1, "missing `n <order>` line"))?;
    if size.len() != 2 || size[0].1 != "n" {
        return Err(syntax(line_no, 1, "expected `n <order>`"));
    }
    let n = parse_decimal(line_no, &size[1])? as usize;
    if n == 0 {
        return Err(syntax(line_no, size[1].0, "matrix order must be at least 1"));
    }

    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut last_line = line_no;
    for (line_no, tokens) in lines.by_ref() {
        last_line = line_no;
        if rows.len() == n {
            return Err(syntax(line_no, tokens[0].0, &format!("expected exactly {n} rows")));
        }
        if tokens.len() != n {
            return Err(syntax(
                line_no,
                tokens[0].0,
                &format!("expected {n} entries in this row, found {}", tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in &tokens {
            let value = parse_entry(tok)
                .ok_or_else(|| syntax(line_no, *col, &format!("invalid entry {tok:?}")))?;
            if value >= q {
                return Err(ParseError::EntryOutOfField { line: line_no, col: *col, value, q });
            }
            row.push(value);
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(syntax(
            last_line,
            1,
            &format!("expected {n} rows, found {}", rows.len()),
        ));
    }

    let matrix = FqMatrix::from_rows(Arc::clone(&field), &rows).expect("rows validated");
    Ok((field, matrix))
}

fn syntax(line: usize, col: usize, msg: &str) -> ParseError {
    ParseError::Syntax { line, col, msg: msg.to_string() }
}

type Token = (usize, String);

/// Non-blank, non-comment lines tokenized with 1-based column positions.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token>)> + '_ {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let bytes = line.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            tokens.push((start + 1, line[start..i].to_string()));
        }
        Some((idx + 1, tokens))
    })
}

fn parse_decimal(line: usize, tok: &Token) -> Result<u64, ParseError> {
    tok.1
        .parse::<u64>()
        .map_err(|_| syntax(line, tok.0, &format!("expected a decimal integer, got {:?}", tok.1)))
}

/// Integer token for the polynomial: 0x-prefixed hex or decimal.
fn parse_integer_token(line: usize, tok: &Token) -> Result<u64, ParseError> {
    parse_entry(&tok.1)
        .ok_or_else(|| syntax(line, tok.0, &format!("invalid integer {:?}", tok.1)))
}

/// Matrix entry: `_x` suffix or `0x` prefix marks hex, bare tokens are decimal.
fn parse_entry(tok: &str) -> Option<u64> {
    if let Some(h) = tok.strip_suffix("_x").or_else(|| tok.strip_suffix("_X")) {
        u64::from_str_radix(h, 16).ok()
    } else if let Some(h) = tok.strip_prefix("0x").or_else(|| tok.strip_prefix("0X")) {
        u64::from_str_radix(h, 16).ok()
    } else {
        tok.parse::<u64>().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    const KHAZAD: &str = "\
# Khazad diffusion layer over GF(2^8)/0x11D
field 2 8 0x11D
n 8
01_x 03_x 04_x 05_x 06_x 08_x 0B_x 07_x
03_x 01_x 05_x 04_x 08_x 06_x 07_x 0B_x
04_x 05_x 01_x 03_x 0B_x 07_x 06_x 08_x
05_x 04_x 03_x 01_x 07_x 0B_x 08_x 06_x
06_x 08_x 0B_x 07_x 01_x 03_x 04_x 05_x
08_x 06_x 07_x 0B_x 03_x 01_x 05_x 04_x
0B_x 07_x 06_x 08_x 04_x 05_x 01_x 03_x
07_x 0B_x 08_x 06_x 05_x 04_x 03_x 01_x
";

    #[test]
    fn parses_khazad_file() {
        let (field, matrix) = parse_matrix_str(KHAZAD).unwrap();
        assert_eq!(field.order(), 256);
        assert_eq!(field.poly_encoded(), 0x11D);
        assert_eq!(matrix, samples::khazad());
    }

    #[test]
    fn mixed_entry_notations() {
        let text = "field 2 4 0x13\nn 2\n0x0A 11\n3 0f_x\n";
        let (field, matrix) = parse_matrix_str(text).unwrap();
        assert_eq!(field.order(), 16);
        assert_eq!(matrix.entry(0, 0).encoding(), 0x0A);
        assert_eq!(matrix.entry(0, 1).encoding(), 11); // bare tokens are decimal
        assert_eq!(matrix.entry(1, 0).encoding(), 3);
        assert_eq!(matrix.entry(1, 1).encoding(), 0x0F);
    }

    #[test]
    fn entry_out_of_field() {
        let text = "field 2 8 0x11D\nn 2\n01_x 1FF_x\n01_x 02_x\n";
        let err = parse_matrix_str(text).unwrap_err();
        match err {
            ParseError::EntryOutOfField { line, col, value, q } => {
                assert_eq!((line, col, value, q), (3, 6, 0x1FF, 256));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn missing_rows_reported() {
        let mut text = String::from("field 2 8 0x11D\nn 8\n");
        for _ in 0..7 {
            text.push_str("01_x 03_x 04_x 05_x 06_x 08_x 0B_x 07_x\n");
        }
        let err = parse_matrix_str(&text).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }));
        assert!(err.to_string().contains("expected 8 rows, found 7"));
    }

    #[test]
    fn extra_rows_and_ragged_rows_reported() {
        let text = "field 2 2 7\nn 2\n1 2\n3 1\n1 1\n";
        assert!(matches!(parse_matrix_str(text).unwrap_err(), ParseError::Syntax { .. }));

        let text = "field 2 2 7\nn 2\n1 2 3\n3 1\n";
        let err = parse_matrix_str(text).unwrap_err();
        assert!(err.to_string().contains("expected 2 entries"));
    }

    #[test]
    fn reducible_polynomial_reported() {
        let text = "field 2 8 0x100\nn 1\n1\n";
        let err = parse_matrix_str(text).unwrap_err();
        assert!(matches!(
            err,
            ParseError::Field { line: 1, err: FieldError::Reducible(_) }
        ));
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "\n# top comment\nfield 2 2 7\n\n# middle\nn 2\n1 2\n# about to finish\n3 1\n\n";
        let (field, matrix) = parse_matrix_str(text).unwrap();
        assert_eq!(field.order(), 4);
        assert_eq!(matrix.entry(1, 0).encoding(), 3);
    }

    #[test]
    fn malformed_headers_reported() {
        assert!(parse_matrix_str("").is_err());
        assert!(parse_matrix_str("field 2 8\nn 1\n1\n").is_err());
        assert!(parse_matrix_str("field 2 2 7\nm 2\n1 2\n3 1\n").is_err());
        assert!(parse_matrix_str("field 2 2 7\nn 0\n").is_err());
        let err = parse_matrix_str("field 2 2 7\nn 2\n1 zz\n3 1\n").unwrap_err();
        match err {
            ParseError::Syntax { line, col, .. } => assert_eq!((line, col), (3, 3)),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn non_binary_field_file() {
        // GF(9) with x^2 + 1 encoded in base 3: 1 + 0*3 + 1*9 = 10.
        let text = "field 3 2 10\nn 2\n1 8\n4 2\n";
        let (field, matrix) = parse_matrix_str(text).unwrap();
        assert_eq!(field.order(), 9);
        assert_eq!(matrix.entry(0, 1).encoding(), 8);
    }
}
