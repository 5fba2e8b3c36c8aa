//! Reader for delimited pair files.
//!
//! Lines are split on commas when they contain one and on whitespace
//! otherwise. Blank lines and lines starting with `#` are skipped; `header`
//! drops the first remaining line. Tokens are compared as strings after
//! numeric normalization, so `1`, `1.0` and `+1.00` are the same symbol.

use std::fs;
use std::path::Path;

use crate::error::{file_error, Error, Result};
use crate::sample::{encode, Encoded};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairFileOptions {
    pub column_x: usize,
    pub column_y: usize,
    pub header: bool,
}

impl Default for PairFileOptions {
    fn default() -> Self {
        PairFileOptions {
            column_x: 0,
            column_y: 1,
            header: false,
        }
    }
}

/// Two equal-length token columns read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFile {
    pub source: String,
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl PairFile {
    pub fn read(path: &Path, options: PairFileOptions) -> Result<PairFile> {
        let text = fs::read_to_string(path).map_err(file_error(path))?;
        Self::parse(&text, &path.display().to_string(), options)
    }

    pub fn parse(text: &str, source: &str, options: PairFileOptions) -> Result<PairFile> {
        let mut columns = read_columns(
            text,
            source,
            &[options.column_x, options.column_y],
            options.header,
        )?;
        let y = columns.pop().expect("two columns requested");
        let x = columns.pop().expect("two columns requested");
        Ok(PairFile {
            source: source.to_string(),
            x,
            y,
        })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Both columns encoded by first appearance.
    pub fn encode(&self) -> Result<(Encoded<String>, Encoded<String>)> {
        Ok((encode(&self.x)?, encode(&self.y)?))
    }
}

/// Reads a single column, e.g. for scoring one variable.
pub fn read_column(path: &Path, column: usize, header: bool) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).map_err(file_error(path))?;
    let mut columns = read_columns(&text, &path.display().to_string(), &[column], header)?;
    Ok(columns.pop().expect("one column requested"))
}

fn read_columns(
    text: &str,
    source: &str,
    wanted: &[usize],
    header: bool,
) -> Result<Vec<Vec<String>>> {
    let parse_err = |line: usize, message: String| Error::Parse {
        path: source.to_string(),
        line,
        message,
    };
    let mut columns = vec![Vec::new(); wanted.len()];
    let mut skip_header = header;
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if skip_header {
            skip_header = false;
            continue;
        }
        let fields: Vec<&str> = if trimmed.contains(',') {
            trimmed.split(',').map(str::trim).collect()
        } else {
            trimmed.split_whitespace().collect()
        };
        for (slot, &col) in columns.iter_mut().zip(wanted) {
            let field = fields.get(col).ok_or_else(|| {
                parse_err(
                    i + 1,
                    format!(
                        "expected at least {} columns, found {}",
                        col + 1,
                        fields.len()
                    ),
                )
            })?;
            slot.push(normalize_token(field));
        }
    }
    if columns[0].is_empty() {
        return Err(parse_err(0, "no data rows".to_string()));
    }
    Ok(columns)
}

/// Canonical spelling of a token.
///
/// Decimal numbers lose a leading `+`, trailing fractional zeros and a bare
/// trailing point; exponents lose their `+` and leading zeros. Anything that
/// is not a number is returned unchanged.
pub fn normalize_token(token: &str) -> String {
    let token = token.trim();
    if token.parse::<f64>().is_err() || !token.bytes().any(|b| b.is_ascii_digit()) {
        return token.to_string();
    }
    let (mantissa, exponent) = match token.find(['e', 'E']) {
        Some(pos) => (&token[..pos], Some(&token[pos + 1..])),
        None => (token, None),
    };
    let mut mantissa = mantissa.strip_prefix('+').unwrap_or(mantissa).to_string();
    if mantissa.contains('.') {
        while mantissa.ends_with('0') {
            mantissa.pop();
        }
        if mantissa.ends_with('.') {
            mantissa.pop();
        }
    }
    if mantissa == "-0" || mantissa.is_empty() || mantissa == "-" {
        mantissa = "0".to_string();
    }
    match exponent {
        None => mantissa,
        Some(exp) => {
            let (sign, digits) = match exp.strip_prefix('-') {
                Some(d) => ("-", d),
                None => ("", exp.strip_prefix('+').unwrap_or(exp)),
            };
            let digits = digits.trim_start_matches('0');
            if digits.is_empty() {
                mantissa
            } else {
                format!("{mantissa}e{sign}{digits}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_numbers() {
        assert_eq!(normalize_token("1"), "1");
        assert_eq!(normalize_token("1.0"), "1");
        assert_eq!(normalize_token("+1.500"), "1.5");
        assert_eq!(normalize_token("-0.0"), "0");
        assert_eq!(normalize_token("2.50e+03"), "2.5e3");
        assert_eq!(normalize_token("2.5E-03"), "2.5e-3");
        assert_eq!(normalize_token("7e0"), "7");
        assert_eq!(normalize_token("100"), "100");
        assert_eq!(normalize_token("male"), "male");
        assert_eq!(normalize_token("inf"), "inf");
    }

    #[test]
    fn parses_whitespace_and_commas() {
        let text = "# comment\n1 2\n\n1.0\t3\n2,2.00\n";
        let pf = PairFile::parse(text, "t", PairFileOptions::default()).unwrap();
        assert_eq!(pf.x, vec!["1", "1", "2"]);
        assert_eq!(pf.y, vec!["2", "3", "2"]);
        let (x, y) = pf.encode().unwrap();
        assert_eq!(x.sample.values(), &[0, 0, 1]);
        assert_eq!(y.sample.values(), &[0, 1, 0]);
    }

    #[test]
    fn header_and_column_selection() {
        let text = "a b c\n1 2 3\n4 5 6\n";
        let opts = PairFileOptions {
            column_x: 0,
            column_y: 2,
            header: true,
        };
        let pf = PairFile::parse(text, "t", opts).unwrap();
        assert_eq!(pf.x, vec!["1", "4"]);
        assert_eq!(pf.y, vec!["3", "6"]);
    }

    #[test]
    fn ragged_and_empty_inputs_fail() {
        let err = PairFile::parse("1 2\n3\n", "f.txt", PairFileOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = PairFile::parse("# only\n\n", "f.txt", PairFileOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}
