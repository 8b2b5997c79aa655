//! OEIS b-files: one `index value` pair per line, indices consecutive.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{IntSeries, ModSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub offset: i64,
    pub values: Vec<BigInt>,
}

impl BFile {
    pub fn new(offset: i64, values: Vec<BigInt>) -> Self {
        BFile { offset, values }
    }

    pub fn from_series(s: &IntSeries) -> Self {
        BFile {
            offset: 0,
            values: s.coeffs().to_vec(),
        }
    }

    pub fn from_residues(s: &ModSeries) -> Self {
        BFile {
            offset: 0,
            values: s.coeffs().iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// The values as coefficients of `x^0, x^1, ...`, whatever the offset.
    pub fn to_series(&self) -> Result<IntSeries> {
        IntSeries::from_coeffs(self.values.clone())
    }

    pub fn read(path: &Path) -> std::io::Result<Result<Self>> {
        Ok(parse_bfile(&std::fs::read_to_string(path)?))
    }
}

impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            writeln!(f, "{} {}", self.offset + i as i64, v)?;
        }
        Ok(())
    }
}

/// Strict parse: `#` lines and blank lines are skipped, every other line
/// must be exactly `index value` with indices increasing by one.
pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut offset = None;
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ln = i + 1;
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse {
                line: ln,
                msg: format!("expected `index value`, found {line:?}"),
            });
        };
        let idx: i64 = idx.parse().map_err(|_| Error::Parse {
            line: ln,
            msg: format!("bad index {idx:?}"),
        })?;
        let val: BigInt = val.parse().map_err(|_| Error::Parse {
            line: ln,
            msg: format!("bad value {val:?}"),
        })?;
        let start = *offset.get_or_insert(idx);
        let expected = start + values.len() as i64;
        if idx != expected {
            return Err(Error::Parse {
                line: ln,
                msg: format!("index {idx} where {expected} was expected"),
            });
        }
        values.push(val);
    }
    let offset = offset.ok_or(Error::Parse {
        line: 0,
        msg: "no terms".into(),
    })?;
    Ok(BFile { offset, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let b = parse_bfile("0 1\n1 2\n2 1").unwrap();
        assert_eq!(
            (b.offset, b.values),
            (0, [1, 2, 1].map(BigInt::from).to_vec())
        );
        let b = parse_bfile("# comment\n1 5\n2 7").unwrap();
        assert_eq!((b.offset, b.values), (1, [5, 7].map(BigInt::from).to_vec()));
        assert!(matches!(
            parse_bfile("0 1\n2 3"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_bfile("0 1 2\n").is_err());
        assert!(parse_bfile("0\n").is_err());
        assert!(parse_bfile("a 1\n").is_err());
        assert!(parse_bfile("0 1.5\n").is_err());
        assert!(parse_bfile("# only comments\n\n").is_err());
        let big = parse_bfile("-3 123456789012345678901234567890\n").unwrap();
        assert_eq!(big.offset, -3);
    }

    proptest! {
        #[test]
        fn round_trip(offset in -1000i64..1000, vals in prop::collection::vec(any::<i128>(), 1..40)) {
            let b = BFile::new(offset, vals.into_iter().map(BigInt::from).collect());
            prop_assert_eq!(parse_bfile(&b.to_string()).unwrap(), b);
        }
    }
}
