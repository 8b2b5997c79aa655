use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::{rm_enumerator, weight_enumerator, LinearCode, WeightEnumerator};

const TERNARY_GOLAY: &str = include_str!("../../data/codes/ternary_golay.gen");
const S18: &str = include_str!("../../data/codes/s18.gen");

const GOLAY: &[(usize, u64)] = &[(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)];

const RAO_REDDY: &[(usize, u64)] = &[
    (0, 1),
    (8, 7530),
    (10, 92160),
    (12, 1080384),
    (14, 7342080),
    (16, 34408911),
    (18, 111507456),
    (20, 255566784),
    (22, 417404928),
    (24, 492663180),
    (26, 417404928),
    (28, 255566784),
    (30, 111507456),
    (32, 34408911),
    (34, 7342080),
    (36, 1080384),
    (38, 92160),
    (40, 7530),
    (48, 1),
];

/// Parses a generator matrix: `q n k` on the first line, then `k` rows of
/// `n` symbols in `0..q`; `#` starts a comment and spaces are ignored.
pub fn parse_generator(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                line: ln,
                msg: format!("bad header field {t:?}"),
            })
        })
        .collect::<Result<_>>()?;
    let [q, n, k] = nums[..] else {
        return Err(Error::Parse {
            line: ln,
            msg: "header must be `q n k`".into(),
        });
    };
    let mut rows = Vec::with_capacity(k);
    for (ln, line) in lines {
        let row: Vec<u8> = line
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| (d as usize) < q)
                    .map(|d| d as u8)
                    .ok_or(Error::Parse {
                        line: ln,
                        msg: format!("bad symbol {c:?}"),
                    })
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse {
                line: ln,
                msg: format!("expected {n} symbols, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::Parse {
            line: 0,
            msg: format!("expected {k} rows, found {}", rows.len()),
        });
    }
    LinearCode::new(q as u32, n, rows)
}

fn from_table(q: u32, n: usize, k: usize, table: &[(usize, u64)]) -> WeightEnumerator {
    let mut counts = vec![BigInt::zero(); n + 1];
    for &(w, c) in table {
        counts[w] = BigInt::from(c);
    }
    WeightEnumerator::new(q, n, k, counts).expect("tabulated enumerator is consistent")
}

/// Names accepted by [`fixture_enumerator`].
pub fn fixture_names() -> &'static [&'static str] {
    &["golay", "hamming", "rao-reddy", "ternary-golay", "s18"]
}

/// Named weight enumerators: the binary Golay and Rao-Reddy codes from
/// tables, the others by enumerating a generator matrix.
pub fn fixture_enumerator(name: &str) -> Result<WeightEnumerator> {
    match name.to_ascii_lowercase().as_str() {
        "golay" => Ok(from_table(2, 24, 12, GOLAY)),
        "rao-reddy" => Ok(from_table(2, 48, 31, RAO_REDDY)),
        "hamming" => Ok(rm_enumerator(1, 3)?.0),
        "ternary-golay" => weight_enumerator(&parse_generator(TERNARY_GOLAY)?),
        "s18" => weight_enumerator(&parse_generator(S18)?),
        _ => Err(Error::Code(format!(
            "unknown fixture {name:?}; known: {}",
            fixture_names().join(", ")
        ))),
    }
}

pub fn fixture_enumerators() -> Result<Vec<(&'static str, WeightEnumerator)>> {
    fixture_names()
        .iter()
        .map(|&n| fixture_enumerator(n).map(|w| (n, w)))
        .collect()
}
