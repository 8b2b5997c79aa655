use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Symmetric positive-definite integer Gram matrix of a lattice basis.
#[derive(Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<i64>>,
}

/// `G = U^T D U` with `U` unit upper triangular, over the rationals.
#[derive(Debug, Clone)]
pub(crate) struct Ldl {
    pub diag: Vec<BigRational>,
    /// `upper[i][j]` for `j > i`; entries on or below the diagonal are unused.
    pub upper: Vec<Vec<BigRational>>,
}

impl GramMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let d = entries.len();
        if d == 0 {
            return Err(Error::Gram("empty matrix".into()));
        }
        if entries.iter().any(|row| row.len() != d) {
            return Err(Error::Gram("matrix is not square".into()));
        }
        for i in 0..d {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Gram(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        let g = GramMatrix { entries };
        g.ldl()?;
        Ok(g)
    }

    pub fn identity(d: usize) -> Self {
        let entries = (0..d)
            .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
            .collect();
        GramMatrix { entries }
    }

    /// Parses the fixture format: the dimension on the first line, then one
    /// row per line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, first) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing dimension".into(),
        })?;
        let d: usize = first.parse().map_err(|_| Error::Parse {
            line: ln,
            msg: format!("bad dimension {first:?}"),
        })?;
        let mut rows = Vec::with_capacity(d);
        for (ln, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>().map_err(|_| Error::Parse {
                        line: ln,
                        msg: format!("bad entry {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != d {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("expected {d} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != d {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {d} rows, found {}", rows.len()),
            });
        }
        Self::new(rows)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub(crate) fn ldl(&self) -> Result<Ldl> {
        let d = self.dim();
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let mut diag: Vec<BigRational> = Vec::with_capacity(d);
        let mut upper = vec![vec![BigRational::zero(); d]; d];
        for i in 0..d {
            let mut di = q(self.entries[i][i]);
            for k in 0..i {
                di -= &diag[k] * &upper[k][i] * &upper[k][i];
            }
            if !di.is_positive() {
                return Err(Error::Gram("matrix is not positive definite".into()));
            }
            for j in i + 1..d {
                let mut v = q(self.entries[i][j]);
                for k in 0..i {
                    v -= &diag[k] * &upper[k][i] * &upper[k][j];
                }
                upper[i][j] = v / &di;
            }
            diag.push(di);
        }
        Ok(Ldl { diag, upper })
    }

    pub fn determinant(&self) -> BigInt {
        let ldl = self.ldl().expect("validated at construction");
        let det = ldl.diag.iter().fold(BigRational::one(), |acc, x| acc * x);
        debug_assert!(det.is_integer());
        det.to_integer()
    }

    /// `x^T G x`.
    pub fn norm(&self, x: &[i64]) -> i64 {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| x[i] * self.entries[i][j] * x[j])
                    .sum::<i64>()
            })
            .sum()
    }
}

impl fmt::Debug for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GramMatrix")
            .field("dim", &self.dim())
            .field("entries", &self.entries)
            .finish()
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.dim())?;
        for row in &self.entries {
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", r.join(" "))?;
        }
        Ok(())
    }
}
