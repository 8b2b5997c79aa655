//! Linear codes over GF(2), GF(3) and GF(4) and their weight enumerators,
//! with the Reed-Muller and extended BCH families.

mod bch;
mod enumerate;
mod field;
mod fixtures;
mod reed_muller;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::IntSeries;

use field::Field;

pub use bch::{bch_conjecture_check, bch_extended, BchRow};
pub use fixtures::{fixture_enumerator, fixture_enumerators, fixture_names, parse_generator};
pub use reed_muller::{
    rm_2adic_limit_check, rm_code, rm_congruence_check, rm_enumerator, Dyadic, LimitRow,
    RmLimitReport, RmReport, RmRow,
};

/// Largest `log2` of the number of codewords walked by one enumeration.
pub const WORK_BOUND_BITS: u32 = 32;

/// A linear `[n, k]_q` code given by a full-rank generator matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    q: u32,
    n: usize,
    generator: Vec<Vec<u8>>,
}

impl LinearCode {
    pub fn new(q: u32, n: usize, generator: Vec<Vec<u8>>) -> Result<Self> {
        Field::new(q)?;
        if n > 128 {
            return Err(Error::Code(format!("length {n} exceeds 128")));
        }
        for (i, row) in generator.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Code(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if row.iter().any(|&e| u32::from(e) >= q) {
                return Err(Error::Code(format!("row {i} has a symbol outside GF({q})")));
            }
        }
        let code = LinearCode { q, n, generator };
        let (_, pivots) = code.row_reduce();
        if pivots.len() != code.k() {
            return Err(Error::Code(format!(
                "generator has rank {} < {}",
                pivots.len(),
                code.k()
            )));
        }
        Ok(code)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Vec<u8>] {
        &self.generator
    }

    fn field(&self) -> Field {
        Field { q: self.q as u8 }
    }

    /// Reduced row echelon form (zero rows dropped) and its pivot columns.
    fn row_reduce(&self) -> (Vec<Vec<u8>>, Vec<usize>) {
        let f = self.field();
        let mut m = self.generator.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.n {
            let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, p);
            let inv = f.inv(m[r][c]);
            for e in m[r].iter_mut() {
                *e = f.mul(*e, inv);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let factor = f.neg(m[i][c]);
                    for j in 0..self.n {
                        let t = f.mul(factor, m[r][j]);
                        m[i][j] = f.add(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        (m, pivots)
    }

    /// The dual code under the standard dot product.
    pub fn dual(&self) -> LinearCode {
        let f = self.field();
        let (rref, pivots) = self.row_reduce();
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        let generator = free
            .iter()
            .map(|&c| {
                let mut h = vec![0u8; self.n];
                h[c] = 1;
                for (i, &p) in pivots.iter().enumerate() {
                    h[p] = f.neg(rref[i][c]);
                }
                h
            })
            .collect();
        LinearCode {
            q: self.q,
            n: self.n,
            generator,
        }
    }

    /// `log2` of the number of codewords.
    fn size_bits(&self, k: usize) -> f64 {
        k as f64 * f64::from(self.q).log2()
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}]_{}", self.n, self.k(), self.q)
    }
}

/// Weight distribution of an `[n, k]_q` code as a polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightEnumerator {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    series: IntSeries,
}

impl WeightEnumerator {
    /// Validates constant term 1, non-negative counts summing to `q^k`.
    pub fn new(q: u32, n: usize, k: usize, counts: Vec<BigInt>) -> Result<Self> {
        if counts.len() != n + 1 {
            return Err(Error::Code(format!(
                "expected {} counts, found {}",
                n + 1,
                counts.len()
            )));
        }
        if !counts[0].is_one() {
            return Err(Error::Code(format!("weight-0 count is {}", counts[0])));
        }
        if counts.iter().any(|c| c.is_negative()) {
            return Err(Error::Code("negative count".into()));
        }
        let total: BigInt = counts.iter().sum();
        if total != Pow::pow(BigInt::from(q), k) {
            return Err(Error::Code(format!("counts sum to {total}, not {q}^{k}")));
        }
        Ok(WeightEnumerator {
            q,
            n,
            k,
            series: IntSeries::from_coeffs(counts)?,
        })
    }

    pub fn series(&self) -> &IntSeries {
        &self.series
    }

    pub fn count(&self, w: usize) -> &BigInt {
        self.series.coeff(w)
    }

    /// The enumerator as a power series padded with zeros to `order`.
    pub fn padded(&self, order: usize) -> IntSeries {
        self.series.pad_to(order)
    }

    pub fn is_palindromic(&self) -> bool {
        let c = self.series.coeffs();
        (0..=self.n).all(|w| c[w] == c[self.n - w])
    }
}

/// Weight enumerator of the dual code.
pub fn macwilliams(w: &WeightEnumerator) -> Result<WeightEnumerator> {
    let n = w.n;
    let qm1 = BigInt::from(w.q - 1);
    let mut acc = vec![BigInt::zero(); n + 1];
    // (1 + (q-1) x)^(n-j) (1 - x)^j
    for (j, a) in w.series.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mut poly = vec![BigInt::one()];
        for _ in 0..n - j {
            poly = mul_linear(&poly, &BigInt::one(), &qm1);
        }
        for _ in 0..j {
            poly = mul_linear(&poly, &BigInt::one(), &-BigInt::one());
        }
        for (i, c) in poly.into_iter().enumerate() {
            acc[i] += a * c;
        }
    }
    let size = Pow::pow(BigInt::from(w.q), w.k);
    let mut counts = Vec::with_capacity(n + 1);
    for (i, c) in acc.into_iter().enumerate() {
        let (d, r) = c.div_rem(&size);
        if !r.is_zero() {
            return Err(Error::Code(format!("transform is not integral at x^{i}")));
        }
        counts.push(d);
    }
    WeightEnumerator::new(w.q, n, n - w.k, counts)
}

fn mul_linear(p: &[BigInt], a: &BigInt, b: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i] += c * a;
        out[i + 1] += c * b;
    }
    out
}

/// How an enumerator was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationRoute {
    Direct,
    Dual,
}

fn from_histogram(code: &LinearCode, hist: Vec<u64>) -> Result<WeightEnumerator> {
    WeightEnumerator::new(
        code.q,
        code.n,
        code.k(),
        hist.into_iter().map(BigInt::from).collect(),
    )
}

fn check_bound(code: &LinearCode, k: usize) -> Result<()> {
    let bits = code.size_bits(k);
    if bits > f64::from(WORK_BOUND_BITS) + 1e-9 {
        return Err(Error::WorkBound {
            bits: bits.ceil() as u32,
            bound: WORK_BOUND_BITS,
        });
    }
    Ok(())
}

/// Enumerates every codeword of `code`.
pub fn direct_enumerator(code: &LinearCode) -> Result<WeightEnumerator> {
    check_bound(code, code.k())?;
    from_histogram(code, enumerate::direct_histogram(code))
}

/// Enumerates the dual code and applies the MacWilliams transform.
pub fn dual_enumerator(code: &LinearCode) -> Result<WeightEnumerator> {
    let dual = code.dual();
    check_bound(&dual, dual.k())?;
    let wd = from_histogram(&dual, enumerate::direct_histogram(&dual))?;
    macwilliams(&wd)
}

/// Exact weight enumerator, walking whichever of the code and its dual is
/// smaller.
pub fn weight_enumerator_via(code: &LinearCode) -> Result<(WeightEnumerator, EnumerationRoute)> {
    if code.k() <= code.n - code.k() {
        Ok((direct_enumerator(code)?, EnumerationRoute::Direct))
    } else {
        Ok((dual_enumerator(code)?, EnumerationRoute::Dual))
    }
}

pub fn weight_enumerator(code: &LinearCode) -> Result<WeightEnumerator> {
    weight_enumerator_via(code).map(|(w, _)| w)
}

/// Order to which enumerators (polynomials) are tested for roots.
pub fn membership_order(n: usize) -> usize {
    (4 * n + 1).max(101)
}
