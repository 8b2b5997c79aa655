use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::roots::is_nth_power;
use crate::series::IntSeries;

use super::{
    membership_order, weight_enumerator_via, EnumerationRoute, LinearCode, WeightEnumerator,
};

const MAX_M: u32 = 7;

fn rm_rows(r: u32, m: u32) -> Vec<Vec<u8>> {
    let n = 1usize << m;
    if r == 0 {
        return vec![vec![1; n]];
    }
    if r == m {
        return (0..n)
            .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
            .collect();
    }
    let mut rows: Vec<Vec<u8>> = rm_rows(r, m - 1)
        .into_iter()
        .map(|u| [u.clone(), u].concat())
        .collect();
    rows.extend(
        rm_rows(r - 1, m - 1)
            .into_iter()
            .map(|v| [vec![0; n / 2], v].concat()),
    );
    rows
}

/// Reed-Muller code `RM(r, m)` of length `2^m`, built by `(u | u + v)`.
pub fn rm_code(r: u32, m: u32) -> Result<LinearCode> {
    if m > MAX_M || r > m {
        return Err(Error::OutOfRange(format!(
            "RM({r}, {m}) needs 0 <= r <= m <= {MAX_M}"
        )));
    }
    LinearCode::new(2, 1 << m, rm_rows(r, m))
}

fn full_space(n: usize) -> WeightEnumerator {
    let mut counts = vec![BigInt::one()];
    for w in 1..=n {
        let prev = counts[w - 1].clone();
        counts.push(prev * (n - w + 1) / w);
    }
    WeightEnumerator::new(2, n, n, counts).expect("binomial coefficients")
}

/// `W_{r,m}`, taken to be `(1 + x)^{2^m}` when `r > m`.
pub fn rm_enumerator(r: u32, m: u32) -> Result<(WeightEnumerator, EnumerationRoute)> {
    if r >= m {
        if m > MAX_M {
            return Err(Error::OutOfRange(format!("m = {m} exceeds {MAX_M}")));
        }
        return Ok((full_space(1 << m), EnumerationRoute::Direct));
    }
    weight_enumerator_via(&rm_code(r, m)?)
}

fn is_zero_mod(s: &IntSeries, modulus: &BigInt) -> bool {
    s.coeffs().iter().all(|c| c.is_multiple_of(modulus))
}

/// Outcome for one `RM(r, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmRow {
    pub r: u32,
    pub m: u32,
    pub k: usize,
    pub route: EnumerationRoute,
    /// `W_{r,m} = (1 + x^{2^{m-r}})^{2^r} (mod 2^{r+1})`.
    pub product_congruence: bool,
    /// Whether `W_{r,m}` passed the `2^r`-th root test.
    pub member: bool,
}

/// `W_{r,m+1} - W_{r,m}(x^2) = 0 (mod 2^{m+1})` for one `(r, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmDoublingRow {
    pub r: u32,
    pub m: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmReport {
    pub rows: Vec<RmRow>,
    pub doubling: Vec<RmDoublingRow>,
}

impl RmReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.product_congruence && r.member)
            && self.doubling.iter().all(|d| d.holds)
    }
}

/// Checks both Reed-Muller congruences for every `m <= m_max` and tests
/// `W_{r,m}` for a `2^r`-th root.
pub fn rm_congruence_check(m_max: u32) -> Result<RmReport> {
    if m_max > 6 {
        return Err(Error::OutOfRange(format!("m_max = {m_max} exceeds 6")));
    }
    // table[m][r] = W_{r,m} for r <= m + 1
    let mut table: Vec<Vec<(WeightEnumerator, EnumerationRoute)>> = Vec::new();
    for m in 0..=m_max {
        table.push(
            (0..=m + 1)
                .map(|r| rm_enumerator(r, m))
                .collect::<Result<_>>()?,
        );
    }
    let mut rows = Vec::new();
    for m in 0..=m_max {
        for r in 0..=m {
            let (w, route) = &table[m as usize][r as usize];
            let n = 1usize << m;
            let base =
                &IntSeries::one(n + 1) + &IntSeries::monomial(BigInt::one(), 1 << (m - r), n + 1);
            let target = base.pow_u64(1 << r);
            let modulus = BigInt::from(1u64 << (r + 1));
            let product_congruence = is_zero_mod(&(w.series() - &target), &modulus);
            let member = is_nth_power(&w.padded(membership_order(n)), 1 << r)?.is_member();
            rows.push(RmRow {
                r,
                m,
                k: w.k,
                route: *route,
                product_congruence,
                member,
            });
        }
    }
    let mut doubling = Vec::new();
    for m in 0..m_max {
        for r in 0..=m + 1 {
            let hi = table[m as usize + 1][r as usize].0.series();
            let lo = table[m as usize][r as usize]
                .0
                .series()
                .substitute_xk(2, Some(hi.order()));
            let holds = is_zero_mod(&(hi - &lo), &BigInt::from(1u64 << (m + 1)));
            doubling.push(RmDoublingRow { r, m, holds });
        }
    }
    Ok(RmReport { rows, doubling })
}

/// A dyadic rational `num / 2^log_den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dyadic {
    num: u64,
    log_den: u32,
}

impl Dyadic {
    pub fn new(mut num: u64, mut log_den: u32) -> Self {
        while log_den > 0 && num.is_multiple_of(2) {
            num /= 2;
            log_den -= 1;
        }
        Dyadic { num, log_den }
    }

    /// `self * 2^m` when that is an integer.
    pub fn times_pow2(&self, m: u32) -> Option<u64> {
        (m >= self.log_den).then(|| self.num << (m - self.log_den))
    }

    fn at_most_one(&self) -> bool {
        self.num <= 1u64 << self.log_den
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log_den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.log_den)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::OutOfRange(format!("{s:?} is not a dyadic rational a/2^b"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<u64>().map_err(|_| bad())?,
                b.trim().parse::<u64>().map_err(|_| bad())?,
            ),
            None => (s.trim().parse::<u64>().map_err(|_| bad())?, 1),
        };
        if den == 0 || !den.is_power_of_two() {
            return Err(bad());
        }
        Ok(Dyadic::new(num, den.trailing_zeros()))
    }
}

/// `f_{r,m}(lambda)` for one `m`, with the 2-adic comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitRow {
    pub m: u32,
    /// `None` when `lambda 2^m` is not an integer.
    pub count: Option<BigInt>,
    /// Agreement with the previous count modulo `2^m`.
    pub agrees_with_previous: Option<bool>,
    /// Agreement with `2^r / prod_{i=1}^r (1 - 2^i)` modulo `2^{m+1}`;
    /// only for `lambda = 2^{-r}`.
    pub agrees_with_limit: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmLimitReport {
    pub r: u32,
    pub lambda: Dyadic,
    pub rows: Vec<LimitRow>,
}

impl RmLimitReport {
    pub fn all_hold(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.agrees_with_previous != Some(false) && r.agrees_with_limit != Some(false))
    }
}

/// `2^r / prod_{i=1}^r (1 - 2^i)` modulo `2^bits`.
fn limit_residue(r: u32, bits: u32) -> BigInt {
    let modulus = BigInt::one() << bits;
    let prod = (1..=r).fold(BigInt::one(), |acc, i| {
        acc * (BigInt::one() - (BigInt::one() << i))
    });
    let inv = prod.extended_gcd(&modulus).x;
    ((BigInt::one() << r) * inv).mod_floor(&modulus)
}

/// Counts words of weight `lambda 2^m` in `RM(r, m)` for `m = r..=m_max`
/// and checks that successive counts agree to increasing 2-adic precision.
pub fn rm_2adic_limit_check(r: u32, lambda: Dyadic, m_max: u32) -> Result<RmLimitReport> {
    if r > 3 || m_max > 6 || !lambda.at_most_one() {
        return Err(Error::OutOfRange(format!(
            "need r <= 3, m_max <= 6, lambda <= 1; got {r}, {m_max}, {lambda}"
        )));
    }
    let closed_form = lambda == Dyadic::new(1, r);
    let mut rows: Vec<LimitRow> = Vec::new();
    for m in r..=m_max {
        let count = match lambda.times_pow2(m) {
            Some(w) => Some(rm_enumerator(r, m)?.0.count(w as usize).clone()),
            None => None,
        };
        let agrees_with_previous =
            match (rows.last().and_then(|p| p.count.as_ref()), count.as_ref()) {
                (Some(prev), Some(cur)) => Some((cur - prev).is_multiple_of(&(BigInt::one() << m))),
                _ => None,
            };
        let agrees_with_limit = match (&count, closed_form) {
            (Some(c), true) => {
                Some(c.mod_floor(&(BigInt::one() << (m + 1))) == limit_residue(r, m + 1))
            }
            _ => None,
        };
        rows.push(LimitRow {
            m,
            count,
            agrees_with_previous,
            agrees_with_limit,
        });
    }
    Ok(RmLimitReport { r, lambda, rows })
}
