//! Lattice theta series: exact enumeration from Gram matrices, the
//! modular-form route for extremal even unimodular lattices, and the
//! Barnes-Wall congruences.

mod enumerate;
mod gram;
mod modular;

use std::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::IntSeries;

pub use gram::GramMatrix;
pub use modular::{
    bw16_theta, delta_series, extremal_form, extremal_modulus, extremal_theta, j_times_x,
    psi_series, smooth_part, ExtremalForm,
};

/// Generating function `sum_u x^{u.u}` of a lattice, truncated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaSeries(IntSeries);

impl ThetaSeries {
    /// Wraps a series after checking constant term 1, non-negative
    /// coefficients and even counts past the constant.
    pub fn from_series(s: IntSeries) -> Result<Self> {
        if !s.constant().is_one() {
            return Err(Error::ConstantTerm {
                expected: "1",
                found: s.constant().to_string(),
            });
        }
        let two = BigInt::from(2);
        if let Some(k) = s.coeffs()[1..]
            .iter()
            .position(|c| c.is_negative() || !c.is_multiple_of(&two))
        {
            return Err(Error::OutOfRange(format!(
                "coefficient {} is not an even count",
                k + 1
            )));
        }
        Ok(ThetaSeries(s))
    }

    pub(crate) fn from_series_unchecked(s: IntSeries) -> Self {
        ThetaSeries(s)
    }

    pub fn series(&self) -> &IntSeries {
        &self.0
    }

    pub fn into_series(self) -> IntSeries {
        self.0
    }

    /// Number of minimal nonzero vectors, with their norm.
    pub fn kissing(&self) -> Option<(usize, BigInt)> {
        self.0
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
    }
}

impl Deref for ThetaSeries {
    type Target = IntSeries;
    fn deref(&self) -> &IntSeries {
        &self.0
    }
}

/// Counts lattice vectors of every norm `0..=max_norm`.
pub fn theta_from_gram(gram: &GramMatrix, max_norm: u64) -> ThetaSeries {
    let counts = enumerate::count_vectors(gram, max_norm);
    let s =
        IntSeries::from_coeffs(counts.into_iter().map(BigInt::from).collect()).expect("non-empty");
    debug_assert!(ThetaSeries::from_series(s.clone()).is_ok());
    ThetaSeries(s)
}

/// Theta series of the integers, `1 + 2 sum x^{k^2}`.
pub fn theta_z(order: usize) -> ThetaSeries {
    let order = order.max(1);
    let mut c = vec![BigInt::zero(); order];
    c[0] = BigInt::one();
    let mut k = 1;
    while k * k < order {
        c[k * k] = BigInt::from(2);
        k += 1;
    }
    ThetaSeries(IntSeries::from_coeffs(c).expect("non-empty"))
}

/// Theta series of `Z^d`.
pub fn theta_zd(d: u64, order: usize) -> ThetaSeries {
    ThetaSeries(theta_z(order).pow_u64(d))
}

const FIXTURES: &[(&str, &str, u64)] = &[
    ("A2", include_str!("../../data/lattices/a2.gram"), 3),
    ("D4", include_str!("../../data/lattices/d4.gram"), 4),
    ("E6", include_str!("../../data/lattices/e6.gram"), 3),
    (
        "E6dual",
        include_str!("../../data/lattices/e6dual.gram"),
        243,
    ),
    ("E8", include_str!("../../data/lattices/e8.gram"), 1),
    ("K12", include_str!("../../data/lattices/k12.gram"), 729),
    (
        "BW16",
        include_str!("../../data/lattices/bw16.gram"),
        1 << 24,
    ),
];

/// Names accepted by [`builtin_lattice`], with `Zd` listed once per `d`.
pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = FIXTURES.iter().map(|(n, _, _)| n.to_string()).collect();
    names.extend((1..=24).map(|d| format!("Z{d}")));
    names
}

fn zd_dim(name: &str) -> Option<u64> {
    let rest = name.strip_prefix('Z').or_else(|| name.strip_prefix('z'))?;
    rest.parse().ok().filter(|d| (1..=24).contains(d))
}

/// Shipped Gram matrix by name (case-insensitive). `E6dual` is stored
/// scaled by 3 so that its entries are integers.
pub fn builtin_lattice(name: &str) -> Result<GramMatrix> {
    if let Some(d) = zd_dim(name) {
        return Ok(GramMatrix::identity(d as usize));
    }
    let (_, text, det) = FIXTURES
        .iter()
        .find(|(n, _, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownLattice(name.to_string()))?;
    let g = GramMatrix::parse(text)?;
    if g.determinant() != BigInt::from(*det) {
        return Err(Error::Gram(format!(
            "{name}: determinant {} differs from {det}",
            g.determinant()
        )));
    }
    Ok(g)
}

/// Theta series of a builtin lattice to `x^max_norm`, using the product
/// formula for `Zd` and enumeration otherwise.
pub fn builtin_theta(name: &str, max_norm: u64) -> Result<ThetaSeries> {
    if let Some(d) = zd_dim(name) {
        return Ok(theta_zd(d, max_norm as usize + 1));
    }
    Ok(theta_from_gram(&builtin_lattice(name)?, max_norm))
}

fn check_bw(m: u32, lo: u32) -> Result<()> {
    if !(lo..=4).contains(&m) {
        return Err(Error::OutOfRange(format!(
            "Barnes-Wall index {m} outside {lo}..=4"
        )));
    }
    Ok(())
}

/// Theta series of the Barnes-Wall lattice in dimension `2^m`, scaled to
/// minimal norm `2^{m-1}`.
pub fn bw_theta(m: u32, order: usize) -> Result<ThetaSeries> {
    check_bw(m, 1)?;
    let order = order.max(1);
    let max_norm = order as u64 - 1;
    Ok(match m {
        1 => theta_from_gram(&GramMatrix::identity(2), max_norm),
        2 => theta_from_gram(&builtin_lattice("D4")?, max_norm),
        3 => {
            let e8 = theta_from_gram(&builtin_lattice("E8")?, max_norm / 2);
            ThetaSeries(e8.substitute_xk(2, Some(order)))
        }
        _ => theta_from_gram(&builtin_lattice("BW16")?, max_norm),
    })
}

/// `Theta_{BW_{2^m}} = 1 (mod 2^{m+1})`.
pub fn bw_theta_is_one_mod(m: u32, order: usize) -> Result<bool> {
    Ok(bw_theta(m, order)?.is_one_mod(1 << (m + 1)))
}

/// Checks `(Theta_m - 1) / 2^{m+1} = (1 - 2^{m-1}) (Theta_{m-1}(x^2) - 1) / 2^m (mod 2^m)`
/// coefficientwise, together with `Theta_m = 1 (mod 2^{m+1})`.
pub fn bw_congruence_check(m: u32, order: usize) -> Result<bool> {
    check_bw(m, 2)?;
    let order = order.max(1);
    let hi = bw_theta(m, order)?;
    let lo = bw_theta(m - 1, (order - 1) / 2 + 1)?.substitute_xk(2, Some(order));
    let big = BigInt::from(1u64 << (m + 1));
    let half = BigInt::from(1u64 << m);
    if !hi.is_one_mod(1 << (m + 1)) || !lo.is_one_mod(1 << m) {
        return Ok(false);
    }
    let factor = BigInt::one() - BigInt::from(1u64 << (m - 1));
    Ok((1..order).all(|k| {
        let lhs = hi.coeff(k) / &big;
        let rhs = &factor * (lo.coeff(k) / &half);
        (lhs - rhs).is_multiple_of(&half)
    }))
}

/// One row of the kissing-number comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KissingRow {
    pub m: u32,
    pub kissing: BigInt,
    /// `kissing / 2^{m+1}`.
    pub normalized: BigInt,
    /// `prod_{i=1}^{m} (1 + 2^i) mod 2^m`.
    pub product_residue: BigInt,
    pub agrees: bool,
}

/// Compares normalized Barnes-Wall kissing numbers with partial products of
/// `prod (1 + 2^i)`, modulo `2^m`.
pub fn kissing_2adic_rows(max_m: u32) -> Result<Vec<KissingRow>> {
    if !(1..=4).contains(&max_m) {
        return Err(Error::OutOfRange(format!(
            "Barnes-Wall index {max_m} outside 1..=4"
        )));
    }
    let mut rows = Vec::new();
    let mut product = BigInt::one();
    for m in 1..=max_m {
        product *= BigInt::one() + BigInt::from(1u64 << m);
        let norm = 1usize << (m - 1);
        let th = bw_theta(m, norm + 1)?;
        let kissing = th.coeff(norm).clone();
        let big = BigInt::from(1u64 << (m + 1));
        let modulus = BigInt::from(1u64 << m);
        let normalized = &kissing / &big;
        let product_residue = product.mod_floor(&modulus);
        let agrees =
            kissing.is_multiple_of(&big) && normalized.mod_floor(&modulus) == product_residue;
        rows.push(KissingRow {
            m,
            kissing,
            normalized,
            product_residue,
            agrees,
        });
    }
    Ok(rows)
}

pub fn kissing_2adic_check(max_m: u32) -> Result<bool> {
    let rows = kissing_2adic_rows(max_m)?;
    let consistent = rows.windows(2).all(|w| {
        let modulus = BigInt::from(1u64 << w[0].m);
        (&w[1].normalized - &w[0].normalized).is_multiple_of(&modulus)
    });
    Ok(consistent && rows.iter().all(|r| r.agrees))
}

/// Membership orders found for one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub name: String,
    pub dim: u64,
    pub max_norm: u64,
    pub bound: u64,
    pub members: Vec<u64>,
}

impl SweepRow {
    /// Some `n > d` passed, or some member does not divide `d`.
    pub fn violation(&self) -> bool {
        self.members
            .iter()
            .any(|&n| n > self.dim || !self.dim.is_multiple_of(n))
    }
}

fn sweep_max_norm(name: &str) -> u64 {
    match name {
        "A2" => 150,
        "D4" => 60,
        "E6" => 40,
        "E6dual" => 120,
        "E8" => 30,
        "K12" => 36,
        "BW16" => 400,
        _ => 200,
    }
}

/// For every builtin lattice of dimension `d`, the root orders `n <= 2d`
/// its theta series passes, to a fixed per-lattice norm bound.
pub fn conjecture_sweep() -> Result<Vec<SweepRow>> {
    builtin_names()
        .into_iter()
        .map(|name| {
            let dim = builtin_lattice(&name)?.dim() as u64;
            let max_norm = sweep_max_norm(&name);
            let theta = match name.as_str() {
                "BW16" => bw16_theta(max_norm as usize + 1),
                _ => builtin_theta(&name, max_norm)?,
            };
            let bound = 2 * dim;
            let members = crate::roots::max_power_order(&theta, bound)?
                .into_iter()
                .collect();
            Ok(SweepRow {
                name,
                dim,
                max_norm,
                bound,
                members,
            })
        })
        .collect()
}
