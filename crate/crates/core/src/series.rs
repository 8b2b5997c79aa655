//! Truncated formal power series over the integers and over `Z/mZ`.
//!
//! Every value carries a fixed number of coefficients (its *order*); binary
//! operations truncate to the smaller order of their inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A power series `c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N)` with exact
/// integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(IntSeries { coeffs })
    }

    /// Convenience constructor from anything convertible into `BigInt`.
    pub fn from_ints<I, T>(coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "series order must be positive");
        IntSeries {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `c x^k`, truncated to `order` (so it is zero when `k >= order`).
    pub fn monomial(c: BigInt, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `1/(1-x) = 1 + x + x^2 + ...`
    pub fn geometric(order: usize) -> Self {
        assert!(order >= 1, "series order must be positive");
        IntSeries {
            coeffs: vec![BigInt::one(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero past the stored order is *not* implied, so
    /// this panics when `k >= order`.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, c: BigInt) {
        self.coeffs[k] = c;
    }

    pub fn constant(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1, "series order must be positive");
        IntSeries {
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    /// Pads with zero coefficients up to `order`. Meant for polynomials, whose
    /// higher coefficients really are zero.
    pub fn pad_to(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < order {
            coeffs.resize(order, BigInt::zero());
        }
        IntSeries { coeffs }
    }

    /// True when both series agree on the first `order` coefficients (or on
    /// all shared coefficients, if either is shorter).
    pub fn eq_to_order(&self, other: &Self, order: usize) -> bool {
        let n = order.min(self.order()).min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Index of the highest nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn unit_constant(&self) -> Result<i32> {
        let c = self.constant();
        if c.is_one() {
            Ok(1)
        } else if *c == -BigInt::one() {
            Ok(-1)
        } else {
            Err(Error::ConstantTerm {
                expected: "±1",
                found: c.to_string(),
            })
        }
    }

    /// Multiplicative inverse; defined when the constant term is a unit.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.unit_constant()?;
        let n = self.order();
        let mut g: Vec<BigInt> = Vec::with_capacity(n);
        g.push(BigInt::from(c0));
        for k in 1..n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !g[k - j].is_zero() {
                    acc += &self.coeffs[j] * &g[k - j];
                }
            }
            g.push(if c0 == 1 { -acc } else { acc });
        }
        Ok(IntSeries { coeffs: g })
    }

    /// `self^e` by binary exponentiation; negative powers go through
    /// [`IntSeries::inverse`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow_u64(e.unsigned_abs()))
    }

    pub fn pow_u64(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(x^k)`. The default order is `k (N - 1) + 1`; an explicit `order`
    /// may go up to `k N`, the point where `O(x^N)` becomes `O(x^{kN})`.
    pub fn substitute_xk(&self, k: usize, order: Option<usize>) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let natural = k * (self.order() - 1) + 1;
        let order = order.unwrap_or(natural).min(k * self.order());
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let idx = i * k;
            if idx >= order {
                break;
            }
            out.coeffs[idx] = c.clone();
        }
        out
    }

    /// `f(Ax)`: coefficient `c_k` becomes `A^k c_k`.
    pub fn scale_x(&self, a: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let mut coeffs = Vec::with_capacity(self.order());
        for c in &self.coeffs {
            coeffs.push(c * &pw);
            pw *= a;
        }
        IntSeries { coeffs }
    }

    pub fn reduce_mod(&self, m: u64) -> Result<ModSeries> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        let mb = BigInt::from(m);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mod_floor(&mb).to_u64().expect("residue fits in u64"))
            .collect();
        Ok(ModSeries { modulus: m, coeffs })
    }

    /// True when every coefficient past the constant is divisible by `m` and
    /// the constant is 1, i.e. `f = 1 (mod m)`.
    pub fn is_one_mod(&self, m: u64) -> bool {
        let mb = BigInt::from(m);
        self.constant().is_one() && self.coeffs[1..].iter().all(|c| c.is_multiple_of(&mb))
    }
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntSeries{:?}",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

impl Add for &IntSeries {
    type Output = IntSeries;
    fn add(self, rhs: &IntSeries) -> IntSeries {
        let n = self.order().min(rhs.order());
        IntSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;
    fn sub(self, rhs: &IntSeries) -> IntSeries {
        let n = self.order().min(rhs.order());
        IntSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntSeries {
    type Output = IntSeries;
    fn mul(self, rhs: &IntSeries) -> IntSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntSeries { coeffs: out }
    }
}

/// A truncated series with coefficients in `Z/mZ`, stored as residues in `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModSeries {
    modulus: u64,
    coeffs: Vec<u64>,
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

impl ModSeries {
    /// Builds a series from arbitrary residues, normalizing them into `[0, m)`.
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadModulus(modulus));
        }
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(ModSeries {
            modulus,
            coeffs: coeffs.into_iter().map(|c| c % modulus).collect(),
        })
    }

    pub fn from_signed(modulus: u64, coeffs: &[i64]) -> Result<Self> {
        let m = modulus as i128;
        Self::new(
            modulus,
            coeffs
                .iter()
                .map(|&c| (c as i128).rem_euclid(m.max(1)) as u64)
                .collect(),
        )
    }

    pub fn one(modulus: u64, order: usize) -> Result<Self> {
        let mut c = vec![0; order];
        if order > 0 {
            c[0] = 1;
        }
        Self::new(modulus, c)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs[k]
    }

    /// True for the series `1 + O(x^N)`.
    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 % self.modulus && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn truncate(&self, order: usize) -> Self {
        ModSeries {
            modulus: self.modulus,
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    /// Reinterprets the residues modulo a divisor of the current modulus.
    pub fn reduce(&self, m: u64) -> Result<Self> {
        if m < 2 || !self.modulus.is_multiple_of(m) {
            return Err(Error::BadModulus(m));
        }
        Ok(ModSeries {
            modulus: m,
            coeffs: self.coeffs.iter().map(|c| c % m).collect(),
        })
    }

    /// Lifts the residues to nonnegative integers.
    pub fn lift(&self) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    fn check_same_modulus(&self, rhs: &Self) {
        assert_eq!(self.modulus, rhs.modulus, "mismatched moduli");
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = ModSeries::one(self.modulus, self.order()).expect("valid modulus");
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn substitute_xk(&self, k: usize, order: Option<usize>) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let natural = k * (self.order() - 1) + 1;
        let order = order.unwrap_or(natural).min(k * self.order());
        let mut coeffs = vec![0; order];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i * k >= order {
                break;
            }
            coeffs[i * k] = c;
        }
        ModSeries {
            modulus: self.modulus,
            coeffs,
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let m = self.modulus;
        ModSeries {
            modulus: m,
            coeffs: self.coeffs.iter().map(|&a| mul_mod(a, c % m, m)).collect(),
        }
    }
}

impl Add for &ModSeries {
    type Output = ModSeries;
    fn add(self, rhs: &ModSeries) -> ModSeries {
        self.check_same_modulus(rhs);
        let m = self.modulus;
        let n = self.order().min(rhs.order());
        ModSeries {
            modulus: m,
            coeffs: (0..n)
                .map(|i| ((self.coeffs[i] as u128 + rhs.coeffs[i] as u128) % m as u128) as u64)
                .collect(),
        }
    }
}

impl Sub for &ModSeries {
    type Output = ModSeries;
    fn sub(self, rhs: &ModSeries) -> ModSeries {
        self.check_same_modulus(rhs);
        let m = self.modulus;
        let n = self.order().min(rhs.order());
        ModSeries {
            modulus: m,
            coeffs: (0..n)
                .map(|i| (self.coeffs[i] + (m - rhs.coeffs[i])) % m)
                .collect(),
        }
    }
}

impl Mul for &ModSeries {
    type Output = ModSeries;
    fn mul(self, rhs: &ModSeries) -> ModSeries {
        self.check_same_modulus(rhs);
        let m = self.modulus;
        let n = self.order().min(rhs.order());
        let mut out = vec![0u128; n];
        for (i, &a) in self.coeffs[..n].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs[..n - i].iter().enumerate() {
                let t = &mut out[i + j];
                *t += a as u128 * b as u128;
                if *t >= 1 << 120 {
                    *t %= m as u128;
                }
            }
        }
        ModSeries {
            modulus: m,
            coeffs: out.into_iter().map(|c| (c % m as u128) as u64).collect(),
        }
    }
}
