//! Greedy digit sequences whose k-th roots stay integral.
//!
//! `H_k = 1 + h_1 x + h_2 x^2 + ...` takes each `h_n` as the least value in
//! `1..=k` keeping `H_k^{1/k}` integral. Writing `h_n = k g_n + phi` with
//! `phi` the coefficient of `x^n` in `(g_0 + ... + g_{n-1} x^{n-1})^k`, and
//! `phi = q k + r` with `0 <= r < k`: if `r = 0` then `h_n = k` and
//! `g_n = 1 - q`, otherwise `h_n = r` and `g_n = -q`.
//!
//! The permutation sequence picks, at each step, the least unused positive
//! integer `a_n` with `(a_0 + a_1 x + ...)^{1/3}` integral. The cube-root
//! recursion `a_n = 3 g_n + phi` forces `a_n = phi (mod 3)`, and any value in
//! that class works, so each residue class is consumed in increasing order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::padic;
use crate::roots::{is_nth_power, power_phi, MembershipVerdict, PowerTracker};
use crate::series::{IntSeries, ModSeries};

/// A Hanna sequence together with its exact k-th root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HannaPair {
    pub k: u64,
    /// `1, h_1, ..., h_{N-1}`.
    pub digits: Vec<u64>,
    pub root: IntSeries,
}

impl HannaPair {
    pub fn series(&self) -> IntSeries {
        IntSeries::from_coeffs(self.digits.iter().map(|&d| BigInt::from(d)).collect())
            .expect("non-empty")
    }
}

/// First `order` terms of `H_k` and its k-th root, in exact arithmetic.
pub fn hanna_sequence(k: u64, order: usize) -> Result<HannaPair> {
    if k == 0 {
        return Err(Error::ZeroIndex);
    }
    let order = order.max(1);
    let kb = BigInt::from(k);
    let mut h = vec![BigInt::one()];
    let mut g = vec![BigInt::one()];
    for n in 1..order {
        let phi = power_phi(n, k, &g, &h);
        let (q, r) = phi.div_mod_floor(&kb);
        if r.is_zero() {
            h.push(kb.clone());
            g.push(BigInt::one() - q);
        } else {
            h.push(r);
            g.push(-q);
        }
    }
    let digits = h
        .iter()
        .map(|d| d.to_u64().expect("digit in 1..=k"))
        .collect();
    Ok(HannaPair {
        k,
        digits,
        root: IntSeries::from_coeffs(g)?,
    })
}

/// Digits of `H_k` and its root modulo `mu(k)/k`, in residue arithmetic
/// modulo `mu(k)`.
fn hanna_modular(k: u64, order: usize) -> Result<(Vec<u64>, ModSeries)> {
    if k < 2 {
        return Err(Error::BadModulus(1));
    }
    let mu = padic::mu_wide(k);
    if mu >= 1 << 32 {
        return Err(Error::ModulusTooLarge { n: k, mu });
    }
    let mu = mu as u64;
    let root_mod = mu / k;
    let order = order.max(1);
    let mut tracker = PowerTracker::new(k, mu, order);
    let mut digits = vec![1u64];
    let mut g = vec![1 % root_mod];
    for n in 1..order {
        let phi = tracker.phi(n);
        let (q, r) = (phi / k, phi % k);
        let (h, gn) = if r == 0 {
            (k, (1 + root_mod - q % root_mod) % root_mod)
        } else {
            (r, (root_mod - q % root_mod) % root_mod)
        };
        tracker.fix(n, gn);
        debug_assert_eq!(tracker.power()[n] % k, h % k);
        digits.push(h);
        g.push(gn);
    }
    Ok((digits, ModSeries::new(root_mod, g)?))
}

/// First `order` digits of `H_k` without big-integer arithmetic.
pub fn hanna_digits(k: u64, order: usize) -> Result<Vec<u64>> {
    if k == 1 {
        return Ok(vec![1; order.max(1)]);
    }
    hanna_modular(k, order).map(|(d, _)| d)
}

/// The k-th root of `H_k` reduced modulo `mu(k)/k` (`S_2`, `S_3` for k = 2, 3).
pub fn hanna_root_mod(k: u64, order: usize) -> Result<ModSeries> {
    hanna_modular(k, order).map(|(_, g)| g)
}

fn ints(v: impl IntoIterator<Item = u64>) -> IntSeries {
    IntSeries::from_coeffs(v.into_iter().map(BigInt::from).collect()).expect("non-empty")
}

fn geometric_times(c: u64, order: usize) -> IntSeries {
    ints(std::iter::repeat_n(c, order))
}

fn congruent(a: &IntSeries, b: &IntSeries, m: u64) -> bool {
    let mb = BigInt::from(m);
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .all(|(x, y)| (x - y).is_multiple_of(&mb))
}

/// Checks, for 0/1 root bits `g` and digits `f` of equal length,
/// `g(x^2) + g(x)^2 = 2/(1-x)` and `f = 3 g(x^2) + 2/(1-x^2) + 2x/(1-x^2)` mod 4.
pub fn check_h2_equations(g_bits: &[u64], f_digits: &[u64]) -> bool {
    let order = g_bits.len().min(f_digits.len());
    if order == 0 {
        return false;
    }
    let g = ints(g_bits[..order].iter().copied());
    let f = ints(f_digits[..order].iter().copied());
    let g2 = g.substitute_xk(2, Some(order));
    let lhs = &g2 + &(&g * &g);
    let first = congruent(&lhs, &geometric_times(2, order), 4);
    let even_twos = ints((0..order).map(|i| if i % 2 == 0 { 2 } else { 0 }));
    let odd_twos = ints((0..order).map(|i| if i % 2 == 1 { 2 } else { 0 }));
    let rhs = &(&g2.scale(&BigInt::from(3)) + &even_twos) + &odd_twos;
    first && congruent(&f, &rhs, 4)
}

/// Checks, for root residues `g` in `{0,1,2}` and digits `f`, with
/// `g = g_+ + 2 g_-`: `2 g_+(x^3) + g_-(x^3) + g^3 = 3/(1-x)` and
/// `f = 3/(1-x) - 2 g_+(x^3) - g_-(x^3)` mod 9.
pub fn check_h3_equations(g_digits: &[u64], f_digits: &[u64]) -> bool {
    let order = g_digits.len().min(f_digits.len());
    if order == 0 {
        return false;
    }
    let g = ints(g_digits[..order].iter().copied());
    let f = ints(f_digits[..order].iter().copied());
    let plus =
        ints(g_digits[..order].iter().map(|&d| u64::from(d == 1))).substitute_xk(3, Some(order));
    let minus =
        ints(g_digits[..order].iter().map(|&d| u64::from(d == 2))).substitute_xk(3, Some(order));
    let twist = &plus.scale(&BigInt::from(2)) + &minus;
    let three = geometric_times(3, order);
    let first = congruent(&(&twist + &g.pow_u64(3)), &three, 9);
    first && congruent(&f, &(&three - &twist), 9)
}

/// Both mod-4 functional equations for `H_2` to the given order.
pub fn verify_h2_equations(order: usize) -> Result<bool> {
    let (f, g) = hanna_modular(2, order)?;
    Ok(check_h2_equations(g.coeffs(), &f))
}

/// Both mod-9 functional equations for `H_3` to the given order.
pub fn verify_h3_equations(order: usize) -> Result<bool> {
    let (f, g) = hanna_modular(3, order)?;
    Ok(check_h3_equations(g.coeffs(), &f))
}

/// Smallest `p <= max_period` such that the sequence ends in a run with
/// period `p` covering at least `max(2p, len/2)` terms. `max_period` is
/// capped at `len / 2`.
pub fn aperiodicity_scan<T: PartialEq>(seq: &[T], max_period: usize) -> Option<usize> {
    let len = seq.len();
    let need_half = len.div_ceil(2);
    (1..=max_period.min(len / 2)).find(|&p| {
        let mut tail = p;
        while tail < len && seq[len - tail - 1] == seq[len - tail - 1 + p] {
            tail += 1;
        }
        tail >= (2 * p).max(need_half)
    })
}

/// The first `count` terms `a_0 = 1, a_1, ...` of the greedy permutation
/// whose cube root is integral.
pub fn permutation_sequence(count: usize) -> Vec<u64> {
    let count = count.max(1);
    let mut tracker = PowerTracker::new(3, 9, count);
    let mut next = [3u64, 4, 2];
    let mut a = vec![1u64];
    for n in 1..count {
        let phi = tracker.phi(n);
        let class = (phi % 3) as usize;
        let an = next[class];
        next[class] += 3;
        let gn = ((an % 9 + 9 - phi) % 9) / 3;
        tracker.fix(n, gn);
        a.push(an);
    }
    a
}

/// The series `sum (2n+1) 8^n x^{n(n+1)/2}` with its three checks.
#[derive(Debug, Clone)]
pub struct PostscriptReport {
    pub series: IntSeries,
    /// `f = 1 (mod 8)`.
    pub one_mod_8: bool,
    /// `f = prod (1 - x^m)^3 (mod 9)`.
    pub product_mod_9: bool,
    /// The 12th-root test.
    pub twelfth_root: MembershipVerdict,
}

impl PostscriptReport {
    pub fn all_hold(&self) -> bool {
        self.one_mod_8 && self.product_mod_9 && self.twelfth_root.is_member()
    }
}

pub fn postscript_series(order: usize) -> Result<PostscriptReport> {
    let order = order.max(1);
    let mut c = vec![BigInt::zero(); order];
    let mut n = 0usize;
    while n * (n + 1) / 2 < order {
        c[n * (n + 1) / 2] = BigInt::from(2 * n + 1) * BigInt::from(8).pow(n as u32);
        n += 1;
    }
    let series = IntSeries::from_coeffs(c)?;
    let mut euler = vec![BigInt::zero(); order];
    euler[0] = BigInt::one();
    for m in 1..order {
        for k in (m..order).rev() {
            let t = euler[k - m].clone();
            euler[k] -= t;
        }
    }
    let cube = IntSeries::from_coeffs(euler)?.pow_u64(3);
    Ok(PostscriptReport {
        one_mod_8: series.is_one_mod(8),
        product_mod_9: congruent(&series, &cube, 9),
        twelfth_root: is_nth_power(&series, 12)?,
        series,
    })
}
