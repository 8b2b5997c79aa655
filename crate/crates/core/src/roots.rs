//! n-th roots of series with constant term 1.
//!
//! Two independent routes decide whether `f = g^n` has an integral root to a
//! given order:
//!
//! * the **exact** route solves `n g_k = f_k - Phi_k(g_1..g_{k-1})` over the
//!   integers, where `Phi_k` is the coefficient of `x^k` in `(g_0 + ... +
//!   g_{k-1} x^{k-1})^n`. `Phi_k` comes from the power-series derivative
//!   identity `h' g = n g' h`, so each step costs `O(k)` regardless of `n`;
//! * the **modular** route runs the same recursion in `Z/mu(n)Z`, keeping the
//!   root only modulo `mu(n)/n` and maintaining the running powers of the root
//!   along a binary addition chain for `n`.
//!
//! Reducing modulo `mu(n)` loses no information about integrality, and roots
//! are determined modulo `mu(n)/n`, so both routes report the same
//! obstruction index. A finite prefix never proves membership; verdicts
//! always carry the order they were tested to.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::padic::{self, is_prime};
use crate::series::{mul_mod, IntSeries, ModSeries};

/// Certificate attached to a successful membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootCertificate {
    /// The exact integer root prefix.
    Integer(IntSeries),
    /// The root reduced modulo `mu(n)/n`.
    Residues(ModSeries),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Member(RootCertificate),
    /// Smallest `k` at which `n` does not divide `f_k - Phi_k`.
    Obstructed {
        index: usize,
    },
}

/// Result of testing `f` for being an n-th power up to `order_tested`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub n: u64,
    pub order_tested: usize,
    pub outcome: Outcome,
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self.outcome, Outcome::Member(_))
    }

    pub fn fail_index(&self) -> Option<usize> {
        match self.outcome {
            Outcome::Obstructed { index } => Some(index),
            Outcome::Member(_) => None,
        }
    }

    pub fn root_prefix(&self) -> Option<&IntSeries> {
        match &self.outcome {
            Outcome::Member(RootCertificate::Integer(g)) => Some(g),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&RootCertificate> {
        match &self.outcome {
            Outcome::Member(c) => Some(c),
            Outcome::Obstructed { .. } => None,
        }
    }
}

/// Which arithmetic the membership test runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Exact,
    Modular,
}

pub(crate) fn require_constant_one(f: &IntSeries) -> Result<()> {
    if f.constant().is_one() {
        Ok(())
    } else {
        Err(Error::ConstantTerm {
            expected: "1",
            found: f.constant().to_string(),
        })
    }
}

/// Coefficient of `x^k` in `(g_0 + ... + g_{k-1} x^{k-1})^n`, given the root
/// prefix `g` (with `g_0 = 1`) and the power's coefficients `h_0..h_{k-1}`.
///
/// From `h' g = n g' h`: `k h_k = sum_{j=1}^{k} ((n+1) j - k) g_j h_{k-j}`; the
/// `j = k` term is `n k g_k`, and the rest divides exactly by `k`.
pub(crate) fn power_phi(k: usize, n: u64, g: &[BigInt], h: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    let np1 = n as i128 + 1;
    for j in 1..k {
        if g[j].is_zero() || h[k - j].is_zero() {
            continue;
        }
        let w = np1 * j as i128 - k as i128;
        if w == 0 {
            continue;
        }
        acc += (&g[j] * &h[k - j]) * BigInt::from(w);
    }
    let (q, r) = acc.div_rem(&BigInt::from(k));
    debug_assert!(r.is_zero(), "power recurrence must divide exactly");
    q
}

/// Exact root extraction: the integer prefix of `f^{1/n}`, or the first index
/// where it stops being integral.
pub fn nth_root(f: &IntSeries, n: u64) -> Result<MembershipVerdict> {
    require_constant_one(f)?;
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let order = f.order();
    let nb = BigInt::from(n);
    let mut g: Vec<BigInt> = Vec::with_capacity(order);
    g.push(BigInt::one());
    for k in 1..order {
        let phi = power_phi(k, n, &g, f.coeffs());
        let (q, r) = (f.coeff(k) - phi).div_rem(&nb);
        if !r.is_zero() {
            return Ok(MembershipVerdict {
                n,
                order_tested: order,
                outcome: Outcome::Obstructed { index: k },
            });
        }
        g.push(q);
    }
    let root = IntSeries::from_coeffs(g)?;
    Ok(MembershipVerdict {
        n,
        order_tested: order,
        outcome: Outcome::Member(RootCertificate::Integer(root)),
    })
}

/// Running powers `G^e` of a root prefix modulo `m`, for every `e` on a binary
/// addition chain ending at `n`.
///
/// At step `k` the coefficients below `k` are final. [`PowerTracker::phi`]
/// fills in coefficient `k` of every power with `g_k = 0`; once `g_k` is
/// chosen, [`PowerTracker::fix`] adds its linear contribution `e g_k`.
pub(crate) struct PowerTracker {
    modulus: u64,
    rows: Vec<ChainRow>,
}

struct ChainRow {
    exp: u64,
    left: usize,
    right: usize,
    coeffs: Vec<u64>,
}

impl PowerTracker {
    pub(crate) fn new(n: u64, modulus: u64, order: usize) -> Self {
        assert!(n >= 1 && modulus >= 2);
        let fresh = || {
            let mut c = vec![0u64; order];
            c[0] = 1;
            c
        };
        let mut rows = vec![ChainRow {
            exp: 1,
            left: 0,
            right: 0,
            coeffs: fresh(),
        }];
        let bits = 64 - n.leading_zeros();
        for b in (0..bits - 1).rev() {
            let last = rows.len() - 1;
            let e = rows[last].exp * 2;
            rows.push(ChainRow {
                exp: e,
                left: last,
                right: last,
                coeffs: fresh(),
            });
            if (n >> b) & 1 == 1 {
                let last = rows.len() - 1;
                rows.push(ChainRow {
                    exp: e + 1,
                    left: last,
                    right: 0,
                    coeffs: fresh(),
                });
            }
        }
        debug_assert_eq!(rows.last().map(|r| r.exp), Some(n));
        PowerTracker { modulus, rows }
    }

    /// Tentative coefficient `k` of `G^n` with `g_k = 0`.
    pub(crate) fn phi(&mut self, k: usize) -> u64 {
        let m = self.modulus as u128;
        self.rows[0].coeffs[k] = 0;
        for r in 1..self.rows.len() {
            let (left, right) = (self.rows[r].left, self.rows[r].right);
            let a = &self.rows[left].coeffs;
            let b = &self.rows[right].coeffs;
            let mut acc: u128 = 0;
            for i in 0..=k {
                let (x, y) = (a[i], b[k - i]);
                if x != 0 && y != 0 {
                    acc += x as u128 * y as u128;
                }
            }
            self.rows[r].coeffs[k] = (acc % m) as u64;
        }
        self.rows.last().expect("chain is nonempty").coeffs[k]
    }

    pub(crate) fn fix(&mut self, k: usize, gk: u64) {
        let m = self.modulus;
        for row in &mut self.rows {
            let add = mul_mod(row.exp % m, gk % m, m);
            row.coeffs[k] = (row.coeffs[k] + add) % m;
        }
    }

    /// The current coefficients of `G^n`.
    pub(crate) fn power(&self) -> &[u64] {
        &self.rows.last().expect("chain is nonempty").coeffs
    }
}

/// Largest modulus the modular route accepts; keeps every product of two
/// residues below `2^64` so sums of them fit comfortably in `u128`.
const MAX_MODULUS: u128 = 1 << 32;

fn modular_root(f: &IntSeries, n: u64) -> Result<MembershipVerdict> {
    let mu = padic::mu_wide(n);
    if mu >= MAX_MODULUS {
        return Err(Error::ModulusTooLarge { n, mu });
    }
    let mu = mu as u64;
    let root_mod = mu / n;
    let order = f.order();
    let fr = f.reduce_mod(mu)?;
    let mut tracker = PowerTracker::new(n, mu, order);
    let mut g = vec![0u64; order];
    g[0] = 1 % root_mod;
    for k in 1..order {
        let phi = tracker.phi(k);
        let v = (fr.coeff(k) + mu - phi) % mu;
        if !v.is_multiple_of(n) {
            return Ok(MembershipVerdict {
                n,
                order_tested: order,
                outcome: Outcome::Obstructed { index: k },
            });
        }
        g[k] = v / n;
        tracker.fix(k, g[k]);
    }
    let root = ModSeries::new(root_mod, g)?;
    Ok(MembershipVerdict {
        n,
        order_tested: order,
        outcome: Outcome::Member(RootCertificate::Residues(root)),
    })
}

/// Tests `f` for being an n-th power in `Z/mu(n)Z` arithmetic. The certificate
/// is the root modulo `mu(n)/n` (or `f` itself when `n = 1`).
pub fn is_nth_power(f: &IntSeries, n: u64) -> Result<MembershipVerdict> {
    is_nth_power_via(f, n, Route::Modular)
}

pub fn is_nth_power_via(f: &IntSeries, n: u64, route: Route) -> Result<MembershipVerdict> {
    require_constant_one(f)?;
    match (n, route) {
        (0, _) => Err(Error::ZeroIndex),
        (1, _) | (_, Route::Exact) => nth_root(f, n),
        (_, Route::Modular) => match modular_root(f, n) {
            Err(Error::ModulusTooLarge { .. }) => nth_root(f, n),
            other => other,
        },
    }
}

/// The unique root modulo `mu(n)/n` of an n-th power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalRoot {
    pub n: u64,
    pub modulus: u64,
    pub root: ModSeries,
}

pub fn canonical_root_mod(f: &IntSeries, n: u64) -> Result<CanonicalRoot> {
    require_constant_one(f)?;
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n == 1 {
        return Err(Error::BadModulus(1));
    }
    let verdict = modular_root(f, n)?;
    match verdict.outcome {
        Outcome::Member(RootCertificate::Residues(root)) => Ok(CanonicalRoot {
            n,
            modulus: root.modulus(),
            root,
        }),
        Outcome::Obstructed { index } => Err(Error::NotAPower { n, index }),
        Outcome::Member(RootCertificate::Integer(_)) => {
            unreachable!("modular route yields residues")
        }
    }
}

/// For `f` an r-th and an s-th power, the root `g = (f^{1/r})^b (f^{1/s})^a`
/// with `a r + b s = gcd(r, s)`, which satisfies `g^{lcm(r,s)} = f`.
pub fn lcm_root_witness(f: &IntSeries, r: u64, s: u64) -> Result<IntSeries> {
    let root_of = |n: u64| -> Result<IntSeries> {
        let v = nth_root(f, n)?;
        match v.outcome {
            Outcome::Member(RootCertificate::Integer(g)) => Ok(g),
            Outcome::Obstructed { index } => Err(Error::NotAPower { n, index }),
            Outcome::Member(RootCertificate::Residues(_)) => {
                unreachable!("exact route yields integers")
            }
        }
    };
    let (fr, fs) = (root_of(r)?, root_of(s)?);
    let eg = (r as i64).extended_gcd(&(s as i64));
    let (a, b) = (eg.x, eg.y);
    Ok(&fr.pow(b)? * &fs.pow(a)?)
}

/// Outcome of the mod-4 square test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTest {
    pub is_square: bool,
    /// Root bits `g_0 = 1, g_1, ...` computed so far; on success `f = g^2 (mod 4)`.
    pub bits: Vec<u8>,
    pub fail_index: Option<usize>,
}

/// Decides squareness from `f mod 4` alone by solving for the binary root.
///
/// At index `2t` the residue `f_{2t} - g_t` must be even and
/// `(f_{2t} - g_t)/2 = g_{2t} + sum_{r=1}^{t-1} g_r g_{2t-r} (mod 2)`; at index
/// `2t+1`, `f_{2t+1}` must be even and
/// `f_{2t+1}/2 = g_{2t+1} + sum_{r=1}^{t} g_r g_{2t+1-r} (mod 2)`.
pub fn square_test_mod4(f: &IntSeries) -> Result<SquareTest> {
    require_constant_one(f)?;
    let fb = f.reduce_mod(4)?;
    let order = f.order();
    let mut g: Vec<u8> = Vec::with_capacity(order);
    g.push(1);
    for k in 1..order {
        let t = k / 2;
        let fk = fb.coeff(k) as u8;
        let (residue, cross_upto) = if k % 2 == 0 {
            (fk + 4 - g[t], t - 1)
        } else {
            (fk, t)
        };
        if residue % 2 != 0 {
            return Ok(SquareTest {
                is_square: false,
                bits: g,
                fail_index: Some(k),
            });
        }
        let cross = (1..=cross_upto).fold(0u8, |acc, r| acc ^ (g[r] & g[k - r]));
        g.push(((residue / 2) & 1) ^ cross);
    }
    Ok(SquareTest {
        is_square: true,
        bits: g,
        fail_index: None,
    })
}

/// Which necessary condition for a p-th power failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PthObstruction {
    /// `f_r` is not divisible by `p` although `p` does not divide `r`.
    Residue { index: usize },
    /// `f` differs from `(1 + f_p x + f_{2p} x^2 + ...)^p` modulo `p^2`.
    Lift { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PthPowerTest {
    pub holds: bool,
    /// Candidate root `1 + f_p x + f_{2p} x^2 + ... (mod p)`.
    pub candidate: ModSeries,
    pub obstruction: Option<PthObstruction>,
}

/// Necessary conditions for `f` to be a p-th power: `p | f_r` whenever
/// `p` does not divide `r`, and `f = c^p (mod p^2)` for the candidate root `c`.
///
/// The candidate is known to `(N-1)/p + 1` terms, so the mod `p^2` comparison
/// covers that many coefficients.
pub fn pth_power_necessary(f: &IntSeries, p: u64) -> Result<PthPowerTest> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    require_constant_one(f)?;
    let order = f.order();
    let fp = f.reduce_mod(p)?;
    let cand_order = (order - 1) / p as usize + 1;
    let cand: Vec<u64> = (0..cand_order).map(|j| fp.coeff(j * p as usize)).collect();
    let candidate = ModSeries::new(p, cand.clone())?;

    if let Some(index) = (1..order).find(|&r| r % p as usize != 0 && fp.coeff(r) != 0) {
        return Ok(PthPowerTest {
            holds: false,
            candidate,
            obstruction: Some(PthObstruction::Residue { index }),
        });
    }
    let p2 = p * p;
    let lifted = ModSeries::new(p2, cand)?.pow(p);
    let target = f.reduce_mod(p2)?.truncate(cand_order);
    if let Some(index) = (0..cand_order).find(|&i| lifted.coeff(i) != target.coeff(i)) {
        return Ok(PthPowerTest {
            holds: false,
            candidate,
            obstruction: Some(PthObstruction::Lift { index }),
        });
    }
    Ok(PthPowerTest {
        holds: true,
        candidate,
        obstruction: None,
    })
}

/// Sufficient condition for `f(Ax)` to be an n-th power: some `B` with
/// `mu(n) | AB`, `mu(n) | A^2` and `B | f_1`. Returns `true` when membership is
/// guaranteed and `false` when the condition is inconclusive.
pub fn scaled_membership(f: &IntSeries, a: u64, n: u64) -> Result<bool> {
    require_constant_one(f)?;
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if a == 0 {
        return Err(Error::OutOfRange("scale factor must be positive".into()));
    }
    let mu = padic::mu(n) as u128;
    let a = a as u128;
    if !(a * a).is_multiple_of(mu) {
        return Ok(false);
    }
    // The admissible B are exactly the multiples of mu / gcd(mu, A).
    let b_min = BigInt::from(mu / mu.gcd(&a));
    let f1 = if f.order() > 1 {
        f.coeff(1).clone()
    } else {
        BigInt::zero()
    };
    Ok(f1.is_multiple_of(&b_min))
}

/// All `n <= bound` for which `f` shows no obstruction to being an n-th power.
pub fn max_power_order(f: &IntSeries, bound: u64) -> Result<BTreeSet<u64>> {
    require_constant_one(f)?;
    let verdicts: Vec<Result<(u64, bool)>> = (1..=bound)
        .into_par_iter()
        .map(|n| is_nth_power(f, n).map(|v| (n, v.is_member())))
        .collect();
    let mut out = BTreeSet::new();
    for v in verdicts {
        let (n, member) = v?;
        if member {
            out.insert(n);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> IntSeries {
        IntSeries::from_ints(c.iter().copied()).unwrap()
    }

    #[test]
    fn power_tracker_matches_direct_power() {
        let g = [1u64, 3, 0, 5, 2, 7, 1, 4];
        for n in 1..20u64 {
            let m = 97;
            let mut t = PowerTracker::new(n, m, g.len());
            for (k, &gk) in g.iter().enumerate().skip(1) {
                t.phi(k);
                t.fix(k, gk);
            }
            let direct = ModSeries::new(m, g.to_vec()).unwrap().pow(n);
            assert_eq!(t.power(), direct.coeffs(), "n = {n}");
        }
    }

    #[test]
    fn nth_root_identity_and_square() {
        let f = s(&[1, 4, -7, 22, 0, 3]);
        assert_eq!(nth_root(&f, 1).unwrap().root_prefix(), Some(&f));
        let g = s(&[1, 2, -3, 5, 1, 0]);
        let sq = g.pow_u64(2);
        assert_eq!(nth_root(&sq, 2).unwrap().root_prefix(), Some(&g));
    }

    #[test]
    fn nth_root_reports_first_obstruction() {
        let v = nth_root(&s(&[1, 1, 0, 0]), 2).unwrap();
        assert_eq!(v.fail_index(), Some(1));
        // (1 + 2x)^{1/2} = 1 + x - x^2/2 + ...
        let v = nth_root(&s(&[1, 2, 0, 0]), 2).unwrap();
        assert_eq!(v.fail_index(), Some(2));
        assert!(matches!(
            nth_root(&s(&[2, 1]), 2),
            Err(Error::ConstantTerm { .. })
        ));
        assert_eq!(nth_root(&s(&[1, 1]), 0), Err(Error::ZeroIndex));
    }

    #[test]
    fn modular_route_agrees_on_small_cases() {
        for n in 2..10u64 {
            let f = s(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
            let a = is_nth_power_via(&f, n, Route::Exact).unwrap();
            let b = is_nth_power_via(&f, n, Route::Modular).unwrap();
            assert_eq!(a.fail_index(), b.fail_index(), "n = {n}");
        }
    }

    #[test]
    fn congruent_to_one_is_member() {
        for n in [2u64, 3, 4, 6, 12, 30] {
            let mu = padic::mu(n) as i64;
            let f = s(&[1, mu, -3 * mu, 7 * mu, 0, mu * 11, -mu]);
            assert!(is_nth_power(&f, n).unwrap().is_member());
            let root = canonical_root_mod(&f, n).unwrap();
            assert!(root.root.is_one());
        }
    }

    #[test]
    fn square_test_examples() {
        let hamming = s(&[1, 0, 0, 0, 14, 0, 0, 0, 1]).pad_to(40);
        assert!(square_test_mod4(&hamming).unwrap().is_square);
        let t = square_test_mod4(&s(&[1, 1, 0])).unwrap();
        assert!(!t.is_square);
        assert_eq!(t.fail_index, Some(1));
    }

    #[test]
    fn pth_power_examples() {
        let t = pth_power_necessary(&s(&[1, 1, 0, 0]), 2).unwrap();
        assert!(!t.holds);
        assert_eq!(t.obstruction, Some(PthObstruction::Residue { index: 1 }));
        assert_eq!(pth_power_necessary(&s(&[1, 0]), 4), Err(Error::NotPrime(4)));
        let g = s(&[1, 2, 1, 0, 1, 2, 2, 1, 0, 1, 0, 2, 1, 1, 2]);
        let t = pth_power_necessary(&g.pow_u64(3), 3).unwrap();
        assert!(t.holds);
        assert_eq!(
            t.candidate.coeffs(),
            &g.reduce_mod(3).unwrap().coeffs()[..5]
        );
    }

    #[test]
    fn scaled_membership_examples() {
        let odd = s(&[1, 7, 3, -2]);
        assert!(scaled_membership(&odd, 4, 2).unwrap());
        assert!(scaled_membership(&s(&[1, 6, 1]), 2, 2).unwrap());
        assert!(!scaled_membership(&odd, 2, 2).unwrap());
        assert!(!scaled_membership(&odd, 1, 2).unwrap());
        // mu(6) = 36: A = 6 needs B = 6 | f_1
        assert!(scaled_membership(&s(&[1, 12, 5]), 6, 6).unwrap());
        assert!(!scaled_membership(&s(&[1, 3, 5]), 6, 6).unwrap());
    }

    #[test]
    fn scaled_membership_is_sound() {
        let f = s(&[1, 5, -3, 8, 1, 0, -4, 2, 9, -1, 3, 3, 0, 1, 2, 7]);
        for n in 1..13u64 {
            for a in 1..40u64 {
                if scaled_membership(&f, a, n).unwrap() {
                    let scaled = f.scale_x(&BigInt::from(a));
                    assert!(nth_root(&scaled, n).unwrap().is_member(), "n={n} a={a}");
                }
            }
        }
    }

    #[test]
    fn max_power_order_examples() {
        let f = s(&[1, 1]).pad_to(40).pow_u64(12);
        let set = max_power_order(&f, 12).unwrap();
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 4, 6, 12]);
        let one = IntSeries::one(30);
        assert_eq!(max_power_order(&one, 9).unwrap().len(), 9);
    }

    #[test]
    fn lcm_witness_small() {
        let g0 = s(&[1, -2, 3, 1, 0, 5, -1, 2, 2, 1]);
        let f = g0.pow_u64(6);
        assert_eq!(lcm_root_witness(&f, 2, 3).unwrap(), g0);
        assert_eq!(lcm_root_witness(&f, 6, 6).unwrap(), g0);
        assert_eq!(lcm_root_witness(&f, 1, 6).unwrap(), g0);
        assert!(matches!(
            lcm_root_witness(&s(&[1, 1, 0]), 2, 3),
            Err(Error::NotAPower { .. })
        ));
    }
}
