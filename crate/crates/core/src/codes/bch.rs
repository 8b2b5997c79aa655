use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::roots::is_nth_power;

use super::field::BinaryExtension;
use super::{membership_order, weight_enumerator, LinearCode, WeightEnumerator};

fn cyclotomic_coset(e: u32, n: u32) -> BTreeSet<u32> {
    let mut c = BTreeSet::new();
    let mut x = e % n;
    while c.insert(x) {
        x = x * 2 % n;
    }
    c
}

/// Binary polynomial (bit `i` = coefficient of `x^i`) with roots `alpha^j`, `j` in `coset`.
fn minimal_polynomial(gf: &BinaryExtension, coset: &BTreeSet<u32>) -> Result<u128> {
    // coefficients in GF(2^m), lowest degree first
    let mut poly = vec![1u32];
    for &j in coset {
        let root = gf.alpha_pow(j);
        let mut next = vec![0u32; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] ^= c;
            next[i] ^= gf.mul(c, root);
        }
        poly = next;
    }
    poly.iter()
        .enumerate()
        .try_fold(0u128, |acc, (i, &c)| match c {
            0 => Ok(acc),
            1 => Ok(acc | 1 << i),
            _ => Err(Error::Code("minimal polynomial is not binary".into())),
        })
}

fn mul_gf2(a: u128, b: u128) -> u128 {
    let mut out = 0;
    for i in 0..128 {
        if b >> i & 1 == 1 {
            out ^= a << i;
        }
    }
    out
}

fn degree(p: u128) -> u32 {
    127 - p.leading_zeros()
}

/// Generator polynomial of the primitive narrow-sense BCH code of length
/// `2^m - 1` with zeros `alpha^1, ..., alpha^{2t-2}`, and the total size of
/// the cyclotomic cosets involved.
fn bch_generator(m: u32, t: u32) -> Result<(u128, usize)> {
    let gf = BinaryExtension::new(m)?;
    let n = gf.order();
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut g = 1u128;
    for e in 1..=(2 * t).saturating_sub(2) {
        if seen.contains(&(e % n)) {
            continue;
        }
        let coset = cyclotomic_coset(e, n);
        g = mul_gf2(g, minimal_polynomial(&gf, &coset)?);
        seen.extend(coset);
    }
    Ok((g, seen.len()))
}

fn check_bch(m: u32, t: u32) -> Result<()> {
    if !(2..=6).contains(&m) || t == 0 || 2 * t > (1 << m) - 1 {
        return Err(Error::OutOfRange(format!(
            "BCH(m = {m}, t = {t}) needs 2 <= m <= 6 and 1 <= 2t - 1 < 2^m - 1"
        )));
    }
    Ok(())
}

/// Primitive BCH code of length `2^m - 1` and designed distance `2t - 1`,
/// extended by an overall parity bit to length `2^m`.
///
/// Fields are built on x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1 and x^6+x+1.
pub fn bch_extended(m: u32, t: u32) -> Result<LinearCode> {
    check_bch(m, t)?;
    let n0 = (1usize << m) - 1;
    let (g, coset_total) = bch_generator(m, t)?;
    let deg = degree(g) as usize;
    if deg != coset_total {
        return Err(Error::Code(format!(
            "generator degree {deg} differs from coset count {coset_total}"
        )));
    }
    if deg >= n0 {
        return Err(Error::Code(format!(
            "designed distance {} leaves no codewords",
            2 * t - 1
        )));
    }
    let k = n0 - deg;
    let rows = (0..k)
        .map(|s| {
            let mut row: Vec<u8> = (0..n0)
                .map(|i| u8::from(i >= s && (g >> (i - s)) & 1 == 1))
                .collect();
            let parity = row.iter().fold(0, |a, &b| a ^ b);
            row.push(parity);
            row
        })
        .collect();
    LinearCode::new(2, n0 + 1, rows)
}

/// One case of the BCH root conjecture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BchRow {
    pub m: u32,
    pub t: u32,
    pub k: usize,
    /// Smallest power of 2 that is at least `2t`.
    pub d_prime: u64,
    /// `2^m / d'`, the root order tested.
    pub target: u64,
    pub member: bool,
    pub fail_index: Option<usize>,
}

/// Tests every extended BCH code with `2 <= m <= m_max` for a
/// `2^m / d'`-th root of its weight enumerator.
pub fn bch_conjecture_check(m_max: u32) -> Result<Vec<BchRow>> {
    if m_max > 6 {
        return Err(Error::OutOfRange(format!("m_max = {m_max} exceeds 6")));
    }
    let mut rows = Vec::new();
    for m in 2..=m_max {
        let mut cache: HashMap<u128, WeightEnumerator> = HashMap::new();
        for t in 1..(1u32 << (m - 1)) {
            let (g, _) = bch_generator(m, t)?;
            let w = match cache.get(&g) {
                Some(w) => w.clone(),
                None => {
                    let w = weight_enumerator(&bch_extended(m, t)?)?;
                    cache.insert(g, w.clone());
                    w
                }
            };
            let d_prime = u64::from(2 * t).next_power_of_two();
            let target = (1u64 << m) / d_prime;
            let verdict = is_nth_power(&w.padded(membership_order(w.n)), target)?;
            rows.push(BchRow {
                m,
                t,
                k: w.k,
                d_prime,
                target,
                member: verdict.is_member(),
                fail_index: verdict.fail_index(),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::rm_enumerator;

    #[test]
    fn dimensions() {
        assert_eq!(bch_extended(4, 2).unwrap().k(), 11);
        assert_eq!(bch_extended(4, 3).unwrap().k(), 7);
        assert_eq!(bch_extended(3, 1).unwrap().k(), 7);
        assert_eq!(bch_extended(5, 3).unwrap().k(), 21);
        assert_eq!(bch_extended(6, 7).unwrap().k(), 30);
        assert!(bch_extended(3, 4).is_err());
        assert!(bch_extended(7, 2).is_err());
    }

    #[test]
    fn coset_sizes() {
        assert_eq!(cyclotomic_coset(1, 15), BTreeSet::from([1, 2, 4, 8]));
        assert_eq!(cyclotomic_coset(5, 15), BTreeSet::from([5, 10]));
        assert_eq!(cyclotomic_coset(21, 63), BTreeSet::from([21, 42]));
    }

    #[test]
    fn extended_hamming_is_rm13() {
        let w = weight_enumerator(&bch_extended(3, 2).unwrap()).unwrap();
        assert_eq!(w, rm_enumerator(1, 3).unwrap().0);
    }

    #[test]
    fn even_weight_code_for_t1() {
        let w = weight_enumerator(&bch_extended(3, 1).unwrap()).unwrap();
        let c: Vec<u64> = w
            .series()
            .coeffs()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect();
        assert_eq!(c, vec![1, 0, 28, 0, 70, 0, 28, 0, 1]);
    }

    #[test]
    fn codewords_vanish_at_designed_zeros() {
        let m = 5;
        let t = 3;
        let gf = BinaryExtension::new(m).unwrap();
        let code = bch_extended(m, t).unwrap();
        for row in code.generator() {
            for e in 1..=2 * t - 2 {
                let v = row[..31]
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b == 1)
                    .fold(0, |acc, (i, _)| acc ^ gf.alpha_pow(e * i as u32));
                assert_eq!(v, 0);
            }
        }
    }

    #[test]
    fn conjecture_small_m() {
        let rows = bch_conjecture_check(4).unwrap();
        assert_eq!(rows.len(), 1 + 3 + 7);
        assert!(rows.iter().all(|r| r.member), "{rows:?}");
    }
}
