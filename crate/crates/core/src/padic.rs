//! Small-integer number theory: factorization, p-adic valuation and the
//! root modulus `mu(n) = n * prod_{p | n} p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    /// Product of the prime powers.
    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }
}

/// Trial-division factorization. `factorize(1)` is the empty product.
pub fn factorize(mut n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Factorization(out)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).0 == [(n, 1)]
}

/// `mu(n) = n * prod_{p | n} p`, the modulus at which n-th power membership
/// is decided coefficientwise.
pub fn mu(n: u64) -> u64 {
    assert!(n >= 1, "mu needs n >= 1");
    n * factorize(n).radical()
}

/// `mu(n)` without overflow, for range checks.
pub fn mu_wide(n: u64) -> u128 {
    n as u128 * factorize(n).radical() as u128
}

/// Exponent of `p` in a nonzero integer; 0 for zero.
pub fn valuation_int(x: &BigInt, p: u64) -> i64 {
    if x.is_zero() {
        return 0;
    }
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut a = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return a;
        }
        x = q;
        a += 1;
    }
}

/// p-adic valuation of a rational, with `valuation(0, p) = 0`.
pub fn valuation(r: &BigRational, p: u64) -> i64 {
    if r.is_zero() {
        return 0;
    }
    valuation_int(r.numer(), p) - valuation_int(r.denom(), p)
}

pub fn valuation_u64(mut x: u64, p: u64) -> u32 {
    if x == 0 {
        return 0;
    }
    let mut a = 0;
    while x.is_multiple_of(p) {
        x /= p;
        a += 1;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn binomial(n: u64, k: u64) -> BigInt {
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).pairs().is_empty());
        assert_eq!(factorize(12).pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(1 << 20).pairs(), &[(2, 20)]);
        assert_eq!(factorize(4_294_967_291).pairs(), &[(4_294_967_291, 1)]);
    }

    #[test]
    fn factorization_reconstructs() {
        for n in 1..5000u64 {
            let f = factorize(n);
            assert_eq!(f.value(), n);
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.pairs().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        }
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(2), 4);
        assert_eq!(mu(12), 72);
        assert_eq!(mu(1), 1);
        assert_eq!(mu(56), 784);
    }

    #[test]
    fn mu_quotient_is_squarefree() {
        for n in 1..3000u64 {
            let m = mu(n);
            assert_eq!(m % n, 0);
            assert!(factorize(m / n).pairs().iter().all(|&(_, e)| e == 1));
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&q(0, 1), 5), 0);
        assert_eq!(valuation(&q(12, 1), 2), 2);
        assert_eq!(valuation(&q(3, 4), 2), -2);
        assert_eq!(valuation(&q(-50, 3), 5), 2);
    }

    #[test]
    fn valuation_is_additive() {
        for a in [-40i64, -9, 1, 2, 7, 18, 96, 250] {
            for b in [3i64, -8, 25, 11, 1024] {
                for p in [2u64, 3, 5, 7] {
                    let (ra, rb) = (q(a, 7), q(b, 9));
                    assert_eq!(
                        valuation(&(&ra * &rb), p),
                        valuation(&ra, p) + valuation(&rb, p)
                    );
                }
            }
        }
    }

    #[test]
    fn factorial_valuation_bound() {
        for p in [2u64, 3, 5, 7, 11] {
            let mut fact = BigInt::one();
            for r in 1..80u64 {
                fact *= r;
                let v = valuation_int(&fact, p) as f64;
                assert!(v < r as f64 / (p - 1) as f64);
            }
        }
    }

    #[test]
    fn binomial_prime_power_valuation() {
        for (p, i) in [(2u64, 1u32), (2, 4), (2, 6), (3, 3), (5, 2), (7, 2)] {
            let pi = p.pow(i);
            for j in 1..=pi {
                let v = valuation_int(&binomial(pi, j), p);
                assert_eq!(v, i as i64 - valuation_u64(j, p) as i64);
            }
        }
    }
}
