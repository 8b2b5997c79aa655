//! Weight-4 Eisenstein series, the discriminant, and extremal theta series,
//! all as power series in `x` whose exponents are lattice norms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::IntSeries;

use super::ThetaSeries;

fn sigma3(m: u64) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            s += BigInt::from(d).pow(3);
            let e = m / d;
            if e != d {
                s += BigInt::from(e).pow(3);
            }
        }
        d += 1;
    }
    s
}

/// Theta series of E8: `1 + 240 sum sigma_3(m) x^{2m}`.
pub fn psi_series(order: usize) -> ThetaSeries {
    let mut c = vec![BigInt::zero(); order.max(1)];
    c[0] = BigInt::one();
    for m in 1..=((order.max(1) - 1) / 2) {
        c[2 * m] = sigma3(m as u64) * 240;
    }
    ThetaSeries::from_series_unchecked(IntSeries::from_coeffs(c).expect("non-empty"))
}

/// `prod_{m >= 1} (1 - x^{2m})` to the given order.
fn euler_product_even(order: usize) -> IntSeries {
    let mut c = vec![BigInt::zero(); order];
    c[0] = BigInt::one();
    for m in (2..order).step_by(2) {
        for k in (m..order).rev() {
            let t = c[k - m].clone();
            c[k] -= t;
        }
    }
    IntSeries::from_coeffs(c).expect("non-empty")
}

/// `x^2 prod_{m >= 1} (1 - x^{2m})^24`.
pub fn delta_series(order: usize) -> IntSeries {
    let order = order.max(1);
    let mut c = vec![BigInt::zero(); order];
    if order > 2 {
        let p = euler_product_even(order - 2).pow_u64(24);
        for (k, v) in p.coeffs().iter().enumerate() {
            c[k + 2] = v.clone();
        }
    }
    IntSeries::from_coeffs(c).expect("non-empty")
}

/// `x` times the modular invariant: `psi^3 / prod (1 - x^{2m})^24`.
/// Starts `1 + 744 x^2 + 196884 x^4 + ...`.
pub fn j_times_x(order: usize) -> IntSeries {
    let order = order.max(1);
    let psi = psi_series(order).into_series();
    let eta24 = euler_product_even(order).pow_u64(24);
    &psi.pow_u64(3) * &eta24.inverse().expect("constant term is one")
}

/// An extremal theta series together with the coefficients `c_i` of its
/// expansion `sum_i c_i psi^{t - 3i} Delta^i`.
#[derive(Debug, Clone)]
pub struct ExtremalForm {
    pub dim: u64,
    pub coefficients: Vec<BigInt>,
    pub theta: ThetaSeries,
}

/// The unique combination of `psi^{t-3i} Delta^i` (`d = 8t`) whose
/// coefficients at `x^2, ..., x^{2a}` vanish, `a = floor(t / 3)`.
pub fn extremal_form(d: u64, order: usize) -> Result<ExtremalForm> {
    if d == 0 || !d.is_multiple_of(8) {
        return Err(Error::OutOfRange(format!(
            "dimension {d} is not a positive multiple of 8"
        )));
    }
    let t = d / 8;
    let a = (t / 3) as usize;
    let work = order.max(2 * a + 1);
    let psi = psi_series(work).into_series();
    let delta = delta_series(work);
    let terms: Vec<IntSeries> = (0..=a)
        .map(|i| &psi.pow_u64(t - 3 * i as u64) * &delta.pow_u64(i as u64))
        .collect();
    let mut coefficients = vec![BigInt::one()];
    let mut acc = terms[0].clone();
    for j in 1..=a {
        debug_assert!(terms[j].coeff(2 * j).is_one());
        let cj = -acc.coeff(2 * j).clone();
        acc = &acc + &terms[j].scale(&cj);
        coefficients.push(cj);
    }
    let theta = ThetaSeries::from_series_unchecked(acc.truncate(order.max(1)));
    Ok(ExtremalForm {
        dim: d,
        coefficients,
        theta,
    })
}

pub fn extremal_theta(d: u64, order: usize) -> Result<ThetaSeries> {
    extremal_form(d, order).map(|f| f.theta)
}

/// Part of `d` built from the primes 2, 3 and 5.
pub fn smooth_part(d: u64) -> u64 {
    let mut n = 1;
    for p in [2, 3, 5] {
        let mut e = d;
        while e > 0 && e.is_multiple_of(p) {
            n *= p;
            e /= p;
        }
    }
    n
}

/// Modulus `30 n` to which an extremal theta series of dimension `d`
/// is congruent to 1, where `n` is the {2,3,5}-part of `d`.
pub fn extremal_modulus(d: u64) -> u64 {
    30 * smooth_part(d)
}

/// Theta series of Barnes-Wall `BW_16` scaled to minimal norm 8, from
/// `(E_4(q)^2 - 2 E_4(q) E_4(q^2) + 16 E_4(q^2)^2) / 15` with `q = x^4`.
pub fn bw16_theta(order: usize) -> ThetaSeries {
    let order = order.max(1);
    let terms = (order - 1) / 4 + 1;
    let mut e = vec![BigInt::zero(); terms];
    e[0] = BigInt::one();
    for m in 1..terms {
        e[m] = sigma3(m as u64) * 240;
    }
    let e = IntSeries::from_coeffs(e).expect("non-empty");
    let e2 = e.substitute_xk(2, Some(terms));
    let sum =
        &(&(&e * &e) - &(&e * &e2).scale(&BigInt::from(2))) + &(&e2 * &e2).scale(&BigInt::from(16));
    let fifteen = BigInt::from(15);
    let q = sum
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!((c % &fifteen).is_zero());
            c / &fifteen
        })
        .collect();
    let q = IntSeries::from_coeffs(q).expect("non-empty");
    ThetaSeries::from_series_unchecked(q.substitute_xk(4, Some(order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::is_nth_power;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn psi_and_delta_leading_terms() {
        assert_eq!(
            ints(psi_series(7).series()),
            vec![1, 0, 240, 0, 2160, 0, 6720]
        );
        assert_eq!(
            ints(&delta_series(9)),
            vec![0, 0, 1, 0, -24, 0, 252, 0, -1472]
        );
    }

    #[test]
    fn j_leading_terms() {
        assert_eq!(ints(&j_times_x(5)), vec![1, 0, 744, 0, 196884]);
    }

    #[test]
    fn leech_extremal_theta() {
        let f = extremal_form(24, 7).unwrap();
        assert_eq!(f.coefficients, vec![BigInt::one(), BigInt::from(-720)]);
        assert_eq!(
            ints(f.theta.series()),
            vec![1, 0, 0, 0, 196560, 0, 16773120]
        );
    }

    #[test]
    fn psi_is_an_eighth_power() {
        assert!(is_nth_power(psi_series(200).series(), 8)
            .unwrap()
            .is_member());
    }

    #[test]
    fn extremal_congruences() {
        for d in [8, 16, 24, 32, 40, 48, 56, 72, 80] {
            let th = extremal_theta(d, 60).unwrap();
            assert!(th.series().is_one_mod(extremal_modulus(d)), "d = {d}");
        }
    }

    #[test]
    fn bw16_closed_form_matches_enumeration() {
        let direct = super::super::bw_theta(4, 25).unwrap();
        assert_eq!(bw16_theta(25), direct);
        assert_eq!(ints(bw16_theta(13).series())[8..], [4320, 0, 0, 0, 61440]);
    }

    #[test]
    fn smooth_parts() {
        assert_eq!(smooth_part(8), 8);
        assert_eq!(smooth_part(56), 8);
        assert_eq!(smooth_part(24), 24);
        assert_eq!(smooth_part(80), 80);
    }
}
