//! Seeded randomized property suites shared by the acceptance runner and the
//! regular integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use series_roots::padic::{factorize, mu, valuation_u64};
use series_roots::roots::{is_nth_power_via, Route};
use series_roots::{
    canonical_root_mod, is_nth_power, lcm_root_witness, nth_root, pth_power_necessary,
    square_test_mod4, IntSeries,
};

pub const ORDER: usize = 64;
const ROOT_ORDERS: [u64; 8] = [2, 3, 4, 5, 6, 8, 12, 24];

/// Outcome of one suite: how many cases ran and a description of each failure.
#[derive(Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 10 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `1 + g_1 x + ...` with `g_k` uniform in `[-bound, bound]`.
pub fn random_unit_series(rng: &mut impl Rng, order: usize, bound: i64) -> IntSeries {
    let mut c = vec![BigInt::one()];
    c.extend((1..order).map(|_| BigInt::from(rng.gen_range(-bound..=bound))));
    IntSeries::from_coeffs(c).unwrap()
}

fn random_tail(rng: &mut impl Rng, order: usize, bound: i64) -> IntSeries {
    let c = (0..order)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntSeries::from_coeffs(c).unwrap()
}

/// `c x^k` added to `f`.
fn bump(f: &IntSeries, k: usize, c: &BigInt) -> IntSeries {
    let mut out = f.clone();
    out.set_coeff(k, f.coeff(k) + c);
    out
}

/// `f + scale * x^k * tail`.
fn shifted_tail(f: &IntSeries, k: usize, scale: &BigInt, tail: &IntSeries) -> IntSeries {
    let mut out = f.clone();
    for i in k..f.order() {
        out.set_coeff(i, f.coeff(i) + scale * tail.coeff(i - k));
    }
    out
}

/// `g^n` recovered exactly by both routes.
pub fn round_trip(cases: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("round-trip root extraction");
    let mut rng = rng(seed);
    for _ in 0..cases {
        let n = *ROOT_ORDERS.choose(&mut rng).unwrap();
        let g = random_unit_series(&mut rng, ORDER, 9);
        let f = g.pow_u64(n);
        let exact = nth_root(&f, n).unwrap();
        rep.check(exact.root_prefix() == Some(&g), || {
            format!("n={n}: exact root differs from g = {g}")
        });
        let modular = is_nth_power(&f, n).unwrap();
        rep.check(modular.is_member(), || {
            format!("n={n}: modular route rejects g^n for g = {g}")
        });
        rep.cases += 1;
    }
    rep
}

/// The exact and modular routes agree on verdict and fail index, and adding
/// `mu(n) x^k (tail)` to an n-th power keeps it one.
pub fn route_agreement(cases: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("exact/modular agreement and mu(n) perturbation");
    let mut rng = rng(seed);
    for i in 0..cases {
        let n = *ROOT_ORDERS.choose(&mut rng).unwrap();
        let g = random_unit_series(&mut rng, ORDER, 9);
        let mut f = g.pow_u64(n);
        if i % 2 == 1 {
            let k = rng.gen_range(1..ORDER);
            let c = BigInt::from(rng.gen_range(1..=n as i64 * 3));
            f = bump(&f, k, &c);
        }
        let exact = is_nth_power_via(&f, n, Route::Exact).unwrap();
        let modular = is_nth_power_via(&f, n, Route::Modular).unwrap();
        rep.check(
            exact.is_member() == modular.is_member() && exact.fail_index() == modular.fail_index(),
            || {
                format!(
                    "n={n}: exact {:?} vs modular {:?}",
                    exact.fail_index(),
                    modular.fail_index()
                )
            },
        );

        let power = g.pow_u64(n);
        let k = rng.gen_range(1..ORDER);
        let tail = random_tail(&mut rng, ORDER, 9);
        let moved = shifted_tail(&power, k, &BigInt::from(mu(n)), &tail);
        rep.check(
            is_nth_power_via(&moved, n, Route::Exact)
                .unwrap()
                .is_member(),
            || format!("n={n}: g^n + mu(n) x^{k} (tail) lost membership"),
        );
        rep.cases += 1;
    }
    rep
}

/// Roots are unique modulo `mu(n)/n`, and distinct roots mod `mu(n)/n` give
/// distinct powers mod `mu(n)`.
pub fn canonical_roots(cases: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("canonical root uniqueness and injectivity");
    let mut rng = rng(seed);
    for _ in 0..cases {
        let n = *ROOT_ORDERS.choose(&mut rng).unwrap();
        let m = mu(n);
        let step = BigInt::from(m / n);
        let g = random_unit_series(&mut rng, ORDER, 9);
        let k = rng.gen_range(1..ORDER);
        let h = bump(&g, k, &step);
        let a = canonical_root_mod(&g.pow_u64(n), n).unwrap();
        let b = canonical_root_mod(&h.pow_u64(n), n).unwrap();
        rep.check(a == b, || {
            format!("n={n}: moving g_{k} by mu(n)/n changed the canonical root")
        });
        rep.check(a.root == g.reduce_mod(m / n).unwrap(), || {
            format!("n={n}: canonical root is not g mod mu(n)/n")
        });

        let j = rng.gen_range(1..ORDER);
        let offset = rng.gen_range(1..(m / n).max(2)) as i64;
        let other = bump(&g, j, &BigInt::from(offset));
        let differs = !(BigInt::from(offset)).is_multiple_of(&step);
        if differs {
            let pa = g.pow_u64(n).reduce_mod(m).unwrap();
            let pb = other.pow_u64(n).reduce_mod(m).unwrap();
            rep.check(pa != pb, || {
                format!("n={n}: roots differing at x^{j} gave equal powers mod {m}")
            });
        }
        rep.cases += 1;
    }
    rep
}

/// An r-th and s-th power is an lcm(r, s)-th power, with the combined root
/// as witness.
pub fn lcm_witness(cases: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lcm witness");
    let mut rng = rng(seed);
    let pairs: [(u64, u64); 8] = [
        (2, 3),
        (4, 6),
        (3, 5),
        (2, 5),
        (6, 10),
        (4, 3),
        (8, 12),
        (2, 4),
    ];
    for _ in 0..cases {
        let (r, s) = *pairs.choose(&mut rng).unwrap();
        let l = r.lcm(&s);
        let order = 32;
        let h = random_unit_series(&mut rng, order, 3);
        let f = h.pow_u64(l);
        let both =
            is_nth_power(&f, r).unwrap().is_member() && is_nth_power(&f, s).unwrap().is_member();
        rep.check(both, || {
            format!("(r, s) = ({r}, {s}): h^lcm not found in both")
        });
        let w = lcm_root_witness(&f, r, s).unwrap();
        rep.check(w.pow_u64(l) == f, || {
            format!("(r, s) = ({r}, {s}): witness^{l} differs from f")
        });
        rep.cases += 1;
    }
    rep
}

/// `n'` = the part of `n` built from primes dividing `m`.
fn shared_part(n: u64, m: u64) -> u64 {
    factorize(m)
        .primes()
        .map(|p| p.pow(valuation_u64(n, p)))
        .product()
}

/// `(1 + m x g)^n = 1 (mod m n')`.
pub fn power_congruence(cases: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("power congruence");
    let mut rng = rng(seed);
    for _ in 0..cases {
        let m = rng.gen_range(2..=12u64);
        let n = rng.gen_range(1..=32u64);
        let g = random_tail(&mut rng, ORDER, 9);
        let mut f = IntSeries::one(ORDER);
        for i in 1..ORDER {
            f.set_coeff(i, g.coeff(i - 1) * m);
        }
        let modulus = m * shared_part(n, m);
        rep.check(f.pow_u64(n).is_one_mod(modulus), || {
            format!("m={m}, n={n}: power not 1 mod {modulus}")
        });
        rep.cases += 1;
    }
    rep
}

/// The mod-4 square test agrees with the general membership test, fail
/// index included.
pub fn square_agreement(cases: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("square test agreement");
    let mut rng = rng(seed);
    for i in 0..cases {
        let f = match i % 4 {
            0 => random_unit_series(&mut rng, ORDER, 9),
            1 => random_unit_series(&mut rng, ORDER, 9).pow_u64(2),
            2 => {
                let sq = random_unit_series(&mut rng, ORDER, 9).pow_u64(2);
                let k = rng.gen_range(1..ORDER);
                let c = BigInt::from(rng.gen_range(1..=3));
                bump(&sq, k, &c)
            }
            _ => {
                let sq = random_unit_series(&mut rng, ORDER, 9).pow_u64(2);
                let tail = random_tail(&mut rng, ORDER, 9);
                shifted_tail(&sq, rng.gen_range(1..ORDER), &BigInt::from(4), &tail)
            }
        };
        let st = square_test_mod4(&f).unwrap();
        let v = is_nth_power(&f, 2).unwrap();
        rep.check(
            st.is_square == v.is_member() && st.fail_index == v.fail_index(),
            || {
                format!(
                    "square test {:?} vs membership {:?}",
                    st.fail_index,
                    v.fail_index()
                )
            },
        );
        rep.cases += 1;
    }
    rep
}

/// p-th powers pass the necessary p-th power conditions.
pub fn pth_power_conditions(cases: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("p-th power necessary conditions");
    let mut rng = rng(seed);
    for _ in 0..cases {
        let p = *[2u64, 3, 5, 7, 11].choose(&mut rng).unwrap();
        let f = random_unit_series(&mut rng, ORDER, 9).pow_u64(p);
        let t = pth_power_necessary(&f, p).unwrap();
        rep.check(t.holds, || {
            format!("p={p}: obstruction {:?}", t.obstruction)
        });
        rep.cases += 1;
    }
    rep
}

/// Every suite at the acceptance case counts.
pub fn all_suites(seed: u64) -> Vec<SuiteReport> {
    vec![
        round_trip(2000, seed),
        route_agreement(1000, seed + 1),
        canonical_roots(500, seed + 2),
        lcm_witness(500, seed + 3),
        power_congruence(500, seed + 4),
        square_agreement(1000, seed + 5),
        pth_power_conditions(200, seed + 6),
    ]
}

pub fn ints(s: &IntSeries) -> Vec<i64> {
    s.coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("coefficient fits in i64"))
        .collect()
}

pub fn big(v: i128) -> BigInt {
    BigInt::from(v)
}

pub fn is_zero_from(s: &IntSeries, k: usize) -> bool {
    s.coeffs()[k..].iter().all(Zero::is_zero)
}
