//! Exact short-vector counting.
//!
//! The quadratic form is written as `Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2`
//! from an exact rational LDL decomposition, then scaled by a common
//! denominator so that every bound in the depth-first search is an integer
//! comparison. No floating point is involved.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::gram::GramMatrix;

struct ScaledForm {
    dim: usize,
    /// `Delta`, the common denominator of the `u_ij`.
    denom: i128,
    /// `Delta * u_ij`.
    shifts: Vec<Vec<i128>>,
    /// `E * d_i`, with `E` the common denominator of the `d_i`.
    weights: Vec<i128>,
    /// `E * Delta^2`: the scale between `Q(x)` and the integer sum.
    scale: i128,
}

impl ScaledForm {
    fn new(gram: &GramMatrix) -> Self {
        let ldl = gram.ldl().expect("validated at construction");
        let dim = gram.dim();
        let mut delta = BigInt::one();
        for i in 0..dim {
            for j in i + 1..dim {
                delta = delta.lcm(ldl.upper[i][j].denom());
            }
        }
        let e = ldl
            .diag
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let to_i128 = |x: BigInt| x.to_i128().expect("scaled form fits in i128");
        let shifts = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if j > i {
                            to_i128((&ldl.upper[i][j] * &delta).to_integer())
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let weights = ldl
            .diag
            .iter()
            .map(|di| to_i128((di * &e).to_integer()))
            .collect();
        let delta = to_i128(delta);
        let e = to_i128(e);
        ScaledForm {
            dim,
            denom: delta,
            shifts,
            weights,
            scale: e * delta * delta,
        }
    }
}

struct Search<'a> {
    form: &'a ScaledForm,
    budget: i128,
    x: Vec<i64>,
    counts: Vec<u64>,
}

impl Search<'_> {
    fn center(&self, level: usize) -> i128 {
        let row = &self.form.shifts[level];
        (level + 1..self.form.dim)
            .map(|j| row[j] * self.x[j] as i128)
            .sum()
    }

    /// Integer range of `x_level` keeping `w (Delta x + c)^2 <= rem`.
    fn range(&self, level: usize, rem: i128) -> (i128, i128, i128) {
        let c = self.center(level);
        let s = Roots::sqrt(&(rem / self.form.weights[level]));
        let lo = Integer::div_ceil(&(-c - s), &self.form.denom);
        let hi = Integer::div_floor(&(-c + s), &self.form.denom);
        (lo, hi, c)
    }

    fn descend(&mut self, level: usize, rem: i128) {
        let (lo, hi, c) = self.range(level, rem);
        let w = self.form.weights[level];
        for xi in lo..=hi {
            let y = self.form.denom * xi + c;
            let cost = w * y * y;
            if cost > rem {
                continue;
            }
            self.x[level] = xi as i64;
            if level == 0 {
                let used = self.budget - (rem - cost);
                debug_assert_eq!(used % self.form.scale, 0);
                self.counts[(used / self.form.scale) as usize] += 1;
            } else {
                self.descend(level - 1, rem - cost);
            }
        }
        self.x[level] = 0;
    }
}

/// Number of lattice vectors of each norm `0..=max_norm`.
pub(crate) fn count_vectors(gram: &GramMatrix, max_norm: u64) -> Vec<u64> {
    let form = ScaledForm::new(gram);
    let budget = form.scale * max_norm as i128;
    let top = form.dim - 1;
    let probe = Search {
        form: &form,
        budget,
        x: vec![0; form.dim],
        counts: vec![0; max_norm as usize + 1],
    };
    let (lo, hi, c) = probe.range(top, budget);
    let w = form.weights[top];
    (lo..=hi)
        .into_par_iter()
        .map(|xt| {
            let mut s = Search {
                form: &form,
                budget,
                x: vec![0; form.dim],
                counts: vec![0; max_norm as usize + 1],
            };
            let y = form.denom * xt + c;
            let cost = w * y * y;
            if cost <= budget {
                s.x[top] = xt as i64;
                if top == 0 {
                    s.counts[(cost / form.scale) as usize] += 1;
                } else {
                    s.descend(top - 1, budget - cost);
                }
            }
            s.counts
        })
        .reduce(
            || vec![0; max_norm as usize + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}
