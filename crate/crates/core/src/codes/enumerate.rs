//! Exhaustive weight distributions.
//!
//! Binary and quaternary codes are walked in Gray-code order over a set of
//! additive generators (for GF(4) the rows and their multiples by `w`),
//! with codewords held as two 128-bit planes so that each step is one XOR.
//! Ternary codes use an odometer with per-coordinate updates.

use rayon::prelude::*;

use super::field::Field;
use super::LinearCode;

#[derive(Clone, Copy, Default)]
struct Planes {
    lo: u128,
    hi: u128,
}

impl Planes {
    fn from_row(row: &[u8]) -> Self {
        let mut p = Planes::default();
        for (i, &e) in row.iter().enumerate() {
            p.lo |= ((e & 1) as u128) << i;
            p.hi |= ((e >> 1) as u128) << i;
        }
        p
    }

    fn xor(&mut self, o: &Planes) {
        self.lo ^= o.lo;
        self.hi ^= o.hi;
    }

    fn weight(&self) -> usize {
        (self.lo | self.hi).count_ones() as usize
    }
}

const CHUNK_BITS: u32 = 20;

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    a
}

/// Binary codes of length at most 64 fit one machine word.
fn gray_histogram_u64(gens: &[u64], n: usize) -> Vec<u64> {
    let bits = gens.len() as u32;
    let chunk_bits = bits.min(CHUNK_BITS);
    let chunks = 1u64 << (bits - chunk_bits);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut hist = vec![0u64; n + 1];
            let base = c << chunk_bits;
            let gray = base ^ (base >> 1);
            let mut word = 0u64;
            for (j, g) in gens.iter().enumerate() {
                if gray >> j & 1 == 1 {
                    word ^= g;
                }
            }
            hist[word.count_ones() as usize] += 1;
            for i in 1..(1u64 << chunk_bits) {
                word ^= gens[i.trailing_zeros() as usize];
                hist[word.count_ones() as usize] += 1;
            }
            hist
        })
        .reduce(|| vec![0u64; n + 1], merge)
}

fn gray_histogram(gens: &[Planes], n: usize) -> Vec<u64> {
    let bits = gens.len() as u32;
    let chunk_bits = bits.min(CHUNK_BITS);
    let chunks = 1u64 << (bits - chunk_bits);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut hist = vec![0u64; n + 1];
            let base = c << chunk_bits;
            let gray = base ^ (base >> 1);
            let mut word = Planes::default();
            for (j, g) in gens.iter().enumerate() {
                if gray >> j & 1 == 1 {
                    word.xor(g);
                }
            }
            hist[word.weight()] += 1;
            for i in 1..(1u64 << chunk_bits) {
                word.xor(&gens[i.trailing_zeros() as usize]);
                hist[word.weight()] += 1;
            }
            hist
        })
        .reduce(|| vec![0u64; n + 1], merge)
}

fn odometer_histogram(code: &LinearCode) -> Vec<u64> {
    let f = Field { q: code.q() as u8 };
    let n = code.n();
    let rows = code.generator();
    let mut hist = vec![0u64; n + 1];
    let mut word = vec![0u8; n];
    let mut digits = vec![0u8; rows.len()];
    let mut weight = 0usize;
    hist[0] += 1;
    loop {
        let mut j = 0;
        while j < rows.len() && digits[j] == f.q - 1 {
            digits[j] = 0;
            j += 1;
        }
        if j == rows.len() {
            return hist;
        }
        digits[j] += 1;
        // each digit wrap and the final increment add one copy of the row
        for row in &rows[..=j] {
            for (w, &r) in word.iter_mut().zip(row) {
                if r != 0 {
                    let before = *w != 0;
                    *w = f.add(*w, r);
                    let after = *w != 0;
                    weight = weight + after as usize - before as usize;
                }
            }
        }
        hist[weight] += 1;
    }
}

/// Number of codewords of each weight `0..=n`.
pub(crate) fn direct_histogram(code: &LinearCode) -> Vec<u64> {
    let n = code.n();
    match code.q() {
        3 => odometer_histogram(code),
        q => {
            let f = Field { q: q as u8 };
            let mut gens = Vec::new();
            for row in code.generator() {
                gens.push(Planes::from_row(row));
                if q == 4 {
                    let scaled: Vec<u8> = row.iter().map(|&e| f.mul(2, e)).collect();
                    gens.push(Planes::from_row(&scaled));
                }
            }
            if gens.is_empty() {
                let mut h = vec![0; n + 1];
                h[0] = 1;
                return h;
            }
            if q == 2 && n <= 64 {
                let words: Vec<u64> = gens.iter().map(|g| g.lo as u64).collect();
                return gray_histogram_u64(&words, n);
            }
            gray_histogram(&gens, n)
        }
    }
}
