//! Arithmetic in GF(2), GF(3) and GF(4), with GF(4) = {0, 1, w, w^2}
//! labelled 0, 1, 2, 3 so that addition is XOR of the labels.

use crate::error::{Error, Result};

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const GF4_INV: [u8; 4] = [0, 1, 3, 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Field {
    pub q: u8,
}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        match q {
            2..=4 => Ok(Field { q: q as u8 }),
            _ => Err(Error::Code(format!("unsupported field size {q}"))),
        }
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self.q {
            3 => (a + b) % 3,
            _ => a ^ b,
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        match self.q {
            3 => (3 - a) % 3,
            _ => a,
        }
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self.q {
            4 => GF4_MUL[a as usize][b as usize],
            q => (a * b) % q,
        }
    }

    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0);
        match self.q {
            4 => GF4_INV[a as usize],
            _ => a,
        }
    }
}

/// GF(2^m) by log and antilog tables over a fixed primitive polynomial.
#[derive(Debug, Clone)]
pub(crate) struct BinaryExtension {
    pub m: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Primitive polynomials, bit `i` holding the coefficient of `x^i`.
pub(crate) fn primitive_polynomial(m: u32) -> Option<u32> {
    match m {
        2 => Some(0b111),
        3 => Some(0b1011),
        4 => Some(0b10011),
        5 => Some(0b100101),
        6 => Some(0b1000011),
        _ => None,
    }
}

impl BinaryExtension {
    pub fn new(m: u32) -> Result<Self> {
        let poly = primitive_polynomial(m)
            .ok_or_else(|| Error::OutOfRange(format!("GF(2^{m}) not supported")))?;
        let order = (1u32 << m) - 1;
        let mut exp = vec![0; order as usize];
        let mut log = vec![0; 1 << m];
        let mut a = 1u32;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = a;
            log[a as usize] = i as u32;
            a <<= 1;
            if a >> m != 0 {
                a ^= poly;
            }
        }
        debug_assert_eq!(a, 1, "polynomial is primitive");
        Ok(BinaryExtension { m, exp, log })
    }

    pub fn order(&self) -> u32 {
        (1 << self.m) - 1
    }

    /// `alpha^e`.
    pub fn alpha_pow(&self, e: u32) -> u32 {
        self.exp[(e % self.order()) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[((self.log[a as usize] + self.log[b as usize]) % self.order()) as usize]
    }
}
