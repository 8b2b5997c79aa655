//! Exact n-th roots of integer power series.
//!
//! A series `f = 1 + f_1 x + f_2 x^2 + ...` is an n-th power when some
//! integer series `g` with constant term 1 has `g^n = f`. This crate decides
//! that question to any finite order, produces the root or its canonical
//! residues, and ships generators for the families where such roots show up:
//! lattice theta series, weight enumerators of linear codes, and the greedy
//! digit sequences whose k-th roots are integral.
//!
//! Modules:
//! - [`padic`]: factorization, p-adic valuation, `mu(n)`
//! - [`series`]: truncated series over `Z` and `Z/mZ`
//! - [`roots`]: root extraction and membership tests
//! - [`lattices`]: theta series from Gram matrices and modular forms
//! - [`codes`]: weight enumerators, Reed-Muller and BCH codes
//! - [`hanna`]: greedy digit sequences with integral k-th roots
//! - [`bfile`], [`scan`]: OEIS b-file I/O and directory scans

pub mod bfile;
pub mod codes;
pub mod error;
pub mod hanna;
pub mod lattices;
pub mod padic;
pub mod roots;
pub mod scan;
pub mod series;

pub use error::{Error, Result};
pub use roots::{
    canonical_root_mod, is_nth_power, lcm_root_witness, max_power_order, nth_root,
    pth_power_necessary, scaled_membership, square_test_mod4, CanonicalRoot, MembershipVerdict,
    Outcome, RootCertificate, Route,
};
pub use series::{IntSeries, ModSeries};
