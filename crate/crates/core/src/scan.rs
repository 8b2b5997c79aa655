//! Batch membership tests over a directory of b-files.
//!
//! Each file is read as a series `f_0 + f_1 x + ...` and tested for every
//! requested root order. Files are filtered in turn: a constant term other
//! than 1 skips the file; `n = 2` is decided by the mod-4 square test; a
//! series congruent to 1 mod 4 is flagged, since it is a square for free;
//! all other orders go through [`is_nth_power`].

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::bfile::{parse_bfile, BFile};
use crate::error::{Error, Result};
use crate::roots::{is_nth_power, nth_root, square_test_mod4};
use crate::series::IntSeries;

use num_traits::One;

/// Default cap on the number of terms tested per file.
pub const DEFAULT_MAX_ORDER: usize = 1000;

/// Parses root orders such as `4`, `2,3,5` or `2..24` (inclusive).
pub fn parse_root_orders(list: &str) -> Result<Vec<u64>> {
    let bad = || Error::OutOfRange(format!("bad root-order list {list:?}"));
    let mut out = BTreeSet::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a == 0 || a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            let n: u64 = part.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            out.insert(n);
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NVerdict {
    pub n: u64,
    pub member: bool,
    pub fail_index: Option<usize>,
    /// Integer root prefix when `member`.
    pub certificate: Option<BFile>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FileOutcome {
    Unreadable(String),
    Skipped(String),
    Tested {
        order: usize,
        /// `f = 1 (mod 4)`.
        one_mod_4: bool,
        verdicts: Vec<NVerdict>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileReport {
    pub path: PathBuf,
    pub outcome: FileOutcome,
}

/// Verdicts for one series at each `n`, truncated to `max_order` terms.
pub fn scan_series(f: &IntSeries, ns: &[u64], max_order: usize) -> FileOutcome {
    if !f.constant().is_one() {
        return FileOutcome::Skipped(format!("constant term {}", f.constant()));
    }
    let f = f.truncate(f.order().min(max_order));
    let one_mod_4 = f.is_one_mod(4);
    let exact_root = |n: u64| {
        let v = nth_root(&f, n).expect("constant term checked and n positive");
        v.root_prefix().map(BFile::from_series)
    };
    let verdicts = ns
        .iter()
        .map(|&n| {
            let (member, fail_index) = if n == 2 {
                let sq = square_test_mod4(&f).expect("constant term checked");
                (sq.is_square, sq.fail_index)
            } else {
                let v = is_nth_power(&f, n).expect("constant term checked and n positive");
                (v.is_member(), v.fail_index())
            };
            let certificate = if member { exact_root(n) } else { None };
            NVerdict {
                n,
                member,
                fail_index,
                certificate,
            }
        })
        .collect();
    FileOutcome::Tested {
        order: f.order(),
        one_mod_4,
        verdicts,
    }
}

fn scan_file(path: &Path, ns: &[u64], max_order: usize) -> FileReport {
    let outcome = match std::fs::read_to_string(path) {
        Err(e) => FileOutcome::Unreadable(e.to_string()),
        Ok(text) => match parse_bfile(&text).and_then(|b| b.to_series()) {
            Err(e) => FileOutcome::Unreadable(e.to_string()),
            Ok(f) => scan_series(&f, ns, max_order),
        },
    };
    FileReport {
        path: path.to_path_buf(),
        outcome,
    }
}

/// Scans the given files in parallel; the report is sorted by path.
pub fn scan_paths(paths: &[PathBuf], ns: &[u64], max_order: usize) -> Vec<FileReport> {
    let mut reports: Vec<FileReport> = paths
        .par_iter()
        .map(|p| scan_file(p, ns, max_order))
        .collect();
    reports.sort_by(|a, b| a.path.cmp(&b.path));
    reports
}

/// Scans every regular file directly inside `dir`.
pub fn scan_dir(dir: &Path, ns: &[u64], max_order: usize) -> std::io::Result<Vec<FileReport>> {
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            paths.push(entry.path());
        }
    }
    Ok(scan_paths(&paths, ns, max_order))
}
