//! Extended BCH codes of length 2^m: each weight enumerator is tested for a
//! root of order 2^m / d', where d' is the least power of 2 at least 2t.

use series_roots::codes::bch_conjecture_check;

fn main() -> series_roots::Result<()> {
    let m_max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    for row in bch_conjecture_check(m_max)? {
        let verdict = match row.fail_index {
            None => "member".to_string(),
            Some(i) => format!("obstruction at x^{i}"),
        };
        println!(
            "m = {} t = {:2} [{}, {:2}] d' = {:2} n = {:2}: {verdict}",
            row.m,
            row.t,
            1 << row.m,
            row.k,
            row.d_prime,
            row.target
        );
    }
    Ok(())
}
