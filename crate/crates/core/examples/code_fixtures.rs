//! Weight enumerators of classical codes, computed from generator matrices
//! or tabulated, with their root orders.

use series_roots::codes::{fixture_enumerators, membership_order, weight_enumerator, LinearCode};
use series_roots::{max_power_order, square_test_mod4};

fn main() -> series_roots::Result<()> {
    for (name, w) in fixture_enumerators()? {
        let f = w.padded(membership_order(w.n));
        let orders = max_power_order(&f, 24)?;
        println!("{name} [{}, {}] over GF({}): {}", w.n, w.k, w.q, w.series());
        println!("  root orders <= 24: {orders:?}");
        if name == "rao-reddy" {
            let bits = square_test_mod4(&f)?.bits;
            let ones: Vec<usize> = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b == 1)
                .map(|(i, _)| i)
                .collect();
            println!("  square root mod 2 has terms at {ones:?}");
        }
    }

    // the [7, 4] Hamming code from its generator matrix
    let rows = ["1000110", "0100101", "0010011", "0001111"]
        .iter()
        .map(|r| r.bytes().map(|b| b - b'0').collect())
        .collect();
    let hamming = LinearCode::new(2, 7, rows)?;
    println!("[7, 4] Hamming: {}", weight_enumerator(&hamming)?.series());
    println!("its dual: {}", weight_enumerator(&hamming.dual())?.series());
    Ok(())
}
