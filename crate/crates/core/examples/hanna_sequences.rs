//! Hanna sequences H_k, their roots, functional equations and a finite
//! check for periodicity; then the greedy permutation with an integral
//! cube root.

use series_roots::hanna::{
    aperiodicity_scan, hanna_digits, hanna_root_mod, hanna_sequence, permutation_sequence,
    verify_h2_equations, verify_h3_equations,
};

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn main() -> series_roots::Result<()> {
    for k in 2..=5 {
        let pair = hanna_sequence(k, 30)?;
        println!("H_{k}: {}", join(&pair.digits));
        let root: Vec<String> = pair.root.coeffs().iter().map(|c| c.to_string()).collect();
        println!("  root: {}", root.join(","));
        println!(
            "  root mod {}: {}",
            hanna_root_mod(k, 30)?.modulus(),
            join(hanna_root_mod(k, 30)?.coeffs())
        );
    }
    println!(
        "H_2 equations mod 4 to order 512: {}",
        verify_h2_equations(512)?
    );
    println!(
        "H_3 equations mod 9 to order 243: {}",
        verify_h3_equations(243)?
    );
    for k in [2, 3] {
        let d = hanna_digits(k, 4096)?;
        println!(
            "H_{k}: period <= 2048 in first 4096 terms: {:?}",
            aperiodicity_scan(&d, 2048)
        );
    }
    println!("permutation: {}", join(&permutation_sequence(30)));
    Ok(())
}
