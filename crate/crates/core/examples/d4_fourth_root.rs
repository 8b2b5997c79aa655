//! Theta series of D4 and its integral fourth root.

use series_roots::lattices::{builtin_lattice, theta_from_gram};
use series_roots::{is_nth_power, nth_root};

fn main() -> series_roots::Result<()> {
    let d4 = builtin_lattice("D4")?;
    println!("D4 Gram matrix (det {}):\n{d4}", d4.determinant());
    let theta = theta_from_gram(&d4, 30);
    println!("theta = {}", theta.series());

    let root = nth_root(&theta, 4)?;
    let g = root.root_prefix().expect("D4 is in P_4");
    let even: Vec<String> = g
        .coeffs()
        .iter()
        .step_by(2)
        .map(|c| c.to_string())
        .collect();
    println!("fourth root, even powers: {}", even.join(", "));

    for n in [2, 3, 8] {
        let v = is_nth_power(&theta, n)?;
        match v.fail_index() {
            None => println!("n = {n}: member"),
            Some(i) => println!("n = {n}: obstruction at x^{i}"),
        }
    }
    Ok(())
}
