//! sum (2n+1) 8^n x^{n(n+1)/2} is 1 mod 8, a cubed Euler product mod 9,
//! and a 12th power.

use series_roots::hanna::postscript_series;

fn main() -> series_roots::Result<()> {
    let rep = postscript_series(200)?;
    let head: Vec<String> = rep.series.coeffs()[..11]
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!("f = {} + ...", head.join(", "));
    println!("f = 1 mod 8: {}", rep.one_mod_8);
    println!("f = prod (1 - x^m)^3 mod 9: {}", rep.product_mod_9);
    match rep.twelfth_root.fail_index() {
        None => println!("f in P_12 to order {}", rep.twelfth_root.order_tested),
        Some(i) => println!("f not in P_12: obstruction at x^{i}"),
    }
    Ok(())
}
