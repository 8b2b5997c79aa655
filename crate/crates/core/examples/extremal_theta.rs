//! Extremal even unimodular theta series built from E8's theta series and
//! the discriminant, with their root orders.

use num_traits::Zero;

use series_roots::is_nth_power;
use series_roots::lattices::{extremal_form, extremal_modulus};

fn main() -> series_roots::Result<()> {
    for d in [8u64, 24, 32, 56] {
        let form = extremal_form(d, 100)?;
        let c: Vec<String> = form.coefficients.iter().map(|c| c.to_string()).collect();
        let th = &form.theta;
        let first = (1..th.order())
            .find(|&k| !th.coeff(k).is_zero())
            .unwrap_or(0);
        println!(
            "d = {d}: c = [{}], first shell x^{first} with {} vectors",
            c.join(", "),
            th.coeff(first)
        );
        println!(
            "  theta = 1 mod {}: {}",
            extremal_modulus(d),
            th.is_one_mod(extremal_modulus(d))
        );
        let mut ns = vec![8, d];
        ns.dedup();
        for n in ns {
            let v = is_nth_power(th, n)?;
            match v.fail_index() {
                None => println!("  in P_{n} to order {}", v.order_tested),
                Some(i) => println!("  not in P_{n}: obstruction at x^{i}"),
            }
        }
    }
    Ok(())
}
