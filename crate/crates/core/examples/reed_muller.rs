//! Reed-Muller weight enumerators: product and doubling congruences, root
//! orders, and the 2-adic limit of the counts.

use series_roots::codes::{rm_2adic_limit_check, rm_congruence_check, rm_enumerator, Dyadic};

fn main() -> series_roots::Result<()> {
    let (w, route) = rm_enumerator(1, 4)?;
    println!("RM(1, 4) via {route:?}: {}", w.series());

    let report = rm_congruence_check(6)?;
    for row in &report.rows {
        println!(
            "RM({}, {}) k = {:2} {:?}: product congruence {}, root of order 2^{} {}",
            row.r, row.m, row.k, row.route, row.product_congruence, row.r, row.member
        );
    }
    println!(
        "doubling congruences: {}",
        report.doubling.iter().all(|d| d.holds)
    );

    let lambda: Dyadic = "1/2".parse()?;
    let limit = rm_2adic_limit_check(1, lambda, 6)?;
    for row in &limit.rows {
        if let Some(count) = &row.count {
            println!(
                "m = {}: {count} words of weight 2^(m-1), limit agreement {:?}",
                row.m, row.agrees_with_limit
            );
        }
    }
    println!("2-adic limit consistent: {}", limit.all_hold());
    Ok(())
}
