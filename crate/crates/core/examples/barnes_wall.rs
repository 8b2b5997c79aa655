//! Barnes-Wall theta series: 2-adic congruences between consecutive
//! dimensions and the kissing numbers against prod (1 + 2^i).

use series_roots::lattices::{
    bw16_theta, bw_congruence_check, bw_theta_is_one_mod, kissing_2adic_rows,
};

fn main() -> series_roots::Result<()> {
    for m in 1..=4 {
        print!(
            "m = {m}: theta = 1 mod 2^{}: {}",
            m + 1,
            bw_theta_is_one_mod(m, 25)?
        );
        if m >= 2 {
            print!(", congruence with m - 1: {}", bw_congruence_check(m, 25)?);
        }
        println!();
    }
    for row in kissing_2adic_rows(4)? {
        println!(
            "m = {}: kissing {}, / 2^{} = {}, product mod 2^{} = {}, agrees {}",
            row.m,
            row.kissing,
            row.m + 1,
            row.normalized,
            row.m,
            row.product_residue,
            row.agrees
        );
    }
    let th = bw16_theta(41);
    let shells: Vec<String> = (0..41)
        .step_by(4)
        .map(|k| format!("x^{k}: {}", th.coeff(k)))
        .collect();
    println!("BW16 from Eisenstein series: {}", shells.join(", "));
    Ok(())
}
