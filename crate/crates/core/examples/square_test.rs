//! Squares decided from residues mod 4, p-th powers from residues mod p^2,
//! and the residue-class certificate of a membership test.

use series_roots::roots::PthObstruction;
use series_roots::{
    canonical_root_mod, is_nth_power, pth_power_necessary, square_test_mod4, IntSeries,
};

fn main() -> series_roots::Result<()> {
    let g = IntSeries::from_ints([1, 3, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5])?;
    let square = g.pow_u64(2);
    let t = square_test_mod4(&square)?;
    println!(
        "(1 + 3x - x^2 + ...)^2: square = {}, root bits {:?}",
        t.is_square, t.bits
    );

    let mut bumped = square.clone();
    bumped.set_coeff(5, bumped.coeff(5) + 1);
    let t = square_test_mod4(&bumped)?;
    if let Some(i) = t.fail_index {
        println!("after adding x^5: not a square, first failure at x^{i}");
    }

    let cube = g.pow_u64(3);
    let c = canonical_root_mod(&cube, 3)?;
    println!("cube root modulo {}: {:?}", c.modulus, c.root.coeffs());
    println!(
        "modular verdict for n = 3: member = {}",
        is_nth_power(&cube, 3)?.is_member()
    );

    let fifth = g.pow_u64(5);
    println!(
        "fifth power passes the p = 5 conditions: {}",
        pth_power_necessary(&fifth, 5)?.holds
    );
    match pth_power_necessary(&cube, 5)?.obstruction {
        Some(PthObstruction::Residue { index }) => {
            println!("cube fails p = 5: x^{index} not divisible by 5")
        }
        Some(PthObstruction::Lift { index }) => {
            println!("cube fails p = 5: lift differs at x^{index}")
        }
        None => println!("cube passes p = 5"),
    }
    Ok(())
}
