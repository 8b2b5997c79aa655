//! Root orders of every builtin lattice's theta series.

use series_roots::lattices::conjecture_sweep;

fn main() -> series_roots::Result<()> {
    for row in conjecture_sweep()? {
        let flag = if row.violation() {
            "  <-- exceeds or does not divide d"
        } else {
            ""
        };
        println!(
            "{:7} d={:2} norms<={:3} n<={:2}: {:?}{flag}",
            row.name, row.dim, row.max_norm, row.bound, row.members
        );
    }
    Ok(())
}
