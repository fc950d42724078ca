//! Two-row and (4,2,2) closed formulas with their intermediate values.

use kronkit::reductions::{four_two_two_formula, two_row_formula};
use kronkit::{kron_coeff_direct, parse_partition, Result};

fn main() -> Result<()> {
    for (a, b, c) in [
        ("4,2", "4,2", "4,2"),
        ("5,3", "4,4", "6,2"),
        ("3,3", "3,3", "3,3"),
    ] {
        let (l, m, n) = (
            parse_partition(a)?,
            parse_partition(b)?,
            parse_partition(c)?,
        );
        let f = two_row_formula(&l, &m, &n)?;
        println!(
            "two-row ({l}), ({m}), ({n}): x = {}, y = {}, value {} (direct {})",
            f.x,
            f.y,
            f.value,
            kron_coeff_direct(&l, &m, &n)?
        );
    }
    for (a, b, c) in [
        ("3,2,1,1", "4,3", "4,3"),
        ("2,2,1,1", "4,2", "3,3"),
        ("4,2,1,1", "6,2", "4,4"),
    ] {
        let (l, m, n) = (
            parse_partition(a)?,
            parse_partition(b)?,
            parse_partition(c)?,
        );
        let f = four_two_two_formula(&l, &m, &n)?;
        println!(
            "(4,2,2) ({l}), ({m}), ({n}): case {:?}, x = {}, y = {}, z = {:?}, value {} (direct {})",
            f.case,
            f.x,
            f.y,
            f.z,
            f.value,
            kron_coeff_direct(&l, &m, &n)?
        );
    }
    Ok(())
}
