//! Dvir's reduction for ℓ(ν) = |λ ∩ μ'|.

use kronkit::reductions::dvir_reduce;
use kronkit::{kron_coeff_direct, parse_partition, Result};

fn main() -> Result<()> {
    for (a, b, c) in [
        ("2,1", "2,1", "1,1,1"),
        ("3,2", "3,1,1", "2,2,1"),
        ("3,1", "2,2", "2,1,1"),
    ] {
        let (l, m, n) = (
            parse_partition(a)?,
            parse_partition(b)?,
            parse_partition(c)?,
        );
        let bound = l.intersect(&m.conjugate()).size();
        match dvir_reduce(&l, &m, &n)? {
            Some(v) => println!(
                "(({l}), ({m}), ({n})): |λ∩μ'| = {bound} = ℓ(ν), dvir {v}, direct {}",
                kron_coeff_direct(&l, &m, &n)?
            ),
            None => println!(
                "(({l}), ({m}), ({n})): |λ∩μ'| = {bound} ≠ ℓ(ν) = {}",
                n.len()
            ),
        }
    }
    Ok(())
}
