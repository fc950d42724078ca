//! The dispatcher and its JSON reduction trace.

use kronkit::{kron_coeff, kron_coeff_with, parse_partition, Method, Result};

fn main() -> Result<()> {
    for (a, b, c) in [
        ("2,2,2,2", "5,3", "4,4"),
        ("2,2,2,2", "4,4", "4,4"),
        ("3,2,1,1", "4,3", "4,3"),
        ("3,2,1", "3,2,1", "3,2,1"),
    ] {
        let (l, m, n) = (
            parse_partition(a)?,
            parse_partition(b)?,
            parse_partition(c)?,
        );
        let e = kron_coeff(&l, &m, &n)?;
        println!("k(({l}), ({m}), ({n})) = {} via {}", e.value, e.method);
        println!("  {}", e.trace.to_json());
    }
    let l = parse_partition("3,2,1,1")?;
    let m = parse_partition("4,3")?;
    let forced = kron_coeff_with(&l, &m, &m, Method::Formula)?;
    println!("forced formula: {} via {}", forced.value, forced.method);
    println!("  {}", forced.trace.to_json());
    Ok(())
}
