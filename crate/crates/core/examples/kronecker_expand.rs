//! Decomposing χ^λ ⊗ χ^μ with the character-sum oracle.

use kronkit::characters::dimension;
use kronkit::{kron_expand, parse_partition, Result};

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (a, b) = match args.as_slice() {
        [a, b] => (a.as_str(), b.as_str()),
        _ => ("3,2,1", "3,2,1"),
    };
    let lambda = parse_partition(a)?;
    let mu = parse_partition(b)?;
    let e = kron_expand(&lambda, &mu)?;
    println!("χ^({lambda}) ⊗ χ^({mu}):");
    for (nu, k) in e.terms() {
        println!("  {k:>3} × ({nu})  [f = {}]", dimension(nu));
    }
    println!(
        "Σ k·f^ν = {}, f^λ·f^μ = {}",
        e.total_dimension(),
        dimension(&lambda) * dimension(&mu)
    );
    Ok(())
}
