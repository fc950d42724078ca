//! Adding a frame of rectangles leaves the coefficient unchanged.

use kronkit::reductions::stability_inflate;
use kronkit::{kron_coeff_direct, parse_partition, RectangleFrame, Result};

fn main() -> Result<()> {
    let lambda = parse_partition("2,1,1")?;
    let mu = parse_partition("3,1")?;
    let nu = parse_partition("2,2")?;
    println!(
        "k((2,1,1), (3,1), (2,2)) = {}",
        kron_coeff_direct(&lambda, &mu, &nu)?
    );
    for t in 1..=3 {
        let frame = RectangleFrame::new(4, 2, 2, t)?;
        let [a, b, c] = stability_inflate(&lambda, &mu, &nu, frame)?;
        println!(
            "{frame}: k(({a}), ({b}), ({c})) = {}",
            kron_coeff_direct(&a, &b, &c)?
        );
    }
    Ok(())
}
