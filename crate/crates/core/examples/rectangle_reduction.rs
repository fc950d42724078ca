//! Removing a rectangle frame, and the vanishing test.

use kronkit::reductions::{rectangle_reduce, vanishing_lr};
use kronkit::{kron_coeff_direct, parse_partition, RectangleDecision, Result};

fn main() -> Result<()> {
    let cases = [
        ("2,2,2,2", "5,3", "4,4"),
        ("2,2,2,2", "4,4", "4,4"),
        ("3,3,2,2", "6,4", "5,5"),
        ("3,2,1", "3,2,1", "6"),
        ("3,2,1", "4,2", "3,3"),
    ];
    for (a, b, c) in cases {
        let (l, m, n) = (
            parse_partition(a)?,
            parse_partition(b)?,
            parse_partition(c)?,
        );
        let k = kron_coeff_direct(&l, &m, &n)?;
        print!("k(({l}), ({m}), ({n})) = {k}: ");
        match rectangle_reduce(&l, &m, &n)? {
            RectangleDecision::Zero { frame, .. } => println!("zero by {frame}"),
            RectangleDecision::Reduced { triple, frame, .. } => {
                let [x, y, z] = &triple;
                println!(
                    "reduced by {frame} to (({x}), ({y}), ({z})) = {}",
                    kron_coeff_direct(x, y, z)?
                );
            }
            RectangleDecision::NotApplicable => println!("no frame applies"),
        }
        if l.len() == m.len() * n.len() {
            println!("  vanishing test: {}", vanishing_lr(&l, &m, &n)?);
        }
    }
    Ok(())
}
