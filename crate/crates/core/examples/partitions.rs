//! Parsing, conjugation, intersection, rectangles and enumeration.

use kronkit::{parse_partition, partitions_of, Rectangle, Result};

fn main() -> Result<()> {
    let lambda = parse_partition("4,2,1")?;
    let mu = parse_partition("(3,3)")?;
    println!(
        "λ = ({lambda}), |λ| = {}, ℓ(λ) = {}",
        lambda.size(),
        lambda.len()
    );
    println!("λ' = ({})", lambda.conjugate());
    println!("λ ∩ μ = ({})", lambda.intersect(&mu));
    println!("hooks of λ: {:?}", lambda.hooks());

    let rect = Rectangle::new(2, 3)?;
    let bigger = lambda.add_rectangle(rect)?;
    println!(
        "λ + (2)^3 = ({bigger}), back: ({})",
        bigger.subtract_rectangle(rect)?
    );

    let skew = bigger.skew(&lambda)?;
    println!("skew shape {skew} has {} cells", skew.size());

    for m in 0..=6 {
        let all: Vec<String> = partitions_of(m, None, None)
            .map(|p| format!("({p})"))
            .collect();
        println!("p({m}) = {}: {}", all.len(), all.join(" "));
    }
    Ok(())
}
