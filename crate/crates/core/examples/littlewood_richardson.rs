//! LR coefficients, skew characters, Kostka numbers and LR multitableau counts.

use kronkit::characters::skew_character;
use kronkit::lr::{kostka, lr_coeff, lr_pair_count, perm_character_decomp};
use kronkit::{parse_partition, Composition, Result, SkewShape};

fn main() -> Result<()> {
    let shape = SkewShape::new(parse_partition("3,2,1")?, parse_partition("2,1")?)?;
    let content = parse_partition("2,1")?;
    println!("c^(3,2,1)_(2,1),(2,1) = {}", lr_coeff(&shape, &content)?);

    print!("χ^{shape} =");
    for (nu, c) in skew_character(&shape) {
        print!(" + {c}·χ^({nu})");
    }
    println!();

    let pi = Composition::new(vec![2, 1, 1])?;
    println!(
        "K_(2,1,1),(2,1,1) = {}",
        kostka(&parse_partition("2,1,1")?, &pi)?
    );
    print!("1↑ from S_(2,1,1) =");
    for (nu, k) in perm_character_decomp(&pi) {
        print!(" + {k}·χ^({nu})");
    }
    println!();

    let lambda = parse_partition("2,2")?;
    for pi in ["2,2", "3,1", "2,1,1"] {
        let pi = Composition::new(parse_partition(pi)?.parts().to_vec())?;
        println!(
            "lr((2,2), (2,2); {:?}) = {}",
            pi.parts(),
            lr_pair_count(&lambda, &lambda, &pi)?
        );
    }
    Ok(())
}
