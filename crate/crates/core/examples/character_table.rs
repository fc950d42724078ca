//! Murnaghan-Nakayama values and the full character table of S_n.

use kronkit::characters::{character_table, dimension, mn_value, CycleType};
use kronkit::{parse_partition, Result};

fn main() -> Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let table = character_table(n);
    let header: Vec<String> = table.classes().iter().map(|c| format!("({c})")).collect();
    println!("S_{n}, classes: {}", header.join(" "));
    println!(
        "class sizes: {:?}",
        table
            .class_sizes()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );
    for (i, lambda) in table.classes().iter().enumerate() {
        let row: Vec<String> = table.row(i).iter().map(|v| format!("{v:>4}")).collect();
        println!("χ^{:<12}{}", format!("({lambda})"), row.join(""));
    }

    let lambda = parse_partition("3,2,1")?;
    let rho = CycleType(parse_partition("3,3")?);
    println!("χ^(3,2,1)((3,3)) = {}", mn_value(&lambda, &rho)?);
    println!("f^(3,2,1) = {}", dimension(&lambda));
    Ok(())
}
