//! Exhaustive sweeps of every property against the oracle.

use kronkit::verify::{run_suite, Suite};

fn main() {
    let max_m = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let mut failed = false;
    for report in run_suite(Suite::All, max_m) {
        failed |= !report.passed();
        println!("{report}");
    }
    std::process::exit(i32::from(failed));
}
