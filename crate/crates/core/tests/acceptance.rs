//! Acceptance criteria. Every comparison is an exact integer equality or
//! inequality; there is no tolerance. Each criterion prints one
//! `PASS`/`FAIL` line, and the target exits nonzero if any criterion fails.

use kronkit::verify::{Property, PropertyReport};

struct Criterion {
    id: u32,
    title: &'static str,
    /// Properties and the size bound each one is swept to.
    sweeps: &'static [(Property, usize)],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "oracle self-consistency",
        sweeps: &[
            (Property::Orthogonality, 8),
            (Property::IdentityDimension, 10),
        ],
    },
    Criterion {
        id: 2,
        title: "stability under rectangle inflation",
        sweeps: &[(Property::StabilityInflation, 5)],
    },
    Criterion {
        id: 3,
        title: "rectangle reduction and vanishing",
        sweeps: &[
            (Property::RectangleReduction, 10),
            (Property::VanishingLr, 10),
        ],
    },
    Criterion {
        id: 4,
        title: "lr count equals Kostka-weighted Kronecker sum",
        sweeps: &[(Property::LrCharacterIdentity, 6)],
    },
    Criterion {
        id: 5,
        title: "lr count bounds the Kronecker coefficient",
        sweeps: &[(Property::LrDominatesKronecker, 6)],
    },
    Criterion {
        id: 6,
        title: "Dvir reduction",
        sweeps: &[(Property::Dvir, 7)],
    },
    Criterion {
        id: 7,
        title: "two-row closed formula",
        sweeps: &[(Property::TwoRowFormula, 12)],
    },
    Criterion {
        id: 8,
        title: "(4,2,2) closed formula",
        sweeps: &[
            (Property::FourTwoTwoFormula, 12),
            (Property::FormulaPathsAgree, 12),
        ],
    },
    Criterion {
        id: 9,
        title: "two-row tensor length bound",
        sweeps: &[(Property::TwoRowLengthBound, 10)],
    },
    Criterion {
        id: 10,
        title: "dispatcher equals direct",
        sweeps: &[(Property::Dispatcher, 8)],
    },
];

fn run(c: &Criterion) -> bool {
    let reports: Vec<PropertyReport> = c.sweeps.iter().map(|&(p, m)| p.run(m)).collect();
    // A sweep in which nothing met the hypotheses proves nothing.
    let ok = reports.iter().all(|r| r.passed() && r.applied > 0);
    println!(
        "criterion {:>2} {}: {}",
        c.id,
        if ok { "PASS" } else { "FAIL" },
        c.title
    );
    for r in &reports {
        println!("    {r}");
    }
    ok
}

fn main() {
    let failed: Vec<u32> = CRITERIA.iter().filter(|c| !run(c)).map(|c| c.id).collect();
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed.len(),
        CRITERIA.len()
    );
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
