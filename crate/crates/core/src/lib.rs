//! Exact Kronecker coefficients of symmetric-group characters.
//!
//! The [`kronecker::kron_coeff_direct`] oracle evaluates the character sum
//! `⟨χ^λ ⊗ χ^μ, χ^ν⟩` from a Murnaghan–Nakayama character table. The
//! dispatcher [`kronecker::kron_coeff`] first tries the cheaper routes in
//! [`reductions`]: rectangle stability, the multitableau vanishing test,
//! and closed formulas for short partitions. Every route is checked
//! against the oracle by the sweeps in [`verify`].

pub mod cache;
pub mod characters;
pub mod cli;
pub mod error;
pub mod kronecker;
pub mod lr;
pub mod partition;
pub mod reductions;
pub mod verify;

pub use error::{KronError, Result};
pub use kronecker::{
    kron_coeff, kron_coeff_direct, kron_coeff_with, kron_expand, Evaluation, Method, MethodTag,
};
pub use partition::{parse_partition, partitions_of, Composition, Partition, Rectangle, SkewShape};
pub use reductions::{RectangleDecision, RectangleFrame, ReductionTrace};
