//! Exhaustive verification sweeps.
//!
//! Each [`Property`] checks one identity against the character-sum oracle
//! over every admissible instance up to a size bound. Instances are
//! checked in parallel; the reported counterexample is always the first
//! failing instance in enumeration order.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::characters::{character_table, dimension, factorial, mn_value, CycleType};
use crate::kronecker::{kron_coeff, kron_coeff_direct, kron_expand};
use crate::lr::{kostka, lr_pair_count};
use crate::partition::{partitions_of, Composition, Partition};
use crate::reductions::{
    dvir_reduce, four_two_two_formula, four_two_two_reduce, rectangle_reduce, stability_inflate,
    two_row_formula, vanishing_lr, RectangleDecision, RectangleFrame,
};

/// Groups of properties selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Stability,
    Reduction,
    Lr,
    Dvir,
    Formulas,
    Dispatch,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "oracle" => Suite::Oracle,
            "stability" => Suite::Stability,
            "reduction" => Suite::Reduction,
            "lr" => Suite::Lr,
            "dvir" => Suite::Dvir,
            "formulas" => Suite::Formulas,
            "dispatch" => Suite::Dispatch,
            "all" => Suite::All,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

/// A single checkable identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    /// Row orthogonality of the character table.
    Orthogonality,
    /// Character value at the identity equals the hook-length dimension.
    IdentityDimension,
    /// Adding frame rectangles keeps the coefficient.
    StabilityInflation,
    /// Rectangle reduction: zero branch is zero, reduced branch keeps k.
    RectangleReduction,
    /// The vanishing test implies `lr(λ, μ; ν) = 0`.
    VanishingLr,
    /// `lr(λ, μ; π) = Σ_ν K_{νπ} k(λ, μ, ν)`.
    LrCharacterIdentity,
    /// `lr(λ, μ; ν) ≥ k(λ, μ, ν)`.
    LrDominatesKronecker,
    /// Dvir's reduction equals the oracle where it applies.
    Dvir,
    /// Two-row closed formula equals the oracle.
    TwoRowFormula,
    /// `(4,2,2)` closed formula equals the oracle.
    FourTwoTwoFormula,
    /// `(4,2,2)` formula equals the two-row formula after the length-4 reduction.
    FormulaPathsAgree,
    /// Components of `χ^μ ⊗ χ^ν` for two-row `μ`, `ν` have length ≤ `|μ ∩ ν'|`.
    TwoRowLengthBound,
    /// Invariance under the six argument permutations.
    Symmetry,
    /// `k(λ, μ, ν) = k(λ', μ', ν)`.
    Conjugation,
    /// Dimension identity for every expansion.
    ExpansionDimension,
    /// Dispatcher equals the oracle.
    Dispatcher,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Orthogonality => "character-orthogonality",
            Property::IdentityDimension => "identity-value-is-dimension",
            Property::StabilityInflation => "stability-inflation",
            Property::RectangleReduction => "rectangle-reduction",
            Property::VanishingLr => "vanishing-lr",
            Property::LrCharacterIdentity => "lr-character-identity",
            Property::LrDominatesKronecker => "lr-dominates-kronecker",
            Property::Dvir => "dvir-reduction",
            Property::TwoRowFormula => "two-row-formula",
            Property::FourTwoTwoFormula => "four-two-two-formula",
            Property::FormulaPathsAgree => "formula-paths-agree",
            Property::TwoRowLengthBound => "two-row-length-bound",
            Property::Symmetry => "symmetry",
            Property::Conjugation => "conjugation",
            Property::ExpansionDimension => "expansion-dimension",
            Property::Dispatcher => "dispatcher-matches-direct",
        }
    }

    pub fn run(self, max_m: usize) -> PropertyReport {
        let (cases, applied, counterexample) = match self {
            Property::Orthogonality => check(degrees(max_m), orthogonality),
            Property::IdentityDimension => check(all_partitions(max_m), identity_dimension),
            Property::StabilityInflation => check(stability_cases(max_m), stability_case),
            Property::RectangleReduction => check(triples(max_m), rectangle_case),
            Property::VanishingLr => check(triples(max_m), vanishing_case),
            Property::LrCharacterIdentity => check(triples(max_m), lr_identity_case),
            Property::LrDominatesKronecker => check(triples(max_m), lr_inequality_case),
            Property::Dvir => check(triples(max_m), dvir_case),
            Property::TwoRowFormula => check(bounded_triples(max_m, [2, 2, 2]), two_row_case),
            Property::FourTwoTwoFormula => {
                check(bounded_triples(max_m, [4, 2, 2]), four_two_two_case)
            }
            Property::FormulaPathsAgree => check(bounded_triples(max_m, [4, 2, 2]), paths_case),
            Property::TwoRowLengthBound => check(two_row_pairs(max_m), length_bound_case),
            Property::Symmetry => check(triples(max_m), symmetry_case),
            Property::Conjugation => check(triples(max_m), conjugation_case),
            Property::ExpansionDimension => check(pairs(max_m), expansion_case),
            Property::Dispatcher => check(triples(max_m), dispatcher_case),
        };
        PropertyReport {
            property: self,
            max_m,
            cases,
            applied,
            counterexample,
        }
    }
}

impl Suite {
    pub fn properties(self) -> Vec<Property> {
        use Property::*;
        match self {
            Suite::Oracle => vec![Orthogonality, IdentityDimension],
            Suite::Stability => vec![StabilityInflation],
            Suite::Reduction => vec![RectangleReduction, VanishingLr],
            Suite::Lr => vec![LrCharacterIdentity, LrDominatesKronecker],
            Suite::Dvir => vec![Dvir],
            Suite::Formulas => vec![
                TwoRowFormula,
                FourTwoTwoFormula,
                FormulaPathsAgree,
                TwoRowLengthBound,
            ],
            Suite::Dispatch => vec![Symmetry, Conjugation, ExpansionDimension, Dispatcher],
            Suite::All => [
                Suite::Oracle,
                Suite::Stability,
                Suite::Reduction,
                Suite::Lr,
                Suite::Dvir,
                Suite::Formulas,
                Suite::Dispatch,
            ]
            .into_iter()
            .flat_map(Suite::properties)
            .collect(),
        }
    }
}

/// Result of one sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub max_m: usize,
    /// Number of instances enumerated.
    pub cases: usize,
    /// Instances that met the property's hypotheses and were compared.
    pub applied: usize,
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "PASS {} (m <= {}, {} of {} cases applicable)",
                self.property.name(),
                self.max_m,
                self.applied,
                self.cases
            ),
            Some(c) => write!(
                f,
                "FAIL {} (m <= {}): counterexample {}",
                self.property.name(),
                self.max_m,
                c
            ),
        }
    }
}

/// Runs every property of `suite` up to `max_m`.
pub fn run_suite(suite: Suite, max_m: usize) -> Vec<PropertyReport> {
    suite
        .properties()
        .into_iter()
        .map(|p| p.run(max_m))
        .collect()
}

/// `Ok(true)` when the instance was compared, `Ok(false)` when the
/// hypotheses did not hold.
type Check<T> = fn(&T) -> Result<bool, String>;

fn check<T: Sync>(items: Vec<T>, f: Check<T>) -> (usize, usize, Option<String>) {
    let results: Vec<Result<bool, String>> = items.par_iter().map(f).collect();
    let applied = results.iter().filter(|r| matches!(r, Ok(true))).count();
    let bad = results.into_iter().find_map(Result::err);
    (items.len(), applied, bad)
}

fn degrees(max_m: usize) -> Vec<usize> {
    (0..=max_m).collect()
}

fn all_partitions(max_m: usize) -> Vec<Partition> {
    (0..=max_m)
        .flat_map(|m| partitions_of(m, None, None))
        .collect()
}

type Triple = [Partition; 3];

/// Every ordered triple of partitions of `m`, for `m ≤ max_m`.
pub fn triples(max_m: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        let ps: Vec<Partition> = partitions_of(m, None, None).collect();
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    out.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    out
}

/// Ordered triples with `ℓ` bounded per position.
pub fn bounded_triples(max_m: usize, lengths: [usize; 3]) -> Vec<Triple> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        let sets = lengths.map(|l| partitions_of(m, Some(l), None).collect::<Vec<_>>());
        for a in &sets[0] {
            for b in &sets[1] {
                for c in &sets[2] {
                    out.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    out
}

fn pairs(max_m: usize) -> Vec<[Partition; 2]> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        let ps: Vec<Partition> = partitions_of(m, None, None).collect();
        for a in &ps {
            for b in &ps {
                out.push([a.clone(), b.clone()]);
            }
        }
    }
    out
}

fn two_row_pairs(max_m: usize) -> Vec<[Partition; 2]> {
    pairs(max_m)
        .into_iter()
        .filter(|[a, b]| a.len() == 2 && b.len() == 2)
        .collect()
}

fn show(t: &[Partition]) -> String {
    let inner: Vec<String> = t.iter().map(|p| format!("({p})")).collect();
    format!("[{}]", inner.join(", "))
}

fn err<E: fmt::Display>(t: &[Partition]) -> impl Fn(E) -> String + '_ {
    move |e| format!("{}: {e}", show(t))
}

fn direct(t: &[Partition]) -> Result<BigUint, String> {
    kron_coeff_direct(&t[0], &t[1], &t[2]).map_err(err(t))
}

fn orthogonality(n: &usize) -> Result<bool, String> {
    let table = character_table(*n);
    let nf = BigInt::from(factorial(*n));
    let k = table.classes().len();
    for i in 0..k {
        for j in i..k {
            let s: BigInt = table
                .class_sizes()
                .iter()
                .zip(table.row(i).iter().zip(table.row(j)))
                .map(|(c, (a, b))| BigInt::from(c.clone()) * a * b)
                .sum();
            let want = if i == j { nf.clone() } else { BigInt::zero() };
            if s != want {
                return Err(format!(
                    "n={n}: rows ({}) and ({}) give {s}",
                    table.classes()[i],
                    table.classes()[j]
                ));
            }
        }
    }
    Ok(true)
}

fn identity_dimension(lam: &Partition) -> Result<bool, String> {
    let v = mn_value(lam, &CycleType::identity(lam.size())).map_err(|e| e.to_string())?;
    if v != BigInt::from(dimension(lam)) {
        return Err(format!("({lam}): χ(1) = {v}, f = {}", dimension(lam)));
    }
    Ok(true)
}

/// Frames with `p = q·r ≤ 6` and `t ∈ {1, 2}`.
pub fn small_frames() -> Vec<RectangleFrame> {
    let mut out = Vec::new();
    for q in 1..=6 {
        for r in 1..=6 {
            if q * r <= 6 {
                for t in 1..=2 {
                    out.push(RectangleFrame { p: q * r, q, r, t });
                }
            }
        }
    }
    out
}

fn stability_cases(max_m: usize) -> Vec<(Triple, RectangleFrame)> {
    let frames = small_frames();
    triples(max_m)
        .into_iter()
        .flat_map(|t| {
            frames
                .iter()
                .filter(|f| t[0].len() <= f.p && t[1].len() <= f.q && t[2].len() <= f.r)
                .map(|&f| (t.clone(), f))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn stability_case((t, frame): &(Triple, RectangleFrame)) -> Result<bool, String> {
    let big = stability_inflate(&t[0], &t[1], &t[2], *frame).map_err(err(t))?;
    let (a, b) = (direct(t)?, direct(&big)?);
    if a != b {
        return Err(format!(
            "{} with {frame}: {a} vs inflated {} = {b}",
            show(t),
            show(&big)
        ));
    }
    Ok(true)
}

fn rectangle_case(t: &Triple) -> Result<bool, String> {
    match rectangle_reduce(&t[0], &t[1], &t[2]).map_err(err(t))? {
        RectangleDecision::NotApplicable => Ok(false),
        RectangleDecision::Zero { frame, .. } => {
            let k = direct(t)?;
            if k.is_zero() {
                Ok(true)
            } else {
                Err(format!("{} zero by {frame} but k = {k}", show(t)))
            }
        }
        RectangleDecision::Reduced { triple, frame, .. } => {
            let (a, b) = (direct(t)?, direct(&triple)?);
            if a == b {
                Ok(true)
            } else {
                Err(format!(
                    "{} reduced by {frame} to {}: {a} vs {b}",
                    show(t),
                    show(&triple)
                ))
            }
        }
    }
}

fn vanishing_case(t: &Triple) -> Result<bool, String> {
    let (p, q, r) = (t[0].len(), t[1].len(), t[2].len());
    if p != q * r {
        return Ok(false);
    }
    if !vanishing_lr(&t[0], &t[1], &t[2]).map_err(err(t))? {
        return Ok(false);
    }
    let lr = lr_pair_count(&t[0], &t[1], &Composition::from(&t[2])).map_err(err(t))?;
    if !lr.is_zero() {
        return Err(format!("{} vanishing test holds but lr = {lr}", show(t)));
    }
    Ok(true)
}

// Triples are read as (λ, μ, π).
fn lr_identity_case(t: &Triple) -> Result<bool, String> {
    let pi = Composition::from(&t[2]);
    let lhs = lr_pair_count(&t[0], &t[1], &pi).map_err(err(t))?;
    let mut rhs = BigUint::zero();
    for nu in partitions_of(t[2].size(), None, None) {
        let k = kostka(&nu, &pi).map_err(err(t))?;
        if !k.is_zero() {
            rhs += k * direct(&[t[0].clone(), t[1].clone(), nu])?;
        }
    }
    if lhs != rhs {
        return Err(format!("{}: lr = {lhs}, Σ K·k = {rhs}", show(t)));
    }
    Ok(true)
}

fn lr_inequality_case(t: &Triple) -> Result<bool, String> {
    let lr = lr_pair_count(&t[0], &t[1], &Composition::from(&t[2])).map_err(err(t))?;
    let k = direct(t)?;
    if lr < k {
        return Err(format!("{}: lr = {lr} < k = {k}", show(t)));
    }
    Ok(true)
}

fn dvir_case(t: &Triple) -> Result<bool, String> {
    match dvir_reduce(&t[0], &t[1], &t[2]).map_err(err(t))? {
        None => Ok(false),
        Some(v) => {
            let k = direct(t)?;
            if v == k {
                Ok(true)
            } else {
                Err(format!("{}: dvir {v} vs direct {k}", show(t)))
            }
        }
    }
}

fn two_row_case(t: &Triple) -> Result<bool, String> {
    let f = two_row_formula(&t[0], &t[1], &t[2]).map_err(err(t))?;
    let k = direct(t)?;
    if f.value != k {
        return Err(format!(
            "{}: formula {} (x={}, y={}) vs direct {k}",
            show(t),
            f.value,
            f.x,
            f.y
        ));
    }
    Ok(true)
}

/// Hypotheses of the `(4,2,2)` formula: `λ₃ = λ₄`, `2λ₃ ≤ min(μ₂, ν₂)`.
pub fn four_two_two_admissible(t: &Triple) -> bool {
    let l3 = t[0].part(2);
    t[0].len() <= 4
        && t[1].len() <= 2
        && t[2].len() <= 2
        && l3 == t[0].part(3)
        && 2 * l3 <= t[1].part(1).min(t[2].part(1))
}

fn four_two_two_case(t: &Triple) -> Result<bool, String> {
    if !four_two_two_admissible(t) {
        return Ok(false);
    }
    let f = four_two_two_formula(&t[0], &t[1], &t[2]).map_err(err(t))?;
    let k = direct(t)?;
    if f.value != k {
        return Err(format!(
            "{}: formula {} (x={}, y={}, z={:?}, case {:?}) vs direct {k}",
            show(t),
            f.value,
            f.x,
            f.y,
            f.z,
            f.case
        ));
    }
    Ok(true)
}

fn paths_case(t: &Triple) -> Result<bool, String> {
    if !four_two_two_admissible(t) || t[0].len() != 4 || t[1].len() != 2 || t[2].len() != 2 {
        return Ok(false);
    }
    let f = four_two_two_formula(&t[0], &t[1], &t[2]).map_err(err(t))?;
    let reduced = four_two_two_reduce(&t[0], &t[1], &t[2]).map_err(err(t))?;
    let via = match reduced {
        RectangleDecision::Zero { .. } => BigUint::zero(),
        RectangleDecision::Reduced { triple, .. } => {
            two_row_formula(&triple[0], &triple[1], &triple[2])
                .map_err(err(t))?
                .value
        }
        RectangleDecision::NotApplicable => return Ok(false),
    };
    if f.value != via {
        return Err(format!(
            "{}: (4,2,2) formula {} vs reduced two-row {via}",
            show(t),
            f.value
        ));
    }
    Ok(true)
}

fn length_bound_case([mu, nu]: &[Partition; 2]) -> Result<bool, String> {
    let bound = mu.intersect(&nu.conjugate()).size();
    if bound > 4 {
        return Err(format!("({mu}), ({nu}): |μ ∩ ν'| = {bound} > 4"));
    }
    let e = kron_expand(mu, nu).map_err(|e| e.to_string())?;
    match e.terms().iter().find(|(lam, _)| lam.len() > bound) {
        None => Ok(true),
        Some((lam, k)) => Err(format!(
            "({mu}) ⊗ ({nu}) contains ({lam}) x{k}, bound {bound}"
        )),
    }
}

fn symmetry_case(t: &Triple) -> Result<bool, String> {
    let k = direct(t)?;
    for [a, b, c] in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let u = [t[a].clone(), t[b].clone(), t[c].clone()];
        if direct(&u)? != k {
            return Err(format!("{} vs {}", show(t), show(&u)));
        }
    }
    Ok(true)
}

fn conjugation_case(t: &Triple) -> Result<bool, String> {
    let u = [t[0].conjugate(), t[1].conjugate(), t[2].clone()];
    if direct(t)? != direct(&u)? {
        return Err(format!("{} vs {}", show(t), show(&u)));
    }
    Ok(true)
}

fn expansion_case([a, b]: &[Partition; 2]) -> Result<bool, String> {
    let e = kron_expand(a, b).map_err(|e| e.to_string())?;
    if e.total_dimension() != dimension(a) * dimension(b) {
        return Err(format!("({a}) ⊗ ({b}): dimension mismatch"));
    }
    Ok(true)
}

fn dispatcher_case(t: &Triple) -> Result<bool, String> {
    let e = kron_coeff(&t[0], &t[1], &t[2]).map_err(err(t))?;
    let k = direct(t)?;
    if e.value != k {
        return Err(format!(
            "{}: dispatcher {} via {} vs direct {k}",
            show(t),
            e.value,
            e.method
        ));
    }
    if !e.trace.is_linked() || e.trace.value() != Some(&e.value) {
        return Err(format!(
            "{}: malformed trace {}",
            show(t),
            e.trace.to_json()
        ));
    }
    Ok(true)
}
