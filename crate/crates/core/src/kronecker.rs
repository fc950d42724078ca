//! Kronecker coefficients: the character-sum oracle, full expansions, and
//! the dispatcher that routes a triple through the reductions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::characters::{character_table, dimension, factorial};
use crate::error::{KronError, Result};
use crate::partition::{partitions_of, Partition};
use crate::reductions::{
    dvir_reduce, four_two_two_formula, four_two_two_reduce, rectangle_reduce, two_row_formula,
    FormulaValue, Intermediates, RectangleDecision, ReductionTrace, StepKind, TraceStep, Triple,
};

fn check_sizes(triple: [&Partition; 3]) -> Result<usize> {
    let sizes: Vec<usize> = triple.iter().map(|p| p.size()).collect();
    if sizes[0] != sizes[1] || sizes[1] != sizes[2] {
        return Err(KronError::SizeMismatch(sizes));
    }
    Ok(sizes[0])
}

/// `k(λ,μ,ν) = (1/m!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`.
pub fn kron_coeff_direct(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let m = check_sizes([lambda, mu, nu])?;
    let table = character_table(m);
    let rows = [lambda, mu, nu].map(|p| table.row(table.index_of(p).expect("partition of m")));
    let mut sum = BigInt::zero();
    for (c, class_size) in table.class_sizes().iter().enumerate() {
        let prod = &rows[0][c] * &rows[1][c] * &rows[2][c];
        if !prod.is_zero() {
            sum += BigInt::from(class_size.clone()) * prod;
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(factorial(m)));
    if !r.is_zero() {
        return Err(KronError::Inexact(m));
    }
    if q.is_negative() {
        return Err(KronError::Negative(format!(
            "k({lambda}; {mu}; {nu}) = {q}"
        )));
    }
    Ok(q.magnitude().clone())
}

/// `χ^λ ⊗ χ^μ = Σ_ν k(λ,μ,ν) χ^ν`. Only nonzero multiplicities are kept,
/// `ν` in reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerExpansion {
    degree: usize,
    terms: Vec<(Partition, BigUint)>,
}

impl KroneckerExpansion {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[(Partition, BigUint)] {
        &self.terms
    }

    /// Multiplicity of `χ^ν`; zero for omitted `ν`.
    pub fn get(&self, nu: &Partition) -> BigUint {
        self.terms
            .iter()
            .find(|(p, _)| p == nu)
            .map(|(_, k)| k.clone())
            .unwrap_or_default()
    }

    /// `Σ_ν k·f^ν`.
    pub fn total_dimension(&self) -> BigUint {
        self.terms.iter().map(|(nu, k)| dimension(nu) * k).sum()
    }
}

/// Expansion of `χ^λ ⊗ χ^μ`, one oracle evaluation per `ν` (in parallel).
pub fn kron_expand(lambda: &Partition, mu: &Partition) -> Result<KroneckerExpansion> {
    if lambda.size() != mu.size() {
        return Err(KronError::SizeMismatch(vec![lambda.size(), mu.size()]));
    }
    let m = lambda.size();
    let nus: Vec<Partition> = partitions_of(m, None, None).collect();
    let values = nus
        .par_iter()
        .map(|nu| kron_coeff_direct(lambda, mu, nu))
        .collect::<Result<Vec<_>>>()?;
    let terms = nus
        .into_iter()
        .zip(values)
        .filter(|(_, k)| !k.is_zero())
        .collect();
    Ok(KroneckerExpansion { degree: m, terms })
}

/// Sort key used by the dispatcher: longer first, then reverse
/// lexicographic.
pub fn canonical_cmp(a: &Partition, b: &Partition) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| b.cmp(a))
}

/// The triple sorted by [`canonical_cmp`].
pub fn canonical_triple(lambda: &Partition, mu: &Partition, nu: &Partition) -> Triple {
    let mut t = [lambda.clone(), mu.clone(), nu.clone()];
    t.sort_by(canonical_cmp);
    t
}

/// How the dispatcher is allowed to evaluate a coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Direct,
    Dvir,
    Formula,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Method::Auto),
            "direct" => Ok(Method::Direct),
            "dvir" => Ok(Method::Dvir),
            "formula" => Ok(Method::Formula),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// Which route produced a value; derived from the final trace step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodTag {
    Direct,
    Reduced,
    FormulaTwoRow,
    FormulaFourTwoTwo,
    Vanishing,
    Dvir,
}

impl MethodTag {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodTag::Direct => "direct",
            MethodTag::Reduced => "reduced",
            MethodTag::FormulaTwoRow => "formula-2row",
            MethodTag::FormulaFourTwoTwo => "formula-422",
            MethodTag::Vanishing => "vanishing",
            MethodTag::Dvir => "dvir",
        }
    }

    /// Tag for a finished trace. A direct evaluation after at least one
    /// rectangle reduction counts as `reduced`.
    pub fn of_trace(trace: &ReductionTrace) -> Option<MethodTag> {
        let last = trace.last()?;
        Some(match last.kind {
            StepKind::LrVanishing => MethodTag::Vanishing,
            StepKind::TwoRowFormula => MethodTag::FormulaTwoRow,
            StepKind::FourTwoTwoFormula => MethodTag::FormulaFourTwoTwo,
            StepKind::Dvir => MethodTag::Dvir,
            StepKind::Direct => {
                let reduced = trace.steps().iter().any(|s| {
                    matches!(
                        s.kind,
                        StepKind::RectangleReduction | StepKind::FourTwoTwoReduction
                    )
                });
                if reduced {
                    MethodTag::Reduced
                } else {
                    MethodTag::Direct
                }
            }
            _ => return None,
        })
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A coefficient with the steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub value: BigUint,
    pub method: MethodTag,
    pub trace: ReductionTrace,
}

struct Tracer {
    trace: ReductionTrace,
    current: Triple,
}

impl Tracer {
    fn new(start: Triple) -> Self {
        Tracer {
            trace: ReductionTrace::new(),
            current: start,
        }
    }

    fn step(&mut self, kind: StepKind, after: Triple) -> &mut TraceStep {
        let before = std::mem::replace(&mut self.current, after.clone());
        self.trace.push(TraceStep {
            kind,
            frame: None,
            intermediates: None,
            before,
            after,
            value: None,
        });
        last_step(&mut self.trace)
    }

    fn finish(mut self, kind: StepKind, value: BigUint, after: Triple) -> Evaluation {
        self.step(kind, after).value = Some(value.clone());
        let method = MethodTag::of_trace(&self.trace).expect("terminal step");
        Evaluation {
            value,
            method,
            trace: self.trace,
        }
    }

    fn finish_formula(self, kind: StepKind, f: FormulaValue) -> Evaluation {
        let after = f.roles.map(|i| self.current[i].clone());
        let mut eval = self.finish(kind, f.value.clone(), after);
        let last = last_step(&mut eval.trace);
        last.intermediates = Some(Intermediates {
            x: f.x,
            y: f.y,
            z: f.z,
            case: f.case,
        });
        eval
    }
}

fn last_step(trace: &mut ReductionTrace) -> &mut TraceStep {
    trace.last_mut().expect("non-empty trace")
}

fn lengths_at_most_two(t: &Triple) -> bool {
    t.iter().all(|p| p.len() <= 2)
}

/// First role assignment `(λ, μ, ν)` accepted by the `(4,2,2)` formula.
fn try_four_two_two(t: &Triple) -> Option<FormulaValue> {
    for a in 0..3 {
        let (b, c) = ((a + 1) % 3, (a + 2) % 3);
        let (b, c) = (b.min(c), b.max(c));
        if let Ok(mut f) = four_two_two_formula(&t[a], &t[b], &t[c]) {
            let local = f.roles;
            let map = [a, b, c];
            f.roles = local.map(|i| map[i]);
            return Some(f);
        }
    }
    None
}

/// `k(λ,μ,ν)` through the reduction pipeline: canonical sort, vanishing,
/// repeated rectangle reduction, closed formulas, then the direct oracle.
pub fn kron_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Evaluation> {
    kron_coeff_with(lambda, mu, nu, Method::Auto)
}

/// Like [`kron_coeff`] but restricted to one route. Routes that do not
/// apply to the triple return [`KronError::NotApplicable`].
pub fn kron_coeff_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    method: Method,
) -> Result<Evaluation> {
    check_sizes([lambda, mu, nu])?;
    let input: Triple = [lambda.clone(), mu.clone(), nu.clone()];
    match method {
        Method::Direct => {
            let v = kron_coeff_direct(lambda, mu, nu)?;
            Ok(Tracer::new(input.clone()).finish(StepKind::Direct, v, input))
        }
        Method::Dvir => dispatch_dvir(input),
        Method::Formula => dispatch_formula(input),
        Method::Auto => dispatch_auto(input),
    }
}

fn dispatch_auto(input: Triple) -> Result<Evaluation> {
    let mut tr = Tracer::new(input.clone());
    let sorted = canonical_triple(&input[0], &input[1], &input[2]);
    tr.step(StepKind::CanonicalSort, sorted);
    loop {
        let [a, b, c] = &tr.current;
        match rectangle_reduce(a, b, c)? {
            RectangleDecision::Zero { frame, roles } => {
                let after = roles.map(|i| tr.current[i].clone());
                let mut eval = tr.finish(StepKind::LrVanishing, BigUint::zero(), after);
                last_step(&mut eval.trace).frame = Some(frame);
                return Ok(eval);
            }
            RectangleDecision::Reduced { triple, frame, .. } => {
                tr.step(StepKind::RectangleReduction, triple).frame = Some(frame);
                let [a, b, c] = &tr.current;
                let sorted = canonical_triple(a, b, c);
                if sorted != tr.current {
                    tr.step(StepKind::CanonicalSort, sorted);
                }
            }
            RectangleDecision::NotApplicable => break,
        }
    }
    if lengths_at_most_two(&tr.current) {
        let [a, b, c] = &tr.current;
        let f = two_row_formula(a, b, c)?;
        return Ok(tr.finish_formula(StepKind::TwoRowFormula, f));
    }
    if let Some(f) = try_four_two_two(&tr.current) {
        return Ok(tr.finish_formula(StepKind::FourTwoTwoFormula, f));
    }
    let [a, b, c] = &tr.current;
    let v = kron_coeff_direct(a, b, c)?;
    let after = tr.current.clone();
    Ok(tr.finish(StepKind::Direct, v, after))
}

fn dispatch_formula(input: Triple) -> Result<Evaluation> {
    let mut tr = Tracer::new(input.clone());
    if lengths_at_most_two(&input) {
        let f = two_row_formula(&input[0], &input[1], &input[2])?;
        return Ok(tr.finish_formula(StepKind::TwoRowFormula, f));
    }
    if let Some(f) = try_four_two_two(&input) {
        return Ok(tr.finish_formula(StepKind::FourTwoTwoFormula, f));
    }
    // Outside the (4,2,2) formula's hypotheses, reduce by the length-4
    // rectangle and finish with the two-row formula when possible.
    let mut lens_order = [0usize, 1, 2];
    lens_order.sort_by_key(|&i| std::cmp::Reverse(input[i].len()));
    let ordered = lens_order.map(|i| input[i].clone());
    if ordered.iter().map(Partition::len).collect::<Vec<_>>() == [4, 2, 2] {
        if ordered != input {
            tr.step(StepKind::CanonicalSort, ordered.clone());
        }
        match four_two_two_reduce(&ordered[0], &ordered[1], &ordered[2])? {
            RectangleDecision::Zero { frame, .. } => {
                let mut eval = tr.finish(StepKind::LrVanishing, BigUint::zero(), ordered);
                last_step(&mut eval.trace).frame = Some(frame);
                return Ok(eval);
            }
            RectangleDecision::Reduced { triple, frame, .. } => {
                if lengths_at_most_two(&triple) {
                    tr.step(StepKind::FourTwoTwoReduction, triple.clone()).frame = Some(frame);
                    let f = two_row_formula(&triple[0], &triple[1], &triple[2])?;
                    return Ok(tr.finish_formula(StepKind::TwoRowFormula, f));
                }
            }
            RectangleDecision::NotApplicable => {}
        }
    }
    Err(KronError::NotApplicable(format!(
        "no closed formula covers ({}; {}; {})",
        input[0], input[1], input[2]
    )))
}

fn dispatch_dvir(input: Triple) -> Result<Evaluation> {
    const ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    for order in ORDERS {
        let t = order.map(|i| input[i].clone());
        if let Some(v) = dvir_reduce(&t[0], &t[1], &t[2])? {
            return Ok(Tracer::new(input.clone()).finish(StepKind::Dvir, v, t));
        }
    }
    Err(KronError::NotApplicable(format!(
        "no arrangement of ({}; {}; {}) has ℓ(ν) = |λ ∩ μ'|",
        input[0], input[1], input[2]
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn n(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn direct_examples() {
        for m in 0..=6u32 {
            let r = Partition::row(m);
            assert_eq!(kron_coeff_direct(&r, &r, &r).unwrap(), n(1));
        }
        for lam in partitions_of(5, None, None) {
            for mu in partitions_of(5, None, None) {
                let k = kron_coeff_direct(&lam, &mu, &p("5")).unwrap();
                assert_eq!(k, n((lam == mu) as u32));
            }
        }
        assert_eq!(
            kron_coeff_direct(&p("2,1"), &p("2,1"), &p("2,1")).unwrap(),
            n(1)
        );
        assert!(matches!(
            kron_coeff_direct(&p("2,1"), &p("2"), &p("2,1")),
            Err(KronError::SizeMismatch(_))
        ));
    }

    #[test]
    fn expansion_examples() {
        let e = kron_expand(&p("2,2"), &p("2,2")).unwrap();
        assert_eq!(
            e.terms(),
            &[(p("4"), n(1)), (p("2,2"), n(1)), (p("1,1,1,1"), n(1))]
        );
        assert_eq!(e.total_dimension(), n(4));

        let e = kron_expand(&p("5"), &p("3,1,1")).unwrap();
        assert_eq!(e.terms(), &[(p("3,1,1"), n(1))]);

        let e = kron_expand(&p("3,3"), &p("3,3")).unwrap();
        let bound = p("3,3").intersect(&p("3,3").conjugate()).size();
        assert_eq!(bound, 4);
        assert!(e.terms().iter().all(|(nu, _)| nu.len() <= bound));
        assert_eq!(e.get(&p("6")), n(1));
        assert_eq!(e.get(&p("1,1,1,1,1,1")), n(0));
        assert!(kron_expand(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn dimension_identity() {
        for m in 0..=6 {
            for lam in partitions_of(m, None, None) {
                for mu in partitions_of(m, None, None) {
                    let e = kron_expand(&lam, &mu).unwrap();
                    assert_eq!(e.total_dimension(), dimension(&lam) * dimension(&mu));
                }
            }
        }
    }

    #[test]
    fn dispatcher_examples() {
        let e = kron_coeff(&p("2,2,2,2"), &p("5,3"), &p("4,4")).unwrap();
        assert_eq!((e.value.clone(), e.method), (n(0), MethodTag::Vanishing));
        assert!(e.trace.is_linked());

        let e = kron_coeff(&p("2,2,2,2"), &p("4,4"), &p("4,4")).unwrap();
        assert_eq!(e.value, n(1));
        // reduced to the empty triple, which the two-row formula evaluates
        assert_eq!(e.method, MethodTag::FormulaTwoRow);
        assert_eq!(e.trace.steps()[1].kind, StepKind::RectangleReduction);
        assert!(e.trace.is_linked());

        let e = kron_coeff(&p("3,2,1"), &p("3,2,1"), &p("3,2,1")).unwrap();
        assert_eq!((e.value, e.method), (n(5), MethodTag::Direct));

        let e = kron_coeff(&p("2,2,1,1"), &p("2,2,1,1"), &p("3,3")).unwrap();
        assert_eq!(
            e.value,
            kron_coeff_direct(&p("2,2,1,1"), &p("2,2,1,1"), &p("3,3")).unwrap()
        );

        let e = kron_coeff(&p("3,2,1,1"), &p("4,3"), &p("4,3")).unwrap();
        assert_eq!(e.value, n(1));
        assert!(e
            .trace
            .steps()
            .iter()
            .any(|s| s.kind == StepKind::RectangleReduction));
    }

    #[test]
    fn forced_methods() {
        let e = kron_coeff_with(&p("4,2"), &p("4,2"), &p("4,2"), Method::Formula).unwrap();
        assert_eq!(e.value, n(2));
        let i = e.trace.last().unwrap().intermediates.clone().unwrap();
        assert_eq!((i.x, i.y), (0, 2));

        let e = kron_coeff_with(&p("4,3"), &p("3,2,1,1"), &p("4,3"), Method::Formula).unwrap();
        assert_eq!(
            (e.value.clone(), e.method),
            (n(1), MethodTag::FormulaFourTwoTwo)
        );
        assert_eq!(e.trace.last().unwrap().after[0], p("3,2,1,1"));

        // 2λ₃ ≤ ν₂ fails; the length-4 reduction certifies zero
        let e = kron_coeff_with(&p("2,1,1,1"), &p("3,2"), &p("4,1"), Method::Formula).unwrap();
        assert_eq!(
            e.value,
            kron_coeff_direct(&p("2,1,1,1"), &p("3,2"), &p("4,1")).unwrap()
        );

        assert!(matches!(
            kron_coeff_with(&p("3,2,1"), &p("3,2,1"), &p("3,2,1"), Method::Formula),
            Err(KronError::NotApplicable(_))
        ));

        let e = kron_coeff_with(&p("2,1,1"), &p("3,1"), &p("2,2"), Method::Dvir).unwrap();
        assert_eq!(e.method, MethodTag::Dvir);
        assert_eq!(
            e.value,
            kron_coeff_direct(&p("2,1,1"), &p("3,1"), &p("2,2")).unwrap()
        );

        let e = kron_coeff_with(&p("2,1"), &p("2,1"), &p("2,1"), Method::Direct).unwrap();
        assert_eq!((e.value, e.method), (n(1), MethodTag::Direct));
    }

    #[test]
    fn canonical_order() {
        let t = canonical_triple(&p("4,4"), &p("2,2,2,2"), &p("5,3"));
        assert_eq!(t, [p("2,2,2,2"), p("5,3"), p("4,4")]);
    }
}
