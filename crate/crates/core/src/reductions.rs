//! Stability inflation, rectangle reduction, vanishing tests, Dvir's
//! reduction, and the closed formulas for two-row and `(4,2,2)`-length
//! triples.
//!
//! A rectangle frame `(p, q, r, t)` with `p = q·r` relates the triple
//! `(λ, μ, ν)` to `(λ + (t)^p, μ + (rt)^q, ν + (qt)^r)`; both have the same
//! Kronecker coefficient. Read backwards with exact lengths
//! `p = ℓ(λ)`, `q = ℓ(μ)`, `r = ℓ(ν)` and `t = λ_p`, the frame either
//! strips the rectangles off or certifies that the coefficient vanishes.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::characters::skew_character;
use crate::error::{KronError, Result};
use crate::kronecker::kron_coeff_direct;
use crate::partition::{Partition, Rectangle};

pub type Triple = [Partition; 3];

/// `p = q·r` rows and base width `t ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RectangleFrame {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub t: u32,
}

impl RectangleFrame {
    pub fn new(p: usize, q: usize, r: usize, t: u32) -> Result<Self> {
        let frame = RectangleFrame { p, q, r, t };
        if q == 0 || r == 0 || p != q * r {
            return Err(frame.error("p must equal q*r with q, r positive"));
        }
        if t == 0 {
            return Err(frame.error("t must be positive"));
        }
        Ok(frame)
    }

    fn error(&self, reason: &str) -> KronError {
        KronError::Frame {
            p: self.p,
            q: self.q,
            r: self.r,
            t: self.t,
            reason: reason.to_string(),
        }
    }

    /// The three rectangles `(t)^p`, `(rt)^q`, `(qt)^r`.
    pub fn rectangles(&self) -> Result<[Rectangle; 3]> {
        let wide = |k: usize| -> Result<u32> {
            u32::try_from(k)
                .ok()
                .and_then(|k| k.checked_mul(self.t))
                .ok_or(KronError::Overflow)
        };
        Ok([
            Rectangle::new(self.t, self.p)?,
            Rectangle::new(wide(self.r)?, self.q)?,
            Rectangle::new(wide(self.q)?, self.r)?,
        ])
    }
}

impl fmt::Display for RectangleFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} q={} r={} t={}", self.p, self.q, self.r, self.t)
    }
}

fn check_sizes(triple: [&Partition; 3]) -> Result<()> {
    let sizes: Vec<usize> = triple.iter().map(|p| p.size()).collect();
    if sizes[0] != sizes[1] || sizes[1] != sizes[2] {
        return Err(KronError::SizeMismatch(sizes));
    }
    Ok(())
}

/// Adds `(t)^p`, `(rt)^q`, `(qt)^r` to `λ`, `μ`, `ν`.
pub fn stability_inflate(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    frame: RectangleFrame,
) -> Result<Triple> {
    check_sizes([lambda, mu, nu])?;
    let frame = RectangleFrame::new(frame.p, frame.q, frame.r, frame.t)?;
    if lambda.len() > frame.p || mu.len() > frame.q || nu.len() > frame.r {
        return Err(frame.error("a partition is longer than its frame side"));
    }
    let [a, b, c] = frame.rectangles()?;
    Ok([
        lambda.add_rectangle(a)?,
        mu.add_rectangle(b)?,
        nu.add_rectangle(c)?,
    ])
}

/// Which argument plays which role: `roles[k]` is the index of the input
/// partition placed in position `k` of `(λ, μ, ν)`.
pub type Roles = [usize; 3];

/// Outcome of [`rectangle_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RectangleDecision {
    /// `μ_q < rt` or `ν_r < qt`: the coefficient is zero.
    Zero {
        frame: RectangleFrame,
        roles: Roles,
    },
    /// The triple with the rectangles removed, in role order.
    Reduced {
        triple: Triple,
        frame: RectangleFrame,
        roles: Roles,
    },
    NotApplicable,
}

/// First role assignment whose exact lengths satisfy `p = q·r`.
///
/// Candidates for the `λ` role are tried by decreasing length (ties by
/// argument position); the remaining two are ordered so that `q ≤ r`.
pub fn find_frame(triple: [&Partition; 3]) -> Option<(RectangleFrame, Roles)> {
    let mut order = [0usize, 1, 2];
    order.sort_by_key(|&i| std::cmp::Reverse(triple[i].len()));
    for &a in &order {
        let mut rest: Vec<usize> = (0..3).filter(|&i| i != a).collect();
        if triple[rest[0]].len() > triple[rest[1]].len() {
            rest.swap(0, 1);
        }
        let (p, q, r) = (
            triple[a].len(),
            triple[rest[0]].len(),
            triple[rest[1]].len(),
        );
        if p == 0 || p != q * r {
            continue;
        }
        let t = triple[a].part(p - 1);
        let frame = RectangleFrame { p, q, r, t };
        return Some((frame, [a, rest[0], rest[1]]));
    }
    None
}

/// Rectangle reduction with exact lengths and `t = λ_p`, over the role
/// assignments of [`find_frame`].
pub fn rectangle_reduce(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<RectangleDecision> {
    let input = [lambda, mu, nu];
    check_sizes(input)?;
    let Some((frame, roles)) = find_frame(input) else {
        return Ok(RectangleDecision::NotApplicable);
    };
    let [l, m, n] = roles.map(|i| input[i]);
    if vanishing_lr(l, m, n)? {
        return Ok(RectangleDecision::Zero { frame, roles });
    }
    let [a, b, c] = frame.rectangles()?;
    Ok(RectangleDecision::Reduced {
        triple: [
            l.subtract_rectangle(a)?,
            m.subtract_rectangle(b)?,
            n.subtract_rectangle(c)?,
        ],
        frame,
        roles,
    })
}

/// `μ_q < r·λ_p` or `ν_r < q·λ_p` with exact lengths `p = q·r`. When true,
/// `lr(λ, μ; ν)` and hence the Kronecker coefficient vanish.
pub fn vanishing_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    check_sizes([lambda, mu, nu])?;
    let (p, q, r) = (lambda.len(), mu.len(), nu.len());
    if p != q * r {
        return Err(KronError::Frame {
            p,
            q,
            r,
            t: lambda.part(p.saturating_sub(1)),
            reason: "lengths do not satisfy p = q*r".into(),
        });
    }
    if p == 0 {
        return Ok(false);
    }
    let t = lambda.part(p - 1) as u64;
    Ok((mu.part(q - 1) as u64) < r as u64 * t || (nu.part(r - 1) as u64) < q as u64 * t)
}

/// Dvir's reduction. Applies when `ℓ(ν) = |λ ∩ μ'|`; then with
/// `ρ = ν − (1^l)`,
/// `k(λ,μ,ν) = Σ_{σ,τ} c^λ_{(λ∩μ')σ} c^μ_{(λ'∩μ)τ} k(σ,τ,ρ)`.
pub fn dvir_reduce(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Option<BigUint>> {
    check_sizes([lambda, mu, nu])?;
    let core = lambda.intersect(&mu.conjugate());
    let l = nu.len();
    if l != core.size() {
        return Ok(None);
    }
    let rho = if l == 0 {
        Partition::empty()
    } else {
        nu.subtract_rectangle(Rectangle::new(1, l)?)?
    };
    let left = skew_character(&lambda.skew(&core)?);
    let right = skew_character(&mu.skew(&lambda.conjugate().intersect(mu))?);
    let mut total = BigUint::zero();
    for (sigma, a) in &left {
        for (tau, b) in &right {
            let k = kron_coeff_direct(sigma, tau, &rho)?;
            total += a * b * k;
        }
    }
    Ok(Some(total))
}

/// `⌈a/2⌉` for any integer `a`, as `⌊(a+1)/2⌋` with floored division.
pub fn ceil_half(a: i64) -> i64 {
    (a + 1).div_euclid(2)
}

/// Value and intermediates of a closed formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: BigUint,
    pub x: i64,
    pub y: i64,
    pub z: Option<i64>,
    /// 1 or 2 for the `(4,2,2)` formula.
    pub case: Option<u8>,
    /// Roles used, as in [`RectangleDecision`].
    pub roles: Roles,
}

fn bracket(hi: i64, lo: i64) -> BigUint {
    if hi >= lo {
        BigUint::from((hi - lo) as u64)
    } else {
        BigUint::zero()
    }
}

/// Closed formula for three partitions of length at most 2. The triple is
/// permuted so that `ν₂ ≤ μ₂ ≤ λ₂`; then
/// `x = max(0, ⌈(ν₂+μ₂+λ₂−m)/2⌉)`, `y = ⌈(ν₂+μ₂−λ₂+1)/2⌉` and the
/// coefficient is `y − x` when `y ≥ x`, else 0.
pub fn two_row_formula(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<FormulaValue> {
    let input = [lambda, mu, nu];
    check_sizes(input)?;
    if input.iter().any(|p| p.len() > 2) {
        return Err(KronError::Hypothesis(
            "two-row formula needs partitions of length at most 2".into(),
        ));
    }
    let mut roles = [0usize, 1, 2];
    roles.sort_by_key(|&i| std::cmp::Reverse(input[i].part(1)));
    let [l2, m2, n2] = roles.map(|i| input[i].part(1) as i64);
    let m = lambda.size() as i64;
    let x = ceil_half(n2 + m2 + l2 - m).max(0);
    let y = ceil_half(n2 + m2 - l2 + 1);
    Ok(FormulaValue {
        value: bracket(y, x),
        x,
        y,
        z: None,
        case: None,
        roles,
    })
}

/// Closed formula for `λ` of length at most 4 with `λ₃ = λ₄` and `μ`, `ν`
/// of length at most 2, under `2λ₃ ≤ ν₂ ≤ μ₂` (`μ` and `ν` are swapped if
/// needed). With
/// `x = max(0, ⌈(ν₂+μ₂+λ₂−λ₃−m)/2⌉)`, `y = ⌈(ν₂+λ₂−μ₂−λ₃+1)/2⌉`,
/// `z = ⌈(ν₂+μ₂−λ₂−3λ₃+1)/2⌉`, the value is `(y−x)(y≥x)` when
/// `λ₂+λ₃ ≤ μ₂` and `(z−x)(z≥x)` otherwise.
pub fn four_two_two_formula(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<FormulaValue> {
    check_sizes([lambda, mu, nu])?;
    if lambda.len() > 4 || mu.len() > 2 || nu.len() > 2 {
        return Err(KronError::Hypothesis(
            "(4,2,2) formula needs lengths at most 4, 2, 2".into(),
        ));
    }
    if lambda.part(2) != lambda.part(3) {
        return Err(KronError::Hypothesis(
            "(4,2,2) formula needs λ₃ = λ₄".into(),
        ));
    }
    let (mu, nu, roles) = if nu.part(1) <= mu.part(1) {
        (mu, nu, [0, 1, 2])
    } else {
        (nu, mu, [0, 2, 1])
    };
    let (l2, l3) = (lambda.part(1) as i64, lambda.part(2) as i64);
    let (m2, n2) = (mu.part(1) as i64, nu.part(1) as i64);
    if 2 * l3 > n2 {
        return Err(KronError::Hypothesis(
            "(4,2,2) formula needs 2λ₃ ≤ min(μ₂, ν₂)".into(),
        ));
    }
    let m = lambda.size() as i64;
    let x = ceil_half(n2 + m2 + l2 - l3 - m).max(0);
    let y = ceil_half(n2 + l2 - m2 - l3 + 1);
    let z = ceil_half(n2 + m2 - l2 - 3 * l3 + 1);
    let (value, case) = if l2 + l3 <= m2 {
        (bracket(y, x), 1)
    } else {
        (bracket(z, x), 2)
    };
    Ok(FormulaValue {
        value,
        x,
        y,
        z: Some(z),
        case: Some(case),
        roles,
    })
}

/// Rectangle reduction specialised to exact lengths `(4, 2, 2)`, `t = λ₄`.
pub fn four_two_two_reduce(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<RectangleDecision> {
    check_sizes([lambda, mu, nu])?;
    if lambda.len() != 4 || mu.len() != 2 || nu.len() != 2 {
        return Err(KronError::Hypothesis(
            "needs lengths exactly 4, 2, 2".into(),
        ));
    }
    let t = lambda.part(3);
    let frame = RectangleFrame::new(4, 2, 2, t)?;
    let roles = [0, 1, 2];
    if vanishing_lr(lambda, mu, nu)? {
        return Ok(RectangleDecision::Zero { frame, roles });
    }
    let [a, b, c] = frame.rectangles()?;
    Ok(RectangleDecision::Reduced {
        triple: [
            lambda.subtract_rectangle(a)?,
            mu.subtract_rectangle(b)?,
            nu.subtract_rectangle(c)?,
        ],
        frame,
        roles,
    })
}

/// Kinds of trace steps, serialized under `"theorem"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    CanonicalSort,
    LrVanishing,
    RectangleReduction,
    FourTwoTwoReduction,
    TwoRowFormula,
    FourTwoTwoFormula,
    Dvir,
    Direct,
}

impl StepKind {
    pub fn name(self) -> &'static str {
        match self {
            StepKind::CanonicalSort => "canonical-sort",
            StepKind::LrVanishing => "lr-vanishing",
            StepKind::RectangleReduction => "rectangle-reduction",
            StepKind::FourTwoTwoReduction => "four-two-two-reduction",
            StepKind::TwoRowFormula => "two-row-formula",
            StepKind::FourTwoTwoFormula => "four-two-two-formula",
            StepKind::Dvir => "dvir",
            StepKind::Direct => "direct",
        }
    }
}

/// Formula intermediates recorded in a trace step.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Intermediates {
    pub x: i64,
    pub y: i64,
    pub z: Option<i64>,
    pub case: Option<u8>,
}

impl Serialize for Intermediates {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("x", &self.x)?;
        map.serialize_entry("y", &self.y)?;
        if let Some(z) = self.z {
            map.serialize_entry("z", &z)?;
        }
        if let Some(c) = self.case {
            map.serialize_entry("case", &c)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    pub frame: Option<RectangleFrame>,
    pub intermediates: Option<Intermediates>,
    pub before: Triple,
    pub after: Triple,
    /// Set on the step that resolves the coefficient.
    pub value: Option<BigUint>,
}

fn big_number(v: &BigUint) -> serde_json::Value {
    match v.to_u64() {
        Some(small) => serde_json::Value::from(small),
        None => serde_json::Value::Number(
            v.to_string()
                .parse()
                .expect("decimal digits form a JSON number"),
        ),
    }
}

/// Decimal JSON number for an arbitrary precision count.
pub fn json_count(v: &BigUint) -> serde_json::Value {
    big_number(v)
}

impl Serialize for TraceStep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("theorem", self.kind.name())?;
        if let Some(f) = &self.frame {
            map.serialize_entry("frame", f)?;
        }
        if let Some(i) = &self.intermediates {
            map.serialize_entry("intermediates", i)?;
        }
        map.serialize_entry("before", &self.before)?;
        map.serialize_entry("after", &self.after)?;
        if let Some(v) = &self.value {
            map.serialize_entry("value", &big_number(v))?;
        }
        map.end()
    }
}

/// Ordered record of the steps taken to evaluate one coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ReductionTrace {
    steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub(crate) fn last_mut(&mut self) -> Option<&mut TraceStep> {
        self.steps.last_mut()
    }

    pub fn last(&self) -> Option<&TraceStep> {
        self.steps.last()
    }

    /// The value carried by the final step.
    pub fn value(&self) -> Option<&BigUint> {
        self.last()?.value.as_ref()
    }

    /// Consecutive steps are linked (`after` of one is `before` of the
    /// next), and only the final step carries a value.
    pub fn is_linked(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].after == w[1].before)
            && self.steps.iter().rev().skip(1).all(|s| s.value.is_none())
            && self.last().is_some_and(|s| s.value.is_some())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}
