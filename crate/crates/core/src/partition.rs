//! Partitions, compositions, rectangles and skew diagrams.
//!
//! A [`Partition`] is stored canonically without trailing zeros, so
//! `(3,2,1)` and `(3,2,1,0,0)` are the same value. Routines that need a
//! fixed number of rows (the rectangle frames) go through
//! [`Partition::padded`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(KronError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(m)`.
    pub fn row(m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![m] }
        }
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    pub(crate) fn from_sorted_unchecked(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (zero-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The parts padded with zeros to exactly `n` entries. Panics if the
    /// partition is longer than `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(self.len() <= n, "partition longer than padding length");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (1..=width as u32)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Diagram intersection: row-wise minimum.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Adds `rect.width` to each of the first `rect.height` rows.
    pub fn add_rectangle(&self, rect: Rectangle) -> Result<Partition> {
        if self.len() > rect.height {
            return Err(self.rect_error(rect, "more rows than the rectangle height"));
        }
        let parts = self
            .padded(rect.height)
            .into_iter()
            .map(|p| p.checked_add(rect.width).ok_or(KronError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition { parts })
    }

    /// Inverse of [`Partition::add_rectangle`].
    pub fn subtract_rectangle(&self, rect: Rectangle) -> Result<Partition> {
        if self.len() > rect.height {
            return Err(self.rect_error(rect, "more rows than the rectangle height"));
        }
        let padded = self.padded(rect.height);
        if padded.iter().any(|&p| p < rect.width) {
            return Err(self.rect_error(rect, "a row is shorter than the rectangle width"));
        }
        Ok(Partition::from_sorted_unchecked(
            padded.into_iter().map(|p| p - rect.width).collect(),
        ))
    }

    fn rect_error(&self, rect: Rectangle, reason: &str) -> KronError {
        KronError::Rectangle {
            partition: self.to_string(),
            width: rect.width,
            height: rect.height,
            reason: reason.to_string(),
        }
    }

    /// The skew diagram `self / inner`.
    pub fn skew(&self, inner: &Partition) -> Result<SkewShape> {
        SkewShape::new(self.clone(), inner.clone())
    }

    /// Hook lengths in row-major order.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.part(j) - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Whether `self` dominates `other` (both of the same size).
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Sign of a permutation with this cycle type: `(-1)^(n - ℓ)`.
    pub fn cycle_sign(&self) -> i32 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_partition(self))
    }
}

impl FromStr for Partition {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = KronError;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Parses `"a,b,c"`, optionally wrapped in `()` or `[]`.
/// The empty string (or `()`, `[]`) is the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let err = |reason: &str| KronError::Parse {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        body = inner.trim();
    } else if let Some(inner) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
        body = inner.trim();
    }
    if body.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = body
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|e| err(&format!("{:?}: {}", tok.trim(), e)))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// Canonical comma form, no brackets, no trailing zeros.
pub fn format_partition(p: &Partition) -> String {
    p.parts
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A sequence of positive integers with a fixed sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(KronError::Parse {
                input: format!("{parts:?}"),
                reason: "composition parts must be positive".into(),
            });
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut v = self.parts.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted_unchecked(v)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts.clone(),
        }
    }
}

/// The rectangle `(t)^n`: `n` rows of width `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rectangle {
    pub width: u32,
    pub height: usize,
}

impl Rectangle {
    pub fn new(width: u32, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(KronError::Rectangle {
                partition: String::new(),
                width,
                height,
                reason: "rectangle sides must be positive".into(),
            });
        }
        Ok(Rectangle { width, height })
    }

    pub fn as_partition(&self) -> Partition {
        Partition {
            parts: vec![self.width; self.height],
        }
    }
}

/// The skew diagram `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(KronError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells `(row, col)`, zero-based, row by row left to right.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size());
        for (i, &row) in self.outer.parts.iter().enumerate() {
            for j in self.inner.part(i) as usize..row as usize {
                cells.push((i, j));
            }
        }
        cells
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// Partitions of `m` in reverse lexicographic order, with optional bounds
/// on the number of parts and on the largest part.
pub fn partitions_of(m: usize, max_length: Option<usize>, max_part: Option<u32>) -> Partitions {
    let cap = max_part.map_or(m as u32, |c| c.min(m as u32));
    let current = greedy_fill(Vec::new(), m as u32, cap, max_length);
    Partitions {
        current,
        max_length,
    }
}

/// Iterator returned by [`partitions_of`].
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
    max_length: Option<usize>,
}

// Lexicographically largest completion of `prefix` by `rem` more boxes with
// parts at most `cap`.
fn greedy_fill(
    mut prefix: Vec<u32>,
    mut rem: u32,
    cap: u32,
    max_length: Option<usize>,
) -> Option<Vec<u32>> {
    if rem > 0 && cap == 0 {
        return None;
    }
    if let Some(l) = max_length {
        let slots = l.checked_sub(prefix.len())? as u64;
        if rem as u64 > slots * cap as u64 {
            return None;
        }
    }
    while rem > 0 {
        let p = rem.min(cap);
        prefix.push(p);
        rem -= p;
    }
    Some(prefix)
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let mut tail = 0u32;
        for i in (0..cur.len()).rev() {
            let v = cur[i];
            if v > 1 {
                let mut prefix = cur[..i].to_vec();
                prefix.push(v - 1);
                if let Some(next) = greedy_fill(prefix, tail + 1, v - 1, self.max_length) {
                    self.current = Some(next);
                    break;
                }
            }
            tail += v;
        }
        Some(Partition { parts: cur })
    }
}

/// Classical partition numbers via the pentagonal recurrence.
pub fn partition_count(m: usize) -> u128 {
    let mut p = vec![0u128; m + 1];
    p[0] = 1;
    for i in 1..=m {
        let mut acc: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[i - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                acc += sign * p[i - g2] as i128;
            }
        }
        p[i] = acc as u128;
    }
    p[m]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn conjugate_is_involution() {
        for m in 0..=12 {
            for lam in partitions_of(m, None, None) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().size(), m);
            }
        }
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(p("3,1").intersect(&p("2,2")), p("2,1"));
        assert_eq!(p("4,2,1").intersect(&p("4,2,1")), p("4,2,1"));
        assert_eq!(p("2,2").intersect(&p("2,2").conjugate()), p("2,2"));
        assert_eq!(p("3").intersect(&p("1,1,1")), p("1"));
    }

    #[test]
    fn intersect_laws() {
        let all: Vec<_> = (0..=6).flat_map(|m| partitions_of(m, None, None)).collect();
        for a in &all {
            for b in &all {
                let ab = a.intersect(b);
                assert_eq!(ab, b.intersect(a));
                assert!(a.contains(&ab) && b.contains(&ab));
            }
        }
    }

    #[test]
    fn rectangles() {
        let r = |t, n| Rectangle::new(t, n).unwrap();
        assert_eq!(p("2,1").add_rectangle(r(1, 4)).unwrap(), p("3,2,1,1"));
        assert_eq!(Partition::empty().add_rectangle(r(2, 2)).unwrap(), p("2,2"));
        assert_eq!(p("1,1").add_rectangle(r(3, 2)).unwrap(), p("4,4"));
        assert!(p("1,1,1").add_rectangle(r(1, 2)).is_err());

        assert_eq!(p("3,2,1,1").subtract_rectangle(r(1, 4)).unwrap(), p("2,1"));
        assert_eq!(
            p("2,2").subtract_rectangle(r(2, 2)).unwrap(),
            Partition::empty()
        );
        assert_eq!(p("4,3").subtract_rectangle(r(2, 2)).unwrap(), p("2,1"));
        assert!(p("3,1").subtract_rectangle(r(2, 2)).is_err());
        assert!(p("3,3,3").subtract_rectangle(r(1, 2)).is_err());
        assert!(Rectangle::new(0, 2).is_err());
        assert!(p(&u32::MAX.to_string()).add_rectangle(r(1, 1)).is_err());
    }

    #[test]
    fn rectangle_roundtrip() {
        for m in 0..=7 {
            for lam in partitions_of(m, None, None) {
                for n in lam.len().max(1)..=lam.len() + 2 {
                    for t in 1..=3 {
                        let rect = Rectangle::new(t, n).unwrap();
                        let big = lam.add_rectangle(rect).unwrap();
                        assert_eq!(big.len(), n);
                        assert_eq!(big.size(), m + (t as usize) * n);
                        assert_eq!(big.subtract_rectangle(rect).unwrap(), lam);
                    }
                }
            }
        }
    }

    #[test]
    fn skew_shapes() {
        let s = p("3,1").skew(&p("2,1")).unwrap();
        assert_eq!(s.cells(), vec![(0, 2)]);
        assert_eq!(s.size(), 1);
        assert!(p("3,1").skew(&p("3,1")).unwrap().is_empty());
        assert_eq!(p("2,2").skew(&p("2,1")).unwrap().cells(), vec![(1, 1)]);
        assert!(p("2,1").skew(&p("1,1,1")).is_err());
        for m in 0..=6 {
            for lam in partitions_of(m, None, None) {
                for k in 0..=m {
                    for d in partitions_of(k, None, None).filter(|d| lam.contains(d)) {
                        assert_eq!(lam.skew(&d).unwrap().size(), m - k);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(4, None, None).count(), 5);
        assert_eq!(
            partitions_of(0, None, None).collect::<Vec<_>>(),
            vec![Partition::empty()]
        );
        assert_eq!(
            partitions_of(5, Some(2), None).collect::<Vec<_>>(),
            vec![p("5"), p("4,1"), p("3,2")]
        );
        assert_eq!(
            partitions_of(5, None, Some(2)).collect::<Vec<_>>(),
            vec![p("2,2,1"), p("2,1,1,1"), p("1,1,1,1,1")]
        );
        assert_eq!(partitions_of(3, Some(0), None).count(), 0);
        assert_eq!(partitions_of(0, Some(0), None).count(), 1);
        let six: Vec<_> = partitions_of(6, None, None).collect();
        assert!(six.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn enumeration_counts_match_recurrence() {
        let expected = [
            1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627,
        ];
        for (m, &e) in expected.iter().enumerate() {
            assert_eq!(partition_count(m), e);
            assert_eq!(partitions_of(m, None, None).count() as u128, e);
        }
    }

    #[test]
    fn bounded_enumeration_matches_filter() {
        for m in 0..=10 {
            for l in 0..=5 {
                for c in 0..=5u32 {
                    let got: Vec<_> = partitions_of(m, Some(l), Some(c)).collect();
                    let want: Vec<_> = partitions_of(m, None, None)
                        .filter(|x| x.len() <= l && x.part(0) <= c)
                        .collect();
                    assert_eq!(got, want, "m={m} l={l} c={c}");
                }
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(p("4,2,1").parts(), &[4, 2, 1]);
        assert_eq!(p("3,2,1,0,0"), p("3,2,1"));
        assert_eq!(format_partition(&p("3,2,1,0,0")), "3,2,1");
        assert_eq!(p("[3, 1]"), p("3,1"));
        assert_eq!(p("(2,2)"), p("2,2"));
        assert_eq!(p(""), Partition::empty());
        assert!(matches!(
            "1,3".parse::<Partition>(),
            Err(KronError::NotDecreasing(_))
        ));
        assert!(matches!(
            "1,x".parse::<Partition>(),
            Err(KronError::Parse { .. })
        ));
        assert!(matches!(
            "-1".parse::<Partition>(),
            Err(KronError::Parse { .. })
        ));
    }

    #[test]
    fn hooks_and_dominance() {
        assert_eq!(p("2,1").hooks(), vec![3, 1, 1]);
        assert_eq!(p("2,2").hooks(), vec![3, 2, 2, 1]);
        assert!(p("3,1").dominates(&p("2,2")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert_eq!(p("2,1").cycle_sign(), -1);
        assert_eq!(p("3").cycle_sign(), 1);
    }

    #[test]
    fn composition_sorting() {
        let c = Composition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(c.sorted(), p("3,2,1"));
        assert_eq!(c.size(), 6);
        assert!(Composition::new(vec![1, 0]).is_err());
    }
}
