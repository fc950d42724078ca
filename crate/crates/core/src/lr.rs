//! Littlewood–Richardson tableaux, multitableaux and Kostka numbers.
//!
//! LR tableaux are counted by backtracking over the cells of the skew
//! shape in reverse reading order (rows top to bottom, each row right to
//! left), so the lattice condition can be checked on every prefix.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::cache::Memo;
use crate::error::{KronError, Result};
use crate::partition::{partitions_of, Composition, Partition, SkewShape};

/// A filling of a skew shape; `rows[i]` holds the entries of row `i` from
/// left to right, starting at column `inner[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl LRTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = LRTableau { shape, rows };
        if !t.is_valid() {
            return Err(KronError::Hypothesis(format!(
                "not a Littlewood-Richardson tableau of shape {}",
                t.shape
            )));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn entry(&self, i: usize, j: usize) -> Option<u32> {
        let start = self.shape.inner().part(i) as usize;
        if j < start {
            return None;
        }
        self.rows.get(i)?.get(j - start).copied()
    }

    /// Entries read right to left, top to bottom.
    pub fn reverse_reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// Multiplicity of each entry value, as a partition if it is one.
    pub fn content(&self) -> Option<Partition> {
        let mut counts: Vec<u32> = Vec::new();
        for &v in self.rows.iter().flatten() {
            if v == 0 {
                return None;
            }
            if counts.len() < v as usize {
                counts.resize(v as usize, 0);
            }
            counts[v as usize - 1] += 1;
        }
        Partition::new(counts).ok()
    }

    /// Semistandard, lattice reading word, partition content.
    pub fn is_valid(&self) -> bool {
        let outer = self.shape.outer();
        let inner = self.shape.inner();
        let mut n_rows = self.rows.len();
        while n_rows > 0 && self.rows[n_rows - 1].is_empty() {
            n_rows -= 1;
        }
        if n_rows > outer.len() {
            return false;
        }
        for i in 0..outer.len() {
            let want = (outer.part(i) - inner.part(i)) as usize;
            if self.rows.get(i).map_or(0, Vec::len) != want {
                return false;
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            let start = inner.part(i) as usize;
            for (k, &v) in row.iter().enumerate() {
                if i > 0 {
                    if let Some(above) = self.entry(i - 1, start + k) {
                        if above >= v {
                            return false;
                        }
                    }
                }
            }
        }
        if self.content().is_none() {
            return false;
        }
        is_lattice_word(&self.reverse_reading_word())
    }
}

/// Every prefix has at least as many `i` as `i + 1`.
pub fn is_lattice_word(word: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        let v = v as usize;
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

struct Filler<'a> {
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<u32>>,
    inner: &'a Partition,
    content: &'a [u32],
    counts: Vec<u32>,
}

impl<'a> Filler<'a> {
    fn new(shape: &'a SkewShape, content: &'a Partition) -> Self {
        let outer = shape.outer();
        let mut cells = Vec::with_capacity(shape.size());
        for i in 0..outer.len() {
            for j in (shape.inner().part(i) as usize..outer.part(i) as usize).rev() {
                cells.push((i, j));
            }
        }
        Filler {
            cells,
            grid: outer.parts().iter().map(|&w| vec![0; w as usize]).collect(),
            inner: shape.inner(),
            content: content.parts(),
            counts: vec![0; content.len()],
        }
    }

    fn run(&mut self, pos: usize, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if pos == self.cells.len() {
            visit(&self.grid);
            return;
        }
        let (i, j) = self.cells[pos];
        let mut hi = self.content.len() as u32;
        if j + 1 < self.grid[i].len() {
            hi = hi.min(self.grid[i][j + 1]);
        }
        let mut lo = 1;
        if i > 0 && j >= self.inner.part(i - 1) as usize {
            lo = self.grid[i - 1][j] + 1;
        }
        for v in lo..=hi {
            let k = v as usize - 1;
            if self.counts[k] >= self.content[k] {
                continue;
            }
            if k > 0 && self.counts[k] + 1 > self.counts[k - 1] {
                continue;
            }
            self.counts[k] += 1;
            self.grid[i][j] = v;
            self.run(pos + 1, visit);
            self.grid[i][j] = 0;
            self.counts[k] -= 1;
        }
    }
}

/// Calls `visit` with every LR tableau of the given shape and content.
pub fn for_each_lr_tableau(
    shape: &SkewShape,
    content: &Partition,
    mut visit: impl FnMut(LRTableau),
) -> Result<()> {
    if shape.size() != content.size() {
        return Err(KronError::SizeMismatch(vec![shape.size(), content.size()]));
    }
    let inner = shape.inner().clone();
    Filler::new(shape, content).run(0, &mut |grid| {
        let rows = grid
            .iter()
            .enumerate()
            .map(|(i, r)| r[inner.part(i) as usize..].to_vec())
            .collect();
        visit(LRTableau {
            shape: shape.clone(),
            rows,
        })
    });
    Ok(())
}

type LrKey = (Vec<u32>, Vec<u32>, Vec<u32>);
static LR_MEMO: Lazy<Memo<LrKey, BigUint>> = Lazy::new(|| Memo::new(4));

/// Number of LR tableaux of shape `λ/δ` and content `ρ`, i.e. `c^λ_{δρ}`.
pub fn lr_coeff(shape: &SkewShape, content: &Partition) -> Result<BigUint> {
    if shape.size() != content.size() {
        return Err(KronError::SizeMismatch(vec![shape.size(), content.size()]));
    }
    // c^λ_{δρ} vanishes unless ρ ⊆ λ.
    if !shape.outer().contains(content) {
        return Ok(BigUint::zero());
    }
    let key = (
        shape.outer().parts().to_vec(),
        shape.inner().parts().to_vec(),
        content.parts().to_vec(),
    );
    if let Some(v) = LR_MEMO.get(&key) {
        return Ok(v);
    }
    let mut count = 0u64;
    Filler::new(shape, content).run(0, &mut |_| count += 1);
    let count = BigUint::from(count);
    let bytes = 4 * (key.0.len() + key.1.len() + key.2.len()) + 64;
    LR_MEMO.insert(key, count.clone(), bytes);
    Ok(count)
}

/// The contents `(ρ(1), …, ρ(r))` of an LR multitableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LRContentSequence(pub Vec<Partition>);

impl LRContentSequence {
    pub fn contents(&self) -> &[Partition] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// The composition `(|ρ(1)|, …, |ρ(r)|)`.
    pub fn type_of(&self) -> Result<Composition> {
        Composition::new(self.0.iter().map(|p| p.size() as u32).collect())
    }

    /// All sequences with `ρ(i) ⊢ π_i`, each factor in reverse lexicographic
    /// order, last factor varying fastest.
    pub fn all_of_type(pi: &Composition) -> Vec<LRContentSequence> {
        let mut out = vec![Vec::new()];
        for &part in pi.parts() {
            let choices: Vec<Partition> = partitions_of(part as usize, None, None).collect();
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Partition>| {
                    choices.iter().map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c.clone());
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(LRContentSequence).collect()
    }
}

/// A chain `∅ = λ(0) ⊂ ⋯ ⊂ λ(r) = λ` with an LR tableau on each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRMultitableau {
    chain: Vec<Partition>,
    tableaux: Vec<LRTableau>,
}

impl LRMultitableau {
    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn tableaux(&self) -> &[LRTableau] {
        &self.tableaux
    }

    pub fn shape(&self) -> &Partition {
        self.chain
            .last()
            .expect("chain starts at the empty partition")
    }

    pub fn content(&self) -> LRContentSequence {
        LRContentSequence(
            self.tableaux
                .iter()
                .map(|t| t.content().expect("valid tableau"))
                .collect(),
        )
    }

    pub fn is_valid(&self) -> bool {
        self.chain.first() == Some(&Partition::empty())
            && self.chain.len() == self.tableaux.len() + 1
            && self.tableaux.iter().enumerate().all(|(i, t)| {
                t.shape().outer() == &self.chain[i + 1]
                    && t.shape().inner() == &self.chain[i]
                    && t.is_valid()
            })
    }
}

/// Partitions `κ` with `lower ⊆ κ ⊆ upper` and `|κ| = size`.
pub fn partitions_between(lower: &Partition, upper: &Partition, size: usize) -> Vec<Partition> {
    fn rec(
        i: usize,
        lower: &Partition,
        upper: &Partition,
        left: usize,
        prev: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == upper.len() {
            if left == 0 {
                out.push(Partition::from_sorted_unchecked(cur.clone()));
            }
            return;
        }
        let lo = lower.part(i);
        let hi = upper.part(i).min(prev);
        let rest_cap: usize = (i + 1..upper.len())
            .map(|k| upper.part(k).min(hi) as usize)
            .sum();
        for v in (lo..=hi).rev() {
            let taken = (v - lo) as usize;
            if taken > left {
                continue;
            }
            if left - taken > rest_cap {
                break;
            }
            cur.push(v);
            rec(i + 1, lower, upper, left - taken, v, cur, out);
            cur.pop();
        }
    }
    if !upper.contains(lower) || size < lower.size() || size > upper.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(
        0,
        lower,
        upper,
        size - lower.size(),
        u32::MAX,
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// `c^λ_{(ρ(1),…,ρ(r))}`: number of LR multitableaux of shape `λ`.
pub fn multitableau_count(lambda: &Partition, contents: &LRContentSequence) -> Result<BigUint> {
    if contents.size() != lambda.size() {
        return Err(KronError::SizeMismatch(vec![
            lambda.size(),
            contents.size(),
        ]));
    }
    let mut states: BTreeMap<Partition, BigUint> = BTreeMap::new();
    states.insert(Partition::empty(), BigUint::one());
    for rho in contents.contents() {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (kappa, ways) in &states {
            for step in partitions_between(kappa, lambda, kappa.size() + rho.size()) {
                let c = lr_coeff(&step.skew(kappa)?, rho)?;
                if !c.is_zero() {
                    *next.entry(step).or_default() += ways * c;
                }
            }
        }
        states = next;
    }
    Ok(states.remove(lambda).unwrap_or_default())
}

/// Every LR multitableau of shape `λ` and the given content, depth first
/// over chains in reverse lexicographic order.
pub fn multitableaux(
    lambda: &Partition,
    contents: &LRContentSequence,
) -> Result<Vec<LRMultitableau>> {
    if contents.size() != lambda.size() {
        return Err(KronError::SizeMismatch(vec![
            lambda.size(),
            contents.size(),
        ]));
    }
    fn rec(
        lambda: &Partition,
        contents: &[Partition],
        chain: &mut Vec<Partition>,
        tabs: &mut Vec<LRTableau>,
        out: &mut Vec<LRMultitableau>,
    ) -> Result<()> {
        let kappa = chain.last().unwrap().clone();
        let Some((rho, rest)) = contents.split_first() else {
            if &kappa == lambda {
                out.push(LRMultitableau {
                    chain: chain.clone(),
                    tableaux: tabs.clone(),
                });
            }
            return Ok(());
        };
        for step in partitions_between(&kappa, lambda, kappa.size() + rho.size()) {
            let shape = step.skew(&kappa)?;
            let mut found = Vec::new();
            for_each_lr_tableau(&shape, rho, |t| found.push(t))?;
            for t in found {
                chain.push(step.clone());
                tabs.push(t);
                rec(lambda, rest, chain, tabs, out)?;
                tabs.pop();
                chain.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(
        lambda,
        contents.contents(),
        &mut vec![Partition::empty()],
        &mut Vec::new(),
        &mut out,
    )?;
    Ok(out)
}

/// `lr(λ, μ; π)` with `π` taken in the given order.
pub fn lr_pair_count_ordered(
    lambda: &Partition,
    mu: &Partition,
    pi: &Composition,
) -> Result<BigUint> {
    if lambda.size() != mu.size() || lambda.size() != pi.size() {
        return Err(KronError::SizeMismatch(vec![
            lambda.size(),
            mu.size(),
            pi.size(),
        ]));
    }
    let mut total = BigUint::zero();
    for seq in LRContentSequence::all_of_type(pi) {
        let a = multitableau_count(lambda, &seq)?;
        if a.is_zero() {
            continue;
        }
        let b = multitableau_count(mu, &seq)?;
        total += a * b;
    }
    Ok(total)
}

/// `lr(λ, μ; π)`: pairs of LR multitableaux of shapes `λ` and `μ` with the
/// same content and type `π`. Since the count only depends on the multiset
/// of parts, `π` is sorted first.
pub fn lr_pair_count(lambda: &Partition, mu: &Partition, pi: &Composition) -> Result<BigUint> {
    let sorted = Composition::from(&pi.sorted());
    lr_pair_count_ordered(lambda, mu, &sorted)
}

/// `K_{νπ}`: semistandard tableaux of shape `ν` and content `π`, counted
/// as chains of horizontal strips.
pub fn kostka(nu: &Partition, pi: &Composition) -> Result<BigUint> {
    if nu.size() != pi.size() {
        return Err(KronError::SizeMismatch(vec![nu.size(), pi.size()]));
    }
    let mut states: BTreeMap<Partition, BigUint> = BTreeMap::new();
    states.insert(Partition::empty(), BigUint::one());
    for &part in pi.parts() {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (kappa, ways) in &states {
            for step in partitions_between(kappa, nu, kappa.size() + part as usize) {
                if is_horizontal_strip(&step, kappa) {
                    *next.entry(step).or_default() += ways;
                }
            }
        }
        states = next;
    }
    Ok(states.remove(nu).unwrap_or_default())
}

/// `outer/inner` has at most one box per column.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (1..outer.len()).all(|i| outer.part(i) <= inner.part(i - 1))
}

/// Young's rule: `φ^π = Σ_ν K_{νπ} χ^ν`, nonzero terms in reverse
/// lexicographic order of `ν`.
pub fn perm_character_decomp(pi: &Composition) -> Vec<(Partition, BigUint)> {
    let sorted = pi.sorted();
    partitions_of(pi.size(), None, None)
        .filter(|nu| nu.dominates(&sorted))
        .filter_map(|nu| {
            let k = kostka(&nu, pi).expect("sizes agree");
            (!k.is_zero()).then_some((nu, k))
        })
        .collect()
}
