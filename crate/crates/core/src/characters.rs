//! Irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule evaluated on beta-sets
//! (first-column hook lengths): removing a border strip of length `k` is
//! moving one bead from position `b` to a free position `b - k`, and the
//! strip height is the number of beads jumped over.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use crate::cache::Memo;
use crate::error::{KronError, Result};
use crate::lr::lr_coeff;
use crate::partition::{partitions_of, Partition, SkewShape};

/// Cycle type of a permutation; indexes a conjugacy class of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn degree(&self) -> usize {
        self.0.size()
    }

    /// The identity class `(1^n)`.
    pub fn identity(n: usize) -> Self {
        CycleType(Partition::column(n))
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Centralizer order `z_ρ = Π i^{m_i} m_i!`.
pub fn centralizer_order(rho: &CycleType) -> BigUint {
    let mut z = BigUint::one();
    let parts = rho.0.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mult = parts[i..].iter().take_while(|&&x| x == v).count();
        z *= BigUint::from(v).pow(mult as u32) * factorial(mult);
        i += mult;
    }
    z
}

/// Size of the conjugacy class `n!/z_ρ`.
pub fn class_size(rho: &CycleType) -> BigUint {
    factorial(rho.degree()) / centralizer_order(rho)
}

type MnKey = (Vec<u32>, Vec<u32>);

static MN_MEMO: Lazy<Memo<MnKey, BigInt>> = Lazy::new(|| Memo::new(2));

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule.
pub fn mn_value(lambda: &Partition, rho: &CycleType) -> Result<BigInt> {
    if lambda.size() != rho.degree() {
        return Err(KronError::SizeMismatch(vec![lambda.size(), rho.degree()]));
    }
    Ok(mn_rec(lambda.parts(), rho.0.parts()))
}

fn beta_set(parts: &[u32]) -> Vec<u32> {
    let l = parts.len() as u32;
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect()
}

fn from_beta_set(mut beta: Vec<u32>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as u32;
    let mut parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i as u32))
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// Border strips of length `k`: the shape left after removal and the strip
/// height, in order of decreasing starting bead.
pub fn border_strips(parts: &[u32], k: u32) -> Vec<(Vec<u32>, u32)> {
    let beta = beta_set(parts);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count() as u32;
        let mut moved = beta.clone();
        moved[idx] = target;
        out.push((from_beta_set(moved), height));
    }
    out
}

fn mn_rec(lambda: &[u32], rho: &[u32]) -> BigInt {
    if rho.is_empty() {
        return if lambda.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if lambda.len() <= 1 {
        // trivial character
        return BigInt::one();
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(v) = MN_MEMO.get(&key) {
        return v;
    }
    let (k, rest) = (rho[0], &rho[1..]);
    let mut total = BigInt::zero();
    for (shape, height) in border_strips(lambda, k) {
        let v = mn_rec(&shape, rest);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    let bytes = 4 * (key.0.len() + key.1.len()) + 64;
    MN_MEMO.insert(key, total.clone(), bytes);
    total
}

/// Character values of `S_n` on every class, classes ordered as
/// [`partitions_of`] yields them (reverse lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    degree: usize,
    values: Vec<BigInt>,
}

impl CharacterVector {
    pub fn new(degree: usize, values: Vec<BigInt>) -> Result<Self> {
        let expected = character_table(degree).classes().len();
        if values.len() != expected {
            return Err(KronError::SizeMismatch(vec![values.len(), expected]));
        }
        Ok(CharacterVector { degree, values })
    }

    /// The class function `ρ ↦ f(ρ)`.
    pub fn from_fn(degree: usize, f: impl Fn(&CycleType) -> BigInt) -> Self {
        let table = character_table(degree);
        CharacterVector {
            degree,
            values: table
                .classes()
                .iter()
                .map(|c| f(&CycleType(c.clone())))
                .collect(),
        }
    }

    /// The irreducible character `χ^λ`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let table = character_table(lambda.size());
        let row = table.index_of(lambda).expect("partition of n");
        CharacterVector {
            degree: lambda.size(),
            values: table.row(row).to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn value(&self, rho: &CycleType) -> Option<&BigInt> {
        let table = character_table(self.degree);
        table.class_index(rho).map(|i| &self.values[i])
    }

    /// Pointwise (Kronecker) product.
    pub fn tensor(&self, other: &CharacterVector) -> Result<CharacterVector> {
        if self.degree != other.degree {
            return Err(KronError::SizeMismatch(vec![self.degree, other.degree]));
        }
        Ok(CharacterVector {
            degree: self.degree,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// `Σ c_λ χ^λ` for a formal sum of irreducibles.
    pub fn combination(degree: usize, terms: &[(Partition, BigUint)]) -> Result<Self> {
        let mut values = vec![BigInt::zero(); character_table(degree).classes().len()];
        for (lam, c) in terms {
            if lam.size() != degree {
                return Err(KronError::SizeMismatch(vec![lam.size(), degree]));
            }
            let chi = CharacterVector::irreducible(lam);
            let c = BigInt::from(c.clone());
            for (v, x) in values.iter_mut().zip(chi.values) {
                *v += &c * x;
            }
        }
        Ok(CharacterVector { degree, values })
    }
}

/// Full character table of `S_n`: rows indexed by `λ ⊢ n`, columns by
/// cycle types, both in reverse lexicographic order.
#[derive(Debug)]
pub struct CharacterTable {
    degree: usize,
    classes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    class_sizes: Vec<BigUint>,
    rows: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let classes: Vec<Partition> = partitions_of(n, None, None).collect();
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let class_sizes = classes
            .iter()
            .map(|c| class_size(&CycleType(c.clone())))
            .collect();
        let rows = classes
            .iter()
            .map(|lam| {
                classes
                    .iter()
                    .map(|rho| mn_rec(lam.parts(), rho.parts()))
                    .collect()
            })
            .collect();
        CharacterTable {
            degree: n,
            classes,
            index,
            class_sizes,
            rows,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Partitions of `n`; used for both the row and the column labels.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn class_index(&self, rho: &CycleType) -> Option<usize> {
        self.index_of(&rho.0)
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn value(&self, lambda: &Partition, rho: &CycleType) -> Option<&BigInt> {
        Some(&self.rows[self.index_of(lambda)?][self.class_index(rho)?])
    }
}

static TABLES: Lazy<Mutex<HashMap<usize, Arc<CharacterTable>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The character table of `S_n`, built once per `n` and shared.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(t) = TABLES.lock().get(&n) {
        return Arc::clone(t);
    }
    let table = Arc::new(CharacterTable::build(n));
    Arc::clone(TABLES.lock().entry(n).or_insert(table))
}

/// `⟨φ, ψ⟩ = (1/n!) Σ_ρ |C_ρ| φ(ρ) ψ(ρ)`; the division must be exact.
pub fn inner_product(phi: &CharacterVector, psi: &CharacterVector) -> Result<BigInt> {
    if phi.degree != psi.degree {
        return Err(KronError::SizeMismatch(vec![phi.degree, psi.degree]));
    }
    let table = character_table(phi.degree);
    let mut sum = BigInt::zero();
    for ((c, a), b) in table.class_sizes().iter().zip(&phi.values).zip(&psi.values) {
        sum += BigInt::from(c.clone()) * a * b;
    }
    let (q, r) = sum.div_rem(&BigInt::from(factorial(phi.degree)));
    if !r.is_zero() {
        return Err(KronError::Inexact(phi.degree));
    }
    Ok(q)
}

/// `f^λ` by the hook length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    factorial(lambda.size()) / hooks
}

/// Decomposition `χ^{λ/δ} = Σ_τ c^λ_{δτ} χ^τ`, nonzero terms only, `τ` in
/// reverse lexicographic order. The empty skew shape gives `{∅: 1}`.
pub fn skew_character(shape: &SkewShape) -> Vec<(Partition, BigUint)> {
    partitions_of(shape.size(), None, None)
        .filter_map(|tau| {
            let c = lr_coeff(shape, &tau).expect("sizes agree");
            (!c.is_zero()).then_some((tau, c))
        })
        .collect()
}

/// `sign(ρ)·value`; twisting by the sign character sends `χ^λ` to `χ^{λ'}`.
pub fn sign_twist(value: &BigInt, rho: &CycleType) -> BigInt {
    if rho.0.cycle_sign() < 0 {
        -value
    } else {
        value.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ct(s: &str) -> CycleType {
        CycleType(p(s))
    }

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn class_sizes_s3() {
        assert_eq!(class_size(&ct("1,1,1")), BigUint::from(1u32));
        assert_eq!(class_size(&ct("3")), BigUint::from(2u32));
        assert_eq!(class_size(&ct("2,1")), BigUint::from(3u32));
        assert_eq!(class_size(&CycleType(Partition::empty())), BigUint::one());
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=12 {
            let total: BigUint = partitions_of(n, None, None)
                .map(|r| class_size(&CycleType(r)))
                .sum();
            assert_eq!(total, factorial(n), "n={n}");
        }
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_value(&p("2,1"), &ct("1,1,1")).unwrap(), bi(2));
        assert_eq!(mn_value(&p("2,1"), &ct("3")).unwrap(), bi(-1));
        assert_eq!(mn_value(&p("2,1"), &ct("2,1")).unwrap(), bi(0));
        for rho in partitions_of(6, None, None) {
            assert_eq!(mn_value(&p("6"), &CycleType(rho)).unwrap(), bi(1));
        }
        assert_eq!(
            mn_value(&Partition::empty(), &CycleType(Partition::empty())).unwrap(),
            bi(1)
        );
        assert!(matches!(
            mn_value(&p("2,1"), &ct("2")),
            Err(KronError::SizeMismatch(_))
        ));
    }

    #[test]
    fn border_strip_removal() {
        // (3,2,1) has no 2-strips (it is a 2-core) and one 5-strip.
        assert!(border_strips(&[3, 2, 1], 2).is_empty());
        assert_eq!(border_strips(&[3, 2, 1], 5), vec![(vec![1], 2)]);
        assert_eq!(border_strips(&[2, 1], 3), vec![(vec![], 1)]);
    }

    #[test]
    fn small_tables() {
        let t2 = character_table(2);
        assert_eq!(t2.classes(), &[p("2"), p("1,1")]);
        // rows (2), (1,1); columns (2), (1,1)
        assert_eq!(t2.row(0), &[bi(1), bi(1)]);
        assert_eq!(t2.row(1), &[bi(-1), bi(1)]);
        assert_eq!(t2.value(&p("1,1"), &ct("2")), Some(&bi(-1)));

        let t0 = character_table(0);
        assert_eq!(t0.classes().len(), 1);
        assert_eq!(t0.row(0), &[bi(1)]);

        let t3 = character_table(3);
        // columns (3), (2,1), (1,1,1)
        assert_eq!(
            t3.row(t3.index_of(&p("2,1")).unwrap()),
            &[bi(-1), bi(0), bi(2)]
        );
    }

    #[test]
    fn row_orthogonality() {
        for n in 0..=8 {
            let t = character_table(n);
            let nf = BigInt::from(factorial(n));
            for i in 0..t.classes().len() {
                for j in 0..t.classes().len() {
                    let s: BigInt = t
                        .class_sizes()
                        .iter()
                        .zip(t.row(i).iter().zip(t.row(j)))
                        .map(|(c, (a, b))| BigInt::from(c.clone()) * a * b)
                        .sum();
                    let want = if i == j { nf.clone() } else { BigInt::zero() };
                    assert_eq!(s, want, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn identity_value_is_dimension() {
        for n in 0..=10 {
            for lam in partitions_of(n, None, None) {
                let v = mn_value(&lam, &CycleType::identity(n)).unwrap();
                assert_eq!(v, BigInt::from(dimension(&lam)), "{lam}");
            }
        }
    }

    #[test]
    fn conjugation_twist() {
        for n in 0..=8 {
            let t = character_table(n);
            for lam in t.classes() {
                let conj = lam.conjugate();
                for rho in t.classes() {
                    let rho = CycleType(rho.clone());
                    let a = t.value(lam, &rho).unwrap();
                    let b = t.value(&conj, &rho).unwrap();
                    assert_eq!(*b, sign_twist(a, &rho));
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p("5")), BigUint::one());
        assert_eq!(dimension(&p("2,1")), BigUint::from(2u32));
        assert_eq!(dimension(&p("2,2")), BigUint::from(2u32));
        assert_eq!(dimension(&p("3,2,1")), BigUint::from(16u32));
    }

    #[test]
    fn inner_products() {
        let c21 = CharacterVector::irreducible(&p("2,1"));
        let c3 = CharacterVector::irreducible(&p("3"));
        assert_eq!(inner_product(&c21, &c21).unwrap(), bi(1));
        assert_eq!(inner_product(&c21, &c3).unwrap(), bi(0));
        let sq = c21.tensor(&c21).unwrap();
        assert_eq!(inner_product(&sq, &c21).unwrap(), bi(1));
        let c2 = CharacterVector::irreducible(&p("2"));
        assert!(inner_product(&c2, &c3).is_err());
        // a class function that is not a character: indicator of a 3-cycle
        let ind = CharacterVector::from_fn(3, |r| bi((r.0 == p("3")) as i64));
        assert_eq!(inner_product(&ind, &ind), Err(KronError::Inexact(3)));
    }

    #[test]
    fn character_vector_lookup() {
        let c = CharacterVector::irreducible(&p("2,1"));
        assert_eq!(c.value(&ct("3")), Some(&bi(-1)));
        assert_eq!(c.value(&ct("2")), None);
        assert!(CharacterVector::new(3, vec![bi(1)]).is_err());
    }

    #[test]
    fn skew_characters() {
        let one = skew_character(&p("3,1").skew(&p("2,1")).unwrap());
        assert_eq!(one, vec![(p("1"), BigUint::one())]);
        let unit = skew_character(&p("3,1").skew(&p("3,1")).unwrap());
        assert_eq!(unit, vec![(Partition::empty(), BigUint::one())]);
        let s = skew_character(&p("2,2").skew(&p("1")).unwrap());
        assert_eq!(s, vec![(p("2,1"), BigUint::one())]);
    }

    #[test]
    fn skew_character_restricts_correctly() {
        // χ^{λ/δ} evaluated at the identity is the number of standard fillings
        // of the skew shape; f^λ = Σ_{δ ⊢ k} f^δ f^{λ/δ}.
        for n in 1..=6 {
            for lam in partitions_of(n, None, None) {
                for k in 0..=n {
                    let total: BigUint = partitions_of(k, None, None)
                        .filter(|d| lam.contains(d))
                        .map(|d| {
                            let sk = skew_character(&lam.skew(&d).unwrap());
                            let f: BigUint = sk.iter().map(|(t, c)| dimension(t) * c).sum();
                            dimension(&d) * f
                        })
                        .sum();
                    assert_eq!(total, dimension(&lam));
                }
            }
        }
    }
}
