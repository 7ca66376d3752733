//! Weight multisets of torus representations and their power constructions.
//!
//! A representation of a connected reductive group is determined by its
//! multiset of integral weights with respect to a maximal torus, so the
//! recovery problem becomes pure multiset combinatorics: the k-th symmetric
//! (resp. tensor) power has as weights all k-multiset (resp. ordered k-tuple)
//! sums, and [`recover_from_power`] inverts that map by peeling off
//! lexicographically maximal weights.
//!
//! Multiplicities are arbitrary-precision; k-fold sums are enumerated with
//! composition counting over distinct weights, never by materializing n^k
//! tuples.

use std::collections::BTreeMap;

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("weight multiset must be non-empty")]
    Empty,
    #[error("weight vector has rank {got}, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("power exponent k must be positive")]
    ZeroK,
    #[error("target dimension n must be positive")]
    ZeroN,
    #[error("exterior power needs k <= dimension (k = {k}, dimension = {dimension})")]
    ExtTooLarge { k: u32, dimension: BigUint },
    #[error("dimension {got} does not equal the expected {expected}: P is not a valid k-th power image")]
    SizeMismatch { expected: BigUint, got: BigUint },
    #[error("lexicographic maximum is not divisible coordinatewise by k: P is not a valid k-th power image")]
    LexmaxNotDivisible,
    #[error("multiset subtraction went negative while recovering weight {step}: P is not a valid k-th power image")]
    SubtractionWentNegative { step: usize },
    #[error("remainder became empty while recovering weight {step}: P is not a valid k-th power image")]
    EmptyRemainder { step: usize },
    #[error("final verification failed: P is not a valid k-th power image")]
    VerificationFailed,
    #[error("recovery supports only the tensor and symmetric modes")]
    UnsupportedRecoverMode,
    #[error("bad weight document: {0}")]
    BadDocument(String),
}

/// An integral weight: a vector of fixed rank, ordered lexicographically with
/// coordinate 0 most significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: i64) -> WeightVector {
        WeightVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn zero(rank: usize) -> WeightVector {
        WeightVector(vec![0; rank])
    }

    /// Exact coordinatewise division; None when some coordinate is not
    /// divisible.
    pub fn exact_div(&self, c: i64) -> Option<WeightVector> {
        let mut out = Vec::with_capacity(self.0.len());
        for a in &self.0 {
            if a % c != 0 {
                return None;
            }
            out.push(a / c);
        }
        Some(WeightVector(out))
    }
}

/// Finite multiset of weight vectors with arbitrary-precision multiplicities,
/// kept in strictly descending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    rank: usize,
    entries: Vec<(WeightVector, BigUint)>,
}

impl WeightMultiset {
    /// Canonicalize: aggregate duplicates, sort strictly descending, require
    /// positive multiplicities and a consistent rank.
    pub fn from_pairs(
        rank: usize,
        pairs: impl IntoIterator<Item = (WeightVector, BigUint)>,
    ) -> Result<WeightMultiset, WeightError> {
        let mut map: BTreeMap<WeightVector, BigUint> = BTreeMap::new();
        for (v, m) in pairs {
            if v.rank() != rank {
                return Err(WeightError::RankMismatch {
                    expected: rank,
                    got: v.rank(),
                });
            }
            if m.is_zero() {
                return Err(WeightError::ZeroMultiplicity);
            }
            *map.entry(v).or_insert_with(BigUint::zero) += m;
        }
        if map.is_empty() {
            return Err(WeightError::Empty);
        }
        Ok(WeightMultiset {
            rank,
            entries: map.into_iter().rev().collect(),
        })
    }

    /// Convenience constructor from plain vectors, multiplicity 1 each
    /// (repeats aggregate).
    pub fn from_vectors(
        rank: usize,
        vectors: impl IntoIterator<Item = Vec<i64>>,
    ) -> Result<WeightMultiset, WeightError> {
        WeightMultiset::from_pairs(
            rank,
            vectors
                .into_iter()
                .map(|v| (WeightVector(v), BigUint::one())),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[(WeightVector, BigUint)] {
        &self.entries
    }

    pub fn dimension(&self) -> BigUint {
        self.entries
            .iter()
            .fold(BigUint::zero(), |acc, (_, m)| acc + m)
    }

    pub fn lexmax(&self) -> &WeightVector {
        &self.entries[0].0
    }

    pub fn negate(&self) -> WeightMultiset {
        WeightMultiset::from_pairs(
            self.rank,
            self.entries.iter().map(|(v, m)| (v.neg(), m.clone())),
        )
        .expect("negation preserves canonicity")
    }

    fn from_map(rank: usize, map: BTreeMap<WeightVector, BigUint>) -> WeightMultiset {
        WeightMultiset {
            rank,
            entries: map.into_iter().filter(|(_, m)| !m.is_zero()).rev().collect(),
        }
    }

    fn to_map(&self) -> BTreeMap<WeightVector, BigUint> {
        self.entries.iter().cloned().collect()
    }

    /// Multiset convolution: all pairwise sums with multiplicities
    /// multiplied.
    fn convolve(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut map: BTreeMap<WeightVector, BigUint> = BTreeMap::new();
        for (v, m) in &self.entries {
            for (w, mm) in &other.entries {
                *map.entry(v.add(w)).or_insert_with(BigUint::zero) += m * mm;
            }
        }
        WeightMultiset::from_map(self.rank, map)
    }

    /// Multiset difference; error if any count would go negative.
    fn subtract(&self, other: &WeightMultiset, step: usize) -> Result<WeightMultiset, WeightError> {
        let mut map = self.to_map();
        for (v, m) in &other.entries {
            match map.get_mut(v) {
                Some(count) if *count >= *m => {
                    *count -= m;
                    if count.is_zero() {
                        map.remove(v);
                    }
                }
                _ => return Err(WeightError::SubtractionWentNegative { step }),
            }
        }
        Ok(WeightMultiset::from_map(self.rank, map))
    }
}

/// C(m + j - 1, j): the number of degree-j monomials in m variables.
fn multiset_binomial(m: &BigUint, j: u64) -> BigUint {
    let mut acc = BigUint::one();
    for t in 0..j {
        acc = acc * (m + BigUint::from(t)) / BigUint::from(t + 1);
        if acc.is_zero() {
            // Only happens for m = 0, where there are no monomials.
            return acc;
        }
    }
    acc
}

/// C(m, j); zero when m < j.
fn choose_binomial(m: &BigUint, j: u64) -> BigUint {
    if *m < BigUint::from(j) {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for t in 0..j {
        acc = acc * (m - BigUint::from(t)) / BigUint::from(t + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerMode {
    Tensor,
    Sym,
    Ext,
    Adjoint,
}

impl std::str::FromStr for PowerMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tensor" => Ok(PowerMode::Tensor),
            "sym" => Ok(PowerMode::Sym),
            "ext" => Ok(PowerMode::Ext),
            "adjoint" => Ok(PowerMode::Adjoint),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// Sums over k-multisets (symmetric) or k-subsets (exterior) of the weight
/// multiset, with composition counting per distinct weight.
fn combination_sums(w: &WeightMultiset, k: u64, exterior: bool) -> WeightMultiset {
    fn recurse(
        entries: &[(WeightVector, BigUint)],
        idx: usize,
        k_left: u64,
        current: WeightVector,
        ways: BigUint,
        exterior: bool,
        out: &mut BTreeMap<WeightVector, BigUint>,
    ) {
        if idx == entries.len() {
            if k_left == 0 {
                *out.entry(current).or_insert_with(BigUint::zero) += ways;
            }
            return;
        }
        let (v, m) = &entries[idx];
        for j in 0..=k_left {
            let count = if exterior {
                choose_binomial(m, j)
            } else {
                multiset_binomial(m, j)
            };
            if count.is_zero() {
                continue;
            }
            recurse(
                entries,
                idx + 1,
                k_left - j,
                current.add(&v.scale(j as i64)),
                &ways * count,
                exterior,
                out,
            );
        }
    }
    let mut out = BTreeMap::new();
    recurse(
        &w.entries,
        0,
        k,
        WeightVector::zero(w.rank),
        BigUint::one(),
        exterior,
        &mut out,
    );
    WeightMultiset::from_map(w.rank, out)
}

/// Expected output size of a power construction on a dimension-n multiset.
fn expected_size(n: &BigUint, k: u32, mode: PowerMode) -> BigUint {
    match mode {
        PowerMode::Tensor => n.pow(k),
        PowerMode::Sym => multiset_binomial(n, k as u64),
        PowerMode::Ext => choose_binomial(n, k as u64),
        PowerMode::Adjoint => n * n,
    }
}

/// Weights of the k-th power construction:
/// * tensor  — all ordered k-tuple sums (n^k of them);
/// * sym     — all k-multiset sums (C(n+k-1, k));
/// * ext     — all k-subset sums (C(n, k)); requires k <= n;
/// * adjoint — all ordered pair differences (n^2); k is ignored.
pub fn power_weights(
    w: &WeightMultiset,
    k: u32,
    mode: PowerMode,
) -> Result<WeightMultiset, WeightError> {
    if k == 0 && mode != PowerMode::Adjoint {
        return Err(WeightError::ZeroK);
    }
    let n = w.dimension();
    let result = match mode {
        PowerMode::Tensor => {
            let mut acc = w.clone();
            for _ in 1..k {
                acc = acc.convolve(w);
            }
            acc
        }
        PowerMode::Sym => combination_sums(w, k as u64, false),
        PowerMode::Ext => {
            if BigUint::from(k) > n {
                return Err(WeightError::ExtTooLarge { k, dimension: n });
            }
            combination_sums(w, k as u64, true)
        }
        PowerMode::Adjoint => w.convolve(&w.negate()),
    };
    let expected = expected_size(&n, k, mode);
    assert_eq!(
        result.dimension(),
        expected,
        "power construction size formula violated"
    );
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RecoverMode {
    Tensor,
    Sym,
}

impl RecoverMode {
    fn power_mode(self) -> PowerMode {
        match self {
            RecoverMode::Tensor => PowerMode::Tensor,
            RecoverMode::Sym => PowerMode::Sym,
        }
    }
}

impl std::str::FromStr for RecoverMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tensor" => Ok(RecoverMode::Tensor),
            "sym" => Ok(RecoverMode::Sym),
            other => Err(format!("unknown recovery mode {other:?}")),
        }
    }
}

/// Invert a k-th power image: find the unique sorted multiset W of dimension
/// n with `power_weights(W, k, mode) = P`.
///
/// The induction peels the highest weight first: lexmax(P) = k * w_1, and
/// once w_1 .. w_{l-1} are known, removing every k-fold sum drawn from them
/// leaves (k-1) * w_1 + w_l as the new maximum. The candidate is verified by
/// recomputing its power image; any failure certifies that P is not a valid
/// image.
pub fn recover_from_power(
    p: &WeightMultiset,
    n: u32,
    k: u32,
    mode: RecoverMode,
) -> Result<WeightMultiset, WeightError> {
    if n == 0 {
        return Err(WeightError::ZeroN);
    }
    if k == 0 {
        return Err(WeightError::ZeroK);
    }
    let expected = expected_size(&BigUint::from(n), k, mode.power_mode());
    if p.dimension() != expected {
        return Err(WeightError::SizeMismatch {
            expected,
            got: p.dimension(),
        });
    }
    let lambda1 = p
        .lexmax()
        .exact_div(k as i64)
        .ok_or(WeightError::LexmaxNotDivisible)?;
    let head = lambda1.scale((k - 1) as i64);
    let mut recovered: Vec<WeightVector> = vec![lambda1];
    for step in 2..=(n as usize) {
        let partial = WeightMultiset::from_pairs(
            p.rank,
            recovered.iter().map(|v| (v.clone(), BigUint::one())),
        )?;
        let sums = power_weights(&partial, k, mode.power_mode())?;
        let remainder = p.subtract(&sums, step)?;
        if remainder.entries.is_empty() {
            return Err(WeightError::EmptyRemainder { step });
        }
        recovered.push(remainder.lexmax().sub(&head));
    }
    let result = WeightMultiset::from_pairs(
        p.rank,
        recovered.into_iter().map(|v| (v, BigUint::one())),
    )?;
    let verification = power_weights(&result, k, mode.power_mode())?;
    if verification != *p {
        return Err(WeightError::VerificationFailed);
    }
    Ok(result)
}

/// True iff the multiset is invariant under negating every vector, i.e. the
/// representation it models is self-dual.
pub fn self_dual_check(w: &WeightMultiset) -> bool {
    *w == w.negate()
}

// ---------------------------------------------------------------------------
// Serialization: {"rank": r, "weights": [{"v": [ints], "m": "string-int"}]}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct WeightEntryDoc {
    v: Vec<i64>,
    m: String,
}

#[derive(Serialize, Deserialize)]
struct WeightDoc {
    rank: usize,
    weights: Vec<WeightEntryDoc>,
}

impl Serialize for WeightMultiset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WeightDoc {
            rank: self.rank,
            weights: self
                .entries
                .iter()
                .map(|(v, m)| WeightEntryDoc {
                    v: v.0.clone(),
                    m: m.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightMultiset {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = WeightDoc::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(doc.weights.len());
        for e in doc.weights {
            let m: BigUint = e
                .m
                .parse::<BigInt>()
                .ok()
                .and_then(|i| i.to_biguint())
                .ok_or_else(|| {
                    serde::de::Error::custom(WeightError::BadDocument(format!(
                        "bad multiplicity {:?}",
                        e.m
                    )))
                })?;
            pairs.push((WeightVector(e.v), m));
        }
        WeightMultiset::from_pairs(doc.rank, pairs).map_err(serde::de::Error::custom)
    }
}
