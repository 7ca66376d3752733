//! Shared brute-force oracles, kept independent of the library's
//! class-data algorithms: everything here works at the level of explicit
//! matrices or materialized tuples.

#![allow(dead_code)]

use std::collections::HashMap;

use num::bigint::BigUint;
use num::One;

use twistcheck::cyclo::CycNum;
use twistcheck::groups::matrixrep::{CycMatrix, MatrixRep};
use twistcheck::weights::{PowerMode, WeightMultiset, WeightVector};

fn matrix_key(m: &CycMatrix) -> String {
    serde_json::to_string(&m.entries).unwrap()
}

/// Element-level view of a matrix representation: all element matrices, the
/// conjugacy class of each element, and one element index per class.
pub struct ElementOracle {
    pub matrices: Vec<CycMatrix>,
    pub labels: Vec<String>,
    /// class_of[e] = oracle class index of element e.
    pub class_of: Vec<usize>,
    /// members of each oracle class.
    pub classes: Vec<Vec<usize>>,
}

impl ElementOracle {
    /// Enumerate the elements of a matrix representation and compute the
    /// conjugacy classes by exhaustive conjugation. Requires the
    /// representation to be faithful (all element matrices distinct).
    pub fn build(rep: &MatrixRep) -> ElementOracle {
        let elements = rep.elements().expect("element enumeration required");
        let mut matrices = Vec::with_capacity(elements.len());
        let mut labels = Vec::with_capacity(elements.len());
        let mut index: HashMap<String, usize> = HashMap::new();
        for (label, word) in elements {
            let m = rep.evaluate(word).unwrap();
            let key = matrix_key(&m);
            assert!(
                index.insert(key, matrices.len()).is_none(),
                "representation is not faithful: duplicate matrix for {label}"
            );
            matrices.push(m);
            labels.push(label.clone());
        }
        let n = matrices.len();

        // Inverses: every element has finite order dividing the group order.
        let mut inverses = Vec::with_capacity(n);
        for m in &matrices {
            let mut power = m.clone();
            let mut previous = CycMatrix::identity(m.n, rep.modulus);
            while !power.is_identity() {
                previous = power.clone();
                power = power.mul(m);
            }
            inverses.push(previous);
        }

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let class_idx = classes.len();
            let mut members = Vec::new();
            for x in 0..n {
                let conj = matrices[x].mul(&matrices[g]).mul(&inverses[x]);
                let idx = index[&matrix_key(&conj)];
                if class_of[idx] == usize::MAX {
                    class_of[idx] = class_idx;
                    members.push(idx);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        ElementOracle {
            matrices,
            labels,
            class_of,
            classes,
        }
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// Map oracle classes to table classes by locating the given class
    /// representative matrices. Panics unless the correspondence is a
    /// bijection with matching sizes.
    pub fn match_table_classes(&self, rep: &MatrixRep, class_reps: &[Vec<(String, u32)>]) -> Vec<usize> {
        // oracle class index -> table class index
        let mut map = vec![usize::MAX; self.classes.len()];
        for (table_class, word) in class_reps.iter().enumerate() {
            let m = rep.evaluate(word).unwrap();
            let key = matrix_key(&m);
            let element = self
                .matrices
                .iter()
                .position(|x| matrix_key(x) == key)
                .expect("class representative must be an enumerated element");
            let oracle_class = self.class_of[element];
            assert_eq!(
                map[oracle_class],
                usize::MAX,
                "two table classes map to one oracle class"
            );
            map[oracle_class] = table_class;
        }
        assert!(map.iter().all(|&c| c != usize::MAX));
        map
    }
}

// ---------------------------------------------------------------------------
// Explicit symmetric and exterior power matrices
// ---------------------------------------------------------------------------

/// Multisets of size k over 0..n, lexicographically ordered (the monomial
/// basis of the k-th symmetric power).
pub fn monomial_basis(n: usize, k: u32) -> Vec<Vec<usize>> {
    fn recurse(n: usize, k: u32, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            recurse(n, k - 1, i, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    recurse(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Strictly increasing k-subsets of 0..n (the wedge basis of the k-th
/// exterior power).
pub fn wedge_basis(n: usize, k: u32) -> Vec<Vec<usize>> {
    fn recurse(n: usize, k: u32, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            recurse(n, k - 1, i + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    recurse(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The matrix of the k-th symmetric power acting on the monomial basis,
/// computed by exact polynomial expansion of the image of each basis
/// monomial.
pub fn sym_power_matrix(m: &CycMatrix, k: u32) -> CycMatrix {
    let n = m.n;
    let modulus = m.entries[0].modulus();
    let basis = monomial_basis(n, k);
    let position: HashMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    let dim = basis.len();
    let mut entries = vec![CycNum::zero(modulus); dim * dim];
    for (col, monomial) in basis.iter().enumerate() {
        // Expand prod_{j in monomial} (sum_i m[i][j] x_i).
        let mut poly: HashMap<Vec<usize>, CycNum> = HashMap::new();
        poly.insert(Vec::new(), CycNum::one(modulus));
        for &j in monomial {
            let mut next: HashMap<Vec<usize>, CycNum> = HashMap::new();
            for (mono, coeff) in &poly {
                for i in 0..n {
                    let a = m.at(i, j);
                    if a.is_zero() {
                        continue;
                    }
                    let mut mono2 = mono.clone();
                    mono2.push(i);
                    mono2.sort_unstable();
                    let term = coeff * a;
                    next.entry(mono2)
                        .and_modify(|c| *c = &*c + &term)
                        .or_insert(term);
                }
            }
            poly = next;
        }
        for (mono, coeff) in poly {
            let row = position[&mono];
            entries[row * dim + col] = coeff;
        }
    }
    CycMatrix { n: dim, entries }
}

fn determinant(m: &CycMatrix) -> CycNum {
    let modulus = m.entries[0].modulus();
    let n = m.n;
    if n == 0 {
        return CycNum::one(modulus);
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    // Laplace expansion along the first row; fine for the small k used here.
    let mut det = CycNum::zero(modulus);
    for j in 0..n {
        let a = m.at(0, j);
        if a.is_zero() {
            continue;
        }
        let minor_rows: Vec<Vec<CycNum>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m.at(r, c).clone())
                    .collect()
            })
            .collect();
        let minor = CycMatrix::from_rows(minor_rows);
        let term = a * &determinant(&minor);
        if j % 2 == 0 {
            det = &det + &term;
        } else {
            det = &det - &term;
        }
    }
    det
}

/// The matrix of the k-th exterior power on the wedge basis: entry (S, T) is
/// the minor with rows S and columns T.
pub fn ext_power_matrix(m: &CycMatrix, k: u32) -> CycMatrix {
    let modulus = m.entries[0].modulus();
    let basis = wedge_basis(m.n, k);
    let dim = basis.len();
    let mut entries = vec![CycNum::zero(modulus); dim * dim];
    for (row, s) in basis.iter().enumerate() {
        for (col, t) in basis.iter().enumerate() {
            let rows: Vec<Vec<CycNum>> = s
                .iter()
                .map(|&i| t.iter().map(|&j| m.at(i, j).clone()).collect())
                .collect();
            let minor = CycMatrix::from_rows(rows);
            entries[row * dim + col] = determinant(&minor);
        }
    }
    CycMatrix { n: dim, entries }
}

// ---------------------------------------------------------------------------
// Naive weight-multiset powers (materialized tuples)
// ---------------------------------------------------------------------------

/// Expand a multiset into an explicit list of vectors (multiplicities
/// materialized). Panics when a multiplicity exceeds usize.
pub fn materialize(w: &WeightMultiset) -> Vec<WeightVector> {
    let mut out = Vec::new();
    for (v, m) in w.entries() {
        let count: usize = m.to_string().parse().expect("oracle multiplicity fits usize");
        for _ in 0..count {
            out.push(v.clone());
        }
    }
    out
}

/// Power construction by explicit tuple enumeration; the counterpart of
/// `power_weights` with no multiplicity compression.
pub fn naive_power_weights(w: &WeightMultiset, k: u32, mode: PowerMode) -> WeightMultiset {
    let list = materialize(w);
    let n = list.len();
    let rank = w.rank();
    let mut sums: Vec<WeightVector> = Vec::new();
    match mode {
        PowerMode::Tensor => {
            let mut idx = vec![0usize; k as usize];
            loop {
                let mut s = WeightVector::zero(rank);
                for &i in &idx {
                    s = s.add(&list[i]);
                }
                sums.push(s);
                // odometer
                let mut pos = idx.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < n {
                        break;
                    }
                    idx[pos] = 0;
                }
                if idx.iter().all(|&i| i == 0) {
                    break;
                }
            }
        }
        PowerMode::Sym => {
            fn recurse(
                list: &[WeightVector],
                k: u32,
                start: usize,
                current: WeightVector,
                sums: &mut Vec<WeightVector>,
            ) {
                if k == 0 {
                    sums.push(current);
                    return;
                }
                for i in start..list.len() {
                    recurse(list, k - 1, i, current.add(&list[i]), sums);
                }
            }
            recurse(&list, k, 0, WeightVector::zero(rank), &mut sums);
        }
        PowerMode::Ext => {
            fn recurse(
                list: &[WeightVector],
                k: u32,
                start: usize,
                current: WeightVector,
                sums: &mut Vec<WeightVector>,
            ) {
                if k == 0 {
                    sums.push(current);
                    return;
                }
                for i in start..list.len() {
                    recurse(list, k - 1, i + 1, current.add(&list[i]), sums);
                }
            }
            recurse(&list, k, 0, WeightVector::zero(rank), &mut sums);
        }
        PowerMode::Adjoint => {
            for a in &list {
                for b in &list {
                    sums.push(a.sub(b));
                }
            }
        }
    }
    WeightMultiset::from_pairs(rank, sums.into_iter().map(|v| (v, BigUint::one()))).unwrap()
}

/// Is `a` a sub-multiset of `b`?
pub fn is_submultiset(a: &WeightMultiset, b: &WeightMultiset) -> bool {
    let counts: std::collections::BTreeMap<_, _> = b.entries().iter().cloned().collect();
    a.entries()
        .iter()
        .all(|(v, m)| counts.get(v).map_or(false, |c| c >= m))
}

/// All multisets W of dimension n with naive_power_weights(W, k, mode) = P,
/// by exhaustive search over non-increasing tuples of candidates (every
/// member w of a solution satisfies k*w in P). Fully independent of
/// `recover_from_power`.
pub fn brute_force_invert(
    p: &WeightMultiset,
    n: u32,
    k: u32,
    mode: PowerMode,
) -> Vec<WeightMultiset> {
    let mut candidates: Vec<WeightVector> = p
        .entries()
        .iter()
        .filter_map(|(v, _)| v.exact_div(k as i64))
        .collect();
    candidates.sort();
    candidates.reverse();
    candidates.dedup();
    let Some(first) = p.entries().first().map(|(v, _)| v.exact_div(k as i64)) else {
        return Vec::new();
    };
    let Some(first) = first else {
        return Vec::new(); // lexmax not divisible: no sorted solution exists
    };

    fn search(
        p: &WeightMultiset,
        candidates: &[WeightVector],
        n: u32,
        k: u32,
        mode: PowerMode,
        chosen: &mut Vec<WeightVector>,
        from: usize,
        out: &mut Vec<WeightMultiset>,
    ) {
        let partial = WeightMultiset::from_pairs(
            p.rank(),
            chosen.iter().map(|v| (v.clone(), BigUint::one())),
        )
        .unwrap();
        let image = naive_power_weights(&partial, k, mode);
        if !is_submultiset(&image, p) {
            return;
        }
        if chosen.len() == n as usize {
            if image == *p {
                out.push(partial);
            }
            return;
        }
        for (i, c) in candidates.iter().enumerate().skip(from) {
            chosen.push(c.clone());
            search(p, candidates, n, k, mode, chosen, i, out);
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    let Some(start) = candidates.iter().position(|c| *c == first) else {
        return out;
    };
    let mut chosen = vec![first];
    search(p, &candidates, n, k, mode, &mut chosen, start, &mut out);
    out
}
