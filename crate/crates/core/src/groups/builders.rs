//! Built-in groups: cyclic groups, S3, D4, Q8, direct products, and the
//! Heisenberg family H_n of order n^3 with its explicit degree-n matrix
//! representations.

use num::Integer;

use crate::cyclo::CycNum;
use crate::groups::matrixrep::{word, CycMatrix, MatrixRep, Word};
use crate::groups::structure::{
    CharacterTable, ClassFunction, ClassStructure, GroupError, SubgroupEmbedding,
};

/// Cyclic group of order n: n singleton classes, class i = g^i,
/// characters chi_j(g^i) = zeta_n^{ij}.
pub fn build_cyclic(n: u64) -> Result<CharacterTable, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroOrder);
    }
    let nc = n as usize;
    let power_map = (0..nc)
        .map(|c| (0..n).map(|i| ((c as u64 * i) % n) as usize).collect())
        .collect();
    let structure = ClassStructure::new(n, n, vec![1; nc], 0, n, power_map);
    let irreducibles = (0..n)
        .map(|j| {
            ClassFunction::new(
                (0..n)
                    .map(|i| CycNum::root_of_unity(n, (i * j % n) as i64))
                    .collect(),
            )
        })
        .collect();
    Ok(CharacterTable::new(format!("C{n}"), structure, irreducibles))
}

fn int(modulus: u64, v: i64) -> CycNum {
    CycNum::from_integer(modulus, v)
}

fn int_row(modulus: u64, vals: &[i64]) -> ClassFunction {
    ClassFunction::new(vals.iter().map(|&v| int(modulus, v)).collect())
}

/// Symmetric group S3 with its 2-dimensional standard representation (on the
/// sum-zero sublattice of Z^3) and the normal A3 embedding.
///
/// Classes: identity, transpositions, 3-cycles.
pub fn build_s3() -> (CharacterTable, MatrixRep, Vec<Word>) {
    let modulus = 6;
    let power_map = vec![
        vec![0; 6],
        // transpositions have order 2
        vec![0, 1, 0, 1, 0, 1],
        // 3-cycles have order 3; squares of 3-cycles are again 3-cycles
        vec![0, 2, 2, 0, 2, 2],
    ];
    let structure = ClassStructure::new(6, 6, vec![1, 3, 2], 0, modulus, power_map);
    let irreducibles = vec![
        int_row(modulus, &[1, 1, 1]),
        int_row(modulus, &[1, -1, 1]),
        int_row(modulus, &[2, 0, -1]),
    ];

    // Standard representation in the basis u = e1 - e2, v = e2 - e3:
    // s = (1 2), t = (1 2 3).
    let m = |rows: [[i64; 2]; 2]| {
        CycMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(modulus, v)).collect())
                .collect(),
        )
    };
    let mut generators = std::collections::BTreeMap::new();
    generators.insert("s".to_string(), m([[-1, 1], [0, 1]]));
    generators.insert("t".to_string(), m([[0, -1], [1, -1]]));
    let relations = vec![
        (word(&[("s", 2)]), word(&[])),
        (word(&[("t", 3)]), word(&[])),
        (word(&[("s", 1), ("t", 1), ("s", 1)]), word(&[("t", 2)])),
    ];
    let mut elements = Vec::new();
    for i in 0..2u32 {
        for j in 0..3u32 {
            elements.push((format!("s{i}t{j}"), word(&[("s", i), ("t", j)])));
        }
    }
    let rep = MatrixRep {
        dimension: 2,
        modulus,
        generators,
        relations,
        elements: Some(elements),
    };
    let class_reps = vec![word(&[]), word(&[("s", 1)]), word(&[("t", 1)])];

    // A3 is normal of index 2; a transposition inverts the 3-cycles.
    let a3 = build_cyclic(3).unwrap();
    let embedding = SubgroupEmbedding {
        sub: a3.structure.clone(),
        index: 2,
        fusion: vec![0, 2, 2],
        is_normal: true,
        coset_of_class: Some(vec![0, 1, 0]),
        quotient_mul: Some(vec![vec![0, 1], vec![1, 0]]),
        conj_action: Some(vec![vec![0, 1, 2], vec![0, 2, 1]]),
        sub_table: Some(Box::new(a3)),
    };
    let table =
        CharacterTable::new("S3", structure, irreducibles).with_embeddings(vec![embedding]);
    (table, rep, class_reps)
}

/// Dihedral group of order 8 (symmetries of the square).
///
/// Classes: 1, r^2, {r, r^3}, {s, r^2 s}, {r s, r^3 s}.
pub fn build_d4() -> CharacterTable {
    let modulus = 4;
    let power_map = vec![
        vec![0; 4],
        vec![0, 1, 0, 1],
        vec![0, 2, 1, 2],
        vec![0, 3, 0, 3],
        vec![0, 4, 0, 4],
    ];
    let structure = ClassStructure::new(8, 4, vec![1, 1, 2, 2, 2], 0, modulus, power_map);
    let irreducibles = vec![
        int_row(modulus, &[1, 1, 1, 1, 1]),
        int_row(modulus, &[1, 1, 1, -1, -1]),
        int_row(modulus, &[1, 1, -1, 1, -1]),
        int_row(modulus, &[1, 1, -1, -1, 1]),
        int_row(modulus, &[2, -2, 0, 0, 0]),
    ];
    CharacterTable::new("D4", structure, irreducibles)
}

/// Quaternion group of order 8. Same character table as D4 but different
/// power maps: the classes {±i}, {±j}, {±k} square to -1, not to 1.
pub fn build_q8() -> CharacterTable {
    let modulus = 4;
    let power_map = vec![
        vec![0; 4],
        vec![0, 1, 0, 1],
        vec![0, 2, 1, 2],
        vec![0, 3, 1, 3],
        vec![0, 4, 1, 4],
    ];
    let structure = ClassStructure::new(8, 4, vec![1, 1, 2, 2, 2], 0, modulus, power_map);
    let irreducibles = vec![
        int_row(modulus, &[1, 1, 1, 1, 1]),
        int_row(modulus, &[1, 1, 1, -1, -1]),
        int_row(modulus, &[1, 1, -1, 1, -1]),
        int_row(modulus, &[1, 1, -1, -1, 1]),
        int_row(modulus, &[2, -2, 0, 0, 0]),
    ];
    CharacterTable::new("Q8", structure, irreducibles)
}

/// Direct product: classes are pairs, sizes multiply, irreducible characters
/// are outer products, power maps act componentwise. The cyclotomic modulus
/// is the lcm of the factors' moduli.
pub fn build_direct_product(a: &CharacterTable, b: &CharacterTable) -> CharacterTable {
    let sa = &a.structure;
    let sb = &b.structure;
    let nb = sb.num_classes();
    let exponent = sa.exponent.lcm(&sb.exponent);
    let modulus = sa.modulus.lcm(&sb.modulus);
    let mut class_sizes = Vec::with_capacity(sa.num_classes() * nb);
    let mut power_map = Vec::with_capacity(sa.num_classes() * nb);
    for ca in 0..sa.num_classes() {
        for cb in 0..nb {
            class_sizes.push(sa.class_sizes[ca] * sb.class_sizes[cb]);
            power_map.push(
                (0..exponent)
                    .map(|i| {
                        sa.power_class(ca, i as i64) * nb + sb.power_class(cb, i as i64)
                    })
                    .collect(),
            );
        }
    }
    let identity_class = sa.identity_class * nb + sb.identity_class;
    let structure = ClassStructure::new(
        sa.order * sb.order,
        exponent,
        class_sizes,
        identity_class,
        modulus,
        power_map,
    );
    let mut irreducibles = Vec::with_capacity(a.irreducibles.len() * b.irreducibles.len());
    for ra in &a.irreducibles {
        for rb in &b.irreducibles {
            let mut values = Vec::with_capacity(structure.num_classes());
            for ca in 0..sa.num_classes() {
                let va = ra.values[ca].embed(modulus).unwrap();
                for cb in 0..nb {
                    let vb = rb.values[cb].embed(modulus).unwrap();
                    values.push(&va * &vb);
                }
            }
            irreducibles.push(ClassFunction::new(values));
        }
    }
    CharacterTable::new(format!("{}x{}", a.name, b.name), structure, irreducibles)
}

/// The whole group embedded in itself: index 1, trivial quotient and
/// conjugation data. Useful as the degenerate normal subgroup.
pub fn identity_embedding(table: &CharacterTable) -> SubgroupEmbedding {
    let s = &table.structure;
    SubgroupEmbedding {
        sub: s.clone(),
        index: 1,
        fusion: (0..s.num_classes()).collect(),
        is_normal: true,
        coset_of_class: Some(vec![0; s.num_classes()]),
        quotient_mul: Some(vec![vec![0]]),
        conj_action: Some(vec![(0..s.num_classes()).collect()]),
        sub_table: Some(Box::new(table.clone())),
    }
}

fn is_odd_prime(n: u64) -> bool {
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The Heisenberg group H_n (n an odd prime) of order n^3, together with its
/// degree-n matrix representations rho_a and the abelian normal subgroup
/// T = <A, C> of index n.
pub struct HeisenbergGroup {
    pub table: CharacterTable,
    /// (a, rho_a) for a = 1..n-1.
    pub reps: Vec<(u64, MatrixRep)>,
    /// One representative word per conjugacy class.
    pub class_reps: Vec<Word>,
    pub n: u64,
}

impl HeisenbergGroup {
    /// Index of the linear character sending A -> zeta^u, B -> zeta^v.
    pub fn linear_index(&self, u: u64, v: u64) -> usize {
        ((u % self.n) * self.n + (v % self.n)) as usize
    }

    /// Index of the degree-n character with central character zeta^{a l}.
    pub fn degree_n_index(&self, a: u64) -> usize {
        let a = a % self.n;
        assert!(a != 0, "degree-n characters need a != 0 mod n");
        (self.n * self.n + a - 1) as usize
    }

    /// Index (into the T table) of the character A^i C^l -> zeta^{u i + v l}.
    pub fn sub_char_index(&self, u: u64, v: u64) -> usize {
        ((u % self.n) * self.n + (v % self.n)) as usize
    }

    pub fn embedding(&self) -> &SubgroupEmbedding {
        &self.table.embeddings[0]
    }
}

/// Class index bookkeeping for H_n: central classes first (one per power of
/// C), then non-central classes labelled by (i, j) != (0, 0), the exponents
/// of A and B in the normal form A^i B^j C^l.
fn heis_central_class(l: u64) -> usize {
    l as usize
}

fn heis_noncentral_class(n: u64, i: u64, j: u64) -> usize {
    debug_assert!((i, j) != (0, 0));
    (n + i * n + j - 1) as usize
}

pub fn build_heisenberg(n: u64) -> Result<HeisenbergGroup, GroupError> {
    if !is_odd_prime(n) {
        return Err(GroupError::NotAnOddPrime(n));
    }
    let nc = (n + n * n - 1) as usize;
    let mut class_sizes = vec![0u64; nc];
    let mut power_map = vec![Vec::new(); nc];
    for l in 0..n {
        class_sizes[heis_central_class(l)] = 1;
        power_map[heis_central_class(l)] = (0..n)
            .map(|p| heis_central_class(p * l % n))
            .collect();
    }
    for i in 0..n {
        for j in 0..n {
            if (i, j) == (0, 0) {
                continue;
            }
            let c = heis_noncentral_class(n, i, j);
            class_sizes[c] = n;
            power_map[c] = (0..n)
                .map(|p| {
                    if p == 0 {
                        heis_central_class(0)
                    } else {
                        heis_noncentral_class(n, p * i % n, p * j % n)
                    }
                })
                .collect();
        }
    }
    let structure = ClassStructure::new(n * n * n, n, class_sizes, 0, n, power_map);

    // n^2 linear characters (factoring through the quotient by the center),
    // then n-1 characters of degree n supported on the center.
    let mut irreducibles = Vec::with_capacity(nc);
    for u in 0..n {
        for v in 0..n {
            let mut values = vec![CycNum::zero(n); nc];
            for l in 0..n {
                values[heis_central_class(l)] = CycNum::one(n);
            }
            for i in 0..n {
                for j in 0..n {
                    if (i, j) == (0, 0) {
                        continue;
                    }
                    values[heis_noncentral_class(n, i, j)] =
                        CycNum::root_of_unity(n, ((u * i + v * j) % n) as i64);
                }
            }
            irreducibles.push(ClassFunction::new(values));
        }
    }
    for a in 1..n {
        let mut values = vec![CycNum::zero(n); nc];
        for l in 0..n {
            values[heis_central_class(l)] = CycNum::root_of_unity(n, (a * l % n) as i64)
                .scale(&num::BigRational::from_integer(num::BigInt::from(n)));
        }
        irreducibles.push(ClassFunction::new(values));
    }

    // The abelian normal subgroup T = <A, C> of index n; its classes are the
    // singletons A^i C^l, matching the class order of C_n x C_n.
    let cn = build_cyclic(n)?;
    let t_table = build_direct_product(&cn, &cn);
    let t_class = |i: u64, l: u64| (i * n + l) as usize;
    let mut fusion = vec![0usize; (n * n) as usize];
    for i in 0..n {
        for l in 0..n {
            fusion[t_class(i, l)] = if i == 0 {
                heis_central_class(l)
            } else {
                heis_noncentral_class(n, i, 0)
            };
        }
    }
    let mut coset_of_class = vec![0usize; nc];
    for i in 0..n {
        for j in 0..n {
            if (i, j) == (0, 0) {
                continue;
            }
            coset_of_class[heis_noncentral_class(n, i, j)] = j as usize;
        }
    }
    let quotient_mul = (0..n)
        .map(|x| (0..n).map(|y| ((x + y) % n) as usize).collect())
        .collect();
    // Conjugation by B^b sends A^i C^l to A^i C^{l - b i}.
    let conj_action = (0..n)
        .map(|b| {
            let mut perm = vec![0usize; (n * n) as usize];
            for i in 0..n {
                for l in 0..n {
                    let l2 = ((l as i64 - (b * i) as i64).rem_euclid(n as i64)) as u64;
                    perm[t_class(i, l)] = t_class(i, l2);
                }
            }
            perm
        })
        .collect();
    let embedding = SubgroupEmbedding {
        sub: t_table.structure.clone(),
        index: n,
        fusion,
        is_normal: true,
        coset_of_class: Some(coset_of_class),
        quotient_mul: Some(quotient_mul),
        conj_action: Some(conj_action),
        sub_table: Some(Box::new(t_table)),
    };

    let table = CharacterTable::new(format!("H{n}"), structure, irreducibles)
        .with_embeddings(vec![embedding]);

    let reps = (1..n).map(|a| (a, heisenberg_rep(n, a))).collect();

    let mut class_reps = Vec::with_capacity(nc);
    for l in 0..n {
        class_reps.push(word(&[("C", l as u32)]));
    }
    for i in 0..n {
        for j in 0..n {
            if (i, j) == (0, 0) {
                continue;
            }
            class_reps.push(word(&[("A", i as u32), ("B", j as u32)]));
        }
    }

    Ok(HeisenbergGroup {
        table,
        reps,
        class_reps,
        n,
    })
}

/// rho_a: A acts diagonally by zeta^{(i-1)a} on e_i, B is the cyclic shift
/// e_i -> e_{i+1}, C is the scalar zeta^a.
fn heisenberg_rep(n: u64, a: u64) -> MatrixRep {
    let dim = n as usize;
    let mut a_mat = vec![vec![CycNum::zero(n); dim]; dim];
    let mut b_mat = vec![vec![CycNum::zero(n); dim]; dim];
    let mut c_mat = vec![vec![CycNum::zero(n); dim]; dim];
    for i in 0..dim {
        a_mat[i][i] = CycNum::root_of_unity(n, ((i as u64 * a) % n) as i64);
        b_mat[(i + 1) % dim][i] = CycNum::one(n);
        c_mat[i][i] = CycNum::root_of_unity(n, (a % n) as i64);
    }
    let mut generators = std::collections::BTreeMap::new();
    generators.insert("A".to_string(), CycMatrix::from_rows(a_mat));
    generators.insert("B".to_string(), CycMatrix::from_rows(b_mat));
    generators.insert("C".to_string(), CycMatrix::from_rows(c_mat));
    let nn = n as u32;
    let relations = vec![
        (word(&[("A", nn)]), word(&[])),
        (word(&[("B", nn)]), word(&[])),
        (word(&[("C", nn)]), word(&[])),
        (word(&[("A", 1), ("C", 1)]), word(&[("C", 1), ("A", 1)])),
        (word(&[("B", 1), ("C", 1)]), word(&[("C", 1), ("B", 1)])),
        (
            word(&[("A", 1), ("B", 1)]),
            word(&[("C", 1), ("B", 1), ("A", 1)]),
        ),
    ];
    let mut elements = Vec::new();
    for i in 0..nn {
        for j in 0..nn {
            for l in 0..nn {
                elements.push((
                    format!("a{i}b{j}c{l}"),
                    word(&[("A", i), ("B", j), ("C", l)]),
                ));
            }
        }
    }
    MatrixRep {
        dimension: dim,
        modulus: n,
        generators,
        relations,
        elements: Some(elements),
    }
}
