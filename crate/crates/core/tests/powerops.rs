//! Power-character tests: frozen small cases, identities, and agreement with
//! explicitly constructed symmetric/exterior power matrices.

mod common;

use std::collections::BTreeMap;

use common::{ext_power_matrix, sym_power_matrix};
use num::bigint::BigInt;

use twistcheck::cyclo::CycNum;
use twistcheck::equivalence::inner_product_and_decompose;
use twistcheck::groups::matrixrep::{char_of_matrix_rep, word, CycMatrix, MatrixRep, Word};
use twistcheck::groups::structure::{CharacterTable, ClassFunction};
use twistcheck::groups::{
    build_cyclic, build_d4, build_direct_product, build_heisenberg, build_q8, build_s3,
};
use twistcheck::powerops::{
    adjoint_char, asai_char, dual_char, ext_power_char, ext_power_char_capped, sym_power_char,
    sym_power_char_capped, tensor_power_char, tensor_power_char_capped, twist_char, PowerOpError,
    DEFAULT_POWER_CAP,
};

fn int(modulus: u64, v: i64) -> CycNum {
    CycNum::from_integer(modulus, v)
}

fn int_row(modulus: u64, vals: &[i64]) -> ClassFunction {
    ClassFunction::new(vals.iter().map(|&v| int(modulus, v)).collect())
}

/// The regular representation of C2: diag(1, 1) and diag(1, -1).
fn c2_regular_rep() -> (CharacterTable, MatrixRep, Vec<Word>) {
    let table = build_cyclic(2).unwrap();
    let mut generators = BTreeMap::new();
    generators.insert(
        "g".to_string(),
        CycMatrix::from_rows(vec![
            vec![int(2, 1), int(2, 0)],
            vec![int(2, 0), int(2, -1)],
        ]),
    );
    let rep = MatrixRep {
        dimension: 2,
        modulus: 2,
        generators,
        relations: vec![(word(&[("g", 2)]), word(&[]))],
        elements: Some(vec![
            ("e".to_string(), word(&[])),
            ("g".to_string(), word(&[("g", 1)])),
        ]),
    };
    let class_reps = vec![word(&[]), word(&[("g", 1)])];
    (table, rep, class_reps)
}

#[test]
fn tensor_power_examples() {
    let (s3, _, _) = build_s3();
    let trivial = &s3.irreducibles[0];
    for k in 0..5 {
        assert_eq!(tensor_power_char(trivial, k).unwrap(), trivial.clone());
    }

    // H3: cubes of the two degree-3 rows agree; at the class of C the value
    // is (3 zeta_3)^3 = 27.
    let h3 = build_heisenberg(3).unwrap();
    let chi1 = &h3.table.irreducibles[h3.degree_n_index(1)];
    let chi2 = &h3.table.irreducibles[h3.degree_n_index(2)];
    let cube1 = tensor_power_char(chi1, 3).unwrap();
    let cube2 = tensor_power_char(chi2, 3).unwrap();
    assert_eq!(cube1, cube2);
    assert_eq!(cube1.values[1], int(3, 27));

    // S3 standard squared at the 3-cycle class: (-1)^2 = 1.
    let standard = &s3.irreducibles[2];
    let sq = tensor_power_char(standard, 2).unwrap();
    assert_eq!(sq.values[2], int(6, 1));
}

#[test]
fn sym_power_examples() {
    let (s3, _, _) = build_s3();
    let standard = &s3.irreducibles[2];
    // k = 0 is the all-ones class function, k = 1 is the character itself.
    assert_eq!(
        sym_power_char(&s3.structure, standard, 0).unwrap(),
        ClassFunction::trivial(&s3.structure)
    );
    assert_eq!(
        sym_power_char(&s3.structure, standard, 1).unwrap(),
        standard.clone()
    );

    // C2 regular character (2, 0): the symmetric square is (3, 1), matching
    // the explicit action on the monomial basis e1^2, e1 e2, e2^2.
    let (c2, rep, class_reps) = c2_regular_rep();
    let regular = char_of_matrix_rep(&rep, &c2.structure, &class_reps).unwrap();
    assert_eq!(regular, int_row(2, &[2, 0]));
    let sym2 = sym_power_char(&c2.structure, &regular, 2).unwrap();
    assert_eq!(sym2, int_row(2, &[3, 1]));
    for (c, w) in class_reps.iter().enumerate() {
        let m = rep.evaluate(w).unwrap();
        assert_eq!(sym_power_matrix(&m, 2).trace(), sym2.values[c]);
    }
}

#[test]
fn ext_power_examples() {
    let (s3, rep, class_reps) = build_s3();
    let standard = &s3.irreducibles[2];
    // The exterior square of the standard character is the sign character,
    // i.e. the determinants of the standard matrices.
    let ext2 = ext_power_char(&s3.structure, standard, 2).unwrap();
    assert_eq!(ext2, s3.irreducibles[1]);
    for (c, w) in class_reps.iter().enumerate() {
        let m = rep.evaluate(w).unwrap();
        assert_eq!(ext_power_matrix(&m, 2).trace(), ext2.values[c]);
    }

    // Above the degree everything vanishes.
    let ext3 = ext_power_char(&s3.structure, standard, 3).unwrap();
    assert!(ext3.values.iter().all(|v| v.is_zero()));

    // T^2 = S^2 + E^2 pointwise on the C2 regular character: 4 = 3 + 1 at
    // the identity and 0 = 1 + (-1) at the involution.
    let (c2, rep, class_reps) = c2_regular_rep();
    let regular = char_of_matrix_rep(&rep, &c2.structure, &class_reps).unwrap();
    let t2 = tensor_power_char(&regular, 2).unwrap();
    let s2 = sym_power_char(&c2.structure, &regular, 2).unwrap();
    let e2 = ext_power_char(&c2.structure, &regular, 2).unwrap();
    assert_eq!(t2, int_row(2, &[4, 0]));
    assert_eq!(s2, int_row(2, &[3, 1]));
    assert_eq!(e2, int_row(2, &[1, -1]));
    assert_eq!(t2, s2.pointwise_add(&e2));
}

#[test]
fn tensor_square_splits_into_sym_and_ext_everywhere() {
    let (s3, _, _) = build_s3();
    let h3 = build_heisenberg(3).unwrap();
    let tables = [
        build_cyclic(6).unwrap(),
        s3,
        build_d4(),
        build_q8(),
        h3.table,
    ];
    for table in &tables {
        for chi in &table.irreducibles {
            let t2 = tensor_power_char(chi, 2).unwrap();
            let s2 = sym_power_char(&table.structure, chi, 2).unwrap();
            let e2 = ext_power_char(&table.structure, chi, 2).unwrap();
            assert_eq!(t2, s2.pointwise_add(&e2), "{}", table.name);
        }
    }
}

#[test]
fn degree_bookkeeping_for_small_powers() {
    // For k >= 2, deg S^k + deg E^k <= n^k with equality exactly when k = 2
    // or n <= 1; and the two mixed-symmetry pieces of T^3 have equal integer
    // dimension n(n^2-1)/3.
    let binom = |n: u64, k: u64| -> u64 {
        if k > n {
            return 0;
        }
        let mut acc = 1u64;
        for t in 0..k {
            acc = acc * (n - t) / (t + 1);
        }
        acc
    };
    for n in 1u64..=6 {
        for k in 2u64..=4 {
            let sym = binom(n + k - 1, k);
            let ext = binom(n, k);
            let total = n.pow(k as u32);
            assert!(sym + ext <= total);
            assert_eq!(sym + ext == total, k == 2 || n <= 1, "n={n} k={k}");
        }
        let mixed2 = n.pow(3) - binom(n + 2, 3) - binom(n, 3);
        assert_eq!(mixed2 % 2, 0);
        assert_eq!(mixed2 / 2, n * (n * n - 1) / 3);
    }
}

#[test]
fn sym_and_ext_agree_with_power_matrices_for_matrix_backed_characters() {
    // S3 standard and every Heisenberg rho_a at k <= 3; H5 at k <= 2 for the
    // whole family and k = 3 for rho_1.
    let (s3, rep, class_reps) = build_s3();
    let mut cases: Vec<(CharacterTable, MatrixRep, Vec<Word>, u32)> =
        vec![(s3, rep, class_reps, 3)];
    let h3 = build_heisenberg(3).unwrap();
    for (_, rep) in &h3.reps {
        cases.push((h3.table.clone(), rep.clone(), h3.class_reps.clone(), 3));
    }
    let h5 = build_heisenberg(5).unwrap();
    for (i, (_, rep)) in h5.reps.iter().enumerate() {
        let max_k = if i == 0 { 3 } else { 2 };
        cases.push((h5.table.clone(), rep.clone(), h5.class_reps.clone(), max_k));
    }
    for (table, rep, class_reps, max_k) in &cases {
        let chi = char_of_matrix_rep(rep, &table.structure, class_reps).unwrap();
        for k in 1..=*max_k {
            let sym = sym_power_char(&table.structure, &chi, k).unwrap();
            let ext = ext_power_char(&table.structure, &chi, k).unwrap();
            for (c, w) in class_reps.iter().enumerate() {
                let m = rep.evaluate(w).unwrap();
                assert_eq!(
                    sym_power_matrix(&m, k).trace(),
                    sym.values[c],
                    "sym {} k={k} class {c}",
                    table.name
                );
                if (k as usize) <= rep.dimension {
                    assert_eq!(
                        ext_power_matrix(&m, k).trace(),
                        ext.values[c],
                        "ext {} k={k} class {c}",
                        table.name
                    );
                } else {
                    assert!(ext.values[c].is_zero());
                }
            }
        }
    }
}

#[test]
fn adjoint_examples() {
    let (s3, _, _) = build_s3();
    // Any linear character has trivial adjoint.
    for &i in &s3.linear_indices {
        assert_eq!(
            adjoint_char(&s3.structure, &s3.irreducibles[i]),
            ClassFunction::trivial(&s3.structure)
        );
    }
    // The standard character gives (4, 0, 1).
    assert_eq!(
        adjoint_char(&s3.structure, &s3.irreducibles[2]),
        int_row(6, &[4, 0, 1])
    );

    // H5: the adjoints of all four degree-5 rows coincide: 25 on the five
    // central classes, 0 elsewhere.
    let h5 = build_heisenberg(5).unwrap();
    let ad1 = adjoint_char(&h5.table.structure, &h5.table.irreducibles[h5.degree_n_index(1)]);
    for a in 2..5 {
        let ad = adjoint_char(&h5.table.structure, &h5.table.irreducibles[h5.degree_n_index(a)]);
        assert_eq!(ad1, ad);
    }
    for c in 0..h5.table.structure.num_classes() {
        let expected = if c < 5 { int(5, 25) } else { int(5, 0) };
        assert_eq!(ad1.values[c], expected);
    }
}

#[test]
fn adjoint_is_char_times_dual() {
    let (s3, _, _) = build_s3();
    let h3 = build_heisenberg(3).unwrap();
    let tables = [build_cyclic(8).unwrap(), s3, build_q8(), h3.table];
    for table in &tables {
        for chi in &table.irreducibles {
            let ad = adjoint_char(&table.structure, chi);
            let dual = dual_char(&table.structure, chi);
            assert_eq!(ad, chi.pointwise_mul(&dual), "{}", table.name);
        }
    }
}

#[test]
fn asai_examples() {
    let c4 = build_cyclic(4).unwrap();
    let faithful = &c4.irreducibles[1];
    // A = {identity}: the character itself.
    let identity: Vec<usize> = (0..4).collect();
    assert_eq!(
        asai_char(&c4.structure, faithful, &[identity.clone()]).unwrap(),
        faithful.clone()
    );
    // A = {identity, inversion} on a faithful linear character of C4:
    // chi(g) chi(g^{-1}) = 1.
    let inversion = vec![0usize, 3, 2, 1];
    assert_eq!(
        asai_char(&c4.structure, faithful, &[identity, inversion]).unwrap(),
        ClassFunction::trivial(&c4.structure)
    );

    // C3 x C3 with the swap automorphism: chi (x) 1 becomes
    // (x, y) -> chi(x) chi(y), the split product formula.
    let c3 = build_cyclic(3).unwrap();
    let product = build_direct_product(&c3, &c3);
    let swap: Vec<usize> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (y * 3 + x) as usize))
        .collect();
    let id9: Vec<usize> = (0..9).collect();
    // chi (x) 1 where chi is the faithful row of the first factor: row (1, 0).
    let chi_outer = &product.irreducibles[3];
    let asai = asai_char(&product.structure, chi_outer, &[id9, swap]).unwrap();
    for x in 0..3u64 {
        for y in 0..3u64 {
            let c = (x * 3 + y) as usize;
            assert_eq!(
                asai.values[c],
                CycNum::root_of_unity(3, ((x + y) % 3) as i64),
                "class ({x}, {y})"
            );
        }
    }

    // A permutation that does not commute with the power maps is rejected.
    let bad = vec![1usize, 0, 2, 3];
    assert!(matches!(
        asai_char(&c4.structure, faithful, &[bad]),
        Err(PowerOpError::BadAutomorphism { .. })
    ));
}

#[test]
fn twist_examples() {
    let (s3, _, _) = build_s3();
    let standard = &s3.irreducibles[2];
    let trivial = &s3.irreducibles[0];
    let sign = &s3.irreducibles[1];
    assert_eq!(
        twist_char(&s3.structure, standard, trivial).unwrap(),
        standard.clone()
    );
    // standard (x) sign = standard.
    assert_eq!(
        twist_char(&s3.structure, standard, sign).unwrap(),
        standard.clone()
    );
    // Twisting by a non-linear character is an error.
    assert!(matches!(
        twist_char(&s3.structure, trivial, standard),
        Err(PowerOpError::TwistNotLinear)
    ));

    // H3: every linear twist fixes the degree-3 rows.
    let h3 = build_heisenberg(3).unwrap();
    let chi1 = &h3.table.irreducibles[h3.degree_n_index(1)];
    for &l in &h3.table.linear_indices {
        let twisted = twist_char(
            &h3.table.structure,
            chi1,
            &h3.table.irreducibles[l],
        )
        .unwrap();
        assert_eq!(twisted, chi1.clone());
    }
}

#[test]
fn dual_examples() {
    let (s3, _, _) = build_s3();
    let standard = &s3.irreducibles[2];
    assert_eq!(dual_char(&s3.structure, standard), standard.clone());

    let h3 = build_heisenberg(3).unwrap();
    let chi1 = &h3.table.irreducibles[h3.degree_n_index(1)];
    let chi2 = &h3.table.irreducibles[h3.degree_n_index(2)];
    assert_eq!(dual_char(&h3.table.structure, chi1), chi2.clone());

    // dual of dual is the identity on whole tables.
    for table in [&s3, &h3.table, &build_q8()] {
        for chi in &table.irreducibles {
            assert_eq!(
                dual_char(&table.structure, &dual_char(&table.structure, chi)),
                chi.clone()
            );
        }
    }
}

#[test]
fn power_outputs_of_genuine_characters_are_genuine() {
    let (s3, _, _) = build_s3();
    let h3 = build_heisenberg(3).unwrap();
    let tables = [
        build_cyclic(6).unwrap(),
        s3,
        build_d4(),
        build_q8(),
        h3.table,
    ];
    for table in &tables {
        for chi in &table.irreducibles {
            let outputs = vec![
                tensor_power_char(chi, 2).unwrap(),
                tensor_power_char(chi, 3).unwrap(),
                sym_power_char(&table.structure, chi, 2).unwrap(),
                sym_power_char(&table.structure, chi, 3).unwrap(),
                ext_power_char(&table.structure, chi, 2).unwrap(),
                adjoint_char(&table.structure, chi),
            ];
            for out in outputs {
                let d = inner_product_and_decompose(table, &out);
                assert!(d.genuine, "{}: power output must be genuine", table.name);
            }
        }
    }
}

#[test]
fn power_cap_is_enforced() {
    let c2 = build_cyclic(2).unwrap();
    let chi = &c2.irreducibles[1];
    let too_big = DEFAULT_POWER_CAP + 1;
    assert!(matches!(
        tensor_power_char(chi, too_big),
        Err(PowerOpError::ExceedsCap { .. })
    ));
    assert!(matches!(
        sym_power_char(&c2.structure, chi, too_big),
        Err(PowerOpError::ExceedsCap { .. })
    ));
    assert!(matches!(
        ext_power_char(&c2.structure, chi, too_big),
        Err(PowerOpError::ExceedsCap { .. })
    ));
    // The capped variants allow larger exponents on request.
    assert!(tensor_power_char_capped(chi, 12, 12).is_ok());
    assert!(sym_power_char_capped(&c2.structure, chi, 12, 12).is_ok());
    assert!(ext_power_char_capped(&c2.structure, chi, 12, 12).is_ok());
}

#[test]
fn sym_degrees_follow_the_binomial_formula() {
    let h3 = build_heisenberg(3).unwrap();
    let chi = &h3.table.irreducibles[h3.degree_n_index(1)];
    let s = &h3.table.structure;
    // degree C(n + k - 1, k) for degree-n input.
    let expected = [1u64, 3, 6, 10, 15];
    for (k, e) in expected.iter().enumerate() {
        let sym = sym_power_char(s, chi, k as u32).unwrap();
        assert_eq!(
            sym.integer_degree(s).unwrap(),
            BigInt::from(*e),
            "k = {k}"
        );
    }
    // Exterior degrees C(n, k).
    let expected_ext = [1u64, 3, 3, 1, 0];
    for (k, e) in expected_ext.iter().enumerate() {
        let ext = ext_power_char(s, chi, k as u32).unwrap();
        assert_eq!(ext.integer_degree(s).unwrap(), BigInt::from(*e), "k = {k}");
    }
}
