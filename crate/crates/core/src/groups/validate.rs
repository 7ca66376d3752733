//! Structural validation of character tables and subgroup embeddings.
//!
//! Every invariant is a named check in the report, so a rejected document can
//! say exactly which one failed.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, Zero};
use serde::Serialize;

use crate::cyclo::CycNum;
use crate::groups::structure::{inner_product, CharacterTable, ClassStructure, SubgroupEmbedding};

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub table: String,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

impl ValidationReport {
    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

struct Checker {
    checks: Vec<CheckResult>,
}

impl Checker {
    fn record(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.record(name, passed, String::new());
    }
}

fn validate_structure(ck: &mut Checker, prefix: &str, s: &ClassStructure) {
    let total: u64 = s.class_sizes.iter().sum();
    ck.record(
        &format!("{prefix}class sizes sum to order"),
        total == s.order,
        format!("sum {} vs order {}", total, s.order),
    );
    ck.check(
        &format!("{prefix}identity class has size 1"),
        s.class_sizes.get(s.identity_class) == Some(&1),
    );
    let nc = s.num_classes();
    let mut shape_ok = s.power_map.len() == nc;
    for row in &s.power_map {
        shape_ok &= row.len() == s.exponent as usize && row.iter().all(|&x| x < nc);
    }
    ck.check(&format!("{prefix}power map shape"), shape_ok);
    if !shape_ok {
        return;
    }
    let mut fixed_ok = true;
    for c in 0..nc {
        fixed_ok &= s.power_class(c, 1) == c || s.exponent == 1;
        fixed_ok &= s.power_class(c, 0) == s.identity_class;
        fixed_ok &= s.power_class(c, s.exponent as i64) == s.identity_class;
    }
    ck.check(
        &format!("{prefix}power map fixes i=1 and reaches identity at the exponent"),
        fixed_ok,
    );
    let mut comp_ok = true;
    'outer: for c in 0..nc {
        for i in 0..s.exponent {
            for j in 0..s.exponent {
                let lhs = s.power_class(s.power_class(c, i as i64), j as i64);
                let rhs = s.power_class(c, (i * j) as i64);
                if lhs != rhs {
                    comp_ok = false;
                    ck.record(
                        &format!("{prefix}power map composition"),
                        false,
                        format!("pi(pi({c},{i}),{j}) = {lhs} but pi({c},{}) = {rhs}", i * j),
                    );
                    break 'outer;
                }
            }
        }
    }
    if comp_ok {
        ck.check(&format!("{prefix}power map composition"), true);
    }
    let inv_ok = (0..nc).all(|c| s.class_sizes[s.inverse_class(c)] == s.class_sizes[c]);
    ck.check(
        &format!("{prefix}inverse classes preserve sizes"),
        inv_ok,
    );
    let lcm_orders = (0..nc)
        .map(|c| s.element_order(c))
        .fold(1u64, |acc, o| acc.lcm(&o));
    ck.record(
        &format!("{prefix}exponent is the lcm of element orders"),
        lcm_orders == s.exponent,
        format!("lcm {} vs exponent {}", lcm_orders, s.exponent),
    );
    ck.record(
        &format!("{prefix}cyclotomic modulus is a multiple of the exponent"),
        s.modulus.is_multiple_of(s.exponent),
        format!("modulus {} exponent {}", s.modulus, s.exponent),
    );
}

fn validate_embedding(
    ck: &mut Checker,
    idx: usize,
    ambient: &ClassStructure,
    e: &SubgroupEmbedding,
) {
    let p = format!("embedding {idx}: ");
    validate_structure(ck, &format!("{p}subgroup "), &e.sub);
    let sub_order: u64 = e.sub.class_sizes.iter().sum();
    ck.record(
        &format!("{p}index * |H| = |G|"),
        e.index * sub_order == ambient.order,
        format!("{} * {} vs {}", e.index, sub_order, ambient.order),
    );
    let fusion_ok = e.fusion.len() == e.sub.num_classes()
        && e.fusion.iter().all(|&c| c < ambient.num_classes());
    ck.check(&format!("{p}fusion map well formed"), fusion_ok);
    if !fusion_ok {
        return;
    }
    ck.check(
        &format!("{p}fusion sends identity to identity"),
        e.fusion[e.sub.identity_class] == ambient.identity_class,
    );
    // Each ambient class contains at least the fused subgroup classes.
    let mut per_class = vec![0u64; ambient.num_classes()];
    for (d, &c) in e.fusion.iter().enumerate() {
        per_class[c] += e.sub.class_sizes[d];
    }
    let within = per_class
        .iter()
        .zip(&ambient.class_sizes)
        .all(|(got, size)| got <= size);
    ck.check(
        &format!("{p}fused class sizes fit inside ambient classes"),
        within,
    );
    ck.record(
        &format!("{p}fused sizes account for every subgroup element"),
        per_class.iter().sum::<u64>() == sub_order,
        format!("{} vs |H| = {}", per_class.iter().sum::<u64>(), sub_order),
    );
    let fusion_powers = (0..e.sub.num_classes()).all(|d| {
        (0..e.sub.exponent).all(|i| {
            ambient.power_class(e.fusion[d], i as i64) == e.fusion[e.sub.power_class(d, i as i64)]
        })
    });
    ck.check(
        &format!("{p}fusion commutes with power maps"),
        fusion_powers,
    );
    if e.is_normal {
        if let Some(coset) = &e.coset_of_class {
            let shape = coset.len() == ambient.num_classes()
                && coset.iter().all(|&x| (x as u64) < e.index);
            ck.check(&format!("{p}coset labels well formed"), shape);
            if shape {
                ck.check(
                    &format!("{p}fused classes lie in the identity coset"),
                    e.fusion
                        .iter()
                        .all(|&c| coset[c] == coset[ambient.identity_class]),
                );
            }
            if let Some(mul) = &e.quotient_mul {
                let n = e.index as usize;
                let mut ok = mul.len() == n && mul.iter().all(|r| r.len() == n);
                if ok {
                    let id = coset[ambient.identity_class];
                    ok &= (0..n).all(|x| mul[id][x] == x && mul[x][id] == x);
                    // associativity on the (small) quotient
                    ok &= (0..n).all(|x| {
                        (0..n).all(|y| (0..n).all(|z| mul[mul[x][y]][z] == mul[x][mul[y][z]]))
                    });
                }
                ck.check(&format!("{p}quotient multiplication table"), ok);
            }
        } else {
            ck.check(&format!("{p}normal embedding has coset data"), false);
        }
        if let Some(actions) = &e.conj_action {
            let nh = e.sub.num_classes();
            let mut ok = actions.len() == e.index as usize;
            for perm in actions {
                ok &= perm.len() == nh;
                if !ok {
                    break;
                }
                let mut seen = vec![false; nh];
                for &t in perm {
                    if t >= nh || seen[t] {
                        ok = false;
                        break;
                    }
                    seen[t] = true;
                }
                if ok {
                    ok &= perm
                        .iter()
                        .enumerate()
                        .all(|(d, &t)| e.sub.class_sizes[t] == e.sub.class_sizes[d]);
                }
            }
            ck.check(
                &format!("{p}conjugation action permutes subgroup classes preserving sizes"),
                ok,
            );
            if ok {
                let equivariant = actions.iter().all(|perm| {
                    (0..e.sub.num_classes()).all(|d| {
                        (0..e.sub.exponent).all(|i| {
                            e.sub.power_class(perm[d], i as i64)
                                == perm[e.sub.power_class(d, i as i64)]
                        })
                    })
                });
                ck.check(
                    &format!("{p}conjugation action commutes with power maps"),
                    equivariant,
                );
            }
        } else {
            ck.check(&format!("{p}normal embedding has a conjugation action"), false);
        }
    }
    if let Some(t) = &e.sub_table {
        ck.check(
            &format!("{p}subgroup table matches subgroup structure"),
            t.structure == e.sub,
        );
    }
}

/// Run every invariant check on a character table (and its embeddings) and
/// report each one by name.
pub fn validate_character_table(table: &CharacterTable) -> ValidationReport {
    let mut ck = Checker { checks: Vec::new() };
    let s = &table.structure;
    validate_structure(&mut ck, "", s);

    ck.record(
        "number of irreducibles equals number of classes",
        table.irreducibles.len() == s.num_classes(),
        format!(
            "{} irreducibles vs {} classes",
            table.irreducibles.len(),
            s.num_classes()
        ),
    );
    let lengths_ok = table
        .irreducibles
        .iter()
        .all(|chi| chi.values.len() == s.num_classes());
    ck.check("character rows have one value per class", lengths_ok);
    let moduli_ok = table
        .irreducibles
        .iter()
        .flat_map(|chi| chi.values.iter())
        .all(|v| v.modulus() == s.modulus);
    ck.check("character values share the table modulus", moduli_ok);
    if !lengths_ok || !moduli_ok {
        let all_passed = ck.checks.iter().all(|c| c.passed);
        return ValidationReport {
            table: table.name.clone(),
            checks: ck.checks,
            all_passed,
        };
    }

    // Degree bookkeeping: sum of squared degrees is the group order.
    let mut sum_sq = BigInt::zero();
    let mut degrees_integral = true;
    for chi in &table.irreducibles {
        match chi.degree(s).to_integer() {
            Some(d) if d > BigInt::zero() => sum_sq += &d * &d,
            _ => degrees_integral = false,
        }
    }
    ck.check("degrees are positive integers", degrees_integral);
    ck.record(
        "degree sum",
        degrees_integral && sum_sq == BigInt::from(s.order),
        format!("sum of squared degrees {} vs order {}", sum_sq, s.order),
    );

    // Row orthogonality.
    let mut ortho_ok = true;
    'rows: for (i, a) in table.irreducibles.iter().enumerate() {
        for (j, b) in table.irreducibles.iter().enumerate() {
            let ip = inner_product(s, a, b);
            let expected = if i == j {
                CycNum::one(s.modulus)
            } else {
                CycNum::zero(s.modulus)
            };
            if ip != expected {
                ortho_ok = false;
                ck.record(
                    "row orthogonality",
                    false,
                    format!("<chi_{i}, chi_{j}> = {ip}"),
                );
                break 'rows;
            }
        }
    }
    if ortho_ok {
        ck.check("row orthogonality", true);
    }

    let expected_linear: Vec<usize> = table
        .irreducibles
        .iter()
        .enumerate()
        .filter(|(_, chi)| chi.degree(s).is_one())
        .map(|(i, _)| i)
        .collect();
    ck.check(
        "linear indices are exactly the degree-1 rows",
        table.linear_indices == expected_linear,
    );

    // Second orthogonality at the identity column: sum over irreducibles of
    // deg^2 already checked; also check column norm for a non-identity class.
    let ratio_ok = {
        let mut ok = true;
        for c in 0..s.num_classes() {
            let mut col = CycNum::zero(s.modulus);
            for chi in &table.irreducibles {
                col = &col + &(&chi.values[c] * &chi.values[c].conj());
            }
            let expected = BigRational::from_integer(BigInt::from(s.order))
                / BigRational::from_integer(BigInt::from(s.class_sizes[c]));
            match col.to_rational() {
                Some(r) => ok &= r == expected,
                None => ok = false,
            }
        }
        ok
    };
    ck.check("column norms equal centralizer orders", ratio_ok);

    for (i, e) in table.embeddings.iter().enumerate() {
        validate_embedding(&mut ck, i, s, e);
    }

    let all_passed = ck.checks.iter().all(|c| c.passed);
    ValidationReport {
        table: table.name.clone(),
        checks: ck.checks,
        all_passed,
    }
}
