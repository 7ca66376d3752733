//! Twist-equivalence decisions and their obstructions: Schur inner products
//! and decomposition into irreducibles, pointwise power-character comparison
//! with root-of-unity witnesses, exhaustive twist search over the linear
//! characters, extension of twists from normal subgroups, Clifford analysis
//! of restrictions, and the twist-or-dual search behind equal adjoints.
//!
//! Twist searches are exhaustive over the degree-1 rows of the table: at
//! finite level an abelian twisting character is exactly a linear character,
//! so the searches are decidable and exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cyclo::{root_of_unity_ratio, CycError, CycNum, RootRatio};
use crate::groups::structure::{
    inner_product, CharacterTable, ClassFunction, GroupError, SubgroupEmbedding,
};
use crate::powerops::{adjoint_char, dual_char};

#[derive(Debug, Error)]
pub enum EquivError {
    #[error("characters live on different numbers of classes")]
    TableMismatch,
    #[error("embedding is not normal")]
    NotNormal,
    #[error("restricted characters do not satisfy chi2|H = chi1|H * chi'")]
    TwistPreconditionFailed,
    #[error("chi' must be a linear character of the subgroup")]
    ChiPrimeNotLinear,
    #[error("adjoint characters differ; the twist-or-dual search does not apply")]
    AdjointMismatch,
    #[error("restriction does not decompose with integer multiplicities")]
    NonIntegralRestriction,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cyclo(#[from] CycError),
}

// ---------------------------------------------------------------------------
// Inner products and decomposition
// ---------------------------------------------------------------------------

/// Decomposition data of a class function against a table of irreducibles.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// <chi, chi>, exact.
    pub selfnorm: CycNum,
    /// <chi, chi_i> for every irreducible row, exact.
    pub multiplicities: Vec<CycNum>,
    /// True when every multiplicity is a non-negative integer and the
    /// reconstruction sum_i m_i chi_i = chi holds (it always does once the
    /// multiplicities are rational, since the irreducibles span).
    pub genuine: bool,
}

impl Decomposition {
    pub fn selfnorm_rational(&self) -> Option<BigRational> {
        self.selfnorm.to_rational()
    }

    pub fn integer_multiplicities(&self) -> Option<Vec<BigInt>> {
        self.multiplicities.iter().map(|m| m.to_integer()).collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.genuine && self.selfnorm.is_one()
    }
}

/// Schur inner products of a class function with every irreducible, plus the
/// genuineness verdict. A non-integer or negative multiplicity flags "not a
/// genuine character" rather than failing.
pub fn inner_product_and_decompose(table: &CharacterTable, chi: &ClassFunction) -> Decomposition {
    let s = &table.structure;
    let selfnorm = inner_product(s, chi, chi);
    let multiplicities: Vec<CycNum> = table
        .irreducibles
        .iter()
        .map(|row| inner_product(s, chi, row))
        .collect();
    let mut genuine = true;
    let mut ints = Vec::with_capacity(multiplicities.len());
    for m in &multiplicities {
        match m.to_integer() {
            Some(i) if !i.is_negative() => ints.push(i),
            _ => {
                genuine = false;
                break;
            }
        }
    }
    if genuine {
        // Verify the reconstruction exactly.
        let mut rebuilt = ClassFunction::zero(s);
        for (i, m) in ints.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let scaled = table.irreducibles[i].scale(&BigRational::from_integer(m.clone()));
            rebuilt = rebuilt.pointwise_add(&scaled);
        }
        genuine = rebuilt == *chi;
    }
    Decomposition {
        selfnorm,
        multiplicities,
        genuine,
    }
}

// ---------------------------------------------------------------------------
// Pointwise power comparison
// ---------------------------------------------------------------------------

/// Per-class witness for the power comparison: the ratio chi1(c)/chi2(c)
/// classified as a root of unity where possible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassRatioWitness {
    BothZero,
    Root {
        exponent: u64,
        order: u64,
        negated: bool,
    },
    NotARootOfUnity,
    /// chi2(c) = 0 but chi1(c) != 0.
    Undefined,
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioTestVerdict {
    pub k: u32,
    /// True iff chi1(c)^k = chi2(c)^k at every class.
    pub equal_powers: bool,
    pub witnesses: Vec<ClassRatioWitness>,
}

/// Compare the pointwise k-th powers of two characters and record the
/// root-of-unity ratio at every class.
pub fn power_char_ratio_test(
    chi1: &ClassFunction,
    chi2: &ClassFunction,
    k: u32,
) -> Result<RatioTestVerdict, EquivError> {
    if chi1.values.len() != chi2.values.len() {
        return Err(EquivError::TableMismatch);
    }
    let mut equal_powers = true;
    let mut witnesses = Vec::with_capacity(chi1.values.len());
    for (a, b) in chi1.values.iter().zip(&chi2.values) {
        if a.pow(k as u64) != b.pow(k as u64) {
            equal_powers = false;
        }
        let witness = match root_of_unity_ratio(a, b) {
            Ok(Some(RootRatio::BothZero)) => ClassRatioWitness::BothZero,
            Ok(Some(RootRatio::Root {
                exponent,
                order,
                negated,
            })) => ClassRatioWitness::Root {
                exponent,
                order,
                negated,
            },
            Ok(None) => ClassRatioWitness::NotARootOfUnity,
            Err(CycError::RatioUndefined) => ClassRatioWitness::Undefined,
            Err(e) => return Err(e.into()),
        };
        witnesses.push(witness);
    }
    Ok(RatioTestVerdict {
        k,
        equal_powers,
        witnesses,
    })
}

// ---------------------------------------------------------------------------
// Twist search
// ---------------------------------------------------------------------------

/// All linear characters lambda with chi2 = chi1 * lambda pointwise,
/// exhaustively over the table's degree-1 rows. With a restriction, both
/// characters are first restricted along the embedding and lambda ranges over
/// the subgroup table's degree-1 rows instead. Returned indices are sorted.
pub fn find_twist(
    table: &CharacterTable,
    chi1: &ClassFunction,
    chi2: &ClassFunction,
    restriction: Option<&SubgroupEmbedding>,
) -> Result<Vec<usize>, EquivError> {
    match restriction {
        None => {
            let mut hits = Vec::new();
            for &i in &table.linear_indices {
                if chi2 == &chi1.pointwise_mul(&table.irreducibles[i]) {
                    hits.push(i);
                }
            }
            Ok(hits)
        }
        Some(e) => {
            let sub_table = e.sub_table()?;
            let r1 = e.restrict(&table.structure, chi1)?;
            let r2 = e.restrict(&table.structure, chi2)?;
            let mut hits = Vec::new();
            for &i in &sub_table.linear_indices {
                if r2 == r1.pointwise_mul(&sub_table.irreducibles[i]) {
                    hits.push(i);
                }
            }
            Ok(hits)
        }
    }
}

// ---------------------------------------------------------------------------
// Extension of twists from a normal subgroup
// ---------------------------------------------------------------------------

/// Outcome of attempting to extend a subgroup-level twist to the full group.
#[derive(Debug, Clone, Serialize)]
pub struct ExtendTwistOutcome {
    /// A linear character chi of G with chi2 = chi1 * chi and chi|H = chi',
    /// when one exists (index into the ambient table's rows).
    pub extension: Option<usize>,
    /// Whether chi1|H is irreducible.
    pub restriction_irreducible: bool,
    /// Whether chi' is invariant under the conjugation action of G on H.
    pub chi_prime_invariant: bool,
    /// Ambient linear characters restricting to chi' (whether or not they
    /// realize the twist).
    pub restricting_candidates: Vec<usize>,
}

/// Try to extend a twist chi2|H = chi1|H * chi' on a normal subgroup to a
/// global twist chi2 = chi1 * chi. The precondition is verified exactly.
/// When chi1|H is irreducible and chi' is invariant under conjugation, an
/// extension exists whenever some linear character of G restricts to chi';
/// the diagnostics expose both hypotheses.
pub fn extend_twist(
    table: &CharacterTable,
    chi1: &ClassFunction,
    chi2: &ClassFunction,
    e: &SubgroupEmbedding,
    chi_prime: &ClassFunction,
) -> Result<ExtendTwistOutcome, EquivError> {
    if !e.is_normal {
        return Err(EquivError::NotNormal);
    }
    let sub_table = e.sub_table()?;
    let sub = &sub_table.structure;
    if !chi_prime.is_linear(sub) {
        return Err(EquivError::ChiPrimeNotLinear);
    }
    let r1 = e.restrict(&table.structure, chi1)?;
    let r2 = e.restrict(&table.structure, chi2)?;
    if r2 != r1.pointwise_mul(chi_prime) {
        return Err(EquivError::TwistPreconditionFailed);
    }

    let restriction_irreducible = inner_product(sub, &r1, &r1).is_one();
    let chi_prime_invariant = e
        .conj_action()?
        .iter()
        .all(|perm| perm.iter().enumerate().all(|(d, &t)| {
            chi_prime.values[t] == chi_prime.values[d]
        }));

    let mut restricting_candidates = Vec::new();
    let mut extension = None;
    for &i in &table.linear_indices {
        let lambda = &table.irreducibles[i];
        if e.restrict(&table.structure, lambda)? == *chi_prime {
            restricting_candidates.push(i);
            if extension.is_none() && chi2 == &chi1.pointwise_mul(lambda) {
                extension = Some(i);
            }
        }
    }
    Ok(ExtendTwistOutcome {
        extension,
        restriction_irreducible,
        chi_prime_invariant,
        restricting_candidates,
    })
}

// ---------------------------------------------------------------------------
// Clifford analysis
// ---------------------------------------------------------------------------

/// Decomposition of a restricted character into subgroup irreducibles, with
/// the conjugation orbits and the stabilizer of the first constituent.
#[derive(Debug, Clone)]
pub struct CliffordAnalysis {
    /// (subgroup irreducible index, multiplicity), multiplicity > 0.
    pub constituents: Vec<(usize, BigInt)>,
    /// Partition of the constituent indices into conjugation orbits.
    pub orbits: Vec<Vec<usize>>,
    /// Coset labels fixing the first constituent.
    pub stabilizer_cosets: Vec<usize>,
    /// When the stabilizer is the subgroup itself: whether chi equals the
    /// induced character of the first constituent, exactly.
    pub induced_check: Option<bool>,
}

/// Decompose chi restricted to a normal subgroup and analyze the conjugation
/// action on its constituents.
pub fn clifford_analysis(
    table: &CharacterTable,
    chi: &ClassFunction,
    e: &SubgroupEmbedding,
) -> Result<CliffordAnalysis, EquivError> {
    if !e.is_normal {
        return Err(EquivError::NotNormal);
    }
    let sub_table = e.sub_table()?;
    let sub = &sub_table.structure;
    let restricted = e.restrict(&table.structure, chi)?;
    let decomposition = inner_product_and_decompose(sub_table, &restricted);
    let mults = decomposition
        .integer_multiplicities()
        .ok_or(EquivError::NonIntegralRestriction)?;
    if mults.iter().any(|m| m.is_negative()) {
        return Err(EquivError::NonIntegralRestriction);
    }
    let constituents: Vec<(usize, BigInt)> = mults
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(i, m)| (i, m.clone()))
        .collect();

    // Permutation of the subgroup irreducibles induced by each coset.
    let actions = e.conj_action()?;
    let char_perms: Vec<Vec<usize>> = actions
        .iter()
        .map(|perm| {
            sub_table
                .irreducibles
                .iter()
                .map(|psi| {
                    let moved = ClassFunction::new(
                        (0..sub.num_classes())
                            .map(|d| psi.values[perm[d]].clone())
                            .collect(),
                    );
                    sub_table
                        .irreducibles
                        .iter()
                        .position(|row| *row == moved)
                        .expect("conjugate of an irreducible is an irreducible")
                })
                .collect()
        })
        .collect();

    // Orbits of the constituent set.
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut assigned: Vec<usize> = Vec::new();
    for &(start, _) in &constituents {
        if assigned.contains(&start) {
            continue;
        }
        let mut orbit = vec![start];
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for perm in &char_perms {
                let y = perm[x];
                if !orbit.contains(&y) {
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        orbit.sort_unstable();
        assigned.extend(orbit.iter().copied());
        orbits.push(orbit);
    }

    let (stabilizer_cosets, induced_check) = if let Some(&(i0, _)) = constituents.first() {
        let stab: Vec<usize> = char_perms
            .iter()
            .enumerate()
            .filter(|(_, perm)| perm[i0] == i0)
            .map(|(phi, _)| phi)
            .collect();
        let identity_coset = e.identity_coset(&table.structure)?;
        let check = if stab == vec![identity_coset] {
            let induced = e.induce(&table.structure, &sub_table.irreducibles[i0])?;
            Some(induced == *chi)
        } else {
            None
        };
        (stab, check)
    } else {
        (Vec::new(), None)
    };

    Ok(CliffordAnalysis {
        constituents,
        orbits,
        stabilizer_cosets,
        induced_check,
    })
}

// ---------------------------------------------------------------------------
// Adjoint twist-or-dual search
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistBranch {
    Twist,
    DualTwist,
}

/// Given two characters with equal adjoint characters (verified), search for
/// a linear lambda with chi2 = chi1 * lambda, then with
/// chi2 = dual(chi1) * lambda. Absent means neither relation holds for any
/// linear character; equal adjoints do not force either one.
pub fn adjoint_twist_or_dual_search(
    table: &CharacterTable,
    chi1: &ClassFunction,
    chi2: &ClassFunction,
) -> Result<Option<(TwistBranch, usize)>, EquivError> {
    let s = &table.structure;
    if adjoint_char(s, chi1) != adjoint_char(s, chi2) {
        return Err(EquivError::AdjointMismatch);
    }
    let twists = find_twist(table, chi1, chi2, None)?;
    if let Some(&lambda) = twists.first() {
        return Ok(Some((TwistBranch::Twist, lambda)));
    }
    let dual = dual_char(s, chi1);
    let dual_twists = find_twist(table, &dual, chi2, None)?;
    if let Some(&lambda) = dual_twists.first() {
        return Ok(Some((TwistBranch::DualTwist, lambda)));
    }
    Ok(None)
}

/// Convenience wrapper: true when the two characters agree pointwise.
pub fn characters_equal(chi1: &ClassFunction, chi2: &ClassFunction) -> bool {
    chi1 == chi2
}
