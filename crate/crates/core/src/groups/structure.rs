//! Finite groups presented by conjugacy-class data.
//!
//! A group enters the workbench as a [`ClassStructure`]: class sizes, the
//! power maps c -> class(g^i), and a cyclotomic modulus (the group exponent).
//! Characters are [`ClassFunction`]s over that structure. No element lists
//! are stored here; explicit elements appear only in [`crate::groups::MatrixRep`].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use thiserror::Error;

use crate::cyclo::{CycError, CycNum};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("class index {0} out of range ({1} classes)")]
    ClassIndex(usize, usize),
    #[error("class function has {got} values, expected {expected}")]
    ValueCount { got: usize, expected: usize },
    #[error("order must be positive")]
    ZeroOrder,
    #[error("n must be an odd prime, got {0}")]
    NotAnOddPrime(u64),
    #[error("embedding has no subgroup character table")]
    MissingSubTable,
    #[error("embedding has no coset data")]
    MissingCosetData,
    #[error("embedding is not marked normal")]
    NotNormal,
    #[error("cyclotomic arithmetic failed: {0}")]
    Cyclo(#[from] CycError),
    #[error("{0}")]
    Invalid(String),
}

/// Conjugacy-class data of a finite group.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassStructure {
    pub order: u64,
    pub exponent: u64,
    pub class_sizes: Vec<u64>,
    pub identity_class: usize,
    /// Cyclotomic modulus for character values; the group exponent (or a
    /// multiple) so that every character value lies in Q(zeta_modulus).
    pub modulus: u64,
    /// power_map[c][i] = class of g^i for g in class c, for i in 0..exponent.
    pub(crate) power_map: Vec<Vec<usize>>,
}

impl ClassStructure {
    pub fn new(
        order: u64,
        exponent: u64,
        class_sizes: Vec<u64>,
        identity_class: usize,
        modulus: u64,
        power_map: Vec<Vec<usize>>,
    ) -> ClassStructure {
        ClassStructure {
            order,
            exponent,
            class_sizes,
            identity_class,
            modulus,
            power_map,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    /// Class of g^i for g in class c; i may be any integer (taken modulo the
    /// exponent, since g^exponent = 1).
    pub fn power_class(&self, c: usize, i: i64) -> usize {
        let e = self.exponent as i64;
        let i = i.rem_euclid(e) as usize;
        self.power_map[c][i]
    }

    /// Class of g^{-1}.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_class(c, -1)
    }

    /// Order of the elements in class c: least i > 0 with g^i = 1.
    pub fn element_order(&self, c: usize) -> u64 {
        for i in 1..=self.exponent {
            if self.power_class(c, i as i64) == self.identity_class {
                return i;
            }
        }
        unreachable!("power map does not reach the identity")
    }

    pub fn order_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.order))
    }
}

/// One character (or virtual character): a vector of exact cyclotomic values
/// indexed by conjugacy classes.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<CycNum>,
}

impl ClassFunction {
    pub fn new(values: Vec<CycNum>) -> ClassFunction {
        ClassFunction { values }
    }

    /// All-ones class function (character of the trivial representation).
    pub fn trivial(structure: &ClassStructure) -> ClassFunction {
        ClassFunction {
            values: vec![CycNum::one(structure.modulus); structure.num_classes()],
        }
    }

    pub fn zero(structure: &ClassStructure) -> ClassFunction {
        ClassFunction {
            values: vec![CycNum::zero(structure.modulus); structure.num_classes()],
        }
    }

    pub fn degree<'a>(&'a self, structure: &ClassStructure) -> &'a CycNum {
        &self.values[structure.identity_class]
    }

    /// Degree as a non-negative integer, when it is one.
    pub fn integer_degree(&self, structure: &ClassStructure) -> Option<BigInt> {
        let d = self.degree(structure).to_integer()?;
        if d >= BigInt::zero() {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_linear(&self, structure: &ClassStructure) -> bool {
        self.degree(structure).is_one()
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn pointwise_add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pointwise_sub(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }
}

/// A finite group together with its table of irreducible characters.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    pub name: String,
    pub structure: ClassStructure,
    pub irreducibles: Vec<ClassFunction>,
    /// Indices of the degree-1 rows; these are the twisting characters.
    pub linear_indices: Vec<usize>,
    pub embeddings: Vec<SubgroupEmbedding>,
}

impl CharacterTable {
    pub fn new(
        name: impl Into<String>,
        structure: ClassStructure,
        irreducibles: Vec<ClassFunction>,
    ) -> CharacterTable {
        let linear_indices = irreducibles
            .iter()
            .enumerate()
            .filter(|(_, chi)| chi.is_linear(&structure))
            .map(|(i, _)| i)
            .collect();
        CharacterTable {
            name: name.into(),
            structure,
            irreducibles,
            linear_indices,
            embeddings: Vec::new(),
        }
    }

    pub fn with_embeddings(mut self, embeddings: Vec<SubgroupEmbedding>) -> CharacterTable {
        self.embeddings = embeddings;
        self
    }

    pub fn irreducible(&self, i: usize) -> Result<&ClassFunction, GroupError> {
        self.irreducibles
            .get(i)
            .ok_or(GroupError::ClassIndex(i, self.irreducibles.len()))
    }
}

/// Subgroup class data, fusion map and, for normal subgroups, coset/quotient
/// data with the conjugation action on subgroup classes. Models a
/// finite-index subgroup playing the role of an identity component.
#[derive(Debug, Clone, PartialEq)]
pub struct SubgroupEmbedding {
    pub sub: ClassStructure,
    pub index: u64,
    /// `fusion[d]` = ambient class containing subgroup class d.
    pub fusion: Vec<usize>,
    pub is_normal: bool,
    /// Normal case: coset (component) label of each ambient class; the label
    /// of the identity class is the identity coset.
    pub coset_of_class: Option<Vec<usize>>,
    /// Normal case: multiplication table of the quotient group on coset labels.
    pub quotient_mul: Option<Vec<Vec<usize>>>,
    /// Normal case: `conj_action[phi][d]` = class of g h g^{-1} for h in
    /// subgroup class d and g any representative of coset phi.
    pub conj_action: Option<Vec<Vec<usize>>>,
    pub sub_table: Option<Box<CharacterTable>>,
}

impl SubgroupEmbedding {
    pub fn sub_table(&self) -> Result<&CharacterTable, GroupError> {
        self.sub_table
            .as_deref()
            .ok_or(GroupError::MissingSubTable)
    }

    pub fn coset_of_class(&self) -> Result<&[usize], GroupError> {
        self.coset_of_class
            .as_deref()
            .ok_or(GroupError::MissingCosetData)
    }

    pub fn conj_action(&self) -> Result<&[Vec<usize>], GroupError> {
        self.conj_action
            .as_deref()
            .ok_or(GroupError::MissingCosetData)
    }

    pub fn identity_coset(&self, ambient: &ClassStructure) -> Result<usize, GroupError> {
        Ok(self.coset_of_class()?[ambient.identity_class])
    }

    /// Pull a character of the ambient group back along the fusion map and
    /// rewrite its values over the subgroup's cyclotomic modulus.
    pub fn restrict(
        &self,
        ambient: &ClassStructure,
        chi: &ClassFunction,
    ) -> Result<ClassFunction, GroupError> {
        if chi.values.len() != ambient.num_classes() {
            return Err(GroupError::ValueCount {
                got: chi.values.len(),
                expected: ambient.num_classes(),
            });
        }
        let target = self.sub.modulus;
        let values = self
            .fusion
            .iter()
            .map(|&g| {
                let v = &chi.values[g];
                if v.modulus() == target {
                    Ok(v.clone())
                } else if target.is_multiple_of(v.modulus()) {
                    Ok(v.embed(target)?)
                } else {
                    Ok(v.project(target)?)
                }
            })
            .collect::<Result<Vec<_>, GroupError>>()?;
        Ok(ClassFunction::new(values))
    }

    /// Frobenius induction at class level:
    /// `Ind psi (c) = ([G:H] / |c|_G) * sum over subgroup classes d fusing
    /// into c of |d|_H * psi(d)`.
    pub fn induce(
        &self,
        ambient: &ClassStructure,
        psi: &ClassFunction,
    ) -> Result<ClassFunction, GroupError> {
        if psi.values.len() != self.sub.num_classes() {
            return Err(GroupError::ValueCount {
                got: psi.values.len(),
                expected: self.sub.num_classes(),
            });
        }
        let big = ambient.modulus;
        let mut values = vec![CycNum::zero(big); ambient.num_classes()];
        for (d, &c) in self.fusion.iter().enumerate() {
            if psi.values[d].is_zero() {
                continue;
            }
            // The subgroup exponent divides the ambient exponent, so subgroup
            // values embed into the ambient cyclotomic field.
            let lifted = psi.values[d].embed(big)?;
            let weight = BigRational::from_integer(BigInt::from(self.sub.class_sizes[d]));
            values[c] = &values[c] + &lifted.scale(&weight);
        }
        let index = BigRational::from_integer(BigInt::from(self.index));
        for (c, v) in values.iter_mut().enumerate() {
            let size = BigRational::from_integer(BigInt::from(ambient.class_sizes[c]));
            *v = v.scale(&(&index / &size));
        }
        Ok(ClassFunction::new(values))
    }
}

/// Schur inner product <a, b> = (1/|G|) sum over classes of
/// |c| * a(c) * conj(b(c)), as an exact cyclotomic number.
pub fn inner_product(structure: &ClassStructure, a: &ClassFunction, b: &ClassFunction) -> CycNum {
    let mut sum = CycNum::zero(structure.modulus);
    for (c, size) in structure.class_sizes.iter().enumerate() {
        let term = &a.values[c] * &b.values[c].conj();
        sum = &sum + &term.scale(&BigRational::from_integer(BigInt::from(*size)));
    }
    sum.scale(&structure.order_rational().recip())
}

/// Restriction of a character along an embedding (see
/// [`SubgroupEmbedding::restrict`]).
pub fn restrict_char(
    ambient: &ClassStructure,
    chi: &ClassFunction,
    embedding: &SubgroupEmbedding,
) -> Result<ClassFunction, GroupError> {
    embedding.restrict(ambient, chi)
}

/// Induction of a subgroup character along an embedding (see
/// [`SubgroupEmbedding::induce`]).
pub fn induce_char(
    ambient: &ClassStructure,
    psi: &ClassFunction,
    embedding: &SubgroupEmbedding,
) -> Result<ClassFunction, GroupError> {
    embedding.induce(ambient, psi)
}
