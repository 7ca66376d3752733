//! Explicit matrix representations over cyclotomic fields.
//!
//! These back the table-level machinery with element-level oracles: a
//! [`MatrixRep`] carries generator images, defining relations (as pairs of
//! words required to evaluate to equal matrices), and optionally a normal-form
//! enumeration of every group element.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cyclo::CycNum;
use crate::groups::structure::{ClassFunction, ClassStructure, GroupError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatrixRepError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("relation {lhs} = {rhs} fails")]
    RelationFailed { lhs: String, rhs: String },
    #[error("expected one representative word per class: {got} words, {expected} classes")]
    WrongClassRepCount { got: usize, expected: usize },
    #[error("representation has no element enumeration")]
    MissingEnumeration,
}

/// Square matrix with exact cyclotomic entries, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CycMatrix {
    pub n: usize,
    pub entries: Vec<CycNum>,
}

impl CycMatrix {
    pub fn identity(n: usize, modulus: u64) -> CycMatrix {
        let mut entries = vec![CycNum::zero(modulus); n * n];
        for i in 0..n {
            entries[i * n + i] = CycNum::one(modulus);
        }
        CycMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> CycMatrix {
        let n = rows.len();
        let entries = rows.into_iter().flatten().collect::<Vec<_>>();
        assert_eq!(entries.len(), n * n, "matrix must be square");
        CycMatrix { n, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let modulus = self.entries[0].modulus();
        let mut entries = vec![CycNum::zero(modulus); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    entries[i * n + j] = &entries[i * n + j] + &(a * b);
                }
            }
        }
        CycMatrix { n, entries }
    }

    pub fn trace(&self) -> CycNum {
        let modulus = self.entries[0].modulus();
        let mut t = CycNum::zero(modulus);
        for i in 0..self.n {
            t = &t + self.at(i, i);
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_scalar(&self) -> bool {
        let d = self.at(0, 0);
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.at(i, j);
                if i == j {
                    if e != d {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// A word in the generators: factors (generator name, non-negative exponent).
pub type Word = Vec<(String, u32)>;

pub fn word(factors: &[(&str, u32)]) -> Word {
    factors
        .iter()
        .map(|(g, e)| (g.to_string(), *e))
        .collect()
}

fn word_display(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter()
        .map(|(g, e)| {
            if *e == 1 {
                g.clone()
            } else {
                format!("{g}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Matrix representation given by generator images and defining relations.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub dimension: usize,
    pub modulus: u64,
    pub generators: BTreeMap<String, CycMatrix>,
    /// Pairs of words required to evaluate to equal matrices.
    pub relations: Vec<(Word, Word)>,
    /// Optional normal-form enumeration of all group elements.
    pub elements: Option<Vec<(String, Word)>>,
}

impl MatrixRep {
    pub fn evaluate(&self, w: &Word) -> Result<CycMatrix, MatrixRepError> {
        let mut m = CycMatrix::identity(self.dimension, self.modulus);
        for (g, e) in w {
            let img = self
                .generators
                .get(g)
                .ok_or_else(|| MatrixRepError::UnknownGenerator(g.clone()))?;
            for _ in 0..*e {
                m = m.mul(img);
            }
        }
        Ok(m)
    }

    /// Check every defining relation as an exact matrix identity.
    pub fn validate_relations(&self) -> Result<(), MatrixRepError> {
        for (lhs, rhs) in &self.relations {
            if self.evaluate(lhs)? != self.evaluate(rhs)? {
                return Err(MatrixRepError::RelationFailed {
                    lhs: word_display(lhs),
                    rhs: word_display(rhs),
                });
            }
        }
        Ok(())
    }

    pub fn elements(&self) -> Result<&[(String, Word)], MatrixRepError> {
        self.elements.as_deref().ok_or(MatrixRepError::MissingEnumeration)
    }
}

/// Character of a matrix representation: the trace of one representative word
/// per class. Relations are validated first.
pub fn char_of_matrix_rep(
    rep: &MatrixRep,
    structure: &ClassStructure,
    class_reps: &[Word],
) -> Result<ClassFunction, GroupError> {
    rep.validate_relations()
        .map_err(|e| GroupError::Invalid(e.to_string()))?;
    if class_reps.len() != structure.num_classes() {
        return Err(GroupError::Invalid(
            MatrixRepError::WrongClassRepCount {
                got: class_reps.len(),
                expected: structure.num_classes(),
            }
            .to_string(),
        ));
    }
    let mut values = Vec::with_capacity(class_reps.len());
    for w in class_reps {
        let m = rep
            .evaluate(w)
            .map_err(|e| GroupError::Invalid(e.to_string()))?;
        let t = m.trace();
        let t = if t.modulus() == structure.modulus {
            t
        } else if structure.modulus.is_multiple_of(t.modulus()) {
            t.embed(structure.modulus)?
        } else {
            t.project(structure.modulus)?
        };
        values.push(t);
    }
    Ok(ClassFunction::new(values))
}
