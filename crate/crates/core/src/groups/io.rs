//! Character table documents: a JSON-structured textual format with exact
//! cyclotomic values, designed for byte-exact round trips.
//!
//! Layout:
//! ```json
//! {
//!   "name": "C3", "order": 3, "exponent": 3, "N": 3,
//!   "classes": [{"size": 1, "inverse": 0, "powers": {"2": 0}}, ...],
//!   "irreducibles": [[{"N": 3, "coeffs": ["1", "0"]}, ...], ...],
//!   "embeddings": [{"sub": {...}, "index": 2, "fusion": [...],
//!                   "normal": true, "coset_of_class": [...],
//!                   "quotient_mul": [[...]], "conj_action": [[...]]}]
//! }
//! ```
//! Class 0 must be the identity class. The `powers` object stores the class
//! of g^i for i = 2 .. exponent-1; i = 0 and 1 are implied.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclo::CycNum;
use crate::groups::structure::{
    CharacterTable, ClassFunction, ClassStructure, SubgroupEmbedding,
};
use crate::groups::validate::{validate_character_table, ValidationReport};

#[derive(Debug, Error)]
pub enum TableIoError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("malformed table document: {0}")]
    Malformed(String),
    #[error("validation failed: {name}: {detail}")]
    Validation {
        name: String,
        detail: String,
        report: ValidationReport,
    },
}

#[derive(Debug, Serialize, Deserialize)]
struct ClassDoc {
    size: u64,
    inverse: usize,
    powers: BTreeMap<String, usize>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EmbeddingDoc {
    sub: TableDoc,
    index: u64,
    fusion: Vec<usize>,
    normal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    coset_of_class: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient_mul: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conj_action: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableDoc {
    name: String,
    order: u64,
    exponent: u64,
    #[serde(rename = "N")]
    modulus: u64,
    classes: Vec<ClassDoc>,
    irreducibles: Vec<Vec<CycNum>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    embeddings: Vec<EmbeddingDoc>,
}

fn structure_to_doc(name: &str, s: &ClassStructure, irreducibles: &[ClassFunction]) -> TableDoc {
    let classes = (0..s.num_classes())
        .map(|c| {
            let mut powers = BTreeMap::new();
            for i in 2..s.exponent {
                powers.insert(i.to_string(), s.power_class(c, i as i64));
            }
            ClassDoc {
                size: s.class_sizes[c],
                inverse: s.inverse_class(c),
                powers,
            }
        })
        .collect();
    TableDoc {
        name: name.to_string(),
        order: s.order,
        exponent: s.exponent,
        modulus: s.modulus,
        classes,
        irreducibles: irreducibles.iter().map(|chi| chi.values.clone()).collect(),
        embeddings: Vec::new(),
    }
}

fn table_to_doc(t: &CharacterTable) -> TableDoc {
    let mut doc = structure_to_doc(&t.name, &t.structure, &t.irreducibles);
    doc.embeddings = t
        .embeddings
        .iter()
        .map(|e| {
            let sub_doc = match &e.sub_table {
                Some(st) => table_to_doc(st),
                None => structure_to_doc("sub", &e.sub, &[]),
            };
            EmbeddingDoc {
                sub: sub_doc,
                index: e.index,
                fusion: e.fusion.clone(),
                normal: e.is_normal,
                coset_of_class: e.coset_of_class.clone(),
                quotient_mul: e.quotient_mul.clone(),
                conj_action: e.conj_action.clone(),
            }
        })
        .collect();
    doc
}

fn doc_to_structure(doc: &TableDoc) -> Result<ClassStructure, TableIoError> {
    if doc.classes.is_empty() {
        return Err(TableIoError::Malformed("no classes".into()));
    }
    if doc.exponent == 0 || doc.order == 0 || doc.modulus == 0 {
        return Err(TableIoError::Malformed(
            "order, exponent and N must be positive".into(),
        ));
    }
    let nc = doc.classes.len();
    let mut power_map = Vec::with_capacity(nc);
    for (c, class) in doc.classes.iter().enumerate() {
        let mut row = vec![0usize; doc.exponent as usize];
        if doc.exponent >= 2 {
            row[1] = c;
        }
        for (key, &target) in &class.powers {
            let i: u64 = key.parse().map_err(|_| {
                TableIoError::Malformed(format!("bad power key {key:?} in class {c}"))
            })?;
            if i < 2 || i >= doc.exponent {
                return Err(TableIoError::Malformed(format!(
                    "power key {i} out of range 2..{} in class {c}",
                    doc.exponent
                )));
            }
            if target >= nc {
                return Err(TableIoError::Malformed(format!(
                    "power target {target} out of range in class {c}"
                )));
            }
            row[i as usize] = target;
        }
        // Keys 2..exponent-1 must all be present.
        if class.powers.len() != (doc.exponent as usize).saturating_sub(2) {
            return Err(TableIoError::Malformed(format!(
                "class {c} must list powers 2..{}",
                doc.exponent.saturating_sub(1)
            )));
        }
        if class.inverse >= nc {
            return Err(TableIoError::Malformed(format!(
                "inverse index out of range in class {c}"
            )));
        }
        power_map.push(row);
    }
    let sizes: Vec<u64> = doc.classes.iter().map(|c| c.size).collect();
    let structure = ClassStructure::new(
        doc.order,
        doc.exponent,
        sizes,
        0,
        doc.modulus,
        power_map,
    );
    // The redundant "inverse" field must agree with the power map.
    for (c, class) in doc.classes.iter().enumerate() {
        if structure.inverse_class(c) != class.inverse {
            return Err(TableIoError::Malformed(format!(
                "class {c}: inverse {} disagrees with power map ({})",
                class.inverse,
                structure.inverse_class(c)
            )));
        }
    }
    Ok(structure)
}

fn doc_to_table(doc: &TableDoc) -> Result<CharacterTable, TableIoError> {
    let structure = doc_to_structure(doc)?;
    let nc = structure.num_classes();
    let mut irreducibles = Vec::with_capacity(doc.irreducibles.len());
    for (i, row) in doc.irreducibles.iter().enumerate() {
        if row.len() != nc {
            return Err(TableIoError::Malformed(format!(
                "irreducible {i} has {} values, expected {nc}",
                row.len()
            )));
        }
        irreducibles.push(ClassFunction::new(row.clone()));
    }
    let mut embeddings = Vec::with_capacity(doc.embeddings.len());
    for (i, e) in doc.embeddings.iter().enumerate() {
        let sub_table = if e.sub.irreducibles.is_empty() {
            None
        } else {
            Some(Box::new(doc_to_table(&e.sub)?))
        };
        let sub = doc_to_structure(&e.sub)?;
        if e.fusion.len() != sub.num_classes() {
            return Err(TableIoError::Malformed(format!(
                "embedding {i}: fusion length mismatch"
            )));
        }
        embeddings.push(SubgroupEmbedding {
            sub,
            index: e.index,
            fusion: e.fusion.clone(),
            is_normal: e.normal,
            coset_of_class: e.coset_of_class.clone(),
            quotient_mul: e.quotient_mul.clone(),
            conj_action: e.conj_action.clone(),
            sub_table,
        });
    }
    Ok(CharacterTable::new(doc.name.clone(), structure, irreducibles)
        .with_embeddings(embeddings))
}

/// Canonical serialization of a table. Loading the output and saving again
/// reproduces the bytes exactly.
pub fn save_character_table(table: &CharacterTable) -> String {
    let mut s = serde_json::to_string_pretty(&table_to_doc(table)).expect("table serialization");
    s.push('\n');
    s
}

/// Parse and fully validate a character table document. Any violated
/// invariant is reported by name.
pub fn load_character_table(input: &str) -> Result<CharacterTable, TableIoError> {
    let doc: TableDoc = serde_json::from_str(input)?;
    let table = doc_to_table(&doc)?;
    let report = validate_character_table(&table);
    if let Some(fail) = report.first_failure() {
        return Err(TableIoError::Validation {
            name: fail.name.clone(),
            detail: fail.detail.clone(),
            report,
        });
    }
    Ok(table)
}

/// Parse without validating; used to inspect documents that are expected to
/// be invalid.
pub fn load_character_table_unvalidated(input: &str) -> Result<CharacterTable, TableIoError> {
    let doc: TableDoc = serde_json::from_str(input)?;
    doc_to_table(&doc)
}
