//! Exact agreement densities of character pairs and the mean-square trace
//! bounds that drive the density-threshold criteria.
//!
//! Frobenius classes are modeled by class-size weighting: the "density" of a
//! set of classes is the exact rational fraction of group elements it
//! covers, which is the equidistribution limit the analytic densities
//! converge to. Component-level densities count cosets of a designated
//! normal subgroup (the stand-in for an identity component); that coset
//! model is a definition made here, recorded in the report output.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};
use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::cyclo::CycNum;
use crate::equivalence::inner_product_and_decompose;
use crate::groups::matrixrep::{MatrixRep, MatrixRepError};
use crate::groups::structure::{
    CharacterTable, ClassFunction, ClassStructure, GroupError, SubgroupEmbedding,
};

#[derive(Debug, Error)]
pub enum DensityError {
    #[error("characters live on different numbers of classes")]
    TableMismatch,
    #[error("characters must be genuine characters")]
    NotGenuine,
    #[error("characters must have equal degree (got {0} and {1})")]
    DegreeMismatch(BigInt, BigInt),
    #[error("mean-square difference is not rational (internal error)")]
    NonRationalMeanSquare,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    MatrixRep(#[from] MatrixRepError),
}

fn rational(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact fraction of the group (classes weighted by size) where the two
/// class functions agree.
pub fn agreement_density(
    structure: &ClassStructure,
    chi1: &ClassFunction,
    chi2: &ClassFunction,
) -> BigRational {
    let mut agree = 0u64;
    for (c, size) in structure.class_sizes.iter().enumerate() {
        if chi1.values[c] == chi2.values[c] {
            agree += size;
        }
    }
    rational(agree) / structure.order_rational()
}

/// Fraction of cosets (components) of the designated normal subgroup on
/// which the two class functions agree identically.
pub fn component_density(
    _structure: &ClassStructure,
    chi1: &ClassFunction,
    chi2: &ClassFunction,
    e: &SubgroupEmbedding,
) -> Result<BigRational, DensityError> {
    let coset_of_class = e.coset_of_class()?;
    let n = e.index as usize;
    let mut coset_ok = vec![true; n];
    for (c, &phi) in coset_of_class.iter().enumerate() {
        if chi1.values[c] != chi2.values[c] {
            coset_ok[phi] = false;
        }
    }
    let good = coset_ok.iter().filter(|ok| **ok).count() as u64;
    Ok(rational(good) / rational(e.index))
}

/// 1 - 1/(2 m^2): the elementwise density above which equal-degree genuine
/// characters are forced to coincide.
pub fn dh1_bound_for_degree(m: &BigInt) -> BigRational {
    let m2 = BigRational::from_integer(m * m);
    BigRational::one() - (BigRational::one() / (BigRational::from_integer(BigInt::from(2)) * m2))
}

/// The bound specialised to degree 2^m (tensor powers of a two-dimensional
/// representation). Exactly equal to 1 - 2^{-(2m+1)}.
pub fn gl2_tensor_power_bound(m: u32) -> BigRational {
    dh1_bound_for_degree(&BigInt::from(2u64).pow(m))
}

/// Named verdicts of [`dh_bounds_report`].
#[derive(Debug, Clone, Serialize)]
pub struct DensityVerdicts {
    /// chi1 = chi2 pointwise.
    pub characters_equal: bool,
    /// chi1 != chi2 implies mean_square_diff >= 2 (orthogonality bound).
    pub lower_orthogonality: bool,
    /// mean_square_diff <= (1 - lambda_elem) * 4 m^2.
    pub upper_inequality: bool,
    /// chi1 != chi2 implies lambda_elem <= 1 - 1/(2 m^2).
    pub dh1_bound_respected: bool,
    /// lambda_elem > 1 - 1/(2 m^2) implies chi1 = chi2.
    pub dh1_contrapositive: bool,
    /// With a subgroup: the identity coset lies in the agreement locus.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity_coset_in_agreement: Option<bool>,
    /// With a subgroup: the restrictions to it agree (equivalent to the
    /// identity-coset membership above).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restrictions_agree: Option<bool>,
}

/// Exact density data for a pair of equal-degree genuine characters.
#[derive(Debug, Clone)]
pub struct DensityReport {
    /// Elementwise agreement density, exact.
    pub lambda_elem: BigRational,
    /// Component (coset) agreement density, when a subgroup is supplied.
    pub lambda_comp: Option<BigRational>,
    /// Common degree m.
    pub degree: BigInt,
    /// 1 - 1/(2 m^2).
    pub dh1_bound: BigRational,
    /// 1 - 1/index, when a subgroup is supplied (informational only).
    pub dh2_bound: Option<BigRational>,
    /// (1/|G|) sum over classes of |c| * |chi1(c) - chi2(c)|^2, exact.
    pub mean_square_diff: BigRational,
    pub verdicts: DensityVerdicts,
    /// The coset model used for component densities.
    pub model_note: &'static str,
}

pub const COMPONENT_MODEL_NOTE: &str = "component densities count cosets of the designated \
normal subgroup on which the characters agree identically; this finite coset model is a \
definition, not a theorem";

impl Serialize for DensityReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DensityReport", 8)?;
        st.serialize_field("lambda_elem", &self.lambda_elem.to_string())?;
        st.serialize_field(
            "lambda_comp",
            &self.lambda_comp.as_ref().map(|r| r.to_string()),
        )?;
        st.serialize_field("m", &self.degree.to_string())?;
        st.serialize_field("dh1_bound", &self.dh1_bound.to_string())?;
        st.serialize_field("dh2_bound", &self.dh2_bound.as_ref().map(|r| r.to_string()))?;
        st.serialize_field("mean_square_diff", &self.mean_square_diff.to_string())?;
        st.serialize_field("verdicts", &self.verdicts)?;
        st.serialize_field("model_note", self.model_note)?;
        st.end()
    }
}

/// Compute the exact elementwise agreement density, the mean-square trace
/// difference, and the named inequality verdicts for a pair of genuine
/// characters of equal degree. With a normal-subgroup embedding, also report
/// the component density and whether the identity coset lies in the
/// agreement locus.
pub fn dh_bounds_report(
    table: &CharacterTable,
    chi1: &ClassFunction,
    chi2: &ClassFunction,
    e: Option<&SubgroupEmbedding>,
) -> Result<DensityReport, DensityError> {
    let s = &table.structure;
    if chi1.values.len() != s.num_classes() || chi2.values.len() != s.num_classes() {
        return Err(DensityError::TableMismatch);
    }
    let d1 = inner_product_and_decompose(table, chi1);
    let d2 = inner_product_and_decompose(table, chi2);
    if !d1.genuine || !d2.genuine {
        return Err(DensityError::NotGenuine);
    }
    let deg1 = chi1.integer_degree(s).ok_or(DensityError::NotGenuine)?;
    let deg2 = chi2.integer_degree(s).ok_or(DensityError::NotGenuine)?;
    if deg1 != deg2 {
        return Err(DensityError::DegreeMismatch(deg1, deg2));
    }
    let m = deg1;

    let lambda_elem = agreement_density(s, chi1, chi2);
    let equal = chi1 == chi2;

    let mut mean_square = CycNum::zero(s.modulus);
    for (c, size) in s.class_sizes.iter().enumerate() {
        let diff = &chi1.values[c] - &chi2.values[c];
        let sq = diff.norm_squared();
        mean_square = &mean_square + &sq.scale(&rational(*size));
    }
    let mean_square_diff = mean_square
        .scale(&s.order_rational().recip())
        .to_rational()
        .ok_or(DensityError::NonRationalMeanSquare)?;

    let two = BigRational::from_integer(BigInt::from(2));
    let four_m_sq = BigRational::from_integer(BigInt::from(4) * &m * &m);
    let dh1_bound = dh1_bound_for_degree(&m);

    let lower_orthogonality = equal || mean_square_diff >= two;
    let upper_inequality =
        mean_square_diff <= (BigRational::one() - &lambda_elem) * &four_m_sq;
    let dh1_bound_respected = equal || lambda_elem <= dh1_bound;
    let dh1_contrapositive = lambda_elem <= dh1_bound || equal;

    let (lambda_comp, dh2_bound, identity_coset_in_agreement, restrictions_agree) = match e {
        Some(e) => {
            let comp = component_density(s, chi1, chi2, e)?;
            let dh2 = BigRational::one() - rational(e.index).recip();
            let identity_coset = e.identity_coset(s)?;
            let coset_of_class = e.coset_of_class()?;
            let identity_in = coset_of_class
                .iter()
                .enumerate()
                .filter(|(_, &phi)| phi == identity_coset)
                .all(|(c, _)| chi1.values[c] == chi2.values[c]);
            let r1 = e.restrict(s, chi1)?;
            let r2 = e.restrict(s, chi2)?;
            (Some(comp), Some(dh2), Some(identity_in), Some(r1 == r2))
        }
        None => (None, None, None, None),
    };

    debug_assert!(!lambda_elem.is_negative() && lambda_elem <= BigRational::one());
    debug_assert!(equal == lambda_elem.is_one());
    debug_assert!(!mean_square_diff.is_negative());

    Ok(DensityReport {
        lambda_elem,
        lambda_comp,
        degree: m,
        dh1_bound,
        dh2_bound,
        mean_square_diff,
        verdicts: DensityVerdicts {
            characters_equal: equal,
            lower_orthogonality,
            upper_inequality,
            dh1_bound_respected,
            dh1_contrapositive,
            identity_coset_in_agreement,
            restrictions_agree,
        },
        model_note: COMPONENT_MODEL_NOTE,
    })
}

/// Result of the exhaustive trace scan of a matrix representation.
#[derive(Debug, Clone, Serialize)]
pub struct TraceLemmaVerdict {
    pub elements: usize,
    /// Number of elements whose matrix has trace equal to the dimension.
    pub trace_equals_dimension: usize,
    /// Number of elements represented by the identity matrix.
    pub identity_matrices: usize,
    /// trace = dimension happens exactly at identity matrices.
    pub holds: bool,
}

/// Verify, over the full element enumeration of a matrix representation,
/// that the trace equals the dimension exactly when the matrix is the
/// identity (true for any finite — hence unitarizable — matrix group).
pub fn trace_identity_lemma_check(rep: &MatrixRep) -> Result<TraceLemmaVerdict, DensityError> {
    let elements = rep.elements()?;
    let dim = CycNum::from_integer(rep.modulus, rep.dimension as i64);
    let mut trace_hits = 0usize;
    let mut identity_hits = 0usize;
    let mut holds = true;
    for (_, w) in elements {
        let m = rep.evaluate(w)?;
        let trace_is_dim = m.trace() == dim;
        let is_identity = m.is_identity();
        if trace_is_dim {
            trace_hits += 1;
        }
        if is_identity {
            identity_hits += 1;
        }
        if trace_is_dim != is_identity {
            holds = false;
        }
    }
    Ok(TraceLemmaVerdict {
        elements: elements.len(),
        trace_equals_dimension: trace_hits,
        identity_matrices: identity_hits,
        holds,
    })
}
