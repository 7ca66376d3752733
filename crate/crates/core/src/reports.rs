//! Report builders shared by the command-line interface and the C bindings.
//!
//! Every analysis produces a deterministic JSON document; rationals and big
//! integers are serialized as strings. The corresponding JSON Schemas ship in
//! the repository under `schemas/`.

use num::bigint::BigInt;
use serde::Serialize;

use crate::cyclo::CycNum;
use crate::density::{dh_bounds_report, DensityReport};
use crate::equivalence::{
    adjoint_twist_or_dual_search, clifford_analysis, extend_twist, find_twist,
    inner_product_and_decompose, power_char_ratio_test, ClassRatioWitness, TwistBranch,
};
use crate::groups::builders::{
    build_cyclic, build_d4, build_direct_product, build_heisenberg, build_q8, build_s3,
};
use crate::groups::io::{load_character_table, TableIoError};
use crate::groups::structure::{CharacterTable, ClassFunction, SubgroupEmbedding};
use crate::groups::validate::{validate_character_table, CheckResult};
use crate::powerops::{adjoint_char, ext_power_char, sym_power_char, tensor_power_char};
use crate::weights::{recover_from_power, RecoverMode, WeightMultiset};

/// Errors split by exit code: parse errors (exit 2) versus precondition and
/// validation failures (exit 1).
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", content = "message", rename_all = "snake_case")]
pub enum AppError {
    Parse(String),
    Precondition(String),
}

impl AppError {
    pub fn parse(msg: impl std::fmt::Display) -> AppError {
        AppError::Parse(msg.to_string())
    }

    pub fn precondition(msg: impl std::fmt::Display) -> AppError {
        AppError::Precondition(msg.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Parse(_) => 2,
            AppError::Precondition(_) => 1,
        }
    }
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Parse(m) => write!(f, "parse error: {m}"),
            AppError::Precondition(m) => write!(f, "precondition failed: {m}"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub error: AppError,
}

impl From<TableIoError> for AppError {
    fn from(e: TableIoError) -> AppError {
        match e {
            TableIoError::Parse(_) | TableIoError::Malformed(_) => AppError::parse(e),
            TableIoError::Validation { .. } => AppError::precondition(e),
        }
    }
}

// ---------------------------------------------------------------------------
// Built-in table specs
// ---------------------------------------------------------------------------

/// Resolve a built-in table spec: `s3`, `d4`, `q8`, `cyclic:N`,
/// `heisenberg:P`, or `product:<spec>,<spec>`. Returns None when the string
/// is not a recognized spec (the caller then treats it as a file path).
pub fn builtin_table(spec: &str) -> Option<Result<CharacterTable, AppError>> {
    match spec {
        "s3" => Some(Ok(build_s3().0)),
        "d4" => Some(Ok(build_d4())),
        "q8" => Some(Ok(build_q8())),
        _ => {
            if let Some(n) = spec.strip_prefix("cyclic:") {
                let parsed = n
                    .parse::<u64>()
                    .map_err(|_| AppError::parse(format!("bad cyclic order {n:?}")));
                return Some(parsed.and_then(|n| {
                    if n == 0 || n > 256 {
                        Err(AppError::precondition("cyclic order must be in 1..=256"))
                    } else {
                        build_cyclic(n).map_err(AppError::precondition)
                    }
                }));
            }
            if let Some(n) = spec.strip_prefix("heisenberg:") {
                let parsed = n
                    .parse::<u64>()
                    .map_err(|_| AppError::parse(format!("bad heisenberg parameter {n:?}")));
                return Some(parsed.and_then(|n| {
                    if n > 13 {
                        Err(AppError::precondition(
                            "heisenberg parameter must be an odd prime <= 13",
                        ))
                    } else {
                        build_heisenberg(n)
                            .map(|h| h.table)
                            .map_err(AppError::precondition)
                    }
                }));
            }
            if let Some(rest) = spec.strip_prefix("product:") {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 2 {
                    return Some(Err(AppError::parse(
                        "product spec needs exactly two comma-separated factors",
                    )));
                }
                let a = builtin_table(parts[0])?;
                let b = builtin_table(parts[1])?;
                return Some(a.and_then(|a| b.map(|b| build_direct_product(&a, &b))));
            }
            None
        }
    }
}

/// Load a table from a built-in spec or from document text.
pub fn table_from_spec_or_document(
    spec: &str,
    document: Option<&str>,
) -> Result<CharacterTable, AppError> {
    if let Some(built) = builtin_table(spec) {
        return built;
    }
    match document {
        Some(text) => Ok(load_character_table(text)?),
        None => Err(AppError::parse(format!(
            "{spec:?} is not a built-in table spec"
        ))),
    }
}

fn get_chi(table: &CharacterTable, idx: usize) -> Result<&ClassFunction, AppError> {
    table.irreducibles.get(idx).ok_or_else(|| {
        AppError::precondition(format!(
            "character index {idx} out of range ({} rows)",
            table.irreducibles.len()
        ))
    })
}

fn get_embedding(
    table: &CharacterTable,
    idx: usize,
) -> Result<&SubgroupEmbedding, AppError> {
    table.embeddings.get(idx).ok_or_else(|| {
        AppError::precondition(format!(
            "subgroup index {idx} out of range ({} embeddings)",
            table.embeddings.len()
        ))
    })
}

// ---------------------------------------------------------------------------
// powers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CharPowerMode {
    Tensor,
    Sym,
    Ext,
    Adjoint,
}

impl std::str::FromStr for CharPowerMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tensor" => Ok(CharPowerMode::Tensor),
            "sym" => Ok(CharPowerMode::Sym),
            "ext" => Ok(CharPowerMode::Ext),
            "adjoint" => Ok(CharPowerMode::Adjoint),
            other => Err(format!("unknown power mode {other:?}")),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PowersReport {
    pub op: &'static str,
    pub table: String,
    pub chi: usize,
    pub mode: CharPowerMode,
    pub k: u32,
    pub values: Vec<CycNum>,
    /// Multiplicities against the table's irreducibles, as integer strings;
    /// None when the result is not a genuine character.
    pub multiplicities: Option<Vec<String>>,
    pub genuine: bool,
}

pub fn powers_report(
    table: &CharacterTable,
    chi_idx: usize,
    mode: CharPowerMode,
    k: u32,
) -> Result<PowersReport, AppError> {
    let chi = get_chi(table, chi_idx)?;
    let s = &table.structure;
    let result = match mode {
        CharPowerMode::Tensor => tensor_power_char(chi, k).map_err(AppError::precondition)?,
        CharPowerMode::Sym => sym_power_char(s, chi, k).map_err(AppError::precondition)?,
        CharPowerMode::Ext => ext_power_char(s, chi, k).map_err(AppError::precondition)?,
        CharPowerMode::Adjoint => adjoint_char(s, chi),
    };
    let decomposition = inner_product_and_decompose(table, &result);
    let multiplicities = decomposition
        .integer_multiplicities()
        .map(|ms| ms.iter().map(BigInt::to_string).collect());
    Ok(PowersReport {
        op: "powers",
        table: table.name.clone(),
        chi: chi_idx,
        mode,
        k,
        values: result.values,
        multiplicities,
        genuine: decomposition.genuine,
    })
}

// ---------------------------------------------------------------------------
// twist
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct TwistDiagnostics {
    pub selfnorm1: String,
    pub selfnorm2: String,
    pub irreducible1: bool,
    pub irreducible2: bool,
    pub adjoint_equal: bool,
}

#[derive(Debug, Serialize)]
pub struct TwistReport {
    pub op: &'static str,
    pub table: String,
    pub chi1: usize,
    pub chi2: usize,
    pub k: u32,
    pub equal_powers: bool,
    pub witnesses: Vec<ClassRatioWitness>,
    /// Linear characters lambda with chi2 = chi1 * lambda.
    pub twists: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<usize>,
    /// Twists of the restrictions, when a subgroup is given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_twists: Option<Vec<usize>>,
    /// Twist-or-dual branch when the adjoints agree: "twist" or "dual-twist".
    pub branch: Option<TwistBranch>,
    pub branch_lambda: Option<usize>,
    pub diagnostics: TwistDiagnostics,
}

pub fn twist_report(
    table: &CharacterTable,
    chi1_idx: usize,
    chi2_idx: usize,
    k: u32,
    subgroup: Option<usize>,
) -> Result<TwistReport, AppError> {
    let chi1 = get_chi(table, chi1_idx)?;
    let chi2 = get_chi(table, chi2_idx)?;
    let ratio = power_char_ratio_test(chi1, chi2, k).map_err(AppError::precondition)?;
    let twists = find_twist(table, chi1, chi2, None).map_err(AppError::precondition)?;
    let restricted_twists = match subgroup {
        Some(idx) => {
            let e = get_embedding(table, idx)?;
            Some(find_twist(table, chi1, chi2, Some(e)).map_err(AppError::precondition)?)
        }
        None => None,
    };
    let s = &table.structure;
    let adjoint_equal = adjoint_char(s, chi1) == adjoint_char(s, chi2);
    let (branch, branch_lambda) = if adjoint_equal {
        match adjoint_twist_or_dual_search(table, chi1, chi2).map_err(AppError::precondition)? {
            Some((b, l)) => (Some(b), Some(l)),
            None => (None, None),
        }
    } else {
        (None, None)
    };
    let d1 = inner_product_and_decompose(table, chi1);
    let d2 = inner_product_and_decompose(table, chi2);
    Ok(TwistReport {
        op: "twist",
        table: table.name.clone(),
        chi1: chi1_idx,
        chi2: chi2_idx,
        k: ratio.k,
        equal_powers: ratio.equal_powers,
        witnesses: ratio.witnesses,
        twists,
        subgroup,
        restricted_twists,
        branch,
        branch_lambda,
        diagnostics: TwistDiagnostics {
            selfnorm1: d1.selfnorm.to_string(),
            selfnorm2: d2.selfnorm.to_string(),
            irreducible1: d1.is_irreducible(),
            irreducible2: d2.is_irreducible(),
            adjoint_equal,
        },
    })
}

// ---------------------------------------------------------------------------
// clifford
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct CliffordReport {
    pub op: &'static str,
    pub table: String,
    pub chi: usize,
    pub subgroup: usize,
    /// (subgroup irreducible index, multiplicity as integer string).
    pub constituents: Vec<(usize, String)>,
    pub orbits: Vec<Vec<usize>>,
    pub stabilizer_cosets: Vec<usize>,
    pub induced_check: Option<bool>,
}

pub fn clifford_report(
    table: &CharacterTable,
    chi_idx: usize,
    subgroup: usize,
) -> Result<CliffordReport, AppError> {
    let chi = get_chi(table, chi_idx)?;
    let e = get_embedding(table, subgroup)?;
    let analysis = clifford_analysis(table, chi, e).map_err(AppError::precondition)?;
    Ok(CliffordReport {
        op: "clifford",
        table: table.name.clone(),
        chi: chi_idx,
        subgroup,
        constituents: analysis
            .constituents
            .iter()
            .map(|(i, m)| (*i, m.to_string()))
            .collect(),
        orbits: analysis.orbits,
        stabilizer_cosets: analysis.stabilizer_cosets,
        induced_check: analysis.induced_check,
    })
}

// ---------------------------------------------------------------------------
// density
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct DensityOpReport {
    pub op: &'static str,
    pub table: String,
    pub chi1: usize,
    pub chi2: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<usize>,
    pub report: DensityReport,
}

pub fn density_report(
    table: &CharacterTable,
    chi1_idx: usize,
    chi2_idx: usize,
    subgroup: Option<usize>,
) -> Result<DensityOpReport, AppError> {
    let chi1 = get_chi(table, chi1_idx)?;
    let chi2 = get_chi(table, chi2_idx)?;
    let e = match subgroup {
        Some(idx) => Some(get_embedding(table, idx)?),
        None => None,
    };
    let report = dh_bounds_report(table, chi1, chi2, e).map_err(AppError::precondition)?;
    Ok(DensityOpReport {
        op: "density",
        table: table.name.clone(),
        chi1: chi1_idx,
        chi2: chi2_idx,
        subgroup,
        report,
    })
}

// ---------------------------------------------------------------------------
// recover
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct RecoverReport {
    pub op: &'static str,
    pub mode: RecoverMode,
    pub n: u32,
    pub k: u32,
    pub weights: WeightMultiset,
}

pub fn recover_report(
    input: &WeightMultiset,
    n: u32,
    k: u32,
    mode: RecoverMode,
) -> Result<RecoverReport, AppError> {
    let recovered = recover_from_power(input, n, k, mode).map_err(AppError::precondition)?;
    Ok(RecoverReport {
        op: "recover",
        mode,
        n,
        k,
        weights: recovered,
    })
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub op: &'static str,
    pub table: String,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

pub fn validate_report(table: &CharacterTable) -> ValidateReport {
    let report = validate_character_table(table);
    ValidateReport {
        op: "validate",
        table: report.table,
        checks: report.checks,
        all_passed: report.all_passed,
    }
}

// ---------------------------------------------------------------------------
// demo
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct DemoCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct DemoReport {
    pub op: &'static str,
    pub group: String,
    pub n: u64,
    pub checks: Vec<DemoCheck>,
    pub all_passed: bool,
}

/// Run the full Heisenberg pipeline for an odd prime n: exact matrix
/// relations, table/matrix character agreement, equality of n-th power
/// characters across the degree-n family, emptiness of the global twist set,
/// multiplicity-free restriction to T = <A, C> with a transitive orbit, the
/// induced-character identity, and the obstruction to extending the
/// subgroup-level twist (non-invariant chi').
pub fn demo_heisenberg(n: u64) -> Result<DemoReport, AppError> {
    let h = build_heisenberg(n).map_err(AppError::precondition)?;
    let table = &h.table;
    let s = &table.structure;
    let embedding = h.embedding();
    let sub_table = embedding.sub_table().map_err(AppError::precondition)?;
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(DemoCheck {
            name: name.to_string(),
            passed,
            detail,
        });
    };

    // 1. Matrix relations hold exactly and each rho_a has the table's
    //    degree-n character.
    let mut relations_ok = true;
    let mut chars_match = true;
    for (a, rep) in &h.reps {
        if rep.validate_relations().is_err() {
            relations_ok = false;
            continue;
        }
        match crate::groups::matrixrep::char_of_matrix_rep(rep, s, &h.class_reps) {
            Ok(chi) => {
                chars_match &= chi == table.irreducibles[h.degree_n_index(*a)];
            }
            Err(_) => chars_match = false,
        }
    }
    push(
        "matrix_relations",
        relations_ok && chars_match,
        format!(
            "{} representations validated against the table rows",
            h.reps.len()
        ),
    );

    // 2. chi_a^n = chi_b^n pointwise for all units a, b.
    let mut powers_equal = true;
    for a in 1..n {
        for b in 1..n {
            let chi_a = &table.irreducibles[h.degree_n_index(a)];
            let chi_b = &table.irreducibles[h.degree_n_index(b)];
            let verdict = power_char_ratio_test(chi_a, chi_b, n as u32)
                .map_err(AppError::precondition)?;
            powers_equal &= verdict.equal_powers;
        }
    }
    push(
        "power_char_equality",
        powers_equal,
        format!("pointwise {n}-th powers agree across the degree-{n} family"),
    );

    // 3. No global twist relates distinct family members.
    let mut twists_empty = true;
    for a in 1..n {
        for b in 1..n {
            if a == b {
                continue;
            }
            let chi_a = &table.irreducibles[h.degree_n_index(a)];
            let chi_b = &table.irreducibles[h.degree_n_index(b)];
            let twists =
                find_twist(table, chi_a, chi_b, None).map_err(AppError::precondition)?;
            twists_empty &= twists.is_empty();
        }
    }
    push(
        "global_twists_empty",
        twists_empty,
        "no linear character relates distinct family members".to_string(),
    );

    // 4./5. Restriction to T is multiplicity free with one transitive orbit,
    // and each chi_a is induced from any of its constituents.
    let mut mult_free = true;
    let mut induced_ok = true;
    for a in 1..n {
        let chi_a = &table.irreducibles[h.degree_n_index(a)];
        let analysis =
            clifford_analysis(table, chi_a, embedding).map_err(AppError::precondition)?;
        mult_free &= analysis.constituents.len() == n as usize
            && analysis
                .constituents
                .iter()
                .all(|(_, m)| *m == BigInt::from(1));
        mult_free &= analysis.orbits.len() == 1
            && analysis.orbits[0].len() == analysis.constituents.len();
        induced_ok &= analysis.induced_check == Some(true)
            && analysis.stabilizer_cosets
                == vec![embedding
                    .identity_coset(s)
                    .map_err(AppError::precondition)?];
    }
    push(
        "restriction_multiplicity_one",
        mult_free,
        format!("each restriction splits into {n} distinct linear characters forming one orbit"),
    );
    push(
        "induced_identity",
        induced_ok,
        "each family member is induced from a linear character of T".to_string(),
    );

    // 6. The subgroup-level twist chi' exists but is non-invariant, so no
    // extension exists; diagnostics must say exactly that.
    let mut obstruction_ok = true;
    for a in 1..n {
        for b in 1..n {
            if a == b {
                continue;
            }
            let chi_a = &table.irreducibles[h.degree_n_index(a)];
            let chi_b = &table.irreducibles[h.degree_n_index(b)];
            let chi_prime = &sub_table.irreducibles
                [h.sub_char_index(0, (b + n - a) % n)];
            let outcome = extend_twist(table, chi_a, chi_b, embedding, chi_prime)
                .map_err(AppError::precondition)?;
            obstruction_ok &= outcome.extension.is_none()
                && !outcome.restriction_irreducible
                && !outcome.chi_prime_invariant;
        }
    }
    push(
        "twist_extension_obstructed",
        obstruction_ok,
        "chi' is non-invariant under conjugation and no extension exists".to_string(),
    );

    let all_passed = checks.iter().all(|c| c.passed);
    Ok(DemoReport {
        op: "demo",
        group: "heisenberg".to_string(),
        n,
        checks,
        all_passed,
    })
}

/// Pretty JSON with a trailing newline; byte-identical across runs for
/// identical inputs.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
