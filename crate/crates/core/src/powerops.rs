//! Power constructions on characters: tensor, symmetric and exterior powers,
//! adjoint and Asai (twisted tensor) characters, twisting and duals.
//!
//! All of these are computed from class data alone. Symmetric and exterior
//! powers use the Newton-type recurrences
//!
//! ```text
//!   k * sym_k(g) = sum_{i=1..k}          chi(g^i) * sym_{k-i}(g)
//!   k * ext_k(g) = sum_{i=1..k} (-1)^{i-1} chi(g^i) * ext_{k-i}(g)
//! ```
//!
//! driven by the power maps of the class structure; explicit matrices are
//! never consulted here (they serve as oracles in the test suite).

use num::bigint::BigInt;
use num::rational::BigRational;
use thiserror::Error;

use crate::cyclo::CycNum;
use crate::groups::structure::{ClassFunction, ClassStructure};

/// Default cap on the power-construction exponent k. Cyclotomic coefficient
/// sizes grow with k, so exceeding the cap is an explicit error rather than
/// silent truncation.
pub const DEFAULT_POWER_CAP: u32 = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PowerOpError {
    #[error("power exponent k = {k} exceeds the cap {cap}")]
    ExceedsCap { k: u32, cap: u32 },
    #[error("twisting character must have degree 1")]
    TwistNotLinear,
    #[error("automorphism {index}: {reason}")]
    BadAutomorphism { index: usize, reason: String },
}

fn check_cap(k: u32, cap: u32) -> Result<(), PowerOpError> {
    if k > cap {
        Err(PowerOpError::ExceedsCap { k, cap })
    } else {
        Ok(())
    }
}

/// Character of the k-th tensor power: the pointwise k-th power.
pub fn tensor_power_char(chi: &ClassFunction, k: u32) -> Result<ClassFunction, PowerOpError> {
    tensor_power_char_capped(chi, k, DEFAULT_POWER_CAP)
}

pub fn tensor_power_char_capped(
    chi: &ClassFunction,
    k: u32,
    cap: u32,
) -> Result<ClassFunction, PowerOpError> {
    check_cap(k, cap)?;
    Ok(ClassFunction::new(
        chi.values.iter().map(|v| v.pow(k as u64)).collect(),
    ))
}

/// Character of the k-th symmetric power.
pub fn sym_power_char(
    structure: &ClassStructure,
    chi: &ClassFunction,
    k: u32,
) -> Result<ClassFunction, PowerOpError> {
    sym_power_char_capped(structure, chi, k, DEFAULT_POWER_CAP)
}

pub fn sym_power_char_capped(
    structure: &ClassStructure,
    chi: &ClassFunction,
    k: u32,
    cap: u32,
) -> Result<ClassFunction, PowerOpError> {
    check_cap(k, cap)?;
    Ok(newton_power(structure, chi, k, false))
}

/// Character of the k-th exterior power. For a degree-n character the n-th
/// exterior power is the determinant character and everything above it is
/// the zero class function.
pub fn ext_power_char(
    structure: &ClassStructure,
    chi: &ClassFunction,
    k: u32,
) -> Result<ClassFunction, PowerOpError> {
    ext_power_char_capped(structure, chi, k, DEFAULT_POWER_CAP)
}

pub fn ext_power_char_capped(
    structure: &ClassStructure,
    chi: &ClassFunction,
    k: u32,
    cap: u32,
) -> Result<ClassFunction, PowerOpError> {
    check_cap(k, cap)?;
    Ok(newton_power(structure, chi, k, true))
}

fn newton_power(
    structure: &ClassStructure,
    chi: &ClassFunction,
    k: u32,
    alternating: bool,
) -> ClassFunction {
    let nc = structure.num_classes();
    let modulus = structure.modulus;
    // layers[j][c] = value of the j-th power character at class c.
    let mut layers: Vec<Vec<CycNum>> = vec![vec![CycNum::one(modulus); nc]];
    for j in 1..=k {
        let mut layer = Vec::with_capacity(nc);
        for c in 0..nc {
            let mut acc = CycNum::zero(modulus);
            for i in 1..=j {
                let pow_value = &chi.values[structure.power_class(c, i as i64)];
                let term = pow_value * &layers[(j - i) as usize][c];
                if alternating && i % 2 == 0 {
                    acc = &acc - &term;
                } else {
                    acc = &acc + &term;
                }
            }
            let scale = BigRational::new(BigInt::from(1), BigInt::from(j));
            layer.push(acc.scale(&scale));
        }
        layers.push(layer);
    }
    ClassFunction::new(layers.pop().unwrap())
}

/// Adjoint character: the character of the action on End(V), i.e.
/// chi(c) * chi(c^{-1}) pointwise.
pub fn adjoint_char(structure: &ClassStructure, chi: &ClassFunction) -> ClassFunction {
    ClassFunction::new(
        (0..structure.num_classes())
            .map(|c| &chi.values[c] * &chi.values[structure.inverse_class(c)])
            .collect(),
    )
}

/// Dual (contragredient) character: chi(c^{-1}) pointwise.
pub fn dual_char(structure: &ClassStructure, chi: &ClassFunction) -> ClassFunction {
    ClassFunction::new(
        (0..structure.num_classes())
            .map(|c| chi.values[structure.inverse_class(c)].clone())
            .collect(),
    )
}

/// Twist by a linear character: the pointwise product. Errors unless the
/// twisting character has degree 1.
pub fn twist_char(
    structure: &ClassStructure,
    chi: &ClassFunction,
    lambda: &ClassFunction,
) -> Result<ClassFunction, PowerOpError> {
    if !lambda.is_linear(structure) {
        return Err(PowerOpError::TwistNotLinear);
    }
    Ok(chi.pointwise_mul(lambda))
}

/// Asai (twisted tensor) character with respect to a finite family of
/// automorphism-induced class permutations: the pointwise product of the
/// pullbacks chi(theta_a(c)).
///
/// Each permutation must preserve class sizes and commute with the power
/// maps, which is what class maps induced by group automorphisms do.
pub fn asai_char(
    structure: &ClassStructure,
    chi: &ClassFunction,
    autos: &[Vec<usize>],
) -> Result<ClassFunction, PowerOpError> {
    let nc = structure.num_classes();
    for (index, theta) in autos.iter().enumerate() {
        let bad = |reason: &str| PowerOpError::BadAutomorphism {
            index,
            reason: reason.to_string(),
        };
        if theta.len() != nc {
            return Err(bad("wrong length"));
        }
        let mut seen = vec![false; nc];
        for &t in theta {
            if t >= nc || seen[t] {
                return Err(bad("not a permutation of the classes"));
            }
            seen[t] = true;
        }
        for c in 0..nc {
            if structure.class_sizes[theta[c]] != structure.class_sizes[c] {
                return Err(bad("does not preserve class sizes"));
            }
            for i in 0..structure.exponent {
                if theta[structure.power_class(c, i as i64)]
                    != structure.power_class(theta[c], i as i64)
                {
                    return Err(bad("does not commute with the power maps"));
                }
            }
        }
    }
    let mut values = vec![CycNum::one(structure.modulus); nc];
    for theta in autos {
        for (c, v) in values.iter_mut().enumerate() {
            *v = &*v * &chi.values[theta[c]];
        }
    }
    Ok(ClassFunction::new(values))
}
