//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! A [`CycNum`] is a residue of a rational polynomial modulo the N-th
//! cyclotomic polynomial Phi_N, stored as a coefficient vector of length
//! phi(N). Equality of values over the same modulus is therefore plain
//! coefficient equality, and zero-testing is unambiguous. All coefficients
//! are arbitrary-precision rationals; nothing in this module touches
//! floating point.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u64),
    #[error("modulus {0} does not divide {1}")]
    NotASubfield(u64, u64),
    #[error("value does not lie in Q(zeta_{0})")]
    NotInSubfield(u64),
    #[error("ratio undefined: denominator is zero but numerator is not")]
    RatioUndefined,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("coefficient vector has length {got}, expected phi({modulus}) = {expected}")]
    BadCoefficientLength {
        modulus: u64,
        got: usize,
        expected: usize,
    },
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

// ---------------------------------------------------------------------------
// Dense rational polynomials, used only for the modular arithmetic below.
// ---------------------------------------------------------------------------

fn poly_trim(coeffs: &mut Vec<BigRational>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    debug_assert!(m.last().is_some_and(|c| c.is_one()));
    let mut r: Vec<BigRational> = a.to_vec();
    poly_trim(&mut r);
    let deg_m = m.len() - 1;
    while r.len() > deg_m {
        let lead = r.last().unwrap().clone();
        let shift = r.len() - 1 - deg_m;
        for (i, mi) in m.iter().enumerate() {
            if !mi.is_zero() {
                let t = &lead * mi;
                r[shift + i] -= t;
            }
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Exact quotient of `a` by the monic polynomial `m`; remainder must be zero.
fn poly_exact_div(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let mut r: Vec<BigRational> = a.to_vec();
    poly_trim(&mut r);
    let deg_m = m.len() - 1;
    if r.is_empty() {
        return Vec::new();
    }
    assert!(r.len() > deg_m, "degree of dividend below divisor");
    let mut q = vec![BigRational::zero(); r.len() - deg_m];
    while r.len() > deg_m {
        let lead = r.last().unwrap().clone();
        let shift = r.len() - 1 - deg_m;
        q[shift] = lead.clone();
        for (i, mi) in m.iter().enumerate() {
            if !mi.is_zero() {
                let t = &lead * mi;
                r[shift + i] -= t;
            }
        }
        poly_trim(&mut r);
    }
    assert!(r.is_empty(), "division was not exact");
    q
}

/// Coefficients of Phi_N, cached per modulus. Always monic with integer
/// coefficients, ascending degree.
fn cyclotomic_poly(n: u64) -> Vec<BigRational> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigRational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num = vec![BigRational::zero(); (n + 1) as usize];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    let mut result = num;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        result = poly_exact_div(&result, &phi_d);
    }
    cache.lock().unwrap().insert(n, result.clone());
    result
}

// ---------------------------------------------------------------------------
// CycNum
// ---------------------------------------------------------------------------

/// An exact element of Q(zeta_N): a polynomial in zeta_N of degree < phi(N),
/// canonical modulo Phi_N. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycNum {
    modulus: u64,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    fn from_poly(modulus: u64, poly: &[BigRational]) -> CycNum {
        let phi = euler_phi(modulus) as usize;
        let reduced = if poly.len() > phi {
            poly_rem(poly, &cyclotomic_poly(modulus))
        } else {
            let mut v = poly.to_vec();
            poly_trim(&mut v);
            v
        };
        let mut coeffs = reduced;
        coeffs.resize(phi, BigRational::zero());
        CycNum { modulus, coeffs }
    }

    /// The zero element of Q(zeta_N).
    pub fn zero(modulus: u64) -> CycNum {
        assert!(modulus > 0, "modulus must be positive");
        CycNum {
            modulus,
            coeffs: vec![BigRational::zero(); euler_phi(modulus) as usize],
        }
    }

    pub fn one(modulus: u64) -> CycNum {
        CycNum::from_rational(modulus, BigRational::one())
    }

    /// A rational number viewed inside Q(zeta_N).
    pub fn from_rational(modulus: u64, r: BigRational) -> CycNum {
        assert!(modulus > 0, "modulus must be positive");
        let mut v = CycNum::zero(modulus);
        // For N = 1 the minimal polynomial is x - 1, so constants reduce to
        // the single coordinate either way.
        v.coeffs[0] = r;
        v
    }

    pub fn from_integer(modulus: u64, i: i64) -> CycNum {
        CycNum::from_rational(modulus, BigRational::from_integer(BigInt::from(i)))
    }

    /// zeta_N^j, reduced to canonical form.
    pub fn root_of_unity(modulus: u64, j: i64) -> CycNum {
        assert!(modulus > 0, "modulus must be positive");
        let j = j.rem_euclid(modulus as i64) as usize;
        let mut poly = vec![BigRational::zero(); j + 1];
        poly[j] = BigRational::one();
        CycNum::from_poly(modulus, &poly)
    }

    /// Construct from an explicit coefficient vector of length phi(N).
    pub fn from_coeffs(modulus: u64, coeffs: Vec<BigRational>) -> Result<CycNum, CycError> {
        if modulus == 0 {
            return Err(CycError::ZeroModulus);
        }
        let phi = euler_phi(modulus) as usize;
        if coeffs.len() != phi {
            return Err(CycError::BadCoefficientLength {
                modulus,
                got: coeffs.len(),
                expected: phi,
            });
        }
        Ok(CycNum { modulus, coeffs })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the value as a rational if it lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Returns the value as an integer if it is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    fn check_same_modulus(&self, other: &CycNum) -> Result<(), CycError> {
        if self.modulus != other.modulus {
            Err(CycError::ModulusMismatch(self.modulus, other.modulus))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum, CycError> {
        self.check_same_modulus(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum {
            modulus: self.modulus,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum, CycError> {
        self.check_same_modulus(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNum {
            modulus: self.modulus,
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum, CycError> {
        self.check_same_modulus(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(CycNum::zero(self.modulus));
        }
        let prod = poly_mul(&self.coeffs, &other.coeffs);
        Ok(CycNum::from_poly(self.modulus, &prod))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<CycNum, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero(self.modulus));
        }
        if let Some(r) = self.to_rational() {
            return Ok(CycNum::from_rational(self.modulus, r.recip()));
        }
        // Extended Euclid in Q[x]: s*a + t*Phi_N = 1, so s = a^{-1} mod Phi_N.
        let modpoly = cyclotomic_poly(self.modulus);
        let mut a = self.coeffs.clone();
        poly_trim(&mut a);
        let (g, s, _) = poly_xgcd(&a, &modpoly);
        // Phi_N is irreducible over Q, so the gcd is a nonzero constant.
        assert_eq!(g.len(), 1, "cyclotomic polynomial must be coprime to a nonzero residue");
        let scale = g[0].recip();
        let inv: Vec<BigRational> = s.iter().map(|c| c * &scale).collect();
        Ok(CycNum::from_poly(self.modulus, &inv))
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum, CycError> {
        self.check_same_modulus(other)?;
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    /// Apply the Galois automorphism zeta_N -> zeta_N^j (gcd(j, N) = 1).
    pub fn galois(&self, j: u64) -> CycNum {
        let n = self.modulus;
        let j = j % n;
        assert_eq!(
            j.gcd(&n),
            1,
            "galois exponent must be coprime to the modulus"
        );
        let mut poly = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((i as u64) * j % n) as usize;
                poly[e] += c;
            }
        }
        CycNum::from_poly(n, &poly)
    }

    /// Complex conjugation: zeta_N -> zeta_N^{N-1}. Fixes rationals; an
    /// involutive ring automorphism.
    pub fn conj(&self) -> CycNum {
        if self.modulus <= 2 {
            return self.clone();
        }
        self.galois(self.modulus - 1)
    }

    /// |z|^2 = z * conj(z).
    pub fn norm_squared(&self) -> CycNum {
        self.checked_mul(&self.conj()).unwrap()
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, k: u64) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one(self.modulus);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base).unwrap();
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base).unwrap();
            }
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        CycNum {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Image under zeta_N -> zeta_M^{M/N}; requires N | M. Injective ring map.
    pub fn embed(&self, larger: u64) -> Result<CycNum, CycError> {
        if larger == 0 {
            return Err(CycError::ZeroModulus);
        }
        if !larger.is_multiple_of(self.modulus) {
            return Err(CycError::NotASubfield(self.modulus, larger));
        }
        if larger == self.modulus {
            return Ok(self.clone());
        }
        let step = (larger / self.modulus) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * step] = c.clone();
            }
        }
        Ok(CycNum::from_poly(larger, &poly))
    }

    /// Rewrite in Q(zeta_M) for M | N, failing if the value is not fixed by
    /// Gal(Q(zeta_N)/Q(zeta_M)). Inverse of [`CycNum::embed`] where defined.
    pub fn project(&self, smaller: u64) -> Result<CycNum, CycError> {
        if smaller == 0 {
            return Err(CycError::ZeroModulus);
        }
        if !self.modulus.is_multiple_of(smaller) {
            return Err(CycError::NotASubfield(smaller, self.modulus));
        }
        if smaller == self.modulus {
            return Ok(self.clone());
        }
        let phi_small = euler_phi(smaller) as usize;
        let phi_big = euler_phi(self.modulus) as usize;
        // Columns: images of the basis zeta_M^j in the zeta_N basis.
        let mut cols = Vec::with_capacity(phi_small);
        for j in 0..phi_small {
            let basis = CycNum::root_of_unity(smaller, j as i64);
            cols.push(basis.embed(self.modulus)?.coeffs);
        }
        let solution = solve_rational_system(phi_big, &cols, &self.coeffs)
            .ok_or(CycError::NotInSubfield(smaller))?;
        CycNum::from_coeffs(smaller, solution)
    }

    /// Lift both operands into Q(zeta_lcm(Na, Nb)).
    pub fn unify(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        if a.modulus == b.modulus {
            return (a.clone(), b.clone());
        }
        let m = a.modulus.lcm(&b.modulus);
        (a.embed(m).unwrap(), b.embed(m).unwrap())
    }
}

/// Solve sum_j x_j * cols[j] = rhs over Q by Gaussian elimination.
/// Returns None when the system is inconsistent.
fn solve_rational_system(
    rows: usize,
    cols: &[Vec<BigRational>],
    rhs: &[BigRational],
) -> Option<Vec<BigRational>> {
    let ncols = cols.len();
    // Augmented matrix, row-major.
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..=ncols {
            let v = &m[row][c] * &inv;
            m[row][c] = v;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=ncols {
                    let v = &m[r][c] - &f * &m[row][c];
                    m[r][c] = v;
                }
            }
        }
        pivot_rows.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }
    // Inconsistent if any zero row has nonzero rhs.
    for r in 0..rows {
        if m[r][..ncols].iter().all(|c| c.is_zero()) && !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (r, c) in pivot_rows {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

fn poly_xgcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    // Returns (g, s, t) with s*a + t*b = g.
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = Vec::new();
    let mut t0: Vec<BigRational> = Vec::new();
    let mut t1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(&mut out);
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let deg_b = b.len() - 1;
    let lead_inv = b.last().unwrap().recip();
    if r.len() <= deg_b {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - deg_b];
    while r.len() > deg_b {
        let f = r.last().unwrap() * &lead_inv;
        let shift = r.len() - 1 - deg_b;
        q[shift] = f.clone();
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                let t = &f * bi;
                r[shift + i] -= t;
            }
        }
        poly_trim(&mut r);
    }
    poly_trim(&mut q);
    (q, r)
}

// Panicking operator forms for same-modulus values; the checked methods
// return errors instead.
impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.checked_add(rhs).expect("modulus mismatch in +")
    }
}
impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.checked_sub(rhs).expect("modulus mismatch in -")
    }
}
impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.checked_mul(rhs).expect("modulus mismatch in *")
    }
}
impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match i {
                0 => format!("{c}"),
                1 => format!("{c}*z{}", self.modulus),
                _ => format!("{c}*z{}^{}", self.modulus, i),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

// ---------------------------------------------------------------------------
// Serialization: {"N": u64, "coeffs": ["p/q", ...]}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CycNumDoc {
    #[serde(rename = "N")]
    modulus: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CycNumDoc {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = CycNumDoc::deserialize(deserializer)?;
        let coeffs = doc
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        CycNum::from_coeffs(doc.modulus, coeffs).map_err(serde::de::Error::custom)
    }
}

/// Parse "p/q" or "p" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, CycError> {
    s.parse::<BigRational>()
        .map_err(|_| CycError::BadRational(s.to_string()))
}

// ---------------------------------------------------------------------------
// Root-of-unity ratio detection
// ---------------------------------------------------------------------------

/// Outcome of comparing two values by their ratio.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootRatio {
    /// Both values vanish; treated as agreement (ratio conventionally 1).
    BothZero,
    /// a/b = (-1)^negated * zeta_N^exponent; `order` is the multiplicative
    /// order of the full ratio.
    Root {
        exponent: u64,
        order: u64,
        negated: bool,
    },
}

impl RootRatio {
    pub fn trivial() -> RootRatio {
        RootRatio::Root {
            exponent: 0,
            order: 1,
            negated: false,
        }
    }
}

/// Decide whether a/b is a root of unity lying in Q(zeta_N) (order dividing
/// N, times -1 when N is odd). Returns:
///   Ok(Some(..))  — both zero, or the ratio is such a root of unity;
///   Ok(None)      — the ratio exists but is not one of those roots;
///   Err(..)       — b = 0 with a != 0 (ratio undefined).
pub fn root_of_unity_ratio(a: &CycNum, b: &CycNum) -> Result<Option<RootRatio>, CycError> {
    let (a, b) = CycNum::unify(a, b);
    if b.is_zero() {
        return if a.is_zero() {
            Ok(Some(RootRatio::BothZero))
        } else {
            Err(CycError::RatioUndefined)
        };
    }
    let ratio = a.checked_div(&b)?;
    let n = ratio.modulus();
    for j in 0..n {
        let zeta_j = CycNum::root_of_unity(n, j as i64);
        if ratio == zeta_j {
            return Ok(Some(RootRatio::Root {
                exponent: j,
                order: n / n.gcd(&j),
                negated: false,
            }));
        }
        if n % 2 == 1 && -&ratio == zeta_j {
            // -zeta_N^j has twice the (odd) order of zeta_N^j.
            return Ok(Some(RootRatio::Root {
                exponent: j,
                order: 2 * (n / n.gcd(&j)),
                negated: true,
            }));
        }
    }
    Ok(None)
}
