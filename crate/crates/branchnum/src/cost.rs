//! Analytic work estimates for the two branch-number algorithms.
//!
//! Counts are exact big integers; the log2 views are derived from the big
//! integers rather than from floating intermediates, since the exhaustive
//! counts reach 2^134 and beyond.

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CostError {
    /// The gap function and complexity bound are defined for q > 2 only.
    DomainError { n: usize, q: u64 },
}

impl fmt::Display for CostError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostError::DomainError { n, q } => {
                write!(f, "cost bound undefined for n = {n}, q = {q} (needs n >= 1, q > 2)")
            }
        }
    }
}

impl std::error::Error for CostError {}

/// Field-multiplication estimates for one problem size.
#[derive(Debug, Clone, PartialEq)]
pub struct CostEstimate {
    pub n: usize,
    pub q: u64,
    /// Representative scan with two products per vector.
    pub mults_new: BigUint,
    /// Involutory / Hadamard variant: one product per vector.
    pub mults_new_involutory: BigUint,
    /// Definition-based scan over all q^n inputs: n^2 * q^n.
    pub mults_exhaustive: BigUint,
    pub log2_new: f64,
    pub log2_exhaustive: f64,
}

impl CostEstimate {
    pub fn compute(n: usize, q: u64) -> CostEstimate {
        let mults_new = cost_new(n, q);
        let mults_new_involutory = cost_new_involutory(n, q);
        let mults_exhaustive = cost_exhaustive(n, q);
        let log2_new = log2_biguint(&mults_new);
        let log2_exhaustive = log2_biguint(&mults_exhaustive);
        CostEstimate { n, q, mults_new, mults_new_involutory, mults_exhaustive, log2_new, log2_exhaustive }
    }
}

/// Field multiplications of the representative scan:
/// 2n * sum_{k=1}^{floor((n+1)/2)} C(n,k) (k-1) (q-1)^(k-1).
pub fn cost_new(n: usize, q: u64) -> BigUint {
    BigUint::from(2u32) * cost_new_involutory(n, q)
}

/// Single-product variant of the scan cost, exactly half of [`cost_new`]:
/// n * sum_{k=1}^{floor((n+1)/2)} C(n,k) (k-1) (q-1)^(k-1).
pub fn cost_new_involutory(n: usize, q: u64) -> BigUint {
    BigUint::from(n) * weighted_class_sum(n, (n + 1) / 2, q)
}

fn weighted_class_sum(n: usize, kmax: usize, q: u64) -> BigUint {
    let qm1 = BigUint::from(q - 1);
    let mut acc = BigUint::zero();
    for k in 1..=kmax {
        acc += binomial(BigUint::from(n), BigUint::from(k))
            * BigUint::from(k - 1)
            * qm1.pow(k as u32 - 1);
    }
    acc
}

/// Field multiplications of the definition-based scan: n^2 * q^n.
pub fn cost_exhaustive(n: usize, q: u64) -> BigUint {
    BigUint::from(n) * BigUint::from(n) * BigUint::from(q).pow(n as u32)
}

/// Base-2 logarithm of an exact count, accurate to f64 precision.
pub fn log2_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 53 {
        return (x.to_u64().unwrap() as f64).log2();
    }
    // Keep the top 53 bits as an exact f64 mantissa and shift back.
    let shift = bits - 53;
    let top = (x >> shift).to_u64().unwrap();
    (top as f64).log2() + shift as f64
}

/// Exponent gap between the exhaustive and representative-scan complexity
/// bounds: positive means the scan wins.
pub fn gap_f(n: usize, q: u64) -> Result<f64, CostError> {
    if n < 1 || q <= 2 {
        return Err(CostError::DomainError { n, q });
    }
    let nf = n as f64;
    let qf = q as f64;
    let exhaustive_exp = nf * qf.log2() + 2.0 * nf.log2();
    let scan_exp = nf + 1.5 + (nf - 1.0) / 2.0 * (qf - 1.0).log2() + 1.5 * nf.log2();
    Ok(exhaustive_exp - scan_exp)
}

/// Checks the closed-form complexity bound: cost_new(n, q) stays below
/// 2^(n + 3/2 + (n-1)/2 log2(q-1) + 3/2 log2 n).
pub fn bound_check(n: usize, q: u64) -> Result<bool, CostError> {
    if n < 1 || q <= 2 {
        return Err(CostError::DomainError { n, q });
    }
    let nf = n as f64;
    let bound_exp = nf + 1.5 + (nf - 1.0) / 2.0 * ((q - 1) as f64).log2() + 1.5 * nf.log2();
    let cost = cost_new(n, q);
    if cost.is_zero() {
        return Ok(true);
    }
    Ok(log2_biguint(&cost) <= bound_exp)
}
