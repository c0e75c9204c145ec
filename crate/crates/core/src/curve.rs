//! The plane-curve recursion.
//!
//! A curve germ with essential exponents `μ_1 < … < μ_e` is processed by
//! truncating to the leading exponent `μ_1 = n/m` (a torus-knot germ with
//! closed-form invariants) and recursing on the derived curve with
//! exponents `μ'_i = m(μ_{i+1} - μ_1 + n)`. The combination rules are
//!
//! ```text
//! d   = m·d'
//! χ   = d'(χ_1 - 1) + χ'          with χ_1 = m + n - mn
//! H   = H_1(t^{d'})·H'(t)/(t^{d'} - 1)
//! H_1 = (t^m - 1)(t^n - 1)/(t^{mn} - 1)
//! ```
//!
//! with base case `(d, χ, H) = (1, 1, t - 1)` for the smooth germ.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::EngineError;
use crate::exact::Rational;
use crate::model::CurveCharacteristics;
use crate::zeta::ZetaExpr;

/// The leading essential exponent in lowest terms: `μ_1 = n/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveTruncation {
    pub m: BigUint,
    pub n: BigUint,
}

impl CurveTruncation {
    /// Horizontal monodromy of the truncated germ:
    /// `(t^m - 1)(t^n - 1)/(t^{mn} - 1)`.
    pub fn horizontal_zeta(&self) -> ZetaExpr {
        let one = BigInt::one();
        let m = ZetaExpr::factor(self.m.clone(), one.clone());
        let n = ZetaExpr::factor(self.n.clone(), one.clone());
        let mn = ZetaExpr::factor(&self.m * &self.n, one);
        m.mul(&n).div(&mn)
    }

    /// Euler characteristic of the truncated germ's Milnor fiber:
    /// `χ_1 = m + n - mn`.
    pub fn euler(&self) -> BigInt {
        let m = BigInt::from(self.m.clone());
        let n = BigInt::from(self.n.clone());
        &m + &n - &m * &n
    }
}

/// Invariant bundle of a curve germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    /// Number of sheets of the projection (the common denominator of the
    /// exponents).
    pub degree: BigUint,
    /// Euler characteristic of the Milnor fiber.
    pub euler: BigInt,
    /// Horizontal monodromy zeta function `H(t)`.
    pub horizontal: ZetaExpr,
}

/// Numerator and denominator of the leading essential exponent.
pub fn curve_truncate(c: &CurveCharacteristics) -> Result<CurveTruncation, EngineError> {
    let mu1 = c
        .exponents()
        .first()
        .ok_or(EngineError::EmptyCharacteristics)?;
    Ok(CurveTruncation {
        m: mu1.denom().magnitude().clone(),
        n: mu1.numer().magnitude().clone(),
    })
}

/// The derived curve: exponents `μ'_i = m(μ_{i+1} - μ_1 + n)` for
/// `1 <= i <= e - 1`.
pub fn curve_derive(c: &CurveCharacteristics) -> Result<CurveCharacteristics, EngineError> {
    let mu1 = c
        .exponents()
        .first()
        .ok_or(EngineError::EmptyCharacteristics)?;
    let m = Rational::from(mu1.denom().clone());
    let n = Rational::from(mu1.numer().clone());
    let derived: Vec<Rational> = c.exponents()[1..]
        .iter()
        .map(|mu| &m * &(mu - mu1 + &n))
        .collect();
    Ok(CurveCharacteristics::new(derived)
        .expect("derived exponents satisfy the characteristic invariants"))
}

/// Degree, Euler characteristic, and horizontal monodromy of the germ
/// with the given essential exponents.
pub fn curve_invariants(c: &CurveCharacteristics) -> CurveInvariants {
    if c.is_empty() {
        return CurveInvariants {
            degree: BigUint::one(),
            euler: BigInt::one(),
            horizontal: ZetaExpr::factor(BigUint::one(), BigInt::one()),
        };
    }
    let truncation = curve_truncate(c).expect("nonempty characteristics");
    let derived = curve_derive(c).expect("nonempty characteristics");
    let rec = curve_invariants(&derived);

    let degree = &truncation.m * &rec.degree;
    let chi1 = truncation.euler();
    let d_prime = BigInt::from(rec.degree.clone());
    let euler = &d_prime * (chi1 - BigInt::one()) + &rec.euler;

    let h1 = truncation.horizontal_zeta();
    let horizontal = h1
        .subst(&rec.degree)
        .mul(&rec.horizontal)
        .div(&ZetaExpr::factor(rec.degree.clone(), BigInt::one()));
    debug_assert_eq!(horizontal.degree(), euler);

    CurveInvariants {
        degree,
        euler,
        horizontal,
    }
}
