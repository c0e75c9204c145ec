//! Puiseux-series supports and their characteristic data.
//!
//! Only the support of a series matters for the invariants computed here:
//! coefficients are dropped at the boundary and never stored. A curve
//! support is a strictly increasing list of positive rationals; a surface
//! support is a set of nonnegative exponent pairs. From a support we
//! extract the characteristic data (essential exponents, characteristic
//! pairs), which is the working state of the recursion engines, and we
//! validate the quasi-ordinary conditions for surfaces. The reduction of
//! a non-reduced surface (leading pairs with vanishing second exponent)
//! also lives here.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::ModelError;
use crate::exact::{lattice_contains, lcm_denominators, ExponentPair, Rational};

/// Support of a curve Puiseux series: strictly increasing positive exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSeries {
    exponents: Vec<Rational>,
}

impl CurveSeries {
    /// Sorts the exponents; rejects duplicates and nonpositive entries.
    pub fn new(mut exponents: Vec<Rational>) -> Result<Self, ModelError> {
        if exponents.iter().any(|e| !e.is_positive()) {
            return Err(ModelError::NonPositiveExponent);
        }
        exponents.sort();
        if exponents.windows(2).any(|w| w[0] == w[1]) {
            return Err(ModelError::DuplicateExponent);
        }
        Ok(Self { exponents })
    }

    pub fn exponents(&self) -> &[Rational] {
        &self.exponents
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// The essential exponents: scanning in increasing order, an exponent
    /// is kept iff its denominator does not divide the least common
    /// multiple of all previous denominators (which starts at 1, so
    /// integer exponents are never essential). The running lcm is updated
    /// by every exponent, essential or not.
    pub fn characteristics(&self) -> CurveCharacteristics {
        let mut running = BigUint::one();
        let mut essential = Vec::new();
        for mu in &self.exponents {
            let denom = mu.denom().magnitude();
            if !(&running % denom).is_zero() {
                essential.push(mu.clone());
            }
            running = num_integer::Integer::lcm(&running, denom);
        }
        CurveCharacteristics { mus: essential }
    }
}

impl fmt::Display for CurveSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("0");
        }
        for (i, mu) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write_power(f, "y", mu)?;
        }
        Ok(())
    }
}

/// Support of a quasi-ordinary surface series: distinct nonnegative
/// exponent pairs, stored sorted by the linear extension
/// `(x + y, then x)` of the componentwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSeries {
    pairs: Vec<ExponentPair>,
}

impl SurfaceSeries {
    /// Sorts the pairs; rejects duplicates and negative components.
    pub fn new(mut pairs: Vec<ExponentPair>) -> Result<Self, ModelError> {
        if pairs.iter().any(|p| !p.is_nonnegative()) {
            return Err(ModelError::NegativeExponent);
        }
        pairs.sort_by_key(scan_key);
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(ModelError::DuplicateExponent);
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[ExponentPair] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Exchange the two exponents of every pair: the same germ looked at
    /// across the other axis (whose vertical monodromy is the one along
    /// the other component of the singular locus).
    pub fn swap_axes(&self) -> SurfaceSeries {
        let swapped: Vec<ExponentPair> = self.pairs.iter().map(ExponentPair::swap).collect();
        SurfaceSeries::new(swapped).expect("swapping axes preserves validity")
    }

    /// Extract the characteristic pairs and validate the quasi-ordinary
    /// conditions.
    ///
    /// Scanning in the fixed linear extension, a pair is characteristic
    /// iff it is not in the subgroup of `Q × Q` generated by `Z × Z` and
    /// the characteristic pairs found so far. Afterwards every
    /// non-characteristic pair must lie in the subgroup generated by the
    /// characteristic pairs componentwise below it, and the
    /// characteristic pairs must form a chain in the componentwise order;
    /// otherwise the support cannot come from a normalized quasi-ordinary
    /// branch.
    pub fn characteristics(&self) -> Result<SurfaceCharacteristics, ModelError> {
        let mut chars: Vec<ExponentPair> = Vec::new();
        let mut others: Vec<&ExponentPair> = Vec::new();
        for pair in &self.pairs {
            if lattice_contains(&chars, pair) {
                others.push(pair);
            } else {
                chars.push(pair.clone());
            }
        }
        if chars
            .windows(2)
            .any(|w| !w[0].lt_componentwise(&w[1]))
        {
            return Err(ModelError::NotQuasiOrdinary);
        }
        for pair in others {
            let below: Vec<ExponentPair> = chars
                .iter()
                .filter(|c| c.lt_componentwise(pair))
                .cloned()
                .collect();
            if !lattice_contains(&below, pair) {
                return Err(ModelError::NotQuasiOrdinary);
            }
        }
        Ok(SurfaceCharacteristics { pairs: chars })
    }
}

impl fmt::Display for SurfaceSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("0");
        }
        for (i, pair) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if pair.x.is_zero() && pair.y.is_zero() {
                f.write_str("x^0")?;
                continue;
            }
            let mut wrote = false;
            if !pair.x.is_zero() {
                write_power(f, "x", &pair.x)?;
                wrote = true;
            }
            if !pair.y.is_zero() {
                if wrote {
                    f.write_str("*")?;
                }
                write_power(f, "y", &pair.y)?;
            }
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: &Rational) -> fmt::Result {
    if e.is_integer() {
        if e.is_one() {
            write!(f, "{var}")
        } else {
            write!(f, "{var}^{e}")
        }
    } else {
        write!(f, "{var}^({e})")
    }
}

/// The linear extension used by the characteristic scan: sort by
/// `x + y`, ties broken by `x`. Any linear extension of the
/// componentwise order yields the same characteristic set on valid
/// input; fixing one makes the behavior on invalid input deterministic.
fn scan_key(p: &ExponentPair) -> (Rational, Rational) {
    (&p.x + &p.y, p.x.clone())
}

/// Ordered essential exponents `μ_1 < … < μ_e` of a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveCharacteristics {
    mus: Vec<Rational>,
}

impl CurveCharacteristics {
    /// Validates that the list is strictly increasing, positive, and that
    /// each denominator fails to divide the lcm of the previous
    /// denominators.
    pub fn new(mus: Vec<Rational>) -> Result<Self, ModelError> {
        if mus.iter().any(|m| !m.is_positive()) {
            return Err(ModelError::NonPositiveExponent);
        }
        if mus.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ModelError::InvalidCharacteristics);
        }
        let mut running = BigUint::one();
        for mu in &mus {
            let denom = mu.denom().magnitude();
            if (&running % denom).is_zero() {
                return Err(ModelError::InvalidCharacteristics);
            }
            running = num_integer::Integer::lcm(&running, denom);
        }
        Ok(Self { mus })
    }

    pub fn exponents(&self) -> &[Rational] {
        &self.mus
    }

    pub fn len(&self) -> usize {
        self.mus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mus.is_empty()
    }

    /// The series whose support is exactly the essential exponents. The
    /// empty case is the smooth germ `z = 0`.
    pub fn prototype(&self) -> CurveSeries {
        CurveSeries::new(self.mus.clone()).expect("characteristic exponents form a valid support")
    }
}

/// Ordered characteristic pairs `(λ_1, μ_1) < … < (λ_e, μ_e)` of a
/// quasi-ordinary surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceCharacteristics {
    pairs: Vec<ExponentPair>,
}

impl SurfaceCharacteristics {
    /// Validates nonnegativity, the strictly increasing componentwise
    /// chain, and that each pair is not generated by `Z × Z` and its
    /// predecessors.
    pub fn new(pairs: Vec<ExponentPair>) -> Result<Self, ModelError> {
        if pairs.iter().any(|p| !p.is_nonnegative()) {
            return Err(ModelError::NegativeExponent);
        }
        if pairs.windows(2).any(|w| !w[0].lt_componentwise(&w[1])) {
            return Err(ModelError::InvalidCharacteristics);
        }
        for (i, pair) in pairs.iter().enumerate() {
            if lattice_contains(&pairs[..i], pair) {
                return Err(ModelError::InvalidCharacteristics);
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[ExponentPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The series whose support is exactly the characteristic pairs.
    pub fn prototype(&self) -> SurfaceSeries {
        SurfaceSeries::new(self.pairs.clone()).expect("characteristic pairs form a valid support")
    }

    /// A surface is reduced when the first characteristic pair has
    /// nonzero second exponent (or there are none).
    pub fn is_reduced(&self) -> bool {
        self.pairs.first().is_none_or(|p| !p.y.is_zero())
    }

    /// Rewrite a non-reduced surface as a reduced one: with `s` leading
    /// pairs `(λ_i, 0)` and `N` the least common denominator of their
    /// first exponents, the remaining pairs become `(N·λ, μ)`. Returns
    /// `N` (1 when already reduced) together with the reduced data.
    ///
    /// Fails with [`ModelError::AllHorizontalPairs`] when every pair has
    /// vanishing second exponent.
    pub fn reduce(&self) -> Result<(BigUint, SurfaceCharacteristics), ModelError> {
        if self.is_reduced() {
            return Ok((BigUint::one(), self.clone()));
        }
        let s = self.pairs.iter().take_while(|p| p.y.is_zero()).count();
        if s == self.pairs.len() {
            return Err(ModelError::AllHorizontalPairs);
        }
        let leading: Vec<Rational> = self.pairs[..s].iter().map(|p| p.x.clone()).collect();
        let n = lcm_denominators(&leading);
        let n_int = BigInt::from(n.clone());
        let rescaled: Vec<ExponentPair> = self.pairs[s..]
            .iter()
            .map(|p| ExponentPair::new(&p.x * &n_int, p.y.clone()))
            .collect();
        let reduced = SurfaceCharacteristics::new(rescaled)?;
        Ok((n, reduced))
    }
}
