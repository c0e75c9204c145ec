//! The quasi-ordinary surface recursion.
//!
//! A reduced surface germ with characteristic pairs
//! `(λ_1, μ_1) < … < (λ_e, μ_e)` is truncated to the leading pair
//! `x^{a/(mb)} y^{n/m}` (with `μ_1 = n/m`, `m·λ_1 = a/b` in lowest
//! terms), and the recursion proceeds on the derived surface with
//!
//! ```text
//! μ'_i = m(μ_{i+1} - μ_1 + mb·μ_1)
//! λ'_i = b(λ_{i+1} - λ_1 + mb·λ_1 + r·μ'_i·λ_1)
//! ```
//!
//! where `(r, s)` is the smallest nonnegative solution of `ms - rn = 1`.
//! The invariants of the transverse Milnor fiber combine by
//!
//! ```text
//! d   = mb·d'
//! χ   = d'(χ_1 - b) + b·χ'              with χ_1 = mb + nb - mnb²
//! H   = H_1(t^{d'})·H'(t)^b/(t^{d'} - 1)^b
//! H_1 = (t^{mb} - 1)(t^{nb} - 1)/(t^{mnb} - 1)^b
//! V   = V_1(t)^{d'}·V'(t^b)/(t^b - 1)^{d'}
//! V_1 = (t - 1)^{mb}/(t^{nb/g} - 1)^{g(mb - 1)}     with g = gcd(n, a)
//! ```
//!
//! (`gcd(n, 0) = n`), with base case `(1, 1, t - 1, t - 1)`.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::EngineError;
use crate::exact::{ExponentPair, Rational};
use crate::model::SurfaceCharacteristics;
use crate::zeta::ZetaExpr;

/// Truncation data of the leading characteristic pair
/// `x^{a/(mb)} y^{n/m}`: `gcd(m, n) = gcd(a, b) = 1`, `a = 0` forces
/// `b = 1`, and `(r, s)` is the smallest nonnegative solution of
/// `ms - rn = 1` (so `0 <= r < m` for `m > 1`, and `(r, s) = (0, 1)`
/// when `m = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceTruncationParams {
    pub m: BigUint,
    pub n: BigUint,
    pub a: BigUint,
    pub b: BigUint,
    pub r: BigUint,
    pub s: BigUint,
}

impl SurfaceTruncationParams {
    /// Build from the four defining integers, validating the constraints
    /// and solving for `(r, s)`.
    pub fn new(m: BigUint, n: BigUint, a: BigUint, b: BigUint) -> Result<Self, EngineError> {
        if m.is_zero() || n.is_zero() || b.is_zero() {
            return Err(EngineError::InvalidParameters("m, n, b must be positive"));
        }
        if !m.gcd(&n).is_one() {
            return Err(EngineError::InvalidParameters("m and n must be coprime"));
        }
        // gcd(0, b) = b, so this also enforces b = 1 when a = 0.
        if !a.gcd(&b).is_one() {
            return Err(EngineError::InvalidParameters("a and b must be coprime"));
        }
        let (r, s) = solve_unimodular(&m, &n);
        Ok(Self { m, n, a, b, r, s })
    }

    /// Convenience constructor from machine integers (parameter sweeps).
    pub fn from_u64(m: u64, n: u64, a: u64, b: u64) -> Result<Self, EngineError> {
        Self::new(
            BigUint::from(m),
            BigUint::from(n),
            BigUint::from(a),
            BigUint::from(b),
        )
    }

    /// `d_1 = mb`, the degree of the truncated germ.
    pub fn degree(&self) -> BigUint {
        &self.m * &self.b
    }

    /// `χ_1 = mb + nb - mnb²`.
    pub fn euler(&self) -> BigInt {
        let m = BigInt::from(self.m.clone());
        let n = BigInt::from(self.n.clone());
        let b = BigInt::from(self.b.clone());
        &m * &b + &n * &b - m * n * (&b * &b)
    }

    /// Horizontal monodromy of the truncated germ:
    /// `(t^{mb} - 1)(t^{nb} - 1)/(t^{mnb} - 1)^b`.
    pub fn horizontal_zeta(&self) -> ZetaExpr {
        let one = BigInt::one();
        let mb = ZetaExpr::factor(&self.m * &self.b, one.clone());
        let nb = ZetaExpr::factor(&self.n * &self.b, one);
        let mnb = ZetaExpr::factor(
            &self.m * &self.n * &self.b,
            BigInt::from(self.b.clone()),
        );
        mb.mul(&nb).div(&mnb)
    }

    /// Vertical monodromy of the truncated germ:
    /// `(t - 1)^{mb}/(t^{nb/g} - 1)^{g(mb - 1)}` with `g = gcd(n, a)`
    /// (and `gcd(n, 0) = n`, which makes the vertical action trivial
    /// when `a = 0`).
    pub fn vertical_zeta(&self) -> ZetaExpr {
        let g = self.n.gcd(&self.a);
        let mb = &self.m * &self.b;
        let numerator = ZetaExpr::factor(BigUint::one(), BigInt::from(mb.clone()));
        let orbit = &self.n * &self.b / &g;
        let exponent = BigInt::from(g) * (BigInt::from(mb) - BigInt::one());
        numerator.div(&ZetaExpr::factor(orbit, exponent))
    }
}

/// Smallest nonnegative `(r, s)` with `ms - rn = 1`, for coprime `m, n`.
fn solve_unimodular(m: &BigUint, n: &BigUint) -> (BigUint, BigUint) {
    if m.is_one() {
        return (BigUint::zero(), BigUint::one());
    }
    let m_int = BigInt::from(m.clone());
    let n_int = BigInt::from(n.clone());
    let eg = m_int.extended_gcd(&n_int);
    debug_assert!(eg.gcd.is_one());
    // m·x + n·y = 1, so r ≡ -y (mod m) and s = (1 + rn)/m.
    let r = (-eg.y).mod_floor(&m_int);
    let s = (BigInt::one() + &r * &n_int) / &m_int;
    debug_assert!(!r.is_negative() && s.is_positive());
    (r.magnitude().clone(), s.magnitude().clone())
}

/// Invariant bundle of a quasi-ordinary surface germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    /// Number of sheets of the projection.
    pub degree: BigUint,
    /// Euler characteristic of the transverse Milnor fiber.
    pub euler: BigInt,
    /// Horizontal monodromy zeta function `H(t)`.
    pub horizontal: ZetaExpr,
    /// Vertical monodromy zeta function `V(t)`.
    pub vertical: ZetaExpr,
}

fn leading_pair(c: &SurfaceCharacteristics) -> Result<&ExponentPair, EngineError> {
    let first = c.pairs().first().ok_or(EngineError::EmptyCharacteristics)?;
    if first.y.is_zero() {
        return Err(EngineError::NotReduced);
    }
    Ok(first)
}

/// Truncation parameters of the leading characteristic pair: `n/m = μ_1`
/// and `a/b = m·λ_1`, both in lowest terms.
pub fn surface_truncation_params(
    c: &SurfaceCharacteristics,
) -> Result<SurfaceTruncationParams, EngineError> {
    let first = leading_pair(c)?;
    let m = first.y.denom().magnitude().clone();
    let n = first.y.numer().magnitude().clone();
    let scaled = &first.x * &BigInt::from(m.clone());
    let a = scaled.numer().magnitude().clone();
    let b = scaled.denom().magnitude().clone();
    let (r, s) = solve_unimodular(&m, &n);
    Ok(SurfaceTruncationParams { m, n, a, b, r, s })
}

/// The derived surface: `e - 1` pairs computed from the truncation
/// parameters. The output is again reduced characteristic data.
pub fn surface_derive(c: &SurfaceCharacteristics) -> Result<SurfaceCharacteristics, EngineError> {
    let params = surface_truncation_params(c)?;
    let first = c.pairs().first().expect("nonempty by params");
    let lambda1 = &first.x;
    let mu1 = &first.y;
    let m = Rational::from(BigInt::from(params.m.clone()));
    let b = Rational::from(BigInt::from(params.b.clone()));
    let r = Rational::from(BigInt::from(params.r.clone()));
    let mb = &m * &b;

    let derived: Vec<ExponentPair> = c.pairs()[1..]
        .iter()
        .map(|pair| {
            let mu_next = &m * &(&pair.y - mu1 + &mb * mu1);
            let lambda_next = &b * &(&pair.x - lambda1 + &mb * lambda1 + &r * &mu_next * lambda1);
            ExponentPair::new(lambda_next, mu_next)
        })
        .collect();
    Ok(SurfaceCharacteristics::new(derived)
        .expect("derived pairs satisfy the characteristic invariants"))
}

/// Degree, transverse Euler characteristic, horizontal and vertical
/// monodromy of a reduced surface germ. Callers holding non-reduced data
/// apply [`SurfaceCharacteristics::reduce`] first.
pub fn surface_invariants(c: &SurfaceCharacteristics) -> Result<SurfaceInvariants, EngineError> {
    if c.is_empty() {
        let t_minus_one = ZetaExpr::factor(BigUint::one(), BigInt::one());
        return Ok(SurfaceInvariants {
            degree: BigUint::one(),
            euler: BigInt::one(),
            horizontal: t_minus_one.clone(),
            vertical: t_minus_one,
        });
    }
    let params = surface_truncation_params(c)?;
    let derived = surface_derive(c)?;
    let rec = surface_invariants(&derived)?;

    let b_int = BigInt::from(params.b.clone());
    let d_prime = rec.degree.clone();
    let d_prime_int = BigInt::from(d_prime.clone());

    let degree = params.degree() * &d_prime;
    let euler = &d_prime_int * (params.euler() - &b_int) + &b_int * &rec.euler;

    let horizontal = params
        .horizontal_zeta()
        .subst(&d_prime)
        .mul(&rec.horizontal.pow(&b_int))
        .div(&ZetaExpr::factor(d_prime.clone(), b_int.clone()));
    debug_assert_eq!(horizontal.degree(), euler);

    let vertical = params
        .vertical_zeta()
        .pow(&d_prime_int)
        .mul(&rec.vertical.subst(&params.b))
        .div(&ZetaExpr::factor(params.b.clone(), d_prime_int));
    debug_assert_eq!(vertical.degree(), euler);

    Ok(SurfaceInvariants {
        degree,
        euler,
        horizontal,
        vertical,
    })
}
