//! Exact rational arithmetic and integer-lattice computations.
//!
//! Everything downstream works with arbitrary-precision rationals: the
//! exponents of a Puiseux series, the recursion's derived exponents, and
//! the common denominators that become degrees. The lattice operations
//! decide membership and index questions for subgroups of `Q × Q`
//! generated by `Z × Z` together with finitely many exponent pairs, by
//! clearing denominators and column-reducing a 2-row integer matrix.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision exact fraction, always in lowest terms with a
/// positive denominator (zero is `0/1`).
pub type Rational = num_rational::BigRational;

/// An exponent pair `(x, y)` of one term of a surface series:
/// `x` is the exponent of the first variable, `y` of the second.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentPair {
    pub x: Rational,
    pub y: Rational,
}

impl ExponentPair {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    /// Exchange the two exponents, i.e. look at the germ across the other axis.
    pub fn swap(&self) -> Self {
        Self {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    /// Componentwise `<=`.
    pub fn le_componentwise(&self, other: &Self) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// Componentwise `<=` and not equal: the partial order on exponent pairs.
    pub fn lt_componentwise(&self, other: &Self) -> bool {
        self.le_componentwise(other) && self != other
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.x.is_negative() && !self.y.is_negative()
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Least common multiple of the denominators of `values`; `1` for the
/// empty list (the lcm of the empty set is 1).
pub fn lcm_denominators(values: &[Rational]) -> BigUint {
    let mut acc = BigInt::one();
    for v in values {
        acc = acc.lcm(v.denom());
    }
    acc.magnitude().clone()
}

/// A triangular basis `[(d11, t21), (0, d22)]` of a finite-index sublattice
/// of `Z^2`, obtained by column reduction.
struct TriangularBasis {
    d11: BigInt,
    t21: BigInt,
    d22: BigInt,
}

impl TriangularBasis {
    /// Column-reduce the integer vectors spanning the lattice. The caller
    /// guarantees full rank (the axis vectors are always included).
    fn from_columns(columns: &[(BigInt, BigInt)]) -> Self {
        let mut wx = BigInt::zero();
        let mut wy = BigInt::zero();
        for (x, y) in columns {
            if x.is_zero() {
                continue;
            }
            let eg = wx.extended_gcd(x);
            wy = &eg.x * &wy + &eg.y * y;
            wx = eg.gcd;
        }
        if wx.is_negative() {
            wx = -wx;
            wy = -wy;
        }
        debug_assert!(wx.is_positive(), "lattice must have full rank");

        let mut d22 = BigInt::zero();
        for (x, y) in columns {
            let reduced = y - (x / &wx) * &wy;
            d22 = d22.gcd(&reduced);
        }
        debug_assert!(d22.is_positive(), "lattice must have full rank");
        TriangularBasis {
            d11: wx,
            t21: wy,
            d22,
        }
    }

    fn contains(&self, point: &(BigInt, BigInt)) -> bool {
        let (x, y) = point;
        if !(x % &self.d11).is_zero() {
            return false;
        }
        let k = x / &self.d11;
        let rem = y - k * &self.t21;
        (rem % &self.d22).is_zero()
    }

    fn determinant(&self) -> BigInt {
        &self.d11 * &self.d22
    }
}

fn common_denominator(pairs: &[&ExponentPair]) -> BigInt {
    let mut acc = BigInt::one();
    for p in pairs {
        acc = acc.lcm(p.x.denom());
        acc = acc.lcm(p.y.denom());
    }
    acc
}

fn scale_pair(p: &ExponentPair, d: &BigInt) -> (BigInt, BigInt) {
    let x = &p.x * d;
    let y = &p.y * d;
    debug_assert!(x.is_integer() && y.is_integer());
    (x.to_integer(), y.to_integer())
}

fn scaled_lattice_columns(generators: &[ExponentPair], d: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut columns: Vec<(BigInt, BigInt)> = generators.iter().map(|g| scale_pair(g, d)).collect();
    columns.push((d.clone(), BigInt::zero()));
    columns.push((BigInt::zero(), d.clone()));
    columns
}

/// Does `candidate` lie in the subgroup of `Q × Q` generated by `Z × Z`
/// together with `generators`?
///
/// All entries are cleared to the common denominator `D` of everything in
/// sight; membership of `D·candidate` in the integer lattice spanned by
/// `D·generators`, `(D, 0)`, `(0, D)` is then decided by column reduction.
pub fn lattice_contains(generators: &[ExponentPair], candidate: &ExponentPair) -> bool {
    let mut refs: Vec<&ExponentPair> = generators.iter().collect();
    refs.push(candidate);
    let d = common_denominator(&refs);
    let basis = TriangularBasis::from_columns(&scaled_lattice_columns(generators, &d));
    basis.contains(&scale_pair(candidate, &d))
}

/// Index `[L : Z × Z]` of `Z × Z` in the subgroup `L` generated by
/// `Z × Z` and `generators`; `1` for the empty list.
pub fn lattice_index(generators: &[ExponentPair]) -> BigUint {
    let refs: Vec<&ExponentPair> = generators.iter().collect();
    let d = common_denominator(&refs);
    let basis = TriangularBasis::from_columns(&scaled_lattice_columns(generators, &d));
    let det = basis.determinant();
    let d_squared = &d * &d;
    debug_assert!((&d_squared % &det).is_zero());
    (d_squared / det).magnitude().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn pair(xn: i64, xd: i64, yn: i64, yd: i64) -> ExponentPair {
        ExponentPair::new(rat(xn, xd), rat(yn, yd))
    }

    #[test]
    fn lcm_of_example_denominators() {
        let vals = vec![rat(3, 2), rat(7, 4), rat(11, 6)];
        assert_eq!(lcm_denominators(&vals), BigUint::from(12u32));
    }

    #[test]
    fn lcm_of_empty_set_is_one() {
        assert_eq!(lcm_denominators(&[]), BigUint::one());
    }

    #[test]
    fn lcm_of_derived_denominators() {
        let vals = vec![rat(13, 2), rat(20, 3)];
        assert_eq!(lcm_denominators(&vals), BigUint::from(6u32));
    }

    #[test]
    fn contains_multiple_of_generator() {
        let gens = vec![pair(1, 2, 3, 2)];
        assert!(lattice_contains(&gens, &pair(1, 1, 3, 1)));
    }

    #[test]
    fn contains_generator_plus_integer_vector() {
        let gens = vec![pair(1, 2, 3, 2)];
        assert!(lattice_contains(&gens, &pair(1, 2, 5, 2)));
    }

    #[test]
    fn rejects_pair_with_foreign_denominator() {
        // Frozen from the residue-closure oracle in the integration tests:
        // no integer combination of (1/2, 3/2) and Z×Z has x-denominator 3.
        let gens = vec![pair(1, 2, 3, 2)];
        assert!(!lattice_contains(&gens, &pair(2, 3, 11, 6)));
    }

    #[test]
    fn index_of_integer_lattice_is_one() {
        assert_eq!(lattice_index(&[]), BigUint::one());
    }

    #[test]
    fn index_of_single_half_pair() {
        let gens = vec![pair(1, 2, 3, 2)];
        assert_eq!(lattice_index(&gens), BigUint::from(2u32));
    }

    #[test]
    fn index_of_three_stage_example() {
        let gens = vec![pair(1, 2, 3, 2), pair(1, 2, 7, 4), pair(2, 3, 11, 6)];
        assert_eq!(lattice_index(&gens), BigUint::from(24u32));
    }

    #[test]
    fn swap_is_involutive() {
        let p = pair(1, 2, 3, 2);
        assert_eq!(p.swap().swap(), p);
    }
}
