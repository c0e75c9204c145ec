//! Shared oracles and generators for the integration tests.
//!
//! Everything here is deliberately independent of the implementation
//! paths it checks: lattice membership by residue-set closure instead of
//! column reduction, cyclotomic identities by dense polynomial
//! arithmetic instead of divisor sums, and zeta equality by exact
//! rational evaluation.

#![allow(dead_code)]

use std::collections::BTreeSet;

use monozeta_core::{
    CurveCharacteristics, CurveSeries, ExponentPair, Rational, SurfaceCharacteristics,
    SurfaceSeries, ZetaExpr,
};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn pair(xn: i64, xd: i64, yn: i64, yd: i64) -> ExponentPair {
    ExponentPair::new(rat(xn, xd), rat(yn, yd))
}

// ---------------------------------------------------------------------
// Residue-closure oracle for lattice membership and index.
// ---------------------------------------------------------------------

fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

fn residue(p: &ExponentPair) -> (Rational, Rational) {
    (frac(&p.x), frac(&p.y))
}

/// All residues modulo `Z × Z` of the subgroup generated by `gens`,
/// computed by closure of repeated addition.
pub fn subgroup_residues(gens: &[ExponentPair]) -> BTreeSet<(Rational, Rational)> {
    let zero = (Rational::zero(), Rational::zero());
    let mut set = BTreeSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(current) = frontier.pop() {
        for g in gens {
            let next = (
                frac(&(&current.0 + &g.x)),
                frac(&(&current.1 + &g.y)),
            );
            if set.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    set
}

pub fn oracle_contains(gens: &[ExponentPair], candidate: &ExponentPair) -> bool {
    subgroup_residues(gens).contains(&residue(candidate))
}

pub fn oracle_index(gens: &[ExponentPair]) -> usize {
    subgroup_residues(gens).len()
}

// ---------------------------------------------------------------------
// Dense polynomial arithmetic over Z (little-endian coefficients).
// ---------------------------------------------------------------------

pub type Poly = Vec<BigInt>;

pub fn poly_one() -> Poly {
    vec![BigInt::one()]
}

/// `t^k - 1`.
pub fn t_pow_minus_one(k: usize) -> Poly {
    let mut coeffs = vec![BigInt::zero(); k + 1];
    coeffs[0] = -BigInt::one();
    coeffs[k] = BigInt::one();
    coeffs
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

fn trimmed(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_eq(a: &Poly, b: &Poly) -> bool {
    trimmed(a.clone()) == trimmed(b.clone())
}

/// Exact division by a monic divisor; panics on a nonzero remainder.
pub fn poly_exact_div(numerator: &Poly, divisor: &Poly) -> Poly {
    let divisor = trimmed(divisor.clone());
    assert!(divisor.last().is_some_and(One::is_one), "divisor must be monic");
    let mut rem = trimmed(numerator.clone());
    if rem.len() < divisor.len() {
        assert!(rem.iter().all(Zero::is_zero), "division is not exact");
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - divisor.len() + 1];
    for k in (0..quot.len()).rev() {
        let coeff = rem[k + divisor.len() - 1].clone();
        if coeff.is_zero() {
            continue;
        }
        quot[k] = coeff.clone();
        for (i, d) in divisor.iter().enumerate() {
            rem[k + i] -= &coeff * d;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division is not exact");
    quot
}

/// The `n`-th cyclotomic polynomial, by dividing `t^n - 1` by all
/// `Phi_d` with `d | n`, `d < n`.
pub fn cyclotomic_poly(n: usize) -> Poly {
    assert!(n > 0);
    let mut result = t_pow_minus_one(n);
    for d in 1..n {
        if n.is_multiple_of(d) {
            result = poly_exact_div(&result, &cyclotomic_poly(d));
        }
    }
    result
}

/// Cross-check a factor product against a cyclotomic product by clearing
/// denominators on both sides:
/// `Π (t^k-1)^{e_k} = Π Phi_d^{c_d}` iff
/// `Π_{e_k > 0} (t^k-1)^{e_k} · Π_{c_d < 0} Phi_d^{-c_d}`
/// equals
/// `Π_{e_k < 0} (t^k-1)^{-e_k} · Π_{c_d > 0} Phi_d^{c_d}`.
pub fn zeta_matches_cyclo_product(z: &ZetaExpr, cyclo: &[(usize, i64)]) -> bool {
    let mut lhs = poly_one();
    let mut rhs = poly_one();
    for (k, e) in z.factors() {
        let k = usize::try_from(k).expect("small factor index");
        let e = i64::try_from(e).expect("small exponent");
        let base = t_pow_minus_one(k);
        let (target, count) = if e > 0 { (&mut lhs, e) } else { (&mut rhs, -e) };
        for _ in 0..count {
            *target = poly_mul(target, &base);
        }
    }
    for &(d, c) in cyclo {
        let base = cyclotomic_poly(d);
        let (target, count) = if c > 0 { (&mut rhs, c) } else { (&mut lhs, -c) };
        for _ in 0..count {
            *target = poly_mul(target, &base);
        }
    }
    poly_eq(&lhs, &rhs)
}

// ---------------------------------------------------------------------
// Exact evaluation of factor products as rational functions.
// ---------------------------------------------------------------------

fn rational_pow(base: &Rational, exponent: u64) -> Rational {
    let mut result = Rational::one();
    let mut power = base.clone();
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result *= &power;
        }
        e >>= 1;
        if e > 0 {
            power = &power * &power;
        }
    }
    result
}

/// Evaluate `Π (t^k - 1)^{e_k}` at a rational `t`; `None` at a pole.
pub fn eval_zeta(z: &ZetaExpr, t: &Rational) -> Option<Rational> {
    let mut value = Rational::one();
    for (k, e) in z.factors() {
        let k = u64::try_from(k).expect("small factor index");
        let e = i64::try_from(e).expect("small exponent");
        let factor = rational_pow(t, k) - Rational::one();
        if factor.is_zero() {
            if e < 0 {
                return None;
            }
            return Some(Rational::zero());
        }
        let powed = rational_pow(&factor, e.unsigned_abs());
        if e > 0 {
            value *= powed;
        } else {
            value /= powed;
        }
    }
    Some(value)
}

// ---------------------------------------------------------------------
// Random valid characteristic data.
// ---------------------------------------------------------------------

/// Random essential exponents: at each step a denominator not dividing
/// the running lcm, and a numerator coprime to it placing the exponent
/// strictly above its predecessor.
pub fn random_curve_characteristics(
    rng: &mut impl Rng,
    max_e: usize,
    max_den: u64,
) -> CurveCharacteristics {
    let e = rng.gen_range(0..=max_e);
    let mut running = BigUint::one();
    let mut prev = Rational::zero();
    let mut mus = Vec::new();
    for _ in 0..e {
        let choices: Vec<u64> = (2..=max_den)
            .filter(|&q| !(&running % BigUint::from(q)).is_zero())
            .collect();
        if choices.is_empty() {
            break;
        }
        let q = choices[rng.gen_range(0..choices.len())];
        let q_int = BigInt::from(q);
        let mut numerator = (&prev * &q_int).floor().to_integer()
            + BigInt::from(1 + rng.gen_range(0..=2 * q));
        while !numerator.gcd(&q_int).is_one() {
            numerator += 1;
        }
        let mu = Rational::new(numerator, q_int);
        running = num_integer::Integer::lcm(&running, &BigUint::from(q));
        prev = mu.clone();
        mus.push(mu);
    }
    CurveCharacteristics::new(mus).expect("generator produces valid characteristics")
}

/// Random reduced characteristic pairs: a componentwise increasing chain
/// with denominators bounded by `max_den`, each pair rejected and
/// retried until it escapes the lattice spanned by its predecessors.
pub fn random_surface_characteristics(
    rng: &mut impl Rng,
    max_e: usize,
    max_den: u64,
) -> SurfaceCharacteristics {
    let e = rng.gen_range(0..=max_e);
    let mut pairs: Vec<ExponentPair> = Vec::new();
    let mut prev = pair(0, 1, 0, 1);
    'levels: for level in 0..e {
        for _attempt in 0..40 {
            let qx = rng.gen_range(1..=max_den);
            let qy = rng.gen_range(1..=max_den);
            let x = component_above(rng, &prev.x, qx, true);
            let min_y_strict = level == 0; // reduced: μ_1 > 0
            let y = component_above(rng, &prev.y, qy, min_y_strict);
            let candidate = ExponentPair::new(x, y);
            if candidate == prev && level > 0 {
                continue;
            }
            if monozeta_core::lattice_contains(&pairs, &candidate) {
                continue;
            }
            prev = candidate.clone();
            pairs.push(candidate);
            continue 'levels;
        }
        break;
    }
    SurfaceCharacteristics::new(pairs).expect("generator produces valid characteristics")
}

/// A random rational `k/q >= bound` (strictly greater when `strict`),
/// with denominator dividing `q`.
fn component_above(rng: &mut impl Rng, bound: &Rational, q: u64, strict: bool) -> Rational {
    let q_int = BigInt::from(q);
    let scaled = bound * &q_int;
    let mut k = scaled.ceil().to_integer();
    if strict && Rational::new(k.clone(), q_int.clone()) <= *bound {
        k += 1;
    }
    k += BigInt::from(rng.gen_range(0..=2 * q));
    Rational::new(k, q_int)
}

/// Insert random inessential exponents into a characteristic support:
/// at each insertion point the denominator divides the running lcm, so
/// the essential exponents are unchanged.
pub fn pad_curve_series(rng: &mut impl Rng, chars: &CurveCharacteristics) -> CurveSeries {
    let mut support: Vec<Rational> = chars.exponents().to_vec();
    let mut lcms = vec![BigUint::one()];
    let mut running = BigUint::one();
    for mu in chars.exponents() {
        running = num_integer::Integer::lcm(&running, mu.denom().magnitude());
        lcms.push(running.clone());
    }
    let e = chars.len();
    for _ in 0..rng.gen_range(1..=3) {
        let slot = rng.gen_range(0..=e);
        let divs: Vec<BigUint> = divisors_of(&lcms[slot]);
        let q = divs[rng.gen_range(0..divs.len())].clone();
        let q_int = BigInt::from(q);
        let lower = if slot == 0 {
            Rational::zero()
        } else {
            chars.exponents()[slot - 1].clone()
        };
        let upper = chars.exponents().get(slot).cloned();
        let k_low = (&lower * &q_int).floor().to_integer() + 1;
        let k_high = match &upper {
            Some(u) => (u * &q_int).ceil().to_integer() - 1,
            None => &k_low + BigInt::from(3),
        };
        if k_high < k_low {
            continue;
        }
        let span = u64::try_from(&k_high - &k_low).unwrap();
        let k = k_low + BigInt::from(rng.gen_range(0..=span));
        let value = Rational::new(k, q_int);
        if !support.contains(&value) {
            support.push(value);
        }
    }
    CurveSeries::new(support).expect("padded support stays valid")
}

/// Insert random noncharacteristic pairs: nonnegative integer
/// combinations of characteristic pairs plus an integral shift, which
/// stay inside the subgroup generated by the pairs below them.
pub fn pad_surface_series(rng: &mut impl Rng, chars: &SurfaceCharacteristics) -> SurfaceSeries {
    let mut support: Vec<ExponentPair> = chars.pairs().to_vec();
    for _ in 0..rng.gen_range(1..=3) {
        let mut x = Rational::from(BigInt::from(rng.gen_range(0..=2)));
        let mut y = Rational::from(BigInt::from(rng.gen_range(0..=2)));
        for c in chars.pairs() {
            let k = BigInt::from(rng.gen_range(0..=2));
            x += &c.x * &k;
            y += &c.y * &k;
        }
        let candidate = ExponentPair::new(x, y);
        if !support.contains(&candidate) {
            support.push(candidate);
        }
    }
    SurfaceSeries::new(support).expect("padded support stays valid")
}

fn divisors_of(n: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut d = BigUint::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1u32;
    }
    out.sort();
    out.dedup();
    out
}
