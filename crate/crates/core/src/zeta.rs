//! Formal products `Π (t^k - 1)^{e_k}` with integer exponents.
//!
//! Monodromy zeta functions are stored as sparse factor maps and never
//! expanded into coefficient polynomials; even the small worked examples
//! reach degrees in the hundreds. Negative exponents are first class
//! (they are reciprocal characteristic polynomials of the action on
//! first homology). [`CycloForm`] re-expresses a product in terms of
//! cyclotomic polynomials `Φ_d` via `(t^k - 1) = Π_{d|k} Φ_d`, which is
//! the canonical form used for semantic equality: distinct factor maps
//! can denote the same rational function.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Div, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// A formal product `Π (t^k - 1)^{e_k}`: a finite map from `k >= 1` to a
/// nonzero integer exponent. The empty map is the constant `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaExpr {
    factors: BTreeMap<BigUint, BigInt>,
}

impl ZetaExpr {
    /// The constant `1` (empty product).
    pub fn one() -> Self {
        Self::default()
    }

    /// The single factor `(t^k - 1)^exponent`.
    ///
    /// Panics if `k` is zero.
    pub fn factor(k: BigUint, exponent: BigInt) -> Self {
        assert!(!k.is_zero(), "factor index k must be positive");
        let mut factors = BTreeMap::new();
        if !exponent.is_zero() {
            factors.insert(k, exponent);
        }
        Self { factors }
    }

    /// Build from `(k, e)` pairs; entries with equal `k` accumulate.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let mut out = Self::one();
        for (k, e) in pairs {
            out.insert(BigUint::from(k), BigInt::from(e));
        }
        out
    }

    fn insert(&mut self, k: BigUint, e: BigInt) {
        if e.is_zero() {
            return;
        }
        assert!(!k.is_zero(), "factor index k must be positive");
        match self.factors.entry(k) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(e);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += e;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Iterate over `(k, e_k)` in ascending `k`.
    pub fn factors(&self) -> impl Iterator<Item = (&BigUint, &BigInt)> {
        self.factors.iter()
    }

    /// Exponent-wise sum of factor maps.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, e) in &other.factors {
            out.insert(k.clone(), e.clone());
        }
        out
    }

    /// Formal quotient: exponent-wise difference.
    pub fn div(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, e) in &other.factors {
            out.insert(k.clone(), -e.clone());
        }
        out
    }

    /// Raise to an integer power (negative powers are formal reciprocals).
    pub fn pow(&self, exponent: &BigInt) -> Self {
        if exponent.is_zero() {
            return Self::one();
        }
        let factors = self
            .factors
            .iter()
            .map(|(k, e)| (k.clone(), e * exponent))
            .collect();
        Self { factors }
    }

    /// Substitute `t -> t^j`: every factor `(t^k - 1)^e` becomes
    /// `(t^{jk} - 1)^e`.
    ///
    /// Panics if `j` is zero.
    pub fn subst(&self, j: &BigUint) -> Self {
        assert!(!j.is_zero(), "substitution exponent must be positive");
        let factors = self
            .factors
            .iter()
            .map(|(k, e)| (k * j, e.clone()))
            .collect();
        Self { factors }
    }

    /// `Σ k·e_k`, the degree as a rational function. For a monodromy zeta
    /// function this is the Euler characteristic of the fiber.
    pub fn degree(&self) -> BigInt {
        let mut sum = BigInt::zero();
        for (k, e) in &self.factors {
            sum += BigInt::from(k.clone()) * e;
        }
        sum
    }

    /// Expand every `(t^k - 1)` into cyclotomic polynomials.
    pub fn to_cyclotomic(&self) -> CycloForm {
        let mut cyclo = CycloForm::default();
        for (k, e) in &self.factors {
            for d in divisors(k) {
                cyclo.insert(d, e.clone());
            }
        }
        cyclo
    }

    /// Semantic equality as rational functions, decided on cyclotomic
    /// normal forms. Equal factor maps short-circuit.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.factors == other.factors || self.to_cyclotomic() == other.to_cyclotomic()
    }

    /// Canonical ASCII form, e.g. `(t^2-1)(t^3-1)/(t^6-1)`: numerator
    /// factors ascending in `k`, then the denominator ascending, with an
    /// `^e` suffix when `|e| > 1`. The constant renders as `1`.
    pub fn render(&self) -> String {
        let mut numerator = String::new();
        let mut denominator = String::new();
        let mut denominator_parts = 0usize;
        for (k, e) in &self.factors {
            let target = if e.is_positive() {
                &mut numerator
            } else {
                denominator_parts += 1;
                &mut denominator
            };
            render_factor(target, k, &e.abs());
        }
        let mut out = String::new();
        if numerator.is_empty() {
            out.push('1');
        } else {
            out.push_str(&numerator);
        }
        if !denominator.is_empty() {
            out.push('/');
            if denominator_parts > 1 {
                out.push('(');
                out.push_str(&denominator);
                out.push(')');
            } else {
                out.push_str(&denominator);
            }
        }
        out
    }
}

fn render_factor(out: &mut String, k: &BigUint, abs_exponent: &BigInt) {
    use core::fmt::Write;
    if k.is_one() {
        let _ = write!(out, "(t-1)");
    } else {
        let _ = write!(out, "(t^{k}-1)");
    }
    if !abs_exponent.is_one() {
        let _ = write!(out, "^{abs_exponent}");
    }
}

impl fmt::Display for ZetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Mul for &ZetaExpr {
    type Output = ZetaExpr;
    fn mul(self, rhs: &ZetaExpr) -> ZetaExpr {
        ZetaExpr::mul(self, rhs)
    }
}

impl Div for &ZetaExpr {
    type Output = ZetaExpr;
    fn div(self, rhs: &ZetaExpr) -> ZetaExpr {
        ZetaExpr::div(self, rhs)
    }
}

/// A product of cyclotomic polynomials `Π Φ_d^{c_d}`: the canonical form
/// of a [`ZetaExpr`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloForm {
    cyclo: BTreeMap<BigUint, BigInt>,
}

impl CycloForm {
    fn insert(&mut self, d: BigUint, e: BigInt) {
        if e.is_zero() {
            return;
        }
        match self.cyclo.entry(d) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(e);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += e;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.cyclo.is_empty()
    }

    /// Iterate over `(d, c_d)` in ascending `d`.
    pub fn factors(&self) -> impl Iterator<Item = (&BigUint, &BigInt)> {
        self.cyclo.iter()
    }

    /// Re-collect into `(t^k - 1)` factors by Möbius inversion of
    /// `(t^k - 1) = Π_{d|k} Φ_d`.
    pub fn to_zeta(&self) -> ZetaExpr {
        let mut out = ZetaExpr::one();
        for (d, c) in &self.cyclo {
            for delta in divisors(d) {
                let ratio = d / &delta;
                match moebius(&ratio) {
                    0 => {}
                    1 => out.insert(delta, c.clone()),
                    _ => out.insert(delta, -c.clone()),
                }
            }
        }
        out
    }

    /// Canonical ASCII form, e.g. `Phi_1/Phi_6`, in the same layout as
    /// [`ZetaExpr::render`].
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.cyclo.is_empty() {
            return String::from("1");
        }
        let mut numerator = String::new();
        let mut denominator = String::new();
        let mut denominator_parts = 0usize;
        for (d, e) in &self.cyclo {
            let target = if e.is_positive() {
                &mut numerator
            } else {
                denominator_parts += 1;
                &mut denominator
            };
            let _ = write!(target, "Phi_{d}");
            let abs = e.abs();
            if !abs.is_one() {
                let _ = write!(target, "^{abs}");
            }
        }
        let mut out = String::new();
        if numerator.is_empty() {
            out.push('1');
        } else {
            out.push_str(&numerator);
        }
        if !denominator.is_empty() {
            out.push('/');
            if denominator_parts > 1 {
                out.push('(');
                out.push_str(&denominator);
                out.push(')');
            } else {
                out.push_str(&denominator);
            }
        }
        out
    }
}

impl fmt::Display for CycloForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Prime factorization by trial division.
fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        let mut count = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            count += 1;
        }
        if count > 0 {
            out.push((p.clone(), count));
        }
        p += 1u32;
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut divs = alloc::vec![BigUint::one()];
    for (p, count) in factorize(n) {
        let mut extended = Vec::with_capacity(divs.len() * (count as usize + 1));
        for d in &divs {
            let mut power = BigUint::one();
            for _ in 0..=count {
                extended.push(d * &power);
                power *= &p;
            }
        }
        divs = extended;
    }
    divs.sort();
    divs
}

/// Möbius function: `0` unless squarefree, else `(-1)^{#primes}`.
fn moebius(n: &BigUint) -> i8 {
    let mut sign = 1i8;
    for (_, count) in factorize(n) {
        if count > 1 {
            return 0;
        }
        sign = -sign;
    }
    sign
}
