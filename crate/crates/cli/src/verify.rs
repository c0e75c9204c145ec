//! Grid verification of the truncation formulas against the bigraph
//! model, plus a single-point mode that prints both sides.

use std::fmt::Write as _;

use monozeta_core::{
    build_horizontal_permutation, build_vertical_permutation, lattice_index, permutation_zeta,
    surface_invariants, ExponentPair, Rational, SurfaceSeries, SurfaceTruncationParams,
};
use num_bigint::BigInt;
use num_integer::Integer;

/// Outcome of a sweep: every parameter point checked, points skipped for
/// coprimality, and any mismatches rendered verbatim.
#[derive(Debug, Default)]
pub struct VerifyOutcome {
    pub checked: usize,
    pub skipped: usize,
    pub mismatches: Vec<String>,
}

fn single_pair_surface(m: u64, n: u64, a: u64, b: u64) -> SurfaceSeries {
    let lambda = Rational::new(BigInt::from(a), BigInt::from(m * b));
    let mu = Rational::new(BigInt::from(n), BigInt::from(m));
    SurfaceSeries::new(vec![ExponentPair::new(lambda, mu)]).expect("valid single-term support")
}

/// Compare the bigraph zetas with the closed forms at one parameter
/// point, and the recursion degree with the lattice index of the
/// single-pair surface. Returns mismatch descriptions (empty = ok).
pub fn check_point(m: u64, n: u64, a: u64, b: u64) -> Vec<String> {
    let params = SurfaceTruncationParams::from_u64(m, n, a, b)
        .expect("caller filters invalid parameters");
    let mut mismatches = Vec::new();

    let horizontal = permutation_zeta(&build_horizontal_permutation(m, n, a, b).unwrap());
    if !horizontal.equivalent(&params.horizontal_zeta()) {
        mismatches.push(format!(
            "horizontal mismatch at (m,n,a,b)=({m},{n},{a},{b}): bigraph {} vs formula {}",
            horizontal.render(),
            params.horizontal_zeta().render()
        ));
    }

    let vertical = permutation_zeta(&build_vertical_permutation(m, n, a, b).unwrap());
    if !vertical.equivalent(&params.vertical_zeta()) {
        mismatches.push(format!(
            "vertical mismatch at (m,n,a,b)=({m},{n},{a},{b}): bigraph {} vs formula {}",
            vertical.render(),
            params.vertical_zeta().render()
        ));
    }

    let series = single_pair_surface(m, n, a, b);
    let chars = series
        .characteristics()
        .expect("a single pair is always quasi-ordinary");
    let recursion_degree = surface_invariants(&chars)
        .expect("single-pair characteristics are reduced")
        .degree;
    let index = lattice_index(series.pairs());
    if recursion_degree != index {
        mismatches.push(format!(
            "degree mismatch at (m,n,a,b)=({m},{n},{a},{b}): recursion {recursion_degree} vs lattice index {index}"
        ));
    }

    mismatches
}

/// Sweep the grid `1 <= m <= m_max`, `1 <= n <= n_max` (coprime),
/// `0 <= a <= a_max`, `1 <= b <= b_max` (coprime).
pub fn verify_grid(m_max: u64, n_max: u64, a_max: u64, b_max: u64) -> VerifyOutcome {
    let mut outcome = VerifyOutcome::default();
    for m in 1..=m_max {
        for n in 1..=n_max {
            for a in 0..=a_max {
                for b in 1..=b_max {
                    if m.gcd(&n) != 1 || a.gcd(&b) != 1 {
                        outcome.skipped += 1;
                        continue;
                    }
                    outcome.mismatches.extend(check_point(m, n, a, b));
                    outcome.checked += 1;
                }
            }
        }
    }
    outcome
}

/// Human-readable comparison of one parameter point.
pub fn describe_point(m: u64, n: u64, a: u64, b: u64) -> (String, bool) {
    let mut out = String::new();
    let _ = writeln!(out, "point (m,n,a,b)=({m},{n},{a},{b})");
    if m.gcd(&n) != 1 || a.gcd(&b) != 1 {
        let _ = writeln!(out, "skipped: parameters must satisfy gcd(m,n)=gcd(a,b)=1");
        return (out, true);
    }
    let params = SurfaceTruncationParams::from_u64(m, n, a, b).unwrap();
    let horizontal = permutation_zeta(&build_horizontal_permutation(m, n, a, b).unwrap());
    let vertical = permutation_zeta(&build_vertical_permutation(m, n, a, b).unwrap());
    let _ = writeln!(out, "horizontal bigraph: {}", horizontal.render());
    let _ = writeln!(out, "horizontal formula: {}", params.horizontal_zeta().render());
    let _ = writeln!(out, "vertical bigraph:   {}", vertical.render());
    let _ = writeln!(out, "vertical formula:   {}", params.vertical_zeta().render());
    let series = single_pair_surface(m, n, a, b);
    let chars = series.characteristics().unwrap();
    let degree = surface_invariants(&chars).unwrap().degree;
    let index = lattice_index(series.pairs());
    let _ = writeln!(out, "degree recursion:   {degree}");
    let _ = writeln!(out, "degree lattice:     {index}");
    let ok = check_point(m, n, a, b).is_empty();
    let _ = writeln!(out, "result: {}", if ok { "match" } else { "MISMATCH" });
    (out, ok)
}
