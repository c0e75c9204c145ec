//! Combinatorial oracle for the truncation formulas.
//!
//! The transverse Milnor fiber of a truncated germ `z^{mb} = x^a y^{nb}`
//! retracts onto the complete bipartite graph on `nb + mb` vertices, and
//! both monodromies act on it by explicit permutations of vertices and
//! edges. The alternating product of characteristic polynomials over the
//! cells equals the one over homology, so the zeta function of such an
//! action is read off from the cycle structure alone. This gives an
//! independent check of the closed-form truncation invariants.

use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::zeta::ZetaExpr;

/// Parameter rejections for the bigraph builders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BigraphError {
    /// `m`, `n`, `b` must be positive.
    ZeroParameter,
    /// `gcd(m, n) = 1` and `gcd(a, b) = 1` are required
    /// (the latter forces `b = 1` when `a = 0`).
    NotCoprime,
}

impl fmt::Display for BigraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigraphError::ZeroParameter => write!(f, "m, n, b must be positive"),
            BigraphError::NotCoprime => write!(f, "parameters must be coprime pairs"),
        }
    }
}

impl core::error::Error for BigraphError {}

/// A permutation of the cells of the complete bipartite graph on
/// `first_class + second_class` labeled vertices and
/// `first_class · second_class` labeled edges, with the edge action
/// compatible with the vertex action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPermutation {
    first_class: usize,
    second_class: usize,
    vertex_perm: Vec<usize>,
    edge_perm: Vec<usize>,
}

impl CellPermutation {
    /// Vertices of the first class are `0..first_class`, of the second
    /// `first_class..first_class + second_class`; edge `(i, j)` has index
    /// `i · second_class + j`.
    fn from_actions(
        first_class: usize,
        second_class: usize,
        first_map: impl Fn(usize) -> usize,
        second_map: impl Fn(usize) -> usize,
    ) -> Self {
        let vertex_perm: Vec<usize> = (0..first_class)
            .map(&first_map)
            .chain((0..second_class).map(|j| first_class + second_map(j)))
            .collect();
        let edge_perm: Vec<usize> = (0..first_class)
            .flat_map(|i| (0..second_class).map(move |j| (i, j)))
            .map(|(i, j)| first_map(i) * second_class + second_map(j))
            .collect();
        let perm = Self {
            first_class,
            second_class,
            vertex_perm,
            edge_perm,
        };
        debug_assert!(perm.is_compatible());
        perm
    }

    /// Every edge image must join the images of its endpoints.
    fn is_compatible(&self) -> bool {
        for i in 0..self.first_class {
            for j in 0..self.second_class {
                let edge = self.edge_perm[i * self.second_class + j];
                let (ei, ej) = (edge / self.second_class, edge % self.second_class);
                if ei != self.vertex_perm[i]
                    || self.first_class + ej != self.vertex_perm[self.first_class + j]
                {
                    return false;
                }
            }
        }
        is_permutation(&self.vertex_perm) && is_permutation(&self.edge_perm)
    }

    /// Apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            (self.first_class, self.second_class),
            (other.first_class, other.second_class),
            "permutations act on different graphs"
        );
        Self {
            first_class: self.first_class,
            second_class: self.second_class,
            vertex_perm: other.vertex_perm.iter().map(|&v| self.vertex_perm[v]).collect(),
            edge_perm: other.edge_perm.iter().map(|&e| self.edge_perm[e]).collect(),
        }
    }

    /// Cycle lengths of the vertex action, ascending.
    pub fn vertex_cycle_lengths(&self) -> Vec<usize> {
        cycle_lengths(&self.vertex_perm)
    }

    /// Cycle lengths of the edge action, ascending.
    pub fn edge_cycle_lengths(&self) -> Vec<usize> {
        cycle_lengths(&self.edge_perm)
    }
}

fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    for &v in map {
        if v >= map.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

fn cycle_lengths(perm: &[usize]) -> Vec<usize> {
    let mut visited = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0usize;
        let mut at = start;
        while !visited[at] {
            visited[at] = true;
            at = perm[at];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

fn validate(m: u64, n: u64, a: u64, b: u64) -> Result<(usize, usize), BigraphError> {
    if m == 0 || n == 0 || b == 0 {
        return Err(BigraphError::ZeroParameter);
    }
    if m.gcd(&n) != 1 || a.gcd(&b) != 1 {
        return Err(BigraphError::NotCoprime);
    }
    let first = usize::try_from(n * b).expect("graph class size fits in usize");
    let second = usize::try_from(m * b).expect("graph class size fits in usize");
    Ok((first, second))
}

/// The monodromy of the truncation's Milnor fibration on the bigraph: as
/// the fiber value loops once, both vertex classes are rotated one step
/// and edge `(i, j)` moves to `(i + 1, j + 1)`.
pub fn build_horizontal_permutation(
    m: u64,
    n: u64,
    a: u64,
    b: u64,
) -> Result<CellPermutation, BigraphError> {
    let (first, second) = validate(m, n, a, b)?;
    Ok(CellPermutation::from_actions(
        first,
        second,
        move |i| (i + 1) % first,
        move |j| (j + 1) % second,
    ))
}

/// The monodromy obtained by looping the transverse-slice parameter: the
/// second vertex class is fixed while the first is shifted by `-a`
/// (the roots of `-ε/x^a` rotate as `x` loops positively); edge `(i, j)`
/// moves to `(i - a, j)`. The sign of the shift does not affect cycle
/// structure and is fixed for determinism.
pub fn build_vertical_permutation(
    m: u64,
    n: u64,
    a: u64,
    b: u64,
) -> Result<CellPermutation, BigraphError> {
    let (first, second) = validate(m, n, a, b)?;
    let shift = usize::try_from(a % (n * b)).expect("shift fits in usize");
    Ok(CellPermutation::from_actions(
        first,
        second,
        move |i| (i + first - shift) % first,
        move |j| j,
    ))
}

/// Zeta function of a cellular automorphism: product of `(t^len - 1)`
/// over vertex cycles divided by the product over edge cycles.
pub fn permutation_zeta(p: &CellPermutation) -> ZetaExpr {
    let mut out = ZetaExpr::one();
    for len in p.vertex_cycle_lengths() {
        out = out.mul(&ZetaExpr::factor(BigUint::from(len), BigInt::one()));
    }
    for len in p.edge_cycle_lengths() {
        out = out.div(&ZetaExpr::factor(BigUint::from(len), BigInt::one()));
    }
    out
}
