//! Bigraph permutation model versus the closed-form truncation zetas.

mod common;

use monozeta_core::{
    build_horizontal_permutation, build_vertical_permutation, permutation_zeta,
    SurfaceTruncationParams,
};
use num_bigint::BigInt;
use num_integer::Integer;

fn parameter_grid(m_max: u64, n_max: u64, a_max: u64, b_max: u64) -> Vec<(u64, u64, u64, u64)> {
    let mut grid = Vec::new();
    for m in 1..=m_max {
        for n in 1..=n_max {
            if m.gcd(&n) != 1 {
                continue;
            }
            for a in 0..=a_max {
                for b in 1..=b_max {
                    if a.gcd(&b) != 1 {
                        continue;
                    }
                    grid.push((m, n, a, b));
                }
            }
        }
    }
    grid
}

#[test]
fn permutation_zetas_match_closed_forms_up_to_eight() {
    let mut checked = 0usize;
    for (m, n, a, b) in parameter_grid(8, 8, 8, 4) {
        let params = SurfaceTruncationParams::from_u64(m, n, a, b).unwrap();
        let horizontal = permutation_zeta(&build_horizontal_permutation(m, n, a, b).unwrap());
        assert!(
            horizontal.equivalent(&params.horizontal_zeta()),
            "horizontal mismatch at ({m},{n},{a},{b}): {horizontal} vs {}",
            params.horizontal_zeta()
        );
        let vertical = permutation_zeta(&build_vertical_permutation(m, n, a, b).unwrap());
        assert!(
            vertical.equivalent(&params.vertical_zeta()),
            "vertical mismatch at ({m},{n},{a},{b}): {vertical} vs {}",
            params.vertical_zeta()
        );
        checked += 1;
    }
    assert!(checked > 500);
}

#[test]
fn permutation_zeta_degree_is_the_graph_euler_characteristic() {
    for (m, n, a, b) in parameter_grid(6, 6, 5, 3) {
        let params = SurfaceTruncationParams::from_u64(m, n, a, b).unwrap();
        let vertices = BigInt::from(n * b + m * b);
        let edges = BigInt::from(n * b * m * b);
        let expected = &vertices - &edges;
        assert_eq!(params.euler(), expected);
        let h = permutation_zeta(&build_horizontal_permutation(m, n, a, b).unwrap());
        assert_eq!(h.degree(), expected);
        let v = permutation_zeta(&build_vertical_permutation(m, n, a, b).unwrap());
        assert_eq!(v.degree(), expected);
    }
}

#[test]
fn horizontal_and_vertical_permutations_commute_on_the_grid() {
    for (m, n, a, b) in parameter_grid(5, 5, 4, 3) {
        let h = build_horizontal_permutation(m, n, a, b).unwrap();
        let v = build_vertical_permutation(m, n, a, b).unwrap();
        assert_eq!(h.compose(&v), v.compose(&h), "at ({m},{n},{a},{b})");
    }
}
