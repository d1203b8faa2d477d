use num_traits::Zero;

use cgmat::build_matrix;
use cgmat::eval_c;
use cgmat::families::{
    below_diagonal_points, below_diagonal_value, diagonal_zeros, enumerate_type_I,
    enumerate_type_II, solution_to_triple, sum_of_squares_solver, triple_to_solution,
    verify_diagonal_family, DiagonalKind,
};
use cgmat::symmetry::{apply_symmetry, SymmetryElement};

#[test]
fn below_diagonal_values_match_matrices() {
    let mut checked = 0;
    for k in 1..=26 {
        for m in (k + 1..=80 - 2 * k).filter(|m| (m + k) % 2 == 1) {
            let mat = build_matrix(m, 2 * k, k).unwrap();
            for t in 1..=k {
                let (zero, below) = below_diagonal_points(m, k, t).unwrap();
                assert!(mat.value(zero.i, zero.j).is_zero());
                let v = below_diagonal_value(m, k, t).unwrap();
                assert_eq!(mat.value(below.i, below.j), v, "({m}, {k}, {t})");
                assert_eq!(
                    mat.value(below.i, below.j + 1),
                    v,
                    "({m}, {k}, {t}) right neighbour"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn diagonal_families_map_under_c23() {
    for k in 1..=9 {
        for m in (k + 1..=30).filter(|m| (m + k) % 2 == 1) {
            let fam = diagonal_zeros(DiagonalKind::NEqualsTwoK, m, k).unwrap();
            assert!(verify_diagonal_family(&fam).unwrap());
            for p in &fam.zero_positions {
                let q = apply_symmetry(&SymmetryElement::C23, p).unwrap();
                assert!(eval_c(&q).unwrap().is_zero(), "{p} -> {q}");
            }
        }
    }
    for k in (1..=9).step_by(2) {
        for m in k..=30 {
            let fam = diagonal_zeros(DiagonalKind::MEqualsN, m, k).unwrap();
            assert!(verify_diagonal_family(&fam).unwrap());
        }
    }
}

#[test]
fn sum_of_squares_matches_enumeration() {
    for (offset, sols) in [(1, enumerate_type_I(40)), (9, enumerate_type_II(40))] {
        for s in sols.iter().filter(|s| !s.degenerate) {
            let t = solution_to_triple(s);
            assert_eq!(triple_to_solution(offset, t).as_ref(), Some(s));
        }
        let triples = sum_of_squares_solver(offset, 81).unwrap();
        for t in triples {
            if let Some(s) = triple_to_solution(offset, t) {
                assert!(s.validate().is_ok());
            }
        }
    }
}
