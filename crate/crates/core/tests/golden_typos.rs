use num_bigint::BigInt;

use cgmat::build_matrix;
use cgmat::matrix::check_pascal;

/// Two printed cells disagree with the computed matrices; the printed values
/// break Pascal's recurrence while the computed ones satisfy it.
#[test]
fn printed_cells_break_pascal() {
    for ((m, n, k), (r, c), printed) in [((4, 2, 1), (4, 4), 4), ((6, 4, 3), (6, 3), 4)] {
        let mut mat = build_matrix(m, n, k).unwrap();
        assert_eq!(*mat.get(r, c), BigInt::from(-printed));
        assert!(check_pascal(&mat).is_empty());
        mat.set(r, c, BigInt::from(printed));
        assert!(!check_pascal(&mat).is_empty(), "M({m}, {n}, {k})");
    }
}
