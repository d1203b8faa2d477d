use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use cgmat::central::four_term_recurrence_check;
use cgmat::coeff::{sum_alternative, sum_primary};
use cgmat::symmetry::{apply_symmetry, d12_element_transport, full_orbit, SymmetryElement};
use cgmat::{eval_c, from_regge, in_cone, to_regge, ParamPoint};

fn cone_point(max: i64) -> impl Strategy<Value = ParamPoint> {
    (0..=max, 0..=max)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), 0..=m.min(n)))
        .prop_flat_map(|(m, n, k)| (Just(m), Just(n), Just(k), 0..=m, 0..=m + n - 2 * k))
        .prop_filter_map("outside the cone", |(m, n, k, i, x)| {
            let p = ParamPoint::new(m, n, k, i, x + k - i);
            in_cone(&p).then_some(p)
        })
}

proptest! {
    #[test]
    fn regge_round_trip(p in cone_point(30)) {
        let r = to_regge(&p).unwrap();
        prop_assert!(r.is_magic());
        prop_assert_eq!(r.line_sum(), p.m + p.n - p.k);
        prop_assert!(r.min_entry() >= 0);
        prop_assert_eq!(from_regge(&r).unwrap(), p);
    }

    #[test]
    fn summation_forms_agree(p in cone_point(40)) {
        prop_assert_eq!(sum_primary(&p), sum_alternative(&p));
    }

    #[test]
    fn zero_locus_is_invariant(p in cone_point(24)) {
        let zero = eval_c(&p).unwrap().is_zero();
        for g in SymmetryElement::all() {
            let q = apply_symmetry(g, &p).unwrap();
            prop_assert_eq!(eval_c(&q).unwrap().is_zero(), zero, "{} {}", g.name(), q);
        }
    }

    #[test]
    fn d12_transport_holds(p in cone_point(24)) {
        let v = eval_c(&p).unwrap();
        for g in SymmetryElement::d12() {
            let rel = d12_element_transport(&g, &p).unwrap();
            prop_assert!(rel.holds_for(&v, &eval_c(&rel.target).unwrap()), "{}", g.name());
        }
    }

    #[test]
    fn four_term_recurrence(p in cone_point(40)) {
        let r = four_term_recurrence_check(&p);
        prop_assume!(r.is_ok());
        prop_assert!(r.unwrap());
    }

    #[test]
    fn orbits_are_closed(p in cone_point(16)) {
        let orbit = full_orbit(&p).unwrap();
        prop_assert!(72 % orbit.len() == 0);
        for q in &orbit {
            for g in SymmetryElement::all() {
                prop_assert!(orbit.contains(&apply_symmetry(g, q).unwrap()));
            }
        }
    }

    #[test]
    fn weyl_reflection_scales_by_multinomials(p in cone_point(30)) {
        let q = ParamPoint::new(p.m, p.n, p.k, p.m - p.i, p.n - p.j);
        let big_j = p.m + p.n - p.k;
        let multi = |a: i64, b: i64| -> BigInt {
            let f = |x: i64| (1..=x).map(BigInt::from).product::<BigInt>();
            f(big_j) / (f(a) * f(b) * f(big_j - a - b))
        };
        let sign = if p.k % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(
            multi(p.i, p.j) * eval_c(&q).unwrap(),
            multi(p.m - p.i, p.n - p.j) * eval_c(&p).unwrap() * sign
        );
    }
}

#[test]
fn c123_has_order_three() {
    let c = SymmetryElement::C123;
    assert_eq!(c.compose(&c).compose(&c), SymmetryElement::IDENTITY);
    assert_ne!(c.compose(&c), SymmetryElement::IDENTITY);
}
