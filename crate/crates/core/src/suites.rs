//! Exhaustive identity checks over parameter ranges.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use serde::Serialize;

use crate::central::{
    alternating_cube_sum, central_value_even, dixon_sum, four_term_grid_check,
    subcentral_value_eeo, subcentral_value_oee, subcentral_value_oeo,
};
use crate::coeff::{eval_c, sum_alternative, sum_primary};
use crate::matrix::{
    build_matrix, check_censorship, check_pascal, check_reverse, check_weyl,
    check_zero_pair_triangles, factorial_table, polygon_edges, CGMatrix,
};
use crate::point::ParamPoint;

const MAX_REPORTED: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    /// Identities checked (matrix-level checks count one per matrix).
    pub identities: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &str) -> Self {
        SuiteOutcome {
            name: name.to_string(),
            identities: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failure_count == 0
    }

    fn check(&mut self, holds: bool, what: impl FnOnce() -> String) {
        self.identities += 1;
        if !holds {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(msg);
        }
    }
}

/// Even m, n, k <= max: both summation forms at the centre, the middle Dixon
/// sum and the closed multinomial agree; for m = n = 2k the alternating cube
/// sum agrees too.
pub fn dixon_suite(max: i64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("dixon");
    for m in (0..=max).step_by(2) {
        for n in (0..=max).step_by(2) {
            for k in (0..=m.min(n)).step_by(2) {
                let p = ParamPoint::new(m, n, k, m / 2, n / 2);
                let closed = central_value_even(m, n, k).expect("even shape");
                let a = sum_primary(&p);
                let b = sum_alternative(&p);
                let d = dixon_sum(m, n, k).expect("even shape");
                out.check(a == closed && b == closed && d == closed, || {
                    format!("({m}, {n}, {k}): sums {a}, {b}, {d}; closed form {closed}")
                });
                if m == n && m == 2 * k {
                    let cube = alternating_cube_sum(k);
                    out.check(cube == closed, || {
                        format!("k = {k}: cube sum {cube} != {closed}")
                    });
                }
            }
        }
    }
    out
}

/// The three closed forms next to the centre against direct evaluation, for
/// every shape of the right parity with m + n <= max_sum.
pub fn near_central_suite(max_sum: i64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("near-central");
    for m in 0..=max_sum {
        for n in (0..=max_sum - m).step_by(2) {
            for k in 0..=m.min(n) {
                let (form, point): (fn(i64, i64, i64) -> crate::Result<BigInt>, ParamPoint) =
                    match (m % 2, k % 2) {
                        (0, 1) => (
                            subcentral_value_eeo,
                            ParamPoint::new(m, n, k, m / 2 + 1, n / 2 - 1),
                        ),
                        (1, 0) => (
                            subcentral_value_oee,
                            ParamPoint::new(m, n, k, (m + 1) / 2, n / 2),
                        ),
                        (1, 1) => (
                            subcentral_value_oeo,
                            ParamPoint::new(m, n, k, (m + 1) / 2, n / 2),
                        ),
                        _ => continue,
                    };
                let closed = catch_unwind(AssertUnwindSafe(|| form(m, n, k)));
                match closed {
                    Ok(Ok(v)) => {
                        let direct = eval_c(&point).expect("point in cone");
                        out.check(v == direct, || {
                            format!("({m}, {n}, {k}): closed {v}, direct {direct}")
                        });
                    }
                    Ok(Err(e)) => out.fail(format!("({m}, {n}, {k}): {e}")),
                    Err(_) => out.fail(format!("({m}, {n}, {k}): prefactor does not clear")),
                }
            }
        }
    }
    out
}

/// Which matrix-level checks `recurrence_suite` runs.
#[derive(Debug, Clone, Copy)]
pub struct Checks {
    pub pascal: bool,
    pub reverse: bool,
    pub censorship: bool,
    pub weyl: bool,
    pub triangles: bool,
    pub edges: bool,
    pub lemma1: bool,
}

impl Checks {
    pub const ALL: Checks = Checks {
        pascal: true,
        reverse: true,
        censorship: true,
        weyl: true,
        triangles: true,
        edges: true,
        lemma1: true,
    };

    pub const NONE: Checks = Checks {
        pascal: false,
        reverse: false,
        censorship: false,
        weyl: false,
        triangles: false,
        edges: false,
        lemma1: false,
    };
}

fn record_violations(out: &mut SuiteOutcome, mat: &CGMatrix, v: &[crate::Violation]) {
    out.identities += 1;
    for x in v {
        out.fail(format!(
            "M({}, {}, {}) {} at ({}, {}): {}",
            mat.m, mat.n, mat.k, x.rule, x.row, x.col, x.detail
        ));
    }
}

/// Runs the selected checks on every M(m, n, k) with m + n <= max_sum.
///
/// Shapes are walked along chains of fixed (m - k, n - k) with k rising by 2,
/// so the M(m+2, n+2, k+2) partner of the four-term identity is the next
/// matrix in the chain.
pub fn recurrence_suite(max_sum: i64, checks: Checks) -> Vec<SuiteOutcome> {
    let names = [
        "pascal",
        "reverse",
        "censorship",
        "weyl",
        "triangles",
        "edges",
        "lemma1",
    ];
    let mut outs: Vec<SuiteOutcome> = names.iter().map(|n| SuiteOutcome::new(n)).collect();
    let factorials = factorial_table((max_sum + 2) as usize);
    for a in 0..=max_sum {
        for b in 0..=max_sum - a {
            for k0 in 0..2 {
                let mut k = k0;
                if a + b + 2 * k > max_sum {
                    continue;
                }
                let mut base = build_matrix(a + k, b + k, k).expect("valid shape");
                while a + b + 2 * k <= max_sum {
                    let (m, n) = (a + k, b + k);
                    let big = build_matrix(m + 2, n + 2, k + 2).expect("valid shape");
                    if checks.pascal {
                        record_violations(&mut outs[0], &base, &check_pascal(&base));
                    }
                    if checks.reverse {
                        record_violations(&mut outs[1], &base, &check_reverse(&base));
                    }
                    if checks.censorship {
                        record_violations(&mut outs[2], &base, &check_censorship(&base));
                    }
                    if checks.weyl {
                        record_violations(&mut outs[3], &base, &check_weyl(&base, &factorials));
                    }
                    if checks.triangles {
                        let tri = check_zero_pair_triangles(&base);
                        outs[4].identities += 1;
                        for t in tri.iter().filter(|t| !t.holds()) {
                            outs[4].fail(format!(
                                "M({m}, {n}, {k}) triangle {:?} at {:?}",
                                t.pattern, t.apex
                            ));
                        }
                    }
                    if checks.edges {
                        let e = polygon_edges(&base);
                        record_violations(&mut outs[5], &base, &e.violations);
                    }
                    if checks.lemma1 && a >= 2 && b >= 2 {
                        let wide = build_matrix(m, n + 2, k + 2).expect("valid shape");
                        let tall = build_matrix(m + 2, n, k + 2).expect("valid shape");
                        record_violations(
                            &mut outs[6],
                            &base,
                            &four_term_grid_check(&base, &big, &wide, &tall),
                        );
                    }
                    base = big;
                    k += 2;
                }
            }
        }
    }
    let wanted = [
        checks.pascal,
        checks.reverse,
        checks.censorship,
        checks.weyl,
        checks.triangles,
        checks.edges,
        checks.lemma1,
    ];
    outs.into_iter()
        .zip(wanted)
        .filter(|(_, w)| *w)
        .map(|(o, _)| o)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        assert!(dixon_suite(16).ok());
        let near = near_central_suite(20);
        assert!(near.ok(), "{:?}", near.failures);
        for o in recurrence_suite(16, Checks::ALL) {
            assert!(o.ok(), "{}: {:?}", o.name, o.failures);
            assert!(o.identities > 0, "{}", o.name);
        }
    }

    #[test]
    fn selection() {
        let only = recurrence_suite(
            6,
            Checks {
                censorship: true,
                ..Checks::NONE
            },
        );
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].name, "censorship");
    }
}
