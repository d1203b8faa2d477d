//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cgmat::central::{classify_parity, Case};
use cgmat::families::{self, FamilySolution, FamilyType, Table2Row};
use cgmat::lattice::{self, denominator_closed_form, max_radius};
use cgmat::matrix::proper_zeros;
use cgmat::scan::check_conjectures;
use cgmat::suites::{self, Checks};
use cgmat::symmetry::full_orbit;
use cgmat::{build_matrix, eval_c, ParamPoint};

/// Printed matrices, rows top to bottom, "." for a blank cell.
const GOLDEN: &[((i64, i64, i64), &[&str])] = &[
    ((3, 4, 2), &["3 3 3 .", "-6 -3 0 3", "6 0 -3 -3", ". 6 6 3"]),
    (
        (3, 3, 1),
        &["3 3 3 . .", "-3 0 3 6 .", ". -3 -3 0 6", ". . -3 -6 -6"],
    ),
    (
        (4, 3, 2),
        &["6 6 . .", "-6 0 6 .", "3 -3 -3 3", ". 3 0 -3", ". . 3 3"],
    ),
    ((2, 2, 0), &["1 1 1 0 0", "0 1 2 3 0", "0 0 1 3 6"]),
    ((2, 4, 2), &["1 1 1", "-3 -2 -1", "6 3 1"]),
    ((2, 2, 2), &["1", "-1", "1"]),
    // The last cell is printed as 4; see `golden_typos`.
    (
        (4, 2, 1),
        &[
            "4 4 0 0 0",
            "-2 2 6 0 0",
            "0 -2 0 6 0",
            "0 0 -2 -2 4",
            "0 0 0 -2 -4",
        ],
    ),
    (
        (4, 6, 3),
        &[
            "4 4 4 4 .",
            "-12 -8 -4 0 4",
            "20 8 0 -4 -4",
            "-20 0 8 8 4",
            ". -20 -20 -12 -4",
        ],
    ),
    (
        (5, 4, 2),
        &[
            "10 10 10 . . .",
            "-12 -2 8 18 . .",
            "6 -6 -8 0 18 .",
            ". 6 0 -8 -8 10",
            ". . 6 6 -2 -10",
            ". . . 6 12 10",
        ],
    ),
    // Row 7, column 4 is printed as 4; see `golden_typos`.
    (
        (6, 4, 3),
        &[
            "20 20 . . .",
            "-20 0 20 . .",
            "12 -8 -8 12 .",
            "-4 8 0 -8 4",
            ". -4 4 4 -4",
            ". . -4 0 4",
            ". . . -4 -4",
        ],
    ),
    (
        (4, 4, 1),
        &[
            "4 4 4 4 . . .",
            "-4 0 4 8 12 . .",
            ". -4 -4 0 8 20 .",
            ". . -4 -8 -8 0 20",
            ". . . -4 -12 -20 -20",
        ],
    ),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn golden() -> Outcome {
    let mut bad = Vec::new();
    for ((m, n, k), rows) in GOLDEN {
        let mat = build_matrix(*m, *n, *k).unwrap();
        let mut ok = mat.rows() == rows.len();
        for (r, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split_whitespace().collect();
            ok &= cells.len() == mat.cols();
            for (c, cell) in cells.iter().enumerate() {
                if r >= mat.rows() || c >= mat.cols() {
                    continue;
                }
                ok &= match *cell {
                    "." => !mat.in_polygon(r, c),
                    v => *mat.get(r, c) == v.parse::<BigInt>().unwrap(),
                };
            }
        }
        if !ok {
            bad.push(format!("M({m}, {n}, {k})"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} matrices, mismatched: {:?}", GOLDEN.len(), bad),
    )
}

fn suite_line(outs: &[suites::SuiteOutcome]) -> Outcome {
    let identities: u64 = outs.iter().map(|o| o.identities).sum();
    let failures: Vec<String> = outs
        .iter()
        .flat_map(|o| o.failures.iter().take(3).cloned())
        .collect();
    let pass = outs.iter().all(|o| o.ok());
    let names: Vec<String> = outs
        .iter()
        .map(|o| format!("{} {}", o.name, o.identities))
        .collect();
    outcome(
        pass,
        format!(
            "{identities} identities ({}); failures {failures:?}",
            names.join(", ")
        ),
    )
}

fn middle_out() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut per_case = [0usize; 4];
    let mut cells = 0usize;
    let mut bad = Vec::new();
    let cases = [Case::EEE, Case::EEO, Case::OEE, Case::OEO];
    let mut sampled = 0;
    while sampled < 520 {
        let case = cases[sampled % 4];
        let m = match case {
            Case::EEE | Case::EEO => 2 * rng.gen_range(1..=100),
            _ => 2 * rng.gen_range(1..=99) + 1,
        };
        let n = 2 * rng.gen_range(1..=100);
        let k = rng.gen_range(0..=m.min(n));
        let want_odd_k = matches!(case, Case::EEO | Case::OEO);
        if (k % 2 == 1) != want_odd_k || classify_parity(m, n, k).unwrap().canonical != (m, n, k) {
            continue;
        }
        per_case[sampled % 4] += 1;
        sampled += 1;
        let radius = 3.min(max_radius(case, m));
        let lat = lattice::lattice(m, n, k, radius).unwrap();
        let mat = build_matrix(m, n, k).unwrap();
        let miss = lat.mismatches(&mat);
        cells += lat.cells.len();
        if !miss.is_empty() {
            bad.push(format!("({m}, {n}, {k}) cell {}", miss[0].name));
        }
        for s in 1..=radius {
            if lat.denominators[s] != denominator_closed_form(case, m, n, k, s) {
                bad.push(format!("({m}, {n}, {k}) denominator d_{s}"));
            }
        }
    }
    let pass = bad.is_empty() && per_case.iter().all(|c| *c >= 100);
    outcome(
        pass,
        format!(
            "{sampled} shapes ({per_case:?} per case), {cells} cells; failures {:?}",
            &bad[..bad.len().min(5)]
        ),
    )
}

fn lambda(s: i64) -> i64 {
    s * (s + 2)
}

/// Shapes with the family's parity and λ identity whose lattice cell vanishes,
/// found by scanning (m, n, k) directly.
fn brute_force_family(family: FamilyType, max_n_param: i64) -> BTreeSet<(i64, i64, i64)> {
    let (offset, k_odd, m_shift) = match family {
        FamilyType::I => (0, false, 0),
        FamilyType::II => (8, true, 2),
    };
    let mut found = BTreeSet::new();
    for big_n in 1..=max_n_param {
        let m = 2 * big_n + m_shift;
        let n_max = 2 * (big_n + 1) * (big_n + 3) + 4;
        for n in (2..=n_max).step_by(2) {
            for k in 1..=m.min(n) {
                if (k % 2 == 1) != k_odd || lambda(m + n - 2 * k) + offset != lambda(m) + lambda(n)
                {
                    continue;
                }
                let s = if family == FamilyType::I { 1 } else { 2 };
                let p = ParamPoint::new(m, n, k, m / 2 + s, n / 2 - s);
                let interior = p.i < m && p.j > 0;
                if interior && eval_c(&p).map(|v| v == BigInt::from(0)).unwrap_or(false) {
                    found.insert((m, n, k));
                }
            }
        }
    }
    found
}

fn families_check() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for family in [FamilyType::I, FamilyType::II] {
        let sols: Vec<FamilySolution> = match family {
            FamilyType::I => families::enumerate_type_I(60),
            FamilyType::II => families::enumerate_type_II(60),
        };
        let sound = sols.iter().all(|s| s.validate().is_ok());
        let enumerated: BTreeSet<_> = sols
            .iter()
            .filter(|s| !s.degenerate)
            .map(|s| (s.m, s.n, s.k))
            .collect();
        let brute = brute_force_family(family, 60);
        let complete = enumerated == brute;
        pass &= sound && complete;
        notes.push(format!(
            "type {family}: {} solutions ({} degenerate), brute force {}, sound {sound}, complete {complete}",
            sols.len(),
            sols.len() - enumerated.len(),
            brute.len()
        ));
    }
    let first_i = families::enumerate_type_I(60)
        .into_iter()
        .min_by_key(|s| (s.m + s.n, s.N));
    let minimal = first_i.map(|s| (s.m, s.n, s.k)) == Some((6, 10, 2));
    let quoted = families::enumerate_type_II(60)
        .iter()
        .any(|s| (s.m, s.n, s.k) == (8, 16, 3));
    let mut row1 = 0;
    for s in 1..=12 {
        for t in 1..=12 {
            if let Ok(sol) = families::table2_member(Table2Row::PDividesN { s, t }) {
                pass &= sol.validate().is_ok();
                row1 += 1;
            }
        }
    }
    pass &= minimal && quoted && row1 > 0;
    notes.push(format!(
        "minimal (6,10,2) {minimal}, (8,16,3) {quoted}, table row 1 members {row1}"
    ));
    outcome(pass, notes.join("; "))
}

fn on_star(k: i64, i: i64, j: i64) -> bool {
    i == j || j == 3 * k - 2 * i || i == 3 * k - 2 * j
}

fn star_check() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for k in [3, 5, 7] {
        let mat = build_matrix(2 * k, 2 * k, k).unwrap();
        let zeros: Vec<ParamPoint> = proper_zeros(&mat)
            .iter()
            .map(|z| z.point)
            .filter(|p| on_star(k, p.i, p.j) && !(p.i == k && p.j == k))
            .collect();
        let mut sizes = BTreeSet::new();
        for p in &zeros {
            let orbit = full_orbit(p).unwrap();
            sizes.insert(orbit.len());
            pass &=
                orbit.len() == 36 && orbit.iter().all(|q| eval_c(q).unwrap() == BigInt::from(0));
        }
        pass &= !zeros.is_empty();
        notes.push(format!(
            "k={k}: {} diagonal zeros, orbit sizes {sizes:?}",
            zeros.len()
        ));
    }
    // Zero pixels of the k = 5 zeromap inside the polygon are exactly the star.
    let k = 5;
    let pgm = build_matrix(2 * k, 2 * k, k).unwrap().zeromap_pgm();
    let mat = build_matrix(2 * k, 2 * k, k).unwrap();
    let mut star_ok = true;
    for (r, line) in pgm.lines().skip(3).enumerate() {
        for (c, px) in line.split_whitespace().enumerate() {
            if !mat.is_interior(r, c) {
                continue;
            }
            let p = mat.point_at(r, c);
            star_ok &= (px == "0") == on_star(k, p.i, p.j);
        }
    }
    pass &= star_ok;
    notes.push(format!("k=5 zeromap star {star_ok}"));
    outcome(pass, notes.join("; "))
}

fn conjectures() -> Outcome {
    match check_conjectures(200) {
        Ok(v) => {
            let bad: Vec<i64> = v.iter().filter(|x| !x.holds).map(|x| x.k).collect();
            let k8 = v
                .iter()
                .find(|x| x.k == 8)
                .map(|x| (x.proper_zeros, x.doublets));
            outcome(
                bad.is_empty(),
                format!("k = 2..=200, counterexamples {bad:?}, k=8 (zeros, doublets) {k8:?}"),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn main() {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 golden matrices", Duration::from_secs(1), golden),
        ("2 dixon suite m,n,k <= 60", Duration::from_secs(30), || {
            suite_line(&[suites::dixon_suite(60)])
        }),
        (
            "3 near-central suite m+n <= 60",
            Duration::from_secs(30),
            || suite_line(&[suites::near_central_suite(60)]),
        ),
        (
            "4 recurrence suite m+n <= 120",
            Duration::from_secs(300),
            || suite_line(&suites::recurrence_suite(120, Checks::ALL)),
        ),
        (
            "5 middle-out lattice, radius 3",
            Duration::from_secs(300),
            middle_out,
        ),
        (
            "6 families N <= 60",
            Duration::from_secs(60),
            families_check,
        ),
        (
            "7 star orbits k = 3, 5, 7",
            Duration::from_secs(60),
            star_check,
        ),
        (
            "8 M(2k,2k,k) zeros k <= 200",
            Duration::from_secs(1800),
            conjectures,
        ),
    ];
    let only: Option<String> = std::env::args().nth(1).filter(|a| !a.starts_with('-'));
    let mut failed = 0;
    for (name, budget, run) in criteria {
        if let Some(o) = &only {
            if !name.starts_with(o.as_str()) {
                continue;
            }
        }
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let pass = out.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "{} criterion {name}: {} [{:.2}s, budget {}s]",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
