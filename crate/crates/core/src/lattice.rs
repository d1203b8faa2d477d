//! Middle-out multiplier lattices around the matrix centre.
//!
//! Each parity case has an anchor value X (the central value, or the value
//! next to a zero or 2x2 centre). Cells of the subcentral triangle below X are
//! rational multiples of X whose numerators and row-constant denominators
//! follow 2x2 recursions in λ_s = s(s+2), extended to the right by Pascal's rule.
//!
//! Triangle coordinates: row `s` counts down from the anchor row, letter `t`
//! counts right from the first column (t = 0 is A, t = 1 is B, ...).
//!
//! | case | rows | letters in row s | A_s at (0-based)          |
//! |------|------|------------------|---------------------------|
//! | EEE  | 0..  | 0..=s            | (m/2 + s, m'/2)           |
//! | EEO  | 0..  | 0..=s            | (m/2 + s, m'/2)  row 0 is the zero centre |
//! | O**  | 0..  | 0..=s+1          | ((m+1)/2 + s, (m'-1)/2)   |

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::arith::{factorial, lambda, ratio};
use crate::central::{anchor, Case};
use crate::error::{CgError, Result};
use crate::json;
use crate::matrix::CGMatrix;
use crate::point::{check_shape, in_cone, ParamPoint};
use crate::symmetry::{apply_unchecked, d12_element_transport, SymmetryElement};

/// λ_s = s(s+2) as a value object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaValue {
    pub s: i64,
    pub value: i64,
}

impl LambdaValue {
    pub fn of(s: i64) -> Self {
        LambdaValue {
            s,
            value: lambda(s),
        }
    }
}

/// Subfamily labels of positions around the centre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyLabel {
    /// Order-one subfamilies I to VI.
    Roman(u8),
    /// Diagonal zeros nearest the centre.
    R,
    /// Order-two and order-three subfamilies, e.g. `Sub(2, 11)` is 2.11.
    Sub(u8, u8),
    /// Nonzero by construction.
    Bullet,
    /// The zero centre of the m, n even, k odd case.
    CentralZero,
    Unclassified,
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const ROMAN: [&str; 7] = ["", "I", "II", "III", "IV", "V", "VI"];
        match self {
            FamilyLabel::Roman(r) => f.write_str(ROMAN[*r as usize]),
            FamilyLabel::R => f.write_str("R"),
            FamilyLabel::Sub(a, b) => write!(f, "{a}.{b}"),
            FamilyLabel::Bullet => f.write_str("bullet"),
            FamilyLabel::CentralZero => f.write_str("central-zero"),
            FamilyLabel::Unclassified => f.write_str("unclassified"),
        }
    }
}

impl Serialize for FamilyLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::str::FromStr for FamilyLabel {
    type Err = CgError;

    fn from_str(s: &str) -> Result<Self> {
        let roman = ["I", "II", "III", "IV", "V", "VI"];
        if let Some(r) = roman.iter().position(|&x| x == s) {
            return Ok(FamilyLabel::Roman(r as u8 + 1));
        }
        match s {
            "R" => return Ok(FamilyLabel::R),
            "bullet" | "•" => return Ok(FamilyLabel::Bullet),
            "central-zero" | "0" => return Ok(FamilyLabel::CentralZero),
            "unclassified" => return Ok(FamilyLabel::Unclassified),
            _ => {}
        }
        let bad = || CgError::Condition(format!("unknown family label {s:?}"));
        let (a, b) = s.split_once('.').ok_or_else(bad)?;
        Ok(FamilyLabel::Sub(
            a.parse().map_err(|_| bad())?,
            b.parse().map_err(|_| bad())?,
        ))
    }
}

fn parse_row(row: &str) -> Vec<FamilyLabel> {
    row.split_whitespace()
        .map(|t| t.parse().expect("label table"))
        .collect()
}

// Hexagonal windows: row dr covers dc in [max(-R, dr-R), min(R, dr+R)].
const EEE_WINDOW: [&str; 7] = [
    "3.1 3.2 3.2 3.1",
    "3.2 2.1 2.2 2.1 3.2",
    "3.2 2.2 I I 2.2 3.2",
    "3.1 2.1 I • I 2.1 3.1",
    "3.2 2.2 I I 2.2 3.2",
    "3.2 2.1 2.2 2.1 3.2",
    "3.1 3.2 3.2 3.1",
];

const EEO_WINDOW: [&str; 9] = [
    "3.15 3.16 3.17 3.16 3.15",
    "3.16 2.11 2.12 2.12 2.11 3.16",
    "3.17 2.12 II R II 2.12 3.17",
    "3.16 2.12 R • • R 2.12 3.16",
    "3.15 2.11 II • 0 • II 2.11 3.15",
    "3.16 2.12 R • • R 2.12 3.16",
    "3.17 2.12 II R II 2.12 3.17",
    "3.16 2.11 2.12 2.12 2.11 3.16",
    "3.15 3.16 3.17 3.16 3.15",
];

// 8x8 windows with the anchor at (4, 4); (first column, labels).
const OEE_WINDOW: [(i64, &str); 8] = [
    (0, "3.4 3.6 3.14 3.12"),
    (0, "3.6 2.4 2.6 2.10 3.8"),
    (0, "3.14 2.6 IV VI 2.8 3.10"),
    (0, "3.12 2.10 VI • R 2.8 3.8"),
    (1, "3.8 2.8 R • VI 2.10 3.12"),
    (2, "3.10 2.8 VI IV 2.6 3.14"),
    (3, "3.8 2.10 2.6 2.4 3.6"),
    (4, "3.12 3.14 3.6 3.4"),
];

const OEO_WINDOW: [(i64, &str); 8] = [
    (0, "3.3 3.5 3.13 3.11"),
    (0, "3.5 2.3 2.5 2.9 3.7"),
    (0, "3.13 2.5 III V 2.7 3.9"),
    (0, "3.11 2.9 V • • 2.7 3.7"),
    (1, "3.7 2.7 • • V 2.9 3.11"),
    (2, "3.9 2.7 V III 2.5 3.13"),
    (3, "3.7 2.9 2.5 2.3 3.5"),
    (4, "3.11 3.13 3.5 3.3"),
];

fn hex_lookup(rows: &[&str], dr: i64, dc: i64) -> FamilyLabel {
    let r = (rows.len() / 2) as i64;
    if dr.abs() > r {
        return FamilyLabel::Unclassified;
    }
    let lo = (-r).max(dr - r);
    let hi = r.min(dr + r);
    if dc < lo || dc > hi {
        return FamilyLabel::Unclassified;
    }
    parse_row(rows[(dr + r) as usize])[(dc - lo) as usize]
}

fn square_lookup(rows: &[(i64, &str)], dr: i64, dc: i64) -> FamilyLabel {
    let (row, col) = (dr + 4, dc + 4);
    if !(0..8).contains(&row) {
        return FamilyLabel::Unclassified;
    }
    let (first, text) = rows[row as usize];
    let labels = parse_row(text);
    let at = col - first;
    if at < 0 || at as usize >= labels.len() {
        FamilyLabel::Unclassified
    } else {
        labels[at as usize]
    }
}

/// Label of the position `(dr, dc)` rows down and columns right of the window
/// origin: the central value (EEE), the zero centre (EEO), or the lower-right
/// entry of the 2x2 centre (OEE, OEO).
pub fn family_label(case: Case, dr: i64, dc: i64) -> FamilyLabel {
    match case {
        Case::EEE => hex_lookup(&EEE_WINDOW, dr, dc),
        Case::EEO => hex_lookup(&EEO_WINDOW, dr, dc),
        Case::OEE => square_lookup(&OEE_WINDOW, dr, dc),
        Case::OEO => square_lookup(&OEO_WINDOW, dr, dc),
    }
}

/// Hexagonal distance on the grid whose neighbours are N, S, E, W, NW, SE.
pub fn hex_distance(dr: i64, dc: i64) -> i64 {
    dr.abs().max(dc.abs()).max((dr - dc).abs())
}

/// One multiplier of the subcentral triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeCell {
    pub s: usize,
    pub t: usize,
    /// Letter name such as `A_2`.
    pub name: String,
    /// Rows down and columns right of the anchor X.
    pub offset: (i64, i64),
    /// 1-based matrix position, `None` outside the polygon.
    pub position: Option<(usize, usize)>,
    #[serde(serialize_with = "ser_ratio")]
    pub multiplier: BigRational,
    #[serde(with = "json::big")]
    pub unreduced_numerator: BigInt,
    #[serde(with = "json::big")]
    pub unreduced_denominator: BigInt,
    pub label: FamilyLabel,
}

fn ser_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Ratio", 2)?;
    st.serialize_field("num", &r.numer().to_string())?;
    st.serialize_field("den", &r.denom().to_string())?;
    st.end()
}

#[derive(Debug, Clone, Serialize)]
pub struct Lattice {
    pub m: i64,
    pub n: i64,
    pub k: i64,
    #[serde(rename = "case")]
    pub case: Case,
    pub radius: usize,
    /// Coefficient holding the anchor X.
    pub anchor: ParamPoint,
    #[serde(with = "json::big")]
    pub anchor_value: BigInt,
    /// Row denominators d_0, d_1, ... (d_0 of the zero-centre case is 1 by convention).
    #[serde(with = "json::big_vec")]
    pub denominators: Vec<BigInt>,
    pub cells: Vec<LatticeCell>,
}

impl Lattice {
    pub fn cell(&self, s: usize, t: usize) -> Option<&LatticeCell> {
        self.cells.iter().find(|c| c.s == s && c.t == t)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("lattice serializes")
    }

    /// Cells whose multiple of X disagrees with the matrix, plus cells outside
    /// the polygon with a nonzero numerator.
    pub fn mismatches(&self, mat: &CGMatrix) -> Vec<&LatticeCell> {
        assert_eq!((mat.m, mat.n, mat.k), (self.m, self.n, self.k));
        let x = BigRational::from_integer(self.anchor_value.clone());
        self.cells
            .iter()
            .filter(|c| match c.position {
                Some((r, col)) => {
                    let want = BigRational::from_integer(mat.entry(r, col).clone());
                    &c.multiplier * &x != want
                }
                None => !c.unreduced_numerator.is_zero(),
            })
            .collect()
    }
}

/// Largest row index with nonvanishing denominators.
pub fn max_radius(case: Case, m: i64) -> usize {
    match case {
        Case::EEE | Case::EEO => (m / 2) as usize,
        Case::OEE | Case::OEO => ((m - 1) / 2).max(0) as usize,
    }
}

fn check_case(case: Case, m: i64, n: i64, k: i64) -> Result<()> {
    check_shape(m, n, k)?;
    if Case::of_canonical(m, n, k) != Some(case) {
        return Err(CgError::Parity(format!(
            "({m}, {n}, {k}) is not in case {case:?}; normalise it first"
        )));
    }
    Ok(())
}

fn check_radius(case: Case, m: i64, radius: usize) -> Result<()> {
    let max = max_radius(case, m);
    if radius > max {
        return Err(CgError::Radius {
            radius,
            reason: format!(
                "the denominator factor for row {} vanishes; largest radius is {max}",
                max + 1
            ),
        });
    }
    Ok(())
}

/// Unreduced numerators by row and the row denominators.
struct Numerators {
    rows: Vec<Vec<BigInt>>,
    d: Vec<BigInt>,
}

fn numerators(case: Case, m: i64, n: i64, k: i64, radius: usize) -> Numerators {
    let mp = m + n - 2 * k;
    let (lm, ln, lmp) = (lambda(m), lambda(n), lambda(mp));
    let big = BigInt::from;
    let mut na: Vec<BigInt> = Vec::new();
    let mut nb: Vec<BigInt> = Vec::new();
    let mut d: Vec<BigInt> = Vec::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    // ratio d_s / d_{s-1}, used by the Pascal extension of row s
    let row_ratio: Box<dyn Fn(i64) -> i64> = match case {
        Case::EEE | Case::EEO => Box::new(move |s| lm - lambda(2 * s - 2)),
        Case::OEE | Case::OEO => Box::new(move |s| lm - lambda(2 * s - 1)),
    };
    match case {
        Case::EEE | Case::EEO => {
            if case == Case::EEE {
                na.push(big(1));
                nb.push(BigInt::zero());
                d.push(big(1));
                if radius >= 1 {
                    na.push(big(lmp - lm - ln));
                    nb.push(big(lmp + lm - ln));
                    d.push(big(2 * lm));
                }
            } else {
                na.push(BigInt::zero());
                nb.push(BigInt::zero());
                d.push(big(1));
                na.push(big(1));
                nb.push(big(1));
                d.push(big(1));
            }
            for s in 1..radius as i64 {
                let su = s as usize;
                let ca = big(lmp - lm + lambda(2 * s));
                let cb = big(lambda(2 * s - 2) - ln);
                let a = &ca * &na[su] + &cb * &nb[su];
                let b = big(lmp) * &na[su] + &cb * &nb[su];
                na.push(a);
                nb.push(b);
                let next = &d[su] * (lm - lambda(2 * s));
                d.push(next);
            }
        }
        Case::OEE | Case::OEO => {
            na.push(big(if k % 2 == 0 { mp - m } else { mp + m + 2 }));
            nb.push(big(mp + 1));
            d.push(big(mp + 1));
            for s in 0..radius as i64 {
                let su = s as usize;
                let ca = big(lmp - lm + lambda(2 * s + 1) + 1);
                let cb = big(lambda(2 * s) - ln);
                let a = &ca * &na[su] + &cb * &nb[su];
                let b = big(lmp + 1) * &na[su] + &cb * &nb[su];
                na.push(a);
                nb.push(b);
                let next = &d[su] * (lm - lambda(2 * s + 1));
                d.push(next);
            }
        }
    }
    for s in 0..=radius {
        let width = match case {
            Case::EEE | Case::EEO => s + 1,
            Case::OEE | Case::OEO => s + 2,
        };
        let mut row = vec![na[s].clone()];
        if width > 1 {
            row.push(nb[s].clone());
        }
        for t in 2..width {
            let r = row_ratio(s as i64);
            let v = &row[t - 1] + &rows[s - 1][t - 1] * r;
            row.push(v);
        }
        rows.push(row);
    }
    Numerators { rows, d }
}

/// 0-based matrix cell of triangle coordinate (s, t).
fn triangle_cell(case: Case, m: i64, mp: i64, s: usize, t: usize) -> (i64, i64) {
    let (s, t) = (s as i64, t as i64);
    match case {
        Case::EEE | Case::EEO => (m / 2 + s, mp / 2 + t),
        Case::OEE | Case::OEO => ((m + 1) / 2 + s, (mp - 1) / 2 + t),
    }
}

/// Offset of (s, t) from the label-window origin.
fn window_offset(case: Case, s: usize, t: usize) -> (i64, i64) {
    match case {
        Case::EEE | Case::EEO => (s as i64, t as i64),
        Case::OEE | Case::OEO => (s as i64, t as i64 - 1),
    }
}

fn build(case: Case, m: i64, n: i64, k: i64, radius: usize) -> Result<Lattice> {
    check_case(case, m, n, k)?;
    check_radius(case, m, radius)?;
    let mp = m + n - 2 * k;
    let (anchor_point, anchor_value) = anchor(case, m, n, k)?;
    let nums = numerators(case, m, n, k, radius);
    let mut cells = Vec::new();
    for (s, row) in nums.rows.iter().enumerate() {
        for (t, num) in row.iter().enumerate() {
            let (r, c) = triangle_cell(case, m, mp, s, t);
            let i = r;
            let j = c + k - i;
            let in_poly = in_cone(&ParamPoint::new(m, n, k, i, j));
            let (wr, wc) = window_offset(case, s, t);
            let offset = match case {
                Case::EEO => (wr - 1, wc),
                _ => (wr, wc),
            };
            let label = if case == Case::EEO && s == 0 {
                FamilyLabel::CentralZero
            } else {
                family_label(case, wr, wc)
            };
            let den = nums.d[s].clone();
            cells.push(LatticeCell {
                s,
                t,
                name: format!("{}_{s}", (b'A' + t as u8) as char),
                offset,
                position: in_poly.then(|| ((r + 1) as usize, (c + 1) as usize)),
                multiplier: BigRational::new(num.clone(), den.clone()),
                unreduced_numerator: num.clone(),
                unreduced_denominator: den,
                label,
            });
        }
    }
    Ok(Lattice {
        m,
        n,
        k,
        case,
        radius,
        anchor: anchor_point,
        anchor_value,
        denominators: nums.d,
        cells,
    })
}

/// m, n, k even: multiples of the central value.
pub fn lattice_eee(m: i64, n: i64, k: i64, radius: usize) -> Result<Lattice> {
    build(Case::EEE, m, n, k, radius)
}

/// m, n even, k odd: multiples of the value below the zero centre.
pub fn lattice_eeo(m: i64, n: i64, k: i64, radius: usize) -> Result<Lattice> {
    build(Case::EEO, m, n, k, radius)
}

/// m odd, n even: multiples of the lower-right entry of the 2x2 centre.
pub fn lattice_odd(m: i64, n: i64, k: i64, radius: usize) -> Result<Lattice> {
    let case = Case::of_canonical(m, n, k)
        .filter(|c| c.m_is_odd())
        .ok_or_else(|| {
            CgError::Parity(format!("m odd and n even required, got ({m}, {n}, {k})"))
        })?;
    build(case, m, n, k, radius)
}

/// Dispatches on the parity of (m, n, k), which must already be canonical.
pub fn lattice(m: i64, n: i64, k: i64, radius: usize) -> Result<Lattice> {
    check_shape(m, n, k)?;
    let case = Case::of_canonical(m, n, k).ok_or_else(|| {
        CgError::Parity(format!("({m}, {n}, {k}) needs n even; normalise it first"))
    })?;
    build(case, m, n, k, radius)
}

/// Unreduced numerator at triangle coordinate (s, t).
pub fn numerator_at(case: Case, m: i64, n: i64, k: i64, s: usize, t: usize) -> Result<BigInt> {
    check_case(case, m, n, k)?;
    check_radius(case, m, s)?;
    let width = match case {
        Case::EEE | Case::EEO => s + 1,
        Case::OEE | Case::OEO => s + 2,
    };
    if t >= width {
        return Err(CgError::Radius {
            radius: s,
            reason: format!("row {s} has only {width} letters"),
        });
    }
    Ok(numerators(case, m, n, k, s).rows[s][t].clone())
}

/// Closed product form of the row denominator d_s (s >= 1).
pub fn denominator_closed_form(case: Case, m: i64, n: i64, k: i64, s: usize) -> BigInt {
    assert!(s >= 1);
    let s = s as i64 - 1; // formulas are stated for d_{s+1}
    let f = |a: i64| factorial(a);
    let two = |e: i64| BigInt::from(2).pow(e as u32);
    let r = match case {
        Case::EEE => ratio(
            two(2 * s + 3) * f((m + 2 * s + 2) / 2),
            f((m - 2 * s - 2) / 2),
        ),
        Case::EEO => ratio(
            two(2 * s + 2) * f((m + 2 * s + 2) / 2),
            f((m - 2 * s - 2) / 2) * lambda(m),
        ),
        Case::OEE | Case::OEO => {
            let mp = m + n - 2 * k;
            ratio(
                two(2 * s + 3) * (mp + 1) * f((m + 2 * s + 3) / 2),
                f((m - 2 * s - 3) / 2) * (m + 1),
            )
        }
    };
    crate::arith::rational_to_integer(&r).expect("closed denominator is an integer")
}

/// The 3.9 / 3.10 entry one row below and two columns left of X (m odd, n even).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Z1 {
    pub label: FamilyLabel,
    /// Numerator polynomial in λ_m', λ_m, λ_n.
    #[serde(with = "json::big")]
    pub numerator: BigInt,
    #[serde(serialize_with = "ser_ratio")]
    pub multiplier: BigRational,
    /// 1-based matrix position.
    pub position: (usize, usize),
    #[serde(with = "json::big")]
    pub value: BigInt,
}

/// Z_1 = A_0 Ñ / ((λ_m' - 3)(λ_m - 3)) with
/// Ñ = (λ_m' + λ_m + 2)^2 - 4 λ_m' λ_m - 28 - λ_n [(m'+1) N' + λ_m - 3],
/// where N' = (λ_m' - λ_m) / N(A_0) is the cofactor of N(A_0).
pub fn z1_special(m: i64, n: i64, k: i64, which: FamilyLabel) -> Result<Z1> {
    check_shape(m, n, k)?;
    if m % 2 != 1 || n % 2 != 0 {
        return Err(CgError::Parity(format!(
            "m odd and n even required, got ({m}, {n}, {k})"
        )));
    }
    let expected = if k % 2 == 0 {
        FamilyLabel::Sub(3, 10)
    } else {
        FamilyLabel::Sub(3, 9)
    };
    if which != expected {
        return Err(CgError::Condition(format!(
            "position {which} belongs to k {}; for k = {k} use {expected}",
            if k % 2 == 0 { "odd" } else { "even" }
        )));
    }
    let mp = m + n - 2 * k;
    let (lm, ln, lmp) = (lambda(m), lambda(n), lambda(mp));
    if lmp == 3 || lm == 3 {
        return Err(CgError::Singular(format!(
            "λ_m' - 3 or λ_m - 3 vanishes for ({m}, {n}, {k})"
        )));
    }
    let (na0, cofactor) = if k % 2 == 0 {
        (mp - m, mp + m + 2)
    } else {
        (mp + m + 2, mp - m)
    };
    let big = BigInt::from;
    let numerator: BigInt = big(lmp + lm + 2).pow(2)
        - big(4) * lmp * lm
        - 28
        - big(ln) * ((mp + 1) * cofactor + lm - 3);
    let a0 = ratio(na0, mp + 1);
    let multiplier = a0 * BigRational::new(numerator.clone(), big((lmp - 3) * (lm - 3)));
    let (_, x) = anchor(
        Case::of_canonical(m, n, k).expect("parity checked"),
        m,
        n,
        k,
    )?;
    let scaled = &multiplier * BigRational::from_integer(x);
    let value = crate::arith::rational_to_integer(&scaled)
        .ok_or_else(|| CgError::Singular("Z_1 multiple of X is not an integer".into()))?;
    let (r, c) = ((m + 1) / 2 + 1, (mp + 1) / 2 - 2);
    if !in_cone(&ParamPoint::new(m, n, k, r, c + k - r)) {
        return Err(CgError::Radius {
            radius: 1,
            reason: format!("the Z_1 position lies outside the polygon of M({m}, {n}, {k})"),
        });
    }
    Ok(Z1 {
        label: which,
        numerator,
        multiplier,
        position: ((r + 1) as usize, (c + 1) as usize),
        value,
    })
}

/// A cell of the full window around the centre.
#[derive(Debug, Clone, Serialize)]
pub struct WindowCell {
    /// Offset from the label-window origin.
    pub offset: (i64, i64),
    pub position: (usize, usize),
    pub label: FamilyLabel,
    /// Multiple of X, when some symmetry carries the cell into a triangle.
    #[serde(serialize_with = "ser_opt_ratio")]
    pub multiplier: Option<BigRational>,
    /// The symmetry used.
    pub via: Option<String>,
}

fn ser_opt_ratio<S: Serializer>(
    r: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => ser_ratio(r, s),
        None => s.serialize_none(),
    }
}

fn window_origin(case: Case, m: i64, mp: i64) -> (i64, i64) {
    match case {
        Case::EEE | Case::EEO => (m / 2, mp / 2),
        Case::OEE | Case::OEO => ((m + 1) / 2, (mp + 1) / 2),
    }
}

/// All polygon cells within hexagonal distance `radius` of the window origin.
///
/// A cell gets a multiplier when an element of the 12-element subgroup that
/// preserves the parity case maps it into the subcentral triangle of the image
/// matrix; the value is transported back exactly. For m odd only four elements
/// preserve the case, so part of the window stays without a multiplier.
pub fn lattice_window(m: i64, n: i64, k: i64, radius: usize) -> Result<Vec<WindowCell>> {
    check_shape(m, n, k)?;
    let case = Case::of_canonical(m, n, k).ok_or_else(|| {
        CgError::Parity(format!("({m}, {n}, {k}) needs n even; normalise it first"))
    })?;
    let mp = m + n - 2 * k;
    let (_, x) = anchor(case, m, n, k)?;
    let x = BigRational::from_integer(x);
    let (r0, c0) = window_origin(case, m, mp);
    let group: Vec<SymmetryElement> = SymmetryElement::d12()
        .into_iter()
        .filter(|g| {
            let p = ParamPoint::new(m, n, k, 0, k);
            let (a, b, c) = apply_unchecked(g, &p).triple();
            Case::of_canonical(a, b, c) == Some(case)
        })
        .collect();
    let mut images: HashMap<(i64, i64, i64), Option<Lattice>> = HashMap::new();
    let rad = radius as i64;
    let mut out = Vec::new();
    for dr in -rad..=rad {
        for dc in -rad..=rad {
            if hex_distance(dr, dc) > rad {
                continue;
            }
            let (r, c) = (r0 + dr, c0 + dc);
            let p = ParamPoint::new(m, n, k, r, c + k - r);
            if !in_cone(&p) {
                continue;
            }
            let mut found = None;
            for g in &group {
                let q = apply_unchecked(g, &p);
                let key = q.triple();
                let lat = images.entry(key).or_insert_with(|| {
                    let (a, b, cc) = key;
                    let rr = max_radius(case, a).min(radius + 1);
                    build(case, a, b, cc, rr).ok()
                });
                let Some(lat) = lat else { continue };
                let qmp = q.m_prime();
                let (ar, ac) = triangle_cell(case, q.m, qmp, 0, 0);
                let (s, t) = (q.i - ar, q.i_prime() - ac);
                if s < 0 || t < 0 {
                    continue;
                }
                let Some(cell) = lat.cell(s as usize, t as usize) else {
                    continue;
                };
                let rel = d12_element_transport(g, &p)?;
                let xq = BigRational::from_integer(lat.anchor_value.clone());
                let value_p = &cell.multiplier * xq / (&rel.scale * BigInt::from(rel.sign));
                found = Some((value_p / &x, g.name()));
                break;
            }
            let (multiplier, via) = match found {
                Some((mult, name)) => (Some(mult), Some(name)),
                None => (None, None),
            };
            out.push(WindowCell {
                offset: (dr, dc),
                position: ((r + 1) as usize, (c + 1) as usize),
                label: family_label(case, dr, dc),
                multiplier,
                via,
            });
        }
    }
    Ok(out)
}
