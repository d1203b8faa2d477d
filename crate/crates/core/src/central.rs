//! Parity cases of the matrix centre and closed forms for central and near-central values.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{binomial, multinomial3, ratio, rational_to_integer, sign};
use crate::coeff::eval_c;
use crate::error::{CgError, Result};
use crate::json;
use crate::matrix::{CGMatrix, Violation};
use crate::point::{check_shape, in_cone, ParamPoint};
use crate::symmetry::{apply_unchecked, SymmetryElement};

/// Parities of (m, n, k) after normalisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    /// m, n, k even: single nonzero centre.
    EEE,
    /// m, n even, k odd: single zero centre.
    EEO,
    /// m odd, n even, k even: 2x2 centre.
    OEE,
    /// m odd, n even, k odd: 2x2 centre.
    OEO,
}

impl Case {
    pub fn of_canonical(m: i64, n: i64, k: i64) -> Option<Case> {
        match (m % 2, n % 2, k % 2) {
            (0, 0, 0) => Some(Case::EEE),
            (0, 0, 1) => Some(Case::EEO),
            (1, 0, 0) => Some(Case::OEE),
            (1, 0, 1) => Some(Case::OEO),
            _ => None,
        }
    }

    pub fn center_shape(self) -> CenterShape {
        match self {
            Case::EEE => CenterShape::SingleNonzero,
            Case::EEO => CenterShape::SingleZero,
            Case::OEE | Case::OEO => CenterShape::Square2,
        }
    }

    pub fn m_is_odd(self) -> bool {
        matches!(self, Case::OEE | Case::OEO)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CenterShape {
    SingleNonzero,
    SingleZero,
    Square2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityCase {
    pub case_id: Case,
    pub center_shape: CenterShape,
    /// Column permutation taking the input to the canonical parameters.
    #[serde(serialize_with = "ser_element")]
    pub normalization: SymmetryElement,
    pub canonical: (i64, i64, i64),
}

fn ser_element<S: serde::Serializer>(
    g: &SymmetryElement,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.name())
}

const NORMALIZERS: [SymmetryElement; 6] = [
    SymmetryElement::IDENTITY,
    SymmetryElement::C12,
    SymmetryElement::C13,
    SymmetryElement::C23,
    SymmetryElement::C123,
    SymmetryElement::new([0, 1, 2], [1, 2, 0], false),
];

/// Image of the shape (m, n, k) under a column permutation.
pub fn permute_shape(g: &SymmetryElement, m: i64, n: i64, k: i64) -> (i64, i64, i64) {
    // any cone point will do; column permutations act on the top row alone
    let p = ParamPoint::new(m, n, k, 0, k);
    apply_unchecked(g, &p).triple()
}

/// Classifies the centre of M(m, n, k). Inputs with odd n are first moved by
/// the first column permutation (identity, C12, C13, ...) giving an even n.
pub fn classify_parity(m: i64, n: i64, k: i64) -> Result<ParityCase> {
    check_shape(m, n, k)?;
    for g in NORMALIZERS {
        let (a, b, c) = permute_shape(&g, m, n, k);
        if let Some(case_id) = Case::of_canonical(a, b, c) {
            return Ok(ParityCase {
                case_id,
                center_shape: case_id.center_shape(),
                normalization: g,
                canonical: (a, b, c),
            });
        }
    }
    unreachable!("some column permutation always gives n even")
}

fn parity_err(what: &str, m: i64, n: i64, k: i64) -> CgError {
    CgError::Parity(format!("{what} required, got (m, n, k) = ({m}, {n}, {k})"))
}

fn exact(num: BigInt, den: i64, what: &str) -> BigInt {
    rational_to_integer(&ratio(num, den))
        .unwrap_or_else(|| panic!("{what}: prefactor does not clear"))
}

/// Dixon's closed form: (-1)^(k/2) multinomial((m+n-k)/2; (m-k)/2, (n-k)/2, k/2).
pub fn central_value_even(m: i64, n: i64, k: i64) -> Result<BigInt> {
    check_shape(m, n, k)?;
    if m % 2 != 0 || n % 2 != 0 || k % 2 != 0 {
        return Err(parity_err("m, n, k even", m, n, k));
    }
    Ok(multinomial3((m - k) / 2, (n - k) / 2, k / 2) * sign(k / 2))
}

/// The middle sum in Dixon's identity, Σ_l (-1)^l C(m'/2, m/2-l) C(m/2, k-l) C(n/2, l).
pub fn dixon_sum(m: i64, n: i64, k: i64) -> Result<BigInt> {
    check_shape(m, n, k)?;
    if m % 2 != 0 || n % 2 != 0 || k % 2 != 0 {
        return Err(parity_err("m, n, k even", m, n, k));
    }
    let hp = (m + n - 2 * k) / 2;
    let mut acc = BigInt::zero();
    for l in 0..=k {
        acc += binomial(hp, m / 2 - l) * binomial(m / 2, k - l) * binomial(n / 2, l) * sign(l);
    }
    Ok(acc)
}

/// Σ_l (-1)^l C(k, l)^3.
pub fn alternating_cube_sum(k: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for l in 0..=k {
        let b = binomial(k, l);
        acc += &b * &b * &b * sign(l);
    }
    acc
}

/// True iff k is odd; cross-checked against the central entry.
pub fn central_zero_test(m: i64, n: i64, k: i64) -> Result<bool> {
    check_shape(m, n, k)?;
    if m % 2 != 0 || n % 2 != 0 {
        return Err(parity_err("m, n even", m, n, k));
    }
    let predicted = k % 2 == 1;
    let actual = eval_c(&ParamPoint::new(m, n, k, m / 2, n / 2))?.is_zero();
    assert_eq!(
        predicted, actual,
        "central zero criterion fails at ({m}, {n}, {k})"
    );
    Ok(predicted)
}

/// Entry below the central zero, c(m/2+1, n/2-1), for m, n even and k odd.
pub fn subcentral_value_eeo(m: i64, n: i64, k: i64) -> Result<BigInt> {
    check_shape(m, n, k)?;
    if m % 2 != 0 || n % 2 != 0 || k % 2 != 1 {
        return Err(parity_err("m, n even and k odd", m, n, k));
    }
    if m == 0 {
        return Err(CgError::Domain(ParamPoint::new(m, n, k, 1, n / 2 - 1)));
    }
    let mult = multinomial3((m - k + 1) / 2, (n - k - 1) / 2, (k + 1) / 2);
    let num = mult * (2 * (k + 1) * (m - k + 1)) * sign((k + 1) / 2);
    Ok(exact(num, m * (m + 2), "value below the central zero"))
}

/// Lower-right central value c((m+1)/2, n/2) for m odd, n and k even.
pub fn subcentral_value_oee(m: i64, n: i64, k: i64) -> Result<BigInt> {
    check_shape(m, n, k)?;
    if m % 2 != 1 || n % 2 != 0 || k % 2 != 0 {
        return Err(parity_err("m odd, n and k even", m, n, k));
    }
    let mult = multinomial3((m - k + 1) / 2, (n - k) / 2, k / 2);
    Ok(exact(
        mult * (m - k + 1) * sign(k / 2),
        m + 1,
        "lower-right central value",
    ))
}

/// Lower-right central value c((m+1)/2, n/2) for m, k odd and n even.
pub fn subcentral_value_oeo(m: i64, n: i64, k: i64) -> Result<BigInt> {
    check_shape(m, n, k)?;
    if m % 2 != 1 || n % 2 != 0 || k % 2 != 1 {
        return Err(parity_err("m and k odd, n even", m, n, k));
    }
    let mult = multinomial3((m - k) / 2, (n - k - 1) / 2, (k + 1) / 2);
    Ok(exact(
        mult * (k + 1) * sign((k + 1) / 2),
        m + 1,
        "lower-right central value",
    ))
}

/// The nonzero value anchoring the centre of a canonical matrix, with its
/// coefficient indices.
pub fn anchor(case: Case, m: i64, n: i64, k: i64) -> Result<(ParamPoint, BigInt)> {
    match case {
        Case::EEE => Ok((
            ParamPoint::new(m, n, k, m / 2, n / 2),
            central_value_even(m, n, k)?,
        )),
        Case::EEO => Ok((
            ParamPoint::new(m, n, k, m / 2 + 1, n / 2 - 1),
            subcentral_value_eeo(m, n, k)?,
        )),
        Case::OEE => Ok((
            ParamPoint::new(m, n, k, (m + 1) / 2, n / 2),
            subcentral_value_oee(m, n, k)?,
        )),
        Case::OEO => Ok((
            ParamPoint::new(m, n, k, (m + 1) / 2, n / 2),
            subcentral_value_oeo(m, n, k)?,
        )),
    }
}

/// c_{m+2,n+2,k+2}(i+1,j+1) + c(i,j) = c_{m,n+2,k+2}(i,j+1) + c_{m+2,n,k+2}(i+1,j).
pub fn four_term_recurrence_check(p: &ParamPoint) -> Result<bool> {
    let ParamPoint { m, n, k, i, j } = *p;
    let pts = [
        *p,
        ParamPoint::new(m + 2, n + 2, k + 2, i + 1, j + 1),
        ParamPoint::new(m, n + 2, k + 2, i, j + 1),
        ParamPoint::new(m + 2, n, k + 2, i + 1, j),
    ];
    if let Some(bad) = pts.iter().find(|q| !in_cone(q)) {
        return Err(CgError::Domain(*bad));
    }
    let v: Vec<BigInt> = pts.iter().map(eval_c).collect::<Result<_>>()?;
    Ok(&v[1] + &v[0] == &v[2] + &v[3])
}

/// The four-term recurrence on every cell of `base` whose three partners exist.
/// `big`, `wide` and `tall` are M(m+2,n+2,k+2), M(m,n+2,k+2) and M(m+2,n,k+2).
pub fn four_term_grid_check(
    base: &CGMatrix,
    big: &CGMatrix,
    wide: &CGMatrix,
    tall: &CGMatrix,
) -> Vec<Violation> {
    let (m, n, k) = (base.m, base.n, base.k);
    assert_eq!((big.m, big.n, big.k), (m + 2, n + 2, k + 2));
    assert_eq!((wide.m, wide.n, wide.k), (m, n + 2, k + 2));
    assert_eq!((tall.m, tall.n, tall.k), (m + 2, n, k + 2));
    let mut out = Vec::new();
    let (mut lhs, mut rhs) = (BigInt::zero(), BigInt::zero());
    for r in 0..base.rows() {
        for c in 1..base.cols() {
            if !base.in_polygon(r, c) {
                continue;
            }
            let (ri, ci) = (r as i64, c as i64);
            let partners = [
                big.in_polygon_signed(ri + 1, ci),
                wide.in_polygon_signed(ri, ci - 1),
                tall.in_polygon_signed(ri + 1, ci - 1),
            ];
            if !partners.iter().all(|&b| b) {
                continue;
            }
            lhs.clone_from(big.get(r + 1, c));
            lhs += base.get(r, c);
            rhs.clone_from(wide.get(r, c - 1));
            rhs += tall.get(r + 1, c - 1);
            if lhs != rhs {
                out.push(Violation {
                    rule: "four-term",
                    row: r + 1,
                    col: c + 1,
                    detail: format!("{lhs} != {rhs}"),
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CenterCell {
    /// 1-based position in the canonical matrix.
    pub position: (usize, usize),
    pub point: ParamPoint,
    #[serde(with = "json::big")]
    pub value: BigInt,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralReport {
    pub input: (i64, i64, i64),
    #[serde(rename = "case")]
    pub case: ParityCase,
    pub center: Vec<CenterCell>,
    /// Closed-form value next to the centre (below a zero centre, or the
    /// lower-right corner of a 2x2 centre).
    pub near_center: Option<CenterCell>,
    /// Whether every closed form matched direct evaluation.
    pub consistent: bool,
}

fn cell(p: ParamPoint, value: BigInt) -> CenterCell {
    CenterCell {
        position: p.position(),
        point: p,
        value,
    }
}

pub fn central_report(m: i64, n: i64, k: i64) -> Result<CentralReport> {
    let case = classify_parity(m, n, k)?;
    let (a, b, c) = case.canonical;
    let at = |i: i64, j: i64| -> Result<CenterCell> {
        let p = ParamPoint::new(a, b, c, i, j);
        Ok(cell(p, eval_c(&p)?))
    };
    let mut consistent = true;
    let (center, near_center) = match case.case_id {
        Case::EEE => {
            let centre = at(a / 2, b / 2)?;
            consistent &= centre.value == central_value_even(a, b, c)?;
            (vec![centre], None)
        }
        Case::EEO => {
            let centre = at(a / 2, b / 2)?;
            consistent &= centre.value.is_zero();
            let below = at(a / 2 + 1, b / 2 - 1)?;
            consistent &= below.value == subcentral_value_eeo(a, b, c)?;
            (vec![centre], Some(below))
        }
        Case::OEE | Case::OEO => {
            let (lo, hi) = ((a - 1) / 2, (a + 1) / 2);
            // 2x2 block: rows lo, hi and columns (m'-1)/2, (m'+1)/2
            let mp = a + b - 2 * c;
            let (x0, x1) = ((mp - 1) / 2, (mp + 1) / 2);
            let cells = [(lo, x0), (lo, x1), (hi, x0), (hi, x1)]
                .into_iter()
                .map(|(i, x)| at(i, x + c - i))
                .collect::<Result<Vec<_>>>()?;
            let (_, want) = anchor(case.case_id, a, b, c)?;
            consistent &= cells[3].value == want;
            let lower_right = cells[3].clone();
            (cells, Some(lower_right))
        }
    };
    Ok(CentralReport {
        input: (m, n, k),
        case,
        center,
        near_center,
        consistent,
    })
}
