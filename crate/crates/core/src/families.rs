//! Structured zero families: diagonal zeros with their neighbouring values,
//! and the Diophantine parametrizations of the type I and type II zeros.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{binomial, factorial, lambda, multinomial, ratio, rational_to_integer, sign};
use crate::coeff::eval_c;
use crate::error::{CgError, Result};
use crate::matrix::build_matrix;
use crate::point::{check_shape, ParamPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DiagonalKind {
    /// n = 2k with m + k odd: zeros c(i, m + k - 2i).
    NEqualsTwoK,
    /// m = 2k with n + k odd: zeros c(n + k - 2j, j).
    MEqualsTwoK,
    /// m = n with k odd: zeros c(i, i).
    MEqualsN,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalZeroFamily {
    pub kind: DiagonalKind,
    pub m: i64,
    pub n: i64,
    pub k: i64,
    /// Proper zeros ordered from lower-left to upper-right.
    pub zero_positions: Vec<ParamPoint>,
}

fn is_interior(p: &ParamPoint) -> bool {
    let x = p.i + p.j - p.k;
    0 < p.i && p.i < p.m && 0 < p.j && p.j < p.n && 0 < x && x < p.m_prime()
}

/// The diagonal of proper zeros. `free` is m for `NEqualsTwoK` and `MEqualsN`,
/// n for `MEqualsTwoK`.
pub fn diagonal_zeros(kind: DiagonalKind, free: i64, k: i64) -> Result<DiagonalZeroFamily> {
    if k <= 0 {
        return Err(CgError::Condition(format!("k must be positive, got {k}")));
    }
    let (m, n) = match kind {
        DiagonalKind::NEqualsTwoK => (free, 2 * k),
        DiagonalKind::MEqualsTwoK => (2 * k, free),
        DiagonalKind::MEqualsN => (free, free),
    };
    let parity_ok = match kind {
        DiagonalKind::NEqualsTwoK => (m + k) % 2 == 1,
        DiagonalKind::MEqualsTwoK => (n + k) % 2 == 1,
        DiagonalKind::MEqualsN => k % 2 == 1,
    };
    if !parity_ok {
        return Err(CgError::Condition(format!(
            "{kind:?} needs an odd parity sum, got (m, n, k) = ({m}, {n}, {k})"
        )));
    }
    check_shape(m, n, k)
        .map_err(|_| CgError::Condition(format!("({m}, {n}, {k}) is not a valid shape")))?;
    let mut zero_positions: Vec<ParamPoint> = (0..=m)
        .filter_map(|i| {
            let j = match kind {
                DiagonalKind::NEqualsTwoK => m + k - 2 * i,
                DiagonalKind::MEqualsTwoK => {
                    // i = n + k - 2j
                    let twice = n + k - i;
                    if twice % 2 != 0 {
                        return None;
                    }
                    twice / 2
                }
                DiagonalKind::MEqualsN => i,
            };
            let p = ParamPoint::new(m, n, k, i, j);
            is_interior(&p).then_some(p)
        })
        .collect();
    zero_positions.sort_by(|a, b| b.i.cmp(&a.i));
    for p in &zero_positions {
        if !eval_c(p)?.is_zero() {
            return Err(CgError::NotAZero(*p));
        }
    }
    Ok(DiagonalZeroFamily {
        kind,
        m,
        n,
        k,
        zero_positions,
    })
}

fn check_below(m: i64, k: i64, t: i64) -> Result<()> {
    if k <= 0 || (m + k) % 2 != 1 || m < k + 1 || t < 1 || t > k {
        return Err(CgError::Condition(format!(
            "need k > 0, m + k odd, m > k and 1 <= t <= k; got m = {m}, k = {k}, t = {t}"
        )));
    }
    Ok(())
}

/// The t-th proper zero of M(m, 2k, k), counted from lower-left, and the entry
/// directly below it.
pub fn below_diagonal_points(m: i64, k: i64, t: i64) -> Result<(ParamPoint, ParamPoint)> {
    check_below(m, k, t)?;
    let i = (m + k - 2 * t + 1) / 2;
    let j = 2 * t - 1;
    Ok((
        ParamPoint::new(m, 2 * k, k, i, j),
        ParamPoint::new(m, 2 * k, k, i + 1, j - 1),
    ))
}

/// Single-term value of the entry directly below the t-th diagonal zero of
/// M(m, 2k, k). The entry to its right is equal.
pub fn below_diagonal_value(m: i64, k: i64, t: i64) -> Result<BigInt> {
    check_below(m, k, t)?;
    let f = factorial;
    let num = binomial(2 * k, k)
        * binomial(k - 1, t - 1)
        * f(2 * k - 2 * t + 1)
        * f((m + k + 1) / 2)
        * f((m - k - 3 + 2 * t) / 2)
        * sign(k + t + 1);
    let den = f(2 * k - 1) * f((m - k - 1) / 2) * f((m + k + 3 - 2 * t) / 2);
    Ok(rational_to_integer(&ratio(num, den)).expect("below-diagonal value is an integer"))
}

/// Entry below the central zero of M(m, 2k, k), m even and k odd.
pub fn below_central_zero_value(m: i64, k: i64) -> Result<BigInt> {
    if m % 2 != 0 || k % 2 != 1 || m < k + 1 {
        return Err(CgError::Condition(format!(
            "need m even, k odd and m > k; got m = {m}, k = {k}"
        )));
    }
    let h = (k + 1) / 2;
    let num =
        multinomial((m + k + 1) / 2, &[h, h, (m - k - 1) / 2]) * 2 * (k + 1) * (k + 1) * sign(h);
    Ok(rational_to_integer(&ratio(num, m * (m + 2))).expect("integer value"))
}

/// X of the central square [[X, 0], [0, X]] of M(m, 2k, k), m odd and k even.
pub fn central_square_value(m: i64, k: i64) -> Result<BigInt> {
    if m % 2 != 1 || k % 2 != 0 || k == 0 || m < k + 1 {
        return Err(CgError::Condition(format!(
            "need m odd, k even positive and m > k; got m = {m}, k = {k}"
        )));
    }
    let num = multinomial((m + k + 1) / 2, &[k / 2, (k + 2) / 2, (m - k - 1) / 2])
        * (k + 2)
        * sign(k / 2);
    Ok(rational_to_integer(&ratio(num, m + 1)).expect("integer value"))
}

/// The common absolute value on the equilateral triangle of side 7 around the
/// centre of M(2k, 2k, k), k odd: c(k+1, k-1).
pub fn star_triangle_value(k: i64) -> Result<BigInt> {
    if k < 3 || k % 2 != 1 {
        return Err(CgError::Condition(format!(
            "need k odd and at least 3, got {k}"
        )));
    }
    let h = (k + 1) / 2;
    let num = multinomial((3 * k + 3) / 2, &[h, h, h]) * (k + 1) * sign(h);
    Ok(rational_to_integer(&ratio(num, 6 * k)).expect("integer value"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyType {
    I,
    II,
}

impl fmt::Display for FamilyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyType::I => "I",
            FamilyType::II => "II",
        })
    }
}

impl std::str::FromStr for FamilyType {
    type Err = CgError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "1" => Ok(FamilyType::I),
            "II" | "2" => Ok(FamilyType::II),
            _ => Err(CgError::Condition(format!("unknown family type {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[allow(non_snake_case)]
pub struct FamilySolution {
    pub family: FamilyType,
    pub N: i64,
    pub P: i64,
    pub Q: i64,
    pub m: i64,
    pub n: i64,
    pub k: i64,
    /// Type II members (2l, 2, 1): a vertical zero triplet with one proper zero.
    pub degenerate: bool,
}

impl FamilySolution {
    #[allow(non_snake_case)]
    fn from_npq(family: FamilyType, N: i64, P: i64, Q: i64) -> Self {
        let (m, n, k) = match family {
            FamilyType::I => (2 * N, Q - P - 1, N - P),
            FamilyType::II => (2 * N + 2, Q - P - 1, N - P + 1),
        };
        FamilySolution {
            family,
            N,
            P,
            Q,
            m,
            n,
            k,
            degenerate: family == FamilyType::II && P == N,
        }
    }

    pub fn m_prime(&self) -> i64 {
        self.m + self.n - 2 * self.k
    }

    /// λ_m' = λ_m + λ_n (type I) or λ_m' + 8 = λ_m + λ_n (type II).
    pub fn lambda_identity_holds(&self) -> bool {
        let offset = match self.family {
            FamilyType::I => 0,
            FamilyType::II => 8,
        };
        lambda(self.m_prime()) + offset == lambda(self.m) + lambda(self.n)
    }

    /// Lattice position carrying the zero: A_1 for type I, A_2 for type II.
    pub fn zero_point(&self) -> ParamPoint {
        let s = match self.family {
            FamilyType::I => 1,
            FamilyType::II => 2,
        };
        ParamPoint::new(self.m, self.n, self.k, self.m / 2 + s, self.n / 2 - s)
    }

    /// The identity holds and, unless degenerate, the coefficient at the
    /// lattice position vanishes.
    pub fn validate(&self) -> Result<()> {
        if !self.lambda_identity_holds() {
            return Err(CgError::Condition(format!(
                "{self:?} breaks its λ identity"
            )));
        }
        if self.degenerate {
            return Ok(());
        }
        let p = self.zero_point();
        if !eval_c(&p)?.is_zero() {
            return Err(CgError::NotAZero(p));
        }
        Ok(())
    }
}

/// Factor pairs (P, Q) of `product` with P < Q and P <= p_max, by trial division.
fn factor_pairs(product: i64, p_max: i64) -> impl Iterator<Item = (i64, i64)> {
    (1..)
        .take_while(move |p| p * p < product && *p <= p_max)
        .filter(move |p| product % p == 0)
        .map(move |p| (p, product / p))
}

#[allow(non_snake_case)]
fn enumerate(family: FamilyType, max_N: i64) -> Vec<FamilySolution> {
    let mut out = Vec::new();
    for N in 1..=max_N {
        let (product, p_max) = match family {
            FamilyType::I => (N * (N + 1), N - 1),
            FamilyType::II => (N * (N + 3), N),
        };
        for (P, Q) in factor_pairs(product, p_max) {
            if (P + Q) % 2 == 1 && (P + N) % 2 == 0 {
                out.push(FamilySolution::from_npq(family, N, P, Q));
            }
        }
    }
    out
}

/// All (N, P, Q) with PQ = N(N+1), 1 <= P < Q, P < N, P and Q of opposite
/// parity, P and N of equal parity, N <= max_N; sorted by (N, P).
/// Nothing exists below N = 3.
#[allow(non_snake_case)]
pub fn enumerate_type_I(max_N: i64) -> Vec<FamilySolution> {
    enumerate(FamilyType::I, max_N)
}

/// As type I with PQ = N(N+3). The members with P = N are the degenerate
/// shapes (2N+2, 2, 1) and are flagged.
#[allow(non_snake_case)]
pub fn enumerate_type_II(max_N: i64) -> Vec<FamilySolution> {
    enumerate(FamilyType::II, max_N)
}

/// Odd A, B, C > 2 with A^2 + offset = B^2 + C^2 and B <= bound, sorted by (B, A).
/// Offset 1 factors as ((A-C)/2)((A+C)/2) = ((B-1)/2)((B+1)/2), offset 9 as
/// ((A-C)/2)((A+C)/2) = ((B-3)/2)((B+3)/2).
pub fn sum_of_squares_solver(offset: i64, bound: i64) -> Result<Vec<(i64, i64, i64)>> {
    let shift = match offset {
        1 => 1,
        9 => 3,
        _ => {
            return Err(CgError::Condition(format!(
                "offset must be 1 or 9, got {offset}"
            )))
        }
    };
    let mut out = Vec::new();
    let mut b = 3;
    while b <= bound {
        let product = ((b - shift) / 2) * ((b + shift) / 2);
        if product > 0 {
            let mut found: Vec<(i64, i64, i64)> = (1..)
                .take_while(|u| u * u <= product)
                .filter(|u| product % u == 0)
                .filter_map(|u| {
                    let v = product / u;
                    let (a, c) = (u + v, v - u);
                    (a % 2 == 1 && c > 2).then_some((a, b, c))
                })
                .collect();
            found.sort();
            out.extend(found);
        }
        b += 2;
    }
    Ok(out)
}

/// Maps a sum-of-squares triple to its family member; `None` when k has the
/// wrong parity for the family.
pub fn triple_to_solution(offset: i64, (a, b, c): (i64, i64, i64)) -> Option<FamilySolution> {
    let (family, n_big) = match offset {
        1 => (FamilyType::I, (b - 1) / 2),
        9 => (FamilyType::II, (b - 3) / 2),
        _ => return None,
    };
    let (p, q) = ((a - c) / 2, (a + c) / 2);
    let sol = FamilySolution::from_npq(family, n_big, p, q);
    let k_ok = match family {
        FamilyType::I => sol.k > 0 && sol.k % 2 == 0,
        FamilyType::II => sol.k % 2 == 1,
    };
    (k_ok && p >= 1 && p <= n_big).then_some(sol)
}

/// Inverse of `triple_to_solution`: (A, B, C) = (m'+1, m+1, n+1).
pub fn solution_to_triple(s: &FamilySolution) -> (i64, i64, i64) {
    (s.m_prime() + 1, s.m + 1, s.n + 1)
}

/// Series of type I solutions read off divisibility patterns of N and N + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table2Row {
    /// P = s, N = s(2t+1).
    PDividesN { s: i64, t: i64 },
    /// P = 2s+1, N+1 = 2t(2s+1).
    OddPDividesNPlusOne { s: i64, t: i64 },
    /// P = 2^a (2^{a+1}s + b), N+1 = (2^{a+1}s + b)(2^{a+1}t + c) with
    /// 0 < b, c < 2^{a+1}, bc = 1 mod 2^a and bc != 1 mod 2^{a+1}.
    Dyadic {
        a: u32,
        b: i64,
        c: i64,
        s: i64,
        t: i64,
    },
}

/// The (N, P) of a series member, or ConditionError when the series
/// parameters are inadmissible.
#[allow(non_snake_case)]
pub fn table2_member(row: Table2Row) -> Result<FamilySolution> {
    let bad = |why: &str| CgError::Condition(format!("{row:?}: {why}"));
    let (N, P) = match row {
        Table2Row::PDividesN { s, t } => (s * (2 * t + 1), s),
        Table2Row::OddPDividesNPlusOne { s, t } => (2 * t * (2 * s + 1) - 1, 2 * s + 1),
        Table2Row::Dyadic { a, b, c, s, t } => {
            let lo = 1i64 << a;
            let hi = lo << 1;
            if !(0 < b && b < hi && 0 < c && c < hi) || (b * c) % lo != 1 % lo || (b * c) % hi == 1
            {
                return Err(bad("b and c fail the congruence conditions"));
            }
            let odd = hi * s + b;
            (odd * (hi * t + c) - 1, lo * odd)
        }
    };
    let product = N * (N + 1);
    if N < 3 || P < 1 || P >= N || product % P != 0 {
        return Err(bad("P must divide N(N+1) with 1 <= P < N and N >= 3"));
    }
    let Q = product / P;
    if (P + Q) % 2 != 1 || (P + N) % 2 != 0 {
        return Err(bad("parity conditions fail"));
    }
    Ok(FamilySolution::from_npq(FamilyType::I, N, P, Q))
}

pub fn catalog_csv(solutions: &[FamilySolution]) -> String {
    let mut out = String::from("N,P,Q,m,n,k,family,degenerate\n");
    for s in solutions {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            s.N, s.P, s.Q, s.m, s.n, s.k, s.family, s.degenerate
        ));
    }
    out
}

pub fn catalog_json(solutions: &[FamilySolution]) -> serde_json::Value {
    serde_json::to_value(solutions).expect("solutions serialize")
}

/// Checks a diagonal family against a freshly built matrix: every listed
/// position is zero and no two listed zeros are hexagonal neighbours.
pub fn verify_diagonal_family(f: &DiagonalZeroFamily) -> Result<bool> {
    let mat = build_matrix(f.m, f.n, f.k)?;
    let all_zero = f
        .zero_positions
        .iter()
        .all(|p| mat.value(p.i, p.j).is_zero());
    let adjacent = f.zero_positions.windows(2).any(|w| {
        let (dr, dc) = (w[1].i - w[0].i, w[1].i_prime() - w[0].i_prime());
        crate::lattice::hex_distance(dr, dc) <= 1
    });
    Ok(all_zero && !adjacent)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_examples() {
        let f = diagonal_zeros(DiagonalKind::NEqualsTwoK, 4, 3).unwrap();
        assert_eq!(f.zero_positions.len(), 3);
        assert_eq!(f.zero_positions[0], ParamPoint::new(4, 6, 3, 3, 1));
        assert!(verify_diagonal_family(&f).unwrap());
        let f = diagonal_zeros(DiagonalKind::NEqualsTwoK, 5, 2).unwrap();
        let pos: Vec<_> = f.zero_positions.iter().map(|p| p.position()).collect();
        assert_eq!(pos, vec![(4, 3), (3, 4)]);
        let f = diagonal_zeros(DiagonalKind::MEqualsN, 4, 1).unwrap();
        assert_eq!(f.zero_positions.len(), 3);
        assert!(f.zero_positions.iter().all(|p| p.i == p.j));
        let f = diagonal_zeros(DiagonalKind::MEqualsTwoK, 4, 3).unwrap();
        assert_eq!((f.m, f.n), (6, 4));
        assert_eq!(f.zero_positions.len(), 3);
        assert!(verify_diagonal_family(&f).unwrap());
        assert!(matches!(
            diagonal_zeros(DiagonalKind::NEqualsTwoK, 4, 2),
            Err(CgError::Condition(_))
        ));
        assert!(matches!(
            diagonal_zeros(DiagonalKind::MEqualsN, 6, 2),
            Err(CgError::Condition(_))
        ));
    }

    #[test]
    fn diagonal_counts() {
        for k in 1..10 {
            for m in (k + 1..k + 12).filter(|m| (m + k) % 2 == 1) {
                assert_eq!(
                    diagonal_zeros(DiagonalKind::NEqualsTwoK, m, k)
                        .unwrap()
                        .zero_positions
                        .len() as i64,
                    k
                );
                assert_eq!(
                    diagonal_zeros(DiagonalKind::MEqualsTwoK, m, k)
                        .unwrap()
                        .zero_positions
                        .len() as i64,
                    k
                );
            }
            if k % 2 == 1 {
                for m in k..k + 8 {
                    let f = diagonal_zeros(DiagonalKind::MEqualsN, m, k).unwrap();
                    assert_eq!(f.zero_positions.len() as i64, m - k);
                    assert!(verify_diagonal_family(&f).unwrap());
                }
            }
        }
    }

    #[test]
    fn below_diagonal() {
        assert_eq!(below_diagonal_value(4, 3, 1).unwrap(), BigInt::from(-20));
        for k in 1..9 {
            for m in (k + 1..k + 14).filter(|m| (m + k) % 2 == 1) {
                for t in 1..=k {
                    let (zero, below) = below_diagonal_points(m, k, t).unwrap();
                    assert!(eval_c(&zero).unwrap().is_zero());
                    let v = below_diagonal_value(m, k, t).unwrap();
                    assert_eq!(eval_c(&below).unwrap(), v, "m={m} k={k} t={t}");
                    let right = ParamPoint::new(m, 2 * k, k, below.i, below.j + 1);
                    assert_eq!(eval_c(&right).unwrap(), v);
                }
            }
        }
        assert!(below_diagonal_value(4, 3, 4).is_err());
        assert!(below_diagonal_value(4, 2, 1).is_err());
    }

    #[test]
    fn special_centre_values() {
        for k in (1..12).step_by(2) {
            for m in (k + 1..k + 14).step_by(2) {
                assert_eq!(
                    below_central_zero_value(m, k).unwrap(),
                    below_diagonal_value(m, k, (k + 1) / 2).unwrap()
                );
            }
        }
        for k in (2..12).step_by(2) {
            for m in (k + 1..k + 14).step_by(2) {
                let x = central_square_value(m, k).unwrap();
                assert_eq!(x, below_diagonal_value(m, k, k / 2 + 1).unwrap());
                let c = ParamPoint::new(m, 2 * k, k, (m + 1) / 2, k);
                assert_eq!(eval_c(&c).unwrap(), x);
                assert_eq!(
                    eval_c(&ParamPoint::new(m, 2 * k, k, (m - 1) / 2, k)).unwrap(),
                    x
                );
            }
        }
        for k in (3..16).step_by(2) {
            let x = star_triangle_value(k).unwrap();
            assert_eq!(
                eval_c(&ParamPoint::new(2 * k, 2 * k, k, k + 1, k - 1)).unwrap(),
                x
            );
        }
    }

    #[test]
    fn smallest_members() {
        let one = enumerate_type_I(3);
        assert_eq!(one.len(), 1);
        assert_eq!(
            (one[0].N, one[0].P, one[0].Q, one[0].m, one[0].n, one[0].k),
            (3, 1, 12, 6, 10, 2)
        );
        let two: Vec<_> = enumerate_type_II(3)
            .into_iter()
            .filter(|s| !s.degenerate)
            .collect();
        assert_eq!((two[0].m, two[0].n, two[0].k), (8, 16, 3));
        let degenerate: Vec<_> = enumerate_type_II(6)
            .into_iter()
            .filter(|s| s.degenerate)
            .map(|s| (s.m, s.n, s.k))
            .collect();
        assert_eq!(
            degenerate,
            vec![
                (4, 2, 1),
                (6, 2, 1),
                (8, 2, 1),
                (10, 2, 1),
                (12, 2, 1),
                (14, 2, 1)
            ]
        );
        for s in enumerate_type_I(20)
            .iter()
            .chain(enumerate_type_II(20).iter())
        {
            s.validate().unwrap();
        }
    }

    #[test]
    fn squares_biject_with_solutions() {
        for (offset, family) in [(1, FamilyType::I), (9, FamilyType::II)] {
            let max_n = 40;
            let triples =
                sum_of_squares_solver(offset, 2 * max_n + 1 + if offset == 9 { 2 } else { 0 })
                    .unwrap();
            for &(a, b, c) in &triples {
                assert_eq!(a * a + offset, b * b + c * c);
            }
            let mut from_triples: Vec<_> = triples
                .iter()
                .filter_map(|&t| triple_to_solution(offset, t))
                .collect();
            from_triples.sort_by_key(|s| (s.N, s.P));
            let listed = match family {
                FamilyType::I => enumerate_type_I(max_n),
                FamilyType::II => enumerate_type_II(max_n),
            };
            assert_eq!(from_triples, listed);
            for s in &listed {
                assert_eq!(triple_to_solution(offset, solution_to_triple(s)), Some(*s));
            }
        }
        let first = sum_of_squares_solver(1, 7).unwrap();
        assert!(first.contains(&(13, 7, 11)));
        assert!(sum_of_squares_solver(4, 10).is_err());
    }

    #[test]
    fn table2_series() {
        for s in 1..8 {
            for t in 1..8 {
                if let Ok(sol) = table2_member(Table2Row::PDividesN { s, t }) {
                    sol.validate().unwrap();
                }
                if let Ok(sol) = table2_member(Table2Row::OddPDividesNPlusOne { s, t }) {
                    sol.validate().unwrap();
                }
                for (b, c) in [(1, 3), (3, 1)] {
                    table2_member(Table2Row::Dyadic { a: 1, b, c, s, t })
                        .unwrap()
                        .validate()
                        .unwrap();
                }
            }
        }
        let first = table2_member(Table2Row::PDividesN { s: 1, t: 1 }).unwrap();
        assert_eq!((first.m, first.n, first.k), (6, 10, 2));
        assert!(table2_member(Table2Row::Dyadic {
            a: 1,
            b: 1,
            c: 1,
            s: 1,
            t: 1
        })
        .is_err());
    }

    #[test]
    fn catalog_formats() {
        let sols = enumerate_type_I(5);
        let csv = catalog_csv(&sols);
        assert!(csv.starts_with("N,P,Q,m,n,k,family,degenerate\n3,1,12,6,10,2,I,false\n"));
        let json = catalog_json(&sols);
        assert_eq!(json[0]["m"], 6);
        assert_eq!(json[0]["family"], "I");
    }
}
