//! The coordinate matrix M(m, n, k).
//!
//! Row `i` runs over `0..=m`, column `x = i + j - k` over `0..=m'`. Cells
//! outside the cone are stored as explicit zeros and masked out of the polygon.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{binomial, sign};
use crate::error::{CgError, Result};
use crate::json;
use crate::point::{check_shape, ParamPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CGMatrix {
    pub m: i64,
    pub n: i64,
    pub k: i64,
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
    polygon_mask: Vec<bool>,
}

/// A single failed check, at a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub row: usize,
    pub col: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProperZero {
    /// 1-based (row, col).
    pub position: (usize, usize),
    pub point: ParamPoint,
}

impl CGMatrix {
    fn blank(m: i64, n: i64, k: i64) -> Self {
        let rows = (m + 1) as usize;
        let cols = (m + n - 2 * k + 1) as usize;
        let mut polygon_mask = Vec::with_capacity(rows * cols);
        for i in 0..rows as i64 {
            for x in 0..cols as i64 {
                let j = x + k - i;
                polygon_mask.push((0..=n).contains(&j));
            }
        }
        CGMatrix {
            m,
            n,
            k,
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
            polygon_mask,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn m_prime(&self) -> i64 {
        self.m + self.n - 2 * self.k
    }

    #[inline]
    fn idx(&self, r: usize, c: usize) -> usize {
        r * self.cols + c
    }

    /// 0-based access.
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[self.idx(r, c)]
    }

    /// 0-based access with signed indices; `None` off the rectangle.
    #[inline]
    pub fn get_signed(&self, r: i64, c: i64) -> Option<&BigInt> {
        if r < 0 || c < 0 || r as usize >= self.rows || c as usize >= self.cols {
            None
        } else {
            Some(self.get(r as usize, c as usize))
        }
    }

    /// 1-based access as in printed matrices.
    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        self.get(row - 1, col - 1)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        let at = self.idx(r, c);
        self.entries[at] = v;
    }

    #[inline]
    pub fn in_polygon(&self, r: usize, c: usize) -> bool {
        self.polygon_mask[self.idx(r, c)]
    }

    #[inline]
    pub fn in_polygon_signed(&self, r: i64, c: i64) -> bool {
        r >= 0
            && c >= 0
            && (r as usize) < self.rows
            && (c as usize) < self.cols
            && self.in_polygon(r as usize, c as usize)
    }

    pub fn polygon_mask(&self) -> &[bool] {
        &self.polygon_mask
    }

    /// The cone point stored at 0-based (r, c).
    pub fn point_at(&self, r: usize, c: usize) -> ParamPoint {
        let i = r as i64;
        ParamPoint::new(self.m, self.n, self.k, i, c as i64 + self.k - i)
    }

    /// 0-based cell of coefficient (i, j), if it lies in the polygon.
    pub fn cell_of(&self, i: i64, j: i64) -> Option<(usize, usize)> {
        let x = i + j - self.k;
        self.in_polygon_signed(i, x)
            .then_some((i as usize, x as usize))
    }

    /// Value of c(i, j) for this (m, n, k), zero outside the cone.
    pub fn value(&self, i: i64, j: i64) -> BigInt {
        self.cell_of(i, j)
            .map(|(r, c)| self.get(r, c).clone())
            .unwrap_or_default()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row_slice(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_interior(&self, r: usize, c: usize) -> bool {
        let p = self.point_at(r, c);
        self.in_polygon(r, c)
            && p.i > 0
            && p.i < self.m
            && p.j > 0
            && p.j < self.n
            && c > 0
            && (c as i64) < self.m_prime()
    }
}

/// Left column: c(i, k-i) = (-1)^i C(m-i, k-i) C(n-k+i, i).
pub fn left_column_value(m: i64, n: i64, k: i64, i: i64) -> BigInt {
    if i > k {
        return BigInt::zero();
    }
    binomial(m - i, k - i) * binomial(n - k + i, i) * sign(i)
}

/// Builds M(m, n, k) by seeding the left column and sweeping Pascal's rule rightwards.
pub fn build_matrix(m: i64, n: i64, k: i64) -> Result<CGMatrix> {
    check_shape(m, n, k)?;
    let mut mat = CGMatrix::blank(m, n, k);
    let (rows, cols) = (mat.rows, mat.cols);
    for i in 0..=k.min(m) {
        let at = mat.idx(i as usize, 0);
        mat.entries[at] = left_column_value(m, n, k, i);
    }
    for c in 1..cols {
        for r in 0..rows {
            let at = r * cols + c;
            if !mat.polygon_mask[at] {
                continue;
            }
            let mut v = mat.entries[at - 1].clone();
            if r > 0 {
                v += &mat.entries[at - cols - 1];
            }
            mat.entries[at] = v;
        }
    }
    Ok(mat)
}

/// Builds the matrix entry by entry from the summation formula. Slow; used as an oracle.
pub fn build_matrix_by_sum(m: i64, n: i64, k: i64) -> Result<CGMatrix> {
    check_shape(m, n, k)?;
    let mut mat = CGMatrix::blank(m, n, k);
    for r in 0..mat.rows {
        for c in 0..mat.cols {
            if mat.in_polygon(r, c) {
                let p = mat.point_at(r, c);
                let v = crate::coeff::sum_primary(&p);
                mat.set(r, c, v);
            }
        }
    }
    Ok(mat)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeReport {
    /// |entries| along the top edge: C(m, k).
    #[serde(with = "json::big")]
    pub top: BigInt,
    /// |entries| along the lower-left slanted edge: C(n, k).
    #[serde(with = "json::big")]
    pub lower_left: BigInt,
    /// |entries| along the right column: C(m', m-k).
    #[serde(with = "json::big")]
    pub right: BigInt,
    pub horizontal_len: usize,
    pub slanted_len: usize,
    pub vertical_len: usize,
    pub violations: Vec<Violation>,
}

impl EdgeReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the six polygon edges: three of constant absolute value and three
/// linking edges given by binomial products.
pub fn polygon_edges(mat: &CGMatrix) -> EdgeReport {
    let (m, n, k) = (mat.m, mat.n, mat.k);
    let mp = mat.m_prime();
    let top = binomial(m, k);
    let lower_left = binomial(n, k);
    let right = binomial(mp, m - k);
    let mut violations = Vec::new();
    let mut check = |rule: &'static str, i: i64, j: i64, want: BigInt| {
        if let Some((r, c)) = mat.cell_of(i, j) {
            if *mat.get(r, c) != want {
                violations.push(Violation {
                    rule,
                    row: r + 1,
                    col: c + 1,
                    detail: format!("expected {want}, found {}", mat.get(r, c)),
                });
            }
        } else {
            violations.push(Violation {
                rule,
                row: (i + 1).max(0) as usize,
                col: (i + j - k + 1).max(0) as usize,
                detail: "edge cell outside polygon".into(),
            });
        }
    };
    let sk = sign(k);
    for j in k..=n {
        check("edge-top", 0, j, top.clone());
    }
    for i in k..=m {
        check("edge-lower-left", i, 0, &lower_left * sk);
    }
    for i in m - k..=m {
        let j = mp + k - i;
        // Right column sign alternates with the row; only the magnitude is constant.
        if let Some((r, c)) = mat.cell_of(i, j) {
            if mat.get(r, c).abs() != right {
                check("edge-right", i, j, right.clone());
            }
        } else {
            check("edge-right", i, j, right.clone());
        }
    }
    for i in 0..=k {
        check("edge-left", i, k - i, left_column_value(m, n, k, i));
    }
    for j in 0..=n - k {
        check(
            "edge-bottom",
            m,
            j,
            binomial(m - k + j, j) * binomial(n - j, k) * sk,
        );
    }
    for i in 0..=m - k {
        check(
            "edge-upper-right",
            i,
            n,
            binomial(m - i, k) * binomial(n - k + i, i),
        );
    }

    let count = |f: &dyn Fn(usize, usize) -> bool| {
        (0..mat.rows)
            .flat_map(|r| (0..mat.cols).map(move |c| (r, c)))
            .filter(|&(r, c)| mat.in_polygon(r, c) && f(r, c))
            .count()
    };
    let horizontal_len = count(&|r, _| r == 0);
    let slanted_len = count(&|r, c| mat.point_at(r, c).j == 0);
    let vertical_len = count(&|_, c| c == 0);
    let bottom_len = count(&|r, _| r == mat.rows - 1);
    let upper_right_len = count(&|r, c| mat.point_at(r, c).j == n);
    let right_len = count(&|_, c| c == mat.cols - 1);
    let lengths = [
        ("horizontal", horizontal_len, bottom_len, n - k + 1),
        ("slanted", slanted_len, upper_right_len, m - k + 1),
        ("vertical", vertical_len, right_len, k + 1),
    ];
    for (name, a, b, want) in lengths {
        if a as i64 != want || b as i64 != want {
            violations.push(Violation {
                rule: "edge-length",
                row: 0,
                col: 0,
                detail: format!("{name} edges have lengths {a} and {b}, expected {want}"),
            });
        }
    }
    EdgeReport {
        top,
        lower_left,
        right,
        horizontal_len,
        slanted_len,
        vertical_len,
        violations,
    }
}

/// c(i,j) = c(i,j-1) + c(i-1,j) wherever all three cells lie in the polygon.
pub fn check_pascal(mat: &CGMatrix) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut scratch = BigInt::zero();
    for r in 1..mat.rows {
        for c in 1..mat.cols {
            if !(mat.in_polygon(r, c) && mat.in_polygon(r, c - 1) && mat.in_polygon(r - 1, c - 1)) {
                continue;
            }
            scratch.clone_from(mat.get(r, c - 1));
            scratch += mat.get(r - 1, c - 1);
            if scratch != *mat.get(r, c) {
                out.push(Violation {
                    rule: "pascal",
                    row: r + 1,
                    col: c + 1,
                    detail: format!("{} != {}", mat.get(r, c), scratch),
                });
            }
        }
    }
    out
}

/// a1 c(i,j) = a2 c(i+1,j) + a3 c(i,j+1) with
/// a1 = (i'+1)(m'-i'), a2 = (i+1)(m-i), a3 = (j+1)(n-j).
pub fn check_reverse(mat: &CGMatrix) -> Vec<Violation> {
    let mut out = Vec::new();
    let mp = mat.m_prime();
    let (mut lhs, mut t2, mut t3) = (BigInt::zero(), BigInt::zero(), BigInt::zero());
    for r in 0..mat.rows.saturating_sub(1) {
        for c in 0..mat.cols.saturating_sub(1) {
            if !(mat.in_polygon(r, c) && mat.in_polygon(r + 1, c + 1) && mat.in_polygon(r, c + 1)) {
                continue;
            }
            let p = mat.point_at(r, c);
            let x = c as i64;
            let a1 = ((x + 1) * (mp - x)) as u64;
            let a2 = ((p.i + 1) * (mat.m - p.i)) as u64;
            let a3 = ((p.j + 1) * (mat.n - p.j)) as u64;
            lhs.clone_from(mat.get(r, c));
            lhs *= a1;
            t2.clone_from(mat.get(r + 1, c + 1));
            t2 *= a2;
            t3.clone_from(mat.get(r, c + 1));
            t3 *= a3;
            t2 += &t3;
            if lhs != t2 {
                out.push(Violation {
                    rule: "reverse",
                    row: r + 1,
                    col: c + 1,
                    detail: format!("{lhs} != {t2}"),
                });
            }
        }
    }
    out
}

/// Interior zeros of the polygon, row-major.
pub fn proper_zeros(mat: &CGMatrix) -> Vec<ProperZero> {
    let mut out = Vec::new();
    for r in 1..mat.rows.saturating_sub(1) {
        for c in 1..mat.cols.saturating_sub(1) {
            if mat.get(r, c).is_zero() && mat.is_interior(r, c) {
                out.push(ProperZero {
                    position: (r + 1, c + 1),
                    point: mat.point_at(r, c),
                });
            }
        }
    }
    out
}

const CENSORED: [(&str, i64, i64); 6] = [
    ("N", -1, 0),
    ("S", 1, 0),
    ("E", 0, 1),
    ("W", 0, -1),
    ("NW", -1, -1),
    ("SE", 1, 1),
];

/// Proper zeros may touch other zeros only along the NE/SW diagonal.
pub fn check_censorship(mat: &CGMatrix) -> Vec<Violation> {
    let mut out = Vec::new();
    for z in proper_zeros(mat) {
        let (r, c) = (z.position.0 as i64 - 1, z.position.1 as i64 - 1);
        for (dir, dr, dc) in CENSORED {
            let (rr, cc) = (r + dr, c + dc);
            if mat.in_polygon_signed(rr, cc) && mat.get(rr as usize, cc as usize).is_zero() {
                out.push(Violation {
                    rule: "censorship",
                    row: z.position.0,
                    col: z.position.1,
                    detail: format!("{dir} neighbour is also zero"),
                });
            }
        }
    }
    out
}

/// One located occurrence of a two-zero triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleIdentity {
    /// 1, 2 or 3 in the order: zeros at (middle-left, bottom-right),
    /// (middle-right, bottom-left), (apex, bottom-middle).
    pub pattern: u8,
    /// 1-based position of the apex.
    pub apex: (usize, usize),
    /// The coefficient at the middle-left cell.
    pub point: ParamPoint,
    #[serde(with = "json::big")]
    pub x: BigInt,
    pub values_hold: bool,
    pub parameters_hold: bool,
}

impl TriangleIdentity {
    pub fn holds(&self) -> bool {
        self.values_hold && self.parameters_hold
    }
}

// Cells (a, b) of the 3-row triangle, b <= a, with the required multiple of X.
const TRIANGLES: [[i64; 6]; 3] = [
    // (0,0) (1,0) (1,1) (2,0) (2,1) (2,2)
    [1, 0, 1, -1, -1, 0],
    [1, -1, 0, 0, -1, -1],
    [0, 1, 1, -1, 0, 1],
];
const TRI_CELLS: [(i64, i64); 6] = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)];

/// Locates every two-zero triangle and checks its value pattern and the
/// matching parameter equality.
pub fn check_zero_pair_triangles(mat: &CGMatrix) -> Vec<TriangleIdentity> {
    let zeros = proper_zeros(mat);
    let mut found = Vec::new();
    let zero_at =
        |r: i64, c: i64| mat.in_polygon_signed(r, c) && mat.get(r as usize, c as usize).is_zero();
    for z in &zeros {
        let (r, c) = (z.position.0 as i64 - 1, z.position.1 as i64 - 1);
        // apex location for each pattern, given that z is the upper zero
        let candidates = [
            (1u8, (r + 1, c + 2), (r - 1, c)),
            (2u8, (r + 1, c - 1), (r - 1, c - 1)),
            (3u8, (r + 2, c + 1), (r, c)),
        ];
        for (pattern, other, apex) in candidates {
            if !zero_at(other.0, other.1) {
                continue;
            }
            let cells: Vec<(i64, i64)> = TRI_CELLS
                .iter()
                .map(|&(a, b)| (apex.0 + a, apex.1 + b))
                .collect();
            if !cells.iter().all(|&(rr, cc)| mat.in_polygon_signed(rr, cc)) {
                continue;
            }
            let weights = TRIANGLES[pattern as usize - 1];
            let anchor = weights.iter().position(|&w| w == 1).unwrap();
            let (ar, ac) = cells[anchor];
            let x = mat.get(ar as usize, ac as usize).clone();
            let values_hold = !x.is_zero()
                && cells
                    .iter()
                    .zip(weights)
                    .all(|(&(rr, cc), w)| *mat.get(rr as usize, cc as usize) == &x * w);
            let (mr, mc) = cells[1];
            let p = mat.point_at(mr as usize, mc as usize);
            let ip = mc;
            let mp = mat.m_prime();
            let row_f = (p.i + 1) * (mat.m - p.i);
            let col_f = (ip + 1) * (mp - ip);
            let j_f = (p.j + 1) * (mat.n - p.j);
            let parameters_hold = match pattern {
                1 => row_f == j_f,
                2 => col_f == row_f,
                _ => col_f == j_f,
            };
            found.push(TriangleIdentity {
                pattern,
                apex: (apex.0 as usize + 1, apex.1 as usize + 1),
                point: p,
                x,
                values_hold,
                parameters_hold,
            });
        }
    }
    found.sort_by_key(|t| (t.apex, t.pattern));
    found
}

/// Weyl reflection on every polygon cell:
/// c(m-i, n-j) (m-i)! (n-j)! (i+j-k)! = (-1)^k c(i,j) i! j! (J-i-j)!.
pub fn check_weyl(mat: &CGMatrix, factorials: &[BigInt]) -> Vec<Violation> {
    let mut out = Vec::new();
    let big_j = (mat.m + mat.n - mat.k) as usize;
    assert!(factorials.len() > big_j, "factorial table too short");
    let neg = mat.k % 2 == 1;
    let (mut lhs, mut rhs) = (BigInt::zero(), BigInt::zero());
    let last = mat.rows * mat.cols;
    for at in 0..last.div_ceil(2) {
        let (r, c) = (at / mat.cols, at % mat.cols);
        if !mat.in_polygon(r, c) {
            continue;
        }
        let p = mat.point_at(r, c);
        let (rr, cc) = (mat.rows - 1 - r, mat.cols - 1 - c);
        let (i, j) = (p.i as usize, p.j as usize);
        let (mi, nj) = ((mat.m - p.i) as usize, (mat.n - p.j) as usize);
        let ip = c;
        lhs.clone_from(mat.get(rr, cc));
        lhs *= &factorials[mi];
        lhs *= &factorials[nj];
        lhs *= &factorials[ip];
        rhs.clone_from(mat.get(r, c));
        rhs *= &factorials[i];
        rhs *= &factorials[j];
        rhs *= &factorials[big_j - i - j];
        if neg {
            rhs = -std::mem::take(&mut rhs);
        }
        if lhs != rhs {
            out.push(Violation {
                rule: "weyl",
                row: r + 1,
                col: c + 1,
                detail: format!("reflected cell ({}, {}) disagrees", rr + 1, cc + 1),
            });
        }
    }
    out
}

pub fn factorial_table(up_to: usize) -> Vec<BigInt> {
    let mut t = Vec::with_capacity(up_to + 1);
    let mut acc = BigInt::from(1);
    t.push(acc.clone());
    for v in 1..=up_to {
        acc *= v;
        t.push(acc.clone());
    }
    t
}

// ---------- rendering and serialization ----------

impl CGMatrix {
    /// Right-aligned text with corner cells blanked.
    pub fn render_text(&self) -> String {
        let cells: Vec<String> = (0..self.rows * self.cols)
            .map(|at| {
                if self.polygon_mask[at] {
                    self.entries[at].to_string()
                } else {
                    String::new()
                }
            })
            .collect();
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(1).max(1);
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row_slice(r).iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Reloads a CSV grid. The shape fixes m and m', and the count of nonzero
    /// leading entries in the first column fixes k.
    pub fn from_csv(text: &str) -> Result<CGMatrix> {
        let grid: Vec<Vec<BigInt>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split(',')
                    .map(|t| t.trim().parse::<BigInt>())
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| CgError::MalformedSymbol(format!("bad csv cell: {e}")))?;
        Self::from_grid(None, grid)
    }

    fn from_grid(shape: Option<(i64, i64, i64)>, grid: Vec<Vec<BigInt>>) -> Result<CGMatrix> {
        let rows = grid.len();
        let cols = grid.first().map(|r| r.len()).unwrap_or(0);
        if rows == 0 || cols == 0 || grid.iter().any(|r| r.len() != cols) {
            return Err(CgError::MalformedSymbol("ragged or empty matrix".into()));
        }
        let (m, n, k) = match shape {
            Some(s) => s,
            None => {
                let k = grid.iter().take_while(|r| !r[0].is_zero()).count() as i64 - 1;
                let m = rows as i64 - 1;
                (m, cols as i64 - 1 - m + 2 * k, k)
            }
        };
        check_shape(m, n, k)?;
        let mut mat = CGMatrix::blank(m, n, k);
        if mat.rows != rows || mat.cols != cols {
            return Err(CgError::Shape { m, n, k });
        }
        for (r, row) in grid.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                mat.set(r, c, v);
            }
        }
        Ok(mat)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = (0..self.rows)
            .map(|r| {
                serde_json::Value::Array(self.row_slice(r).iter().map(json::big_value).collect())
            })
            .collect();
        serde_json::json!({
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "rows": self.rows,
            "cols": self.cols,
            "entries": entries,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<CGMatrix> {
        let bad = |what: &str| CgError::MalformedSymbol(format!("matrix json: {what}"));
        let field = |name: &str| {
            v.get(name)
                .and_then(|x| x.as_i64())
                .ok_or_else(|| bad(name))
        };
        let (m, n, k) = (field("m")?, field("n")?, field("k")?);
        let grid = v
            .get("entries")
            .and_then(|e| e.as_array())
            .ok_or_else(|| bad("entries"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("row"))?
                    .iter()
                    .map(|x| json::value_big(x).ok_or_else(|| bad("entry")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_grid(Some((m, n, k)), grid)
    }

    /// Plain PGM zero map: 0 for zero polygon cells, 2 for nonzero ones,
    /// 1 outside the polygon.
    pub fn zeromap_pgm(&self) -> String {
        let mut out = format!("P2\n{} {}\n2\n", self.cols, self.rows);
        for r in 0..self.rows {
            let line: Vec<&str> = (0..self.cols)
                .map(|c| {
                    if !self.in_polygon(r, c) {
                        "1"
                    } else if self.get(r, c).is_zero() {
                        "0"
                    } else {
                        "2"
                    }
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CGMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(mat: &CGMatrix) -> Vec<Vec<i64>> {
        (0..mat.rows())
            .map(|r| {
                mat.row_slice(r)
                    .iter()
                    .map(|v| v.try_into().unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_shapes() {
        let a = build_matrix(3, 4, 2).unwrap();
        assert_eq!(
            grid(&a),
            vec![
                vec![3, 3, 3, 0],
                vec![-6, -3, 0, 3],
                vec![6, 0, -3, -3],
                vec![0, 6, 6, 3]
            ]
        );
        assert!(!a.in_polygon(0, 3));
        assert!(!a.in_polygon(3, 0));
        assert_eq!(
            grid(&build_matrix(2, 2, 2).unwrap()),
            vec![vec![1], vec![-1], vec![1]]
        );
        assert_eq!(
            grid(&build_matrix(2, 2, 0).unwrap()),
            vec![
                vec![1, 1, 1, 0, 0],
                vec![0, 1, 2, 3, 0],
                vec![0, 0, 1, 3, 6]
            ]
        );
    }

    #[test]
    fn bad_shape() {
        assert!(matches!(build_matrix(2, 3, 3), Err(CgError::Shape { .. })));
    }

    #[test]
    fn recurrence_fill_matches_sum() {
        for m in 0..10 {
            for n in 0..10 {
                for k in 0..=m.min(n) {
                    assert_eq!(
                        build_matrix(m, n, k).unwrap(),
                        build_matrix_by_sum(m, n, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn edges() {
        let e = polygon_edges(&build_matrix(4, 6, 3).unwrap());
        assert!(e.ok(), "{:?}", e.violations);
        assert_eq!(e.top, BigInt::from(4));
        assert_eq!(e.lower_left, BigInt::from(20));
        assert_eq!(e.right, BigInt::from(4));
        let e = polygon_edges(&build_matrix(2, 4, 2).unwrap());
        assert_eq!(
            (e.top.clone(), e.lower_left.clone()),
            (BigInt::from(1), BigInt::from(6))
        );
        assert!(e.ok());
        let e = polygon_edges(&build_matrix(5, 5, 5).unwrap());
        assert!(e.ok(), "{:?}", e.violations);
        assert_eq!(e.top, BigInt::from(1));
        for m in 0..9 {
            for n in 0..9 {
                for k in 0..=m.min(n) {
                    let e = polygon_edges(&build_matrix(m, n, k).unwrap());
                    assert!(e.ok(), "({m},{n},{k}) {:?}", e.violations);
                }
            }
        }
    }

    #[test]
    fn pascal_fault_injection() {
        let mut a = build_matrix(3, 4, 2).unwrap();
        assert!(check_pascal(&a).is_empty());
        assert!(check_pascal(&build_matrix(4, 2, 1).unwrap()).is_empty());
        let v = a.get(1, 2) + 1;
        a.set(1, 2, v);
        let bad: Vec<(usize, usize)> = check_pascal(&a).iter().map(|v| (v.row, v.col)).collect();
        // the corrupted cell itself, its right neighbour and its lower-right neighbour
        assert_eq!(bad, vec![(2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn reverse_recurrence() {
        assert!(check_reverse(&build_matrix(5, 4, 2).unwrap()).is_empty());
        assert!(check_reverse(&build_matrix(10, 10, 5).unwrap()).is_empty());
        let mut a = build_matrix(5, 4, 2).unwrap();
        let v = a.get(2, 2) - 3;
        a.set(2, 2, v);
        assert!(!check_reverse(&a).is_empty());
    }

    #[test]
    fn zeros_and_censorship() {
        let z: Vec<_> = proper_zeros(&build_matrix(4, 6, 3).unwrap())
            .iter()
            .map(|z| z.position)
            .collect();
        assert_eq!(z, vec![(2, 4), (3, 3), (4, 2)]);
        assert!(proper_zeros(&build_matrix(2, 4, 2).unwrap()).is_empty());
        let z = proper_zeros(&build_matrix(4, 2, 1).unwrap());
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].point, ParamPoint::new(4, 2, 1, 2, 1));

        let m441 = build_matrix(4, 4, 1).unwrap();
        assert_eq!(proper_zeros(&m441).len(), 3);
        assert!(check_censorship(&m441).is_empty());
        let m16 = build_matrix(16, 16, 8).unwrap();
        assert_eq!(proper_zeros(&m16).len(), 12);
        assert!(check_censorship(&m16).is_empty());
    }

    #[test]
    fn censorship_catches_horizontal_pair() {
        let mut a = build_matrix(6, 6, 3).unwrap();
        a.set(3, 2, BigInt::zero());
        a.set(3, 3, BigInt::zero());
        assert!(check_censorship(&a)
            .iter()
            .any(|v| v.detail.starts_with("E ")));
    }

    #[test]
    fn triangles() {
        let t = check_zero_pair_triangles(&build_matrix(3, 4, 2).unwrap());
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].pattern, 2);
        assert!(t[0].holds());
        for (m, n, k) in [(10, 10, 5), (14, 14, 7)] {
            let t = check_zero_pair_triangles(&build_matrix(m, n, k).unwrap());
            assert!(!t.is_empty());
            assert!(t.iter().all(|t| t.holds()), "{t:?}");
            let kinds: std::collections::BTreeSet<u8> = t.iter().map(|t| t.pattern).collect();
            assert_eq!(kinds.len(), 3, "all three patterns in M({m},{n},{k})");
        }
    }

    #[test]
    fn weyl_all_cells() {
        let f = factorial_table(40);
        for m in 0..12 {
            for n in 0..12 {
                for k in 0..=m.min(n) {
                    assert!(check_weyl(&build_matrix(m, n, k).unwrap(), &f).is_empty());
                }
            }
        }
    }

    #[test]
    fn text_and_csv() {
        let a = build_matrix(3, 4, 2).unwrap();
        assert_eq!(
            a.render_text(),
            " 3  3  3\n-6 -3  0  3\n 6  0 -3 -3\n    6  6  3\n"
        );
        let back = CGMatrix::from_csv(&a.to_csv()).unwrap();
        assert_eq!(back, a);
        let big = build_matrix(60, 50, 20).unwrap();
        assert_eq!(CGMatrix::from_csv(&big.to_csv()).unwrap(), big);
        let text = serde_json::to_string(&big.to_json()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(CGMatrix::from_json(&v).unwrap(), big);
    }

    #[test]
    fn zeromap() {
        let pgm = build_matrix(2, 4, 2).unwrap().zeromap_pgm();
        assert_eq!(pgm, "P2\n3 3\n2\n2 2 2\n2 2 2\n2 2 2\n");
    }
}
