use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CgError, Result};

/// A coefficient location `(m, n, k, i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamPoint {
    pub m: i64,
    pub n: i64,
    pub k: i64,
    pub i: i64,
    pub j: i64,
}

impl ParamPoint {
    pub const fn new(m: i64, n: i64, k: i64, i: i64, j: i64) -> Self {
        ParamPoint { m, n, k, i, j }
    }

    /// m' = m + n - 2k, the column count minus one.
    pub fn m_prime(&self) -> i64 {
        self.m + self.n - 2 * self.k
    }

    /// i' = i + j - k, the 0-based column index.
    pub fn i_prime(&self) -> i64 {
        self.i + self.j - self.k
    }

    pub fn big_j(&self) -> i64 {
        self.m + self.n - self.k
    }

    /// 1-based (row, col) inside M(m, n, k).
    pub fn position(&self) -> (usize, usize) {
        ((self.i + 1) as usize, (self.i_prime() + 1) as usize)
    }

    pub fn triple(&self) -> (i64, i64, i64) {
        (self.m, self.n, self.k)
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.m, self.n, self.k, self.i, self.j
        )
    }
}

pub fn valid_shape(m: i64, n: i64, k: i64) -> bool {
    m >= 0 && n >= 0 && k >= 0 && k <= m.min(n)
}

pub fn check_shape(m: i64, n: i64, k: i64) -> Result<()> {
    if valid_shape(m, n, k) {
        Ok(())
    } else {
        Err(CgError::Shape { m, n, k })
    }
}

pub fn in_cone(p: &ParamPoint) -> bool {
    let ip = p.i_prime();
    valid_shape(p.m, p.n, p.k)
        && (0..=p.m).contains(&p.i)
        && (0..=p.n).contains(&p.j)
        && ip >= 0
        && ip <= p.m_prime()
}

pub(crate) fn require_cone(p: &ParamPoint) -> Result<()> {
    if in_cone(p) {
        Ok(())
    } else {
        Err(CgError::Domain(*p))
    }
}

/// The 3x3 magic square parametrising a cone point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReggeSymbol {
    pub entries: [[i64; 3]; 3],
}

impl ReggeSymbol {
    pub fn new(entries: [[i64; 3]; 3]) -> Self {
        ReggeSymbol { entries }
    }

    pub fn line_sum(&self) -> i64 {
        self.entries[0].iter().sum()
    }

    pub fn is_magic(&self) -> bool {
        let s = self.line_sum();
        let rows = self.entries.iter().all(|r| r.iter().sum::<i64>() == s);
        let cols = (0..3).all(|c| (0..3).map(|r| self.entries[r][c]).sum::<i64>() == s);
        rows && cols
    }

    pub fn transpose(&self) -> Self {
        let e = &self.entries;
        let mut out = [[0; 3]; 3];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = e[c][r];
            }
        }
        ReggeSymbol::new(out)
    }

    pub fn min_entry(&self) -> i64 {
        self.entries.iter().flatten().copied().min().unwrap_or(0)
    }
}

impl fmt::Display for ReggeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

pub fn to_regge(p: &ParamPoint) -> Result<ReggeSymbol> {
    require_cone(p)?;
    Ok(regge_unchecked(p))
}

pub(crate) fn regge_unchecked(p: &ParamPoint) -> ReggeSymbol {
    let ParamPoint { m, n, k, i, j } = *p;
    ReggeSymbol::new([
        [n - k, m - k, k],
        [i, j, m + n - i - j - k],
        [m - i, n - j, i + j - k],
    ])
}

pub fn from_regge(r: &ReggeSymbol) -> Result<ParamPoint> {
    if r.min_entry() < 0 {
        return Err(CgError::MalformedSymbol(format!("negative entry in {r}")));
    }
    if !r.is_magic() {
        return Err(CgError::MalformedSymbol(format!(
            "unequal line sums in {r}"
        )));
    }
    Ok(regge_to_point(r))
}

pub(crate) fn regge_to_point(r: &ReggeSymbol) -> ParamPoint {
    let e = &r.entries;
    let k = e[0][2];
    ParamPoint::new(e[0][1] + k, e[0][0] + k, k, e[1][0], e[1][1])
}
