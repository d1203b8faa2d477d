//! Range scans for proper zeros, their classification, and the checks on
//! M(2k, 2k, k).
//!
//! Matrices are swept modulo a 62-bit prime; every residue-zero cell is then
//! confirmed with the exact sum, so the zero set is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::central::{classify_parity, Case};
use crate::coeff::eval_c;
use crate::error::{CgError, Result};
use crate::lattice::{family_label, FamilyLabel};
use crate::point::{regge_unchecked, ParamPoint, ReggeSymbol};
use crate::symmetry::{apply_unchecked, d12_canonical, d12_element_transport, SymmetryElement};

/// Environment variable holding the memory cap in megabytes.
pub const MEMORY_CAP_ENV: &str = "CGMAT_MEMORY_CAP_MB";
pub const DEFAULT_MEMORY_CAP_MB: u64 = 2048;

const PRIME: u64 = (1 << 62) - 57;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Factorials and inverse factorials modulo the prime.
struct ModBinomials {
    fact: Vec<u64>,
    inv: Vec<u64>,
}

impl ModBinomials {
    fn new(max: usize) -> Self {
        let mut fact = vec![1u64; max + 1];
        for i in 1..=max {
            fact[i] = mul_mod(fact[i - 1], i as u64);
        }
        let mut inv = vec![1u64; max + 1];
        inv[max] = pow_mod(fact[max], PRIME - 2);
        for i in (1..=max).rev() {
            inv[i - 1] = mul_mod(inv[i], i as u64);
        }
        ModBinomials { fact, inv }
    }

    fn binomial(&self, a: i64, b: i64) -> u64 {
        if b < 0 || a < b {
            return 0;
        }
        let (a, b) = (a as usize, b as usize);
        mul_mod(self.fact[a], mul_mod(self.inv[b], self.inv[a - b]))
    }
}

/// Interior cells of M(m, n, k) whose value is zero, confirmed exactly.
/// Also returns the number of residue-zero cells that were not zeros.
fn exact_proper_zeros(m: i64, n: i64, k: i64, binom: &ModBinomials) -> (Vec<ParamPoint>, usize) {
    let mp = m + n - 2 * k;
    let (rows, cols) = ((m + 1) as usize, (mp + 1) as usize);
    let mut cur = vec![0u64; rows];
    let mut next = vec![0u64; rows];
    for i in 0..=k.min(m) {
        let v = mul_mod(binom.binomial(m - i, k - i), binom.binomial(n - k + i, i));
        cur[i as usize] = if i % 2 == 1 && v != 0 { PRIME - v } else { v };
    }
    let mut zeros = Vec::new();
    let mut rejected = 0;
    for x in 1..cols as i64 {
        // rows i with 0 <= i + j - k = x, 0 <= j <= n: i in [x + k - n, x + k]
        let lo = (x + k - n).max(0);
        let hi = (x + k).min(m);
        for r in 0..rows {
            next[r] = 0;
        }
        for i in lo..=hi {
            let r = i as usize;
            let mut v = cur[r];
            if r > 0 {
                v += cur[r - 1];
                if v >= PRIME {
                    v -= PRIME;
                }
            }
            next[r] = v;
            let j = x + k - i;
            if v == 0 && i > 0 && i < m && j > 0 && j < n && x < mp {
                let p = ParamPoint::new(m, n, k, i, j);
                if eval_c(&p).expect("cone point").is_zero() {
                    zeros.push(p);
                } else {
                    rejected += 1;
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    (zeros, rejected)
}

/// Proper zeros of M(m, n, k), exactly, by the residue sweep.
pub fn matrix_proper_zeros(m: i64, n: i64, k: i64) -> Result<Vec<ParamPoint>> {
    crate::point::check_shape(m, n, k)?;
    let binom = ModBinomials::new((m + n + 2) as usize);
    let mut z = exact_proper_zeros(m, n, k, &binom).0;
    z.sort();
    Ok(z)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroRecord {
    #[serde(flatten)]
    pub point: ParamPoint,
    #[serde(rename = "J")]
    pub big_j: i64,
    pub regge: ReggeSymbol,
    pub trivial: bool,
    pub family: FamilyLabel,
}

/// A symmetry fixing some image of `p` while reversing the sign of the value.
fn sign_reversing_stabilizer(p: &ParamPoint) -> Option<(ParamPoint, SymmetryElement)> {
    let orbit: BTreeSet<ParamPoint> = SymmetryElement::all()
        .iter()
        .map(|g| apply_unchecked(g, p))
        .collect();
    let d12 = SymmetryElement::d12();
    for q in &orbit {
        for g in &d12 {
            if *g == SymmetryElement::IDENTITY || apply_unchecked(g, q) != *q {
                continue;
            }
            let rel = d12_element_transport(g, q).expect("cone point");
            let factor = rel.scale * num_bigint::BigInt::from(rel.sign);
            if !factor.is_one() {
                return Some((*q, *g));
            }
        }
    }
    None
}

/// True when some image of p under the full group is fixed by a symmetry that
/// changes the sign of the value, forcing the value to vanish. This covers the
/// zero centres, the diagonal zeros, and all their images.
pub fn is_trivial_zero(p: &ParamPoint) -> bool {
    sign_reversing_stabilizer(p).is_some()
}

/// Label of p from its offset to the centre of its normalised matrix.
pub fn family_of(p: &ParamPoint) -> FamilyLabel {
    let parity = classify_parity(p.m, p.n, p.k).expect("valid shape");
    let q = apply_unchecked(&parity.normalization, p);
    let mp = q.m_prime();
    let (r0, c0) = match parity.case_id {
        Case::EEE | Case::EEO => (q.m / 2, mp / 2),
        Case::OEE | Case::OEO => ((q.m + 1) / 2, (mp + 1) / 2),
    };
    family_label(parity.case_id, q.i - r0, q.i_prime() - c0)
}

fn is_proper(p: &ParamPoint) -> bool {
    let x = p.i + p.j - p.k;
    crate::point::in_cone(p)
        && p.i > 0
        && p.i < p.m
        && p.j > 0
        && p.j < p.n
        && x > 0
        && x < p.m_prime()
}

pub fn classify_zero(p: &ParamPoint) -> Result<ZeroRecord> {
    if !is_proper(p) {
        return Err(CgError::Condition(format!(
            "{p} is not an interior point of its matrix"
        )));
    }
    if !eval_c(p)?.is_zero() {
        return Err(CgError::NotAZero(*p));
    }
    Ok(record(p))
}

fn record(p: &ParamPoint) -> ZeroRecord {
    ZeroRecord {
        point: *p,
        big_j: p.big_j(),
        regge: regge_unchecked(p),
        trivial: is_trivial_zero(p),
        family: family_of(p),
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanCounts {
    pub zero_classes: usize,
    pub trivial: usize,
    pub nontrivial: usize,
    pub by_family: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub max_j: i64,
    /// Shapes (m, n, k) scanned, one per class of column permutations.
    pub shapes_scanned: usize,
    pub cells_swept: u64,
    pub counts: ScanCounts,
    /// Orbit images of cataloged zeros missing from the catalog (always 0 for a sound scan).
    pub closure_violations: usize,
    /// Residue-zero cells whose exact value was nonzero.
    pub residue_false_hits: usize,
    pub elapsed_ms: u128,
}

fn memory_cap_mb() -> u64 {
    std::env::var(MEMORY_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MEMORY_CAP_MB)
}

/// Representative shapes: top rows a <= b <= c with a + b + c <= max_j, placed
/// so the matrix is smallest: m - k = a, k = b, n - k = c.
fn representative_shapes(max_j: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 0..=max_j {
        for b in a..=max_j - a {
            for c in b..=max_j - a - b {
                out.push((a + b, b + c, b));
            }
        }
    }
    out
}

/// Rough peak memory of a scan in megabytes.
pub fn estimate_scan_mb(max_j: i64) -> u64 {
    // two residue columns of the tallest matrix, plus about six zero classes
    // per unit of J^2 at a few hundred bytes each
    let j = max_j.max(0) as u64;
    let columns = 16 * (j + 1);
    let records = 6 * j * j * 400;
    (columns + records) / 1_000_000 + 1
}

/// All proper zeros with J <= max_j, one record per class under the 12-element
/// subgroup, sorted by (J, m, n, k, i, j).
pub fn scan_range(max_j: i64) -> Result<(ScanReport, Vec<ZeroRecord>)> {
    let start = Instant::now();
    let cap = memory_cap_mb();
    let estimated = estimate_scan_mb(max_j);
    if estimated > cap {
        return Err(CgError::Resource {
            estimated_mb: estimated,
            cap_mb: cap,
        });
    }
    let shapes = if max_j >= 0 {
        representative_shapes(max_j)
    } else {
        Vec::new()
    };
    let binom = ModBinomials::new((2 * max_j.max(0) + 2) as usize);
    let per_shape: Vec<(Vec<ParamPoint>, usize, u64)> = shapes
        .par_iter()
        .map(|&(m, n, k)| {
            let (z, rejected) = exact_proper_zeros(m, n, k, &binom);
            let cells = ((m + 1) * (m + n - 2 * k + 1)) as u64;
            (z, rejected, cells)
        })
        .collect();
    let mut classes = BTreeSet::new();
    let mut false_hits = 0;
    let mut cells_swept = 0;
    for (zeros, rejected, cells) in per_shape {
        false_hits += rejected;
        cells_swept += cells;
        classes.extend(zeros.iter().map(d12_canonical));
    }
    let mut closure_violations = 0;
    for p in &classes {
        for g in SymmetryElement::all() {
            if !classes.contains(&d12_canonical(&apply_unchecked(g, p))) {
                closure_violations += 1;
            }
        }
    }
    let mut records: Vec<ZeroRecord> = classes.par_iter().map(record).collect();
    records.sort_by_key(|r| (r.big_j, r.point));
    let mut counts = ScanCounts {
        zero_classes: records.len(),
        ..Default::default()
    };
    for r in &records {
        if r.trivial {
            counts.trivial += 1;
        } else {
            counts.nontrivial += 1;
        }
        *counts.by_family.entry(r.family.to_string()).or_default() += 1;
    }
    let report = ScanReport {
        max_j,
        shapes_scanned: shapes.len(),
        cells_swept,
        counts,
        closure_violations,
        residue_false_hits: false_hits,
        elapsed_ms: start.elapsed().as_millis(),
    };
    Ok((report, records))
}

/// One JSON object per line: {m, n, k, i, j, J, regge, trivial, family}.
pub fn catalog_jsonl(records: &[ZeroRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub k: i64,
    pub proper_zeros: usize,
    /// Zeros off the three diagonals (odd k), or all zeros (even k).
    pub off_diagonal: usize,
    /// Pairs of zeros at a second-neighbour offset (NE/SW or a rotation of it).
    pub doublets: usize,
    pub holds: bool,
    pub detail: String,
}

/// Second-neighbour offsets: NE/SW (-1, 1) and its two rotations. Zeros
/// closer than this are forbidden by censorship.
const DOUBLET_OFFSETS: [(i64, i64); 3] = [(-1, 1), (1, 2), (2, 1)];

fn on_star_diagonal(p: &ParamPoint) -> bool {
    let k = p.k;
    p.j == 3 * k - 2 * p.i || p.i == 3 * k - 2 * p.j || p.i == p.j
}

/// Zeros of M(2k, 2k, k) for one k.
pub fn conjecture_verdict(k: i64) -> Result<ConjectureVerdict> {
    let zeros = matrix_proper_zeros(2 * k, 2 * k, k)?;
    let set: BTreeSet<(i64, i64)> = zeros.iter().map(|p| (p.i, p.i_prime())).collect();
    let doublets = set
        .iter()
        .map(|&(r, c)| {
            DOUBLET_OFFSETS
                .iter()
                .filter(|(dr, dc)| set.contains(&(r + dr, c + dc)))
                .count()
        })
        .sum::<usize>();
    if k % 2 == 1 {
        let off = zeros.iter().filter(|p| !on_star_diagonal(p)).count();
        let holds = off == 0;
        return Ok(ConjectureVerdict {
            k,
            proper_zeros: zeros.len(),
            off_diagonal: off,
            doublets,
            holds,
            detail: if holds {
                "all proper zeros on the three diagonals".into()
            } else {
                format!("{off} proper zeros off the diagonals")
            },
        });
    }
    let (holds, detail) = if k == 8 {
        let paired = set.iter().all(|&(r, c)| {
            DOUBLET_OFFSETS
                .iter()
                .filter(|(dr, dc)| {
                    set.contains(&(r + dr, c + dc)) || set.contains(&(r - dr, c - dc))
                })
                .count()
                == 1
        });
        let symmetric = SymmetryElement::d12().iter().all(|g| {
            let image: BTreeSet<ParamPoint> = zeros.iter().map(|p| apply_unchecked(g, p)).collect();
            image == zeros.iter().copied().collect()
        });
        let ok = zeros.len() == 12 && doublets == 6 && paired && symmetric;
        (
            ok,
            if ok {
                "six NE/SW doublets forming a hexagon".into()
            } else {
                format!(
                    "{} zeros, {doublets} doublets, symmetric {symmetric}",
                    zeros.len()
                )
            },
        )
    } else if zeros.is_empty() {
        (true, "no proper zeros".into())
    } else {
        (false, format!("{} proper zeros", zeros.len()))
    };
    Ok(ConjectureVerdict {
        k,
        proper_zeros: zeros.len(),
        off_diagonal: if k % 2 == 0 { zeros.len() } else { 0 },
        doublets,
        holds,
        detail,
    })
}

/// Verdicts for k = 2..=max_k.
pub fn check_conjectures(max_k: i64) -> Result<Vec<ConjectureVerdict>> {
    if max_k < 2 {
        return Err(CgError::Condition(format!(
            "max_k must be at least 2, got {max_k}"
        )));
    }
    (2..=max_k)
        .into_par_iter()
        .map(conjecture_verdict)
        .collect()
}
