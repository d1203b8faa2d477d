//! The 72 Regge symmetries and value transport along the 12-element column/row subgroup.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{factorial, sign};
use crate::error::{CgError, Result};
use crate::point::{regge_to_point, regge_unchecked, require_cone, ParamPoint, ReggeSymbol};

type Perm3 = [usize; 3];

const PERMS: [Perm3; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [2, 1, 0],
    [0, 2, 1],
    [2, 0, 1],
    [1, 2, 0],
];

/// A row permutation, a column permutation and an optional transpose.
///
/// Acting on a symbol S: first `T[r][c] = S[row_perm[r]][col_perm[c]]`, then
/// transpose if `transposed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SymmetryElement {
    pub row_perm: Perm3,
    pub col_perm: Perm3,
    pub transposed: bool,
}

impl SymmetryElement {
    pub const IDENTITY: SymmetryElement = SymmetryElement::new([0, 1, 2], [0, 1, 2], false);
    /// Swap of the first two columns.
    pub const C12: SymmetryElement = SymmetryElement::new([0, 1, 2], [1, 0, 2], false);
    pub const C13: SymmetryElement = SymmetryElement::new([0, 1, 2], [2, 1, 0], false);
    pub const C23: SymmetryElement = SymmetryElement::new([0, 1, 2], [0, 2, 1], false);
    /// Cyclic column shift: new columns are (old 3, old 1, old 2).
    pub const C123: SymmetryElement = SymmetryElement::new([0, 1, 2], [2, 0, 1], false);
    /// Swap of the last two rows (Weyl reflection).
    pub const R23: SymmetryElement = SymmetryElement::new([0, 2, 1], [0, 1, 2], false);
    pub const TRANSPOSE: SymmetryElement = SymmetryElement::new([0, 1, 2], [0, 1, 2], true);

    pub const fn new(row_perm: Perm3, col_perm: Perm3, transposed: bool) -> Self {
        SymmetryElement {
            row_perm,
            col_perm,
            transposed,
        }
    }

    /// All 72 elements in a fixed order, identity first.
    pub fn all() -> &'static [SymmetryElement] {
        static ALL: OnceLock<Vec<SymmetryElement>> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut v = Vec::with_capacity(72);
            for transposed in [false, true] {
                for rp in PERMS {
                    for cp in PERMS {
                        v.push(SymmetryElement::new(rp, cp, transposed));
                    }
                }
            }
            v
        })
    }

    /// The twelve elements without transpose whose row part fixes the first row.
    pub fn d12() -> Vec<SymmetryElement> {
        Self::all().iter().copied().filter(|g| g.in_d12()).collect()
    }

    pub fn in_d12(&self) -> bool {
        !self.transposed && self.row_perm[0] == 0
    }

    /// Cell permutation: output cell p reads input cell `perm9()[p]`.
    fn perm9(&self) -> [usize; 9] {
        let mut out = [0; 9];
        for r in 0..3 {
            for c in 0..3 {
                let (rr, cc) = if self.transposed { (c, r) } else { (r, c) };
                // after transpose, output (r,c) holds pre-transpose (c,r)
                out[r * 3 + c] = self.row_perm[rr] * 3 + self.col_perm[cc];
            }
        }
        out
    }

    pub fn act(&self, s: &ReggeSymbol) -> ReggeSymbol {
        let p = self.perm9();
        let flat: Vec<i64> = s.entries.iter().flatten().copied().collect();
        let mut out = [[0; 3]; 3];
        for (at, &src) in p.iter().enumerate() {
            out[at / 3][at % 3] = flat[src];
        }
        ReggeSymbol::new(out)
    }

    /// `self.compose(other)` acts as `other` first, then `self`.
    pub fn compose(&self, other: &SymmetryElement) -> SymmetryElement {
        let (g, h) = (self.perm9(), other.perm9());
        let mut want = [0; 9];
        for p in 0..9 {
            want[p] = h[g[p]];
        }
        *Self::all()
            .iter()
            .find(|e| e.perm9() == want)
            .expect("group is closed under composition")
    }

    pub fn inverse(&self) -> SymmetryElement {
        *Self::all()
            .iter()
            .find(|e| e.compose(self) == Self::IDENTITY)
            .expect("every element has an inverse")
    }

    pub fn order(&self) -> usize {
        let mut acc = *self;
        let mut n = 1;
        while acc != Self::IDENTITY {
            acc = self.compose(&acc);
            n += 1;
        }
        n
    }

    pub fn name(&self) -> String {
        let named = [
            (Self::IDENTITY, "id"),
            (Self::C12, "C12"),
            (Self::C13, "C13"),
            (Self::C23, "C23"),
            (Self::C123, "C123"),
            (Self::R23, "R23"),
            (Self::TRANSPOSE, "T"),
        ];
        if let Some((_, n)) = named.iter().find(|(g, _)| g == self) {
            return n.to_string();
        }
        format!(
            "rows{:?}cols{:?}{}",
            self.row_perm.map(|v| v + 1),
            self.col_perm.map(|v| v + 1),
            if self.transposed { "T" } else { "" }
        )
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Parameter transport: permute the symbol and read the point back.
pub fn apply_symmetry(g: &SymmetryElement, p: &ParamPoint) -> Result<ParamPoint> {
    require_cone(p)?;
    Ok(apply_unchecked(g, p))
}

pub(crate) fn apply_unchecked(g: &SymmetryElement, p: &ParamPoint) -> ParamPoint {
    regge_to_point(&g.act(&regge_unchecked(p)))
}

/// c(target) = sign * scale * c(source).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueRelation {
    pub source: ParamPoint,
    pub target: ParamPoint,
    pub sign: i64,
    pub scale: BigRational,
}

impl ValueRelation {
    fn identity(p: ParamPoint) -> Self {
        ValueRelation {
            source: p,
            target: p,
            sign: 1,
            scale: BigRational::one(),
        }
    }

    /// Chains `self` (source -> mid) with `next` (mid -> target).
    pub fn then(&self, next: &ValueRelation) -> ValueRelation {
        assert_eq!(self.target, next.source, "relations do not chain");
        ValueRelation {
            source: self.source,
            target: next.target,
            sign: self.sign * next.sign,
            scale: &self.scale * &next.scale,
        }
    }

    /// Predicted value at the target.
    pub fn transport(&self, source_value: &BigInt) -> BigRational {
        BigRational::from_integer(source_value * self.sign) * &self.scale
    }

    /// Checks the relation with the given values, clearing denominators.
    pub fn holds_for(&self, source_value: &BigInt, target_value: &BigInt) -> bool {
        let lhs = target_value * self.scale.denom();
        let rhs = source_value * self.sign * self.scale.numer();
        lhs == rhs
    }
}

/// The Weyl reflection (i, j) -> (m-i, n-j):
/// c(m-i, n-j) = (-1)^k [i! j! (J-i-j)!] / [(m-i)! (n-j)! (i+j-k)!] c(i, j).
pub fn weyl_relation(p: &ParamPoint) -> Result<ValueRelation> {
    require_cone(p)?;
    let ParamPoint { m, n, k, i, j } = *p;
    let target = ParamPoint::new(m, n, k, m - i, n - j);
    require_cone(&target)?;
    let big_j = p.big_j();
    let num = factorial(i) * factorial(j) * factorial(big_j - i - j);
    let den = factorial(m - i) * factorial(n - j) * factorial(i + j - k);
    Ok(ValueRelation {
        source: *p,
        target,
        sign: sign(k),
        scale: BigRational::new(num, den),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Generator {
    C12,
    C13,
    C123,
    R23,
}

impl Generator {
    pub fn element(self) -> SymmetryElement {
        match self {
            Generator::C12 => SymmetryElement::C12,
            Generator::C13 => SymmetryElement::C13,
            Generator::C123 => SymmetryElement::C123,
            Generator::R23 => SymmetryElement::R23,
        }
    }
}

/// Value transport along one of the four stated generators.
pub fn d12_value_transport(name: Generator, p: &ParamPoint) -> Result<ValueRelation> {
    require_cone(p)?;
    let ParamPoint { m, n, k, i, j } = *p;
    let mp = p.m_prime();
    let ip = p.i_prime();
    let (target, s) = match name {
        Generator::C12 => (ParamPoint::new(n, m, k, j, i), sign(k)),
        Generator::C13 => (ParamPoint::new(mp, n, n - k, mp - ip, j), sign(n - j)),
        Generator::C123 => (ParamPoint::new(mp, m, m - k, mp - ip, i), sign(m - k + i)),
        Generator::R23 => return weyl_relation(p),
    };
    debug_assert_eq!(target, apply_unchecked(&name.element(), p));
    Ok(ValueRelation {
        source: *p,
        target,
        sign: s,
        scale: BigRational::one(),
    })
}

/// Words in the generators realising each element of the 12-element subgroup.
fn d12_words() -> &'static Vec<(SymmetryElement, Vec<Generator>)> {
    static WORDS: OnceLock<Vec<(SymmetryElement, Vec<Generator>)>> = OnceLock::new();
    WORDS.get_or_init(|| {
        let gens = [
            Generator::C12,
            Generator::C13,
            Generator::C123,
            Generator::R23,
        ];
        let mut found: Vec<(SymmetryElement, Vec<Generator>)> =
            vec![(SymmetryElement::IDENTITY, Vec::new())];
        let mut frontier = 0;
        while frontier < found.len() {
            let (g, word) = found[frontier].clone();
            for gen in gens {
                let next = gen.element().compose(&g);
                if !found.iter().any(|(e, _)| *e == next) {
                    let mut w = word.clone();
                    w.push(gen);
                    found.push((next, w));
                }
            }
            frontier += 1;
        }
        found
    })
}

/// Exact value transport for any element of the 12-element subgroup,
/// accumulated along a shortest generator word.
pub fn d12_element_transport(g: &SymmetryElement, p: &ParamPoint) -> Result<ValueRelation> {
    require_cone(p)?;
    let word = d12_words()
        .iter()
        .find(|(e, _)| e == g)
        .map(|(_, w)| w)
        .ok_or_else(|| {
            CgError::MalformedSymbol(format!("{g} is outside the 12-element subgroup"))
        })?;
    let mut rel = ValueRelation::identity(*p);
    for gen in word {
        let step = d12_value_transport(*gen, &rel.target)?;
        rel = rel.then(&step);
    }
    debug_assert_eq!(rel.target, apply_unchecked(g, p));
    Ok(rel)
}

/// All images of `p` under the 72 elements.
pub fn full_orbit(p: &ParamPoint) -> Result<BTreeSet<ParamPoint>> {
    require_cone(p)?;
    Ok(SymmetryElement::all()
        .iter()
        .map(|g| apply_unchecked(g, p))
        .collect())
}

pub fn d12_orbit(p: &ParamPoint) -> Result<BTreeSet<ParamPoint>> {
    require_cone(p)?;
    Ok(SymmetryElement::d12()
        .iter()
        .map(|g| apply_unchecked(g, p))
        .collect())
}

/// The smallest image under the 12-element subgroup, used as a canonical key.
pub fn d12_canonical(p: &ParamPoint) -> ParamPoint {
    SymmetryElement::d12()
        .iter()
        .map(|g| apply_unchecked(g, p))
        .min()
        .expect("subgroup is nonempty")
}

/// Proper zeros of M(2k, 2k, k) on the three diagonals nearest the centre,
/// closed under the full group.
pub fn star_points(k: i64) -> Result<BTreeSet<ParamPoint>> {
    if k <= 1 || k % 2 == 0 {
        return Err(CgError::Domain(ParamPoint::new(2 * k, 2 * k, k, k, k)));
    }
    let m = 2 * k;
    let nearest = [
        (k + 1, k + 1),
        (k - 1, k - 1),
        (k + 1, k - 2),
        (k - 1, k + 2),
        (k - 2, k + 1),
        (k + 2, k - 1),
    ];
    let mut out = BTreeSet::new();
    for (i, j) in nearest {
        let p = ParamPoint::new(m, m, k, i, j);
        if crate::coeff::eval_c(&p)?.is_zero() {
            out.extend(full_orbit(&p)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitEntry {
    pub m: i64,
    pub n: i64,
    pub k: i64,
    pub i: i64,
    pub j: i64,
    pub regge: ReggeSymbol,
}

pub fn orbit_json<'a>(points: impl IntoIterator<Item = &'a ParamPoint>) -> serde_json::Value {
    let entries: Vec<OrbitEntry> = points
        .into_iter()
        .map(|p| OrbitEntry {
            m: p.m,
            n: p.n,
            k: p.k,
            i: p.i,
            j: p.j,
            regge: regge_unchecked(p),
        })
        .collect();
    serde_json::to_value(entries).expect("orbit serializes")
}
