//! Abstract crystal arithmetic: `Z ∪ {-∞}` statistics, elementary crystals
//! `B_i`, and the signature rule for tensor products of arbitrarily many
//! factors.
//!
//! A crystal element exposes, for each index `i`, the statistics `φ_i`, `ε_i`
//! (possibly `-∞`) and the pairing `⟨h_i, wt⟩` of its weight, plus the raising
//! and lowering operators. The multi-factor formulas
//!
//! ```text
//! φ_i(b_1 ⊗ … ⊗ b_k) = max_j ( φ_i(b_j) + Σ_{l>j} ⟨h_i, wt b_l⟩ )
//! ε_i(b_1 ⊗ … ⊗ b_k) = max_j ( ε_i(b_j) - Σ_{l<j} ⟨h_i, wt b_l⟩ )
//! ```
//!
//! reduce the two-factor rule by induction; the lowering operator acts on the
//! rightmost factor attaining the `φ`-maximum and the raising operator on the
//! leftmost factor attaining the `ε`-maximum. Both tie-breaks are forced by
//! the two-factor rule and are cross-checked against it by property tests.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::cartan::CartanData;

/// An integer extended by the bottom element `-∞`, used for `φ_i`/`ε_i`.
///
/// `-∞ + k = -∞`, and `-∞` is smaller than every integer. Kept as a dedicated
/// type so that no sentinel integer can silently overflow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
}

impl ExtInt {
    pub const ZERO: ExtInt = ExtInt::Finite(0);

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::NegInf => None,
            ExtInt::Finite(v) => Some(v),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, ExtInt::NegInf)
    }

    /// Panics on `-∞`; for callers that have already established finiteness.
    pub fn expect_finite(self, what: &str) -> i64 {
        match self {
            ExtInt::Finite(v) => v,
            ExtInt::NegInf => panic!("{what} is -inf"),
        }
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: i64) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::NegInf,
            ExtInt::Finite(v) => ExtInt::Finite(v + rhs),
        }
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::NegInf, ExtInt::NegInf) => Ordering::Equal,
            (ExtInt::NegInf, ExtInt::Finite(_)) => Ordering::Less,
            (ExtInt::Finite(_), ExtInt::NegInf) => Ordering::Greater,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Which of the two crystal operators to apply: `E` is the raising operator
/// `ẽ_i`, `F` the lowering operator `f̃_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    E,
    F,
}

impl std::str::FromStr for Dir {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "e" | "E" => Ok(Dir::E),
            "f" | "F" => Ok(Dir::F),
            other => Err(crate::error::Error::InvalidInput(format!(
                "operator must be e or f, got {other:?}"
            ))),
        }
    }
}

/// One factor of a tensor product: statistics and operators for every index.
///
/// `apply` returns `None` for the ideal crystal element 0.
pub trait CrystalElem: Clone {
    fn phi(&self, cd: &CartanData, i: usize) -> ExtInt;
    fn eps(&self, cd: &CartanData, i: usize) -> ExtInt;
    /// `⟨h_i, wt b⟩`.
    fn pair_wt(&self, cd: &CartanData, i: usize) -> i64;
    fn apply(&self, cd: &CartanData, i: usize, dir: Dir) -> Option<Self>;
}

/// The element `b_i(m)` of the elementary crystal `B_i`:
/// `wt = m·α_i`, `φ_i = m`, `ε_i = -m`, and `φ_j = ε_j = -∞` for `j ≠ i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryFactor {
    pub index: usize,
    pub level: i64,
}

impl ElementaryFactor {
    pub fn new(index: usize, level: i64) -> Self {
        ElementaryFactor { index, level }
    }

    /// `b_i = b_i(0)`.
    pub fn ground(index: usize) -> Self {
        ElementaryFactor { index, level: 0 }
    }

    /// `(φ_i, ε_i, ⟨h_i, wt⟩)` in one call.
    pub fn stats(&self, cd: &CartanData, i: usize) -> (ExtInt, ExtInt, i64) {
        (self.phi(cd, i), self.eps(cd, i), self.pair_wt(cd, i))
    }
}

impl CrystalElem for ElementaryFactor {
    fn phi(&self, _cd: &CartanData, i: usize) -> ExtInt {
        if i == self.index {
            ExtInt::Finite(self.level)
        } else {
            ExtInt::NegInf
        }
    }

    fn eps(&self, _cd: &CartanData, i: usize) -> ExtInt {
        if i == self.index {
            ExtInt::Finite(-self.level)
        } else {
            ExtInt::NegInf
        }
    }

    fn pair_wt(&self, cd: &CartanData, i: usize) -> i64 {
        // wt b_j(m) = m·α_j.
        self.level * cd.pairing(i, self.index)
    }

    fn apply(&self, _cd: &CartanData, i: usize, dir: Dir) -> Option<Self> {
        if i != self.index {
            // ẽ_i b_j(m) = f̃_i b_j(m) = 0 for i ≠ j.
            return None;
        }
        let level = match dir {
            Dir::E => self.level + 1,
            Dir::F => self.level - 1,
        };
        Some(ElementaryFactor {
            index: self.index,
            level,
        })
    }
}

/// `φ_i` of a tensor product of factors, left factor first.
pub fn tensor_phi<T: CrystalElem>(cd: &CartanData, factors: &[T], i: usize) -> ExtInt {
    let mut best = ExtInt::NegInf;
    let mut suffix = 0i64;
    for t in factors.iter().rev() {
        let m = t.phi(cd, i) + suffix;
        best = best.max(m);
        suffix += t.pair_wt(cd, i);
    }
    best
}

/// `ε_i` of a tensor product of factors.
pub fn tensor_eps<T: CrystalElem>(cd: &CartanData, factors: &[T], i: usize) -> ExtInt {
    let mut best = ExtInt::NegInf;
    let mut prefix = 0i64;
    for t in factors.iter() {
        let e = t.eps(cd, i) + (-prefix);
        best = best.max(e);
        prefix += t.pair_wt(cd, i);
    }
    best
}

/// `(φ_i, ε_i)` of a tensor product.
pub fn tensor_stats<T: CrystalElem>(cd: &CartanData, factors: &[T], i: usize) -> (ExtInt, ExtInt) {
    (tensor_phi(cd, factors, i), tensor_eps(cd, factors, i))
}

/// Position (0-based) of the factor on which `f̃_i` acts: the rightmost
/// maximizer of `m_i(t_j) = φ_i(t_j) + Σ_{l>j} ⟨h_i, wt t_l⟩`.
/// `None` only for an empty factor list.
pub fn lower_position<T: CrystalElem>(cd: &CartanData, factors: &[T], i: usize) -> Option<usize> {
    let mut best: Option<(ExtInt, usize)> = None;
    let mut suffix = 0i64;
    for (j, t) in factors.iter().enumerate().rev() {
        let m = t.phi(cd, i) + suffix;
        match &best {
            // Scanning right to left: a tie keeps the rightmost.
            Some((bm, _)) if *bm >= m => {}
            _ => best = Some((m, j)),
        }
        suffix += t.pair_wt(cd, i);
    }
    best.map(|(_, j)| j)
}

/// Position of the factor on which `ẽ_i` acts: the leftmost maximizer of
/// `ε_i(t_j) - Σ_{l<j} ⟨h_i, wt t_l⟩`.
pub fn raise_position<T: CrystalElem>(cd: &CartanData, factors: &[T], i: usize) -> Option<usize> {
    let mut best: Option<(ExtInt, usize)> = None;
    let mut prefix = 0i64;
    for (j, t) in factors.iter().enumerate() {
        let e = t.eps(cd, i) + (-prefix);
        match &best {
            Some((be, _)) if *be >= e => {}
            _ => best = Some((e, j)),
        }
        prefix += t.pair_wt(cd, i);
    }
    best.map(|(_, j)| j)
}

/// Apply `ẽ_i` or `f̃_i` to a tensor product via the signature rule.
///
/// Returns `None` (the crystal element 0) when the factor list is empty or
/// the selected component application is itself 0.
pub fn tensor_apply<T: CrystalElem>(
    cd: &CartanData,
    factors: &[T],
    i: usize,
    dir: Dir,
) -> Option<Vec<T>> {
    let pos = match dir {
        Dir::F => lower_position(cd, factors, i)?,
        Dir::E => raise_position(cd, factors, i)?,
    };
    let replaced = factors[pos].apply(cd, i, dir)?;
    let mut out = factors.to_vec();
    out[pos] = replaced;
    Some(out)
}
