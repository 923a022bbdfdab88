//! Box letters of the vector-representation crystals and their arrows.
//!
//! Alphabets:
//! * type A: `1, …, n+1`
//! * type C: `1, …, n, n̄, …, 1̄`
//! * type B: `1, …, n, 0, n̄, …, 1̄`
//! * type D: `1, …, n, n̄, …, 1̄` with `n` and `n̄` incomparable
//!
//! Arrows follow the displayed letter graphs: chains for A, B, C (type B
//! passes through `0` on two `n`-labeled arrows) and the fork
//! `n-1 → n → \overline{n-1}`, `n-1 → n̄ → \overline{n-1}` for type D.
//! Barred letters serialize as `"3bar"`, the type B zero as `"0"`.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{CartanData, LieType};
use crate::crystal::{CrystalElem, Dir, ExtInt};
use crate::error::{Error, Result};

/// One letter of a type-specific alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Unbarred(usize),
    Zero,
    Barred(usize),
}

impl Letter {
    /// Checks membership in the alphabet of `cd`.
    pub fn validate(self, cd: &CartanData) -> Result<()> {
        let n = cd.rank();
        let ok = match (cd.lie_type(), self) {
            (LieType::A, Letter::Unbarred(k)) => k >= 1 && k <= n + 1,
            (LieType::A, _) => false,
            (LieType::B, Letter::Zero) => true,
            (_, Letter::Zero) => false,
            (_, Letter::Unbarred(k)) | (_, Letter::Barred(k)) => k >= 1 && k <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLetter {
                letter: self.to_string(),
                lie_type: cd.lie_type(),
                rank: cd.rank(),
            })
        }
    }

    /// The full alphabet of `cd`, in increasing order of the letter graph.
    pub fn alphabet(cd: &CartanData) -> Vec<Letter> {
        let n = cd.rank();
        match cd.lie_type() {
            LieType::A => (1..=n + 1).map(Letter::Unbarred).collect(),
            LieType::C => (1..=n)
                .map(Letter::Unbarred)
                .chain((1..=n).rev().map(Letter::Barred))
                .collect(),
            LieType::B => (1..=n)
                .map(Letter::Unbarred)
                .chain(std::iter::once(Letter::Zero))
                .chain((1..=n).rev().map(Letter::Barred))
                .collect(),
            LieType::D => (1..=n)
                .map(Letter::Unbarred)
                .chain((1..=n).rev().map(Letter::Barred))
                .collect(),
        }
    }

    /// Follow the arrow labeled `i` out of this letter (the `f̃_i` step), or
    /// `None` when no such arrow leaves it.
    pub fn lower(self, cd: &CartanData, i: usize) -> Option<Letter> {
        let n = cd.rank();
        assert!((1..=n).contains(&i), "index {i} out of range 1..={n}");
        debug_assert!(self.validate(cd).is_ok());
        use Letter::*;
        match cd.lie_type() {
            LieType::A => match self {
                Unbarred(k) if k == i => Some(Unbarred(k + 1)),
                _ => None,
            },
            LieType::C => match self {
                Unbarred(k) if k == i && i < n => Some(Unbarred(k + 1)),
                Unbarred(k) if k == n && i == n => Some(Barred(n)),
                Barred(k) if i < n && k == i + 1 => Some(Barred(i)),
                _ => None,
            },
            LieType::B => match self {
                Unbarred(k) if k == i && i < n => Some(Unbarred(k + 1)),
                Unbarred(k) if k == n && i == n => Some(Zero),
                Zero if i == n => Some(Barred(n)),
                Barred(k) if i < n && k == i + 1 => Some(Barred(i)),
                _ => None,
            },
            LieType::D => match self {
                Unbarred(k) if i <= n - 2 && k == i => Some(Unbarred(k + 1)),
                Barred(k) if i <= n - 2 && k == i + 1 => Some(Barred(i)),
                Unbarred(k) if i == n - 1 && k == n - 1 => Some(Unbarred(n)),
                Barred(k) if i == n - 1 && k == n => Some(Barred(n - 1)),
                Unbarred(k) if i == n && k == n - 1 => Some(Barred(n)),
                Unbarred(k) if i == n && k == n => Some(Barred(n - 1)),
                _ => None,
            },
        }
    }

    /// Follow the arrow labeled `i` into this letter backwards (`ẽ_i`).
    pub fn raise(self, cd: &CartanData, i: usize) -> Option<Letter> {
        let n = cd.rank();
        assert!((1..=n).contains(&i), "index {i} out of range 1..={n}");
        debug_assert!(self.validate(cd).is_ok());
        use Letter::*;
        match cd.lie_type() {
            LieType::A => match self {
                Unbarred(k) if k == i + 1 => Some(Unbarred(i)),
                _ => None,
            },
            LieType::C => match self {
                Unbarred(k) if i < n && k == i + 1 => Some(Unbarred(i)),
                Barred(k) if i < n && k == i => Some(Barred(i + 1)),
                Barred(k) if i == n && k == n => Some(Unbarred(n)),
                _ => None,
            },
            LieType::B => match self {
                Unbarred(k) if i < n && k == i + 1 => Some(Unbarred(i)),
                Barred(k) if i < n && k == i => Some(Barred(i + 1)),
                Zero if i == n => Some(Unbarred(n)),
                Barred(k) if i == n && k == n => Some(Zero),
                _ => None,
            },
            LieType::D => match self {
                Unbarred(k) if i <= n - 2 && k == i + 1 => Some(Unbarred(i)),
                Barred(k) if i <= n - 2 && k == i => Some(Barred(i + 1)),
                Unbarred(k) if i == n - 1 && k == n => Some(Unbarred(n - 1)),
                Barred(k) if i == n - 1 && k == n - 1 => Some(Barred(n)),
                Barred(k) if i == n && k == n => Some(Unbarred(n - 1)),
                Barred(k) if i == n && k == n - 1 => Some(Unbarred(n)),
                _ => None,
            },
        }
    }

    /// Length of the forward `i`-path from this letter.
    pub fn phi_len(self, cd: &CartanData, i: usize) -> i64 {
        let mut k = 0;
        let mut cur = self;
        while let Some(next) = cur.lower(cd, i) {
            k += 1;
            cur = next;
        }
        k
    }

    /// Length of the backward `i`-path from this letter.
    pub fn eps_len(self, cd: &CartanData, i: usize) -> i64 {
        let mut k = 0;
        let mut cur = self;
        while let Some(prev) = cur.raise(cd, i) {
            k += 1;
            cur = prev;
        }
        k
    }

    /// `(φ_i, ε_i)` as plain integers (letter statistics are never `-∞`).
    pub fn stats(self, cd: &CartanData, i: usize) -> (i64, i64) {
        (self.phi_len(cd, i), self.eps_len(cd, i))
    }

    /// Position in the letter order; for type D, `n` and `n̄` share a
    /// position but are distinct (incomparable).
    fn order_pos(self, cd: &CartanData) -> usize {
        let n = cd.rank();
        match (cd.lie_type(), self) {
            (LieType::A, Letter::Unbarred(k)) => k,
            (LieType::C, Letter::Unbarred(k)) => k,
            (LieType::C, Letter::Barred(k)) => 2 * n + 1 - k,
            (LieType::B, Letter::Unbarred(k)) => k,
            (LieType::B, Letter::Zero) => n + 1,
            (LieType::B, Letter::Barred(k)) => 2 * n + 2 - k,
            (LieType::D, Letter::Unbarred(k)) => k,
            (LieType::D, Letter::Barred(k)) if k == n => n,
            (LieType::D, Letter::Barred(k)) => 2 * n - k,
            _ => unreachable!("letter outside alphabet"),
        }
    }

    /// Compare two letters in the type's order. Total for A, B, C; for
    /// type D the pair `{n, n̄}` is incomparable (`None`).
    pub fn compare(self, cd: &CartanData, other: Letter) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        let (a, b) = (self.order_pos(cd), other.order_pos(cd));
        if a == b {
            // Distinct letters sharing a position: only {n, n̄} in type D.
            None
        } else {
            Some(a.cmp(&b))
        }
    }

    /// `self ⪯ other` in the letter order (false when incomparable).
    pub fn le(self, cd: &CartanData, other: Letter) -> bool {
        matches!(
            self.compare(cd, other),
            Some(Ordering::Less | Ordering::Equal)
        )
    }

    /// `self ≺ other` strictly (false when incomparable).
    pub fn lt(self, cd: &CartanData, other: Letter) -> bool {
        self.compare(cd, other) == Some(Ordering::Less)
    }

    /// Serialization symbol: `"3"`, `"0"`, `"3bar"`.
    pub fn symbol(self) -> String {
        match self {
            Letter::Unbarred(k) => k.to_string(),
            Letter::Zero => "0".to_string(),
            Letter::Barred(k) => format!("{k}bar"),
        }
    }

    pub fn parse_symbol(s: &str) -> Result<Letter> {
        if s == "0" {
            return Ok(Letter::Zero);
        }
        if let Some(num) = s.strip_suffix("bar") {
            let k: usize = num
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad letter symbol {s:?}")))?;
            if k == 0 {
                return Err(Error::InvalidInput(format!("bad letter symbol {s:?}")));
            }
            return Ok(Letter::Barred(k));
        }
        let k: usize = s
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad letter symbol {s:?}")))?;
        if k == 0 {
            return Err(Error::InvalidInput(format!("bad letter symbol {s:?}")));
        }
        Ok(Letter::Unbarred(k))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.symbol())
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Letter::parse_symbol(&s).map_err(D::Error::custom)
    }
}

impl CrystalElem for Letter {
    fn phi(&self, cd: &CartanData, i: usize) -> ExtInt {
        ExtInt::Finite(self.phi_len(cd, i))
    }

    fn eps(&self, cd: &CartanData, i: usize) -> ExtInt {
        ExtInt::Finite(self.eps_len(cd, i))
    }

    fn pair_wt(&self, cd: &CartanData, i: usize) -> i64 {
        // ⟨h_i, wt x⟩ = φ_i(x) - ε_i(x); the letter crystals are seminormal,
        // so no weight table is needed.
        self.phi_len(cd, i) - self.eps_len(cd, i)
    }

    fn apply(&self, cd: &CartanData, i: usize, dir: Dir) -> Option<Self> {
        match dir {
            Dir::F => self.lower(cd, i),
            Dir::E => self.raise(cd, i),
        }
    }
}
