//! Cartan data for the classical types A, B, C, D: the rank, the pairing
//! matrix `⟨h_i, α_j⟩`, and integer vectors in the root lattice.
//!
//! The pairing matrix is stored directly; nothing here depends on an inner
//! product. Conventions: type C has `⟨h_{n-1}, α_n⟩ = -2` (long root `α_n`),
//! type B has `⟨h_n, α_{n-1}⟩ = -2` (short root `α_n`), type D forks at the
//! last two nodes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the four classical families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub const ALL: [LieType; 4] = [LieType::A, LieType::B, LieType::C, LieType::D];

    /// Smallest rank for which the type is supported here.
    pub fn min_rank(self) -> usize {
        match self {
            LieType::A | LieType::B => 1,
            LieType::C | LieType::D => 2,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::InvalidInput(format!("unknown Lie type {other:?}"))),
        }
    }
}

/// Lie type, rank, and the integer pairing matrix `P[i][j] = ⟨h_i, α_j⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    lie_type: LieType,
    rank: usize,
    /// Row i, column j, both 0-based internally; public accessors are 1-based.
    pairing: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        if rank < lie_type.min_rank() {
            return Err(Error::InvalidRank { lie_type, rank });
        }
        let n = rank;
        let mut p = vec![vec![0i64; n]; n];
        for (i, row) in p.iter_mut().enumerate() {
            row[i] = 2;
        }
        // A-chain entries; the last bond is overridden per type below.
        for i in 0..n.saturating_sub(1) {
            p[i][i + 1] = -1;
            p[i + 1][i] = -1;
        }
        match lie_type {
            LieType::A => {}
            LieType::C => {
                // α_n long: ⟨h_{n-1}, α_n⟩ = -2.
                p[n - 2][n - 1] = -2;
            }
            LieType::B => {
                // α_n short: ⟨h_n, α_{n-1}⟩ = -2.
                if n >= 2 {
                    p[n - 1][n - 2] = -2;
                }
            }
            LieType::D => {
                p[n - 2][n - 1] = 0;
                p[n - 1][n - 2] = 0;
                if n >= 3 {
                    p[n - 3][n - 1] = -1;
                    p[n - 1][n - 3] = -1;
                }
            }
        }
        Ok(CartanData {
            lie_type,
            rank,
            pairing: p,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `⟨h_i, α_j⟩` with 1-based indices.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        assert!(
            (1..=self.rank).contains(&i) && (1..=self.rank).contains(&j),
            "pairing indices ({i},{j}) out of range 1..={}",
            self.rank
        );
        self.pairing[i - 1][j - 1]
    }

    /// `⟨h_i, v⟩` for a vector in the root lattice.
    pub fn pair_root_vector(&self, i: usize, v: &RootVector) -> i64 {
        assert!(
            (1..=self.rank).contains(&i),
            "index {i} out of range 1..={}",
            self.rank
        );
        assert_eq!(v.coeffs.len(), self.rank, "root vector rank mismatch");
        v.coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.pairing[i - 1][j])
            .sum()
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        assert!(
            (1..=self.rank).contains(&i),
            "index {i} out of range 1..={}",
            self.rank
        );
        let mut coeffs = vec![0; self.rank];
        coeffs[i - 1] = 1;
        RootVector { coeffs }
    }
}

/// An integer vector `Σ c_i α_i` in the root lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootVector {
    coeffs: Vec<i64>,
}

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootVector { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        RootVector {
            coeffs: vec![0; rank],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    /// All coefficients nonpositive, i.e. the vector lies in `Q_-`.
    pub fn is_nonpositive(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        RootVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        RootVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}
