//! Tableaux over the classical alphabets: column admissibility, the
//! almost-semistandard and largeness predicates, the column reading word,
//! crystal operators via the signature rule, highest-weight tableaux, and
//! the per-row statistics that drive the elementary-crystal embedding.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, LieType};
use crate::crystal::{self, CrystalElem, Dir, ExtInt};
use crate::error::{Error, Result};
use crate::letters::Letter;

/// A dominant weight `λ = Σ λ_i Λ_i` in the fundamental-weight basis.
///
/// Type B weights must have `λ_n` even (class (E)); type D weights must have
/// `λ_{n-1} = λ_n` (class (W0)). Both classes avoid spin columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominantWeight {
    coeffs: Vec<i64>,
}

impl DominantWeight {
    pub fn new(cd: &CartanData, coeffs: Vec<i64>) -> Result<Self> {
        let n = cd.rank();
        if coeffs.len() != n {
            return Err(Error::InvalidWeight(format!(
                "expected {n} coefficients, got {}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::InvalidWeight("negative coefficient".into()));
        }
        match cd.lie_type() {
            LieType::B if coeffs[n - 1] % 2 != 0 => {
                return Err(Error::InvalidWeight(
                    "type B weight must have even last coefficient".into(),
                ));
            }
            LieType::D if coeffs[n - 2] != coeffs[n - 1] => {
                return Err(Error::InvalidWeight(
                    "type D weight must have equal last two coefficients".into(),
                ));
            }
            _ => {}
        }
        Ok(DominantWeight { coeffs })
    }

    pub fn zero(cd: &CartanData) -> Self {
        DominantWeight {
            coeffs: vec![0; cd.rank()],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `λ_i`, 1-based.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    /// Row lengths of the highest-weight tableau of this weight.
    pub fn shape(&self, cd: &CartanData) -> Vec<usize> {
        let n = cd.rank();
        let mut rows = Vec::new();
        match cd.lie_type() {
            LieType::A | LieType::C => {
                for i in 1..=n {
                    let len: i64 = (i..=n).map(|j| self.coeff(j)).sum();
                    rows.push(len as usize);
                }
            }
            LieType::B => {
                let m = self.coeff(n) / 2;
                for i in 1..=n.saturating_sub(1) {
                    let len: i64 = (i..n).map(|j| self.coeff(j)).sum::<i64>() + m;
                    rows.push(len as usize);
                }
                rows.push(m as usize);
            }
            LieType::D => {
                // Multiplicities of the weights ω_1, …, ω_{n-1}: the first
                // n-2 coefficients, then the shared last coefficient.
                for i in 1..=n - 1 {
                    let len: i64 = (i..=n - 2).map(|j| self.coeff(j)).sum::<i64>() + self.coeff(n);
                    rows.push(len as usize);
                }
            }
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        rows
    }
}

/// Validity of a single column (top-to-bottom), per type.
///
/// * A: strictly increasing, length at most `n`.
/// * C: strictly increasing, and whenever `p` sits at height `j` above `p̄`
///   at height `l`, the inequality `j + (k - l + 1) ≤ p` holds (`k` the
///   column length).
/// * B: weakly increasing with only `0` allowed to repeat, plus the same
///   `(p, p̄)` inequality.
/// * D: each consecutive pair strictly increases or is `(n, n̄)`/`(n̄, n)`,
///   the `(p, p̄)` inequality for `p` above `p̄`, length at most `n-1`.
pub fn is_valid_column(cd: &CartanData, col: &[Letter]) -> bool {
    let n = cd.rank();
    let k = col.len();
    if k == 0 {
        return false;
    }
    if col.iter().any(|x| x.validate(cd).is_err()) {
        return false;
    }
    let max_len = match cd.lie_type() {
        LieType::A | LieType::C | LieType::B => n,
        LieType::D => n - 1,
    };
    if k > max_len {
        return false;
    }
    match cd.lie_type() {
        LieType::A | LieType::C => {
            if !col.windows(2).all(|w| w[0].lt(cd, w[1])) {
                return false;
            }
        }
        LieType::B => {
            for w in col.windows(2) {
                let strict = w[0].lt(cd, w[1]);
                let zero_repeat = w[0] == Letter::Zero && w[1] == Letter::Zero;
                if !(strict || zero_repeat) {
                    return false;
                }
            }
        }
        LieType::D => {
            for w in col.windows(2) {
                let strict = w[0].lt(cd, w[1]);
                let swap = matches!(
                    (w[0], w[1]),
                    (Letter::Unbarred(a), Letter::Barred(b)) | (Letter::Barred(a), Letter::Unbarred(b))
                        if a == n && b == n
                );
                if !(strict || swap) {
                    return false;
                }
            }
        }
    }
    if cd.lie_type() != LieType::A {
        // (p, p̄) in one column: positions are 1-based from the top, with p
        // above p̄.
        for (j0, &x) in col.iter().enumerate() {
            if let Letter::Unbarred(p) = x {
                for (l0, &y) in col.iter().enumerate().skip(j0 + 1) {
                    if y == Letter::Barred(p) {
                        let (j, l) = (j0 + 1, l0 + 1);
                        if (j + (k - l + 1)) as i64 > p as i64 {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// A tableau: left-justified rows of letters with weakly decreasing lengths.
///
/// Equality, hashing and ordering are structural; trailing empty rows are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    #[serde(rename = "type")]
    lie_type: LieType,
    rank: usize,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(cd: &CartanData, mut rows: Vec<Vec<Letter>>) -> Result<Self> {
        while rows.last().map(Vec::is_empty).unwrap_or(false) {
            rows.pop();
        }
        for w in rows.windows(2) {
            if w[0].len() < w[1].len() {
                return Err(Error::InvalidShape(
                    "row lengths must weakly decrease".into(),
                ));
            }
        }
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::InvalidShape("empty row above a nonempty row".into()));
        }
        for row in &rows {
            for &x in row {
                x.validate(cd)?;
            }
        }
        Ok(Tableau {
            lie_type: cd.lie_type(),
            rank: cd.rank(),
            rows,
        })
    }

    pub fn empty(cd: &CartanData) -> Self {
        Tableau {
            lie_type: cd.lie_type(),
            rank: cd.rank(),
            rows: Vec::new(),
        }
    }

    /// Validates the embedded type/rank against `cd` (used after JSON input).
    pub fn check_context(&self, cd: &CartanData) -> Result<()> {
        if self.lie_type != cd.lie_type() || self.rank != cd.rank() {
            return Err(Error::InvalidInput(format!(
                "tableau is typed {}{} but the context is {}{}",
                self.lie_type,
                self.rank,
                cd.lie_type(),
                cd.rank()
            )));
        }
        Ok(())
    }

    pub fn cartan(&self) -> Result<CartanData> {
        CartanData::new(self.lie_type, self.rank)
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn box_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column `c` (0-based), top-to-bottom.
    pub fn column(&self, c: usize) -> Vec<Letter> {
        self.rows
            .iter()
            .filter_map(|row| row.get(c).copied())
            .collect()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map(Vec::len).unwrap_or(0)
    }

    /// The reading word: columns taken rightmost first, each top-to-bottom,
    /// identifying the tableau with the tensor product of its columns.
    pub fn reading(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.box_count());
        for c in (0..self.width()).rev() {
            out.extend(self.column(c));
        }
        out
    }

    /// Like `reading`, but with the (row, column) position of each letter.
    fn reading_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.box_count());
        for c in (0..self.width()).rev() {
            for (r, row) in self.rows.iter().enumerate() {
                if c < row.len() {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// All columns admissible and all rows weakly increasing; type B rows
    /// additionally carry at most one `0`, and type D rows compare
    /// consecutively in the partial order (so `n` and `n̄` never share a row).
    pub fn is_almost_semistandard(&self, cd: &CartanData) -> bool {
        for c in 0..self.width() {
            if !is_valid_column(cd, &self.column(c)) {
                return false;
            }
        }
        for row in &self.rows {
            if !row.windows(2).all(|w| w[0].le(cd, w[1])) {
                return false;
            }
            if cd.lie_type() == LieType::B && row.iter().filter(|&&x| x == Letter::Zero).count() > 1
            {
                return false;
            }
        }
        true
    }

    /// Row `i` (1-based) holds more copies of the letter `i` than any lower
    /// row has boxes. Vacuous for at most one row.
    pub fn is_large(&self) -> bool {
        let r = self.rows.len();
        for i in 1..r {
            let count = self.rows[i - 1]
                .iter()
                .filter(|&&x| x == Letter::Unbarred(i))
                .count();
            // Shape is a partition, so the next row is the longest one below.
            if count <= self.rows[i].len() {
                return false;
            }
        }
        true
    }

    /// Almost semistandard and large. In the large regime the remaining
    /// tableau conditions of the classical-type classification are vacuous,
    /// so this is full semistandardness there.
    pub fn is_semistandard_large_regime(&self, cd: &CartanData) -> bool {
        self.is_almost_semistandard(cd) && self.is_large()
    }

    /// `(φ_i, ε_i)` via the signature rule on the reading word.
    pub fn stats(&self, cd: &CartanData, i: usize) -> (i64, i64) {
        let word = self.reading();
        if word.is_empty() {
            return (0, 0);
        }
        let (phi, eps) = crystal::tensor_stats(cd, &word, i);
        (
            phi.expect_finite("tableau phi"),
            eps.expect_finite("tableau eps"),
        )
    }

    /// Apply `ẽ_i`/`f̃_i` via the signature rule on the reading word. The
    /// acted-on box is replaced in place; `None` is the crystal element 0.
    pub fn apply(&self, cd: &CartanData, i: usize, dir: Dir) -> Option<Tableau> {
        let word = self.reading();
        if word.is_empty() {
            return None;
        }
        let pos = match dir {
            Dir::F => crystal::lower_position(cd, &word, i)?,
            Dir::E => crystal::raise_position(cd, &word, i)?,
        };
        let replaced = word[pos].apply(cd, i, dir)?;
        let (r, c) = self.reading_positions()[pos];
        let mut rows = self.rows.clone();
        rows[r][c] = replaced;
        Some(Tableau {
            lie_type: self.lie_type,
            rank: self.rank,
            rows,
        })
    }

    /// `⟨h_i, wt T⟩`, summed over the letters.
    pub fn pair_weight(&self, cd: &CartanData, i: usize) -> i64 {
        self.reading().iter().map(|x| x.pair_wt(cd, i)).sum()
    }
}

impl CrystalElem for Tableau {
    fn phi(&self, cd: &CartanData, i: usize) -> ExtInt {
        ExtInt::Finite(self.stats(cd, i).0)
    }

    fn eps(&self, cd: &CartanData, i: usize) -> ExtInt {
        ExtInt::Finite(self.stats(cd, i).1)
    }

    fn pair_wt(&self, cd: &CartanData, i: usize) -> i64 {
        self.pair_weight(cd, i)
    }

    fn apply(&self, cd: &CartanData, i: usize, dir: Dir) -> Option<Self> {
        Tableau::apply(self, cd, i, dir)
    }
}

/// The highest-weight tableau `u_λ`: row `i` filled with the letter `i`.
///
/// Row lengths come from `DominantWeight::shape`, which centralizes the
/// fundamental-weight bookkeeping for types B and D.
pub fn highest_weight_tableau(cd: &CartanData, lambda: &DominantWeight) -> Tableau {
    let rows: Vec<Vec<Letter>> = lambda
        .shape(cd)
        .iter()
        .enumerate()
        .map(|(i, &len)| vec![Letter::Unbarred(i + 1); len])
        .collect();
    Tableau::new(cd, rows).expect("highest-weight shape is a partition")
}

/// Key of one per-row statistic: the unbarred letters `i..=n` and the barred
/// letters of the type's statistic range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatKey {
    Unbarred(usize),
    Barred(usize),
}

impl StatKey {
    pub fn symbol(self) -> String {
        match self {
            StatKey::Unbarred(k) => k.to_string(),
            StatKey::Barred(k) => format!("{k}bar"),
        }
    }
}

/// The table `a(i, j)` of row statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowStats {
    /// Entry `r` holds the statistics of row `r+1`.
    rows: Vec<BTreeMap<StatKey, i64>>,
}

impl RowStats {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// `a(i, key)` for 1-based row `i`; zero for absent rows or keys.
    pub fn get(&self, i: usize, key: StatKey) -> i64 {
        self.rows
            .get(i - 1)
            .and_then(|m| m.get(&key).copied())
            .unwrap_or(0)
    }

    pub fn row(&self, i: usize) -> Option<&BTreeMap<StatKey, i64>> {
        self.rows.get(i - 1)
    }
}

/// Statistic keys for row `i` of rank `n`, per type.
pub fn stat_keys(cd: &CartanData, i: usize) -> Vec<StatKey> {
    let n = cd.rank();
    let mut keys: Vec<StatKey> = Vec::new();
    match cd.lie_type() {
        LieType::A => keys.extend((i..=n).map(StatKey::Unbarred)),
        LieType::B | LieType::C => {
            keys.extend((i..=n).map(StatKey::Unbarred));
            keys.extend((i + 1..=n).map(StatKey::Barred));
        }
        LieType::D => {
            keys.extend((i..=n).map(StatKey::Unbarred));
            keys.extend((i + 1..=n - 1).map(StatKey::Barred));
        }
    }
    keys
}

/// Count of entries in `row` strictly above `threshold` in the letter order.
fn count_greater(cd: &CartanData, row: &[Letter], threshold: Letter) -> i64 {
    row.iter().filter(|&&x| threshold.lt(cd, x)).count() as i64
}

/// The statistics table of a tableau.
///
/// * Type A: `a(i, j)` counts entries of row `i` greater than `j`.
/// * Type C: same with the barred order, keys `i..n` and `(i+1)bar..nbar`.
/// * Type B: as C except `a(i, n)` is twice the count of entries above `0`
///   plus the count (0 or 1) of `0`s.
/// * Type D: as C with barred keys up to `(n-1)bar`, except `a(i, n-1)`
///   counts entries `⪰ n` and `a(i, n)` counts entries `⪰ n̄` (the partial
///   order leaves `n̄ ⪰ n` false).
pub fn row_stats(cd: &CartanData, tab: &Tableau) -> RowStats {
    let n = cd.rank();
    let mut rows = Vec::with_capacity(tab.row_count());
    for (r0, row) in tab.rows().iter().enumerate() {
        let i = r0 + 1;
        let mut m = BTreeMap::new();
        for key in stat_keys(cd, i) {
            let value = match (cd.lie_type(), key) {
                (LieType::B, StatKey::Unbarred(j)) if j == n => {
                    let above_zero = count_greater(cd, row, Letter::Zero);
                    let zeros = row.iter().filter(|&&x| x == Letter::Zero).count() as i64;
                    2 * above_zero + zeros
                }
                (LieType::D, StatKey::Unbarred(j)) if j == n - 1 => {
                    let above = count_greater(cd, row, Letter::Unbarred(n));
                    let ns = row.iter().filter(|&&x| x == Letter::Unbarred(n)).count() as i64;
                    above + ns
                }
                (LieType::D, StatKey::Unbarred(j)) if j == n => {
                    let above = count_greater(cd, row, Letter::Barred(n));
                    let nbars = row.iter().filter(|&&x| x == Letter::Barred(n)).count() as i64;
                    above + nbars
                }
                (_, StatKey::Unbarred(j)) => count_greater(cd, row, Letter::Unbarred(j)),
                (_, StatKey::Barred(j)) => count_greater(cd, row, Letter::Barred(j)),
            };
            m.insert(key, value);
        }
        rows.push(m);
    }
    RowStats { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(t: LieType, n: usize) -> CartanData {
        CartanData::new(t, n).unwrap()
    }

    fn tab(cd: &CartanData, rows: &[&[Letter]]) -> Tableau {
        Tableau::new(cd, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn un(k: usize) -> Letter {
        Letter::Unbarred(k)
    }

    fn bar(k: usize) -> Letter {
        Letter::Barred(k)
    }

    /// Rows 1,2,3,3 / 2,4,4 / 3 in rank 3: the running example tableau.
    fn example_a3(cd: &CartanData) -> Tableau {
        tab(
            cd,
            &[
                &[un(1), un(2), un(3), un(3)],
                &[un(2), un(4), un(4)],
                &[un(3)],
            ],
        )
    }

    #[test]
    fn column_validity() {
        let c = cd(LieType::C, 3);
        // 1 and 1bar never share a column.
        assert!(!is_valid_column(&c, &[un(1), bar(1)]));
        // (3, 3bar) satisfies 1 + (2 - 2 + 1) = 2 ≤ 3.
        assert!(is_valid_column(&c, &[un(3), bar(3)]));
        // (2, 2bar) in rank 3: 2 ≤ 2 holds.
        assert!(is_valid_column(&c, &[un(2), bar(2)]));
        let a = cd(LieType::A, 4);
        assert!(is_valid_column(&a, &[un(1), un(2), un(3)]));
        assert!(!is_valid_column(&a, &[un(1), un(1)]));
        let b = cd(LieType::B, 2);
        assert!(is_valid_column(&b, &[Letter::Zero, Letter::Zero]));
        assert!(!is_valid_column(&b, &[un(2), un(2)]));
        assert!(is_valid_column(&b, &[un(1), Letter::Zero]));
        let d = cd(LieType::D, 3);
        assert!(is_valid_column(&d, &[un(3), bar(3)]));
        // The reversed swap has no (p, p̄) constraint (p̄ above p).
        assert!(is_valid_column(&d, &[bar(3), un(3)]));
        assert!(!is_valid_column(&d, &[un(1), bar(1)]));
        // Columns of length n are spin columns and excluded in type D.
        assert!(!is_valid_column(&d, &[un(1), un(2), un(3)]));
    }

    #[test]
    fn type_d_column_count_matches_module_dimension() {
        // Admissible two-letter columns in rank 3 form the 15-dimensional
        // crystal of the adjoint-sized module.
        let d = cd(LieType::D, 3);
        let alpha = Letter::alphabet(&d);
        let mut count = 0;
        for &x in &alpha {
            for &y in &alpha {
                if is_valid_column(&d, &[x, y]) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 15);
    }

    #[test]
    fn almost_semistandard_examples() {
        let a3 = cd(LieType::A, 3);
        assert!(example_a3(&a3).is_almost_semistandard(&a3));
        let bad = tab(&a3, &[&[un(2), un(1)]]);
        assert!(!bad.is_almost_semistandard(&a3));
        // One zero per row in type B.
        let b2 = cd(LieType::B, 2);
        let two_zeros = tab(&b2, &[&[Letter::Zero, Letter::Zero]]);
        assert!(!two_zeros.is_almost_semistandard(&b2));
        // n and n̄ cannot share a row in type D.
        let d3 = cd(LieType::D, 3);
        let mixed = tab(&d3, &[&[un(3), bar(3)]]);
        assert!(!mixed.is_almost_semistandard(&d3));
    }

    #[test]
    fn largeness() {
        let a3 = cd(LieType::A, 3);
        let large = tab(
            &a3,
            &[
                &[un(1), un(1), un(1), un(2), un(3), un(4)],
                &[un(2), un(2)],
                &[un(3)],
            ],
        );
        assert!(large.is_large());
        let not_large = tab(
            &a3,
            &[
                &[un(1), un(2), un(2), un(3), un(4)],
                &[un(2), un(3), un(3)],
                &[un(3)],
            ],
        );
        assert!(!not_large.is_large());
        // Single-row tableaux are always large.
        assert!(tab(&a3, &[&[un(4), un(4)]]).is_large());
    }

    #[test]
    fn reading_word_is_columns_right_to_left() {
        let a3 = cd(LieType::A, 3);
        let t = example_a3(&a3);
        let word: Vec<usize> = t
            .reading()
            .iter()
            .map(|x| match x {
                Letter::Unbarred(k) => *k,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(word, vec![3, 3, 4, 2, 4, 1, 2, 3]);
        let single = tab(&a3, &[&[un(2)]]);
        assert_eq!(single.reading(), vec![un(2)]);
        let square = tab(&a3, &[&[un(1), un(2)], &[un(2), un(3)]]);
        assert_eq!(square.reading(), vec![un(2), un(3), un(1), un(2)]);
    }

    #[test]
    fn highest_weight_shapes() {
        let a3 = cd(LieType::A, 3);
        let lam = DominantWeight::new(&a3, vec![1, 2, 1]).unwrap();
        let t = highest_weight_tableau(&a3, &lam);
        assert_eq!(t.shape(), vec![4, 3, 1]);
        for (r, row) in t.rows().iter().enumerate() {
            assert!(row.iter().all(|&x| x == un(r + 1)));
        }

        let empty = highest_weight_tableau(&a3, &DominantWeight::zero(&a3));
        assert!(empty.is_empty());

        let d3 = cd(LieType::D, 3);
        let omega2 = DominantWeight::new(&d3, vec![0, 1, 1]).unwrap();
        let t = highest_weight_tableau(&d3, &omega2);
        assert_eq!(t.rows(), &[vec![un(1)], vec![un(2)]]);

        let b2 = cd(LieType::B, 2);
        let lam = DominantWeight::new(&b2, vec![1, 4]).unwrap();
        let t = highest_weight_tableau(&b2, &lam);
        assert_eq!(t.shape(), vec![3, 2]);
    }

    #[test]
    fn weight_class_constraints() {
        let b2 = cd(LieType::B, 2);
        assert!(DominantWeight::new(&b2, vec![0, 1]).is_err());
        assert!(DominantWeight::new(&b2, vec![0, 2]).is_ok());
        let d3 = cd(LieType::D, 3);
        assert!(DominantWeight::new(&d3, vec![1, 1, 0]).is_err());
        assert!(DominantWeight::new(&d3, vec![1, 1, 1]).is_ok());
        let a2 = cd(LieType::A, 2);
        assert!(DominantWeight::new(&a2, vec![-1, 0]).is_err());
    }

    #[test]
    fn row_stats_on_the_example() {
        let a3 = cd(LieType::A, 3);
        let t = example_a3(&a3);
        let s = row_stats(&a3, &t);
        assert_eq!(s.get(1, StatKey::Unbarred(1)), 3);
        assert_eq!(s.get(1, StatKey::Unbarred(2)), 2);
        assert_eq!(s.get(1, StatKey::Unbarred(3)), 0);
        assert_eq!(s.get(2, StatKey::Unbarred(2)), 2);
        assert_eq!(s.get(2, StatKey::Unbarred(3)), 2);
        assert_eq!(s.get(3, StatKey::Unbarred(3)), 0);
    }

    #[test]
    fn row_stats_vanish_on_highest_weight() {
        for (t, n) in [
            (LieType::A, 3),
            (LieType::C, 2),
            (LieType::B, 2),
            (LieType::D, 3),
        ] {
            let cd = cd(t, n);
            let coeffs = match t {
                LieType::B => vec![1, 2],
                LieType::D => vec![1, 1, 1],
                _ => vec![1; n],
            };
            let lam = DominantWeight::new(&cd, coeffs).unwrap();
            let u = highest_weight_tableau(&cd, &lam);
            let s = row_stats(&cd, &u);
            for i in 1..=u.row_count() {
                for key in stat_keys(&cd, i) {
                    assert_eq!(s.get(i, key), 0, "{t}{n} row {i} key {key:?}");
                }
            }
        }
    }

    #[test]
    fn type_b_zero_statistic() {
        let b2 = cd(LieType::B, 2);
        let t = tab(&b2, &[&[un(1), Letter::Zero, bar(1)]]);
        let s = row_stats(&b2, &t);
        // Twice one entry above zero, plus one zero.
        assert_eq!(s.get(1, StatKey::Unbarred(2)), 3);
    }

    #[test]
    fn type_d_partial_order_statistics() {
        let d3 = cd(LieType::D, 3);
        let t = tab(&d3, &[&[un(2), un(3), bar(2)]]);
        let s = row_stats(&d3, &t);
        // a(1, 2) counts entries ⪰ 3: the 3 and the 2bar.
        assert_eq!(s.get(1, StatKey::Unbarred(2)), 2);
        // a(1, 3) counts entries ⪰ 3bar: only the 2bar.
        assert_eq!(s.get(1, StatKey::Unbarred(3)), 1);
        assert_eq!(s.get(1, StatKey::Barred(2)), 0);
    }

    #[test]
    fn signature_rule_on_tableaux() {
        let a2 = cd(LieType::A, 2);
        let lam = DominantWeight::new(&a2, vec![2, 1]).unwrap();
        let u = highest_weight_tableau(&a2, &lam);
        assert_eq!(u.rows(), &[vec![un(1), un(1), un(1)], vec![un(2)]]);
        let t = u.apply(&a2, 1, Dir::F).unwrap();
        assert_eq!(t.rows(), &[vec![un(1), un(1), un(2)], vec![un(2)]]);
        // Raising inverts lowering.
        assert_eq!(t.apply(&a2, 1, Dir::E), Some(u.clone()));
        // A dead end returns the crystal zero.
        assert_eq!(u.apply(&a2, 2, Dir::E), None);
    }

    #[test]
    fn json_round_trip_is_byte_exact() {
        let b2 = cd(LieType::B, 2);
        let t = tab(&b2, &[&[un(1), Letter::Zero, bar(2)], &[un(2)]]);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(
            text,
            r#"{"type":"B","rank":2,"rows":[["1","0","2bar"],["2"]]}"#
        );
        let back: Tableau = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn one_box_tensor_rule_matches_letters() {
        let a2 = cd(LieType::A, 2);
        let t = tab(&a2, &[&[un(1)]]);
        let lowered = t.apply(&a2, 1, Dir::F).unwrap();
        assert_eq!(lowered.rows(), &[vec![un(2)]]);
        assert_eq!(lowered.apply(&a2, 1, Dir::F), None);
    }
}
