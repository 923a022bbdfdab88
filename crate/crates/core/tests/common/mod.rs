//! Shared test machinery: an independent recursive evaluator for the
//! two-factor tensor rule, enumerators for small letter words, and a tiny
//! deterministic RNG.
//!
//! The recursive evaluator is the oracle for the flat signature rule: it
//! works pair by pair over an arbitrary parenthesization, using only the
//! two-factor formulas, and never consults the positional max rule.

#![allow(dead_code)]

use crystal_tableaux::binfinity::{PsiFactor, PsiSequence};
use crystal_tableaux::cartan::CartanData;
use crystal_tableaux::crystal::{
    tensor_apply, tensor_stats, CrystalElem, Dir, ElementaryFactor, ExtInt,
};
use crystal_tableaux::letters::Letter;
use crystal_tableaux::tableau::{row_stats, Tableau};

/// A parenthesization of the leaves `lo..hi`.
#[derive(Clone, Debug)]
pub enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

/// Every full parenthesization of the leaf range `lo..hi`.
pub fn all_trees(lo: usize, hi: usize) -> Vec<Tree> {
    assert!(hi > lo);
    if hi - lo == 1 {
        return vec![Tree::Leaf(lo)];
    }
    let mut out = Vec::new();
    for mid in lo + 1..hi {
        for left in all_trees(lo, mid) {
            for right in all_trees(mid, hi) {
                out.push(Tree::Node(Box::new(left.clone()), Box::new(right)));
            }
        }
    }
    out
}

/// `(φ_i, ε_i, ⟨h_i, wt⟩)` of a parenthesized tensor, by the two-factor
/// formulas only:
/// `φ(x⊗y) = max(φ(y), φ(x) + ⟨h_i, wt y⟩)`,
/// `ε(x⊗y) = max(ε(x), ε(y) - ⟨h_i, wt x⟩)`.
pub fn tree_stats<T: CrystalElem>(
    cd: &CartanData,
    tree: &Tree,
    factors: &[T],
    i: usize,
) -> (ExtInt, ExtInt, i64) {
    match tree {
        Tree::Leaf(j) => (
            factors[*j].phi(cd, i),
            factors[*j].eps(cd, i),
            factors[*j].pair_wt(cd, i),
        ),
        Tree::Node(l, r) => {
            let (lphi, leps, lwt) = tree_stats(cd, l, factors, i);
            let (rphi, reps, rwt) = tree_stats(cd, r, factors, i);
            let phi = rphi.max(lphi + rwt);
            let eps = leps.max(reps + (-lwt));
            (phi, eps, lwt + rwt)
        }
    }
}

/// Apply an operator through a parenthesization using only the two-factor
/// branch rule; mutates `factors` in place, `false` means the element 0.
pub fn tree_apply<T: CrystalElem>(
    cd: &CartanData,
    tree: &Tree,
    factors: &mut [T],
    i: usize,
    dir: Dir,
) -> bool {
    match tree {
        Tree::Leaf(j) => match factors[*j].apply(cd, i, dir) {
            Some(next) => {
                factors[*j] = next;
                true
            }
            None => false,
        },
        Tree::Node(l, r) => {
            let (lphi, _, _) = tree_stats(cd, l, factors, i);
            let (_, reps, _) = tree_stats(cd, r, factors, i);
            let go_left = match dir {
                Dir::F => lphi > reps,
                Dir::E => lphi >= reps,
            };
            if go_left {
                tree_apply(cd, l, factors, i, dir)
            } else {
                tree_apply(cd, r, factors, i, dir)
            }
        }
    }
}

/// All weakly increasing letter words of exactly `len` letters that form a
/// valid one-row tableau of the context.
pub fn one_row_tableaux(cd: &CartanData, len: usize) -> Vec<Tableau> {
    let alphabet = Letter::alphabet(cd);
    let mut out = Vec::new();
    let mut row: Vec<Letter> = Vec::with_capacity(len);
    fn rec(
        cd: &CartanData,
        alphabet: &[Letter],
        row: &mut Vec<Letter>,
        len: usize,
        out: &mut Vec<Tableau>,
    ) {
        if row.len() == len {
            let t = Tableau::new(cd, vec![row.clone()]).unwrap();
            if t.is_almost_semistandard(cd) {
                out.push(t);
            }
            return;
        }
        for &x in alphabet {
            if row.last().map(|&last| last.le(cd, x)).unwrap_or(true) {
                row.push(x);
                rec(cd, alphabet, row, len, out);
                row.pop();
            }
        }
    }
    rec(cd, &alphabet, &mut row, len, &mut out);
    out
}

/// Seminormal statistics by walking the graph: the largest `k` with
/// `op^k ≠ 0`. An oracle for the formula-based statistics on tableaux.
pub fn walk_length(cd: &CartanData, t: &Tableau, i: usize, dir: Dir) -> i64 {
    let mut k = 0;
    let mut cur = t.clone();
    while let Some(next) = cur.apply(cd, i, dir) {
        k += 1;
        cur = next;
        assert!(k < 10_000, "runaway walk");
    }
    k
}

/// `[Head] ⊗ block 1` with the row statistics of a one-row tableau as
/// exponents: the element the one-row clauses speak about.
pub fn one_block_element(cd: &CartanData, t: &Tableau) -> Vec<PsiFactor> {
    let seq = PsiSequence::new(cd);
    let stats = row_stats(cd, t);
    let mut out = vec![PsiFactor::Head];
    for slot in &seq.blocks()[0] {
        out.push(PsiFactor::Elem(ElementaryFactor::new(
            slot.index,
            -stats.get(1, slot.key),
        )));
    }
    out
}

/// The four clauses tying a one-row tableau to its one-block element:
/// lowering statistics agree away from index 1, the index-1 statistic drops
/// by the entry count, raising statistics agree everywhere, and lowering
/// commutes with the statistics map. Returns the violated clauses.
pub fn proposition_clauses(cd: &CartanData, t: &Tableau) -> Vec<String> {
    let mut problems = Vec::new();
    let b = one_block_element(cd, t);
    for i in 1..=cd.rank() {
        let (tphi, teps) = t.stats(cd, i);
        let (bphi, beps) = tensor_stats(cd, &b, i);
        let bphi = bphi.expect_finite("one-block phi");
        let beps = beps.expect_finite("one-block eps");
        let expected_phi = if i == 1 {
            tphi - t.box_count() as i64
        } else {
            tphi
        };
        if bphi != expected_phi {
            problems.push(format!(
                "phi_{i}: element {bphi}, tableau side {expected_phi}"
            ));
        }
        if beps != teps {
            problems.push(format!("eps_{i}: element {beps}, tableau {teps}"));
        }
        if let Some(ft) = t.apply(cd, i, Dir::F) {
            let lowered = tensor_apply(cd, &b, i, Dir::F);
            if lowered.as_deref() != Some(&one_block_element(cd, &ft)) {
                problems.push(format!("f_{i} does not commute with the statistics map"));
            }
        }
    }
    problems
}

/// SplitMix64: small deterministic RNG for generated-input tests.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw from `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}
