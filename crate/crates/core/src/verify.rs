//! Exhaustive desk-scale verification drivers.
//!
//! `verify_theorem` checks, for every lowering string up to a depth, that the
//! embedded element equals the statistics map of the projected tableau, that
//! the projection is large, that the element satisfies the image chains, and
//! that the crystal axioms hold along the way. `surjectivity_probe` walks the
//! other direction: every chain-valid exponent array is realized by an
//! explicit witness tableau and a recovered lowering string.

use serde::{Deserialize, Serialize};

use crate::binfinity::{
    bump_lambda, choose_large_lambda, f_of_t, fstring_weight, image_member, pi_lambda, psi_embed,
    FString, PsiElement, PsiSequence,
};
use crate::cartan::CartanData;
use crate::crystal::Dir;
use crate::error::{Error, Result};
use crate::letters::Letter;
use crate::tableau::{highest_weight_tableau, DominantWeight, StatKey, Tableau};

/// One verified input with its outcome.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fstring: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<i64>>,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A full verification run: every record plus the summary counts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub checked: usize,
    pub failures: usize,
    /// Crystal-axiom assertions evaluated as side checks.
    pub axiom_checks: usize,
    pub axiom_failures: usize,
}

impl Report {
    pub fn empty() -> Self {
        Report {
            records: Vec::new(),
            checked: 0,
            failures: 0,
            axiom_checks: 0,
            axiom_failures: 0,
        }
    }

    fn push(&mut self, rec: CheckRecord) {
        self.checked += 1;
        if !rec.ok {
            self.failures += 1;
        }
        self.records.push(rec);
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.axiom_failures == 0
    }
}

/// All index words of length `0..=depth`, in length-then-lexicographic order.
pub fn all_fstrings(cd: &CartanData, depth: usize) -> Vec<FString> {
    let n = cd.rank();
    let mut out = vec![FString::empty()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for word in &frontier {
            for i in 1..=n {
                let mut w = word.clone();
                w.push(i);
                out.push(FString::new(cd, w.clone()).expect("indices in range"));
                next.push(w);
            }
        }
        frontier = next;
    }
    out
}

/// Axiom side checks on a tableau: `φ = ε + ⟨h_i, wt⟩` for every index, and
/// for every defined lowering the statistics deltas plus invertibility.
/// Counts land in the report; the return value is the local verdict.
pub fn axioms_tableau(cd: &CartanData, t: &Tableau, report: &mut Report) -> bool {
    let mut ok = true;
    for i in 1..=cd.rank() {
        report.axiom_checks += 1;
        let (phi, eps) = t.stats(cd, i);
        if phi != eps + t.pair_weight(cd, i) {
            report.axiom_failures += 1;
            ok = false;
        }
        if let Some(ft) = t.apply(cd, i, Dir::F) {
            report.axiom_checks += 1;
            let (fphi, feps) = ft.stats(cd, i);
            let deltas_ok = fphi == phi - 1 && feps == eps + 1;
            let wt_ok = (1..=cd.rank())
                .all(|j| ft.pair_weight(cd, j) == t.pair_weight(cd, j) - cd.pairing(j, i));
            let inverse_ok = ft.apply(cd, i, Dir::E).as_ref() == Some(t);
            if !(deltas_ok && wt_ok && inverse_ok) {
                report.axiom_failures += 1;
                ok = false;
            }
        }
    }
    ok
}

/// Axiom side checks on an embedded element, mirroring `axioms_tableau`.
pub fn axioms_psi(cd: &CartanData, p: &PsiElement, report: &mut Report) -> bool {
    let mut ok = true;
    for i in 1..=cd.rank() {
        report.axiom_checks += 1;
        let (phi, eps) = p.stats(cd, i);
        if phi != eps + p.pair_weight(cd, i) {
            report.axiom_failures += 1;
            ok = false;
        }
        match p.apply(cd, i, Dir::F) {
            Ok(Some(fp)) => {
                report.axiom_checks += 1;
                let (fphi, feps) = fp.stats(cd, i);
                let deltas_ok = fphi == phi - 1 && feps == eps + 1;
                let wt_ok = (1..=cd.rank())
                    .all(|j| fp.pair_weight(cd, j) == p.pair_weight(cd, j) - cd.pairing(j, i));
                let inverse_ok = fp.apply(cd, i, Dir::E) == Ok(Some(p.clone()));
                if !(deltas_ok && wt_ok && inverse_ok) {
                    report.axiom_failures += 1;
                    ok = false;
                }
            }
            Ok(None) | Err(_) => {
                // Lowering is total away from the head; reaching here counts
                // as a failure of the run.
                report.axiom_checks += 1;
                report.axiom_failures += 1;
                ok = false;
            }
        }
    }
    ok
}

/// Check the main identity over every string of length at most `depth`.
///
/// Per string `b`: project with the minimal large weight, require the
/// projection to be large, compare the embedded element against the
/// statistics map, re-check with a strictly larger weight, require image
/// membership, and run the axiom hooks on both sides.
pub fn verify_theorem(cd: &CartanData, depth: usize) -> Result<Report> {
    let mut report = Report::empty();
    for b in all_fstrings(cd, depth) {
        let mut problems: Vec<String> = Vec::new();
        let lambda = choose_large_lambda(cd, &b);
        let embedded = match psi_embed(cd, &b) {
            Ok(p) => Some(p),
            Err(e) => {
                problems.push(format!("embedding aborted: {e}"));
                None
            }
        };
        let projected = pi_lambda(cd, &b, &lambda);
        match (&embedded, &projected) {
            (Some(p), Some(t)) => {
                if !t.is_large() {
                    problems.push("projection is not large".into());
                }
                if !t.is_almost_semistandard(cd) {
                    problems.push("projection is not almost semistandard".into());
                }
                match f_of_t(cd, t) {
                    Ok(ft) => {
                        if &ft != p {
                            problems.push(format!(
                                "statistics map {:?} differs from embedding {:?}",
                                ft.exponents(),
                                p.exponents()
                            ));
                        }
                    }
                    Err(e) => problems.push(format!("statistics map failed: {e}")),
                }
                // Independence from the weight: a strictly larger weight
                // must give the same statistics map.
                let lambda2 = bump_lambda(cd, &lambda);
                match pi_lambda(cd, &b, &lambda2) {
                    Some(t2) => match f_of_t(cd, &t2) {
                        Ok(ft2) => {
                            if &ft2 != p {
                                problems.push("bumped weight changes the image".into());
                            }
                        }
                        Err(e) => problems.push(format!("bumped statistics map failed: {e}")),
                    },
                    None => problems.push("projection died under the bumped weight".into()),
                }
                if !image_member(cd, p) {
                    problems.push("embedded element fails the image chains".into());
                }
                // The exponent array carries the string's weight.
                if p.weight(cd) != fstring_weight(cd, &b) {
                    problems.push("embedded weight differs from the string weight".into());
                }
                // Statistics against the large projection: raising agrees on
                // the nose, lowering is offset by the weight coefficient
                // (the projection's weight exceeds the element's by λ).
                for i in 1..=cd.rank() {
                    let (pphi, peps) = p.stats(cd, i);
                    let (tphi, teps) = t.stats(cd, i);
                    if peps != teps {
                        problems.push(format!("eps_{i} differs between element and projection"));
                    }
                    if tphi - pphi != lambda.coeff(i) {
                        problems.push(format!("phi_{i} offset differs from the weight coefficient"));
                    }
                }
                axioms_tableau(cd, t, &mut report);
                axioms_psi(cd, p, &mut report);
            }
            (_, None) => problems.push("projection died under a large weight".into()),
            (None, _) => {}
        }
        report.push(CheckRecord {
            check: "theorem".into(),
            fstring: Some(b.indices().to_vec()),
            exponents: embedded.map(|p| p.exponents().to_vec()),
            ok: problems.is_empty(),
            detail: if problems.is_empty() {
                None
            } else {
                Some(problems.join("; "))
            },
        });
    }
    Ok(report)
}

/// Distinct embedded elements reachable from the seed by at most `depth`
/// lowering steps, breadth-first with indices in increasing order.
pub fn reachable_elements(cd: &CartanData, depth: usize) -> Result<Vec<PsiElement>> {
    let mut seen = std::collections::HashSet::new();
    let mut nodes = vec![PsiElement::seed(cd)];
    seen.insert(nodes[0].clone());
    let mut frontier = vec![nodes[0].clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &frontier {
            for i in 1..=cd.rank() {
                let child = p
                    .apply(cd, i, Dir::F)?
                    .expect("lowering is total on image elements");
                if seen.insert(child.clone()) {
                    nodes.push(child.clone());
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    Ok(nodes)
}

/// Enumerate all exponent arrays with entries `0..=bound` satisfying the
/// image chains, one row block at a time.
pub fn chain_valid_arrays(cd: &CartanData, bound: i64) -> Vec<Vec<i64>> {
    let seq = PsiSequence::new(cd);
    let mut arrays: Vec<Vec<i64>> = vec![Vec::new()];
    for block in 1..=seq.block_count() {
        let slots = &seq.blocks()[block - 1];
        let mut next = Vec::new();
        let choices = block_choices(cd, block, slots.len(), bound);
        for prefix in &arrays {
            for choice in &choices {
                let mut a = prefix.clone();
                a.extend_from_slice(choice);
                next.push(a);
            }
        }
        arrays = next;
    }
    arrays
}

/// All chain-valid exponent assignments for one block, entries `0..=bound`.
fn block_choices(cd: &CartanData, block: usize, len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; len];
    loop {
        if block_chain_ok(cd, block, &cur) {
            out.push(cur.clone());
        }
        // Odometer over 0..=bound per slot.
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < bound {
                cur[pos] += 1;
                for v in cur.iter_mut().skip(pos + 1) {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Chain check for a single block: zero-pad the other blocks (they pass
/// vacuously) and test membership.
fn block_chain_ok(cd: &CartanData, block: usize, values: &[i64]) -> bool {
    let seq = PsiSequence::new(cd);
    let slots = &seq.blocks()[block - 1];
    let mut exponents = vec![0i64; seq.slot_count()];
    let offset: usize = seq.blocks()[..block - 1].iter().map(Vec::len).sum();
    exponents[offset..offset + slots.len()].copy_from_slice(values);
    let p = PsiElement::from_exponents(cd, exponents).expect("aligned exponents");
    image_member(cd, &p)
}

/// Build the witness tableau of a chain-valid exponent array: row `i` gets
/// the letter counts determined by the block-`i` statistics, padded with
/// enough copies of the letter `i` to make the tableau large.
pub fn witness_tableau(cd: &CartanData, exponents: &[i64]) -> Result<Tableau> {
    use crate::cartan::LieType;
    let n = cd.rank();
    let seq = PsiSequence::new(cd);
    let p = PsiElement::from_exponents(cd, exponents.to_vec())?;
    if !image_member(cd, &p) {
        return Err(Error::HypothesisChain(
            "exponent array fails the image chains".into(),
        ));
    }
    // Statistic keyed `key` in block `i`; keys outside the block (possible
    // only in the top block, whose rows use a shorter alphabet) count zero.
    let mut block_offsets = Vec::with_capacity(seq.block_count());
    let mut acc = 0;
    for slots in seq.blocks() {
        block_offsets.push(acc);
        acc += slots.len();
    }
    let a = |i: usize, key: StatKey| -> i64 {
        let slots = &seq.blocks()[i - 1];
        match slots.iter().position(|slot| slot.key == key) {
            Some(pos) => exponents[block_offsets[i - 1] + pos],
            None => 0,
        }
    };
    let un = StatKey::Unbarred;
    let bar = StatKey::Barred;

    // Letter multiset of each row, without the leading letter-i padding.
    let mut row_tail: Vec<Vec<Letter>> = Vec::new();
    for i in 1..=seq.block_count() {
        let mut tail: Vec<Letter> = Vec::new();
        let mut push = |x: Letter, count: i64| {
            debug_assert!(count >= 0, "negative letter count for {x}");
            for _ in 0..count {
                tail.push(x);
            }
        };
        match cd.lie_type() {
            LieType::A => {
                // #(j) = a(j-1) - a(j) for j = i+1..n, #(n+1) = a(n).
                for j in i + 1..=n {
                    push(Letter::Unbarred(j), a(i, un(j - 1)) - a(i, un(j)));
                }
                push(Letter::Unbarred(n + 1), a(i, un(n)));
            }
            LieType::C => {
                for j in i + 1..=n {
                    push(Letter::Unbarred(j), a(i, un(j - 1)) - a(i, un(j)));
                }
                push(Letter::Barred(n), a(i, un(n)) - a(i, bar(n)));
                for j in (i + 1..=n - 1).rev() {
                    push(Letter::Barred(j), a(i, bar(j + 1)) - a(i, bar(j)));
                }
                push(Letter::Barred(i), a(i, bar(i + 1)));
            }
            LieType::B => {
                for j in i + 1..=n - 1 {
                    push(Letter::Unbarred(j), a(i, un(j - 1)) - a(i, un(j)));
                }
                // a(i, n) = 2·#{above 0} + #0 decodes into a zero bit and a
                // halved count.
                let an = a(i, un(n));
                let zeros = an % 2;
                let above_zero = an / 2;
                if i < n {
                    // The top row's n-letters are free padding; below it the
                    // count is pinned by the neighboring statistic.
                    push(Letter::Unbarred(n), a(i, un(n - 1)) - above_zero - zeros);
                }
                push(Letter::Zero, zeros);
                push(Letter::Barred(n), above_zero - a(i, bar(n)));
                for j in (i + 1..=n - 1).rev() {
                    push(Letter::Barred(j), a(i, bar(j + 1)) - a(i, bar(j)));
                }
                push(Letter::Barred(i), a(i, bar(i + 1)));
            }
            LieType::D => {
                let an1 = a(i, un(n - 1));
                let an = a(i, un(n));
                let shared = an1.min(an);
                if i <= n - 2 {
                    for j in i + 1..=n - 2 {
                        push(Letter::Unbarred(j), a(i, un(j - 1)) - a(i, un(j)));
                    }
                    push(Letter::Unbarred(n - 1), a(i, un(n - 2)) - an1.max(an));
                }
                // A row never holds both n and n̄; the smaller statistic is
                // carried entirely by the barred block below n.
                push(Letter::Unbarred(n), an1 - shared);
                push(Letter::Barred(n), an - shared);
                if i <= n - 2 {
                    push(Letter::Barred(n - 1), shared - a(i, bar(n - 1)));
                    for j in (i + 1..=n - 2).rev() {
                        push(Letter::Barred(j), a(i, bar(j + 1)) - a(i, bar(j)));
                    }
                    push(Letter::Barred(i), a(i, bar(i + 1)));
                } else {
                    push(Letter::Barred(n - 1), shared);
                }
            }
        }
        debug_assert!(
            tail.windows(2).all(|w| w[0].le(cd, w[1])),
            "tail letters are emitted in row order"
        );
        row_tail.push(tail);
    }
    // Trim empty trailing rows, then pad each remaining row with letter i so
    // row i has strictly more of them than the next row has boxes.
    while row_tail.last().map(|t| t.is_empty()).unwrap_or(false) {
        row_tail.pop();
    }
    let mut rows: Vec<Vec<Letter>> = Vec::with_capacity(row_tail.len());
    let mut below_len = 0usize;
    for (r0, tail) in row_tail.iter().enumerate().rev() {
        let i = r0 + 1;
        let pad = below_len + 1;
        let mut row = vec![Letter::Unbarred(i); pad];
        row.extend_from_slice(tail);
        below_len = row.len();
        rows.push(row);
    }
    rows.reverse();
    Tableau::new(cd, rows)
}

/// Recover a lowering string that reaches `t` from the highest-weight
/// tableau of its shape by peeling raising operators.
pub fn recover_fstring(cd: &CartanData, t: &Tableau) -> Result<(FString, DominantWeight)> {
    use crate::cartan::LieType;
    let shape = t.shape();
    let n = cd.rank();
    // Shape back to a dominant weight in the type's class.
    let len = |r: usize| -> i64 { shape.get(r).map(|&l| l as i64).unwrap_or(0) };
    let coeffs: Vec<i64> = match cd.lie_type() {
        LieType::A | LieType::C => (0..n).map(|r| len(r) - len(r + 1)).collect(),
        LieType::B => {
            let mut c: Vec<i64> = (0..n - 1).map(|r| len(r) - len(r + 1)).collect();
            c.push(2 * len(n - 1));
            c
        }
        LieType::D => {
            let mut c: Vec<i64> = (0..n.saturating_sub(2))
                .map(|r| len(r) - len(r + 1))
                .collect();
            c.push(len(n - 2));
            c.push(len(n - 2));
            c
        }
    };
    let lambda = DominantWeight::new(cd, coeffs)?;
    let mut indices_rev = Vec::new();
    let mut cur = t.clone();
    let u = highest_weight_tableau(cd, &lambda);
    'peel: while cur != u {
        for i in 1..=n {
            if let Some(up) = cur.apply(cd, i, Dir::E) {
                indices_rev.push(i);
                cur = up;
                continue 'peel;
            }
        }
        return Err(Error::InvalidInput(
            "peeling stalled before the highest-weight tableau".into(),
        ));
    }
    // The first raising peeled is the outermost lowering.
    let indices = indices_rev;
    Ok((FString::new(cd, indices)?, lambda))
}

/// Realize every chain-valid exponent array with entries `0..=bound`:
/// construct the witness tableau, check it is large almost semistandard,
/// check the statistics map reproduces the array, recover a lowering string
/// from the witness, and check the string embeds to the same element.
pub fn surjectivity_probe(cd: &CartanData, bound: i64) -> Result<Report> {
    let mut report = Report::empty();
    for exps in chain_valid_arrays(cd, bound) {
        let mut problems: Vec<String> = Vec::new();
        let expected = PsiElement::from_exponents(cd, exps.clone())?;
        match witness_tableau(cd, &exps) {
            Ok(t) => {
                if !t.is_semistandard_large_regime(cd) {
                    problems.push("witness is not large semistandard".into());
                }
                match f_of_t(cd, &t) {
                    Ok(ft) => {
                        if ft != expected {
                            problems.push(format!(
                                "witness statistics {:?} differ from target {:?}",
                                ft.exponents(),
                                expected.exponents()
                            ));
                        }
                    }
                    Err(e) => problems.push(format!("statistics map failed: {e}")),
                }
                match recover_fstring(cd, &t) {
                    Ok((b, lambda)) => {
                        match pi_lambda(cd, &b, &lambda) {
                            Some(back) if back == t => {}
                            _ => problems
                                .push("recovered string does not rebuild the witness".into()),
                        }
                        match psi_embed(cd, &b) {
                            Ok(p) => {
                                if p != expected {
                                    problems.push(format!(
                                        "embedding of the recovered string {:?} misses the target",
                                        b.indices()
                                    ));
                                }
                            }
                            Err(e) => problems.push(format!("embedding aborted: {e}")),
                        }
                    }
                    Err(e) => problems.push(format!("string recovery failed: {e}")),
                }
            }
            Err(e) => problems.push(format!("witness construction failed: {e}")),
        }
        report.push(CheckRecord {
            check: "probe".into(),
            fstring: None,
            exponents: Some(exps),
            ok: problems.is_empty(),
            detail: if problems.is_empty() {
                None
            } else {
                Some(problems.join("; "))
            },
        });
    }
    Ok(report)
}
