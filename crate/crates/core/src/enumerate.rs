//! Exhaustive desk-scale enumeration: the crystal generated from the
//! highest-weight tableau under the lowering operators, and an independent
//! brute-force filter over all fillings of a shape.

use std::collections::HashSet;

use crate::cartan::CartanData;
use crate::crystal::Dir;
use crate::error::{Error, Result};
use crate::letters::Letter;
use crate::tableau::{highest_weight_tableau, DominantWeight, Tableau};

pub const DEFAULT_CAP: usize = 100_000;

/// A finite crystal graph: tableaux in discovery order and colored edges
/// between their positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub nodes: Vec<Tableau>,
    /// `(from, index, to)` with positions into `nodes`.
    pub edges: Vec<(usize, usize, usize)>,
}

/// Closure of `{u_λ}` under all lowering operators, breadth-first with
/// indices tried in increasing order. The traversal order is deterministic,
/// so repeated runs yield identical node and edge lists.
pub fn enumerate_crystal(
    cd: &CartanData,
    lambda: &DominantWeight,
    cap: usize,
) -> Result<CrystalGraph> {
    let start = highest_weight_tableau(cd, lambda);
    let mut nodes = vec![start.clone()];
    let mut index_of: std::collections::HashMap<Tableau, usize> = Default::default();
    index_of.insert(start, 0);
    let mut edges = Vec::new();
    let mut next = 0;
    while next < nodes.len() {
        let t = nodes[next].clone();
        for i in 1..=cd.rank() {
            if let Some(child) = t.apply(cd, i, Dir::F) {
                let to = match index_of.get(&child) {
                    Some(&idx) => idx,
                    None => {
                        let idx = nodes.len();
                        if idx >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        nodes.push(child.clone());
                        index_of.insert(child, idx);
                        idx
                    }
                };
                edges.push((next, i, to));
            }
        }
        next += 1;
    }
    Ok(CrystalGraph { nodes, edges })
}

/// All almost-semistandard fillings of a partition shape, by brute force.
///
/// For type A this is exactly the semistandard condition; for the other
/// types the two-column conditions of the full classification are not
/// checked, which is enough for the single-column and large-regime
/// comparisons this oracle backs.
pub fn enumerate_semistandard_oracle(
    cd: &CartanData,
    shape: &[usize],
    cap: usize,
) -> Result<Vec<Tableau>> {
    for w in shape.windows(2) {
        if w[0] < w[1] {
            return Err(Error::InvalidShape("shape must weakly decrease".into()));
        }
    }
    if shape.contains(&0) {
        return Err(Error::InvalidShape("zero-length row".into()));
    }
    let alphabet = Letter::alphabet(cd);
    let mut rows: Vec<Vec<Letter>> = shape.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill(cd, shape, &alphabet, &mut rows, 0, 0, &mut out, cap)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    cd: &CartanData,
    shape: &[usize],
    alphabet: &[Letter],
    rows: &mut Vec<Vec<Letter>>,
    r: usize,
    c: usize,
    out: &mut Vec<Tableau>,
    cap: usize,
) -> Result<()> {
    if r == shape.len() {
        let t = Tableau::new(cd, rows.clone()).expect("shape is a partition");
        if t.is_almost_semistandard(cd) {
            if out.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(t);
        }
        return Ok(());
    }
    if c == shape[r] {
        return fill(cd, shape, alphabet, rows, r + 1, 0, out, cap);
    }
    for &x in alphabet {
        // Prune on the row order early; column conditions are settled by the
        // final predicate.
        if c > 0 && !rows[r][c - 1].le(cd, x) {
            continue;
        }
        rows[r].push(x);
        fill(cd, shape, alphabet, rows, r, c + 1, out, cap)?;
        rows[r].pop();
    }
    Ok(())
}

/// Deterministic set-equality helper for comparing the two enumerations.
pub fn same_tableau_set(a: &[Tableau], b: &[Tableau]) -> bool {
    let sa: HashSet<&Tableau> = a.iter().collect();
    let sb: HashSet<&Tableau> = b.iter().collect();
    sa == sb
}
