//! Strong intersection of generator pairs.
//!
//! `G` and `H` are strongly intersecting when every `S <= G` meets every
//! `T <= H`. This is decided by the prefix-count criterion
//! `μ_G(ℓ) + μ_H(ℓ) > ℓ` for some `ℓ`; [`disjoint_witness`] searches for a
//! counterexample directly and is the independent check of it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{compression_closure, prefix_count};
use crate::set::ZSet;

/// `ℓ` with `μ_G(ℓ) + μ_H(ℓ) > ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SiWitness {
    pub ell: u32,
}

/// `S <= G` and `T <= H` with `S ∩ T = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointWitness {
    pub s: ZSet,
    pub t: ZSet,
}

fn check_generator(g: &ZSet, n: u32) -> Result<()> {
    if g.is_empty() {
        return Err(Error::input("strong intersection is undefined for the empty set"));
    }
    if !g.within(n) {
        return Err(Error::input(format!("{g} is not a subset of [{n}]")));
    }
    Ok(())
}

/// Smallest `ℓ ∈ [1, n]` with `μ_G(ℓ) + μ_H(ℓ) > ℓ`, if any.
pub fn strongly_intersecting(g: &ZSet, h: &ZSet, n: u32) -> Result<Option<SiWitness>> {
    check_generator(g, n)?;
    check_generator(h, n)?;
    Ok(min_witness(g, h))
}

/// Unchecked core of [`strongly_intersecting`] for non-empty sets.
pub(crate) fn min_witness(g: &ZSet, h: &ZSet) -> Option<SiWitness> {
    if g.is_empty() || h.is_empty() {
        return None;
    }
    // The left side only grows at elements of G ∪ H, so the first witness is one of them.
    let mut candidates: Vec<u32> = g.elems().iter().chain(h.elems()).copied().collect();
    candidates.sort_unstable();
    candidates.dedup();
    candidates
        .into_iter()
        .find(|&ell| prefix_count(g, ell) + prefix_count(h, ell) > ell)
        .map(|ell| SiWitness { ell })
}

pub(crate) fn si(g: &ZSet, h: &ZSet) -> bool {
    min_witness(g, h).is_some()
}

/// Indices `(p, q)` with `g_p = h_q = p + q - 1`, read off the minimal witness.
pub fn meet_indices(g: &ZSet, h: &ZSet, n: u32) -> Result<(usize, usize)> {
    let w = strongly_intersecting(g, h, n)?.ok_or_else(|| {
        Error::Contract(format!("{g} and {h} are not strongly intersecting"))
    })?;
    let p = prefix_count(g, w.ell) as usize;
    let q = prefix_count(h, w.ell) as usize;
    debug_assert_eq!(g.coord(p), Some(w.ell));
    debug_assert_eq!(h.coord(q), Some(w.ell));
    debug_assert_eq!(w.ell as usize, p + q - 1);
    Ok((p, q))
}

/// Lexicographically least disjoint pair in `L(G) × L(H)`, by exhaustive search.
pub fn disjoint_witness(g: &ZSet, h: &ZSet) -> Result<Option<DisjointWitness>> {
    if g.is_empty() || h.is_empty() {
        return Err(Error::input("disjoint witness needs non-empty sets"));
    }
    let n = g.last().unwrap_or(0).max(h.last().unwrap_or(0));
    let lg = compression_closure(g, n)?;
    let lh = compression_closure(h, n)?;
    for s in &lg {
        if let Some(t) = lh.iter().find(|t| s.is_disjoint(t)) {
            return Ok(Some(DisjointWitness { s: s.clone(), t: t.clone() }));
        }
    }
    Ok(None)
}

/// Every pair, self-pairs included, is strongly intersecting.
pub fn is_si_family(gens: &[ZSet], n: u32) -> Result<bool> {
    for g in gens {
        check_generator(g, n)?;
    }
    Ok(gens
        .iter()
        .enumerate()
        .all(|(i, g)| gens[i..].iter().all(|h| si(g, h))))
}

/// Verdict for one (unordered) generator pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub g: ZSet,
    pub h: ZSet,
    pub witness: Option<SiWitness>,
    pub disjoint: Option<DisjointWitness>,
}

impl PairVerdict {
    pub fn is_si(&self) -> bool {
        self.witness.is_some()
    }
}

/// Pairwise report over a generator list, self-pairs first for each member.
///
/// Failing pairs carry a disjoint witness found by exhaustive search.
pub fn pair_report(gens: &[ZSet], n: u32) -> Result<Vec<PairVerdict>> {
    let mut out = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for h in &gens[i..] {
            let witness = strongly_intersecting(g, h, n)?;
            let disjoint = match witness {
                Some(_) => None,
                None => disjoint_witness(g, h)?,
            };
            out.push(PairVerdict { g: g.clone(), h: h.clone(), witness, disjoint });
        }
    }
    Ok(out)
}
