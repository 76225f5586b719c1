//! Maximal left-compressed intersecting families from their principal
//! generating sets.
//!
//! A principal generating set (PGS) is a strongly intersecting family of
//! 1-free generators `G ⊆ [2, 2k-1]` with `max(G) <= k + |G| - 1`. Each
//! member `G = {g_1, ..., g_r}` has companions `{1} ∪ [i+1, g_i]`; wedges of
//! one companion per member give the 1-containing half `H(G)` of the
//! generating set. `F(G) ∪ F(H(G))` is then an MLCIF, and every MLCIF
//! arises from exactly one PGS once PGSs are kept as `⪯`-antichains.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{compression_gap, maximal_elements, preceq, wedge, Order};
use crate::set::{all_subsets, k_subsets, UniformFamily, ZSet};
use crate::strong::{disjoint_witness, si, DisjointWitness};

/// Which part of `G_k` to return.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    All,
    With1,
    Without1,
}

/// `G ⊆ [2k-1]`, `1 <= |G| <= k` and `max(G) <= k + |G| - 1`.
pub fn in_universe(g: &ZSet, k: u32) -> bool {
    let r = g.len() as u32;
    r >= 1 && r <= k && g.last().is_some_and(|m| m < k + r)
}

/// Smallest `k >= 2` whose universe `G_k` holds every member.
pub fn infer_k(members: &[ZSet]) -> u32 {
    members
        .iter()
        .filter_map(|g| {
            let (r, m) = (g.len() as u32, g.last()?);
            // |G| <= k, max(G) <= k + |G| - 1 and max(G) <= 2k - 1
            Some(r.max(m + 1 - r).max((m + 1).div_ceil(2)))
        })
        .fold(2, u32::max)
}

/// The generator universe `G_k`, filtered by branch, in canonical order.
pub fn universe_gk(k: u32, branch: Branch) -> Result<Vec<ZSet>> {
    if k < 2 {
        return Err(Error::input(format!("k = {k}; the generator universe needs k >= 2")));
    }
    let mut out: Vec<ZSet> = all_subsets(2 * k - 1)
        .into_iter()
        .filter(|g| in_universe(g, k))
        .filter(|g| match branch {
            Branch::All => true,
            Branch::With1 => g.contains(1),
            Branch::Without1 => !g.contains(1),
        })
        .collect();
    out.sort();
    Ok(out)
}

/// A validated principal generating set.
///
/// Members are 1-free, lie in `G_k`, are pairwise and self strongly
/// intersecting, and form a `⪯`-antichain. They are kept in lexicographic
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Pgs {
    k: u32,
    members: Vec<ZSet>,
}

impl Pgs {
    /// The empty PGS (it determines the Star).
    pub fn empty(k: u32) -> Self {
        Pgs { k, members: Vec::new() }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn members(&self) -> &[ZSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Canonical catalog order: fewer members first, then lexicographic.
    pub fn canonical_cmp(&self, other: &Pgs) -> std::cmp::Ordering {
        (self.k, self.members.len(), &self.members).cmp(&(other.k, other.members.len(), &other.members))
    }

    pub fn to_literal(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(ZSet::to_literal).collect();
        parts.join(";")
    }
}

impl fmt::Display for Pgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// One reason a candidate generating set is not a PGS.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PgsViolation {
    ContainsOne { set: ZSet },
    OutsideUniverse { set: ZSet, k: u32 },
    Duplicate { set: ZSet },
    NotSelfSi { set: ZSet, witness: Option<DisjointWitness> },
    NotSi { g: ZSet, h: ZSet, witness: Option<DisjointWitness> },
    Comparable { lower: ZSet, upper: ZSet },
}

impl fmt::Display for PgsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wit = |w: &Option<DisjointWitness>| {
            w.as_ref().map_or(String::new(), |w| format!(" (disjoint pair {}, {})", w.s, w.t))
        };
        match self {
            PgsViolation::ContainsOne { set } => write!(f, "{set} contains 1"),
            PgsViolation::OutsideUniverse { set, k } => {
                write!(f, "{set} is not in G_{k} (needs |G| <= {k} and max(G) <= {k} + |G| - 1)")
            }
            PgsViolation::Duplicate { set } => write!(f, "{set} listed twice"),
            PgsViolation::NotSelfSi { set, witness } => {
                write!(f, "{set} fails self strong intersection{}", wit(witness))
            }
            PgsViolation::NotSi { g, h, witness } => {
                write!(f, "{g} and {h} are not strongly intersecting{}", wit(witness))
            }
            PgsViolation::Comparable { lower, upper } => {
                write!(f, "{lower} ⪯ {upper}: the set is not an antichain")
            }
        }
    }
}

/// Checks every PGS condition and reports each violation separately.
pub fn validate_pgs(k: u32, members: &[ZSet]) -> Result<Pgs> {
    if k < 2 {
        return Err(Error::input(format!("k = {k}; need k >= 2")));
    }
    let mut violations = Vec::new();
    let mut seen = BTreeSet::new();
    let mut sorted: Vec<ZSet> = Vec::new();
    for g in members {
        if g.is_empty() {
            return Err(Error::input("empty generator"));
        }
        if !seen.insert(g.clone()) {
            violations.push(PgsViolation::Duplicate { set: g.clone() });
            continue;
        }
        sorted.push(g.clone());
        if g.contains(1) {
            violations.push(PgsViolation::ContainsOne { set: g.clone() });
        }
        if !in_universe(g, k) {
            violations.push(PgsViolation::OutsideUniverse { set: g.clone(), k });
        }
    }
    sorted.sort();
    for (i, g) in sorted.iter().enumerate() {
        if !si(g, g) {
            violations.push(PgsViolation::NotSelfSi { set: g.clone(), witness: disjoint_witness(g, g)? });
        }
        for h in &sorted[i + 1..] {
            if !si(g, h) {
                violations.push(PgsViolation::NotSi {
                    g: g.clone(),
                    h: h.clone(),
                    witness: disjoint_witness(g, h)?,
                });
            }
            if preceq(g, h) {
                violations.push(PgsViolation::Comparable { lower: g.clone(), upper: h.clone() });
            } else if preceq(h, g) {
                violations.push(PgsViolation::Comparable { lower: h.clone(), upper: g.clone() });
            }
        }
    }
    if violations.is_empty() {
        Ok(Pgs { k, members: sorted })
    } else {
        Err(Error::InvalidPgs(violations))
    }
}

/// One companion index per PGS member, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeSelection(pub Vec<usize>);

impl WedgeSelection {
    /// Every selection for `pgs`, in lexicographic order of index tuples.
    pub fn all(pgs: &Pgs) -> impl Iterator<Item = WedgeSelection> + '_ {
        let sizes: Vec<usize> = pgs.members.iter().map(ZSet::len).collect();
        let total: usize = sizes.iter().product();
        (0..total).map(move |mut code| {
            let mut idx = vec![0; sizes.len()];
            for j in (0..sizes.len()).rev() {
                idx[j] = code % sizes[j] + 1;
                code /= sizes[j];
            }
            WedgeSelection(idx)
        })
    }

    fn check(&self, pgs: &Pgs) -> Result<()> {
        if self.0.len() != pgs.members.len() {
            return Err(Error::input(format!(
                "selection has {} indices for {} members",
                self.0.len(),
                pgs.members.len()
            )));
        }
        for (&i, g) in self.0.iter().zip(&pgs.members) {
            if i < 1 || i > g.len() {
                return Err(Error::input(format!("index {i} out of range for {g}")));
            }
        }
        Ok(())
    }
}

/// `{1} ∪ [i+1, g_i]` for the 1-based index `i`.
pub fn companion(g: &ZSet, i: usize) -> Result<ZSet> {
    let gi = g
        .coord(i)
        .ok_or_else(|| Error::input(format!("companion index {i} out of range for {g}")))?;
    let mut v = vec![1];
    v.extend((i as u32 + 1).max(2)..=gi);
    Ok(ZSet::from_sorted_unchecked(v))
}

fn companions(pgs: &Pgs, sel: &WedgeSelection) -> Vec<ZSet> {
    sel.0
        .iter()
        .zip(&pgs.members)
        .map(|(&i, g)| companion(g, i).expect("selection checked"))
        .collect()
}

/// The `⪯`-maximal wedges of companions; `{{1}}` for the empty PGS.
pub fn hset_generators(pgs: &Pgs) -> Vec<ZSet> {
    if pgs.is_empty() {
        return vec![ZSet::from([1])];
    }
    let wedges: BTreeSet<ZSet> = WedgeSelection::all(pgs)
        .map(|sel| wedge(&companions(pgs, &sel)).expect("companions are non-empty"))
        .collect();
    maximal_elements(&wedges, Order::Preceq).expect("preceq accepts mixed sizes")
}

/// Wedge of the selected companions, evaluated through the interval-union
/// closed form after discarding companions that cannot affect the result.
pub fn normalized_wedge(pgs: &Pgs, sel: &WedgeSelection) -> Result<ZSet> {
    sel.check(pgs)?;
    if pgs.is_empty() {
        return Err(Error::input("no companions to wedge for the empty PGS"));
    }
    // (index, companion size) pairs; only ⪯-minimal companions matter since B ⪯ A gives B ∧ A = B.
    let comps: Vec<(u32, ZSet)> = sel
        .0
        .iter()
        .zip(&pgs.members)
        .map(|(&i, g)| (i as u32, companion(g, i).expect("selection checked")))
        .collect();
    let mut kept: Vec<(u32, u32)> = Vec::new();
    for (a, (ia, ca)) in comps.iter().enumerate() {
        let removable = comps.iter().enumerate().any(|(b, (_, cb))| {
            b != a && preceq(cb, ca) && (cb != ca || b < a)
        });
        if !removable {
            kept.push((*ia, ca.len() as u32));
        }
    }
    kept.sort_unstable();
    debug_assert!(kept.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1));

    // {1} ∪ ⋃_j [|C_j| + i_{j+1}, |C_{j+1}| + i_{j+1} - 1], with |C_0| = 1.
    let mut out = vec![1];
    let mut prev_size = 1;
    for &(i, size) in &kept {
        out.extend(prev_size + i..=size + i - 1);
        prev_size = size;
    }
    Ok(ZSet::from_sorted_unchecked(out))
}

/// `F(n, k, gens)`: every `k`-subset of `[n]` generated by some member of `gens`.
pub fn materialize(n: u32, k: u32, gens: &[ZSet]) -> Result<UniformFamily> {
    if let Some(g) = gens.iter().find(|g| g.len() > k as usize) {
        return Err(Error::input(format!("generator {g} has more than k = {k} elements")));
    }
    if k > n {
        return Err(Error::input(format!("k = {k} exceeds n = {n}")));
    }
    let mut fam = UniformFamily::empty(n, k);
    let live: Vec<&ZSet> = gens.iter().collect();
    let mut cur = Vec::with_capacity(k as usize);
    extend_prefix(n, k as usize, &live, &mut cur, &mut fam);
    Ok(fam)
}

/// Depth-first over ascending prefixes; a prefix survives while some generator still bounds it.
fn extend_prefix(n: u32, k: usize, live: &[&ZSet], cur: &mut Vec<u32>, fam: &mut UniformFamily) {
    let t = cur.len();
    if t == k {
        fam.insert_unchecked(ZSet::from_sorted_unchecked(cur.clone()));
        return;
    }
    let lo = cur.last().map_or(1, |&p| p + 1);
    let hi = n - (k - 1 - t) as u32;
    for v in lo..=hi {
        let next: Vec<&ZSet> = live
            .iter()
            .copied()
            .filter(|g| g.elems().get(t).is_none_or(|&gt| v <= gt))
            .collect();
        if next.is_empty() {
            // generators bound coordinate t from above, so larger v fail too
            break;
        }
        cur.push(v);
        extend_prefix(n, k, &next, cur, fam);
        cur.pop();
    }
}

/// The PGS together with the 1-containing generators it induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratingSet {
    pub pgs: Pgs,
    /// `⪯`-maximal wedges of companions, each containing 1.
    pub hgens: Vec<ZSet>,
}

impl GeneratingSet {
    pub fn from_pgs(pgs: Pgs) -> Self {
        let hgens = hset_generators(&pgs);
        GeneratingSet { pgs, hgens }
    }

    /// `pgs ∪ hgens` in lexicographic order.
    pub fn all_generators(&self) -> Vec<ZSet> {
        let mut v: Vec<ZSet> = self.pgs.members.iter().chain(&self.hgens).cloned().collect();
        v.sort();
        v.dedup();
        v
    }
}

/// `F(G) ∪ F(H(G))` on `[n]`.
pub fn build_mlcif(n: u32, k: u32, pgs: &Pgs) -> Result<(UniformFamily, GeneratingSet)> {
    if pgs.k != k {
        return Err(Error::input(format!("PGS was validated for k = {}, not {k}", pgs.k)));
    }
    if n < 2 * k {
        return Err(Error::input(format!("n = {n} < 2k = {}", 2 * k)));
    }
    let gens = GeneratingSet::from_pgs(pgs.clone());
    let fam = materialize(n, k, &gens.all_generators())?;
    Ok((fam, gens))
}

/// First failing MLCIF condition, with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MlcifDiagnostic {
    NotIntersecting { a: ZSet, b: ZSet },
    NotLeftCompressed { member: ZSet, missing: ZSet },
    NotMaximal { addable: ZSet },
}

impl fmt::Display for MlcifDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MlcifDiagnostic::NotIntersecting { a, b } => write!(f, "not intersecting: {a} ∩ {b} = ∅"),
            MlcifDiagnostic::NotLeftCompressed { member, missing } => {
                write!(f, "not left-compressed: {missing} <= {member} is missing")
            }
            MlcifDiagnostic::NotMaximal { addable } => {
                write!(f, "not maximal: {addable} meets every member")
            }
        }
    }
}

/// Intersecting, left-compressed, and no `k`-set outside can be added while staying intersecting.
pub fn check_mlcif(fam: &UniformFamily) -> Result<(), MlcifDiagnostic> {
    if let Some((a, b)) = fam.disjoint_pair() {
        return Err(MlcifDiagnostic::NotIntersecting { a, b });
    }
    if let Some((member, missing)) = compression_gap(fam) {
        return Err(MlcifDiagnostic::NotLeftCompressed { member, missing });
    }
    for s in k_subsets(fam.n(), fam.k()) {
        if !fam.contains(&s) && fam.iter().all(|m| m.intersects(&s)) {
            return Err(MlcifDiagnostic::NotMaximal { addable: s });
        }
    }
    Ok(())
}

pub fn is_mlcif(fam: &UniformFamily) -> bool {
    check_mlcif(fam).is_ok()
}

/// `π(A)`: the first `r` coordinates, `r` the largest index with `a_r < r + k`.
pub fn truncate_pi(a: &ZSet, k: u32) -> ZSet {
    let r = (1..=a.len())
        .rev()
        .find(|&r| a.coord(r).is_some_and(|ar| ar < r as u32 + k))
        .unwrap_or(0);
    a.truncate(r)
}

/// Generators read back from an MLCIF.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recovered {
    pub pgs: Pgs,
    /// `⪯`-maximal truncations that contain 1.
    pub hgens: Vec<ZSet>,
}

/// Reads the PGS off the `<=`-maximal members of an MLCIF.
pub fn recover_pgs(fam: &UniformFamily) -> Result<Recovered> {
    check_mlcif(fam).map_err(Error::NotMlcif)?;
    let k = fam.k();
    let tops = maximal_elements(fam, Order::Leq)?;
    let truncated: BTreeSet<ZSet> = tops.iter().map(|a| truncate_pi(a, k)).collect();
    let (with1, without1): (Vec<ZSet>, Vec<ZSet>) = truncated.into_iter().partition(|g| g.contains(1));
    let members = maximal_elements(&without1, Order::Preceq)?;
    let hgens = maximal_elements(&with1, Order::Preceq)?;
    let pgs = validate_pgs(k.max(2), &members).map_err(|e| {
        Error::Contract(format!("recovered generators do not form a PGS: {e}"))
    })?;
    Ok(Recovered { pgs, hgens })
}

/// Extends an MLCIF on `[2k]` to `[n_new]` through its PGS.
pub fn extend_family(fam: &UniformFamily, n_new: u32) -> Result<UniformFamily> {
    let k = fam.k();
    if fam.n() != 2 * k {
        return Err(Error::input(format!("extension starts from n = 2k, got n = {}", fam.n())));
    }
    if n_new < 2 * k {
        return Err(Error::input(format!("target n = {n_new} < 2k = {}", 2 * k)));
    }
    let rec = recover_pgs(fam)?;
    build_mlcif(n_new, k, &rec.pgs).map(|(f, _)| f)
}

/// Guards the exponential PGS search.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationBudget {
    pub max_k: u32,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_k: 5 }
    }
}

/// Every canonical PGS for `k`, in canonical order, the empty one first.
///
/// Candidates are the self strongly intersecting members of `G_k(1̄)`
/// (equivalently those with some `g_p = 2p - 1`); cliques are grown over
/// pairwise strongly intersecting, `⪯`-incomparable candidates.
pub fn enumerate_pgs(k: u32, budget: EnumerationBudget) -> Result<Vec<Pgs>> {
    if k > budget.max_k {
        return Err(Error::Budget(format!("k = {k} exceeds max-k = {}", budget.max_k)));
    }
    let pool: Vec<ZSet> = universe_gk(k, Branch::Without1)?
        .into_iter()
        .filter(|g| si(g, g))
        .collect();
    let m = pool.len();
    let compatible: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| i != j && si(&pool[i], &pool[j]) && !preceq(&pool[i], &pool[j]) && !preceq(&pool[j], &pool[i]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow_cliques(&pool, &compatible, 0, &mut chosen, &mut |idx| {
        out.push(Pgs { k, members: idx.iter().map(|&i| pool[i].clone()).collect() });
    });
    out.sort_by(Pgs::canonical_cmp);
    Ok(out)
}

fn grow_cliques(
    pool: &[ZSet],
    compatible: &[Vec<bool>],
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    emit(chosen);
    for c in start..pool.len() {
        if chosen.iter().all(|&x| compatible[x][c]) {
            chosen.push(c);
            grow_cliques(pool, compatible, c + 1, chosen, emit);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::is_left_compressed;

    fn z<const N: usize>(a: [u32; N]) -> ZSet {
        ZSet::from(a)
    }

    fn pgs(k: u32, members: &[ZSet]) -> Pgs {
        validate_pgs(k, members).unwrap()
    }

    #[test]
    fn inferred_k() {
        assert_eq!(infer_k(&[]), 2);
        assert_eq!(infer_k(&[z([2, 3])]), 2);
        assert_eq!(infer_k(&[z([2, 4])]), 3);
        assert_eq!(infer_k(&[z([2, 3]), z([2, 4, 5])]), 3);
        assert_eq!(infer_k(&[z([4, 5, 6, 7])]), 4);
        for k in 2..=5 {
            for g in universe_gk(k, Branch::All).unwrap() {
                assert!(infer_k(std::slice::from_ref(&g)) <= k);
                assert!(in_universe(&g, infer_k(std::slice::from_ref(&g))));
            }
        }
    }

    #[test]
    fn universe_examples() {
        assert_eq!(
            universe_gk(2, Branch::All).unwrap(),
            vec![z([1]), z([1, 2]), z([1, 3]), z([2]), z([2, 3])]
        );
        assert_eq!(universe_gk(2, Branch::Without1).unwrap(), vec![z([2]), z([2, 3])]);
        assert_eq!(universe_gk(3, Branch::Without1).unwrap().len(), 9);
        for g in universe_gk(4, Branch::All).unwrap() {
            assert!(g.last().unwrap() < 4 + g.len() as u32);
        }
        assert!(universe_gk(1, Branch::All).is_err());
    }

    #[test]
    fn validation_examples() {
        assert_eq!(pgs(3, &[z([2, 3])]).members(), &[z([2, 3])]);
        let Err(Error::InvalidPgs(v)) = validate_pgs(3, &[z([2, 4])]) else { panic!() };
        assert!(matches!(&v[0], PgsViolation::NotSelfSi { set, .. } if *set == z([2, 4])));
        let Err(Error::InvalidPgs(v)) = validate_pgs(3, &[z([2]), z([2, 3])]) else { panic!() };
        assert!(v.iter().any(|x| matches!(x, PgsViolation::NotSelfSi { set, .. } if *set == z([2]))));
        let Err(Error::InvalidPgs(v)) = validate_pgs(3, &[z([2, 3]), z([2, 3, 4])]) else { panic!() };
        assert!(v.iter().any(|x| matches!(x, PgsViolation::Comparable { .. })));
        let Err(Error::InvalidPgs(v)) = validate_pgs(3, &[z([1, 3])]) else { panic!() };
        assert!(matches!(&v[0], PgsViolation::ContainsOne { .. }));
        let Err(Error::InvalidPgs(v)) = validate_pgs(2, &[z([2, 4])]) else { panic!() };
        assert!(v.iter().any(|x| matches!(x, PgsViolation::OutsideUniverse { .. })));
    }

    #[test]
    fn companion_examples() {
        assert_eq!(companion(&z([2, 3, 5]), 3).unwrap(), z([1, 4, 5]));
        assert_eq!(companion(&z([2, 3]), 1).unwrap(), z([1, 2]));
        // [2, b] has g_i = i + 1
        let g = ZSet::interval(2, 6);
        for i in 1..=5 {
            assert_eq!(companion(&g, i).unwrap(), z([1, i as u32 + 1]));
        }
        assert!(companion(&z([2, 3]), 3).is_err());
        assert!(companion(&z([2, 3]), 0).is_err());
    }

    #[test]
    fn hset_examples() {
        for b in 3..=7 {
            let p = pgs(b - 1, &[ZSet::interval(2, b)]);
            assert_eq!(hset_generators(&p), vec![z([1, b])]);
        }
        // [a, b] -> {1} ∪ [b - a + 2, b]
        let p = pgs(4, &[ZSet::interval(3, 6)]);
        let mut expect = vec![1];
        expect.extend(5..=6);
        assert_eq!(hset_generators(&p), vec![ZSet::new(expect).unwrap()]);
        assert_eq!(hset_generators(&Pgs::empty(3)), vec![z([1])]);
    }

    #[test]
    fn normalized_wedge_examples() {
        let p = pgs(3, &[z([2, 3, 5])]);
        for i in 1..=3 {
            let sel = WedgeSelection(vec![i]);
            assert_eq!(normalized_wedge(&p, &sel).unwrap(), companion(&z([2, 3, 5]), i).unwrap());
        }
        assert_eq!(hset_generators(&p), vec![z([1, 3]), z([1, 4, 5])]);
        assert!(normalized_wedge(&p, &WedgeSelection(vec![4])).is_err());
        assert!(normalized_wedge(&p, &WedgeSelection(vec![1, 1])).is_err());
    }

    #[test]
    fn materialize_examples() {
        let star = materialize(4, 2, &[z([1])]).unwrap();
        assert_eq!(star.iter().cloned().collect::<Vec<_>>(), vec![z([1, 2]), z([1, 3]), z([1, 4])]);
        let f = materialize(4, 2, &[z([2, 3])]).unwrap();
        assert_eq!(f.iter().cloned().collect::<Vec<_>>(), vec![z([1, 2]), z([1, 3]), z([2, 3])]);
        let f = materialize(6, 3, &[z([2, 3])]).unwrap();
        assert_eq!(f.len(), 10);
        assert!(f.iter().all(|s| s.elems().iter().filter(|&&e| e <= 3).count() >= 2));
        assert!(materialize(6, 2, &[z([2, 3, 4])]).is_err());
        assert!(materialize(6, 3, &[]).unwrap().is_empty());
    }

    #[test]
    fn materialize_matches_filter() {
        let gens = [z([2, 3, 5]), z([1, 4]), z([3])];
        let f = materialize(8, 3, &gens).unwrap();
        let brute: Vec<ZSet> = k_subsets(8, 3)
            .into_iter()
            .filter(|s| gens.iter().any(|g| preceq(s, g)))
            .collect();
        assert_eq!(f.iter().cloned().collect::<Vec<_>>(), brute);
    }

    #[test]
    fn is_mlcif_examples() {
        let star = materialize(4, 2, &[z([1])]).unwrap();
        assert!(is_mlcif(&star));
        let cut = UniformFamily::new(4, 2, [z([1, 2]), z([1, 3])]).unwrap();
        assert_eq!(check_mlcif(&cut), Err(MlcifDiagnostic::NotMaximal { addable: z([1, 4]) }));
        let bad = UniformFamily::new(4, 2, [z([2, 3]), z([1, 2]), z([1, 3]), z([1, 4])]).unwrap();
        assert_eq!(
            check_mlcif(&bad),
            Err(MlcifDiagnostic::NotIntersecting { a: z([1, 4]), b: z([2, 3]) })
        );
        let gap = UniformFamily::new(4, 2, [z([1, 3]), z([2, 3])]).unwrap();
        assert!(matches!(check_mlcif(&gap), Err(MlcifDiagnostic::NotLeftCompressed { .. })));
    }

    #[test]
    fn build_named_families() {
        for n in 4..=6 {
            let (f, g) = build_mlcif(n, 2, &Pgs::empty(2)).unwrap();
            assert_eq!(f, materialize(n, 2, &[z([1])]).unwrap());
            assert_eq!(g.hgens, vec![z([1])]);
        }
        let (f, _) = build_mlcif(7, 3, &pgs(3, &[z([2, 3])])).unwrap();
        assert!(f.iter().all(|s| s.elems().iter().filter(|&&e| e <= 3).count() >= 2));
        assert!(is_mlcif(&f));
        assert!(build_mlcif(5, 3, &Pgs::empty(3)).is_err());
        assert!(build_mlcif(8, 4, &Pgs::empty(3)).is_err());
    }

    #[test]
    fn recover_examples() {
        let (star, _) = build_mlcif(7, 3, &Pgs::empty(3)).unwrap();
        let r = recover_pgs(&star).unwrap();
        assert!(r.pgs.is_empty());
        assert_eq!(r.hgens, vec![z([1])]);

        let (a23, _) = build_mlcif(7, 3, &pgs(3, &[z([2, 3])])).unwrap();
        let r = recover_pgs(&a23).unwrap();
        assert_eq!(r.pgs.members(), &[z([2, 3])]);
        assert!(r.hgens.iter().all(|h| preceq(h, &z([2, 3]))));

        let (hm, _) = build_mlcif(6, 3, &pgs(3, &[z([2, 3, 4])])).unwrap();
        let r = recover_pgs(&hm).unwrap();
        assert_eq!(r.pgs.members(), &[z([2, 3, 4])]);
        assert_eq!(r.hgens, vec![z([1, 4])]);

        let not = UniformFamily::new(6, 3, [z([1, 2, 3])]).unwrap();
        assert!(matches!(recover_pgs(&not), Err(Error::NotMlcif(_))));
    }

    #[test]
    fn truncation() {
        assert_eq!(truncate_pi(&z([1, 5, 6]), 3), z([1]));
        assert_eq!(truncate_pi(&z([2, 3, 5]), 3), z([2, 3, 5]));
        assert_eq!(truncate_pi(&z([1, 3, 8]), 3), z([1, 3]));
    }

    #[test]
    fn extend_examples() {
        let (star4, _) = build_mlcif(4, 2, &Pgs::empty(2)).unwrap();
        let star6 = extend_family(&star4, 6).unwrap();
        assert_eq!(star6, materialize(6, 2, &[z([1])]).unwrap());
        let (a23, _) = build_mlcif(6, 3, &pgs(3, &[z([2, 3])])).unwrap();
        let ext = extend_family(&a23, 8).unwrap();
        assert!(is_mlcif(&ext));
        assert_eq!(recover_pgs(&ext).unwrap().pgs.members(), &[z([2, 3])]);
        assert!(extend_family(&ext, 10).is_err());
        assert!(extend_family(&a23, 5).is_err());
    }

    #[test]
    fn enumerate_small() {
        let k2 = enumerate_pgs(2, EnumerationBudget::default()).unwrap();
        assert_eq!(k2, vec![Pgs::empty(2), pgs(2, &[z([2, 3])])]);
        let pool: Vec<ZSet> = universe_gk(3, Branch::Without1)
            .unwrap()
            .into_iter()
            .filter(|g| si(g, g))
            .collect();
        assert_eq!(pool, vec![z([2, 3]), z([2, 3, 4]), z([2, 3, 5]), z([2, 4, 5]), z([3, 4, 5])]);
        assert!(matches!(
            enumerate_pgs(6, EnumerationBudget::default()),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn built_families_are_compressed() {
        for p in enumerate_pgs(3, EnumerationBudget::default()).unwrap() {
            let (f, _) = build_mlcif(7, 3, &p).unwrap();
            assert!(is_left_compressed(&f));
        }
    }
}
