//! Finite subsets of `[n]` and uniform families of them.
//!
//! A [`ZSet`] is always kept in strictly ascending order, so the i-th
//! element is the i-th coordinate used by the orders in [`crate::poset`].
//! Sets whose elements all fit in a machine word carry a bitmask mirror
//! that speeds up disjointness and membership tests; equality, hashing and
//! ordering only ever look at the element list.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest element representable in the bitmask mirror.
const MASK_LIMIT: u32 = 64;

#[derive(Clone, Default)]
pub struct ZSet {
    elems: Vec<u32>,
    bits: Option<u64>,
}

fn mask_of(elems: &[u32]) -> Option<u64> {
    elems.iter().try_fold(0u64, |acc, &e| {
        (e <= MASK_LIMIT).then(|| acc | (1u64 << (e - 1)))
    })
}

impl ZSet {
    /// Builds a set from an ascending element list.
    pub fn new(elems: Vec<u32>) -> Result<Self> {
        if elems.first() == Some(&0) {
            return Err(Error::input("set elements must be positive"));
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input(format!(
                "set elements must be strictly increasing: {elems:?}"
            )));
        }
        Ok(Self::from_sorted_unchecked(elems))
    }

    /// Builds a set and checks that it lies inside `[n]`.
    pub fn new_in(elems: Vec<u32>, n: u32) -> Result<Self> {
        let s = Self::new(elems)?;
        if !s.within(n) {
            return Err(Error::input(format!("{s} is not a subset of [{n}]")));
        }
        Ok(s)
    }

    /// Sorts and deduplicates arbitrary input.
    pub fn from_unsorted(mut elems: Vec<u32>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        Self::new(elems)
    }

    pub(crate) fn from_sorted_unchecked(elems: Vec<u32>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elems.first().is_none_or(|&e| e >= 1));
        let bits = mask_of(&elems);
        ZSet { elems, bits }
    }

    pub fn empty() -> Self {
        ZSet::default()
    }

    /// The interval `[a, b]`; empty when `a > b`.
    pub fn interval(a: u32, b: u32) -> Self {
        assert!(a >= 1, "intervals start at 1 or later");
        Self::from_sorted_unchecked((a..=b).collect())
    }

    /// `{1, ..., m}`.
    pub fn prefix(m: u32) -> Self {
        Self::interval(1, m)
    }

    pub fn from_mask(mask: u64) -> Self {
        let elems = (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        Self::from_sorted_unchecked(elems)
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Bitmask mirror (bit `e - 1` set for element `e`) when every element is at most 64.
    pub fn mask(&self) -> Option<u64> {
        self.bits
    }

    pub fn first(&self) -> Option<u32> {
        self.elems.first().copied()
    }

    pub fn last(&self) -> Option<u32> {
        self.elems.last().copied()
    }

    /// 1-based coordinate access, matching the `a_i` convention.
    pub fn coord(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|j| self.elems.get(j).copied())
    }

    pub fn contains(&self, e: u32) -> bool {
        match self.bits {
            Some(m) if (1..=MASK_LIMIT).contains(&e) => m >> (e - 1) & 1 == 1,
            Some(_) => false,
            None => self.elems.binary_search(&e).is_ok(),
        }
    }

    pub fn within(&self, n: u32) -> bool {
        self.last().is_none_or(|m| m <= n)
    }

    pub fn is_disjoint(&self, other: &ZSet) -> bool {
        if let (Some(a), Some(b)) = (self.bits, other.bits) {
            return a & b == 0;
        }
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn intersects(&self, other: &ZSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn is_subset(&self, other: &ZSet) -> bool {
        if let (Some(a), Some(b)) = (self.bits, other.bits) {
            return a & !b == 0;
        }
        self.elems.iter().all(|&e| other.contains(e))
    }

    /// The first `r` coordinates.
    pub fn truncate(&self, r: usize) -> ZSet {
        Self::from_sorted_unchecked(self.elems[..r.min(self.len())].to_vec())
    }

    pub fn union(&self, other: &ZSet) -> ZSet {
        let mut v: Vec<u32> = self.elems.iter().chain(&other.elems).copied().collect();
        v.sort_unstable();
        v.dedup();
        Self::from_sorted_unchecked(v)
    }

    /// Comma separated elements, the set literal used on the command line.
    pub fn to_literal(&self) -> String {
        let parts: Vec<String> = self.elems.iter().map(u32::to_string).collect();
        parts.join(",")
    }
}

impl PartialEq for ZSet {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for ZSet {}

impl Hash for ZSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl PartialOrd for ZSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending element lists.
impl Ord for ZSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems.cmp(&other.elems)
    }
}

impl fmt::Debug for ZSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ZSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_literal())
    }
}

/// Parses `"2,3,5"`; whitespace is ignored, braces are optional and the
/// empty string is the empty set.
impl FromStr for ZSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .collect();
        if cleaned.is_empty() {
            return Ok(ZSet::empty());
        }
        let elems = cleaned
            .split(',')
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad set element {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ZSet::new(elems).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<&[u32]> for ZSet {
    /// Panics if the slice is not a valid ascending set; meant for literals.
    fn from(elems: &[u32]) -> Self {
        ZSet::new(elems.to_vec()).expect("valid ascending set literal")
    }
}

impl<const N: usize> From<[u32; N]> for ZSet {
    fn from(elems: [u32; N]) -> Self {
        ZSet::from(&elems[..])
    }
}

impl Serialize for ZSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.elems.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elems = Vec::<u32>::deserialize(deserializer)?;
        ZSet::new(elems).map_err(serde::de::Error::custom)
    }
}

/// Parses a semicolon separated list of set literals, e.g. `"2,3;2,4,5"`.
///
/// The empty string and `{}` are the empty list.
pub fn parse_set_list(s: &str) -> Result<Vec<ZSet>> {
    if s.trim().is_empty() || s.split_whitespace().collect::<String>() == "{}" {
        return Ok(Vec::new());
    }
    s.split(';').map(str::parse).collect()
}

/// A family of `k`-subsets of `[n]`, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniformFamily {
    n: u32,
    k: u32,
    members: BTreeSet<ZSet>,
}

impl UniformFamily {
    pub fn empty(n: u32, k: u32) -> Self {
        UniformFamily { n, k, members: BTreeSet::new() }
    }

    pub fn new(n: u32, k: u32, members: impl IntoIterator<Item = ZSet>) -> Result<Self> {
        let mut fam = Self::empty(n, k);
        for m in members {
            if !fam.insert(m.clone())? {
                return Err(Error::input(format!("duplicate member {m}")));
            }
        }
        Ok(fam)
    }

    /// Inserts a member, returning whether it was new.
    pub fn insert(&mut self, s: ZSet) -> Result<bool> {
        if s.len() != self.k as usize || !s.within(self.n) {
            return Err(Error::input(format!(
                "{s} is not a {}-subset of [{}]",
                self.k, self.n
            )));
        }
        Ok(self.members.insert(s))
    }

    pub(crate) fn insert_unchecked(&mut self, s: ZSet) {
        debug_assert!(s.len() == self.k as usize && s.within(self.n));
        self.members.insert(s);
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &ZSet) -> bool {
        self.members.contains(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ZSet> + '_ {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<ZSet> {
        &self.members
    }

    /// The first disjoint pair in lexicographic order, if any.
    pub fn disjoint_pair(&self) -> Option<(ZSet, ZSet)> {
        let v: Vec<&ZSet> = self.members.iter().collect();
        for (i, a) in v.iter().enumerate() {
            for b in &v[i + 1..] {
                if a.is_disjoint(b) {
                    return Some(((*a).clone(), (*b).clone()));
                }
            }
        }
        None
    }

    pub fn is_intersecting(&self) -> bool {
        self.disjoint_pair().is_none()
    }

    /// Union with another family on the same `(n, k)`.
    pub fn union(&self, other: &UniformFamily) -> Result<UniformFamily> {
        if (self.n, self.k) != (other.n, other.k) {
            return Err(Error::input("union of families with different (n, k)"));
        }
        let mut out = self.clone();
        out.members.extend(other.members.iter().cloned());
        Ok(out)
    }
}

impl<'a> IntoIterator for &'a UniformFamily {
    type Item = &'a ZSet;
    type IntoIter = std::collections::btree_set::Iter<'a, ZSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: u32, k: u32) -> Vec<ZSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let k = k as usize;
    let mut cur: Vec<u32> = (1..=k as u32).collect();
    loop {
        out.push(ZSet::from_sorted_unchecked(cur.clone()));
        // rightmost coordinate that can still move
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - (k - 1 - i) as u32) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// All subsets of `[n]` (including the empty set), ordered by size then lexicographically.
pub fn all_subsets(n: u32) -> Vec<ZSet> {
    (0..=n).flat_map(|k| k_subsets(n, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unsorted_and_zero() {
        assert!(ZSet::new(vec![3, 2]).is_err());
        assert!(ZSet::new(vec![2, 2]).is_err());
        assert!(ZSet::new(vec![0, 1]).is_err());
        assert!(ZSet::new_in(vec![1, 5], 4).is_err());
        assert!(ZSet::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn parse_literals() {
        assert_eq!(" 2, 3 ,5".parse::<ZSet>().unwrap(), ZSet::from([2, 3, 5]));
        assert_eq!("{1,4}".parse::<ZSet>().unwrap(), ZSet::from([1, 4]));
        assert!("2,x".parse::<ZSet>().is_err());
        let list = parse_set_list("2,3; 2,4,5").unwrap();
        assert_eq!(list, vec![ZSet::from([2, 3]), ZSet::from([2, 4, 5])]);
        assert!(parse_set_list("  ").unwrap().is_empty());
    }

    #[test]
    fn mask_mirror_agrees_with_list() {
        let a = ZSet::from([1, 5, 64]);
        let b = ZSet::from([2, 64]);
        let c = ZSet::from([65, 70]);
        assert!(a.mask().is_some());
        assert!(c.mask().is_none());
        assert!(a.intersects(&b));
        assert!(a.is_disjoint(&c));
        assert!(c.contains(70) && !c.contains(64));
        assert_eq!(ZSet::from_mask(a.mask().unwrap()), a);
    }

    #[test]
    fn subsets_counts() {
        assert_eq!(k_subsets(6, 3).len(), 20);
        assert_eq!(k_subsets(4, 0), vec![ZSet::empty()]);
        assert!(k_subsets(3, 4).is_empty());
        assert_eq!(all_subsets(5).len(), 32);
        let s = k_subsets(5, 2);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn family_rejects_wrong_size_and_duplicates() {
        assert!(UniformFamily::new(4, 2, [ZSet::from([1, 2, 3])]).is_err());
        assert!(UniformFamily::new(4, 2, [ZSet::from([1, 5])]).is_err());
        assert!(UniformFamily::new(4, 2, [ZSet::from([1, 2]), ZSet::from([1, 2])]).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let a = ZSet::from([2, 3, 5]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[2,3,5]");
        assert_eq!(serde_json::from_str::<ZSet>(&s).unwrap(), a);
        assert!(serde_json::from_str::<ZSet>("[3,2]").is_err());
    }
}
