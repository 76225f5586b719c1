//! Brute-force references that never touch the generating-set machinery:
//! the exhaustive MLCIF census and the set-builder definitions of the named
//! families. They exist to check the constructive code against.

use crate::error::{Error, Result};
use crate::poset::{compression_closure, unit_decrements};
use crate::set::{k_subsets, UniformFamily, ZSet};

/// Every maximal left-compressed intersecting subfamily of `C([n], k)`,
/// found by depth-first search over down-sets.
///
/// `k`-sets are visited in order of element sum, a linear extension of
/// `<=`, so all unit decrements of a set are decided before the set itself.
/// A set is only added when its decrements are present and it meets every
/// chosen member; maximality is checked at the leaves.
pub fn census(n: u32, k: u32) -> Result<Vec<UniformFamily>> {
    if n > 64 {
        return Err(Error::input("census works on bitmasks and needs n <= 64"));
    }
    if k == 0 || k > n {
        return Err(Error::input(format!("census needs 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let mut sets = k_subsets(n, k);
    sets.sort_by_key(|s| (s.elems().iter().sum::<u32>(), s.clone()));
    let masks: Vec<u64> = sets.iter().map(|s| s.mask().expect("n <= 64")).collect();
    let preds: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            unit_decrements(s)
                .map(|d| sets.iter().position(|t| *t == d).expect("decrement is a k-set"))
                .collect()
        })
        .collect();

    let mut search = Census { masks: &masks, preds: &preds, chosen: vec![false; sets.len()], found: Vec::new() };
    search.descend(0, &mut Vec::new());

    let mut out: Vec<UniformFamily> = search
        .found
        .into_iter()
        .map(|idx| {
            let mut fam = UniformFamily::empty(n, k);
            for i in idx {
                fam.insert_unchecked(sets[i].clone());
            }
            fam
        })
        .collect();
    out.sort_by(|a, b| a.members().iter().cmp(b.members().iter()));
    Ok(out)
}

struct Census<'a> {
    masks: &'a [u64],
    preds: &'a [Vec<usize>],
    chosen: Vec<bool>,
    found: Vec<Vec<usize>>,
}

impl Census<'_> {
    fn descend(&mut self, i: usize, members: &mut Vec<usize>) {
        if i == self.masks.len() {
            let maximal = (0..self.masks.len())
                .filter(|&j| !self.chosen[j])
                .all(|j| members.iter().any(|&m| self.masks[m] & self.masks[j] == 0));
            if maximal {
                self.found.push(members.clone());
            }
            return;
        }
        let addable = self.preds[i].iter().all(|&p| self.chosen[p])
            && members.iter().all(|&m| self.masks[m] & self.masks[i] != 0);
        if addable {
            self.chosen[i] = true;
            members.push(i);
            self.descend(i + 1, members);
            members.pop();
            self.chosen[i] = false;
        }
        self.descend(i + 1, members);
    }
}

/// `{A : 1 ∈ A}`.
pub fn star_def(n: u32, k: u32) -> UniformFamily {
    filter_family(n, k, |s| s.contains(1))
}

/// `{A : |A ∩ {1,2,3}| >= 2}`.
pub fn a23_def(n: u32, k: u32) -> UniformFamily {
    filter_family(n, k, |s| s.elems().iter().filter(|&&e| e <= 3).count() >= 2)
}

/// `{A ∈ Star : A ∩ [2, k+1] ≠ ∅} ∪ {[2, k+1]}`.
pub fn hilton_milner_def(n: u32, k: u32) -> UniformFamily {
    let block = ZSet::interval(2, k + 1);
    filter_family(n, k, |s| (s.contains(1) && s.intersects(&block)) || *s == block)
}

fn filter_family(n: u32, k: u32, keep: impl Fn(&ZSet) -> bool) -> UniformFamily {
    let mut fam = UniformFamily::empty(n, k);
    for s in k_subsets(n, k).into_iter().filter(|s| keep(s)) {
        fam.insert_unchecked(s);
    }
    fam
}

/// Left-compression straight from the definition: every `B <= A` is present.
pub fn is_left_compressed_def(fam: &UniformFamily) -> bool {
    fam.iter().all(|a| {
        compression_closure(a, fam.n())
            .map(|l| l.iter().all(|b| fam.contains(b)))
            .unwrap_or(true)
    })
}

/// Members of `fam` meeting `x`, counted without any formula.
pub fn count_meeting(fam: &UniformFamily, x: &ZSet) -> usize {
    fam.iter().filter(|s| s.intersects(x)).count()
}
