//! The two partial orders on sets, prefix counts, the wedge operator and
//! left-compression closure.
//!
//! * `A <= B` ([`leq_uniform`]) compares equal-size sets coordinatewise.
//! * `A ⪯ B` ([`preceq`]) additionally allows `A` to be longer than `B`:
//!   only the first `|B|` coordinates of `A` are compared. `S ⪯ G` reads
//!   "S is generated by G".

use crate::error::{Error, Result};
use crate::set::{UniformFamily, ZSet};

/// Number of elements of `x` not exceeding `ell`, without range checks.
pub fn prefix_count(x: &ZSet, ell: u32) -> u32 {
    x.elems().partition_point(|&e| e <= ell) as u32
}

/// `μ_X(ℓ) = |X ∩ [ℓ]|` for `1 <= ℓ <= n_max`.
pub fn mu(x: &ZSet, ell: u32, n_max: u32) -> Result<u32> {
    if ell < 1 || ell > n_max {
        return Err(Error::input(format!("ell = {ell} outside [1, {n_max}]")));
    }
    Ok(prefix_count(x, ell))
}

/// Coordinatewise order on sets of equal size.
pub fn leq_uniform(a: &ZSet, b: &ZSet) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::input(format!("cannot compare {a} and {b}: sizes differ")));
    }
    Ok(leq_prefix(a, b))
}

/// `a_i <= b_i` for every coordinate of `b` (assumes `|a| >= |b|`).
fn leq_prefix(a: &ZSet, b: &ZSet) -> bool {
    a.elems().iter().zip(b.elems()).all(|(x, y)| x <= y)
}

/// `A ⪯ B`: `|A| >= |B|` and `a_i <= b_i` for `i <= |B|`.
pub fn preceq(a: &ZSet, b: &ZSet) -> bool {
    a.len() >= b.len() && leq_prefix(a, b)
}

/// Strict coordinatewise order (`A <= B` and `A != B`).
pub fn lt_uniform(a: &ZSet, b: &ZSet) -> bool {
    a.len() == b.len() && a != b && leq_prefix(a, b)
}

/// Coordinatewise minimum, treating missing coordinates as `+∞`.
///
/// The result has the length of the longest input.
pub fn wedge(sets: &[ZSet]) -> Result<ZSet> {
    if sets.is_empty() {
        return Err(Error::input("wedge of an empty list"));
    }
    if let Some(e) = sets.iter().find(|s| s.is_empty()) {
        return Err(Error::input(format!("wedge operand {e} is empty")));
    }
    let d = sets.iter().map(ZSet::len).max().unwrap_or(0);
    let out: Vec<u32> = (0..d)
        .map(|i| {
            sets.iter()
                .filter_map(|s| s.elems().get(i).copied())
                .min()
                .expect("some operand reaches the longest length")
        })
        .collect();
    // Minima of strictly increasing columns stay strictly increasing.
    Ok(ZSet::from_sorted_unchecked(out))
}

/// `L(A)`: every `|A|`-set `S` with `S <= A`, as a family over `[n]`.
pub fn compression_closure(a: &ZSet, n: u32) -> Result<UniformFamily> {
    if a.is_empty() {
        return Err(Error::input("closure of the empty set"));
    }
    if !a.within(n) {
        return Err(Error::input(format!("{a} is not a subset of [{n}]")));
    }
    let mut fam = UniformFamily::empty(n, a.len() as u32);
    let mut cur = Vec::with_capacity(a.len());
    fill_below(a.elems(), &mut cur, &mut |s| fam.insert_unchecked(ZSet::from_sorted_unchecked(s.to_vec())));
    Ok(fam)
}

/// Calls `emit` for every ascending sequence bounded coordinatewise by `bound`.
fn fill_below(bound: &[u32], cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    let i = cur.len();
    if i == bound.len() {
        emit(cur);
        return;
    }
    let lo = cur.last().map_or(1, |&p| p + 1);
    for v in lo..=bound[i] {
        cur.push(v);
        fill_below(bound, cur, emit);
        cur.pop();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// `<=` on equal-size sets.
    Leq,
    /// `⪯` on arbitrary sets.
    Preceq,
}

/// Members not strictly below another member, deduplicated and in lexicographic order.
pub fn maximal_elements<'a>(
    family: impl IntoIterator<Item = &'a ZSet>,
    order: Order,
) -> Result<Vec<ZSet>> {
    let mut items: Vec<&ZSet> = family.into_iter().collect();
    items.sort();
    items.dedup();
    if order == Order::Leq {
        if let Some(w) = items.windows(2).find(|w| w[0].len() != w[1].len()) {
            return Err(Error::input(format!(
                "<= compares equal-size sets only, got {} and {}",
                w[0], w[1]
            )));
        }
    }
    let below = |a: &ZSet, b: &ZSet| match order {
        Order::Leq => leq_prefix(a, b),
        Order::Preceq => preceq(a, b),
    };
    Ok(items
        .iter()
        .filter(|a| !items.iter().any(|b| a != &b && below(a, b)))
        .map(|a| (*a).clone())
        .collect())
}

/// Unit decrements of `a`: replace one coordinate by one less when the
/// result is still a valid set.
pub fn unit_decrements(a: &ZSet) -> impl Iterator<Item = ZSet> + '_ {
    let e = a.elems();
    (0..e.len()).filter_map(move |i| {
        let lower = if i == 0 { 0 } else { e[i - 1] };
        (e[i] - 1 > lower).then(|| {
            let mut v = e.to_vec();
            v[i] -= 1;
            ZSet::from_sorted_unchecked(v)
        })
    })
}

/// First member and unit decrement of it that is missing, if any.
pub fn compression_gap(family: &UniformFamily) -> Option<(ZSet, ZSet)> {
    family.iter().find_map(|a| {
        unit_decrements(a)
            .find(|b| !family.contains(b))
            .map(|b| (a.clone(), b))
    })
}

/// Closed downward under `<=`; checked through unit decrements, which generate `<=`.
pub fn is_left_compressed(family: &UniformFamily) -> bool {
    compression_gap(family).is_none()
}
