//! Exact closed-form counts and their enumeration counterparts.
//!
//! Every count is generic over an exact signed integer type; the crate
//! root fixes [`crate::Count`] to an arbitrary-precision integer, but
//! `i64`/`i128` work for small parameters. Binomials with `r < 0` or
//! `r > n` are zero, which keeps every formula total.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::{build_mlcif, validate_pgs};
use crate::poset::prefix_count;
use crate::set::{UniformFamily, ZSet};

/// Exact integer scalar used by the counting formulas.
pub trait ExactInt: Integer + Signed + Clone + FromPrimitive + Debug + Display {}

impl<T> ExactInt for T where T: Integer + Signed + Clone + FromPrimitive + Debug + Display {}

fn lift<T: ExactInt>(v: i64) -> T {
    T::from_i64(v).expect("scalar holds small integers")
}

/// `C(n, r)`, zero outside `0 <= r <= n`.
pub fn binom<T: ExactInt>(n: i64, r: i64) -> T {
    if r < 0 || n < 0 || r > n {
        return T::zero();
    }
    let r = r.min(n - r);
    let mut acc = T::one();
    for i in 1..=r {
        // acc = C(n - r + i - 1, i - 1) before this step, so the division is exact
        acc = acc * lift::<T>(n - r + i) / lift::<T>(i);
    }
    acc
}

/// `|L(G)|` through the first-coordinate recursion.
pub fn count_l<T: ExactInt>(g: &ZSet) -> T {
    let seq: Vec<i64> = g.elems().iter().map(|&e| e as i64).collect();
    count_l_seq(&seq)
}

/// `|L(seq)|` for a strictly increasing bound sequence, which may dip below 1
/// after shifting; such sequences bound no set.
pub fn count_l_seq<T: ExactInt>(seq: &[i64]) -> T {
    let mut memo = HashMap::new();
    count_l_memo(seq, &mut memo)
}

fn count_l_memo<T: ExactInt>(seq: &[i64], memo: &mut HashMap<Vec<i64>, T>) -> T {
    if seq.is_empty() {
        return T::one();
    }
    // The j-th coordinate (1-based) of any set is at least j.
    if seq.iter().enumerate().any(|(j, &s)| s < j as i64 + 1) {
        return T::zero();
    }
    if let Some(v) = memo.get(seq) {
        return v.clone();
    }
    let mut total = T::zero();
    for i in 1..=seq[0] {
        let shifted: Vec<i64> = seq[1..].iter().map(|&s| s - i).collect();
        total = total + count_l_memo(&shifted, memo);
    }
    memo.insert(seq.to_vec(), total.clone());
    total
}

/// `|L([a, b])| = C(b, a - 1)`.
pub fn count_interval_l<T: ExactInt>(a: i64, b: i64) -> Result<T> {
    if a < 1 || a > b {
        return Err(Error::input(format!("interval [{a}, {b}] needs 1 <= a <= b")));
    }
    Ok(binom(b, a - 1))
}

/// `|F(n, k, {G})|` as `|L(G ∪ [n-k+r+1, n])|`.
pub fn count_f<T: ExactInt>(n: u32, k: u32, g: &ZSet) -> Result<T> {
    let r = g.len() as u32;
    if r > k || k > n {
        return Err(Error::input(format!("need |G| = {r} <= k = {k} <= n = {n}")));
    }
    if !g.within(n) {
        return Err(Error::input(format!("{g} is not a subset of [{n}]")));
    }
    let pad_start = n - k + r + 1;
    if g.last().is_some_and(|m| m >= pad_start) {
        return Err(Error::input(format!(
            "{g} collides with the padding [{pad_start}, {n}]; the padded sequence would not be a set"
        )));
    }
    let mut seq: Vec<i64> = g.elems().iter().map(|&e| e as i64).collect();
    seq.extend((pad_start..=n).map(i64::from));
    Ok(count_l_seq(&seq))
}

fn check_ahm_params(n: i64, k: i64, b: i64) -> Result<()> {
    if !(4 <= b && b <= k + 1) {
        return Err(Error::input(format!("b = {b} outside [4, k + 1 = {}]", k + 1)));
    }
    if n < 2 * k {
        return Err(Error::input(format!("n = {n} < 2k = {}", 2 * k)));
    }
    Ok(())
}

/// `|F([2,b]) ∪ F({1,b})| = C(n-1,k-1) - C(n-b,k-1) + C(n-b,k-b+1)`.
pub fn size_ahm<T: ExactInt>(n: i64, k: i64, b: i64) -> Result<T> {
    check_ahm_params(n, k, b)?;
    Ok(binom::<T>(n - 1, k - 1) - binom(n - b, k - 1) + binom(n - b, k - b + 1))
}

/// Star members meeting a `d`-subset of `[2, n]`.
pub fn star_count_x<T: ExactInt>(n: i64, k: i64, d: i64) -> Result<T> {
    if d < 0 || d > n - 1 {
        return Err(Error::input(format!("d = {d} outside [0, n - 1 = {}]", n - 1)));
    }
    Ok(binom::<T>(n - 1, k - 1) - binom(n - d - 1, k - 1))
}

/// `|A(X)|` for `A = F([2,b]) ∪ F({1,b})` when `X` meets `[2, b]` (`mu_b = |X ∩ [b]| >= 1`).
pub fn count_ax_case1<T: ExactInt>(n: i64, k: i64, b: i64, d: i64, mu_b: i64) -> Result<T> {
    check_ahm_params(n, k, b)?;
    if mu_b < 1 {
        return Err(Error::WrongCase(format!(
            "mu_X(b) = {mu_b}: X misses [2, b], use the disjoint case"
        )));
    }
    if mu_b > d.min(b - 1) || d > n - 1 {
        return Err(Error::input(format!("mu_X(b) = {mu_b} inconsistent with d = {d}, b = {b}")));
    }
    Ok(binom::<T>(n - 1, k - 1) - binom(n - b, k - 1) + binom(n - b, k - b + 1)
        - binom(n - d - 1, k - 1)
        + binom(n - d - b + mu_b, k - 1))
}

/// Both halves of the `X ∩ [2, b] = ∅` count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case2<T> {
    pub a_x: T,
    pub a_0_x: T,
}

/// `|A(X)|` and `|A_0(X)|` when `X ∩ [2, b] = ∅`.
pub fn count_ax_case2<T: ExactInt>(n: i64, k: i64, b: i64, d: i64) -> Result<Case2<T>> {
    check_ahm_params(n, k, b)?;
    if d < 0 || d > n - b {
        return Err(Error::WrongCase(format!(
            "d = {d}: a set avoiding [2, b] has at most n - b = {} elements",
            n - b
        )));
    }
    let a_0_x = binom::<T>(n - d - 1, k - 1) - binom(n - d - b, k - 1) + binom(n - b - d, k - b + 1);
    let a_x = binom::<T>(n - 1, k - 1) - binom(n - b, k - 1) + binom(n - b, k - b + 1)
        - binom(n - d - 1, k - 1)
        + binom(n - d - b, k - 1)
        - binom(n - d - b, k - b + 1);
    Ok(Case2 { a_x, a_0_x })
}

/// Members meeting / avoiding `X`, by direct filtering.
pub fn enumerate_ax(fam: &UniformFamily, x: &ZSet) -> Result<(u64, u64)> {
    if !x.within(fam.n()) {
        return Err(Error::input(format!("{x} is not a subset of [{}]", fam.n())));
    }
    let meet = fam.iter().filter(|s| s.intersects(x)).count() as u64;
    Ok((meet, fam.len() as u64 - meet))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Formula,
    Enumeration,
}

/// Enumeration cross-check attached to a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub a_x: u64,
    pub a_0_x: u64,
    pub agrees: bool,
}

fn as_decimal<T: Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn verdict_symbol<S: Serializer>(v: &Ordering, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(ordering_symbol(*v))
}

pub fn ordering_symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

/// `|A(X)|` against `|S(X)|` for `A = F([2,b]) ∪ F({1,b})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport<T: Display> {
    pub n: i64,
    pub k: i64,
    pub b: i64,
    pub d: i64,
    pub x: ZSet,
    pub mu_x_b: i64,
    #[serde(serialize_with = "as_decimal")]
    pub a_total: T,
    #[serde(serialize_with = "as_decimal")]
    pub a_x: T,
    #[serde(serialize_with = "as_decimal")]
    pub a_0_x: T,
    #[serde(serialize_with = "as_decimal")]
    pub s_x: T,
    pub method: Method,
    pub oracle: Option<OracleCheck>,
    /// Ordering of `a_x` relative to `s_x`.
    #[serde(serialize_with = "verdict_symbol")]
    pub verdict: Ordering,
}

/// Fills a [`CountReport`] by formula, routing on `μ_X(b)`; when `oracle`
/// is set the family is also built and `A(X)` counted directly.
pub fn compare_report<T: ExactInt>(n: u32, k: u32, b: u32, x: &ZSet, oracle: bool) -> Result<CountReport<T>> {
    if x.contains(1) {
        return Err(Error::input(format!("{x} contains 1; test sets live in [2, n]")));
    }
    if !x.within(n) {
        return Err(Error::input(format!("{x} is not a subset of [{n}]")));
    }
    let (ni, ki, bi) = (n as i64, k as i64, b as i64);
    let d = x.len() as i64;
    let mu_b = prefix_count(x, b) as i64;
    let a_total: T = size_ahm(ni, ki, bi)?;
    let a_x: T = if mu_b >= 1 {
        count_ax_case1(ni, ki, bi, d, mu_b)?
    } else {
        count_ax_case2::<T>(ni, ki, bi, d)?.a_x
    };
    let a_0_x = a_total.clone() - a_x.clone();
    let s_x: T = star_count_x(ni, ki, d)?;
    let oracle = if oracle {
        let pgs = validate_pgs(k, &[ZSet::interval(2, b)])?;
        let (fam, _) = build_mlcif(n, k, &pgs)?;
        let (ex, ex0) = enumerate_ax(&fam, x)?;
        let agrees = lift::<T>(ex as i64) == a_x && lift::<T>(ex0 as i64) == a_0_x;
        Some(OracleCheck { a_x: ex, a_0_x: ex0, agrees })
    } else {
        None
    };
    let verdict = a_x.cmp(&s_x);
    Ok(CountReport {
        n: ni,
        k: ki,
        b: bi,
        d,
        x: x.clone(),
        mu_x_b: mu_b,
        a_total,
        a_x,
        a_0_x,
        s_x,
        method: Method::Formula,
        oracle,
        verdict,
    })
}

/// The same report filled purely by enumeration: the family is built,
/// `A(X)` and `S(X)` are counted member by member.
pub fn enumeration_report<T: ExactInt>(n: u32, k: u32, b: u32, x: &ZSet) -> Result<CountReport<T>> {
    if x.contains(1) {
        return Err(Error::input(format!("{x} contains 1; test sets live in [2, n]")));
    }
    check_ahm_params(n as i64, k as i64, b as i64)?;
    let pgs = validate_pgs(k, &[ZSet::interval(2, b)])?;
    let (fam, _) = build_mlcif(n, k, &pgs)?;
    let (a_x, a_0_x) = enumerate_ax(&fam, x)?;
    let star = crate::family::materialize(n, k, &[ZSet::from([1])])?;
    let (s_x, _) = enumerate_ax(&star, x)?;
    let to = |v: u64| lift::<T>(v as i64);
    Ok(CountReport {
        n: n as i64,
        k: k as i64,
        b: b as i64,
        d: x.len() as i64,
        x: x.clone(),
        mu_x_b: prefix_count(x, b) as i64,
        a_total: to(fam.len() as u64),
        a_x: to(a_x),
        a_0_x: to(a_0_x),
        s_x: to(s_x),
        method: Method::Enumeration,
        oracle: None,
        verdict: a_x.cmp(&s_x),
    })
}

/// `R = C(n-b, k-b+1) / C(n-b-1, k-2)`; `R < 1` forces `|A(X)| < |S(X)|`
/// for mixed `X` with `|X \ [2,b]| = 1`.
pub fn ratio_r<T: ExactInt>(n: i64, k: i64, b: i64) -> Option<Ratio<T>> {
    let den: T = binom(n - b - 1, k - 2);
    (!den.is_zero()).then(|| Ratio::new(binom(n - b, k - b + 1), den))
}

/// Result of scanning `n` for the mixed-`X` threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdScan {
    pub k: i64,
    pub b: i64,
    pub d: i64,
    pub horizon: i64,
    /// Smallest `n >= 2k` from which `|A(X)| < |S(X)|` holds for every
    /// mixed `X` of size `d` through the horizon; `None` if it fails at the horizon.
    pub threshold: Option<i64>,
    /// Whether some mixed `X` of size `d` exists at all.
    pub feasible: bool,
}

/// `|A(X)| - |S(X)|` for every realisable `μ_X(b)` of a mixed `X` at this `n`.
fn mixed_gaps<T: ExactInt>(n: i64, k: i64, b: i64, d: i64) -> Result<Vec<T>> {
    let s_x: T = star_count_x(n, k, d)?;
    let mut out = Vec::new();
    // mixed: 1 <= μ <= d - 1, at most b - 1 elements in [2, b], d - μ elements in [b + 1, n]
    for mu_b in 1..d.min(b) {
        if d - mu_b > n - b {
            continue;
        }
        let a_x: T = count_ax_case1(n, k, b, d, mu_b)?;
        out.push(a_x - s_x.clone());
    }
    Ok(out)
}

/// Scans `n ∈ [2k, horizon]` for the point after which mixed test sets of
/// size `d` always meet fewer members of `A` than of the Star.
pub fn mixed_threshold<T: ExactInt>(k: i64, b: i64, d: i64, horizon: i64) -> Result<ThresholdScan> {
    check_ahm_params(2 * k, k, b)?;
    let feasible = d >= 2;
    let mut threshold = None;
    for n in (2 * k..=horizon).rev() {
        let ok = mixed_gaps::<T>(n, k, b, d)?.iter().all(|g| g.is_negative());
        if !ok {
            break;
        }
        threshold = Some(n);
    }
    Ok(ThresholdScan { k, b, d, horizon, threshold, feasible })
}
