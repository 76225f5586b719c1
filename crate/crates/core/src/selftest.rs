//! Batch verification: every structural claim the library relies on,
//! checked against brute force on a desk-scale grid.
//!
//! Each suite is deterministic given [`SelftestConfig::seed`]; sampled
//! suites draw from a ChaCha stream seeded per suite, so adding or
//! reordering suites does not perturb the others.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_traits::One;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{build_catalog, catalog_from_str, catalog_to_json, catalog_to_ndjson, CatalogBudget};
use crate::classify::{classify_two_maxgen, make_named, profile, NamedFamily};
use crate::counting::{
    binom, compare_report, count_ax_case2, count_f, count_interval_l, count_l, enumerate_ax, enumeration_report,
    mixed_threshold, ratio_r, size_ahm, star_count_x,
};
use crate::family::{
    build_mlcif, companion, enumerate_pgs, extend_family, is_mlcif, materialize, normalized_wedge,
    recover_pgs, universe_gk, Branch, EnumerationBudget, GeneratingSet, Pgs, WedgeSelection,
};
use crate::oracle::{census, hilton_milner_def};
use crate::poset::{compression_closure, is_left_compressed, leq_uniform, mu, preceq, wedge};
use crate::set::{all_subsets, k_subsets, UniformFamily, ZSet};
use crate::strong::{disjoint_witness, is_si_family, strongly_intersecting};
use crate::{Count, CountRatio};

/// Grid and sampling limits.
#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Largest `k` for catalog-driven suites.
    pub max_k: u32,
    /// Largest `n` for the counting grid.
    pub max_n: u32,
    /// Draws per sampled suite.
    pub samples: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { seed: 0x6d_6c63_6966, max_k: 4, max_n: 12, samples: 4000 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// `Ok` carries a one-line summary, `Err` the first counterexample.
pub type Outcome = std::result::Result<String, String>;

type SuiteFn = fn(&SelftestConfig, &mut ChaCha8Rng) -> Outcome;

pub struct Suite {
    pub name: &'static str,
    run: SuiteFn,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Converts library errors into suite failures.
fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub const SUITES: &[Suite] = &[
    Suite { name: "order_axioms", run: order_axioms },
    Suite { name: "prefix_count_monotone", run: prefix_count_monotone },
    Suite { name: "wedge_absorbs_dominated", run: wedge_absorbs_dominated },
    Suite { name: "wedge_is_meet", run: wedge_is_meet },
    Suite { name: "closure_size_matches_count", run: closure_size_matches_count },
    Suite { name: "left_compressed_matches_definition", run: left_compressed_matches_definition },
    Suite { name: "strong_intersection_oracle", run: strong_intersection_oracle },
    Suite { name: "self_si_has_anchor", run: self_si_has_anchor },
    Suite { name: "companion_blocks_tails", run: companion_blocks_tails },
    Suite { name: "si_monotone", run: si_monotone },
    Suite { name: "census_bijection", run: census_bijection },
    Suite { name: "build_is_mlcif", run: build_is_mlcif },
    Suite { name: "recover_round_trip", run: recover_round_trip },
    Suite { name: "hset_structure", run: hset_structure },
    Suite { name: "normalized_wedge_matches_raw", run: normalized_wedge_matches_raw },
    Suite { name: "extension_invariance", run: extension_invariance },
    Suite { name: "closed_forms_match_enumeration", run: closed_forms_match_enumeration },
    Suite { name: "binomial_unimodal", run: binomial_unimodal },
    Suite { name: "hockey_stick", run: hockey_stick },
    Suite { name: "case2_below_star", run: case2_below_star },
    Suite { name: "ratio_threshold", run: ratio_threshold },
    Suite { name: "two_maxgen_shape", run: two_maxgen_shape },
    Suite { name: "named_families", run: named_families },
    Suite { name: "catalog_round_trip", run: catalog_round_trip },
];

pub fn run_suite(index: usize, cfg: &SelftestConfig) -> SuiteResult {
    let suite = &SUITES[index];
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let start = Instant::now();
    let outcome = (suite.run)(cfg, &mut rng);
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    SuiteResult { name: suite.name, passed, detail, elapsed }
}

/// Runs the named suites, or all of them when `only` is empty.
pub fn run(cfg: &SelftestConfig, only: &[String]) -> Vec<SuiteResult> {
    (0..SUITES.len())
        .filter(|&i| only.is_empty() || only.iter().any(|n| n == SUITES[i].name))
        .map(|i| run_suite(i, cfg))
        .collect()
}

fn random_subset(rng: &mut ChaCha8Rng, n: u32) -> ZSet {
    ZSet::from_mask(rng.gen_range(0..1u64 << n))
}

fn random_k_subset(rng: &mut ChaCha8Rng, n: u32, k: u32) -> ZSet {
    let idx = sample(rng, n as usize, k as usize);
    ZSet::from_unsorted(idx.into_iter().map(|i| i as u32 + 1).collect()).expect("distinct indices")
}

fn nonempty_subsets(n: u32) -> Vec<ZSet> {
    all_subsets(n).into_iter().filter(|s| !s.is_empty()).collect()
}

fn catalog(k: u32) -> std::result::Result<Vec<Pgs>, String> {
    lib(enumerate_pgs(k, EnumerationBudget { max_k: k }))
}

fn order_axioms(cfg: &SelftestConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let n = 10;
    for _ in 0..cfg.samples {
        let k = rng.gen_range(1..=5);
        let [a, b, c] = [(); 3].map(|_| random_k_subset(rng, n, k));
        let le = |x: &ZSet, y: &ZSet| leq_uniform(x, y).expect("equal sizes");
        ensure!(le(&a, &a), "<= not reflexive at {a}");
        ensure!(!(le(&a, &b) && le(&b, &a)) || a == b, "<= not antisymmetric: {a}, {b}");
        ensure!(!(le(&a, &b) && le(&b, &c)) || le(&a, &c), "<= not transitive: {a}, {b}, {c}");
        ensure!(!le(&a, &b) || preceq(&a, &b), "{a} <= {b} but not {a} ⪯ {b}");

        let [x, y, z] = [(); 3].map(|_| random_subset(rng, n));
        ensure!(preceq(&x, &x), "⪯ not reflexive at {x}");
        ensure!(!(preceq(&x, &y) && preceq(&y, &x)) || x == y, "⪯ not antisymmetric: {x}, {y}");
        ensure!(
            !(preceq(&x, &y) && preceq(&y, &z)) || preceq(&x, &z),
            "⪯ not transitive: {x}, {y}, {z}"
        );
    }
    Ok(format!("{} sampled triples per order over [{n}]", cfg.samples))
}

fn prefix_count_monotone(cfg: &SelftestConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let n = 8;
    let mut hits = [0usize; 3];
    for _ in 0..cfg.samples {
        let a = random_subset(rng, n);
        // bias toward related pairs so that each implication is exercised
        let b = match rng.gen_range(0..3) {
            0 => random_subset(rng, n),
            1 => a.union(&random_subset(rng, n)),
            _ => {
                let drop = rng.gen_range(0..=a.len());
                a.truncate(a.len() - drop)
            }
        };
        let uniform_le = a.len() == b.len() && leq_uniform(&a, &b).expect("equal sizes");
        for ell in 1..=n {
            let (ma, mb) = (lib(mu(&a, ell, n))?, lib(mu(&b, ell, n))?);
            if preceq(&a, &b) {
                ensure!(ma >= mb, "{a} ⪯ {b} but μ({ell}) {ma} < {mb}");
            }
            if uniform_le {
                ensure!(ma >= mb, "{a} <= {b} but μ({ell}) {ma} < {mb}");
            }
            if a.is_subset(&b) {
                ensure!(mb >= ma, "{a} ⊆ {b} but μ({ell}) {mb} < {ma}");
            }
        }
        hits[0] += preceq(&a, &b) as usize;
        hits[1] += uniform_le as usize;
        hits[2] += a.is_subset(&b) as usize;
    }
    Ok(format!("{} pairs; ⪯ {} times, <= {} times, ⊆ {} times", cfg.samples, hits[0], hits[1], hits[2]))
}

fn wedge_absorbs_dominated(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let sets = nonempty_subsets(6);
    let mut pairs = 0;
    for b in &sets {
        for a in sets.iter().filter(|a| preceq(b, a)) {
            let w = lib(wedge(&[b.clone(), a.clone()]))?;
            ensure!(w == *b, "{b} ⪯ {a} but wedge is {w}");
            pairs += 1;
        }
    }
    Ok(format!("{pairs} comparable pairs over [6]"))
}

fn wedge_is_meet(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let sets = nonempty_subsets(5);
    for a in &sets {
        for b in &sets {
            let w = lib(wedge(&[a.clone(), b.clone()]))?;
            for c in &sets {
                ensure!(
                    preceq(c, &w) == (preceq(c, a) && preceq(c, b)),
                    "{c} ⪯ {a} ∧ {b} = {w} disagrees with the conjunction"
                );
            }
        }
    }
    Ok(format!("{} triples over [5]", sets.len().pow(3)))
}

fn closure_size_matches_count(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let sets = nonempty_subsets(8);
    for a in &sets {
        let closure = lib(compression_closure(a, 8))?;
        ensure!(
            Count::from(closure.len()) == count_l::<Count>(a),
            "|L({a})| = {} but the count is {}",
            closure.len(),
            count_l::<Count>(a)
        );
    }
    for b in 1..=10u32 {
        for a in 1..=b {
            let by_interval: Count = lib(count_interval_l(a as i64, b as i64))?;
            ensure!(by_interval == binom::<Count>(b as i64, a as i64 - 1), "interval count wrong at [{a}, {b}]");
            ensure!(by_interval == count_l::<Count>(&ZSet::interval(a, b)), "interval vs general count at [{a}, {b}]");
        }
    }
    Ok(format!("{} sets over [8], 55 intervals", sets.len()))
}

/// Every family of `k`-subsets of `[n]`, checked as a bitmask over the
/// lexicographic list of `k`-sets against closures computed from `<=` alone.
fn left_compressed_matches_definition(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut families = 0u64;
    for n in 1..=6u32 {
        for k in 1..=3u32.min(n) {
            let sets = k_subsets(n, k);
            let below: Vec<u32> = sets
                .iter()
                .map(|a| {
                    sets.iter()
                        .enumerate()
                        .filter(|(_, b)| leq_uniform(b, a).expect("equal sizes"))
                        .fold(0u32, |m, (j, _)| m | 1 << j)
                })
                .collect();
            for mask in 0u32..1 << sets.len() {
                let definitional = (0..sets.len()).filter(|&i| mask >> i & 1 == 1).all(|i| below[i] & !mask == 0);
                let fam = UniformFamily::new(
                    n,
                    k,
                    (0..sets.len()).filter(|&i| mask >> i & 1 == 1).map(|i| sets[i].clone()),
                )
                .map_err(|e| e.to_string())?;
                ensure!(
                    is_left_compressed(&fam) == definitional,
                    "n = {n}, k = {k}: disagreement on {:?}",
                    fam.members()
                );
                families += 1;
            }
        }
    }
    Ok(format!("{families} families over n <= 6, k <= 3"))
}

fn strong_intersection_oracle(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let sets = nonempty_subsets(7);
    let mut si_pairs = 0;
    for g in &sets {
        for h in &sets {
            let si = lib(strongly_intersecting(g, h, 7))?;
            let dw = lib(disjoint_witness(g, h))?;
            ensure!(si.is_some() != dw.is_some(), "({g}, {h}): criterion {si:?}, witness {dw:?}");
            si_pairs += si.is_some() as usize;
        }
    }
    Ok(format!("{} ordered pairs over [7], {si_pairs} strongly intersecting", sets.len().pow(2)))
}

fn self_si_has_anchor(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut self_si = 0;
    for g in nonempty_subsets(7) {
        if lib(is_si_family(std::slice::from_ref(&g), 7))? {
            let anchored = g.elems().iter().enumerate().any(|(p, &gp)| gp as usize == 2 * p + 1);
            ensure!(anchored, "{g} is self strongly intersecting without g_p = 2p - 1");
            self_si += 1;
        }
    }
    Ok(format!("{self_si} self strongly intersecting sets over [7]"))
}

fn companion_blocks_tails(cfg: &SelftestConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let mut checked = 0usize;
    for k in 2..=5u32 {
        let n = 2 * k + 2;
        let gens: Vec<ZSet> = lib(universe_gk(k, Branch::Without1))?;
        let per_pair = (cfg.samples / 200).max(4);
        for g in &gens {
            for i in 1..=g.len() {
                let c = lib(companion(g, i))?;
                let gi = g.coord(i).expect("in range");
                let mut drawn = 0;
                for _ in 0..per_pair * 8 {
                    if drawn == per_pair {
                        break;
                    }
                    let s = random_k_subset(rng, n - 1, k);
                    let s = ZSet::from_unsorted(s.elems().iter().map(|e| e + 1).collect()).expect("shifted");
                    if s.coord(i).expect("i <= |G| <= k") < gi + 1 {
                        continue;
                    }
                    drawn += 1;
                    ensure!(
                        lib(strongly_intersecting(&s, &c, n))?.is_none(),
                        "k = {k}: {s} and companion {c} of {g} at i = {i} strongly intersect"
                    );
                }
                checked += drawn;
            }
        }
    }
    Ok(format!("{checked} sampled tails, k in 2..=5"))
}

fn si_monotone(cfg: &SelftestConfig, rng: &mut ChaCha8Rng) -> Outcome {
    let n = 7;
    let all = nonempty_subsets(n);
    let mut implications = 0;
    for _ in 0..cfg.samples / 10 {
        let (g, h) = (random_subset(rng, n), random_subset(rng, n));
        if g.is_empty() || h.is_empty() || lib(strongly_intersecting(&g, &h, n))?.is_none() {
            continue;
        }
        for gp in all.iter().filter(|gp| preceq(gp, &g)) {
            ensure!(
                lib(strongly_intersecting(gp, &h, n))?.is_some(),
                "{g} ~si {h} and {gp} ⪯ {g}, yet {gp} and {h} do not strongly intersect"
            );
            implications += 1;
        }
    }
    Ok(format!("{implications} dominated pairs checked"))
}

fn census_bijection(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut detail = Vec::new();
    for (k, n) in [(2u32, 4u32), (3, 6)] {
        let brute: BTreeSet<UniformFamily> = lib(census(n, k))?.into_iter().collect();
        let mut built = BTreeSet::new();
        for p in catalog(k)? {
            let (fam, _) = lib(build_mlcif(n, k, &p))?;
            ensure!(built.insert(fam), "k = {k}: two PGSs build the same family (second is {p})");
        }
        ensure!(
            brute == built,
            "k = {k}, n = {n}: census has {} families, catalog builds {}",
            brute.len(),
            built.len()
        );
        detail.push(format!("k = {k}: {}", brute.len()));
    }
    Ok(detail.join(", "))
}

fn build_is_mlcif(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for k in 2..=3u32 {
        for p in catalog(k)? {
            for n in 2 * k..=2 * k + 2 {
                let (fam, _) = lib(build_mlcif(n, k, &p))?;
                ensure!(is_mlcif(&fam), "k = {k}, n = {n}: {p} does not build an MLCIF");
                count += 1;
            }
        }
    }
    Ok(format!("{count} families"))
}

fn recover_round_trip(cfg: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for k in 2..=cfg.max_k.min(4) {
        for p in catalog(k)? {
            for n in [2 * k, 2 * k + 1] {
                let (fam, _) = lib(build_mlcif(n, k, &p))?;
                let rec = lib(recover_pgs(&fam))?;
                ensure!(rec.pgs == p, "k = {k}, n = {n}: built from {p}, recovered {}", rec.pgs);
                for g in rec.pgs.members().iter().chain(&rec.hgens) {
                    ensure!(
                        g.last().is_some_and(|m| (m as usize) < k as usize + g.len()),
                        "recovered generator {g} exceeds k + |G| - 1"
                    );
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} round trips"))
}

fn hset_structure(cfg: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for k in 2..=cfg.max_k.min(4) {
        for p in catalog(k)? {
            let gens = GeneratingSet::from_pgs(p.clone());
            for (i, a) in gens.hgens.iter().enumerate() {
                ensure!(a.contains(1), "{p}: hgen {a} misses 1");
                for b in &gens.hgens[i + 1..] {
                    ensure!(!preceq(a, b) && !preceq(b, a), "{p}: hgens {a} and {b} are comparable");
                }
            }
            ensure!(
                lib(is_si_family(&gens.all_generators(), 2 * k))?,
                "{p}: pgs ∪ hgens is not strongly intersecting"
            );
            count += 1;
        }
    }
    Ok(format!("{count} generating sets"))
}

fn normalized_wedge_matches_raw(cfg: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for k in 2..=cfg.max_k.min(4) {
        for p in catalog(k)?.into_iter().filter(|p| !p.is_empty()) {
            for sel in WedgeSelection::all(&p) {
                let raw: Vec<ZSet> = sel
                    .0
                    .iter()
                    .zip(p.members())
                    .map(|(&i, g)| companion(g, i))
                    .collect::<crate::Result<_>>()
                    .map_err(|e| e.to_string())?;
                let expect = lib(wedge(&raw))?;
                let got = lib(normalized_wedge(&p, &sel))?;
                ensure!(got == expect, "{p}, selection {:?}: closed form {got}, raw wedge {expect}", sel.0);
                count += 1;
            }
        }
    }
    Ok(format!("{count} selections"))
}

fn extension_invariance(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let k = 3;
    let fams = lib(census(2 * k, k))?;
    for fam in &fams {
        let base = lib(recover_pgs(fam))?;
        let base_profile = profile(&GeneratingSet::from_pgs(base.pgs.clone()));
        for n in [7, 8] {
            let ext = lib(extend_family(fam, n))?;
            ensure!(is_mlcif(&ext), "extension of {} to n = {n} is not an MLCIF", base.pgs);
            let rec = lib(recover_pgs(&ext))?;
            ensure!(rec.pgs == base.pgs, "n = {n}: {} came back as {}", base.pgs, rec.pgs);
            let p = profile(&GeneratingSet::from_pgs(rec.pgs));
            ensure!(
                p.rank == base_profile.rank && p.max_gens == base_profile.max_gens,
                "n = {n}: profile of {} changed",
                base.pgs
            );
        }
    }
    Ok(format!("{} census families to n = 7, 8", fams.len()))
}

/// `(n, k, b)` with `k <= 5`, `4 <= b <= k + 1`, `2k <= n <= max_n`.
fn ahm_grid(max_n: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for k in 3..=5u32 {
        for b in 4..=k + 1 {
            for n in 2 * k..=max_n {
                out.push((n, k, b));
            }
        }
    }
    out
}

/// Non-empty `X ⊆ [2, n]` with `|X| <= 4`.
fn test_sets(n: u32) -> Vec<ZSet> {
    all_subsets(n)
        .into_iter()
        .filter(|x| !x.is_empty() && x.len() <= 4 && !x.contains(1))
        .collect()
}

fn closed_forms_match_enumeration(cfg: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let max_n = cfg.max_n.min(12);
    let mut reports = 0;
    for (n, k, b) in ahm_grid(max_n) {
        let (fam, _) = lib(build_mlcif(n, k, &lib(crate::family::validate_pgs(k, &[ZSet::interval(2, b)]))?))?;
        let size: Count = lib(size_ahm(n as i64, k as i64, b as i64))?;
        ensure!(size == Count::from(fam.len()), "size_ahm({n}, {k}, {b}) = {size}, built {}", fam.len());
        for x in test_sets(n) {
            let f = lib(compare_report::<Count>(n, k, b, &x, false))?;
            let e = lib(enumeration_report::<Count>(n, k, b, &x))?;
            ensure!(
                (&f.a_x, &f.a_0_x, &f.s_x) == (&e.a_x, &e.a_0_x, &e.s_x),
                "({n}, {k}, {b}, {x}): formula {}/{}/{}, enumeration {}/{}/{}",
                f.a_x,
                f.a_0_x,
                f.s_x,
                e.a_x,
                e.a_0_x,
                e.s_x
            );
            if x.is_subset(&ZSet::interval(2, b)) {
                let extra: Count = binom(n as i64 - b as i64, k as i64 - b as i64 + 1);
                ensure!(f.a_x == f.s_x.clone() + extra, "({n}, {k}, {b}, {x}): a_X is not s_X + C(n-b, k-b+1)");
            }
            reports += 1;
        }
        let (ex, _) = lib(enumerate_ax(&fam, &ZSet::interval(2, n)))?;
        ensure!(ex == fam.len() as u64, "every member should meet [2, n]");
    }
    let mut generators = 0;
    for k in 2..=5u32 {
        for g in lib(universe_gk(k, Branch::All))? {
            for n in 2 * k..=max_n {
                let pad_start = n - k + g.len() as u32 + 1;
                if g.last().is_some_and(|m| m >= pad_start) {
                    ensure!(count_f::<Count>(n, k, &g).is_err(), "padding collision for {g} not reported");
                    continue;
                }
                let by_formula: Count = lib(count_f(n, k, &g))?;
                let fam = lib(materialize(n, k, std::slice::from_ref(&g)))?;
                ensure!(by_formula == Count::from(fam.len()), "|F({n}, {k}, {g})| = {}, formula {by_formula}", fam.len());
                generators += 1;
            }
        }
    }
    for k in 2..=5u32 {
        for n in 2 * k..=max_n {
            let star = lib(materialize(n, k, &[ZSet::from([1])]))?;
            for d in 0..=4u32.min(n - 1) {
                let x = ZSet::interval(n - d + 1, n);
                let by_formula: Count = lib(star_count_x(n as i64, k as i64, d as i64))?;
                let (meet, _) = lib(enumerate_ax(&star, &x))?;
                ensure!(by_formula == Count::from(meet), "star count at ({n}, {k}, {d})");
            }
        }
    }
    Ok(format!("{reports} test sets, {generators} single-generator families, n <= {max_n}"))
}

fn binomial_unimodal(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    for n in 0..=40i64 {
        for b in 1..=n / 2 {
            let (lo, hi) = (binom::<Count>(n, b - 1), binom::<Count>(n, b));
            ensure!(lo < hi, "C({n}, {}) = {lo} is not below C({n}, {b}) = {hi}", b - 1);
        }
    }
    Ok("n <= 40".into())
}

fn hockey_stick(cfg: &SelftestConfig, rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..cfg.samples {
        let m = rng.gen_range(0..=40i64);
        let r = rng.gen_range(0..=12i64);
        let d = rng.gen_range(0..=m);
        let lhs = binom::<Count>(m, r) - binom::<Count>(m - d, r);
        let rhs = (0..d).fold(Count::from(0), |acc, j| acc + binom::<Count>(m - d + j, r - 1));
        ensure!(lhs == rhs, "C({m}, {r}) - C({}, {r}) = {lhs}, sum gives {rhs}", m - d);
    }
    Ok(format!("{} sampled (m, r, d)", cfg.samples))
}

fn case2_below_star(cfg: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for (n, k, b) in ahm_grid(cfg.max_n.min(12)) {
        for d in 1..=4i64.min(n as i64 - b as i64) {
            let c = lib(count_ax_case2::<Count>(n as i64, k as i64, b as i64, d))?;
            let s: Count = lib(star_count_x(n as i64, k as i64, d))?;
            ensure!(c.a_x <= s, "({n}, {k}, {b}, d = {d}): a_X = {} > s_X = {s}", c.a_x);
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn ratio_threshold(_: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let one = CountRatio::one();
    let mut thresholds = BTreeMap::new();
    for k in 3..=8i64 {
        for b in 4..=k + 1 {
            let horizon = 10 * k;
            let below = |n: i64| ratio_r::<Count>(n, k, b).is_some_and(|r| r < one);
            ensure!(below(horizon), "R >= 1 at the horizon for k = {k}, b = {b}");
            for d in 2..=4 {
                let scan = lib(mixed_threshold::<Count>(k, b, d, horizon))?;
                let n0 = scan
                    .threshold
                    .ok_or_else(|| format!("no mixed threshold for k = {k}, b = {b}, d = {d}"))?;
                ensure!(
                    (n0..=horizon).all(below),
                    "k = {k}, b = {b}, d = {d}: R >= 1 somewhere in [{n0}, {horizon}]"
                );
                thresholds.insert((k, b, d), n0);
            }
        }
    }
    Ok(format!("{} (k, b, d) triples with a threshold", thresholds.len()))
}

fn two_maxgen_shape(cfg: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let mut two = 0;
    let mut mismatches = Vec::new();
    for k in 3..=cfg.max_k.clamp(3, 4) {
        for p in catalog(k)? {
            let gens = GeneratingSet::from_pgs(p.clone());
            let prof = profile(&gens);
            if prof.max_gen_count != 2 {
                continue;
            }
            two += 1;
            let shape = lib(classify_two_maxgen(&gens))?;
            let ok = match shape {
                Some((a, b)) => b > 2 * a - 1 && (prof.rank != 2 || (a == 2 && (4..=k + 1).contains(&b))),
                None => false,
            };
            if !ok {
                let gens_list: Vec<String> = prof.max_gens.iter().map(ZSet::to_string).collect();
                mismatches.push(format!("k = {k} {p} (max gens {}, rank {})", gens_list.join(", "), prof.rank));
            }
        }
    }
    ensure!(
        mismatches.is_empty(),
        "{} of {two} two-maximal-generator families lack the interval shape: {}",
        mismatches.len(),
        mismatches.join("; ")
    );
    Ok(format!("{two} families with two maximal generators"))
}

fn named_families(cfg: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let max_n = cfg.max_n.min(12);
    for k in 3..=5u32 {
        for n in 2 * k..=max_n {
            let (hm, _) = lib(make_named(NamedFamily::HiltonMilner, n, k, None))?;
            ensure!(hm == hilton_milner_def(n, k), "Hilton–Milner differs from its definition at ({n}, {k})");
            let (top, _) = lib(make_named(NamedFamily::Ahm, n, k, Some(k + 1)))?;
            ensure!(top == hm, "ahm with b = k + 1 differs from Hilton–Milner at ({n}, {k})");
            for b in 4..=k + 1 {
                let (fam, _) = lib(make_named(NamedFamily::Ahm, n, k, Some(b)))?;
                let size: Count = lib(size_ahm(n as i64, k as i64, b as i64))?;
                ensure!(size == Count::from(fam.len()), "|ahm({n}, {k}, {b})| = {}, formula {size}", fam.len());
            }
        }
    }
    Ok(format!("k in 3..=5, n <= {max_n}"))
}

fn catalog_round_trip(cfg: &SelftestConfig, _: &mut ChaCha8Rng) -> Outcome {
    let budget = CatalogBudget { max_k: cfg.max_k, max_n: cfg.max_n.max(8) };
    let recs = lib(build_catalog(3, &[6, 7, 8], budget))?;
    for text in [lib(catalog_to_json(&recs))?, lib(catalog_to_ndjson(&recs))?] {
        let back = lib(catalog_from_str(&text))?;
        ensure!(back == recs, "catalog did not survive a write/read cycle");
    }
    for r in &recs {
        lib(r.revalidate())?;
    }
    Ok(format!("{} records", recs.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_are_unique() {
        let names: BTreeSet<_> = SUITES.iter().map(|s| s.name).collect();
        assert_eq!(names.len(), SUITES.len());
    }

    #[test]
    fn sampling_is_seeded() {
        let cfg = SelftestConfig { samples: 50, ..SelftestConfig::default() };
        let i = SUITES.iter().position(|s| s.name == "prefix_count_monotone").unwrap();
        assert_eq!(run_suite(i, &cfg).detail, run_suite(i, &cfg).detail);
    }

    #[test]
    fn filter_by_name() {
        let cfg = SelftestConfig::default();
        let out = run(&cfg, &["binomial_unimodal".to_string()]);
        assert_eq!(out.len(), 1);
        assert!(out[0].passed);
    }
}
