//! Acceptance gate: each numbered criterion runs at its stated bounds and
//! prints one PASS/FAIL line. Run with `--nocapture` to see the report.

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::One;

use mlcif::classify::{classify_two_maxgen, make_named, profile, NamedFamily};
use mlcif::family::materialize;
use mlcif::counting::{
    binom, count_ax_case1, count_ax_case2, count_interval_l, count_l, enumerate_ax, mixed_threshold, ratio_r,
    size_ahm, star_count_x,
};
use mlcif::oracle::{a23_def, census, hilton_milner_def, star_def};
use mlcif::poset::{compression_closure, prefix_count};
use mlcif::selftest::{run, SelftestConfig};
use mlcif::set::all_subsets;
use mlcif::{
    build_mlcif, disjoint_witness, enumerate_pgs, extend_family, is_mlcif, recover_pgs, strongly_intersecting,
    validate_pgs, Count, CountRatio, EnumerationBudget, GeneratingSet, Pgs, UniformFamily, ZSet,
};

/// Number of MLCIFs in `C([6], 3)`, as found by the census oracle.
const CENSUS_K3_N6: usize = 6;
/// Number of MLCIFs in `C([4], 2)`.
const CENSUS_K2_N4: usize = 2;
/// `|F([2,4]) ∪ F({1,4})|` at `n = 8`, `k = 3`, by enumeration.
const AHM_8_3_4: u64 = 16;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T>(r: mlcif::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn catalog(k: u32) -> Result<Vec<Pgs>, String> {
    ok(enumerate_pgs(k, EnumerationBudget { max_k: 5 }))
}

fn ahm_pgs(k: u32, b: u32) -> Result<Pgs, String> {
    ok(validate_pgs(k, &[ZSet::interval(2, b)]))
}

fn nonempty_subsets(n: u32) -> Vec<ZSet> {
    all_subsets(n).into_iter().filter(|s| !s.is_empty()).collect()
}

fn criterion_1() -> Outcome {
    let sets = nonempty_subsets(7);
    for g in &sets {
        for h in &sets {
            let si = ok(strongly_intersecting(g, h, 7))?;
            let dw = ok(disjoint_witness(g, h))?;
            ensure!(si.is_some() != dw.is_some(), "({g}, {h}): criterion {si:?}, witness {dw:?}");
        }
    }
    Ok(format!("{} ordered pairs over [7]", sets.len() * sets.len()))
}

fn built_families(n: u32, k: u32) -> Result<Vec<UniformFamily>, String> {
    catalog(k)?
        .iter()
        .map(|p| ok(build_mlcif(n, k, p)).map(|(f, _)| f))
        .collect()
}

fn criterion_2() -> Outcome {
    let brute = ok(census(4, 2))?;
    ensure!(brute.len() == CENSUS_K2_N4, "census found {} families", brute.len());
    let named: BTreeSet<UniformFamily> = [star_def(4, 2), a23_def(4, 2)].into();
    let brute: BTreeSet<UniformFamily> = brute.into_iter().collect();
    let built: BTreeSet<UniformFamily> = built_families(4, 2)?.into_iter().collect();
    ensure!(brute == named, "census differs from {{Star, A23}}");
    ensure!(built == brute, "catalog builds differ from the census");
    Ok("census = {Star, A23} = catalog".into())
}

fn criterion_3() -> Outcome {
    let brute = ok(census(6, 3))?;
    ensure!(brute.len() == CENSUS_K3_N6, "census found {} families, golden {CENSUS_K3_N6}", brute.len());
    let built = built_families(6, 3)?;
    ensure!(built.len() == brute.len(), "catalog has {} PGSs, census {} families", built.len(), brute.len());
    let built_set: BTreeSet<&UniformFamily> = built.iter().collect();
    ensure!(built_set.len() == built.len(), "two PGSs build the same family");
    for fam in &brute {
        let hits = built.iter().filter(|b| *b == fam).count();
        ensure!(hits == 1, "census family of size {} is built {hits} times", fam.len());
    }
    Ok(format!("{} families, matched one to one", brute.len()))
}

fn criterion_4() -> Outcome {
    let brute = ok(census(6, 3))?;
    for fam in &brute {
        let base = ok(recover_pgs(fam))?.pgs;
        for n in [7, 8] {
            let ext = ok(extend_family(fam, n))?;
            ensure!(is_mlcif(&ext), "extension of {base} to n = {n} is not an MLCIF");
            let again = ok(recover_pgs(&ext))?.pgs;
            ensure!(again == base, "{base} extended to n = {n} recovers as {again}");
        }
    }
    Ok(format!("{} families extended to n = 7, 8", brute.len()))
}

fn criterion_5() -> Outcome {
    ensure!(count_l::<Count>(&ZSet::empty()).is_one(), "the empty set has one compression");
    let sets = nonempty_subsets(8);
    for g in &sets {
        let closure = ok(compression_closure(g, 8))?;
        let counted: Count = count_l(g);
        ensure!(counted == Count::from(closure.len()), "count_L({g}) = {counted}, |L| = {}", closure.len());
    }
    for b in 1..=10u32 {
        for a in 1..=b {
            let by_interval: Count = ok(count_interval_l(a as i64, b as i64))?;
            ensure!(by_interval == binom::<Count>(b as i64, a as i64 - 1), "[{a}, {b}]: not C(b, a-1)");
            ensure!(by_interval == count_l::<Count>(&ZSet::interval(a, b)), "[{a}, {b}]: interval vs general count");
        }
    }
    Ok(format!("{} subsets of [8] and 55 intervals", sets.len() + 1))
}

fn ahm_grid(max_n: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for k in 3..=5u32 {
        for n in 2 * k..=max_n {
            for b in 4..=k + 1 {
                out.push((n, k, b));
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let (worked, _) = ok(build_mlcif(8, 3, &ahm_pgs(3, 4)?))?;
    ensure!(worked.len() as u64 == AHM_8_3_4, "(8, 3, 4) built {} members", worked.len());
    ensure!(ok(size_ahm::<Count>(8, 3, 4))? == Count::from(AHM_8_3_4), "size_ahm(8, 3, 4) is not {AHM_8_3_4}");
    let grid = ahm_grid(12);
    for &(n, k, b) in &grid {
        let (fam, _) = ok(build_mlcif(n, k, &ahm_pgs(k, b)?))?;
        let formula: Count = ok(size_ahm(n as i64, k as i64, b as i64))?;
        ensure!(formula == Count::from(fam.len()), "({n}, {k}, {b}): formula {formula}, built {}", fam.len());
    }
    Ok(format!("{} grid points, (8, 3, 4) = {AHM_8_3_4}", grid.len()))
}

/// `X ⊆ [2, n]` with `1 <= |X| <= 4`.
fn test_sets(n: u32) -> Vec<ZSet> {
    nonempty_subsets(n).into_iter().filter(|x| x.len() <= 4 && !x.contains(1)).collect()
}

fn criterion_7() -> Outcome {
    let (mut checked, mut inside) = (0, 0);
    for (n, k, b) in ahm_grid(10) {
        let (fam, _) = ok(build_mlcif(n, k, &ahm_pgs(k, b)?))?;
        let block = ZSet::interval(2, b);
        for x in test_sets(n).into_iter().filter(|x| x.intersects(&block)) {
            let (ni, ki, bi, d) = (n as i64, k as i64, b as i64, x.len() as i64);
            let mu_b = prefix_count(&x, b) as i64;
            let formula: Count = ok(count_ax_case1(ni, ki, bi, d, mu_b))?;
            let (meet, _) = ok(enumerate_ax(&fam, &x))?;
            ensure!(formula == Count::from(meet), "({n}, {k}, {b}, {x}): formula {formula}, enumeration {meet}");
            if x.is_subset(&block) {
                let s_x: Count = ok(star_count_x(ni, ki, d))?;
                let extra: Count = binom(ni - bi, ki - bi + 1);
                ensure!(formula == s_x.clone() + extra, "({n}, {k}, {b}, {x}): a_X is not s_X + C(n-b, k-b+1)");
                inside += 1;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} test sets, {inside} inside [2, b]"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for (n, k, b) in ahm_grid(10) {
        let (fam, _) = ok(build_mlcif(n, k, &ahm_pgs(k, b)?))?;
        let star = star_def(n, k);
        let block = ZSet::interval(2, b);
        for x in test_sets(n).into_iter().filter(|x| !x.intersects(&block)) {
            let c = ok(count_ax_case2::<Count>(n as i64, k as i64, b as i64, x.len() as i64))?;
            let (meet, avoid) = ok(enumerate_ax(&fam, &x))?;
            ensure!(
                c.a_x == Count::from(meet) && c.a_0_x == Count::from(avoid),
                "({n}, {k}, {b}, {x}): formula {}/{}, enumeration {meet}/{avoid}",
                c.a_x,
                c.a_0_x
            );
            let (s_x, _) = ok(enumerate_ax(&star, &x))?;
            ensure!(meet <= s_x, "({n}, {k}, {b}, {x}): a_X = {meet} > s_X = {s_x}");
            checked += 1;
        }
    }
    Ok(format!("{checked} test sets disjoint from [2, b]"))
}

fn criterion_9() -> Outcome {
    let one = CountRatio::one();
    let (mut triples, mut vacuous, mut latest) = (0, 0, (0, 0, 0, 0));
    for k in 3..=8i64 {
        for b in 4..=k + 1 {
            for d in 1..=4i64 {
                let horizon = 10 * k;
                let scan = ok(mixed_threshold::<Count>(k, b, d, horizon))?;
                // a mixed X has at least one element on each side of b
                if d < 2 {
                    ensure!(!scan.feasible, "d = 1 reported as feasible");
                    vacuous += 1;
                    continue;
                }
                let n0 = scan.threshold.ok_or_else(|| format!("no threshold for (k, b, d) = ({k}, {b}, {d})"))?;
                for n in n0..=horizon {
                    let s_x: Count = ok(star_count_x(n, k, d))?;
                    for mu_b in 1..d.min(b) {
                        if d - mu_b > n - b {
                            continue;
                        }
                        let a_x: Count = ok(count_ax_case1(n, k, b, d, mu_b))?;
                        ensure!(a_x < s_x, "({k}, {b}, {d}) at n = {n}, mu = {mu_b}: a_X = {a_x} >= s_X = {s_x}");
                    }
                    let r = ratio_r::<Count>(n, k, b).ok_or_else(|| format!("R undefined at n = {n}"))?;
                    ensure!(r < one, "({k}, {b}, {d}): R = {r} at n = {n} in [{n0}, {horizon}]");
                }
                if n0 > latest.3 {
                    latest = (k, b, d, n0);
                }
                triples += 1;
            }
        }
    }
    Ok(format!(
        "{triples} triples with a threshold, {vacuous} vacuous (d = 1); largest N0 = {} at (k, b, d) = ({}, {}, {})",
        latest.3, latest.0, latest.1, latest.2
    ))
}

/// `F([a,b]) ∪ F({1} ∪ [b-a+2, b])` for every `2 <= a < b <= 2k - 1` that fits in `k`-sets.
fn interval_shape_families(n: u32, k: u32) -> Result<BTreeSet<UniformFamily>, String> {
    let mut out = BTreeSet::new();
    for a in 2..2 * k {
        for b in a + 1..2 * k {
            let top = ZSet::interval(a, b);
            let partner = ZSet::from([1]).union(&ZSet::interval(b - a + 2, b));
            if top.len() > k as usize || partner.len() > k as usize {
                continue;
            }
            out.insert(ok(materialize(n, k, &[top, partner]))?);
        }
    }
    Ok(out)
}

fn criterion_10() -> Outcome {
    let (hm, _) = ok(make_named(NamedFamily::Ahm, 8, 3, Some(4)))?;
    let hm_ok = hm == hilton_milner_def(8, 3);
    let mut two = 0;
    let mut mismatches = Vec::new();
    for k in [3u32, 4] {
        for p in catalog(k)? {
            let gens = GeneratingSet::from_pgs(p.clone());
            let prof = profile(&gens);
            if prof.max_gen_count != 2 {
                continue;
            }
            two += 1;
            let shape = ok(classify_two_maxgen(&gens))?;
            let fits = match shape {
                Some((a, b)) => b > 2 * a - 1 && (prof.rank != 2 || (a == 2 && (4..=k + 1).contains(&b))),
                None => false,
            };
            if !fits {
                let maxg: Vec<String> = prof.max_gens.iter().map(ZSet::to_string).collect();
                let n = 2 * k + 2;
                let (fam, _) = ok(build_mlcif(n, k, &p))?;
                ensure!(is_mlcif(&fam), "{p} does not build an MLCIF");
                ensure!(
                    fam == ok(materialize(n, k, &prof.max_gens))?,
                    "{p}: the maximal generators do not generate the family"
                );
                let shaped = interval_shape_families(n, k)?;
                let verdict = if shaped.contains(&fam) { "but equals an interval-shape family" } else { "and equals no interval-shape family" };
                mismatches.push(format!(
                    "k = {k}, PGS {p}: maximal generators {}, rank {}, {verdict} at n = {n}",
                    maxg.join(" "),
                    prof.rank
                ));
            }
        }
    }
    ensure!(hm_ok, "ahm(8, 3, 4) differs from the Hilton–Milner definition");
    ensure!(
        mismatches.is_empty(),
        "{} of {two} families with two maximal generators lack the [a,b] / {{1}} ∪ [b-a+2, b] shape: {}",
        mismatches.len(),
        mismatches.join("; ")
    );
    Ok(format!("{two} families with two maximal generators, all of interval shape"))
}

fn criterion_11() -> Outcome {
    let names = [
        "prefix_count_monotone",
        "wedge_absorbs_dominated",
        "wedge_is_meet",
        "companion_blocks_tails",
        "recover_round_trip",
    ];
    let only: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let results = run(&SelftestConfig::default(), &only);
    ensure!(results.len() == names.len(), "expected {} suites, ran {}", names.len(), results.len());
    let failed: Vec<String> = results.iter().filter(|r| !r.passed).map(|r| format!("{}: {}", r.name, r.detail)).collect();
    ensure!(failed.is_empty(), "{}", failed.join("; "));
    Ok(results.iter().map(|r| format!("{} ({})", r.name, r.detail)).collect::<Vec<_>>().join("; "))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("strong-intersection oracle equivalence on [7]", criterion_1),
        ("census bijection, k = 2", criterion_2),
        ("census bijection, k = 3", criterion_3),
        ("extension from [6] to n = 7, 8", criterion_4),
        ("compression counts", criterion_5),
        ("AHM sizes", criterion_6),
        ("A(X) when X meets [2, b]", criterion_7),
        ("A(X) when X avoids [2, b]", criterion_8),
        ("mixed-X thresholds and ratio R", criterion_9),
        ("two-maximal-generator shape", criterion_10),
        ("order, wedge and companion property suites", criterion_11),
    ];
    let mut failed = Vec::new();
    println!();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL {:>2} {name} [{secs:.2}s]: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
