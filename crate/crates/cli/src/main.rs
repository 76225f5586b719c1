//! `mlcif`: build, enumerate, recover and count maximal left-compressed
//! intersecting families from the command line.
//!
//! Exit codes: 0 success, 1 domain failure (invalid PGS, not an MLCIF, a
//! failed check), 2 usage, parse or budget error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mlcif::catalog::{build_catalog, catalog_to_json, catalog_to_ndjson, CatalogBudget};
use mlcif::selftest::{self, SelftestConfig};
use mlcif::strong::pair_report;
use mlcif::{
    build_mlcif, check_mlcif, compare_report, infer_k, make_named, parse_set_list, profile, read_family, recover_pgs,
    validate_pgs, write_family, Error, FamilyProfile, GeneratingSet, NamedFamily, Report, ZSet,
};

#[derive(Parser, Debug)]
#[command(name = "mlcif", version, about = "Maximal left-compressed intersecting families", long_about = None)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check closed forms by enumeration.
    #[arg(long, global = true)]
    oracle: bool,
    /// Seed for sampled selftest suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest ground-set size to build.
    #[arg(long, global = true, default_value_t = 24)]
    max_n: u32,
    /// Largest k to enumerate.
    #[arg(long, global = true, default_value_t = 5)]
    max_k: u32,
    /// Abort, without output, if the computation takes longer (seconds).
    #[arg(long, global = true)]
    time_budget: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a candidate principal generating set.
    CheckPgs(CheckPgsArgs),
    /// Build the family of a PGS (or a named family) on [n].
    Build(BuildArgs),
    /// Write the catalog of every PGS for k.
    Enumerate(EnumerateArgs),
    /// Read a family file and recover its PGS.
    Recover(RecoverArgs),
    /// Compare |A(X)| with |S(X)| for A = F([2,b]) ∪ F({1,b}).
    Compare(CompareArgs),
    /// Run the verification suites.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct CheckPgsArgs {
    /// Generators, e.g. "2,3;2,4,5".
    #[arg(conflicts_with = "file")]
    gens: Option<String>,
    /// Read generators from a file (one set per line or `;`-separated).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Uniformity; defaults to the smallest k whose universe holds every generator.
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    /// PGS literal, e.g. "2,3" or "" for the Star.
    #[arg(long, conflicts_with = "named", required_unless_present = "named")]
    pgs: Option<String>,
    /// Named family instead of a PGS.
    #[arg(long, value_enum)]
    named: Option<Named>,
    /// Block end for `--named ahm`.
    #[arg(long)]
    b: Option<u32>,
    /// Check the result is an MLCIF by brute force.
    #[arg(long)]
    verify: bool,
    /// Write the family file here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Named {
    Star,
    A23,
    HiltonMilner,
    Ahm,
}

impl From<Named> for NamedFamily {
    fn from(n: Named) -> Self {
        match n {
            Named::Star => NamedFamily::Star,
            Named::A23 => NamedFamily::A23,
            Named::HiltonMilner => NamedFamily::HiltonMilner,
            Named::Ahm => NamedFamily::Ahm,
        }
    }
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    k: u32,
    /// Ground-set sizes to record, e.g. "6,7,8"; defaults to 2k.
    #[arg(long, value_delimiter = ',')]
    n: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Ndjson,
}

#[derive(Args, Debug)]
struct RecoverArgs {
    /// Family file, or `-` for stdin.
    file: PathBuf,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    b: u32,
    /// Test set X ⊆ [2, n], e.g. "5,6".
    #[arg(conflicts_with = "batch", required_unless_present = "batch")]
    x: Option<String>,
    /// One test set per line.
    #[arg(long)]
    batch: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// Run only these suites (comma-separated names).
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Draws per sampled suite.
    #[arg(long)]
    samples: Option<usize>,
    /// List suite names and exit.
    #[arg(long)]
    list: bool,
}

/// Failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidPgs(_) | Error::NotMlcif(_) | Error::Contract(_) | Error::WrongCase(_) => 1,
            Error::Input(_) | Error::Budget(_) | Error::Parse(_) | Error::Json(_) => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<Output, Failure>;

/// Buffered stdout text and the exit code to finish with.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

struct Budget {
    start: Instant,
    limit: Option<Duration>,
}

impl Budget {
    fn check(&self) -> Result<(), Failure> {
        match self.limit {
            Some(limit) if self.start.elapsed() > limit => Err(Failure::usage(format!(
                "time budget of {:.1}s exceeded; no output written",
                limit.as_secs_f64()
            ))),
            _ => Ok(()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget { start: Instant::now(), limit: cli.time_budget.map(Duration::from_secs_f64) };
    let result = match &cli.command {
        Command::CheckPgs(a) => check_pgs(&cli, a),
        Command::Build(a) => build(&cli, a),
        Command::Enumerate(a) => enumerate(&cli, a, &budget),
        Command::Recover(a) => recover(&cli, a),
        Command::Compare(a) => compare(&cli, a),
        Command::Selftest(a) => run_selftest(&cli, a, &budget),
    };
    match result {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Set lists from a file: one literal per line or `;`-separated, `#` comments skipped.
fn parse_list_file(text: &str) -> Result<Vec<ZSet>, Failure> {
    let joined: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    Ok(parse_set_list(&joined.join(";"))?)
}

fn to_json(v: &impl serde::Serialize) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(v).map_err(Error::from)?;
    s.push('\n');
    Ok(s)
}

fn check_pgs(cli: &Cli, a: &CheckPgsArgs) -> CmdResult {
    let members = match (&a.gens, &a.file) {
        (Some(g), _) => parse_set_list(g)?,
        (None, Some(f)) => parse_list_file(&read_input(f)?)?,
        (None, None) => return Err(Failure::usage("give generators inline or with --file")),
    };
    let k = a.k.unwrap_or_else(|| infer_k(&members));
    let n = members.iter().filter_map(ZSet::last).fold(2 * k - 1, u32::max);
    let pairs = pair_report(&members, n)?;
    let verdict = validate_pgs(k, &members);
    let (valid, violations) = match &verdict {
        Ok(_) => (true, Vec::new()),
        Err(Error::InvalidPgs(v)) => (false, v.clone()),
        Err(_) => return Err(verdict.unwrap_err().into()),
    };
    let text = if cli.json {
        to_json(&json!({
            "k": k,
            "members": members,
            "pairs": pairs,
            "valid": valid,
            "violations": violations,
        }))?
    } else {
        let mut t = format!("k = {k}\n");
        for p in &pairs {
            match (&p.witness, &p.disjoint) {
                (Some(w), _) => writeln!(t, "{} ~ {}: strongly intersecting at ell = {}", p.g, p.h, w.ell),
                (None, Some(d)) => writeln!(
                    t,
                    "{} ~ {}: not strongly intersecting, disjoint pair {} <= {}, {} <= {}",
                    p.g, p.h, d.s, p.g, d.t, p.h
                ),
                (None, None) => writeln!(t, "{} ~ {}: not strongly intersecting", p.g, p.h),
            }
            .expect("writing to a String");
        }
        if valid {
            t.push_str("valid PGS\n");
        } else {
            t.push_str("invalid PGS\n");
            for v in &violations {
                writeln!(t, "  {v}").expect("writing to a String");
            }
        }
        t
    };
    Ok(Output { text, code: if valid { 0 } else { 1 } })
}

fn profile_lines(t: &mut String, gens: &GeneratingSet, p: &FamilyProfile) {
    let hgens: Vec<String> = gens.hgens.iter().map(ZSet::to_string).collect();
    let maxg: Vec<String> = p.max_gens.iter().map(ZSet::to_string).collect();
    writeln!(t, "# pgs: {}", gens.pgs).expect("writing to a String");
    writeln!(t, "# hgens: {}", hgens.join(", ")).expect("writing to a String");
    writeln!(
        t,
        "# rank {}, maximal generators ({}): {}, form {}",
        p.rank,
        p.max_gen_count,
        maxg.join(", "),
        p.recognized_form
    )
    .expect("writing to a String");
}

fn build(cli: &Cli, a: &BuildArgs) -> CmdResult {
    if a.n > cli.max_n {
        return Err(Error::Budget(format!("n = {} exceeds max-n = {}", a.n, cli.max_n)).into());
    }
    let (fam, gens) = match (&a.pgs, a.named) {
        (Some(lit), _) => build_mlcif(a.n, a.k, &validate_pgs(a.k, &parse_set_list(lit)?)?)?,
        (None, Some(name)) => make_named(name.into(), a.n, a.k, a.b)?,
        (None, None) => return Err(Failure::usage("give --pgs or --named")),
    };
    let p = profile(&gens);
    let verified = if a.verify {
        check_mlcif(&fam).map_err(|d| Failure::domain(format!("built family is not an MLCIF: {d}")))?;
        Some(true)
    } else {
        None
    };
    let file = write_family(&fam);
    if let Some(path) = &a.out {
        write_file(path, &file)?;
    }
    let text = if cli.json {
        to_json(&json!({
            "n": a.n,
            "k": a.k,
            "size": fam.len(),
            "pgs": gens.pgs.members(),
            "hgens": gens.hgens,
            "profile": p,
            "verified": verified,
            "members": fam.members(),
        }))?
    } else {
        let mut t = if a.out.is_some() { format!("# n={} k={}, {} members\n", a.n, a.k, fam.len()) } else { file };
        profile_lines(&mut t, &gens, &p);
        if verified.is_some() {
            t.push_str("# verified: MLCIF\n");
        }
        t
    };
    Ok(Output::ok(text))
}

fn enumerate(cli: &Cli, a: &EnumerateArgs, budget: &Budget) -> CmdResult {
    let ns = if a.n.is_empty() { vec![2 * a.k] } else { a.n.clone() };
    let records = build_catalog(a.k, &ns, CatalogBudget { max_k: cli.max_k, max_n: cli.max_n })?;
    budget.check()?;
    let body = match a.format {
        Format::Json => catalog_to_json(&records)?,
        Format::Ndjson => catalog_to_ndjson(&records)?,
    };
    match &a.out {
        Some(path) => {
            write_file(path, &body)?;
            let msg = format!("{} records for k = {} written to {}\n", records.len(), a.k, path.display());
            Ok(Output::ok(if cli.json { to_json(&json!({ "records": records.len() }))? } else { msg }))
        }
        None => Ok(Output::ok(body)),
    }
}

fn recover(cli: &Cli, a: &RecoverArgs) -> CmdResult {
    let fam = read_family(&read_input(&a.file)?)?;
    let rec = recover_pgs(&fam)?;
    let gens = GeneratingSet::from_pgs(rec.pgs.clone());
    let p = profile(&gens);
    let text = if cli.json {
        to_json(&json!({
            "n": fam.n(),
            "k": fam.k(),
            "pgs": rec.pgs.members(),
            "hgens": rec.hgens,
            "profile": p,
        }))?
    } else {
        let hgens: Vec<String> = rec.hgens.iter().map(ZSet::to_string).collect();
        let maxg: Vec<String> = p.max_gens.iter().map(ZSet::to_string).collect();
        format!(
            "pgs: {}\nliteral: {}\nhgens: {}\nrank: {}\nmaximal generators ({}): {}\nform: {}\n",
            rec.pgs,
            rec.pgs.to_literal(),
            hgens.join(", "),
            p.rank,
            p.max_gen_count,
            maxg.join(", "),
            p.recognized_form
        )
    };
    Ok(Output::ok(text))
}

fn report_line(r: &Report) -> String {
    let mut line = format!(
        "{:<14} {:>2} {:>4} {:>12} {:>12} {:>12}  a_X {} s_X",
        r.x.to_string(),
        r.d,
        r.mu_x_b,
        r.a_x,
        r.a_0_x,
        r.s_x,
        mlcif::counting::ordering_symbol(r.verdict)
    );
    if let Some(o) = &r.oracle {
        let status = if o.agrees { "agrees" } else { "DISAGREES" };
        write!(line, "  enumeration {status} ({}, {})", o.a_x, o.a_0_x).expect("writing to a String");
    }
    line
}

fn compare(cli: &Cli, a: &CompareArgs) -> CmdResult {
    if cli.oracle && a.n > cli.max_n {
        return Err(Error::Budget(format!("n = {} exceeds max-n = {}", a.n, cli.max_n)).into());
    }
    let xs: Vec<ZSet> = match (&a.x, &a.batch) {
        (Some(x), _) => vec![x.parse()?],
        (None, Some(path)) => parse_list_file(&read_input(path)?)?,
        (None, None) => return Err(Failure::usage("give X or --batch")),
    };
    let reports: Vec<Report> = xs
        .iter()
        .map(|x| compare_report(a.n, a.k, a.b, x, cli.oracle))
        .collect::<Result<_, _>>()?;
    let disagreements = reports.iter().filter(|r| r.oracle.as_ref().is_some_and(|o| !o.agrees)).count();
    let batch = a.batch.is_some();
    let text = match (cli.json, batch) {
        (true, false) => to_json(&reports[0])?,
        (true, true) => {
            let mut t = String::new();
            for r in &reports {
                t.push_str(&serde_json::to_string(r).map_err(Error::from)?);
                t.push('\n');
            }
            t
        }
        (false, false) => {
            let r = &reports[0];
            let mut t = format!(
                "n = {}, k = {}, b = {}, X = {}, d = {}, mu_X(b) = {}\n|A| = {}\na_X = {}\na_0_X = {}\ns_X = {}\na_X {} s_X\n",
                r.n,
                r.k,
                r.b,
                r.x,
                r.d,
                r.mu_x_b,
                r.a_total,
                r.a_x,
                r.a_0_x,
                r.s_x,
                mlcif::counting::ordering_symbol(r.verdict)
            );
            if let Some(o) = &r.oracle {
                let status = if o.agrees { "agrees" } else { "DISAGREES" };
                writeln!(t, "enumeration {status}: a_X = {}, a_0_X = {}", o.a_x, o.a_0_x).expect("writing to a String");
            }
            t
        }
        (false, true) => {
            let first = &reports.first();
            let mut t = match first {
                Some(r) => format!("n = {}, k = {}, b = {}, |A| = {}\n", r.n, r.k, r.b, r.a_total),
                None => String::new(),
            };
            writeln!(t, "{:<14} {:>2} {:>4} {:>12} {:>12} {:>12}", "X", "d", "mu", "a_X", "a_0_X", "s_X")
                .expect("writing to a String");
            for r in &reports {
                t.push_str(&report_line(r));
                t.push('\n');
            }
            t
        }
    };
    if disagreements > 0 {
        eprintln!("error: enumeration disagrees with the closed form on {disagreements} test set(s)");
        return Ok(Output { text, code: 1 });
    }
    Ok(Output::ok(text))
}

fn run_selftest(cli: &Cli, a: &SelftestArgs, budget: &Budget) -> CmdResult {
    if a.list {
        let names: Vec<&str> = selftest::SUITES.iter().map(|s| s.name).collect();
        return Ok(Output::ok(names.join("\n") + "\n"));
    }
    if let Some(bad) = a.only.iter().find(|n| !selftest::SUITES.iter().any(|s| s.name == n.as_str())) {
        return Err(Failure::usage(format!("unknown suite {bad:?}; see --list")));
    }
    let defaults = SelftestConfig::default();
    let cfg = SelftestConfig {
        seed: cli.seed.unwrap_or(defaults.seed),
        max_k: cli.max_k,
        max_n: cli.max_n.min(defaults.max_n),
        samples: a.samples.unwrap_or(defaults.samples),
    };
    let mut results = Vec::new();
    for (i, s) in selftest::SUITES.iter().enumerate() {
        if !a.only.is_empty() && !a.only.iter().any(|n| n == s.name) {
            continue;
        }
        results.push(selftest::run_suite(i, &cfg));
        budget.check()?;
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let text = if cli.json {
        to_json(&json!({ "seed": cfg.seed, "suites": results, "failed": failed }))?
    } else {
        let mut t = String::new();
        for r in &results {
            writeln!(
                t,
                "{} {:<36} {:>8.3}s  {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.elapsed.as_secs_f64(),
                r.detail
            )
            .expect("writing to a String");
        }
        writeln!(t, "{} of {} suites passed (seed {})", results.len() - failed, results.len(), cfg.seed)
            .expect("writing to a String");
        t
    };
    Ok(Output { text, code: if failed == 0 { 0 } else { 1 } })
}
