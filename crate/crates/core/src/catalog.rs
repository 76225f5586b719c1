//! Family files and the JSON catalog.
//!
//! A family file is a header line `n=<n> k=<k>` followed by one ascending
//! comma-separated `k`-set per line. Lines starting with `#` are skipped on
//! read so that annotated command output can be fed back in.
//!
//! Catalog records carry sizes as decimal strings because they outgrow
//! 64 bits long before enumeration does.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{profile, FamilyForm};
use crate::counting::size_ahm;
use crate::error::{Error, Result};
use crate::family::{build_mlcif, enumerate_pgs, validate_pgs, EnumerationBudget, GeneratingSet, Pgs};
use crate::set::{UniformFamily, ZSet};
use crate::Count;

pub fn write_family(fam: &UniformFamily) -> String {
    let mut out = format!("n={} k={}\n", fam.n(), fam.k());
    for s in fam {
        out.push_str(&s.to_literal());
        out.push('\n');
    }
    out
}

pub fn read_family(text: &str) -> Result<UniformFamily> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty family file".into()))?;
    let (n, k) = parse_header(header)?;
    let mut fam = UniformFamily::empty(n, k);
    for (lineno, line) in lines.enumerate() {
        let s: ZSet = line.parse()?;
        let fresh = fam
            .insert(s)
            .map_err(|e| Error::Parse(format!("member {}: {e}", lineno + 1)))?;
        if !fresh {
            return Err(Error::Parse(format!("member {}: duplicate {line}", lineno + 1)));
        }
    }
    Ok(fam)
}

fn parse_header(line: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse(format!("family header must be `n=<n> k=<k>`, got {line:?}"));
    let mut parts = line.split_whitespace();
    let mut field = |name: &str| -> Result<u32> {
        let p = parts.next().ok_or_else(bad)?;
        let v = p.strip_prefix(name).and_then(|r| r.strip_prefix('=')).ok_or_else(bad)?;
        v.parse().map_err(|_| bad())
    };
    let n = field("n")?;
    let k = field("k")?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok((n, k))
}

/// One catalog entry: a PGS with its generating set, profile and sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub k: u32,
    pub pgs: Vec<ZSet>,
    pub hgens: Vec<ZSet>,
    pub rank: usize,
    pub max_gen_count: usize,
    pub recognized_form: FamilyForm,
    /// Family size at each `n`, as a decimal string.
    pub size_at: BTreeMap<u32, String>,
}

impl CatalogRecord {
    pub fn from_generating_set(gens: &GeneratingSet, sizes: BTreeMap<u32, String>) -> Self {
        let p = profile(gens);
        CatalogRecord {
            k: gens.pgs.k(),
            pgs: gens.pgs.members().to_vec(),
            hgens: gens.hgens.clone(),
            rank: p.rank,
            max_gen_count: p.max_gen_count,
            recognized_form: p.recognized_form,
            size_at: sizes,
        }
    }

    pub fn pgs(&self) -> Result<Pgs> {
        validate_pgs(self.k, &self.pgs)
    }

    /// Rebuilds the family at every recorded `n` and checks generators,
    /// profile and sizes; the AHM families are also checked against the
    /// closed-form size.
    pub fn revalidate(&self) -> Result<()> {
        let pgs = self.pgs()?;
        let gens = GeneratingSet::from_pgs(pgs.clone());
        let fresh = CatalogRecord::from_generating_set(&gens, self.size_at.clone());
        if &fresh != self {
            return Err(Error::Contract(format!("record for {} does not match its rebuild", pgs)));
        }
        for (&n, recorded) in &self.size_at {
            let (fam, _) = build_mlcif(n, self.k, &pgs)?;
            if fam.len().to_string() != *recorded {
                return Err(Error::Contract(format!(
                    "size at n = {n} is {}, record says {recorded}",
                    fam.len()
                )));
            }
            let b = match self.recognized_form {
                FamilyForm::Ahm(b) => Some(b),
                FamilyForm::HiltonMilner if self.k >= 3 => Some(self.k + 1),
                _ => None,
            };
            if let Some(b) = b {
                let formula: Count = size_ahm(n as i64, self.k as i64, b as i64)?;
                if formula.to_string() != *recorded {
                    return Err(Error::Contract(format!(
                        "closed-form size {formula} at n = {n} disagrees with {recorded}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Limits for catalog generation.
#[derive(Clone, Copy, Debug)]
pub struct CatalogBudget {
    pub max_k: u32,
    pub max_n: u32,
}

impl Default for CatalogBudget {
    fn default() -> Self {
        CatalogBudget { max_k: 5, max_n: 16 }
    }
}

/// Builds every record for `k` at each `n` in `ns`, in canonical PGS order.
///
/// Budget violations are reported before any record is produced.
pub fn build_catalog(k: u32, ns: &[u32], budget: CatalogBudget) -> Result<Vec<CatalogRecord>> {
    if let Some(&n) = ns.iter().find(|&&n| n > budget.max_n) {
        return Err(Error::Budget(format!("n = {n} exceeds max-n = {}", budget.max_n)));
    }
    if let Some(&n) = ns.iter().find(|&&n| n < 2 * k) {
        return Err(Error::input(format!("n = {n} < 2k = {}", 2 * k)));
    }
    let catalog = enumerate_pgs(k, EnumerationBudget { max_k: budget.max_k })?;
    catalog
        .into_iter()
        .map(|pgs| {
            let gens = GeneratingSet::from_pgs(pgs.clone());
            let mut sizes = BTreeMap::new();
            for &n in ns {
                let (fam, _) = build_mlcif(n, k, &pgs)?;
                sizes.insert(n, fam.len().to_string());
            }
            Ok(CatalogRecord::from_generating_set(&gens, sizes))
        })
        .collect()
}

/// JSON array with one compact record per line.
pub fn catalog_to_json(records: &[CatalogRecord]) -> Result<String> {
    if records.is_empty() {
        return Ok("[]\n".into());
    }
    let mut out = String::from("[\n");
    for (i, r) in records.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&serde_json::to_string(r)?);
        out.push_str(if i + 1 < records.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    Ok(out)
}

/// One compact JSON record per line.
pub fn catalog_to_ndjson(records: &[CatalogRecord]) -> Result<String> {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}

/// Reads either format.
pub fn catalog_from_str(text: &str) -> Result<Vec<CatalogRecord>> {
    if text.trim_start().starts_with('[') {
        return Ok(serde_json::from_str(text)?);
    }
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(Error::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::star_def;

    #[test]
    fn family_file_round_trip() {
        let fam = star_def(5, 2);
        let text = write_family(&fam);
        assert_eq!(text, "n=5 k=2\n1,2\n1,3\n1,4\n1,5\n");
        assert_eq!(read_family(&text).unwrap(), fam);
        let annotated = format!("{text}# pgs: {{}}\n");
        assert_eq!(read_family(&annotated).unwrap(), fam);
    }

    #[test]
    fn family_file_errors() {
        assert!(read_family("").is_err());
        assert!(read_family("n=4\n1,2\n").is_err());
        assert!(read_family("n=4 k=2\n1,2,3\n").is_err());
        assert!(read_family("n=4 k=2\n1,2\n1,2\n").is_err());
        assert!(read_family("n=4 k=2\n2,1\n").is_err());
    }

    #[test]
    fn catalog_k2() {
        let recs = build_catalog(2, &[4, 5], CatalogBudget::default()).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].recognized_form, FamilyForm::Star);
        assert_eq!(recs[0].size_at[&5], "4");
        assert_eq!(recs[1].recognized_form, FamilyForm::A23);
        for r in &recs {
            r.revalidate().unwrap();
        }
        let json = catalog_to_json(&recs).unwrap();
        assert_eq!(catalog_from_str(&json).unwrap(), recs);
        let nd = catalog_to_ndjson(&recs).unwrap();
        assert_eq!(nd.lines().count(), 2);
        assert_eq!(catalog_from_str(&nd).unwrap(), recs);
    }

    #[test]
    fn catalog_budget() {
        assert!(matches!(
            build_catalog(3, &[40], CatalogBudget::default()),
            Err(Error::Budget(_))
        ));
        assert!(build_catalog(3, &[5], CatalogBudget::default()).is_err());
    }

    #[test]
    fn tampered_record_fails_revalidation() {
        let mut recs = build_catalog(3, &[6], CatalogBudget::default()).unwrap();
        recs[1].size_at.insert(6, "999".into());
        assert!(recs[1].revalidate().is_err());
    }
}
