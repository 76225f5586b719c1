//! Rank, maximal generators, and recognition of the named families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::{build_mlcif, validate_pgs, GeneratingSet, Pgs};
use crate::poset::{maximal_elements, Order};
use crate::set::{UniformFamily, ZSet};

/// Shape tag of an MLCIF, read off its maximal generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyForm {
    Star,
    A23,
    /// `F([2,b]) ∪ F({1,b})` with `4 <= b <= k`.
    Ahm(u32),
    /// `F([2,k+1]) ∪ F({1,k+1})`.
    HiltonMilner,
    /// `F([a,b]) ∪ F({1} ∪ [b-a+2, b])` with `a >= 3`.
    TwoMaxgen(u32, u32),
    Other,
}

impl fmt::Display for FamilyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyForm::Star => f.write_str("star"),
            FamilyForm::A23 => f.write_str("a23"),
            FamilyForm::Ahm(b) => write!(f, "ahm({b})"),
            FamilyForm::HiltonMilner => f.write_str("hilton_milner"),
            FamilyForm::TwoMaxgen(a, b) => write!(f, "two_maxgen({a},{b})"),
            FamilyForm::Other => f.write_str("other"),
        }
    }
}

impl FromStr for FamilyForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown family form {s:?}"));
        let args = |inner: &str| -> Result<Vec<u32>> {
            inner.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| bad())).collect()
        };
        Ok(match s {
            "star" => FamilyForm::Star,
            "a23" => FamilyForm::A23,
            "hilton_milner" => FamilyForm::HiltonMilner,
            "other" => FamilyForm::Other,
            _ => {
                let (head, rest) = s.split_once('(').ok_or_else(bad)?;
                let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                match (head, args(inner)?.as_slice()) {
                    ("ahm", [b]) => FamilyForm::Ahm(*b),
                    ("two_maxgen", [a, b]) => FamilyForm::TwoMaxgen(*a, *b),
                    _ => return Err(bad()),
                }
            }
        })
    }
}

impl Serialize for FamilyForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FamilyForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyProfile {
    /// Minimum generator size over `pgs ∪ hgens`.
    pub rank: usize,
    pub max_gen_count: usize,
    pub max_gens: Vec<ZSet>,
    pub recognized_form: FamilyForm,
}

pub fn profile(gens: &GeneratingSet) -> FamilyProfile {
    let all = gens.all_generators();
    let rank = all.iter().map(ZSet::len).min().unwrap_or(0);
    let max_gens = maximal_elements(&all, Order::Preceq).expect("preceq accepts mixed sizes");
    let recognized_form = recognize(gens.pgs.k(), &gens.pgs, &max_gens);
    FamilyProfile { rank, max_gen_count: max_gens.len(), max_gens, recognized_form }
}

fn recognize(k: u32, pgs: &Pgs, max_gens: &[ZSet]) -> FamilyForm {
    if pgs.is_empty() {
        return FamilyForm::Star;
    }
    if pgs.members() == [ZSet::interval(2, 3)] {
        return FamilyForm::A23;
    }
    match two_maxgen_shape(max_gens) {
        Some((2, b)) if b == k + 1 => FamilyForm::HiltonMilner,
        Some((2, b)) => FamilyForm::Ahm(b),
        Some((a, b)) => FamilyForm::TwoMaxgen(a, b),
        None => FamilyForm::Other,
    }
}

/// `(a, b)` when the two sets are `[a, b]` and `{1} ∪ [b-a+2, b]` with `b > 2a - 1`.
fn two_maxgen_shape(max_gens: &[ZSet]) -> Option<(u32, u32)> {
    let [x, y] = max_gens else { return None };
    let (with1, without1) = if x.contains(1) { (x, y) } else { (y, x) };
    if without1.contains(1) || !with1.contains(1) {
        return None;
    }
    let (a, b) = (without1.first()?, without1.last()?);
    if without1 != &ZSet::interval(a, b) || b < 2 * a {
        return None;
    }
    let expected = ZSet::from([1]).union(&ZSet::interval(b - a + 2, b));
    (with1 == &expected).then_some((a, b))
}

/// The `(a, b)` form of an MLCIF with exactly two maximal generators.
///
/// `Ok(None)` means the shape did not match, which contradicts the
/// two-maximal-generator classification and is reported as such by callers.
pub fn classify_two_maxgen(gens: &GeneratingSet) -> Result<Option<(u32, u32)>> {
    let p = profile(gens);
    if p.max_gen_count != 2 {
        return Err(Error::Contract(format!(
            "expected exactly 2 maximal generators, found {}",
            p.max_gen_count
        )));
    }
    Ok(two_maxgen_shape(&p.max_gens))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedFamily {
    Star,
    A23,
    HiltonMilner,
    Ahm,
}

impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(NamedFamily::Star),
            "a23" => Ok(NamedFamily::A23),
            "hilton_milner" | "hm" => Ok(NamedFamily::HiltonMilner),
            "ahm" => Ok(NamedFamily::Ahm),
            _ => Err(Error::Parse(format!("unknown family name {s:?}"))),
        }
    }
}

/// The canonical PGS of a named family.
pub fn named_pgs(name: NamedFamily, k: u32, b: Option<u32>) -> Result<Pgs> {
    let members = match name {
        NamedFamily::Star => vec![],
        NamedFamily::A23 => vec![ZSet::interval(2, 3)],
        NamedFamily::HiltonMilner => vec![ZSet::interval(2, k + 1)],
        NamedFamily::Ahm => {
            let b = b.ok_or_else(|| Error::input("ahm needs b"))?;
            if !(4..=k + 1).contains(&b) {
                return Err(Error::input(format!("b = {b} outside [4, k + 1 = {}]", k + 1)));
            }
            vec![ZSet::interval(2, b)]
        }
    };
    validate_pgs(k, &members)
}

pub fn make_named(name: NamedFamily, n: u32, k: u32, b: Option<u32>) -> Result<(UniformFamily, GeneratingSet)> {
    build_mlcif(n, k, &named_pgs(name, k, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z<const N: usize>(a: [u32; N]) -> ZSet {
        ZSet::from(a)
    }

    #[test]
    fn profiles_of_named_families() {
        let (_, g) = make_named(NamedFamily::Star, 6, 3, None).unwrap();
        let p = profile(&g);
        assert_eq!((p.rank, p.max_gen_count, p.recognized_form), (1, 1, FamilyForm::Star));
        assert_eq!(p.max_gens, vec![z([1])]);

        let (_, g) = make_named(NamedFamily::A23, 6, 3, None).unwrap();
        let p = profile(&g);
        assert_eq!((p.rank, p.max_gen_count, p.recognized_form), (2, 1, FamilyForm::A23));
        assert_eq!(p.max_gens, vec![z([2, 3])]);

        for b in 4..=5 {
            let (_, g) = make_named(NamedFamily::Ahm, 10, 5, Some(b)).unwrap();
            let p = profile(&g);
            assert_eq!((p.rank, p.max_gen_count), (2, 2));
            assert_eq!(p.max_gens, vec![z([1, b]), ZSet::interval(2, b)]);
            assert_eq!(p.recognized_form, FamilyForm::Ahm(b));
        }
        let (_, g) = make_named(NamedFamily::Ahm, 10, 5, Some(6)).unwrap();
        assert_eq!(profile(&g).recognized_form, FamilyForm::HiltonMilner);
    }

    #[test]
    fn two_maxgen_examples() {
        let (_, g) = make_named(NamedFamily::Ahm, 10, 5, Some(5)).unwrap();
        assert_eq!(classify_two_maxgen(&g).unwrap(), Some((2, 5)));
        // [3, 5] has b = 2a - 1 and collapses to one maximal generator
        let g = GeneratingSet::from_pgs(validate_pgs(3, &[ZSet::interval(3, 5)]).unwrap());
        assert_eq!(profile(&g).max_gen_count, 1);
        assert!(matches!(classify_two_maxgen(&g), Err(Error::Contract(_))));
        // [3, 6] at k = 4
        let g = GeneratingSet::from_pgs(validate_pgs(4, &[ZSet::interval(3, 6)]).unwrap());
        assert_eq!(classify_two_maxgen(&g).unwrap(), Some((3, 6)));
        assert_eq!(profile(&g).recognized_form, FamilyForm::TwoMaxgen(3, 6));
    }

    #[test]
    fn form_tags_round_trip() {
        for f in [
            FamilyForm::Star,
            FamilyForm::A23,
            FamilyForm::Ahm(4),
            FamilyForm::HiltonMilner,
            FamilyForm::TwoMaxgen(3, 6),
            FamilyForm::Other,
        ] {
            assert_eq!(f.to_string().parse::<FamilyForm>().unwrap(), f);
        }
        assert!("ahm(x)".parse::<FamilyForm>().is_err());
        assert!("blob".parse::<FamilyForm>().is_err());
    }

    #[test]
    fn bad_b_rejected() {
        assert!(make_named(NamedFamily::Ahm, 10, 4, Some(3)).is_err());
        assert!(make_named(NamedFamily::Ahm, 10, 4, Some(6)).is_err());
        assert!(make_named(NamedFamily::Ahm, 10, 4, None).is_err());
    }
}
