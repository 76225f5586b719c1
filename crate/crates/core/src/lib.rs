//! Maximal left-compressed intersecting families of `k`-sets.
//!
//! Families are built from a principal generating set (PGS): a strongly
//! intersecting antichain of 1-free generators. [`build_mlcif`] turns a PGS
//! into its family, [`recover_pgs`] inverts it, and [`enumerate_pgs`] lists
//! every PGS for a given `k`. The [`counting`] module holds exact closed
//! forms, generic over the integer type; [`Count`] is the default.

pub mod catalog;
pub mod classify;
pub mod counting;
pub mod error;
pub mod family;
pub mod oracle;
pub mod poset;
pub mod selftest;
pub mod set;
pub mod strong;

pub use catalog::{build_catalog, read_family, write_family, CatalogBudget, CatalogRecord};
pub use classify::{classify_two_maxgen, make_named, profile, FamilyForm, FamilyProfile, NamedFamily};
pub use counting::{compare_report, CountReport, ExactInt};
pub use error::{Error, Result};
pub use family::{
    build_mlcif, check_mlcif, enumerate_pgs, extend_family, hset_generators, infer_k, is_mlcif, recover_pgs, validate_pgs,
    EnumerationBudget, GeneratingSet, MlcifDiagnostic, Pgs, PgsViolation,
};
pub use poset::{compression_closure, is_left_compressed, leq_uniform, mu, preceq, wedge};
pub use set::{parse_set_list, UniformFamily, ZSet};
pub use strong::{disjoint_witness, is_si_family, strongly_intersecting};

/// Exact integer used for counts.
pub type Count = num_bigint::BigInt;
/// Exact rational used for count ratios.
pub type CountRatio = num_rational::BigRational;
/// Count report over [`Count`].
pub type Report = CountReport<Count>;
