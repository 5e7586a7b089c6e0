//! Permutation groups acting on set relations.
//!
//! The crate decides questions of the form "which permutation groups are the
//! full symmetry group of a family of subsets of the domain", with the
//! machinery needed to certify answers: stabilizer chains, backtrack searches
//! for set and relation stabilizers, subset orbit censuses, regular sets and
//! distinguishing numbers, composite group constructions, and a classifier
//! for simple groups that reports whether the group is the symmetry group of
//! a (two-valued) set relation together with the rule that decided it.
//!
//! Points are written `1..=n` in all notation and file formats; internally
//! they are `0`-based. Permutations compose left to right: `(p * q)` means
//! "apply `p`, then `q`".
//!
//! The crate is `no_std` (with `alloc`); IO and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bgr;
pub mod builders;
pub mod catalog;
pub mod census;
pub mod group;
pub mod perm;
pub mod relation;
pub mod search;

pub use catalog::catalog_group;
pub use group::PermGroup;
pub use perm::{Perm, PointSet};
pub use relation::UnorderedRelation;

use alloc::string::String;
use core::fmt;

/// Errors shared across the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Cycle notation could not be parsed.
    Parse(String),
    /// A point lies outside `1..=degree`.
    PointOutOfRange { point: usize, degree: usize },
    /// Two objects that must share a degree do not.
    DegreeMismatch { left: usize, right: usize },
    /// The degree exceeds what the operation supports.
    DegreeTooLarge { degree: usize, max: usize },
    /// A point occurs twice in a cycle or set literal.
    RepeatedPoint { point: usize },
    /// An enumeration would exceed the documented budget.
    BudgetExceeded { what: &'static str },
    /// Arithmetic overflow in an order computation.
    OrderOverflow,
    /// A subgroup-valued argument is not contained in the ambient group.
    NotSubgroup,
    /// A subgroup-valued argument is not normal where normality is required.
    NotNormal,
    /// Generator images do not extend to a group isomorphism.
    NotIsomorphism,
    /// The input group is not transitive where transitivity is required.
    NotTransitive,
    /// The name is not in the catalog key list.
    UnknownCatalogKey,
    /// A precondition specific to one operation failed.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::PointOutOfRange { point, degree } => {
                write!(f, "point {point} out of range 1..={degree}")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::DegreeTooLarge { degree, max } => {
                write!(f, "degree {degree} exceeds supported maximum {max}")
            }
            Error::RepeatedPoint { point } => write!(f, "point {point} repeated"),
            Error::BudgetExceeded { what } => write!(f, "budget exceeded: {what}"),
            Error::OrderOverflow => write!(f, "group order overflows u128"),
            Error::NotSubgroup => write!(f, "not a subgroup of the ambient group"),
            Error::NotNormal => write!(f, "subgroup is not normal"),
            Error::NotIsomorphism => write!(f, "generator images do not define an isomorphism"),
            Error::NotTransitive => write!(f, "group is not transitive"),
            Error::UnknownCatalogKey => write!(f, "unknown catalog key"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
