//! Exact solvers for the NP-hard parameters.
//!
//! Each parameter has a pruned search and a flat enumeration. Below the
//! cross-check threshold both run and must agree on value and witness;
//! disagreement surfaces as [`Error::Inconsistent`].

mod biclique;
pub(crate) mod cover;
mod domination;
mod partition;
mod roman;

pub use biclique::{biclique_partition, maximal_bicliques, BicliqueMode};
pub use domination::{
    domination, domination_number, is_os_dominating, os_domination, total_domination_number, DominationVariant,
    OsMethod,
};
pub use partition::{chromatic_number, vertex_disjoint_triangles, weighted_clique_partition};
pub use roman::{roman_domination, theta, RomanMethod};

use crate::bitset::ElemSet;
use crate::error::Error;

/// Default node budget for a single solve.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Instances with at most this many vertices or elements are cross-checked.
pub const DEFAULT_CROSS_CHECK: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: u64,
    pub cross_check_threshold: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
            cross_check_threshold: DEFAULT_CROSS_CHECK,
        }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: u64) -> Self {
        SolveOptions {
            budget,
            ..Default::default()
        }
    }

    /// No cross-checking; used when the caller runs its own oracle.
    pub fn unchecked() -> Self {
        SolveOptions {
            cross_check_threshold: 0,
            ..Default::default()
        }
    }

    pub(crate) fn cross_check(&self, size: usize) -> bool {
        size <= self.cross_check_threshold
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BranchAndBound,
    Enumeration,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BranchAndBound => "branch_and_bound",
            Method::Enumeration => "enumeration",
        }
    }
}

/// Certificate attached to a [`SolveResult`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A vertex or element set.
    Set(ElemSet),
    /// A function `V -> {0, 1, 2}`.
    Roman(Vec<u8>),
    /// Disjoint or covering blocks: cliques, triangles or bicliques.
    Blocks(Vec<ElemSet>),
    /// Colour class of every vertex, colours numbered from 0.
    Coloring(Vec<usize>),
}

impl Witness {
    pub fn as_set(&self) -> Option<ElemSet> {
        match self {
            Witness::Set(s) => Some(*s),
            _ => None,
        }
    }

    pub fn as_blocks(&self) -> Option<&[ElemSet]> {
        match self {
            Witness::Blocks(b) => Some(b),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Witness,
    pub method: Method,
}

impl SolveResult {
    pub(crate) fn set(value: usize, s: ElemSet, method: Method) -> Self {
        SolveResult {
            value,
            witness: Witness::Set(s),
            method,
        }
    }
}

pub(crate) fn mismatch<T: std::fmt::Debug>(what: &str, a: T, b: T) -> Error {
    Error::Inconsistent(format!("{what}: search gave {a:?}, enumeration gave {b:?}"))
}
