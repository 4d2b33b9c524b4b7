//! Exact order-sensitive domination numbers of finite posets, the
//! graph parameters they are tied to, and the constructions that relate them.
//!
//! Everything runs on ground sets of at most [`bitset::MAX_ELEMENTS`]
//! points. Exponential solvers take a node budget and fail with
//! [`Error::BudgetExceeded`] rather than run unbounded.

pub mod bitset;
pub mod error;
pub mod figures;
pub mod graph;
pub mod hardness;
pub mod helly;
pub mod io;
pub mod poset;
pub mod solvers;
pub mod transforms;
pub mod verify;

pub use bitset::ElemSet;
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph};
pub use helly::SetFamily;
pub use poset::Poset;
