//! Exact, finite computations with simplicial categories and their nerves.
//!
//! Everything here works on truncated data: a simplicial set keeps its cells
//! up to a fixed dimension, a simplicial category keeps its homs up to a fixed
//! dimension, and every construction states how far its result is valid.
//!
//! The main entry points:
//!
//! * [`sset`]: truncated simplicial sets, maps, products, nerves of posets and
//!   the backtracking map enumerator.
//! * [`category`]: finite categories, simplicial categories with a wide
//!   subcategory, the cosimplicial objects `C[Δⁿ]` and `B[Δⁿ]`, and the
//!   comparison functors between them.
//! * [`bisset`]: bisimplicial sets, markings, diagonals.
//! * [`nerves`]: binerve, homotopy coherent nerve, classifying space,
//!   classification diagram, the comparison map and θ.
//! * [`verify`]: homology, π₀, horn filling, Segal and fiber checks, the
//!   uniqueness search and cross-route consistency checks.
//! * [`io`], [`examples`] and [`driver`]: JSON files, the example library and
//!   the command pipeline behind the `nervekit` binary.

pub mod bisset;
pub mod category;
pub mod driver;
pub mod error;
pub mod examples;
pub mod io;
pub mod nerves;
pub mod report;
pub mod sset;
pub mod verify;

pub use error::{Error, Result};
pub use report::{CheckReport, ValidationReport, Verdict};
