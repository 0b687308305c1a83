//! Builds the coset poset and related simplicial models of a small finite
//! group, computes their exact integer homology, and runs certified
//! simple-connectivity checks.
//!
//! The crate is organized around five layers:
//!
//! * [`grp`] — Cayley-table groups and element-set primitives,
//! * [`lattice`] — full subgroup lattice enumeration, Möbius/zeta data,
//!   chief series and solvability,
//! * [`topo`] — posets (coset poset, subgroup poset, products) and
//!   simplicial complexes (order complex, minimal cover, cross-cut complex,
//!   nerve, barycentric subdivision) plus certified prunings,
//! * [`homology`] — boundary matrices, integer Smith normal form, reduced
//!   Betti numbers/torsion and Euler characteristics,
//! * [`pi1`] — edge-path presentations, Tietze simplification and the
//!   witness pipelines that certify simple connectivity.
//!
//! Group recipes, job specs and machine-readable reports live in [`recipe`],
//! [`job`] and [`report`]; the acceptance table used by `coset-topo verify`
//! is in [`verify`].

pub mod bits;
pub mod grp;
pub mod homology;
pub mod job;
pub mod lattice;
pub mod pi1;
pub mod recipe;
pub mod report;
pub mod topo;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("recipe error: {0}")]
    Recipe(String),
    #[error("size guard exceeded: {0}")]
    Guard(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("prune refused at {element}: {reason}")]
    PruneRefused { element: String, reason: String },
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Resource limits shared by the long-running pipelines.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct Budgets {
    /// Global cap on the number of simplices any single complex may hold.
    pub simplex_cap: usize,
    /// Elementary-step budget for Tietze simplification.
    pub tietze_steps: u64,
    /// Thread count for the pipelines that parallelize internally.
    pub threads: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            simplex_cap: 50_000_000,
            tietze_steps: 1_000_000,
            threads: default_threads(),
        }
    }
}

/// Default thread count: `COSET_TOPO_THREADS` if set, else all cores.
pub fn default_threads() -> usize {
    std::env::var("COSET_TOPO_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}
