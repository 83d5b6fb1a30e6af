//! Exact spanning tree counts for undirected multigraphs.
//!
//! The central routine, [`deletion::count_by_deletion`], removes one vertex
//! at a time and expands over subsets of its neighbourhood. Closed forms for
//! cones over complete graphs and for several multiplicity-weighted bipartite
//! families live in [`families`]. Two independent oracles in [`oracles`]
//! (the Matrix-Tree determinant and exhaustive subset enumeration) check both.
//!
//! With the default `parallel` feature the recursion, the brute-force
//! enumeration and grid verification run on rayon; every entry point also
//! takes a flag to stay on the calling thread.

pub mod deletion;
pub mod error;
pub mod families;
pub mod io;
pub mod multigraph;
pub mod oracles;
pub mod par;
pub mod verify;

use std::fmt;
use std::str::FromStr;

pub use error::{Error, Result};
pub use multigraph::{ExpansionTerm, GraphSummary, MultiGraph, VertexId};

/// Arbitrary-precision spanning tree count.
pub type BigCount = num_bigint::BigUint;

/// A way of obtaining a spanning tree count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Formula,
    /// The family's binomial recurrence.
    Recurrence,
    Deletion,
    MatrixTree,
    BruteForce,
    /// Uniform-multiplicity half cone closed form.
    UniformFormula,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Recurrence => "recurrence",
            Method::Deletion => "deletion",
            Method::MatrixTree => "matrix-tree",
            Method::BruteForce => "brute-force",
            Method::UniformFormula => "uniform-formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Method::Formula,
            Method::Recurrence,
            Method::Deletion,
            Method::MatrixTree,
            Method::BruteForce,
            Method::UniformFormula,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| Error::InvalidSpec(format!("unknown method `{s}`")))
    }
}
