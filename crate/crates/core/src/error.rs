use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0} rejected")]
    SelfLoopRejected(usize),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("edge multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("cannot delete the last remaining vertex")]
    WouldEmptyGraph,
    #[error("identification needs at least two distinct vertices, got {0}")]
    NothingToIdentify(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("brute force needs {candidates} candidate edge subsets, budget is {budget}")]
    TooLargeForBruteForce { candidates: String, budget: u64 },
    #[error("vertex {0} is a cut vertex and cannot be a deletion pivot")]
    CutVertexPivot(usize),
    #[error("vertex {0} has no neighbours")]
    IsolatedPivot(usize),
    #[error("pivot neighbourhood has {size} vertices, limit is {limit}")]
    NeighborhoodTooLarge { size: usize, limit: usize },
    #[error("graph has {size} vertices, canonical labeling is limited to {limit}")]
    TooLargeToCanonicalize { size: usize, limit: usize },
    #[error("multipartite graph needs at least two parts, got {0}")]
    InvalidPartition(usize),
    #[error("index {index} out of range {min}..={max}")]
    InvalidIndex { index: usize, min: usize, max: usize },
    #[error("invalid family: {0}")]
    InvalidSpec(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("edge multiplicity {0} is too large to expand")]
    MultiplicityTooLarge(String),
}

impl Error {
    /// True for errors caused by a size or cost guard rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::TooLargeForBruteForce { .. }
                | Error::NeighborhoodTooLarge { .. }
                | Error::TooLargeToCanonicalize { .. }
                | Error::MultiplicityTooLarge(_)
        )
    }
}
