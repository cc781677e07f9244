use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),

    #[error("{what} requires order at least {min}, got {n}")]
    OrderTooSmall { what: &'static str, min: usize, n: usize },

    #[error("landmark list is empty")]
    EmptyLandmarks,

    #[error("vertex {0} is not a member of the dominating set")]
    NotMember(usize),

    #[error("set is not dominating: vertex {0} has no neighbor in it")]
    NotDominating(usize),

    #[error("dominating set of size {given} is not minimum (domination number is {gamma})")]
    NotMinimum { given: usize, gamma: usize },

    #[error("dominating set contains the false twin pair ({0}, {1})")]
    HasFalseTwins(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no connected sample after {0} attempts; try a larger edge probability")]
    SamplingFailed(u32),

    #[error("search budget exhausted after {examined} subsets (best known upper bound {upper_bound})")]
    Timeout { examined: u64, upper_bound: usize },

    /// An internal consistency check failed. These correspond to proven
    /// statements and must never fire.
    #[error("anomaly: {0}")]
    Anomaly(String),
}

impl Error {
    pub fn is_timeout(&self) -> bool {
        matches!(self, Error::Timeout { .. })
    }

    pub fn is_anomaly(&self) -> bool {
        matches!(self, Error::Anomaly(_))
    }
}
