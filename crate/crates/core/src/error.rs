use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    // chains
    #[error("operand of {0} must be a non-empty chain")]
    EmptyChain(&'static str),
    #[error("chain {0} is not admissible (needs at least one entry, all entries >= 2)")]
    NotAdmissible(String),
    #[error("inductance {0} is not in the open interval (0,1)")]
    InductanceOutOfRange(String),
    #[error("star power needs an exponent >= 1")]
    ZeroStarPower,
    #[error("chain entry {0} does not fit in a machine integer")]
    EntryOverflow(String),

    // dual graphs
    #[error("vertex {0} does not exist")]
    UnknownVertex(VertexId),
    #[error("vertex {0} appears twice")]
    DuplicateVertex(VertexId),
    #[error("self-edge at vertex {0}")]
    SelfEdge(VertexId),
    #[error("edge {0}-{1} appears twice")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge set contains a cycle through {0}-{1}")]
    Cycle(VertexId, VertexId),
    #[error("vertex {id} has weight {weight}, only (-1)-curves can be blown down")]
    NotMinusOne { id: VertexId, weight: i64 },
    #[error("vertex {id} meets {degree} other components, blow-down needs degree <= 2")]
    DegreeTooHigh { id: VertexId, degree: usize },
    #[error("blowing down vertex {0} would join two adjacent neighbours into a cycle")]
    WouldCreateCycle(VertexId),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("contraction stuck: {remaining} curve(s) left and none is a contractible (-1)-curve")]
    Stuck { remaining: usize },
    #[error("chain does not contract to [{target}] on the first vertex of A: {reason}")]
    NotContractibleToTarget { target: i64, reason: String },

    // cusps
    #[error("invalid characteristic sequence {seq}: {reason}")]
    InvalidCharacteristic { seq: String, reason: String },
    #[error("multiplicity sequence {seq} is not realizable: {reason}")]
    NotRealizable { seq: String, reason: String },
    #[error("multiplicity sequence {0} has more than one realizable completion")]
    AmbiguousCompletion(String),
    #[error("invalid Puiseux pairs {pairs}: {reason}")]
    InvalidPuiseux { pairs: String, reason: String },

    // classification
    #[error("family {family} needs a >= 1 and b >= {min_b}, got a={a}, b={b}")]
    FamilyParams {
        family: u8,
        a: u64,
        b: u64,
        min_b: u64,
    },
    #[error("unknown family {0}, expected 1..=4")]
    UnknownFamily(u8),
    #[error("invalid numerical data: {0}")]
    InvalidNumericalData(String),
    #[error("maximum degree {requested} exceeds the scan bound {bound}")]
    DegreeBoundExceeded { requested: u64, bound: u64 },

    /// Two independent computations of the same object disagree.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
