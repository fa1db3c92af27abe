use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A single broken planar-order axiom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// `from` strictly reaches `to`, yet `to` is placed before `from`.
    P1 { from: EdgeId, to: EdgeId },
    /// `first ≺ middle ≺ last` and `first → last`, but neither
    /// `first → middle` nor `middle → last`.
    P2 {
        first: EdgeId,
        middle: EdgeId,
        last: EdgeId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::P1 { from, to } => {
                write!(f, "P1 violation: {from} -> {to} but {to} is ordered before {from}")
            }
            Violation::P2 {
                first,
                middle,
                last,
            } => write!(
                f,
                "P2 violation: ({first}, {middle}, {last}): {first} -> {last} but {first} -/-> {middle} and {middle} -/-> {last}"
            ),
        }
    }
}

/// Why a polarization/anchor pair fails to determine a planar order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SynthesisDefect {
    /// Two edges whose relative position cannot be decided consistently.
    Inconsistent { a: EdgeId, b: EdgeId },
    /// The pairwise comparisons contain a directed 3-cycle.
    Cycle { a: EdgeId, b: EdgeId, c: EdgeId },
    /// The candidate order breaks a planar-order axiom.
    Axiom(Violation),
    /// The candidate order disagrees with a prescribed incidence or anchor order.
    Disagrees { a: EdgeId, b: EdgeId, at: String },
}

impl fmt::Display for SynthesisDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SynthesisDefect::Inconsistent { a, b } => {
                write!(f, "edges {a} and {b} cannot be ordered consistently")
            }
            SynthesisDefect::Cycle { a, b, c } => {
                write!(f, "comparison cycle {a} < {b} < {c} < {a}")
            }
            SynthesisDefect::Axiom(v) => write!(f, "{v}"),
            SynthesisDefect::Disagrees { a, b, at } => {
                write!(f, "order of {a} and {b} contradicts {at}")
            }
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty identifier")]
    EmptyId,
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("graph contains a directed cycle through {}", join(.0))]
    CycleDetected(Vec<VertexId>),
    #[error("boundary vertex {vertex} has degree {degree}, expected 1")]
    BadBoundaryDegree { vertex: VertexId, degree: usize },
    #[error("isolated vertex {0}")]
    IsolatedVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex id {0} is reserved")]
    ReservedVertexName(VertexId),
    #[error("not a PERT graph: {0}")]
    NotPert(String),
    #[error("not a permutation of the edge set: {0}")]
    NotAPermutation(String),
    #[error("invalid planar order: {}", join(.0))]
    InvalidPlanarOrder(Vec<Violation>),
    #[error("relation is not a conjugate order: {0}")]
    NotConjugate(String),
    #[error("arity mismatch: {0} outputs against {1} inputs")]
    ArityMismatch(usize, usize),
    #[error("graph has no internal vertex")]
    NoInternalVertex,
    #[error("{0} is not a maximal internal vertex")]
    NotMaximal(VertexId),
    #[error("invalid polarization or anchor: {0}")]
    InvalidPolarization(String),
    #[error("no consistent planar order: {}", join(.0))]
    NoConsistentOrder(Vec<SynthesisDefect>),
    #[error("{edges} edges exceed the enumeration bound {bound}")]
    TooLarge { edges: usize, bound: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal defect: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
