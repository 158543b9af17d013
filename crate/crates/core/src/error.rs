use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// A single failed data invariant, located at a vertex, edge, side or component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

impl Violation {
    pub fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            location: location.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("slopes {0:?} and {1:?} do not form a lattice basis (determinant {2})")]
    NotAdjacent([i64; 2], [i64; 2], i128),
    #[error("vector {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("vector {v:?} lies in the circle subgroup spanned by {w:?}")]
    ParallelInput { w: [i64; 3], v: [i64; 3] },
    #[error("image of {v:?} modulo {w:?} is not primitive; the circle does not embed in the quotient")]
    NonPrimitiveImage { w: [i64; 3], v: [i64; 3] },
    #[error("complement {0:?} does not complete the circle to a basis of Z^3")]
    BadComplement([[i64; 3]; 2]),
    #[error("invalid data: {}", join_violations(.0))]
    InvalidData(Vec<Violation>),
    #[error("slice representations differ at the gluing sites: {0}")]
    SliceMismatch(String),
    #[error("invalid surgery site: {0}")]
    InvalidSite(String),
    #[error("forest has no vertices")]
    EmptyForest,
    #[error("manifold is not simply connected (pi1 = {0})")]
    NotSimplyConnected(String),
    #[error("invalid chamber: {0}")]
    InvalidChamber(String),
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
}

fn join_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
