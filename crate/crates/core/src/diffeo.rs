//! Closed 5-manifolds that arise from abelian polar actions.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::lattice::AbelianGroupShape;

/// `S⁵`, `#_α S³×̃S² #_n S³×S²` with `α ∈ {0, 1}`, or a non-simply-connected manifold.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiffeoType5 {
    Sphere5,
    ConnectedSum { twisted: u8, trivial: u64 },
    NotSimplyConnected { pi1: AbelianGroupShape },
}

impl DiffeoType5 {
    /// Simply-connected type from the rank of `H₂` and the spin condition.
    pub fn from_rank(rank: u64, spin: bool) -> Self {
        if rank == 0 {
            return DiffeoType5::Sphere5;
        }
        let twisted = u8::from(!spin);
        DiffeoType5::ConnectedSum {
            twisted,
            trivial: rank - u64::from(twisted),
        }
    }

    pub fn h2_rank(&self) -> Option<u64> {
        match *self {
            DiffeoType5::Sphere5 => Some(0),
            DiffeoType5::ConnectedSum { twisted, trivial } => Some(u64::from(twisted) + trivial),
            DiffeoType5::NotSimplyConnected { .. } => None,
        }
    }

    pub fn is_spin(&self) -> Option<bool> {
        match *self {
            DiffeoType5::Sphere5 => Some(true),
            DiffeoType5::ConnectedSum { twisted, .. } => Some(twisted == 0),
            DiffeoType5::NotSimplyConnected { .. } => None,
        }
    }
}

impl fmt::Display for DiffeoType5 {
    /// `S5`, `S3xS2`, `S3~xS2`, and connected sums joined with `#`,
    /// e.g. `S3~xS2#S3xS2#S3xS2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DiffeoType5::Sphere5 => f.write_str("S5"),
            DiffeoType5::ConnectedSum { twisted, trivial } => {
                let mut parts = Vec::new();
                if twisted == 1 {
                    parts.push("S3~xS2");
                }
                parts.extend(std::iter::repeat_n("S3xS2", trivial as usize));
                f.write_str(&parts.join("#"))
            }
            DiffeoType5::NotSimplyConnected { ref pi1 } => write!(f, "not simply connected (pi1={pi1})"),
        }
    }
}

impl Serialize for DiffeoType5 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(DiffeoType5::from_rank(0, false).to_string(), "S5");
        assert_eq!(DiffeoType5::from_rank(1, true).to_string(), "S3xS2");
        assert_eq!(DiffeoType5::from_rank(1, false).to_string(), "S3~xS2");
        assert_eq!(
            DiffeoType5::from_rank(3, false).to_string(),
            "S3~xS2#S3xS2#S3xS2"
        );
        assert_eq!(DiffeoType5::from_rank(2, true).h2_rank(), Some(2));
    }
}
