use std::fmt;

use serde::{Serialize, Serializer};

use super::invariants::{orientable_residues, PolarGroupZ2};
use super::{canonicalize, validated_components, Component, ForestData};
use crate::error::Result;
use crate::lattice::Slope;

/// Prime summand of a section 3-manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SectionPiece {
    Sphere3,
    S1xS2,
    /// The non-orientable S²-bundle over S¹.
    NonOrientableBundle,
}

impl fmt::Display for SectionPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SectionPiece::Sphere3 => "S3",
            SectionPiece::S1xS2 => "S1xS2",
            SectionPiece::NonOrientableBundle => "S1~xS2",
        })
    }
}

impl Serialize for SectionPiece {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Section of the action as a connected sum of prime pieces followed by a
/// number of 0-surgeries along circles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SectionDescriptor {
    /// Sorted; `S3` appears only when it is the whole sum.
    pub summands: Vec<SectionPiece>,
    pub extra_zero_surgeries: u64,
    pub orientable: bool,
}

impl fmt::Display for SectionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sum: Vec<String> = self.summands.iter().map(ToString::to_string).collect();
        write!(f, "{}", sum.join("#"))?;
        if self.extra_zero_surgeries > 0 {
            write!(f, " + {} zero-surgeries", self.extra_zero_surgeries)?;
        }
        Ok(())
    }
}

struct Partial {
    pieces: Vec<SectionPiece>,
    surgeries: u64,
    group: PolarGroupZ2,
}

fn component_section(c: &Component) -> Partial {
    let edges = c.edge_count();
    let spin = c.adj.iter().all(|nbrs| {
        nbrs.windows(2)
            .all(|w| c.slopes[w[0]].mod2() == c.slopes[w[1]].mod2())
    });
    let pieces = if edges < 2 {
        vec![SectionPiece::Sphere3]
    } else {
        // a tree with E edges is a fixed point sum of E - 1 angles
        let handle = if spin {
            SectionPiece::S1xS2
        } else {
            SectionPiece::NonOrientableBundle
        };
        vec![handle; edges - 1]
    };
    Partial {
        pieces,
        surgeries: 0,
        group: PolarGroupZ2::generated_by(c.slopes.iter().map(|s| s.mod2())),
    }
}

fn repeat(pieces: &[SectionPiece], times: u32) -> impl Iterator<Item = SectionPiece> + '_ {
    (0..times).flat_map(move |_| pieces.iter().copied())
}

/// Section of the action, assembled along the canonical component order.
pub fn section_descriptor(f: &ForestData) -> Result<SectionDescriptor> {
    let comps = validated_components(&canonicalize(f)?)?;
    let mut parts = comps.iter().map(component_section);
    let mut acc = parts.next().expect("validated forests are nonempty");
    for part in parts {
        let group = acc.group.join(&part.group);
        let n1 = group.order / acc.group.order;
        let n2 = group.order / part.group.order;
        let m = u64::from(group.order + 1 - n1 - n2);
        let mut pieces: Vec<SectionPiece> = repeat(&acc.pieces, n1).collect();
        pieces.extend(repeat(&part.pieces, n2));
        acc = Partial {
            pieces,
            surgeries: u64::from(n1) * acc.surgeries + u64::from(n2) * part.surgeries + m,
            group,
        };
    }
    let residues: Vec<[u8; 2]> = comps
        .iter()
        .flat_map(|c| c.slopes.iter().map(|s: &Slope| s.mod2()))
        .collect();
    let orientable = orientable_residues(&residues);
    let nonorientable = !orientable || acc.pieces.contains(&SectionPiece::NonOrientableBundle);
    let mut summands: Vec<SectionPiece> = acc
        .pieces
        .into_iter()
        .filter(|p| *p != SectionPiece::Sphere3)
        .map(|p| match p {
            // S¹×S² # N ≅ N # N
            SectionPiece::S1xS2 if nonorientable => SectionPiece::NonOrientableBundle,
            p => p,
        })
        .collect();
    if summands.is_empty() {
        summands.push(SectionPiece::Sphere3);
    }
    summands.sort();
    Ok(SectionDescriptor {
        summands,
        extra_zero_surgeries: acc.surgeries,
        orientable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest5::Tree;

    #[test]
    fn angle_sections() {
        let even = section_descriptor(&ForestData::path(&[[1, 0], [0, 1], [1, 2]])).unwrap();
        assert_eq!(even.summands, vec![SectionPiece::S1xS2]);
        assert_eq!(even.extra_zero_surgeries, 0);
        assert!(even.orientable);
        let odd = section_descriptor(&ForestData::path(&[[1, 0], [0, 1], [1, 1]])).unwrap();
        assert_eq!(odd.summands, vec![SectionPiece::NonOrientableBundle]);
        assert!(!odd.orientable);
    }

    #[test]
    fn edge_section_is_sphere() {
        let s = section_descriptor(&ForestData::path(&[[1, 0], [0, 1]])).unwrap();
        assert_eq!(s.summands, vec![SectionPiece::Sphere3]);
        assert_eq!(s.extra_zero_surgeries, 0);
        assert!(s.orientable);
    }

    #[test]
    fn join_counts() {
        let f = ForestData::new(vec![Tree::edge([1, 0], [0, 1]), Tree::isolated([1, 0])]);
        let s = section_descriptor(&f).unwrap();
        assert_eq!(s.extra_zero_surgeries, 2);
        assert_eq!(s.summands, vec![SectionPiece::Sphere3]);
    }

    #[test]
    fn long_tree_handles() {
        let f = ForestData::path(&[[1, 0], [0, 1], [1, 2], [1, 1], [1, 0]]);
        let s = section_descriptor(&f).unwrap();
        assert_eq!(s.summands.len(), 3);
    }
}
