use serde::Serialize;

use super::{validated_components, Component, ForestData};
use crate::diffeo::DiffeoType5;
use crate::error::{Error, Result};
use crate::lattice::{smith_quotient, AbelianGroupShape, Slope};

/// Subgroup of Z₂² generated by the face reflections.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PolarGroupZ2 {
    /// Distinct nonzero residues mod 2, sorted.
    pub generators: Vec<[u8; 2]>,
    pub order: u32,
}

impl PolarGroupZ2 {
    pub fn generated_by(residues: impl IntoIterator<Item = [u8; 2]>) -> Self {
        let mut generators: Vec<[u8; 2]> = residues.into_iter().filter(|r| *r != [0, 0]).collect();
        generators.sort();
        generators.dedup();
        // two distinct nonzero vectors of F₂² are always a basis
        let rank = generators.len().min(2);
        Self {
            generators,
            order: 1 << rank,
        }
    }

    pub fn join(&self, other: &PolarGroupZ2) -> PolarGroupZ2 {
        Self::generated_by(self.generators.iter().chain(&other.generators).copied())
    }
}

fn all_slopes(comps: &[Component]) -> impl Iterator<Item = Slope> + '_ {
    comps.iter().flat_map(|c| c.slopes.iter().copied())
}

/// Group generated by the reflections `v mod 2` of all faces.
pub fn polar_group(f: &ForestData) -> Result<PolarGroupZ2> {
    let comps = validated_components(f)?;
    Ok(PolarGroupZ2::generated_by(all_slopes(&comps).map(Slope::mod2)))
}

pub(crate) fn orientable_residues(residues: &[[u8; 2]]) -> bool {
    // some functional on F₂² must take the value 1 on every face reflection
    [[0u8, 1], [1, 0], [1, 1]].iter().any(|phi| {
        residues
            .iter()
            .all(|r| (phi[0] * r[0] + phi[1] * r[1]) % 2 == 1)
    })
}

/// Whether every face reflection can reverse orientation at once, i.e. the
/// reflections satisfy no relation of odd length.
pub fn section_orientable(f: &ForestData) -> Result<bool> {
    let comps = validated_components(f)?;
    let residues: Vec<[u8; 2]> = all_slopes(&comps).map(Slope::mod2).collect();
    Ok(orientable_residues(&residues))
}

fn pi1_of(comps: &[Component]) -> AbelianGroupShape {
    if comps.iter().any(|c| c.edge_count() > 0) {
        AbelianGroupShape::trivial()
    } else {
        smith_quotient(&all_slopes(comps).collect::<Vec<_>>())
    }
}

/// Trivial once some component has a fixed geodesic; otherwise Z² modulo the
/// face circles.
pub fn fundamental_group(f: &ForestData) -> Result<AbelianGroupShape> {
    Ok(pi1_of(&validated_components(f)?))
}

fn require_simply_connected(comps: &[Component]) -> Result<()> {
    let pi1 = pi1_of(comps);
    if pi1.is_trivial() {
        Ok(())
    } else {
        Err(Error::NotSimplyConnected(pi1.to_string()))
    }
}

fn rank_of(comps: &[Component]) -> u64 {
    let e: usize = comps.iter().map(Component::edge_count).sum();
    // simply connected forces e >= 1 or at least two components
    (e + 2 * comps.len() - 3) as u64
}

/// Rank of `H₂(M; Z)`: `E + 2c - 3` for `E` edges and `c` components.
pub fn h2_rank(f: &ForestData) -> Result<u64> {
    let comps = validated_components(f)?;
    require_simply_connected(&comps)?;
    Ok(rank_of(&comps))
}

fn spin_of(comps: &[Component]) -> bool {
    comps.iter().all(|c| {
        c.adj.iter().all(|nbrs| {
            nbrs.windows(2)
                .all(|w| c.slopes[w[0]].mod2() == c.slopes[w[1]].mod2())
        })
    })
}

/// Spin iff the two ends of every length-2 path agree mod 2.
pub fn is_spin(f: &ForestData) -> Result<bool> {
    let comps = validated_components(f)?;
    require_simply_connected(&comps)?;
    Ok(spin_of(&comps))
}

pub fn diffeo_type(f: &ForestData) -> Result<DiffeoType5> {
    let comps = validated_components(f)?;
    let pi1 = pi1_of(&comps);
    if !pi1.is_trivial() {
        return Ok(DiffeoType5::NotSimplyConnected { pi1 });
    }
    Ok(DiffeoType5::from_rank(rank_of(&comps), spin_of(&comps)))
}

fn nonneg_of(comps: &[Component]) -> bool {
    let e: usize = comps.iter().map(Component::edge_count).sum();
    // a single edge, a single angle, or two complementary blocks
    matches!((comps.len(), e), (1, 1) | (1, 2) | (2, 0))
}

/// Whether the action is one of the basic ones that carry invariant
/// non-negative curvature: the linear action on S⁵, the actions on S³×ₖS²,
/// and the product action on S³×S² from two complementary blocks.
pub fn nonneg_curvature_admissible(f: &ForestData) -> Result<bool> {
    let comps = validated_components(f)?;
    require_simply_connected(&comps)?;
    Ok(nonneg_of(&comps))
}

/// Every invariant of a forest in one record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestInvariants {
    pub pi1: AbelianGroupShape,
    pub h2_rank: Option<u64>,
    pub spin: Option<bool>,
    pub diffeo: DiffeoType5,
    pub polar_group_order: u32,
    pub orientable_section: bool,
    pub nonneg_admissible: Option<bool>,
}

pub fn invariants(f: &ForestData) -> Result<ForestInvariants> {
    let comps = validated_components(f)?;
    let pi1 = pi1_of(&comps);
    let residues: Vec<[u8; 2]> = all_slopes(&comps).map(Slope::mod2).collect();
    let simply = pi1.is_trivial();
    let diffeo = if simply {
        DiffeoType5::from_rank(rank_of(&comps), spin_of(&comps))
    } else {
        DiffeoType5::NotSimplyConnected { pi1: pi1.clone() }
    };
    Ok(ForestInvariants {
        h2_rank: simply.then(|| rank_of(&comps)),
        spin: simply.then(|| spin_of(&comps)),
        polar_group_order: PolarGroupZ2::generated_by(residues.iter().copied()).order,
        orientable_section: orientable_residues(&residues),
        nonneg_admissible: simply.then(|| nonneg_of(&comps)),
        pi1,
        diffeo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest5::Tree;

    fn path(k: i64) -> ForestData {
        ForestData::path(&[[1, 0], [0, 1], [1, k]])
    }

    fn blocks(vs: &[[i64; 2]]) -> ForestData {
        ForestData::new(vs.iter().map(|&v| Tree::isolated(v)).collect())
    }

    #[test]
    fn polar_group_examples() {
        assert_eq!(polar_group(&path(3)).unwrap().order, 4);
        assert_eq!(polar_group(&blocks(&[[1, 0]])).unwrap().order, 2);
        assert_eq!(polar_group(&blocks(&[[1, 0], [1, 2]])).unwrap().order, 2);
    }

    #[test]
    fn orientability_follows_parity() {
        for k in -4..=4 {
            assert_eq!(section_orientable(&path(k)).unwrap(), k % 2 == 0);
        }
        assert!(section_orientable(&ForestData::path(&[[1, 0], [0, 1]])).unwrap());
    }

    #[test]
    fn fundamental_group_examples() {
        assert!(fundamental_group(&path(5)).unwrap().is_trivial());
        assert!(fundamental_group(&blocks(&[[1, 0], [0, 1]])).unwrap().is_trivial());
        assert_eq!(
            fundamental_group(&blocks(&[[1, 0], [1, 2]])).unwrap().to_string(),
            "Z2"
        );
        let mixed = ForestData::new(vec![Tree::edge([1, 0], [0, 1]), Tree::isolated([1, 2])]);
        assert!(fundamental_group(&mixed).unwrap().is_trivial());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(h2_rank(&ForestData::path(&[[1, 0], [0, 1]])).unwrap(), 0);
        assert_eq!(h2_rank(&path(7)).unwrap(), 1);
        assert_eq!(h2_rank(&blocks(&[[1, 0], [0, 1]])).unwrap(), 1);
        let tree = ForestData::path(&[[1, 0], [0, 1], [1, 1], [0, 1], [1, 0]]);
        assert_eq!(h2_rank(&tree).unwrap(), 3);
        assert!(matches!(
            h2_rank(&blocks(&[[1, 0]])),
            Err(Error::NotSimplyConnected(_))
        ));
    }

    #[test]
    fn spin_examples() {
        for k in 0..6 {
            assert_eq!(is_spin(&path(k)).unwrap(), k % 2 == 0);
        }
        assert!(is_spin(&blocks(&[[1, 0], [0, 1], [1, 1]])).unwrap());
        let star = ForestData::single(Tree::star([0, 1], &[[1, 0], [1, 1], [1, 2]]));
        assert!(!is_spin(&star).unwrap());
    }

    #[test]
    fn diffeo_examples() {
        assert_eq!(diffeo_type(&path(1)).unwrap().to_string(), "S3~xS2");
        assert_eq!(diffeo_type(&path(2)).unwrap().to_string(), "S3xS2");
        assert_eq!(
            diffeo_type(&ForestData::path(&[[1, 0], [0, 1]])).unwrap(),
            DiffeoType5::Sphere5
        );
        assert!(matches!(
            diffeo_type(&blocks(&[[1, 0], [1, 2]])).unwrap(),
            DiffeoType5::NotSimplyConnected { .. }
        ));
    }

    #[test]
    fn nonneg_examples() {
        assert!(nonneg_curvature_admissible(&path(4)).unwrap());
        assert!(!nonneg_curvature_admissible(&ForestData::path(&[[1, 0], [0, 1], [1, 1], [0, 1]])).unwrap());
        assert!(nonneg_curvature_admissible(&blocks(&[[1, 0], [0, 1]])).unwrap());
        let edge_and_block =
            ForestData::new(vec![Tree::edge([1, 0], [0, 1]), Tree::isolated([1, 0])]);
        assert!(!nonneg_curvature_admissible(&edge_and_block).unwrap());
    }
}
