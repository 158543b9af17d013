//! T² Coxeter polar data on 5-manifolds: the boundary forest.
//!
//! Each component of the chamber boundary is a 2-sphere cut into faces by
//! closed geodesics of fixed points. A face becomes a vertex marked by the
//! slope of its circle isotropy group, and each fixed geodesic an edge
//! between the two faces it separates. All components share one coordinate
//! system on T², so a change of coordinates acts on every slope at once.

mod canonical;
mod invariants;
mod section;
mod surgery;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::lattice::{det2, is_primitive, Slope, UnimodularMap, Vec2};

pub use canonical::{canonicalize, equivalent, height};
pub use invariants::{
    diffeo_type, fundamental_group, h2_rank, invariants, is_spin, nonneg_curvature_admissible,
    polar_group, section_orientable, ForestInvariants, PolarGroupZ2,
};
pub use section::{section_descriptor, SectionDescriptor, SectionPiece};
pub use surgery::{align, find_edge, fixed_point_sum, regular_orbit_sum};

/// One component of the boundary forest. Slopes are stored as given; they
/// only become [`Slope`]s once the data validates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tree {
    pub slopes: Vec<Vec2>,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

impl Tree {
    pub fn isolated(v: Vec2) -> Self {
        Self {
            slopes: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn edge(u: Vec2, v: Vec2) -> Self {
        Self::path(&[u, v])
    }

    pub fn path(slopes: &[Vec2]) -> Self {
        Self {
            slopes: slopes.to_vec(),
            edges: (1..slopes.len()).map(|i| [i - 1, i]).collect(),
        }
    }

    pub fn star(center: Vec2, leaves: &[Vec2]) -> Self {
        let mut slopes = vec![center];
        slopes.extend_from_slice(leaves);
        Self {
            slopes,
            edges: (1..=leaves.len()).map(|i| [0, i]).collect(),
        }
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.slopes.len()];
        for &[a, b] in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Boundary forest of a T² action on a 5-manifold.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ForestData {
    pub components: Vec<Tree>,
}

impl ForestData {
    pub fn new(components: Vec<Tree>) -> Self {
        Self { components }
    }

    pub fn single(tree: Tree) -> Self {
        Self::new(vec![tree])
    }

    pub fn path(slopes: &[Vec2]) -> Self {
        Self::single(Tree::path(slopes))
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|t| t.slopes.len()).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.components.iter().map(|t| t.edges.len()).sum()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Applies a change of coordinates on T² to every slope.
    pub fn transformed(&self, m: &UnimodularMap) -> Result<ForestData> {
        let components = self
            .components
            .iter()
            .map(|t| {
                Ok(Tree {
                    slopes: t
                        .slopes
                        .iter()
                        .map(|&v| m.apply(v))
                        .collect::<Result<_>>()?,
                    edges: t.edges.clone(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(ForestData { components })
    }
}

/// Addresses an edge as `(component, index into that component's edge list)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeRef {
    pub component: usize,
    pub edge: usize,
}

impl EdgeRef {
    pub fn new(component: usize, edge: usize) -> Self {
        Self { component, edge }
    }
}

/// Checks every forest invariant and reports all failures.
pub fn validate(f: &ForestData) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if f.vertex_count() == 0 {
        out.push(Violation::new("forest", "forest has no vertices"));
    }
    for (c, tree) in f.components.iter().enumerate() {
        validate_tree(c, tree, &mut out);
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn validate_tree(c: usize, tree: &Tree, out: &mut Vec<Violation>) {
    let n = tree.slopes.len();
    if n == 0 {
        out.push(Violation::new(
            format!("component {c}"),
            "component has no vertices",
        ));
        return;
    }
    for (i, v) in tree.slopes.iter().enumerate() {
        if !is_primitive(v) {
            out.push(Violation::new(
                format!("component {c} vertex {i} {v:?}"),
                "not primitive",
            ));
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut seen = std::collections::HashSet::new();
    for (j, &[a, b]) in tree.edges.iter().enumerate() {
        let loc = format!("component {c} edge {j} ({a}-{b})");
        if a >= n || b >= n {
            out.push(Violation::new(loc, "edge endpoint out of range"));
            continue;
        }
        if a == b {
            out.push(Violation::new(loc, "self-loop"));
            continue;
        }
        if !seen.insert((a.min(b), a.max(b))) {
            out.push(Violation::new(loc, "duplicate edge"));
            continue;
        }
        let d = det2(tree.slopes[a], tree.slopes[b]);
        if d.abs() != 1 {
            out.push(Violation::new(loc.clone(), format!("determinant {}", d.abs())));
        }
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra == rb {
            out.push(Violation::new(loc, "edge closes a cycle"));
        } else {
            parent[ra] = rb;
        }
    }
    let r0 = root(&mut parent, 0);
    if (1..n).any(|i| root(&mut parent, i) != r0) {
        out.push(Violation::new(
            format!("component {c}"),
            "component is not connected",
        ));
    }
}

pub(crate) fn ensure_valid(f: &ForestData) -> Result<()> {
    validate(f).map_err(Error::InvalidData)
}

/// A validated component: canonical slopes plus adjacency lists.
pub(crate) struct Component {
    pub slopes: Vec<Slope>,
    pub adj: Vec<Vec<usize>>,
}

impl Component {
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

pub(crate) fn validated_components(f: &ForestData) -> Result<Vec<Component>> {
    ensure_valid(f)?;
    f.components
        .iter()
        .map(|t| {
            Ok(Component {
                slopes: t
                    .slopes
                    .iter()
                    .map(|&v| Slope::from_vec(v))
                    .collect::<Result<_>>()?,
                adj: t.adjacency(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn messages(f: &ForestData) -> Vec<String> {
        validate(f)
            .err()
            .unwrap_or_default()
            .into_iter()
            .map(|v| v.message)
            .collect()
    }

    #[test]
    fn basic_paths_validate() {
        for k in -5..=5 {
            assert!(validate(&ForestData::path(&[[1, 0], [0, 1], [1, k]])).is_ok());
        }
    }

    #[test]
    fn determinant_violation() {
        let f = ForestData::path(&[[1, 0], [1, 2]]);
        assert_eq!(messages(&f), vec!["determinant 2"]);
        let err = validate(&f).unwrap_err();
        assert!(err[0].location.contains("edge 0"));
    }

    #[test]
    fn primitivity_violation() {
        let f = ForestData::single(Tree::isolated([3, 6]));
        assert_eq!(messages(&f), vec!["not primitive"]);
    }

    #[test]
    fn structural_violations() {
        assert_eq!(messages(&ForestData::default()), vec!["forest has no vertices"]);
        let cyc = Tree {
            slopes: vec![[1, 0], [0, 1], [1, 1]],
            edges: vec![[0, 1], [1, 2], [2, 0]],
        };
        assert!(messages(&ForestData::single(cyc)).contains(&"edge closes a cycle".to_string()));
        let disc = Tree {
            slopes: vec![[1, 0], [0, 1]],
            edges: vec![],
        };
        assert_eq!(
            messages(&ForestData::single(disc)),
            vec!["component is not connected"]
        );
        let bad = Tree {
            slopes: vec![[1, 0]],
            edges: vec![[0, 3]],
        };
        assert!(messages(&ForestData::single(bad))
            .contains(&"edge endpoint out of range".to_string()));
    }

    #[test]
    fn json_shape() {
        let f: ForestData = serde_json::from_str(
            r#"{"components":[{"slopes":[[1,0],[0,1],[1,3]],"edges":[[0,1],[1,2]]}]}"#,
        )
        .unwrap();
        assert_eq!(f, ForestData::path(&[[1, 0], [0, 1], [1, 3]]));
        let iso: ForestData =
            serde_json::from_str(r#"{"components":[{"slopes":[[1,0]]}]}"#).unwrap();
        assert_eq!(iso.edge_count(), 0);
    }
}
