//! Equivariant connected sums on boundary forests.

use super::{ensure_valid, EdgeRef, ForestData, Tree};
use crate::error::{Error, Result};
use crate::lattice::{Slope, UnimodularMap, Vec2};

/// Applies `map` to every slope of `f`, so that its edges can be matched
/// literally against those of another forest.
pub fn align(f: &ForestData, map: &UnimodularMap) -> Result<ForestData> {
    ensure_valid(f)?;
    f.transformed(map)
}

fn same_circle(u: Vec2, v: Vec2) -> bool {
    u == v || u == [-v[0], -v[1]]
}

/// First edge whose endpoint slopes are `{u, v}` up to sign.
pub fn find_edge(f: &ForestData, u: Vec2, v: Vec2) -> Option<EdgeRef> {
    f.components.iter().enumerate().find_map(|(c, t)| {
        t.edges.iter().position(|&[a, b]| {
            let (x, y) = (t.slopes[a], t.slopes[b]);
            (same_circle(x, u) && same_circle(y, v)) || (same_circle(x, v) && same_circle(y, u))
        })
        .map(|e| EdgeRef::new(c, e))
    })
}

fn edge_at(f: &ForestData, at: EdgeRef) -> Result<(&Tree, [usize; 2])> {
    let tree = f
        .components
        .get(at.component)
        .ok_or_else(|| Error::InvalidSite(format!("no component {}", at.component)))?;
    let edge = tree.edges.get(at.edge).ok_or_else(|| {
        Error::InvalidSite(format!("component {} has no edge {}", at.component, at.edge))
    })?;
    Ok((tree, *edge))
}

/// Glues `f2` to `f1` at a fixed point: the edge `e1` of `f1` and the edge
/// `e2` of `f2` are identified, endpoints matched by equal slopes.
///
/// The merged tree takes the place of the host component of `f1`; the other
/// components of `f1` follow in order, then those of `f2`.
pub fn fixed_point_sum(
    f1: &ForestData,
    e1: EdgeRef,
    f2: &ForestData,
    e2: EdgeRef,
) -> Result<ForestData> {
    ensure_valid(f1)?;
    ensure_valid(f2)?;
    let (t1, [a1, b1]) = edge_at(f1, e1)?;
    let (t2, [a2, b2]) = edge_at(f2, e2)?;
    let class = |v: Vec2| Slope::from_vec(v);
    let (p, q) = (class(t1.slopes[a1])?, class(t1.slopes[b1])?);
    let (r, s) = (class(t2.slopes[a2])?, class(t2.slopes[b2])?);
    // where the endpoints of e2 land in the merged tree
    let (to_a2, to_b2) = if p == r && q == s {
        (a1, b1)
    } else if p == s && q == r {
        (b1, a1)
    } else {
        return Err(Error::SliceMismatch(format!(
            "edge {{{p}, {q}}} against edge {{{r}, {s}}}"
        )));
    };

    let mut merged = t1.clone();
    let mut index = vec![usize::MAX; t2.slopes.len()];
    index[a2] = to_a2;
    index[b2] = to_b2;
    for (i, &v) in t2.slopes.iter().enumerate() {
        if i != a2 && i != b2 {
            index[i] = merged.slopes.len();
            merged.slopes.push(v);
        }
    }
    for (j, &[x, y]) in t2.edges.iter().enumerate() {
        if j != e2.edge {
            merged.edges.push([index[x], index[y]]);
        }
    }

    let mut components = f1.components.clone();
    components[e1.component] = merged;
    components.extend(
        f2.components
            .iter()
            .enumerate()
            .filter(|&(c, _)| c != e2.component)
            .map(|(_, t)| t.clone()),
    );
    Ok(ForestData::new(components))
}

/// Connected sum along principal orbits: the disjoint union of the forests.
pub fn regular_orbit_sum(f1: &ForestData, f2: &ForestData) -> Result<ForestData> {
    if f1.vertex_count() == 0 || f2.vertex_count() == 0 {
        return Err(Error::EmptyForest);
    }
    ensure_valid(f1)?;
    ensure_valid(f2)?;
    let mut components = f1.components.clone();
    components.extend(f2.components.iter().cloned());
    Ok(ForestData::new(components))
}
