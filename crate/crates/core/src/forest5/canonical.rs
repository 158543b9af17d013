//! Canonical representatives of boundary forests.
//!
//! Two forests are equivalent when they differ by a relabeling of vertices,
//! a change of coordinates in GL(2, Z) applied to all slopes at once, and the
//! sign of each individual slope. The canonical form is the minimum, over a
//! finite set of candidate coordinate changes, of a labeled AHU encoding of
//! the forest. The candidate set is built from the data itself (oriented
//! edges, or non-parallel pairs when there are no edges) so it moves along
//! with the forest under the group and the minimum is an orbit invariant.

use std::collections::HashSet;

use super::{validated_components, Component, ForestData, Tree};
use crate::error::Result;
use crate::lattice::{det2, hermite_pair_map, map_to_first_axis, Slope, UnimodularMap};

/// Sort key of a sign-normalized slope: `(a, |b|, b < 0)`, so `(1, k)` sorts
/// before `(1, -k)`.
type Key = (i64, u64, bool);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Token {
    key: Key,
    children: usize,
    slope: [i64; 2],
}

fn key(s: Slope) -> Key {
    let [a, b] = s.entries();
    (a, b.unsigned_abs(), b < 0)
}

type Code = Vec<Token>;

fn rooted_code(slopes: &[Slope], adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> Code {
    let mut children: Vec<Code> = adj[v]
        .iter()
        .filter(|&&u| Some(u) != parent)
        .map(|&u| rooted_code(slopes, adj, u, Some(v)))
        .collect();
    children.sort();
    let mut code = vec![Token {
        key: key(slopes[v]),
        children: children.len(),
        slope: slopes[v].entries(),
    }];
    for c in children {
        code.extend(c);
    }
    code
}

/// One or two centroids of a tree.
fn centroids(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    (0..n)
        .filter(|&v| {
            let largest_child = adj[v]
                .iter()
                .filter(|&&u| parent[u] == v)
                .map(|&u| size[u])
                .max()
                .unwrap_or(0);
            largest_child.max(n - size[v]) * 2 <= n
        })
        .collect()
}

fn component_code(slopes: &[Slope], adj: &[Vec<usize>]) -> Code {
    centroids(adj)
        .into_iter()
        .map(|r| rooted_code(slopes, adj, r, None))
        .min()
        .expect("a nonempty tree has a centroid")
}

fn candidate_maps(comps: &[Component]) -> Result<Vec<UnimodularMap>> {
    let signed = |s: Slope| {
        let [a, b] = s.entries();
        [[a, b], [-a, -b]]
    };
    let mut pairs = Vec::new();
    let has_edges = comps.iter().any(|c| c.edge_count() > 0);
    if has_edges {
        for c in comps {
            for (v, nbrs) in c.adj.iter().enumerate() {
                for &u in nbrs {
                    pairs.push((c.slopes[v], c.slopes[u]));
                }
            }
        }
    } else {
        let all: Vec<Slope> = comps.iter().flat_map(|c| c.slopes.iter().copied()).collect();
        let distinct: Vec<Slope> = {
            let mut d = all.clone();
            d.sort();
            d.dedup();
            d
        };
        for &u in &distinct {
            for &v in &distinct {
                if det2(u.entries(), v.entries()) != 0 {
                    pairs.push((u, v));
                }
            }
        }
        if pairs.is_empty() {
            // every slope is the same circle
            return Ok(vec![map_to_first_axis(all[0].entries())?]);
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (u, v) in pairs {
        for su in signed(u) {
            for sv in signed(v) {
                let m = hermite_pair_map(su, sv)?;
                if seen.insert(m) {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

fn forest_code(comps: &[Component], m: &UnimodularMap) -> Result<Vec<Code>> {
    let mut codes = comps
        .iter()
        .map(|c| {
            let slopes: Vec<Slope> = c
                .slopes
                .iter()
                .map(|&s| m.apply_slope(s))
                .collect::<Result<_>>()?;
            Ok(component_code(&slopes, &c.adj))
        })
        .collect::<Result<Vec<_>>>()?;
    codes.sort();
    Ok(codes)
}

fn decode(code: &Code) -> Tree {
    let mut tree = Tree::default();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for (i, tok) in code.iter().enumerate() {
        tree.slopes.push(tok.slope);
        if let Some(top) = stack.last_mut() {
            tree.edges.push([top.0, i]);
            top.1 -= 1;
        }
        stack.push((i, tok.children));
        while matches!(stack.last(), Some(&(_, 0))) {
            stack.pop();
        }
    }
    tree
}

/// The distinguished representative of the equivalence class of `f`.
///
/// Components are listed in increasing code order; inside a component the
/// vertices appear in preorder from a centroid, with edges `[parent, child]`.
pub fn canonicalize(f: &ForestData) -> Result<ForestData> {
    let comps = validated_components(f)?;
    let mut best: Option<Vec<Code>> = None;
    for m in candidate_maps(&comps)? {
        let code = forest_code(&comps, &m)?;
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    let best = best.expect("candidate set is never empty");
    Ok(ForestData::new(best.iter().map(decode).collect()))
}

pub fn equivalent(f: &ForestData, g: &ForestData) -> Result<bool> {
    Ok(canonicalize(f)? == canonicalize(g)?)
}

/// Largest absolute slope entry of the canonical form.
pub fn height(f: &ForestData) -> Result<u64> {
    let c = canonicalize(f)?;
    Ok(c.components
        .iter()
        .flat_map(|t| t.slopes.iter())
        .map(|v| v[0].unsigned_abs().max(v[1].unsigned_abs()))
        .max()
        .unwrap_or(0))
}
