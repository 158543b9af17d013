//! Exhaustive tables of equivalence classes within size bounds.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::diffeo::DiffeoType5;
use crate::forest5::{self, ForestData, Tree};
use crate::lattice::{det2, gcd, Vec2};
use crate::polygon5::{self, PolygonWord, SO3Type};

/// Sign-normalized primitive vectors with both entries bounded by `h` in
/// absolute value.
pub fn primitive_slopes(h: u64) -> Vec<Vec2> {
    let h = h as i64;
    let mut out = Vec::new();
    for a in 0..=h {
        for b in -h..=h {
            if (a > 0 || b > 0) && gcd(a, b) == 1 {
                out.push([a, b]);
            }
        }
    }
    out
}

/// Bounds of a forest table: exact edge and component counts, and a bound
/// on the largest slope entry of the canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForestBounds {
    pub edges: usize,
    pub components: usize,
    pub max_height: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestRow {
    pub forest: ForestData,
    pub edges: usize,
    pub components: usize,
    pub height: u64,
    pub pi1: String,
    pub h2_rank: Option<u64>,
    pub spin: Option<bool>,
    #[serde(rename = "type")]
    pub diffeo: DiffeoType5,
    pub polar_group_order: u32,
    pub orientable_section: bool,
    pub nonneg: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestTable {
    pub bounds: ForestBounds,
    pub rows: Vec<ForestRow>,
}

struct Generator {
    slopes: Vec<Vec2>,
    neighbors: BTreeMap<Vec2, Vec<Vec2>>,
    trees: BTreeMap<usize, Vec<Tree>>,
}

impl Generator {
    fn new(h: u64) -> Self {
        let slopes = primitive_slopes(h);
        let neighbors = slopes
            .iter()
            .map(|&u| {
                let adj = slopes
                    .iter()
                    .copied()
                    .filter(|&v| det2(u, v).abs() == 1)
                    .collect();
                (u, adj)
            })
            .collect();
        Self {
            slopes,
            neighbors,
            trees: BTreeMap::new(),
        }
    }

    /// Every labeled tree with `e` edges grown from `seed` by attaching leaves.
    fn grow(&self, seed: Tree, e: usize) -> Vec<Tree> {
        let mut level = vec![seed];
        while level[0].edges.len() < e {
            let mut next = BTreeSet::new();
            for t in &level {
                for (i, v) in t.slopes.iter().enumerate() {
                    for &w in &self.neighbors[v] {
                        let mut g = t.clone();
                        g.slopes.push(w);
                        g.edges.push([i, g.slopes.len() - 1]);
                        next.insert(g);
                    }
                }
            }
            level = next.into_iter().collect();
        }
        level
    }

    fn trees(&mut self, e: usize) -> &[Tree] {
        if !self.trees.contains_key(&e) {
            let ts: Vec<Tree> = if e == 0 {
                self.slopes.iter().map(|&v| Tree::isolated(v)).collect()
            } else {
                self.slopes
                    .iter()
                    .flat_map(|&u| self.neighbors[&u].iter().map(move |&v| Tree::edge(u, v)))
                    .flat_map(|seed| self.grow(seed, e))
                    .collect()
            };
            self.trees.insert(e, ts);
        }
        &self.trees[&e]
    }
}

/// Non-increasing splittings of `total` into exactly `parts` summands.
fn partitions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=total.min(cap)).rev() {
        for mut rest in partitions(total - first, parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn row(f: ForestData) -> ForestRow {
    let inv = forest5::invariants(&f).expect("generated forests are valid");
    let height = f
        .components
        .iter()
        .flat_map(|t| t.slopes.iter())
        .map(|v| v[0].unsigned_abs().max(v[1].unsigned_abs()))
        .max()
        .unwrap_or(0);
    ForestRow {
        edges: f.edge_count(),
        components: f.component_count(),
        height,
        pi1: inv.pi1.to_string(),
        h2_rank: inv.h2_rank,
        spin: inv.spin,
        diffeo: inv.diffeo,
        polar_group_order: inv.polar_group_order,
        orientable_section: inv.orientable_section,
        nonneg: inv.nonneg_admissible.unwrap_or(false),
        forest: f,
    }
}

/// All classes of forests with exactly `edges` edges and `components`
/// components whose canonical slopes are bounded by `max_height`, in
/// canonical order.
pub fn enumerate_t2_forests(edges: usize, components: usize, max_height: u64) -> ForestTable {
    let bounds = ForestBounds {
        edges,
        components,
        max_height,
    };
    let mut found = BTreeSet::new();
    if components > 0 && max_height > 0 {
        let mut gen = Generator::new(max_height);
        for split in partitions(edges, components, edges) {
            // the canonical form of any forest contains the edge (1,0)-(0,1)
            // in some component, or the slope (1,0) when there are no edges
            let mut anchors: Vec<usize> = split.iter().copied().filter(|&e| e > 0).collect();
            anchors.dedup();
            if anchors.is_empty() {
                anchors.push(0);
            }
            for anchor_edges in anchors {
                let anchor: Vec<Tree> = if anchor_edges == 0 {
                    vec![Tree::isolated([1, 0])]
                } else {
                    gen.grow(Tree::edge([1, 0], [0, 1]), anchor_edges)
                };
                let mut rest = split.clone();
                let at = rest.iter().position(|&e| e == anchor_edges).expect("anchor is a part");
                rest.remove(at);
                let mut forests: Vec<Vec<Tree>> = anchor.into_iter().map(|t| vec![t]).collect();
                for &e in &rest {
                    let choices = gen.trees(e).to_vec();
                    forests = forests
                        .into_iter()
                        .flat_map(|partial| {
                            choices.iter().map(move |t| {
                                let mut p = partial.clone();
                                p.push(t.clone());
                                p
                            })
                        })
                        .collect();
                }
                for comps in forests {
                    let c = forest5::canonicalize(&ForestData::new(comps))
                        .expect("generated forests are valid");
                    found.insert(c);
                }
            }
        }
    }
    let rows = found
        .into_iter()
        .map(row)
        .filter(|r| r.height <= max_height)
        .collect();
    ForestTable { bounds, rows }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonRow {
    pub word: PolygonWord,
    #[serde(rename = "type")]
    pub so3_type: SO3Type,
    pub genus: u64,
    pub orbifold_euler: String,
    pub nonneg: bool,
}

impl PolygonRow {
    pub fn orbifold_euler(&self) -> Ratio<i64> {
        self.orbifold_euler.parse().expect("stored as a ratio")
    }
}

/// Every class of `n`-sided SO(3) polygons with its invariants.
pub fn enumerate_so3(n: usize) -> Vec<PolygonRow> {
    polygon5::enumerate(n)
        .into_iter()
        .map(|w| PolygonRow {
            so3_type: polygon5::decompose(&w).expect("enumerated words are valid").so3_type,
            genus: polygon5::section_genus(&w).expect("valid"),
            orbifold_euler: polygon5::orbifold_euler(&w).expect("valid").to_string(),
            nonneg: polygon5::nonneg_curvature_admissible(&w).expect("valid"),
            word: w,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_lists() {
        assert_eq!(primitive_slopes(1), vec![[0, 1], [1, -1], [1, 0], [1, 1]]);
        assert_eq!(primitive_slopes(2).len(), 8);
    }

    #[test]
    fn splittings() {
        assert_eq!(partitions(3, 2, 3), vec![vec![3, 0], vec![2, 1]]);
        assert_eq!(partitions(0, 2, 0), vec![vec![0, 0]]);
        assert!(partitions(1, 0, 1).is_empty());
    }

    #[test]
    fn single_edge() {
        let t = enumerate_t2_forests(1, 1, 1);
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[0].diffeo, DiffeoType5::Sphere5);
    }

    #[test]
    fn angles_up_to_height_two() {
        let t = enumerate_t2_forests(2, 1, 2);
        assert_eq!(t.rows.len(), 3);
        let spins: Vec<bool> = t.rows.iter().map(|r| r.spin.unwrap()).collect();
        assert_eq!(spins.iter().filter(|s| **s).count(), 2);
    }

    #[test]
    fn pairs_of_blocks() {
        // (1,1),(1,-1) spans an index-2 lattice and normalizes to (1,0),(1,2)
        let t = enumerate_t2_forests(0, 2, 1);
        assert_eq!(t.rows.len(), 2);
        assert_eq!(enumerate_t2_forests(0, 2, 2).rows.len(), 3);
        let simply: Vec<_> = t.rows.iter().filter(|r| r.pi1 == "trivial").collect();
        assert_eq!(simply.len(), 1);
        assert!(simply[0].nonneg);
    }

    #[test]
    fn so3_tables() {
        let four = enumerate_so3(4);
        let mut types: Vec<String> = four.iter().map(|r| r.so3_type.to_string()).collect();
        types.sort();
        assert_eq!(types, vec!["#2W", "B"]);
        assert_eq!(enumerate_so3(3).len(), 1);
        let six = enumerate_so3(6);
        assert_eq!(six.len(), 4);
        assert_eq!(
            six.iter().filter(|r| matches!(r.so3_type, SO3Type::SumB { .. })).count(),
            1
        );
        assert_eq!(four[0].orbifold_euler(), Ratio::new(-1, 3));
    }
}
