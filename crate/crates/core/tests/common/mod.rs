//! Random data and random symmetries shared by the integration tests.
#![allow(dead_code)]

use polar_core::forest5::{self, find_edge, ForestData, Tree};
use polar_core::lattice::{ext_gcd, UnimodularMap, Vec2};
use polar_core::polygon5::{Letter, PolygonWord};
use rand::seq::SliceRandom;
use rand::Rng;

pub use rand_chacha::ChaCha8Rng as TestRng;
pub use rand::SeedableRng;

pub fn rng(seed: u64) -> TestRng {
    TestRng::seed_from_u64(seed)
}

pub const GENERATORS: [[[i64; 2]; 2]; 4] = [
    [[0, -1], [1, 0]],
    [[1, 1], [0, 1]],
    [[1, -1], [0, 1]],
    [[1, 0], [0, -1]],
];

/// A word of length up to `len` in the standard generators of GL(2,Z).
pub fn random_map(rng: &mut TestRng, len: usize) -> UnimodularMap {
    let mut m = UnimodularMap::identity();
    for _ in 0..rng.gen_range(0..=len) {
        let g = UnimodularMap::new(*GENERATORS.choose(rng).unwrap()).unwrap();
        m = g.compose(&m).unwrap();
    }
    m
}

pub fn random_primitive(rng: &mut TestRng, h: i64) -> Vec2 {
    loop {
        let v = [rng.gen_range(-h..=h), rng.gen_range(-h..=h)];
        if polar_core::lattice::is_primitive(&v) {
            return v;
        }
    }
}

/// A random slope forming a lattice basis with `u`.
pub fn random_neighbor(rng: &mut TestRng, u: Vec2, spread: i64) -> Vec2 {
    let (_, x, y) = ext_gcd(u[0] as i128, u[1] as i128);
    let w = [-(y as i64), x as i64];
    let k = rng.gen_range(-spread..=spread);
    let v = [w[0] + k * u[0], w[1] + k * u[1]];
    if rng.gen_bool(0.5) {
        v
    } else {
        [-v[0], -v[1]]
    }
}

/// A random legally weighted tree with `edges` edges.
pub fn random_tree(rng: &mut TestRng, edges: usize) -> Tree {
    let mut t = Tree::isolated(random_primitive(rng, 3));
    for _ in 0..edges {
        let at = rng.gen_range(0..t.slopes.len());
        let v = random_neighbor(rng, t.slopes[at], 2);
        t.slopes.push(v);
        t.edges.push([at, t.slopes.len() - 1]);
    }
    t
}

pub fn random_forest(rng: &mut TestRng, max_components: usize, max_edges: usize) -> ForestData {
    let c = rng.gen_range(1..=max_components);
    let trees = (0..c)
        .map(|_| {
            let e = rng.gen_range(0..=max_edges);
            random_tree(rng, e)
        })
        .collect();
    ForestData::new(trees)
}

pub fn random_blocks(rng: &mut TestRng, max_components: usize, h: i64) -> ForestData {
    let c = rng.gen_range(1..=max_components);
    ForestData::new((0..c).map(|_| Tree::isolated(random_primitive(rng, h))).collect())
}

/// Applies a random change of coordinates, random slope signs, a random
/// relabeling of vertices and edges, and a random order of components.
pub fn scramble_forest(rng: &mut TestRng, f: &ForestData) -> ForestData {
    let m = random_map(rng, 8);
    let mut out = f.transformed(&m).unwrap();
    for t in &mut out.components {
        let n = t.slopes.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut slopes = vec![[0, 0]; n];
        for (i, &v) in t.slopes.iter().enumerate() {
            slopes[perm[i]] = if rng.gen_bool(0.5) { v } else { [-v[0], -v[1]] };
        }
        t.slopes = slopes;
        for e in &mut t.edges {
            *e = if rng.gen_bool(0.5) {
                [perm[e[0]], perm[e[1]]]
            } else {
                [perm[e[1]], perm[e[0]]]
            };
        }
        t.edges.shuffle(rng);
    }
    out.components.shuffle(rng);
    out
}

pub fn path(k: i64) -> ForestData {
    ForestData::path(&[[1, 0], [0, 1], [1, k]])
}

/// Glues the path `(1,0),(0,1),(1,k)` onto a random edge of the single tree
/// `host`, carried there by a change of coordinates.
pub fn attach_path(rng: &mut TestRng, host: &ForestData, k: i64) -> ForestData {
    let t = &host.components[0];
    let e = rng.gen_range(0..t.edges.len());
    let [a, b] = t.edges[e];
    let (u, v) = if rng.gen_bool(0.5) {
        (t.slopes[a], t.slopes[b])
    } else {
        (t.slopes[b], t.slopes[a])
    };
    let m = UnimodularMap::new([[u[0], v[0]], [u[1], v[1]]]).unwrap();
    let piece = forest5::align(&path(k), &m).unwrap();
    let at = find_edge(&piece, u, v).unwrap();
    forest5::fixed_point_sum(host, forest5::EdgeRef::new(0, e), &piece, at).unwrap()
}

/// Builds one tree from 2-edge paths with parameters `ks`, in order.
pub fn assemble(rng: &mut TestRng, ks: &[i64]) -> ForestData {
    let mut f = path(ks[0]);
    for &k in &ks[1..] {
        f = attach_path(rng, &f, k);
    }
    f
}

pub fn random_word(rng: &mut TestRng, n: usize) -> PolygonWord {
    loop {
        let letters: Vec<Letter> = (0..n).map(|_| *Letter::ALL.choose(rng).unwrap()).collect();
        let w = PolygonWord::new(letters);
        if polar_core::polygon5::validate(&w).is_ok() {
            return w;
        }
    }
}

/// A random rotation, optional reflection and relabeling of a word.
pub fn scramble_word(rng: &mut TestRng, w: &PolygonWord) -> PolygonWord {
    let mut letters = w.letters.clone();
    let r = rng.gen_range(0..letters.len().max(1));
    letters.rotate_left(r);
    if rng.gen_bool(0.5) {
        letters.reverse();
    }
    let mut perm = Letter::ALL;
    perm.shuffle(rng);
    PolygonWord::new(
        letters
            .iter()
            .map(|l| perm[Letter::ALL.iter().position(|x| x == l).unwrap()])
            .collect(),
    )
}
