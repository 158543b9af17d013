//! T² Coxeter polar data on simply connected 4-manifolds.
//!
//! The orbit space is a polygon; its sides carry the slopes of their circle
//! isotropy groups and neighboring sides must form a lattice basis.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::cyclic::{cyclic_pairs, dihedral_images, splice};
use crate::error::{Error, Result, Violation};
use crate::lattice::{det2, is_primitive, normalize_pair, Slope, UnimodularMap, Vec2};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleData {
    pub slopes: Vec<Vec2>,
}

impl CycleData {
    pub fn new(slopes: Vec<Vec2>) -> Self {
        Self { slopes }
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }
}

/// The basic actions, and anything larger by its side count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basic4 {
    S4,
    /// `CP²` or `-CP²`; the data does not fix an orientation.
    Cp2OrConjugate,
    S2xS2,
    Cp2SumMinusCp2,
    Composite { sides: usize },
}

impl fmt::Display for Basic4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basic4::S4 => f.write_str("S4"),
            Basic4::Cp2OrConjugate => f.write_str("CP2_or_conjugate"),
            Basic4::S2xS2 => f.write_str("S2xS2"),
            Basic4::Cp2SumMinusCp2 => f.write_str("CP2_sum_minus_CP2"),
            Basic4::Composite { sides } => write!(f, "Composite{{{sides}}}"),
        }
    }
}

impl Serialize for Basic4 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn validate(c: &CycleData) -> Result<(), Vec<Violation>> {
    let n = c.len();
    let mut out = Vec::new();
    if n < 2 {
        out.push(Violation::new("cycle", "length < 2"));
    }
    for (i, v) in c.slopes.iter().enumerate() {
        if !is_primitive(v) {
            out.push(Violation::new(format!("side {i} {v:?}"), "not primitive"));
        }
    }
    for (i, j) in cyclic_pairs(n) {
        let d = det2(c.slopes[i], c.slopes[j]);
        if d.abs() != 1 {
            out.push(Violation::new(
                format!("vertex {i}-{j}"),
                format!("determinant {}", d.abs()),
            ));
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn classes(c: &CycleData) -> Result<Vec<Slope>> {
    validate(c).map_err(Error::InvalidData)?;
    c.slopes.iter().map(|&v| Slope::from_vec(v)).collect()
}

/// Second Betti number: `n - 2`.
pub fn b2(c: &CycleData) -> Result<u64> {
    classes(c)?;
    Ok(c.len() as u64 - 2)
}

/// Spin iff the two sides around every side agree mod 2.
pub fn is_spin(c: &CycleData) -> Result<bool> {
    let s = classes(c)?;
    let n = s.len();
    Ok((0..n).all(|i| s[(i + n - 1) % n].mod2() == s[(i + 1) % n].mod2()))
}

pub fn recognize_basic(c: &CycleData) -> Result<Basic4> {
    let spin = is_spin(c)?;
    Ok(match c.len() {
        2 => Basic4::S4,
        3 => Basic4::Cp2OrConjugate,
        4 if spin => Basic4::S2xS2,
        4 => Basic4::Cp2SumMinusCp2,
        sides => Basic4::Composite { sides },
    })
}

/// Splices the cycles at vertices `v1` and `v2` (vertex `i` sits between
/// sides `i` and `i + 1`).
pub fn fixed_point_sum(c1: &CycleData, v1: usize, c2: &CycleData, v2: usize) -> Result<CycleData> {
    let s1 = classes(c1)?;
    let s2 = classes(c2)?;
    for (n, v) in [(s1.len(), v1), (s2.len(), v2)] {
        if v >= n {
            return Err(Error::InvalidSite(format!("vertex {v} of a {n}-gon")));
        }
    }
    let spliced = splice(&s1, v1, &s2, v2, |a, b| a == b).ok_or_else(|| {
        Error::SliceMismatch(format!(
            "vertex {v1} flanked by {{{}, {}}} against vertex {v2} flanked by {{{}, {}}}",
            s1[v1],
            s1[(v1 + 1) % s1.len()],
            s2[v2],
            s2[(v2 + 1) % s2.len()]
        ))
    })?;
    Ok(CycleData::new(spliced.into_iter().map(Slope::entries).collect()))
}

/// Least sign-normalized slope sequence over rotations, reflections and
/// changes of coordinates; the first two sides always become `(0,1), (1,0)`
/// or `(1,0), (0,1)`.
pub fn canonicalize(c: &CycleData) -> Result<CycleData> {
    let s = classes(c)?;
    let mut best: Option<Vec<Slope>> = None;
    for img in dihedral_images(&s) {
        let base = normalize_pair(img[0], img[1])?;
        for flip in [[[1, 0], [0, 1]], [[1, 0], [0, -1]]] {
            let m = UnimodularMap::new(flip)?.compose(&base)?;
            let mapped = img
                .iter()
                .map(|&v| m.apply_slope(v))
                .collect::<Result<Vec<_>>>()?;
            if best.as_ref().is_none_or(|b| mapped < *b) {
                best = Some(mapped);
            }
        }
    }
    let best = best.expect("a valid cycle has images");
    Ok(CycleData::new(best.into_iter().map(Slope::entries).collect()))
}

pub fn equivalent(a: &CycleData, b: &CycleData) -> Result<bool> {
    Ok(canonicalize(a)? == canonicalize(b)?)
}
