//! SO(3) Coxeter polar data on 5-manifolds.
//!
//! The chamber is a polygon whose sides are marked by one of the three
//! coordinate block embeddings of O(2) in SO(3), with no two neighboring
//! sides marked alike. Vertex `i` sits between sides `i` and `i + 1`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

use crate::cyclic::{cyclic_pairs, dihedral_images, splice};
use crate::error::{Error, Result, Violation};

/// A coordinate block embedding of O(2) in SO(3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    #[serde(rename = "12")]
    E12,
    #[serde(rename = "13")]
    E13,
    #[serde(rename = "23")]
    E23,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::E12, Letter::E13, Letter::E23];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::E12 => "12",
            Letter::E13 => "13",
            Letter::E23 => "23",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolygonWord {
    #[serde(rename = "word")]
    pub letters: Vec<Letter>,
}

impl PolygonWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    /// Parses letters written as `12`, `13` or `23`, separated by commas or spaces.
    pub fn parse(s: &str) -> Option<Self> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t {
                "12" => Some(Letter::E12),
                "13" => Some(Letter::E13),
                "23" => Some(Letter::E23),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of distinct letters in use.
    pub fn alphabet_size(&self) -> usize {
        self.letters.iter().collect::<BTreeSet<_>>().len()
    }
}

impl fmt::Display for PolygonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `S⁵`, the Brieskorn sum `#ₖB`, or the Wu sum `#ₗW`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SO3Type {
    Sphere5,
    SumB { k: u64 },
    SumW { l: u64 },
}

impl fmt::Display for SO3Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SO3Type::Sphere5 => f.write_str("S5"),
            SO3Type::SumB { k: 1 } => f.write_str("B"),
            SO3Type::SumB { k } => write!(f, "#{k}B"),
            SO3Type::SumW { l: 1 } => f.write_str("W"),
            SO3Type::SumW { l } => write!(f, "#{l}W"),
        }
    }
}

impl Serialize for SO3Type {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn validate(w: &PolygonWord) -> Result<(), Vec<Violation>> {
    let n = w.len();
    let mut out = Vec::new();
    if n < 2 {
        out.push(Violation::new("word", "length < 2"));
    }
    for (i, j) in cyclic_pairs(n) {
        if w.letters[i] == w.letters[j] {
            out.push(Violation::new(
                format!("position {i}-{j}"),
                format!("adjacent sides share letter {}", w.letters[i]),
            ));
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn ensure_valid(w: &PolygonWord) -> Result<()> {
    validate(w).map_err(Error::InvalidData)
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn relabel(letters: &[Letter], p: &[usize; 3]) -> Vec<Letter> {
    letters.iter().map(|l| Letter::ALL[p[l.index()]]).collect()
}

/// Images of `w` under rotations, reflection and relabeling of the letters.
pub fn orbit(w: &PolygonWord) -> Vec<PolygonWord> {
    dihedral_images(&w.letters)
        .iter()
        .flat_map(|img| PERMUTATIONS.iter().map(move |p| PolygonWord::new(relabel(img, p))))
        .collect()
}

fn canonical_unchecked(w: &PolygonWord) -> PolygonWord {
    orbit(w).into_iter().min().expect("orbit contains w")
}

/// Lexicographically least word in the orbit of `w`.
pub fn canonicalize(w: &PolygonWord) -> Result<PolygonWord> {
    ensure_valid(w)?;
    Ok(canonical_unchecked(w))
}

pub fn equivalent(a: &PolygonWord, b: &PolygonWord) -> Result<bool> {
    Ok(canonicalize(a)? == canonicalize(b)?)
}

/// Every class of valid words with `n` sides, canonical and sorted.
pub fn enumerate(n: usize) -> Vec<PolygonWord> {
    if n < 2 {
        return Vec::new();
    }
    let mut classes = BTreeSet::new();
    let mut word = vec![Letter::E12];
    extend_words(n, &mut word, &mut classes);
    classes.into_iter().collect()
}

fn extend_words(n: usize, word: &mut Vec<Letter>, out: &mut BTreeSet<PolygonWord>) {
    if word.len() == n {
        if word[n - 1] != word[0] {
            out.insert(canonical_unchecked(&PolygonWord::new(word.clone())));
        }
        return;
    }
    for l in Letter::ALL {
        if Some(&l) != word.last() {
            word.push(l);
            extend_words(n, word, out);
            word.pop();
        }
    }
}

/// One side removed during the reduction to a basic polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deletion {
    pub position: usize,
    pub letter: Letter,
    pub result: PolygonWord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    #[serde(rename = "type")]
    pub so3_type: SO3Type,
    pub trace: Vec<Deletion>,
}

/// Sides whose removal keeps the word valid and all three letters present:
/// the middle of three consecutive pairwise distinct sides whose letter
/// also occurs elsewhere.
pub fn admissible_deletions(w: &PolygonWord) -> Vec<usize> {
    let n = w.len();
    if n <= 3 {
        return Vec::new();
    }
    let ls = &w.letters;
    (0..n)
        .filter(|&i| {
            let (prev, cur, next) = (ls[(i + n - 1) % n], ls[i], ls[(i + 1) % n]);
            prev != next && ls.iter().filter(|&&l| l == cur).count() >= 2
        })
        .collect()
}

/// Reduces `w` to a basic polygon, taking at each step the deletion picked
/// by `choose` among [`admissible_deletions`].
pub fn decompose_with(
    w: &PolygonWord,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Result<Decomposition> {
    ensure_valid(w)?;
    let n = w.len() as u64;
    match w.alphabet_size() {
        _ if n == 2 => {
            return Ok(Decomposition {
                so3_type: SO3Type::Sphere5,
                trace: Vec::new(),
            })
        }
        2 => {
            return Ok(Decomposition {
                so3_type: SO3Type::SumB { k: (n - 2) / 2 },
                trace: Vec::new(),
            })
        }
        _ => {}
    }
    let mut current = w.clone();
    let mut trace = Vec::new();
    while current.len() > 3 {
        let options = admissible_deletions(&current);
        if options.is_empty() {
            break;
        }
        let position = options[choose(&options) % options.len()];
        let letter = current.letters.remove(position);
        trace.push(Deletion {
            position,
            letter,
            result: current.clone(),
        });
    }
    // each deletion splits off one Wu summand
    debug_assert_eq!(current.len(), 3);
    Ok(Decomposition {
        so3_type: SO3Type::SumW {
            l: trace.len() as u64 + 1,
        },
        trace,
    })
}

/// Reduction taking the first admissible deletion at each step.
pub fn decompose(w: &PolygonWord) -> Result<Decomposition> {
    decompose_with(w, |_| 0)
}

/// `χ_orb` of the chamber: `n` vertices with group `D₃`, `n` sides with `Z₂`,
/// one open face.
pub fn orbifold_euler(w: &PolygonWord) -> Result<Ratio<i64>> {
    ensure_valid(w)?;
    let n = w.len() as i64;
    Ok(Ratio::new(n, 6) - Ratio::new(n, 2) + 1)
}

/// Genus of the orientable section surface, from `χ(Σ) = 6 χ_orb`.
pub fn section_genus(w: &PolygonWord) -> Result<u64> {
    let chi = orbifold_euler(w)? * 6;
    debug_assert!(chi.is_integer());
    Ok(((2 - chi.to_integer()) / 2) as u64)
}

/// Glues two polygons at the vertices `v1` and `v2`, whose flanking letter
/// pairs must agree.
pub fn fixed_point_sum(
    w1: &PolygonWord,
    v1: usize,
    w2: &PolygonWord,
    v2: usize,
) -> Result<PolygonWord> {
    ensure_valid(w1)?;
    ensure_valid(w2)?;
    for (w, v) in [(w1, v1), (w2, v2)] {
        if v >= w.len() {
            return Err(Error::InvalidSite(format!(
                "vertex {v} of a {}-gon",
                w.len()
            )));
        }
    }
    splice(&w1.letters, v1, &w2.letters, v2, |a, b| a == b)
        .map(PolygonWord::new)
        .ok_or_else(|| {
            let n1 = w1.len();
            let n2 = w2.len();
            Error::SliceMismatch(format!(
                "vertex {v1} flanked by {{{}, {}}} against vertex {v2} flanked by {{{}, {}}}",
                w1.letters[v1],
                w1.letters[(v1 + 1) % n1],
                w2.letters[v2],
                w2.letters[(v2 + 1) % n2]
            ))
        })
}

/// First vertex flanked by the letters `{a, b}`.
pub fn find_vertex(w: &PolygonWord, a: Letter, b: Letter) -> Option<usize> {
    let n = w.len();
    (0..n).find(|&v| {
        let (x, y) = (w.letters[v], w.letters[(v + 1) % n]);
        (x, y) == (a, b) || (x, y) == (b, a)
    })
}

/// Only the linear action on S⁵ and the action on the Wu manifold qualify.
pub fn nonneg_curvature_admissible(w: &PolygonWord) -> Result<bool> {
    ensure_valid(w)?;
    Ok(matches!(w.len(), 2 | 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn word(ls: &[Letter]) -> PolygonWord {
        PolygonWord::new(ls.to_vec())
    }

    #[test]
    fn validation() {
        assert!(validate(&word(&[E12, E23, E13])).is_ok());
        let v = validate(&word(&[E12, E12, E13])).unwrap_err();
        assert_eq!(v[0].location, "position 0-1");
        let v = validate(&word(&[E12])).unwrap_err();
        assert_eq!(v[0].message, "length < 2");
        assert!(validate(&word(&[E12, E13])).is_ok());
        assert!(validate(&word(&[E12, E13, E12])).is_err());
    }

    #[test]
    fn canonical_examples() {
        let a = word(&[E12, E23, E12, E13]);
        let b = word(&[E13, E12, E23, E12]);
        assert!(equivalent(&a, &b).unwrap());
        assert!(!equivalent(&word(&[E12, E13, E12, E13]), &a).unwrap());
        assert!(equivalent(&word(&[E13, E23, E13, E23]), &word(&[E12, E13, E12, E13])).unwrap());
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (2..=6).map(|n| enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 1, 4]);
    }

    #[test]
    fn decompositions() {
        assert_eq!(
            decompose(&word(&[E12, E13, E12, E13])).unwrap().so3_type,
            SO3Type::SumB { k: 1 }
        );
        let ww = decompose(&word(&[E12, E23, E12, E13])).unwrap();
        assert_eq!(ww.so3_type, SO3Type::SumW { l: 2 });
        assert_eq!(ww.trace.len(), 1);
        assert_eq!(decompose(&word(&[E12, E13])).unwrap().so3_type, SO3Type::Sphere5);
    }

    #[test]
    fn every_three_letter_word_reduces_to_a_triangle() {
        for n in 4..=9 {
            for w in enumerate(n).into_iter().filter(|w| w.alphabet_size() == 3) {
                let d = decompose(&w).unwrap();
                assert_eq!(d.trace.len(), n - 3, "{w}");
                assert_eq!(d.trace.last().unwrap().result.alphabet_size(), 3);
            }
        }
    }

    #[test]
    fn euler_and_genus() {
        let b = word(&[E12, E13, E12, E13]);
        assert_eq!(orbifold_euler(&b).unwrap(), Ratio::new(-1, 3));
        assert_eq!(section_genus(&b).unwrap(), 2);
        assert_eq!(orbifold_euler(&word(&[E12, E23, E13])).unwrap(), Ratio::from_integer(0));
        assert_eq!(section_genus(&word(&[E12, E23, E13])).unwrap(), 1);
        let hexagon = word(&[E12, E13, E12, E13, E12, E13]);
        assert_eq!(orbifold_euler(&hexagon).unwrap(), Ratio::from_integer(-1));
        assert_eq!(section_genus(&hexagon).unwrap(), 4);
    }

    #[test]
    fn sums() {
        let tri = word(&[E12, E23, E13]);
        let v = find_vertex(&tri, E12, E13).unwrap();
        let ww = fixed_point_sum(&tri, v, &tri, v).unwrap();
        assert!(equivalent(&ww, &word(&[E12, E23, E12, E13])).unwrap());

        let b = word(&[E12, E13, E12, E13]);
        let bb = fixed_point_sum(&b, 0, &b, 0).unwrap();
        assert_eq!(bb.len(), 6);
        assert_eq!(decompose(&bb).unwrap().so3_type, SO3Type::SumB { k: 2 });

        let bigon = word(&[E23, E12]);
        let at = find_vertex(&ww, E12, E23).unwrap();
        let same = fixed_point_sum(&ww, at, &bigon, 0).unwrap();
        assert!(equivalent(&same, &ww).unwrap());

        assert!(matches!(
            fixed_point_sum(&tri, 0, &b, 0),
            Err(Error::SliceMismatch(_))
        ));
    }

    #[test]
    fn json_letters() {
        let w: PolygonWord = serde_json::from_str(r#"{"word":["12","23","13"]}"#).unwrap();
        assert_eq!(w, word(&[E12, E23, E13]));
        assert_eq!(PolygonWord::parse("12,23 13"), Some(w));
    }
}
