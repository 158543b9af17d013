//! Cyclic sequences: vertex addressing, splicing two cycles at a vertex, and
//! dihedral images.
//!
//! Vertex `i` of a cycle of length `n` sits between entries `i` and `(i + 1) % n`.

/// The two entries flanking vertex `v`, in cyclic order.
pub fn flanking<T: Clone>(word: &[T], v: usize) -> (T, T) {
    let n = word.len();
    (word[v % n].clone(), word[(v + 1) % n].clone())
}

/// Cuts both cycles at the given vertices and joins them into one cycle of
/// length `n1 + n2 - 2`, merging the two matching pairs of flanking entries.
///
/// `same` decides when two entries mark the same stratum. Returns `None` when
/// the unordered flanking pairs do not match.
pub fn splice<T: Clone>(
    w1: &[T],
    v1: usize,
    w2: &[T],
    v2: usize,
    same: impl Fn(&T, &T) -> bool,
) -> Option<Vec<T>> {
    let (n1, n2) = (w1.len(), w2.len());
    let (a, b) = flanking(w1, v1);
    let (c, d) = flanking(w2, v2);
    // walk w1 from the side after v1 all the way round to the side before it
    let mut out: Vec<T> = (1..=n1).map(|i| w1[(v1 + i) % n1].clone()).collect();
    // then the interior of w2, leaving v2 through its copy of `a`
    let interior: Vec<T> = if same(&a, &c) && same(&b, &d) {
        (1..n2 - 1).map(|i| w2[(v2 + n2 - i) % n2].clone()).collect()
    } else if same(&a, &d) && same(&b, &c) {
        (2..n2).map(|i| w2[(v2 + i) % n2].clone()).collect()
    } else {
        return None;
    };
    out.extend(interior);
    Some(out)
}

/// All rotations and reflections of a cyclic word.
pub fn dihedral_images<T: Clone>(word: &[T]) -> Vec<Vec<T>> {
    let n = word.len();
    let mut out = Vec::with_capacity(2 * n);
    for r in 0..n {
        out.push((0..n).map(|i| word[(r + i) % n].clone()).collect());
        out.push((0..n).map(|i| word[(r + n - i) % n].clone()).collect());
    }
    out
}

/// Index pairs of cyclically adjacent entries; a 2-cycle contributes its pair once.
pub fn cyclic_pairs(n: usize) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => (0..n).map(|i| (i, (i + 1) % n)).collect(),
    }
}
