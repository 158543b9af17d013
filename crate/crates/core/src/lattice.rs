//! Exact integer linear algebra over Z² and Z³.
//!
//! Circle subgroups of a torus are recorded by primitive integer vectors
//! ([`Slope`], [`Slope3`]), taken up to a global sign. Everything here is
//! exact: intermediate products are carried in `i128` and converted back
//! with an explicit [`Error::Overflow`] instead of wrapping.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};

pub type Vec2 = [i64; 2];
pub type Vec3 = [i64; 3];

/// Non-negative gcd; `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> u64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn gcd_all(v: &[i64]) -> u64 {
    v.iter().fold(0u64, |g, &x| {
        let (mut a, mut b) = (g, x.unsigned_abs());
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    })
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y == g >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// True iff `v` is nonzero and its entries have gcd 1.
///
/// Meant for vectors with two or three entries; other lengths are never primitive.
pub fn is_primitive(v: &[i64]) -> bool {
    matches!(v.len(), 2 | 3) && gcd_all(v) == 1
}

pub fn det2(u: Vec2, v: Vec2) -> i128 {
    u[0] as i128 * v[1] as i128 - u[1] as i128 * v[0] as i128
}

fn canonical_sign<const N: usize>(v: [i64; N]) -> Result<[i64; N]> {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => {
            let mut out = v;
            for e in out.iter_mut() {
                *e = e.checked_neg().ok_or(Error::Overflow)?;
            }
            Ok(out)
        }
        _ => Ok(v),
    }
}

/// A primitive vector in Z² marking a circle subgroup of T², stored with its
/// first nonzero entry positive so that `v` and `-v` compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec2", into = "Vec2")]
pub struct Slope(Vec2);

impl Slope {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        Self::from_vec([a, b])
    }

    pub fn from_vec(v: Vec2) -> Result<Self> {
        if !is_primitive(&v) {
            return Err(Error::NotPrimitive(v.to_vec()));
        }
        Ok(Slope(canonical_sign(v)?))
    }

    pub fn entries(self) -> Vec2 {
        self.0
    }

    /// Reduction mod 2; never `[0, 0]` for a primitive vector.
    pub fn mod2(self) -> [u8; 2] {
        [self.0[0].rem_euclid(2) as u8, self.0[1].rem_euclid(2) as u8]
    }

    pub fn height(self) -> u64 {
        self.0[0].unsigned_abs().max(self.0[1].unsigned_abs())
    }
}

impl TryFrom<Vec2> for Slope {
    type Error = Error;

    fn try_from(v: Vec2) -> Result<Self> {
        Slope::from_vec(v)
    }
}

impl From<Slope> for Vec2 {
    fn from(s: Slope) -> Vec2 {
        s.0
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0[0], self.0[1])
    }
}

/// A primitive vector in Z³ up to sign (circle subgroups of T³).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec3", into = "Vec3")]
pub struct Slope3(Vec3);

impl Slope3 {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_vec([a, b, c])
    }

    pub fn from_vec(v: Vec3) -> Result<Self> {
        if !is_primitive(&v) {
            return Err(Error::NotPrimitive(v.to_vec()));
        }
        Ok(Slope3(canonical_sign(v)?))
    }

    pub fn entries(self) -> Vec3 {
        self.0
    }
}

impl TryFrom<Vec3> for Slope3 {
    type Error = Error;

    fn try_from(v: Vec3) -> Result<Self> {
        Slope3::from_vec(v)
    }
}

impl From<Slope3> for Vec3 {
    fn from(s: Slope3) -> Vec3 {
        s.0
    }
}

/// True iff the two circles generate T², i.e. `|det(u, v)| == 1`.
pub fn adjacency_ok(u: Slope, v: Slope) -> bool {
    det2(u.0, v.0).abs() == 1
}

/// A finitely generated abelian group `Z/d1 + Z/d2 + ...` with `d1 | d2 | ...`.
///
/// Factors equal to 1 are omitted and 0 encodes an infinite cyclic factor, so
/// the trivial group has no factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianGroupShape {
    pub invariant_factors: Vec<u64>,
}

impl AbelianGroupShape {
    pub fn trivial() -> Self {
        Self {
            invariant_factors: Vec::new(),
        }
    }

    /// Builds the shape of `Z^ambient_rank / L` from the nonzero Smith diagonal of `L`.
    pub fn from_smith_diagonal(ambient_rank: usize, diagonal: &[u64]) -> Self {
        let mut invariant_factors: Vec<u64> =
            diagonal.iter().copied().filter(|&d| d != 1).collect();
        invariant_factors.extend(std::iter::repeat_n(0, ambient_rank - diagonal.len()));
        Self { invariant_factors }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|&&d| d == 0).count()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u64 {
        self.invariant_factors.iter().filter(|&&d| d != 0).product()
    }
}

impl fmt::Display for AbelianGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|&d| if d == 0 { "Z".to_string() } else { format!("Z{d}") })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

/// Nonzero diagonal entries of the Smith normal form of an integer matrix,
/// in divisibility order.
pub fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<u64> {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        loop {
            let pivot = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return diag;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t] / p;
                if q != 0 {
                    let pivot = a[t].clone();
                    for (x, y) in a[i][t..].iter_mut().zip(&pivot[t..]) {
                        *x -= q * y;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // the pivot must divide the remaining block
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let donor = a[i].clone();
                    for (x, y) in a[t][t..].iter_mut().zip(&donor[t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].unsigned_abs() as u64);
    }
    diag
}

/// `Z² / ⟨vs⟩` as invariant factors.
pub fn smith_quotient(vs: &[Slope]) -> AbelianGroupShape {
    let vectors: Vec<Vec2> = vs.iter().map(|s| s.entries()).collect();
    smith_quotient_vectors(&vectors)
}

/// Same as [`smith_quotient`] for arbitrary (not necessarily primitive) vectors.
pub fn smith_quotient_vectors(vs: &[Vec2]) -> AbelianGroupShape {
    let rows = vec![
        vs.iter().map(|v| v[0]).collect::<Vec<_>>(),
        vs.iter().map(|v| v[1]).collect::<Vec<_>>(),
    ];
    AbelianGroupShape::from_smith_diagonal(2, &smith_diagonal(&rows))
}

/// An element of GL(2, Z), acting on column vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularMap {
    matrix: [[i64; 2]; 2],
}

impl UnimodularMap {
    pub fn new(matrix: [[i64; 2]; 2]) -> Result<Self> {
        let d = det2(matrix[0], matrix[1]);
        if d.abs() != 1 {
            return Err(Error::InvalidData(vec![Violation::new(
                "matrix",
                format!("determinant {d}"),
            )]));
        }
        Ok(Self { matrix })
    }

    pub fn identity() -> Self {
        Self {
            matrix: [[1, 0], [0, 1]],
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn det(&self) -> i64 {
        det2(self.matrix[0], self.matrix[1]) as i64
    }

    pub fn apply(&self, v: Vec2) -> Result<Vec2> {
        let [[a, b], [c, d]] = self.matrix.map(|r| r.map(i128::from));
        let (x, y) = (v[0] as i128, v[1] as i128);
        Ok([narrow(a * x + b * y)?, narrow(c * x + d * y)?])
    }

    pub fn apply_slope(&self, s: Slope) -> Result<Slope> {
        Slope::from_vec(self.apply(s.entries())?)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> Result<UnimodularMap> {
        let a = self.matrix.map(|r| r.map(i128::from));
        let b = other.matrix.map(|r| r.map(i128::from));
        let mut out = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = narrow(a[i][0] * b[0][j] + a[i][1] * b[1][j])?;
            }
        }
        Ok(Self { matrix: out })
    }

    pub fn inverse(&self) -> Result<UnimodularMap> {
        let [[a, b], [c, d]] = self.matrix;
        let s = self.det();
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow);
        Ok(Self {
            matrix: [[d * s, neg(b)? * s], [neg(c)? * s, a * s]],
        })
    }
}

/// The map sending `u ↦ (1,0)` and `v ↦ (0,1)` for a pair of adjacent slopes.
pub fn normalize_pair(u: Slope, v: Slope) -> Result<UnimodularMap> {
    let (u, v) = (u.entries(), v.entries());
    let d = det2(u, v);
    if d.abs() != 1 {
        return Err(Error::NotAdjacent(u, v, d));
    }
    // inverse of the matrix with columns u, v
    let d = d as i64;
    UnimodularMap::new([[v[1] * d, -v[0] * d], [-u[1] * d, u[0] * d]])
}

/// A map `M` with `M u = (1, 0)`, for primitive `u`.
pub fn map_to_first_axis(u: Vec2) -> Result<UnimodularMap> {
    if !is_primitive(&u) {
        return Err(Error::NotPrimitive(u.to_vec()));
    }
    let (_, x, y) = ext_gcd(u[0] as i128, u[1] as i128);
    UnimodularMap::new([[narrow(x)?, narrow(y)?], [-u[1], u[0]]])
}

/// The unique `M` in GL(2, Z) bringing the column pair `(u, v)` to Hermite form:
/// `M u = (1, 0)` and `M v = (h, d)` with `d = |det(u, v)| > 0` and `0 <= h < d`.
///
/// Requires `u` primitive and `v` not parallel to `u`. For adjacent slopes this
/// agrees with [`normalize_pair`].
pub fn hermite_pair_map(u: Vec2, v: Vec2) -> Result<UnimodularMap> {
    let d = det2(u, v);
    if d == 0 {
        return Err(Error::NotAdjacent(u, v, 0));
    }
    let mut m = map_to_first_axis(u)?;
    let [_, q] = m.apply(v)?;
    if q < 0 {
        m = UnimodularMap::new([[1, 0], [0, -1]])?.compose(&m)?;
    }
    let [p, q] = m.apply(v)?;
    let t = -(p.div_euclid(q));
    UnimodularMap::new([[1, t], [0, 1]])?.compose(&m)
}

fn dot3(r: &[i128; 3], v: Vec3) -> i128 {
    r[0] * v[0] as i128 + r[1] * v[1] as i128 + r[2] * v[2] as i128
}

/// Row-reduces a 3-vector to `e1` and returns the accumulated unimodular matrix.
fn reduce_to_e1(w: Vec3) -> [[i128; 3]; 3] {
    let mut a = [[1i128, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut x = w.map(i128::from);
    loop {
        let nonzero: Vec<usize> = (0..3).filter(|&i| x[i] != 0).collect();
        let &p = nonzero
            .iter()
            .min_by_key(|&&i| x[i].abs())
            .expect("primitive vector is nonzero");
        if nonzero.len() == 1 {
            a.swap(0, p);
            x.swap(0, p);
            if x[0] < 0 {
                a[0] = a[0].map(|e| -e);
            }
            return a;
        }
        for &i in &nonzero {
            if i != p {
                let q = x[i].div_euclid(x[p]);
                x[i] -= q * x[p];
                let row_p = a[p];
                for (e, ep) in a[i].iter_mut().zip(row_p) {
                    *e -= q * ep;
                }
            }
        }
    }
}

/// Row Hermite normal form of a full-rank 2×3 integer matrix: pivots positive,
/// entries above each pivot reduced into `[0, pivot)`.
fn hermite_rows(mut rows: [[i128; 3]; 2]) -> [[i128; 3]; 2] {
    let mut r = 0;
    for col in 0..3 {
        if r == 2 {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..2).filter(|&i| rows[i][col] != 0).collect();
            match nz.len() {
                0 => break,
                1 => {
                    rows.swap(r, nz[0]);
                    if rows[r][col] < 0 {
                        rows[r] = rows[r].map(|e| -e);
                    }
                    let p = rows[r][col];
                    for i in 0..r {
                        let q = rows[i][col].div_euclid(p);
                        let pivot_row = rows[r];
                        for (e, ep) in rows[i].iter_mut().zip(pivot_row) {
                            *e -= q * ep;
                        }
                    }
                    r += 1;
                    break;
                }
                _ => {
                    // Euclid step between the two candidate rows
                    let (i, j) = if rows[nz[0]][col].abs() <= rows[nz[1]][col].abs() {
                        (nz[0], nz[1])
                    } else {
                        (nz[1], nz[0])
                    };
                    let q = rows[j][col] / rows[i][col];
                    let ri = rows[i];
                    for (e, ei) in rows[j].iter_mut().zip(ri) {
                        *e -= q * ei;
                    }
                }
            }
        }
    }
    rows
}

/// The canonical surjection `Z³ → Z³/⟨w⟩ ≅ Z²` as a 2×3 matrix.
///
/// Its rows are the Hermite normal form of a basis of the annihilator of `w`,
/// so the result does not depend on how that basis was found.
pub fn projection_matrix(w: Slope3) -> Result<[[i64; 3]; 2]> {
    let a = reduce_to_e1(w.entries());
    let h = hermite_rows([a[1], a[2]]);
    let mut out = [[0i64; 3]; 2];
    for i in 0..2 {
        for j in 0..3 {
            out[i][j] = narrow(h[i][j])?;
        }
    }
    Ok(out)
}

/// Image of an arbitrary integer vector in `Z³/⟨w⟩`, in the canonical coordinates.
pub fn project_vector(w: Slope3, v: Vec3) -> Result<Vec2> {
    let p = projection_matrix(w)?;
    let rows = p.map(|r| r.map(i128::from));
    Ok([narrow(dot3(&rows[0], v))?, narrow(dot3(&rows[1], v))?])
}

/// Marking of the circle `v` after passing to the quotient torus `T³/S¹_w`.
pub fn project_along(w: Slope3, v: Slope3) -> Result<Slope> {
    let image = project_vector(w, v.entries())?;
    primitive_image(w, v, image)
}

fn primitive_image(w: Slope3, v: Slope3, image: Vec2) -> Result<Slope> {
    if image == [0, 0] {
        return Err(Error::ParallelInput {
            w: w.entries(),
            v: v.entries(),
        });
    }
    if !is_primitive(&image) {
        return Err(Error::NonPrimitiveImage {
            w: w.entries(),
            v: v.entries(),
        });
    }
    Slope::from_vec(image)
}

/// Like [`project_along`], but in coordinates given by an explicit complement
/// `⟨c1, c2⟩` of the circle, which must complete `w` to a basis of Z³.
pub fn project_along_with(w: Slope3, complement: [Vec3; 2], v: Slope3) -> Result<Slope> {
    let b = [w.entries(), complement[0], complement[1]].map(|c| c.map(i128::from));
    // columns of B are w, c1, c2; cofactor rows give det * B^{-1}
    let col = |j: usize, i: usize| b[j][i];
    let minor = |i0: usize, i1: usize, j0: usize, j1: usize| {
        col(j0, i0) * col(j1, i1) - col(j1, i0) * col(j0, i1)
    };
    let det = col(0, 0) * minor(1, 2, 1, 2) - col(1, 0) * minor(1, 2, 0, 2)
        + col(2, 0) * minor(1, 2, 0, 1);
    if det.abs() != 1 {
        return Err(Error::BadComplement(complement));
    }
    // rows 1 and 2 of the adjugate (coefficients of c1 and c2)
    let adj_row1 = [
        -minor(1, 2, 0, 2),
        minor(0, 2, 0, 2),
        -minor(0, 1, 0, 2),
    ];
    let adj_row2 = [minor(1, 2, 0, 1), -minor(0, 2, 0, 1), minor(0, 1, 0, 1)];
    let v3 = v.entries();
    let image = [
        narrow(det * dot3(&adj_row1, v3))?,
        narrow(det * dot3(&adj_row2, v3))?,
    ];
    primitive_image(w, v, image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64) -> Slope {
        Slope::new(a, b).unwrap()
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&[1, 0]));
        assert!(!is_primitive(&[2, 4]));
        assert!(!is_primitive(&[0, 0]));
        assert!(is_primitive(&[2, 3, 4]));
        assert!(!is_primitive(&[1]));
    }

    #[test]
    fn slope_sign_classes() {
        assert_eq!(s(-1, 2), s(1, -2));
        assert_eq!(s(0, -1).entries(), [0, 1]);
        assert!(Slope::new(3, 6).is_err());
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacency_ok(s(1, 0), s(0, 1)));
        assert!(adjacency_ok(s(0, 1), s(1, 5)));
        assert_eq!(det2([0, 1], [1, 5]), -1);
        assert!(!adjacency_ok(s(1, 0), s(1, 2)));
    }

    #[test]
    fn smith_quotient_examples() {
        assert!(smith_quotient(&[s(1, 0), s(0, 1)]).is_trivial());
        assert_eq!(smith_quotient(&[s(1, 0)]).invariant_factors, vec![0]);
        assert_eq!(smith_quotient(&[s(2, 1), s(1, 2)]).invariant_factors, vec![3]);
        assert_eq!(
            smith_quotient_vectors(&[[2, 0], [0, 4]]).invariant_factors,
            vec![2, 4]
        );
        assert_eq!(smith_quotient_vectors(&[[6, 4]]).invariant_factors, vec![2, 0]);
        assert_eq!(smith_quotient(&[s(1, 0)]).to_string(), "Z");
        assert_eq!(smith_quotient(&[s(1, 0), s(1, 2)]).to_string(), "Z2");
    }

    #[test]
    fn smith_diagonal_divisibility() {
        let d = smith_diagonal(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]);
        assert_eq!(d, vec![1, 2, 12]);
    }

    #[test]
    fn normalize_pair_examples() {
        assert_eq!(
            normalize_pair(s(1, 0), s(0, 1)).unwrap(),
            UnimodularMap::identity()
        );
        assert_eq!(
            normalize_pair(s(0, 1), s(1, 0)).unwrap().matrix(),
            [[0, 1], [1, 0]]
        );
        let m = normalize_pair(s(1, 0), s(1, 1)).unwrap();
        assert_eq!(m.det().abs(), 1);
        assert_eq!(m.apply([1, 0]).unwrap(), [1, 0]);
        assert_eq!(m.apply([1, 1]).unwrap(), [0, 1]);
        assert!(matches!(
            normalize_pair(s(1, 0), s(1, 2)),
            Err(Error::NotAdjacent(..))
        ));
    }

    #[test]
    fn hermite_pair_map_shape() {
        let m = hermite_pair_map([2, 1], [0, 3]).unwrap();
        assert_eq!(m.apply([2, 1]).unwrap(), [1, 0]);
        let [h, d] = m.apply([0, 3]).unwrap();
        assert_eq!(d, 6);
        assert!((0..6).contains(&h));
        assert_eq!(
            hermite_pair_map([1, 0], [0, 1]).unwrap(),
            normalize_pair(s(1, 0), s(0, 1)).unwrap()
        );
    }

    #[test]
    fn inverse_and_compose() {
        let m = UnimodularMap::new([[2, 1], [1, 1]]).unwrap();
        assert_eq!(
            m.compose(&m.inverse().unwrap()).unwrap(),
            UnimodularMap::identity()
        );
        let r = UnimodularMap::new([[1, 0], [0, -1]]).unwrap();
        assert_eq!(r.inverse().unwrap(), r);
        assert!(UnimodularMap::new([[2, 0], [0, 1]]).is_err());
    }

    #[test]
    fn projection_with_explicit_complement() {
        for k in -3..=5 {
            let w = Slope3::new(1, -1, k).unwrap();
            let comp = [[0, 1, 0], [0, 0, -1]];
            let p = project_along_with(w, comp, Slope3::new(1, 0, 0).unwrap()).unwrap();
            assert_eq!(p, s(1, k));
            let q = project_along_with(w, comp, Slope3::new(0, 1, 0).unwrap()).unwrap();
            assert_eq!(q, s(1, 0));
        }
    }

    #[test]
    fn projection_matrix_kills_the_circle() {
        for w in [[1, -1, 3], [1, 1, 1], [2, 3, 5], [0, 0, 1], [0, 4, -3]] {
            let w = Slope3::from_vec(w).unwrap();
            assert_eq!(project_vector(w, w.entries()).unwrap(), [0, 0]);
            // surjective: the 2x2 minors of the projection are coprime
            let p = projection_matrix(w).unwrap();
            let minors: Vec<i64> = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .map(|&(i, j)| p[0][i] * p[1][j] - p[0][j] * p[1][i])
                .collect();
            assert_eq!(gcd_all(&minors), 1);
        }
    }

    #[test]
    fn projection_errors() {
        let w = Slope3::new(1, -1, 2).unwrap();
        assert!(matches!(
            project_along(w, Slope3::new(-1, 1, -2).unwrap()),
            Err(Error::ParallelInput { .. })
        ));
        // <(1,0,0), (1,2,0)> is not saturated, so (1,0,0) maps to twice a lattice vector
        let w = Slope3::new(1, 2, 0).unwrap();
        assert!(matches!(
            project_along(w, Slope3::new(1, 0, 0).unwrap()),
            Err(Error::NonPrimitiveImage { .. })
        ));
        assert!(matches!(
            project_along_with(
                Slope3::new(1, 0, 0).unwrap(),
                [[0, 2, 0], [0, 0, 1]],
                Slope3::new(0, 1, 0).unwrap()
            ),
            Err(Error::BadComplement(_))
        ));
    }
}
