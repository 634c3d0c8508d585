//! Exact rational linear algebra.
//!
//! All arithmetic runs over [`Scalar`], an arbitrary precision rational.
//! Elimination pivots on the first nonzero entry, so results are
//! deterministic and reproducible bit for bit.

mod feasibility;
mod sparse;
mod subspace;

pub use feasibility::linear_feasibility;
pub use sparse::{densify, rank_mod_p, sparse_kernel, sparse_rank, SparseEchelon, SparseVec};
pub use subspace::{CoordinateMap, Subspace};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

pub type Scalar = BigRational;
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Renders `p` for integers and `p/q` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

pub fn zero_vec(n: usize) -> Vector {
    vec![zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    let mut s = zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// `y += c * x`
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += c * xi;
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", format_vector(self.row(r)))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = one();
        }
        m
    }

    /// Builds a matrix from rows of equal length. `cols` fixes the width when
    /// there are no rows.
    pub fn from_rows(rows: &[Vector], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_cols(cols: &[Vector], rows: usize) -> Result<Self> {
        Ok(Self::from_rows(cols, rows)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// `x^T M y`
    pub fn bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.mul_vec(y))
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.reduce_in_place(self.cols);
        Rref { matrix: m, pivots }
    }

    /// Reduces the leading `limit` columns to reduced row echelon form,
    /// applying the same row operations to the remaining columns.
    fn reduce_in_place(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self[(row, col)].recip();
            for c in col..self.cols {
                if !self[(row, c)].is_zero() {
                    self[(row, c)] = &self[(row, c)] * &inv;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (col..self.cols)
                .filter(|&c| !self[(row, c)].is_zero())
                .map(|c| (c, self[(row, c)].clone()))
                .collect();
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self[(r, col)].clone();
                if f.is_zero() {
                    continue;
                }
                for (c, v) in &pivot_row {
                    let t = &f * v;
                    self[(r, *c)] -= t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = one();
        }
        let pivots = aug.reduce_in_place(n);
        if pivots.len() != n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = aug[(r, n + c)].clone();
            }
        }
        Some(inv)
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Basis of the null space. Each vector has a single `1` at a free column and
/// zeros at the other free columns.
pub fn kernel(a: &Matrix) -> Vec<Vector> {
    let Rref { matrix, pivots } = a.rref();
    let n = a.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(n);
        v[free] = one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -matrix[(r, free)].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank(a: &Matrix) -> usize {
    a.rank()
}

/// Solution set `particular + span(homogeneous)` of `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vector,
    pub homogeneous: Vec<Vector>,
}

pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<AffineSolution> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let pivots = aug.reduce_in_place(n);
    for r in pivots.len()..a.rows() {
        if !aug[(r, n)].is_zero() {
            return Err(Error::Infeasible);
        }
    }
    let mut particular = zero_vec(n);
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = aug[(r, n)].clone();
    }
    Ok(AffineSolution { particular, homogeneous: kernel(a) })
}

/// Projection of `v` onto the `form`-orthogonal complement of `span(subspace)`.
/// Requires `form` to be nondegenerate on the subspace.
pub fn project_orthogonal(v: &[Scalar], subspace: &[Vector], form: &Matrix) -> Result<Vector> {
    let n = v.len();
    if form.rows() != n || form.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: form.rows() });
    }
    if let Some(w) = subspace.iter().find(|w| w.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: w.len() });
    }
    let k = subspace.len();
    let mut gram = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = form.bilinear(&subspace[i], &subspace[j]);
        }
    }
    let Some(inv) = gram.inverse() else {
        return Err(Error::DegenerateRestriction);
    };
    let rhs: Vector = subspace.iter().map(|w| form.bilinear(w, v)).collect();
    let coeffs = inv.mul_vec(&rhs);
    let mut out = v.to_vec();
    for (c, w) in coeffs.iter().zip(subspace) {
        axpy(&mut out, &-c, w);
    }
    Ok(out)
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign(x: &Scalar) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Matrix::from_rows(&rows, cols).unwrap()
    }

    #[test]
    fn scalar_round_trip() {
        for s in ["0", "-3", "7/2", "-1/56"] {
            assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
        }
        assert!(parse_scalar("1/0").is_none());
        assert!(parse_scalar("x").is_none());
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&a.mul_vec(v)));
        }
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn affine_infeasible() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_affine(&a, &[int(1), int(2)]), Err(Error::Infeasible));
        let s = solve_affine(&a, &[int(3), int(3)]).unwrap();
        assert_eq!(a.mul_vec(&s.particular), vec![int(3), int(3)]);
        assert_eq!(s.homogeneous.len(), 1);
    }

    #[test]
    fn projection_against_degenerate_form() {
        let form = m(&[&[1, 0], &[0, -1]]);
        let w = vec![vec![int(1), int(1)]];
        assert_eq!(project_orthogonal(&[int(1), int(0)], &w, &form), Err(Error::DegenerateRestriction));
        let p = project_orthogonal(&[int(1), int(0)], &[vec![int(1), int(0)]], &form).unwrap();
        assert_eq!(p, vec![int(0), int(0)]);
    }
}
