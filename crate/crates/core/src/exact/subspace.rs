use super::{axpy, is_zero_vec, kernel, zero_vec, Matrix, Scalar, Vector};
use crate::error::{Error, Result};
use num_traits::Zero;

/// A linear subspace of `Q^n` with a chosen independent basis.
///
/// The basis keeps the caller's vectors (dependent ones are dropped) so that
/// nice spanning sets such as unit vectors survive.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    echelon: Vec<(usize, Vector)>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && self.contains_subspace(other)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), echelon: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| super::unit_vec(ambient, i)))
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.push(v);
        }
        s
    }

    /// Adds `v` to the basis if it is independent. Returns whether it was added.
    pub fn push(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "subspace vector has wrong length");
        let r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        let row: Vector = r.iter().map(|x| x * &inv).collect();
        for (_, other) in self.echelon.iter_mut() {
            let f = other[p].clone();
            if !f.is_zero() {
                axpy(other, &-f, &row);
            }
        }
        self.echelon.push((p, row));
        self.basis.push(v);
        true
    }

    fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (p, row) in &self.echelon {
            let f = r[*p].clone();
            if !f.is_zero() {
                axpy(&mut r, &-f, row);
            }
        }
        r
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.push(v.clone());
        }
        s
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| super::neg(v)));
        let m = Matrix::from_cols(&cols, self.ambient).expect("consistent lengths");
        let vectors = kernel(&m).into_iter().map(|k| {
            let mut v = zero_vec(self.ambient);
            for (c, w) in k[..a].iter().zip(&self.basis) {
                axpy(&mut v, c, w);
            }
            v
        });
        Subspace::span(self.ambient, vectors)
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        CoordinateMap::new(&self.basis, self.ambient).ok()?.coordinates(v)
    }

    pub fn coordinate_map(&self) -> CoordinateMap {
        CoordinateMap::new(&self.basis, self.ambient).expect("basis is independent")
    }
}

/// Precomputed left inverse of an independent family of column vectors.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    top: Matrix,
    residual: Matrix,
}

impl CoordinateMap {
    pub fn new(basis: &[Vector], ambient: usize) -> Result<Self> {
        let k = basis.len();
        let mut aug = Matrix::zeros(ambient, k + ambient);
        for (c, v) in basis.iter().enumerate() {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
            }
            for (r, x) in v.iter().enumerate() {
                aug[(r, c)] = x.clone();
            }
        }
        for r in 0..ambient {
            aug[(r, k + r)] = super::one();
        }
        let pivots = aug.reduce_in_place(k);
        if pivots.len() != k {
            return Err(Error::DegenerateRestriction);
        }
        let mut top = Matrix::zeros(k, ambient);
        let mut residual = Matrix::zeros(ambient - k, ambient);
        for r in 0..ambient {
            for c in 0..ambient {
                let x = aug[(r, k + c)].clone();
                if r < k {
                    top[(r, c)] = x;
                } else {
                    residual[(r - k, c)] = x;
                }
            }
        }
        Ok(CoordinateMap { top, residual })
    }

    pub fn dim(&self) -> usize {
        self.top.rows()
    }

    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.top.cols() {
            return None;
        }
        let support: Vec<usize> = (0..v.len()).filter(|&c| !v[c].is_zero()).collect();
        let apply = |m: &Matrix| -> Vector {
            (0..m.rows())
                .map(|r| {
                    let mut acc = super::zero();
                    for &c in &support {
                        let x = &m[(r, c)];
                        if !x.is_zero() {
                            acc += x * &v[c];
                        }
                    }
                    acc
                })
                .collect()
        };
        if !is_zero_vec(&apply(&self.residual)) {
            return None;
        }
        Some(apply(&self.top))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn span_drops_dependent_vectors() {
        let s = Subspace::span(3, [v(&[1, 1, 0]), v(&[2, 2, 0]), v(&[0, 0, 1])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[3, 3, -4])));
        assert!(!s.contains(&v(&[1, 0, 0])));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&v(&[0, 5, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn coordinates_in_basis() {
        let s = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 1])]);
        assert_eq!(s.coordinates(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(s.coordinates(&v(&[1, 0, 0])), None);
    }
}
