use crate::error::{Error, Result};
use crate::exact::{int, zero, zero_vec, Matrix, Scalar, Vector};
use crate::lie::LieAlgebra;
use crate::roots::{decompose, Frame, RestrictedRootSystem};
use num_traits::Zero;

/// Basis bookkeeping for 𝔰𝔩_m: `H_1 .. H_{m-1}` then `E_ij` in `(i, j)` order.
#[derive(Clone, Debug)]
pub struct SlBasis {
    m: usize,
    pairs: Vec<(usize, usize)>,
}

impl SlBasis {
    pub fn new(m: usize) -> Self {
        let mut pairs = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    pairs.push((i, j));
                }
            }
        }
        SlBasis { m, pairs }
    }

    pub fn dim(&self) -> usize {
        self.m * self.m - 1
    }

    pub fn labels(&self) -> Vec<String> {
        let mut l: Vec<String> = (1..self.m).map(|k| format!("H{k}")).collect();
        l.extend(self.pairs.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)));
        l
    }

    /// Basis index of `E_ij`, 0-based `i`, `j`.
    pub fn e(&self, i: usize, j: usize) -> usize {
        self.m - 1 + self.pairs.iter().position(|&p| p == (i, j)).expect("off-diagonal pair")
    }

    pub fn to_matrix(&self, v: &[Scalar]) -> Matrix {
        let m = self.m;
        let mut out = Matrix::zeros(m, m);
        for k in 0..m - 1 {
            out[(k, k)] += &v[k];
            out[(k + 1, k + 1)] -= &v[k];
        }
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            out[(i, j)] = v[m - 1 + p].clone();
        }
        out
    }

    /// Coordinates of a traceless matrix.
    pub fn from_matrix(&self, x: &Matrix) -> Result<Vector> {
        let m = self.m;
        if x.rows() != m || x.cols() != m {
            return Err(Error::DimensionMismatch { expected: m, found: x.rows() });
        }
        if !x.trace().is_zero() {
            return Err(Error::InvalidSeed("matrix is not traceless".into()));
        }
        let mut v = zero_vec(self.dim());
        // diag(d) = sum h_k (e_k - e_{k+1}) gives h_k = d_1 + .. + d_k.
        let mut acc = zero();
        for k in 0..m - 1 {
            acc += &x[(k, k)];
            v[k] = acc.clone();
        }
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            v[m - 1 + p] = x[(i, j)].clone();
        }
        Ok(v)
    }

    pub fn diag(&self, d: &[Scalar]) -> Result<Vector> {
        let mut x = Matrix::zeros(self.m, self.m);
        for (i, v) in d.iter().enumerate() {
            x[(i, i)] = v.clone();
        }
        self.from_matrix(&x)
    }
}

/// 𝔰𝔩_m(ℝ) with its diagonal split Cartan subspace and `θ(X) = -Xᵀ`.
pub fn build_sl(m: usize) -> Result<RestrictedRootSystem> {
    if m < 2 {
        return Err(Error::UnknownAlgebra(format!("sl:{m}")));
    }
    let basis = SlBasis::new(m);
    let n = basis.dim();
    let mats: Vec<Matrix> = (0..n).map(|i| basis.to_matrix(&crate::exact::unit_vec(n, i))).collect();
    let alg = LieAlgebra::from_brackets(basis.labels(), |i, j| {
        let c = mats[i].mul(&mats[j]).sub(&mats[j].mul(&mats[i]));
        basis.from_matrix(&c).expect("commutator is traceless")
    })?;
    let mut theta = Matrix::zeros(n, n);
    for k in 0..m - 1 {
        theta[(k, k)] = int(-1);
    }
    for &(i, j) in &basis.pairs {
        theta[(basis.e(j, i), basis.e(i, j))] = int(-1);
    }
    let cartan: Vec<Vector> = (0..m - 1).map(|k| crate::exact::unit_vec(n, k)).collect();
    decompose(&alg, &cartan, &theta, Frame::Sl { m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    #[test]
    fn killing_is_2m_trace() {
        for m in 2..=4 {
            let sys = build_sl(m).unwrap();
            let b = SlBasis::new(m);
            let n = b.dim();
            let g = sys.algebra();
            for i in 0..n {
                for j in 0..n {
                    let (x, y) = (b.to_matrix(&crate::exact::unit_vec(n, i)), b.to_matrix(&crate::exact::unit_vec(n, j)));
                    let oracle = int(2 * m as i64) * x.mul(&y).trace();
                    assert_eq!(g.killing_matrix()[(i, j)], oracle);
                }
            }
        }
    }

    #[test]
    fn root_data_of_sl4() {
        let sys = build_sl(4).unwrap();
        assert_eq!(sys.roots().len(), 12);
        assert!(sys.is_split());
        let labels: Vec<&str> = sys.simple_roots().iter().map(|&s| sys.root(s).label.as_str()).collect();
        assert_eq!(labels, ["e1-e2", "e2-e3", "e3-e4"]);
        assert_eq!(sys.root(sys.highest_root().unwrap()).label, "e1-e4");
        let a = sys.frame().from_eps_ints(&[1, -1, 0, 0]).unwrap();
        assert_eq!(sys.inner(&a, &a), frac(1, 4));
    }

    #[test]
    fn matrix_round_trip() {
        let b = SlBasis::new(3);
        let v: Vector = (0..8).map(|i| int(i - 3)).collect();
        assert_eq!(b.from_matrix(&b.to_matrix(&v)).unwrap(), v);
    }
}
