use super::Quaternion;
use crate::error::{Error, Result};
use crate::exact::{int, CoordinateMap, Matrix, Scalar, Vector};
use crate::lie::LieAlgebra;
use crate::roots::{decompose, Frame, RestrictedRootSystem};
use rayon::prelude::*;

/// Quaternionic `N x N` matrices, `N = m + n + 2`, realised in `Q^{4N²}`.
///
/// The algebra is `{X : JX skew-Hermitian}` with `J` the antidiagonal swap of
/// the first and last index and `diag(1^m, (-1)^n)` in between.
#[derive(Clone, Debug)]
pub struct QuaternionicBasis {
    pub m: usize,
    pub n: usize,
}

type QMatrix = Vec<Quaternion>;

impl QuaternionicBasis {
    pub fn size(&self) -> usize {
        self.m + self.n + 2
    }

    fn zero_matrix(&self) -> QMatrix {
        vec![Quaternion::zero(); self.size() * self.size()]
    }

    fn mul(&self, a: &QMatrix, b: &QMatrix) -> QMatrix {
        let s = self.size();
        let mut out = self.zero_matrix();
        for r in 0..s {
            for k in 0..s {
                let x = &a[r * s + k];
                if x.is_zero() {
                    continue;
                }
                for c in 0..s {
                    let y = &b[k * s + c];
                    if !y.is_zero() {
                        out[r * s + c] = &out[r * s + c] + &(x * y);
                    }
                }
            }
        }
        out
    }

    fn commutator(&self, a: &QMatrix, b: &QMatrix) -> QMatrix {
        self.mul(a, b).iter().zip(self.mul(b, a).iter()).map(|(x, y)| x - y).collect()
    }

    fn flatten(&self, a: &QMatrix) -> Vector {
        a.iter().flat_map(|q| q.0.iter().cloned()).collect()
    }

    fn unflatten(&self, v: &[Scalar]) -> QMatrix {
        v.chunks(4).map(|c| Quaternion([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])).collect()
    }

    fn j_sign(&self, r: usize) -> Scalar {
        if r <= self.m {
            int(1)
        } else {
            int(-1)
        }
    }

    /// `J Y`: swaps the first and last rows and negates the n-block rows.
    fn apply_j(&self, y: &QMatrix) -> QMatrix {
        let s = self.size();
        let mut out = self.zero_matrix();
        for c in 0..s {
            out[c] = y[(s - 1) * s + c].clone();
            out[(s - 1) * s + c] = y[c].clone();
            for r in 1..s - 1 {
                let q = &y[r * s + c];
                out[r * s + c] = if self.j_sign(r) == int(1) { q.clone() } else { -q };
            }
        }
        out
    }

    /// `-X^*`
    fn theta(&self, x: &QMatrix) -> QMatrix {
        let s = self.size();
        let mut out = self.zero_matrix();
        for r in 0..s {
            for c in 0..s {
                out[r * s + c] = -&x[c * s + r].conj();
            }
        }
        out
    }

    fn entry(&self, pairs: &[(usize, usize, Quaternion)]) -> QMatrix {
        let s = self.size();
        let mut out = self.zero_matrix();
        for (r, c, q) in pairs {
            out[r * s + c] = &out[r * s + c] + q;
        }
        out
    }

    /// 𝔞 basis: `A_0 = E_11 - E_NN` and `A_l` coupling m-slot `l` with n-slot `l`.
    fn cartan(&self) -> Vec<QMatrix> {
        let s = self.size();
        let one = Quaternion::real(int(1));
        let mut out = vec![self.entry(&[(0, 0, one.clone()), (s - 1, s - 1, -&one)])];
        for l in 1..=self.m {
            out.push(self.entry(&[(l, self.m + l, one.clone()), (self.m + l, l, one.clone())]));
        }
        out
    }

    /// Generators of 𝔤_{ε0-ε1}, one per unit `q ∈ {1, i, j, k}`.
    fn eta_e0_minus_e1(&self, q: &Quaternion) -> QMatrix {
        let s = self.size();
        let (a, b) = (1, self.m + 1);
        self.entry(&[(0, a, q.clone()), (0, b, q.clone()), (a, s - 1, -&q.conj()), (b, s - 1, q.conj())])
    }

    /// Generators of 𝔤_{-2ε1}, one per imaginary unit `q ∈ {i, j, k}`.
    fn eta_minus_2e1(&self, q: &Quaternion) -> QMatrix {
        let (a, b) = (1, self.m + 1);
        self.entry(&[(a, a, q.clone()), (a, b, q.clone()), (b, a, -q), (b, b, -q)])
    }

    fn skew_hermitian_basis(&self) -> Vec<(String, QMatrix)> {
        let s = self.size();
        let mut out = Vec::new();
        for r in 0..s {
            for u in ["i", "j", "k"] {
                let q = Quaternion::unit(u).expect("unit");
                out.push((format!("D{}{}", r + 1, u), self.entry(&[(r, r, q)])));
            }
        }
        for r in 0..s {
            for c in r + 1..s {
                for u in ["1", "i", "j", "k"] {
                    let q = Quaternion::unit(u).expect("unit");
                    out.push((format!("S{}{}{}", r + 1, c + 1, u), self.entry(&[(r, c, q.clone()), (c, r, -&q.conj())])));
                }
            }
        }
        out
    }
}

struct Realised {
    labels: Vec<String>,
    matrices: Vec<Vector>,
    coords: CoordinateMap,
}

impl Realised {
    fn algebra(&self, qb: &QuaternionicBasis) -> Result<LieAlgebra> {
        let n = self.matrices.len();
        let table: Vec<Vector> = (0..n * n)
            .into_par_iter()
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                if j <= i {
                    return Vec::new();
                }
                let c = qb.commutator(&qb.unflatten(&self.matrices[i]), &qb.unflatten(&self.matrices[j]));
                self.coords.coordinates(&qb.flatten(&c)).expect("closed under commutator")
            })
            .collect();
        LieAlgebra::from_brackets(self.labels.clone(), |i, j| table[i * n + j].clone())
    }

    fn theta(&self, qb: &QuaternionicBasis) -> Matrix {
        let n = self.matrices.len();
        let mut t = Matrix::zeros(n, n);
        for (c, x) in self.matrices.iter().enumerate() {
            let img = self.coords.coordinates(&qb.flatten(&qb.theta(&qb.unflatten(x)))).expect("θ preserves 𝔤");
            for (r, v) in img.into_iter().enumerate() {
                t[(r, c)] = v;
            }
        }
        t
    }

    fn new(labels: Vec<String>, matrices: Vec<Vector>, ambient: usize) -> Result<Self> {
        let coords = CoordinateMap::new(&matrices, ambient)?;
        Ok(Realised { labels, matrices, coords })
    }
}

/// The quaternionic contact algebra for signature `(m, n)`, `m ≤ n`, with the
/// restricted root data of its `C_{m+1}` system.
///
/// Root spaces of `ε0-ε1` and `-2ε1` use the generators above, with units
/// named `1, i, j, k` and `i, j, k`.
pub fn build_quaternionic(m: usize, n: usize) -> Result<RestrictedRootSystem> {
    if m == 0 || m > n {
        return Err(Error::UnknownAlgebra(format!("qc:{m},{n}")));
    }
    let qb = QuaternionicBasis { m, n };
    let s = qb.size();
    let ambient = 4 * s * s;
    let (labels, mats): (Vec<String>, Vec<Vector>) = qb
        .skew_hermitian_basis()
        .into_iter()
        .map(|(l, y)| (l, qb.flatten(&qb.apply_j(&y))))
        .unzip();
    let raw = Realised::new(labels, mats, ambient)?;
    let raw_alg = raw.algebra(&qb)?;
    let cartan_raw: Vec<Vector> = qb
        .cartan()
        .iter()
        .map(|a| raw.coords.coordinates(&qb.flatten(a)).ok_or(Error::RootSystem("𝔞 not in 𝔤".into())))
        .collect::<Result<_>>()?;
    let frame = Frame::Quaternionic { m };
    let first = decompose(&raw_alg, &cartan_raw, &raw.theta(&qb), frame)?;

    // Adapted basis in ambient coordinates, substituting the named generators.
    let to_ambient = |v: &Vector| crate::lie::combine(v, &raw.matrices, ambient);
    let mut labels = Vec::new();
    let mut mats: Vec<Vector> = Vec::new();
    for &i in first.zero_space() {
        mats.push(to_ambient(&first.input_basis()[i]));
        labels.push(if i <= m { format!("A{i}") } else { format!("M{}", i - m - 1) });
    }
    let mut e0_e1 = vec![0i64; m + 1];
    e0_e1[0] = 1;
    e0_e1[1] = -1;
    let mut m2e1 = vec![0i64; m + 1];
    m2e1[1] = -2;
    let named = [
        (frame.from_eps_ints(&e0_e1)?, vec!["1", "i", "j", "k"]),
        (frame.from_eps_ints(&m2e1)?, vec!["i", "j", "k"]),
    ];
    for root in first.roots() {
        let space: Vec<Vector> = root.space.iter().map(|&i| to_ambient(&first.input_basis()[i])).collect();
        match named.iter().find(|(c, _)| *c == root.covector) {
            Some((c, units)) => {
                let span = crate::exact::Subspace::span(ambient, space.clone());
                for u in units {
                    let q = Quaternion::unit(u).expect("unit");
                    let eta = if c == &named[0].0 { qb.eta_e0_minus_e1(&q) } else { qb.eta_minus_2e1(&q) };
                    let v = qb.flatten(&eta);
                    if !span.contains(&v) {
                        return Err(Error::RootSystem(format!("generator for {} misplaced", root.label)));
                    }
                    mats.push(v);
                    labels.push(format!("η[{}]{}", root.label, u));
                }
                if units.len() != space.len() {
                    return Err(Error::RootSystem(format!("multiplicity of {} is {}", root.label, space.len())));
                }
            }
            None => {
                for (u, v) in space.into_iter().enumerate() {
                    mats.push(v);
                    labels.push(format!("X[{}]{}", root.label, u));
                }
            }
        }
    }
    let fin = Realised::new(labels, mats, ambient)?;
    let alg = fin.algebra(&qb)?;
    let cartan: Vec<Vector> = (0..=m).map(|k| crate::exact::unit_vec(alg.dim(), k)).collect();
    let mut sys = decompose(&alg, &cartan, &fin.theta(&qb), frame)?;
    for (c, units) in &named {
        let r = sys.find_root(c).expect("named root present");
        sys.set_units(r, units.iter().map(|u| u.to_string()).collect());
    }
    debug_assert_eq!(sys.dim(), s * (2 * s + 1));
    Ok(sys)
}
