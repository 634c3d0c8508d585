//! Restricted root decomposition with respect to a split Cartan subspace.
//!
//! [`decompose`] diagonalises `ad 𝔞`, rebases the algebra so that every basis
//! vector lies in a single restricted root space (or the zero space), and
//! fixes positivity, canonical ordering and simple roots.

use crate::error::{Error, Result};
use crate::exact::{
    format_scalar, frac, int, is_zero_vec, kernel, one, zero, zero_vec, CoordinateMap, Matrix,
    Scalar, Subspace, Vector,
};
use crate::lie::LieAlgebra;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A linear functional on 𝔞, stored by its values on the 𝔞 basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Covector(pub Vec<Scalar>);

impl fmt::Debug for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::exact::format_vector(&self.0))
    }
}

impl Covector {
    pub fn zero(rank: usize) -> Self {
        Covector(zero_vec(rank))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.0)
    }

    pub fn scale(&self, c: &Scalar) -> Covector {
        Covector(self.0.iter().map(|x| x * c).collect())
    }

    /// Value on an element of 𝔞 given in 𝔞-coordinates.
    pub fn apply(&self, a: &[Scalar]) -> Scalar {
        crate::exact::dot(&self.0, a)
    }
}

impl Add for &Covector {
    type Output = Covector;
    fn add(self, o: &Covector) -> Covector {
        Covector(crate::exact::add(&self.0, &o.0))
    }
}

impl Sub for &Covector {
    type Output = Covector;
    fn sub(self, o: &Covector) -> Covector {
        Covector(crate::exact::sub(&self.0, &o.0))
    }
}

impl Neg for &Covector {
    type Output = Covector;
    fn neg(self) -> Covector {
        Covector(crate::exact::neg(&self.0))
    }
}

/// Coordinates used to name covectors.
///
/// `Sl` uses `ε_1 .. ε_m` on the diagonal of 𝔰𝔩_m with representatives
/// normalised to coordinate sum zero. `Quaternionic` uses `ε_0 .. ε_m`, one
/// per 𝔞 basis vector. `Cartan` uses raw 𝔞-coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    Sl { m: usize },
    Quaternionic { m: usize },
    Cartan { rank: usize },
}

impl Frame {
    pub fn rank(&self) -> usize {
        match *self {
            Frame::Sl { m } => m - 1,
            Frame::Quaternionic { m } => m + 1,
            Frame::Cartan { rank } => rank,
        }
    }

    pub fn eps_len(&self) -> usize {
        match *self {
            Frame::Sl { m } => m,
            _ => self.rank(),
        }
    }

    /// Index printed for the first ε coordinate.
    pub fn first_index(&self) -> usize {
        match self {
            Frame::Sl { .. } => 1,
            _ => 0,
        }
    }

    pub fn to_eps(&self, nu: &Covector) -> Vec<Scalar> {
        match *self {
            Frame::Sl { m } => {
                // ν(H_k) = c_k - c_{k+1}, so c_k = c_1 - (ν_1 + .. + ν_{k-1}).
                let mut partial = zero();
                let mut offsets = vec![zero()];
                for v in &nu.0 {
                    partial += v;
                    offsets.push(partial.clone());
                }
                let c1: Scalar = offsets.iter().sum::<Scalar>() / int(m as i64);
                offsets.iter().map(|o| &c1 - o).collect()
            }
            _ => nu.0.clone(),
        }
    }

    pub fn from_eps(&self, eps: &[Scalar]) -> Result<Covector> {
        if eps.len() != self.eps_len() {
            return Err(Error::DimensionMismatch { expected: self.eps_len(), found: eps.len() });
        }
        Ok(match self {
            Frame::Sl { .. } => Covector(eps.windows(2).map(|w| &w[0] - &w[1]).collect()),
            _ => Covector(eps.to_vec()),
        })
    }

    pub fn from_eps_ints(&self, eps: &[i64]) -> Result<Covector> {
        self.from_eps(&eps.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    /// Sort key for the canonical root order (ascending).
    fn order_key(&self, eps: &[Scalar]) -> Vec<Scalar> {
        if let Frame::Sl { .. } = self {
            let pos = eps.iter().position(|x| *x == one());
            let negp = eps.iter().position(|x| *x == -one());
            let nonzero = eps.iter().filter(|x| !x.is_zero()).count();
            if let (Some(i), Some(j), 2) = (pos, negp, nonzero) {
                return vec![int(i as i64), int(j as i64)];
            }
        }
        eps.iter().map(|x| -x).collect()
    }

    pub fn label(&self, nu: &Covector) -> String {
        let eps = self.to_eps(nu);
        let base = self.first_index();
        let mut out = String::new();
        for (i, c) in eps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
            let coeff = if mag == one() { String::new() } else { format_scalar(&mag) };
            let name = match self {
                Frame::Cartan { .. } => "a",
                _ => "e",
            };
            out.push_str(&format!("{sign}{coeff}{name}{}", i + base));
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// A restricted root with its root space.
#[derive(Clone, Debug)]
pub struct Root {
    pub covector: Covector,
    pub eps: Vec<Scalar>,
    pub label: String,
    /// Basis indices spanning the root space.
    pub space: Vec<usize>,
    /// Names of the root space basis vectors, used by seed descriptions.
    pub units: Vec<String>,
    pub positive: bool,
}

impl Root {
    pub fn multiplicity(&self) -> usize {
        self.space.len()
    }
}

/// Restricted root decomposition `𝔤 = 𝔤_0 ⊕ ⊕ 𝔤_α` in an adapted basis.
///
/// Basis vectors `0 .. rank` span 𝔞, the remaining zero-space vectors follow,
/// then the root spaces in canonical order.
#[derive(Debug)]
pub struct RestrictedRootSystem {
    algebra: LieAlgebra,
    theta: Matrix,
    frame: Frame,
    zero_space: Vec<usize>,
    roots: Vec<Root>,
    lookup: HashMap<Covector, usize>,
    basis_root: Vec<Option<usize>>,
    gram: Matrix,
    gram_inv: Matrix,
    simple: Vec<usize>,
    input_basis: Vec<Vector>,
}

/// Eigen-decomposition of a diagonalisable rational operator.
pub fn rational_eigenspaces(op: &Matrix) -> Result<Vec<(Scalar, Vec<Vector>)>> {
    let n = op.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let poly = minimal_polynomial(op);
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in rational_roots(&poly)? {
        let mut shifted = op.clone();
        for i in 0..n {
            shifted[(i, i)] -= &lambda;
        }
        let k = kernel(&shifted);
        total += k.len();
        out.push((lambda, k));
    }
    if total != n {
        return Err(Error::NotSimultaneouslyDiagonalizable);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Monic minimal polynomial, coefficients from the constant term upward.
fn minimal_polynomial(op: &Matrix) -> Vec<Scalar> {
    let n = op.rows();
    let flat = |m: &Matrix| -> Vector { (0..n).flat_map(|r| m.row(r).to_vec()).collect() };
    let mut powers = vec![flat(&Matrix::identity(n))];
    let mut span = Subspace::span(n * n, powers.clone());
    let mut p = Matrix::identity(n);
    loop {
        p = p.mul(op);
        let f = flat(&p);
        if !span.push(f.clone()) {
            powers.push(f);
            let relation = kernel(&Matrix::from_cols(&powers, n * n).expect("equal lengths"));
            let r = &relation[0];
            let lead = r.last().expect("nonempty").clone();
            return r.iter().map(|c| c / &lead).collect();
        }
        powers.push(f);
    }
}

fn divisors(n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn rational_roots(poly: &[Scalar]) -> Result<Vec<Scalar>> {
    let lcm = poly.iter().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<num_bigint::BigInt> = poly.iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let shift = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut roots = Vec::new();
    if shift > 0 {
        roots.push(zero());
    }
    let low = ints[shift].abs().to_u128().ok_or(Error::NotSimultaneouslyDiagonalizable)?;
    let high = ints.last().expect("nonempty").abs().to_u128().ok_or(Error::NotSimultaneouslyDiagonalizable)?;
    if low > 1 << 40 || high > 1 << 40 {
        return Err(Error::NotSimultaneouslyDiagonalizable);
    }
    let eval = |x: &Scalar| {
        let mut acc = zero();
        for c in poly.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for p in divisors(low) {
        for q in divisors(high) {
            for s in [1i64, -1] {
                let x = frac(s * p as i64, q as i64);
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    Ok(roots)
}

/// Sorts vectors into a basis: unit vectors first keep their labels.
struct Rebase {
    vectors: Vec<Vector>,
    labels: Vec<String>,
}

impl Rebase {
    fn push(&mut self, v: Vector, old: &LieAlgebra, fallback: String) {
        let label = unit_index(&v).map(|i| old.label(i).to_string()).unwrap_or(fallback);
        self.vectors.push(v);
        self.labels.push(label);
    }
}

fn unit_index(v: &[Scalar]) -> Option<usize> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    (nz.len() == 1 && v[nz[0]] == one()).then(|| nz[0])
}

/// Decomposes `alg` under the split Cartan subspace spanned by `cartan`.
///
/// `theta` must be a Cartan involution acting by `-1` on 𝔞. The result is
/// rebased onto an adapted basis; see [`RestrictedRootSystem`].
pub fn decompose(alg: &LieAlgebra, cartan: &[Vector], theta: &Matrix, frame: Frame) -> Result<RestrictedRootSystem> {
    let n = alg.dim();
    let rank = cartan.len();
    if rank != frame.rank() {
        return Err(Error::DimensionMismatch { expected: frame.rank(), found: rank });
    }
    if theta.rows() != n || theta.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: theta.rows() });
    }
    for i in 0..rank {
        for j in i + 1..rank {
            if !is_zero_vec(&alg.bracket(&cartan[i], &cartan[j])) {
                return Err(Error::NotAbelian);
            }
        }
    }
    // Simultaneous refinement: (weight prefix, basis of joint eigenspace).
    let mut pieces: Vec<(Vec<Scalar>, Vec<Vector>)> =
        vec![(Vec::new(), (0..n).map(|i| crate::exact::unit_vec(n, i)).collect())];
    for h in cartan {
        let mut next = Vec::new();
        for (prefix, basis) in pieces {
            let coords = CoordinateMap::new(&basis, n)?;
            let d = basis.len();
            let mut op = Matrix::zeros(d, d);
            for (c, v) in basis.iter().enumerate() {
                let img = coords
                    .coordinates(&alg.bracket(h, v))
                    .ok_or(Error::NotSimultaneouslyDiagonalizable)?;
                for (r, x) in img.into_iter().enumerate() {
                    op[(r, c)] = x;
                }
            }
            for (lambda, vecs) in rational_eigenspaces(&op)? {
                let ambient: Vec<Vector> = vecs
                    .iter()
                    .map(|k| crate::lie::combine(k, &basis, n))
                    .collect();
                let mut w = prefix.clone();
                w.push(lambda);
                next.push((w, ambient));
            }
        }
        pieces = next;
    }

    let mut zero_vectors = Vec::new();
    let mut root_pieces = Vec::new();
    for (w, basis) in pieces {
        let cov = Covector(w);
        if cov.is_zero() {
            zero_vectors = basis;
        } else {
            let eps = frame.to_eps(&cov);
            root_pieces.push((frame.order_key(&eps), cov, eps, basis));
        }
    }
    root_pieces.sort_by(|a, b| a.0.cmp(&b.0));

    // Zero space: 𝔞 first, then a complement, preferring θ-fixed vectors.
    let zero_space = Subspace::span(n, zero_vectors.clone());
    let a_space = Subspace::span(n, cartan.to_vec());
    if a_space.dim() != rank || !zero_space.contains_subspace(&a_space) {
        return Err(Error::RootSystem("Cartan vectors are dependent or not self-centralising".into()));
    }
    let mut rebase = Rebase { vectors: Vec::new(), labels: Vec::new() };
    let mut span = Subspace::zero(n);
    for (k, h) in cartan.iter().enumerate() {
        span.push(h.clone());
        rebase.push(h.clone(), alg, format!("A{k}"));
    }
    let mut candidates: Vec<Vector> = zero_vectors.iter().filter(|v| &theta.mul_vec(v) == *v).cloned().collect();
    candidates.extend(
        zero_vectors
            .iter()
            .map(|v| crate::exact::add(v, &theta.mul_vec(v)))
            .filter(|v| !is_zero_vec(v)),
    );
    candidates.extend(zero_vectors.iter().cloned());
    let mut m_count = 0;
    for v in candidates {
        if span.push(v.clone()) {
            rebase.push(v, alg, format!("M{m_count}"));
            m_count += 1;
        }
    }
    let zero_indices: Vec<usize> = (0..span.dim()).collect();

    let mut roots = Vec::new();
    for (_, cov, eps, basis) in root_pieces {
        let label = frame.label(&cov);
        let mut space = Vec::new();
        for (u, v) in basis.into_iter().enumerate() {
            space.push(rebase.vectors.len());
            rebase.push(v, alg, format!("X[{label}]{u}"));
        }
        let positive = eps.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive());
        let units = (0..space.len()).map(|u| u.to_string()).collect();
        roots.push(Root { covector: cov, eps, label, space, units, positive });
    }
    if rebase.vectors.len() != n {
        return Err(Error::NotSimultaneouslyDiagonalizable);
    }

    let input_basis = rebase.vectors.clone();
    let identity = (0..n).all(|i| unit_index(&rebase.vectors[i]) == Some(i));
    let (algebra, theta) = if identity {
        (alg.clone().with_labels(rebase.labels), theta.clone())
    } else {
        let new = alg.change_basis(&rebase.vectors, rebase.labels)?;
        let b = Matrix::from_cols(&rebase.vectors, n)?;
        let b_inv = b.inverse().ok_or(Error::NotSimultaneouslyDiagonalizable)?;
        (new, b_inv.mul(theta).mul(&b))
    };
    let mut sys = RestrictedRootSystem::assemble(algebra, theta, frame, zero_indices, roots)?;
    sys.input_basis = input_basis;
    Ok(sys)
}

impl RestrictedRootSystem {
    fn assemble(algebra: LieAlgebra, theta: Matrix, frame: Frame, zero_space: Vec<usize>, roots: Vec<Root>) -> Result<Self> {
        let n = algebra.dim();
        let rank = frame.rank();
        let killing = algebra.killing_matrix();
        let mut gram = Matrix::zeros(rank, rank);
        for i in 0..rank {
            for j in 0..rank {
                gram[(i, j)] = killing[(i, j)].clone();
            }
        }
        let gram_inv = gram.inverse().ok_or(Error::DegenerateForm)?;
        let mut basis_root = vec![None; n];
        let mut lookup = HashMap::new();
        for (r, root) in roots.iter().enumerate() {
            lookup.insert(root.covector.clone(), r);
            for &i in &root.space {
                basis_root[i] = Some(r);
            }
        }
        let mut sys = RestrictedRootSystem {
            algebra,
            theta,
            frame,
            zero_space,
            roots,
            lookup,
            basis_root,
            gram,
            gram_inv,
            simple: Vec::new(),
            input_basis: Vec::new(),
        };
        sys.simple = sys.compute_simple();
        sys.validate()?;
        Ok(sys)
    }

    fn compute_simple(&self) -> Vec<usize> {
        let pos: Vec<usize> = self.positive_roots().collect();
        pos.iter()
            .copied()
            .filter(|&r| {
                let c = &self.roots[r].covector;
                !pos.iter().any(|&a| {
                    let rest = c - &self.roots[a].covector;
                    self.find_root(&rest).is_some_and(|b| self.roots[b].positive)
                })
            })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let rank = self.rank();
        let n = self.dim();
        let fail = |m: String| Err(Error::RootSystem(m));
        if self.theta.mul(&self.theta) != Matrix::identity(n) {
            return fail("θ is not an involution".into());
        }
        for k in 0..rank {
            let e = crate::exact::unit_vec(n, k);
            if self.theta.mul_vec(&e) != crate::exact::neg(&e) {
                return fail("θ does not act by -1 on 𝔞".into());
            }
        }
        for root in &self.roots {
            let Some(opp) = self.find_root(&-&root.covector) else {
                return fail(format!("-{} is not a root", root.label));
            };
            let target = Subspace::span(n, self.roots[opp].space.iter().map(|&i| crate::exact::unit_vec(n, i)));
            for &i in &root.space {
                if !target.contains(&self.theta.col(i)) {
                    return fail(format!("θ does not map 𝔤_{} to 𝔤_-{}", root.label, root.label));
                }
            }
            if self.inner(&root.covector, &root.covector).is_zero() {
                return Err(Error::IsotropicRoot(root.label.clone()));
            }
        }
        if self.simple.len() != rank {
            return fail(format!("found {} simple roots for rank {rank}", self.simple.len()));
        }
        for r in self.positive_roots() {
            let c = self.simple_coordinates(&self.roots[r].covector)?;
            if c.iter().any(|x| !x.is_integer() || x.is_negative()) {
                return fail(format!("{} is not a nonnegative integral combination of simple roots", self.roots[r].label));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Basis vectors in the coordinates of the algebra given to [`decompose`].
    pub fn input_basis(&self) -> &[Vector] {
        &self.input_basis
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn rank(&self) -> usize {
        self.frame.rank()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, r: usize) -> &Root {
        &self.roots[r]
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(|&r| self.roots[r].positive)
    }

    pub fn zero_space(&self) -> &[usize] {
        &self.zero_space
    }

    /// Simple roots as root indices in canonical order.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn find_root(&self, nu: &Covector) -> Option<usize> {
        self.lookup.get(nu).copied()
    }

    pub fn is_root(&self, nu: &Covector) -> bool {
        self.lookup.contains_key(nu)
    }

    pub fn root_of_basis(&self, i: usize) -> Option<usize> {
        self.basis_root[i]
    }

    pub fn weight_of_basis(&self, i: usize) -> Covector {
        match self.basis_root[i] {
            Some(r) => self.roots[r].covector.clone(),
            None => Covector::zero(self.rank()),
        }
    }

    pub fn covector_from_eps(&self, eps: &[Scalar]) -> Result<Covector> {
        self.frame.from_eps(eps)
    }

    pub fn root_from_eps(&self, eps: &[Scalar]) -> Result<usize> {
        let c = self.frame.from_eps(eps)?;
        self.find_root(&c).ok_or_else(|| Error::NotARoot(self.frame.label(&c)))
    }

    pub fn label(&self, nu: &Covector) -> String {
        self.frame.label(nu)
    }

    /// Replaces the unit names of a root space.
    pub fn set_units(&mut self, root: usize, units: Vec<String>) {
        assert_eq!(units.len(), self.roots[root].space.len());
        self.roots[root].units = units;
    }

    pub fn basis_by_unit(&self, root: usize, unit: &str) -> Option<usize> {
        let r = &self.roots[root];
        r.units.iter().position(|u| u == unit).map(|p| r.space[p])
    }

    /// Gram matrix of κ on the 𝔞 basis.
    pub fn cartan_gram(&self) -> &Matrix {
        &self.gram
    }

    /// κ(ν₁^κ, ν₂^κ).
    pub fn inner(&self, a: &Covector, b: &Covector) -> Scalar {
        self.gram_inv.bilinear(&a.0, &b.0)
    }

    /// `ν^κ` in 𝔞-coordinates.
    pub fn dual_a(&self, nu: &Covector) -> Vector {
        self.gram_inv.mul_vec(&nu.0)
    }

    /// `ν^κ` as an element of 𝔤.
    pub fn dual(&self, nu: &Covector) -> Vector {
        self.embed_a(&self.dual_a(nu))
    }

    /// 𝔞-coordinates to 𝔤-coordinates.
    pub fn embed_a(&self, a: &[Scalar]) -> Vector {
        let mut v = zero_vec(self.dim());
        v[..a.len()].clone_from_slice(a);
        v
    }

    /// 𝔞-coordinates of `x`, or `None` if `x ∉ 𝔞`.
    pub fn a_coords(&self, x: &[Scalar]) -> Option<Vector> {
        let r = self.rank();
        x[r..].iter().all(Zero::is_zero).then(|| x[..r].to_vec())
    }

    /// Covector `κ(h, ·)|_𝔞` for `h ∈ 𝔞` in 𝔞-coordinates.
    pub fn lower_a(&self, h: &[Scalar]) -> Covector {
        Covector(self.gram.mul_vec(h))
    }

    pub fn reflect(&self, alpha: &Covector, nu: &Covector) -> Covector {
        let c = int(2) * self.inner(alpha, nu) / self.inner(alpha, alpha);
        nu - &alpha.scale(&c)
    }

    /// Coordinates of `ν` in the basis of simple roots.
    pub fn simple_coordinates(&self, nu: &Covector) -> Result<Vector> {
        let rows: Vec<Vector> = self.simple.iter().map(|&s| self.roots[s].covector.0.clone()).collect();
        let m = Matrix::from_rows(&rows, self.rank())?.transpose();
        Ok(crate::exact::solve_affine(&m, &nu.0)?.particular)
    }

    /// Positive root `μ` with `μ + α ∉ Δ` for every simple `α`.
    pub fn highest_root(&self) -> Option<usize> {
        self.positive_roots().find(|&r| {
            self.simple
                .iter()
                .all(|&s| !self.is_root(&(&self.roots[r].covector + &self.roots[s].covector)))
        })
    }

    /// Whether every root space is one dimensional and the zero space is 𝔞.
    pub fn is_split(&self) -> bool {
        self.zero_space.len() == self.rank() && self.roots.iter().all(|r| r.space.len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenspaces_of_diagonal() {
        let rows = vec![vec![int(2), int(0)], vec![int(0), frac(-1, 2)]];
        let e = rational_eigenspaces(&Matrix::from_rows(&rows, 2).unwrap()).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].0, frac(-1, 2));
    }

    #[test]
    fn nilpotent_is_rejected() {
        let rows = vec![vec![int(0), int(1)], vec![int(0), int(0)]];
        assert_eq!(
            rational_eigenspaces(&Matrix::from_rows(&rows, 2).unwrap()),
            Err(Error::NotSimultaneouslyDiagonalizable)
        );
    }

    #[test]
    fn irrational_spectrum_is_rejected() {
        let rows = vec![vec![int(0), int(2)], vec![int(1), int(0)]];
        assert!(rational_eigenspaces(&Matrix::from_rows(&rows, 2).unwrap()).is_err());
    }

    #[test]
    fn sl_frame_round_trip() {
        let f = Frame::Sl { m: 4 };
        let c = f.from_eps_ints(&[0, 1, -1, 0]).unwrap();
        assert_eq!(f.to_eps(&c), vec![int(0), int(1), int(-1), int(0)]);
        assert_eq!(f.label(&c), "e2-e3");
        let w = f.from_eps_ints(&[-1, 3, -1, -1]).unwrap();
        assert_eq!(f.label(&w), "-e1+3e2-e3-e4");
    }
}
