//! Finite-dimensional real Lie algebras given by rational structure constants.

use crate::error::{Error, Result};
use crate::exact::{
    axpy, format_scalar, is_zero_vec, kernel, parse_scalar, zero_vec, CoordinateMap, Matrix,
    Scalar, Subspace, Vector,
};
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Sparse vector as `(index, coefficient)` pairs with nonzero coefficients.
pub type Sparse = Vec<(usize, Scalar)>;

pub fn to_sparse(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// A Lie algebra with basis `e_0 .. e_{n-1}` and `[e_i, e_j] = sum_k c_ij^k e_k`.
#[derive(Debug)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: Vec<Sparse>,
    killing: OnceLock<Matrix>,
}

impl Clone for LieAlgebra {
    fn clone(&self) -> Self {
        LieAlgebra { labels: self.labels.clone(), table: self.table.clone(), killing: OnceLock::new() }
    }
}

impl LieAlgebra {
    /// Builds the algebra from brackets of basis pairs `i < j`, completing by
    /// antisymmetry, and verifies the Jacobi identity on every basis triple.
    pub fn from_brackets(labels: Vec<String>, mut bracket: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![Sparse::new(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = bracket(i, j);
                if v.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: v.len() });
                }
                let s = to_sparse(&v);
                table[j * n + i] = s.iter().map(|(k, c)| (*k, -c)).collect();
                table[i * n + j] = s;
            }
        }
        let alg = LieAlgebra { labels, table, killing: OnceLock::new() };
        if let Some((i, j, k)) = alg.jacobi_witness() {
            return Err(Error::JacobiViolation { i, j, k });
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Renames the basis vectors.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `[e_i, e_j]` as a sparse vector.
    pub fn structure(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i * self.dim() + j]
    }

    /// `[x, e_j]`.
    pub fn bracket_with_basis(&self, x: &[Scalar], j: usize) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in self.structure(i, j) {
                out[*k] += xi * c;
            }
        }
        out
    }

    /// `[x, y]`. Panics if either vector has the wrong length.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "bracket dimension mismatch");
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = self.structure(i, j);
                if s.is_empty() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in s {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    pub fn checked_bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
            }
        }
        Ok(self.bracket(x, y))
    }

    /// Matrix of `ad x` in the basis.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (r, v) in self.bracket_with_basis(x, j).into_iter().enumerate() {
                m[(r, j)] = v;
            }
        }
        m
    }

    /// Gram matrix of the Killing form `tr(ad x ad y)`.
    pub fn killing_matrix(&self) -> &Matrix {
        self.killing.get_or_init(|| {
            let n = self.dim();
            // (ad e_i)_{k l} = c_il^k, so tr(ad e_i ad e_j) = sum_{l,k} c_il^k c_jk^l.
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    let mut t = Scalar::zero();
                    for l in 0..n {
                        for (k, a) in self.structure(i, l) {
                            for (l2, b) in self.structure(j, *k) {
                                if *l2 == l {
                                    t += a * b;
                                }
                            }
                        }
                    }
                    m[(i, j)] = t.clone();
                    m[(j, i)] = t;
                }
            }
            m
        })
    }

    pub fn killing_form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.killing_matrix().bilinear(x, y)
    }

    /// `x_kappa = kappa(x, .)` in the dual basis.
    pub fn lower(&self, x: &[Scalar]) -> Vector {
        self.killing_matrix().mul_vec(x)
    }

    /// The unique `X` with `kappa(X, .) = psi`.
    pub fn killing_dual(&self, psi: &[Scalar]) -> Result<Vector> {
        if psi.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: psi.len() });
        }
        let inv = self.killing_matrix().inverse().ok_or(Error::DegenerateForm)?;
        Ok(inv.mul_vec(psi))
    }

    pub fn is_semisimple(&self) -> bool {
        self.killing_matrix().inverse().is_some()
    }

    /// First basis triple `i < j < k` on which the Jacobi identity fails.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        (0..n).into_par_iter().find_map_first(|i| {
            let mut acc = zero_vec(n);
            for j in i + 1..n {
                for k in j + 1..n {
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, x) in self.structure(a, b) {
                            for (m, y) in self.structure(*l, c) {
                                acc[*m] += x * y;
                            }
                        }
                    }
                    if !is_zero_vec(&acc) {
                        return Some((i, j, k));
                    }
                }
            }
            None
        })
    }

    /// Re-expresses the algebra in a new basis given in old coordinates.
    pub fn change_basis(&self, basis: &[Vector], labels: Vec<String>) -> Result<LieAlgebra> {
        let n = self.dim();
        if basis.len() != n || labels.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: basis.len() });
        }
        let coords = CoordinateMap::new(basis, n)?;
        LieAlgebra::from_brackets(labels, |i, j| {
            coords.coordinates(&self.bracket(&basis[i], &basis[j])).expect("basis spans")
        })
    }

    pub fn is_ad_nilpotent(&self, x: &[Scalar]) -> bool {
        let a = self.ad_matrix(x);
        let mut p = a.clone();
        for _ in 0..self.dim() {
            if p.is_zero() {
                return true;
            }
            p = p.mul(&a);
        }
        p.is_zero()
    }

    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket(x, y);
                if !is_zero_vec(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Centralizer of a set of elements.
    pub fn centralizer(&self, elems: &[Vector]) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for x in elems {
            let ad = self.ad_matrix(x);
            for r in 0..n {
                rows.push(ad.row(r).to_vec());
            }
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        Subspace::span(n, kernel(&Matrix::from_rows(&rows, n).expect("square")))
    }

    /// Text form: a `dim N` header then one `i j k p/q` line per nonzero
    /// `c_ij^k` with `i < j`, all indices 1-based.
    pub fn to_structure_constants(&self) -> String {
        let n = self.dim();
        let mut out = format!("dim {n}\n");
        for i in 0..n {
            for j in i + 1..n {
                for (k, c) in self.structure(i, j) {
                    out.push_str(&format!("{} {} {} {}\n", i + 1, j + 1, k + 1, format_scalar(c)));
                }
            }
        }
        out
    }
}

/// Parses the text form written by [`LieAlgebra::to_structure_constants`].
///
/// Lines may list either `(i, j)` or `(j, i)`; missing partners are filled by
/// antisymmetry and conflicting partners are rejected. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_structure_constants(text: &str) -> Result<LieAlgebra> {
    let mut dim = None;
    let mut entries: BTreeMap<(usize, usize, usize), (Scalar, usize)> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: &str| Error::Parse { line: line_no, message: message.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = dim else {
            if fields.len() != 2 || fields[0] != "dim" {
                return Err(parse_err("expected `dim N` header"));
            }
            let n: usize = fields[1].parse().map_err(|_| parse_err("invalid dimension"))?;
            dim = Some(n);
            continue;
        };
        if fields.len() != 4 {
            return Err(parse_err("expected `i j k p/q`"));
        }
        let mut idx3 = [0usize; 3];
        for (slot, f) in idx3.iter_mut().zip(&fields[..3]) {
            let v: usize = f.parse().map_err(|_| parse_err("invalid index"))?;
            if v == 0 || v > n {
                return Err(parse_err("index out of range"));
            }
            *slot = v - 1;
        }
        let c = parse_scalar(fields[3]).ok_or_else(|| parse_err("invalid rational"))?;
        let [i, j, k] = idx3;
        if i == j {
            if c.is_zero() {
                continue;
            }
            return Err(Error::Antisymmetry { i: i + 1, j: j + 1, line: line_no });
        }
        let (key, val) = if i < j { ((i, j, k), c) } else { ((j, i, k), -c) };
        if let Some((prev, _)) = entries.get(&key) {
            if *prev != val {
                return Err(Error::Antisymmetry { i: i + 1, j: j + 1, line: line_no });
            }
        }
        entries.insert(key, (val, line_no));
    }
    let n = dim.ok_or(Error::Parse { line: 1, message: "missing `dim N` header".into() })?;
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    LieAlgebra::from_brackets(labels, |i, j| {
        let mut v = zero_vec(n);
        for ((_, _, k), (c, _)) in entries.range((i, j, 0)..=(i, j, n)) {
            v[*k] = c.clone();
        }
        v
    })
}

/// Terms of the derived series of a subalgebra, ending when it stabilises.
#[derive(Clone, Debug)]
pub struct DerivedSeries {
    pub terms: Vec<Subspace>,
    pub solvable: bool,
}

pub fn derived_series(alg: &LieAlgebra, s: &Subspace) -> Result<DerivedSeries> {
    if let Some((l, r)) = closure_witness(alg, s) {
        return Err(Error::NotClosed { left: l, right: r });
    }
    let mut terms = vec![s.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        let next = alg.bracket_span(last, last);
        if next.dim() == last.dim() {
            let solvable = next.dim() == 0;
            return Ok(DerivedSeries { terms, solvable });
        }
        let done = next.dim() == 0;
        terms.push(next);
        if done {
            return Ok(DerivedSeries { terms, solvable: true });
        }
    }
}

fn closure_witness(alg: &LieAlgebra, s: &Subspace) -> Option<(usize, usize)> {
    let b = s.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !s.contains(&alg.bracket(&b[i], &b[j])) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Outcome of an ideal test, with a witnessing pair of basis indices.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

/// Whether `[within, s] ⊆ s`. Witness indices refer to the two bases.
pub fn is_ideal(alg: &LieAlgebra, s: &Subspace, within: &Subspace) -> IdealCheck {
    for (i, x) in within.basis().iter().enumerate() {
        for (j, y) in s.basis().iter().enumerate() {
            if !s.contains(&alg.bracket(x, y)) {
                return IdealCheck { holds: false, witness: Some((i, j)) };
            }
        }
    }
    IdealCheck { holds: true, witness: None }
}

/// Linear combination `sum c_i v_i`.
pub fn combine(coeffs: &[Scalar], vectors: &[Vector], dim: usize) -> Vector {
    let mut out = zero_vec(dim);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn sl2() -> LieAlgebra {
        // h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h
        let text = "dim 3\n1 2 2 2\n1 3 3 -2\n2 3 1 1\n";
        parse_structure_constants(text).unwrap()
    }

    #[test]
    fn sl2_killing() {
        let g = sl2();
        let k = g.killing_matrix();
        assert_eq!(k[(0, 0)], int(8));
        assert_eq!(k[(1, 2)], int(4));
        assert_eq!(k[(1, 1)], int(0));
        assert!(g.is_semisimple());
    }

    #[test]
    fn file_round_trip() {
        let g = sl2();
        let h = parse_structure_constants(&g.to_structure_constants()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.structure(i, j), h.structure(i, j));
            }
        }
    }

    #[test]
    fn reversed_pair_is_completed() {
        let g = parse_structure_constants("dim 3\n2 1 2 -2\n1 3 3 -2\n2 3 1 1\n").unwrap();
        assert_eq!(g.structure(0, 1), sl2().structure(0, 1));
    }

    #[test]
    fn antisymmetry_conflict() {
        let err = parse_structure_constants("dim 3\n1 2 2 2\n2 1 2 2\n").unwrap_err();
        assert_eq!(err, Error::Antisymmetry { i: 2, j: 1, line: 3 });
    }

    #[test]
    fn jacobi_violation_detected() {
        // [e1,e2]=e3, [e1,e3]=e1 fails Jacobi on (1,2,3)
        let err = parse_structure_constants("dim 3\n1 2 3 1\n1 3 1 1\n").unwrap_err();
        assert!(matches!(err, Error::JacobiViolation { .. }));
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = parse_structure_constants("dim 3\n1 2 x 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn borel_is_solvable() {
        let g = sl2();
        let b = Subspace::span(3, [vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]]);
        let ds = derived_series(&g, &b).unwrap();
        assert!(ds.solvable);
        assert!(!derived_series(&g, &Subspace::full(3)).unwrap().solvable);
        let bad = Subspace::span(3, [vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]]);
        assert!(matches!(derived_series(&g, &bad), Err(Error::NotClosed { .. })));
        assert!(is_ideal(&g, &Subspace::span(3, [vec![int(0), int(1), int(0)]]), &b).holds);
        assert!(!is_ideal(&g, &b, &Subspace::full(3)).holds);
    }
}
