//! Gradings `𝔤 = 𝔤_{-k} ⊕ … ⊕ 𝔤_k` induced by crossing simple roots.

use crate::error::{Error, Result};
use crate::exact::{int, is_zero_vec, kernel, solve_affine, Matrix, Scalar, Subspace, Vector};
use crate::roots::{Covector, RestrictedRootSystem};
use num_traits::{ToPrimitive, Zero};

/// A parabolic grading together with its root system.
#[derive(Debug)]
pub struct ParabolicGrading {
    system: RestrictedRootSystem,
    crossed: Vec<usize>,
    grading_a: Vector,
    depth: i64,
    basis_grades: Vec<i64>,
    root_grades: Vec<i64>,
    center_a: Vec<Vector>,
    semisimple_a: Vec<Vector>,
}

/// Grades the algebra by crossing the listed simple roots (1-based, in
/// canonical simple-root order).
pub fn grade(system: RestrictedRootSystem, crossed: &[usize]) -> Result<ParabolicGrading> {
    let rank = system.rank();
    if crossed.is_empty() {
        return Err(Error::NotSimple(0));
    }
    let mut crossed = crossed.to_vec();
    crossed.sort_unstable();
    crossed.dedup();
    if let Some(&bad) = crossed.iter().find(|&&c| c == 0 || c > rank) {
        return Err(Error::NotSimple(bad));
    }
    let simple = system.simple_roots();
    let rows: Vec<Vector> = simple.iter().map(|&s| system.root(s).covector.0.clone()).collect();
    let target: Vector = (1..=rank).map(|i| if crossed.contains(&i) { int(1) } else { int(0) }).collect();
    let grading_a = solve_affine(&Matrix::from_rows(&rows, rank)?, &target)?.particular;
    let mut root_grades = Vec::new();
    for (r, root) in system.roots().iter().enumerate() {
        let v = root.covector.apply(&grading_a);
        if !v.is_integer() {
            return Err(Error::NonIntegralGrading(root.space[0]));
        }
        root_grades.push(v.to_integer().to_i64().ok_or(Error::NonIntegralGrading(r))?);
    }
    let basis_grades = (0..system.dim())
        .map(|i| system.root_of_basis(i).map_or(0, |r| root_grades[r]))
        .collect();
    let depth = root_grades.iter().copied().max().unwrap_or(0);

    let g0_rows: Vec<Vector> = system
        .roots()
        .iter()
        .zip(&root_grades)
        .filter(|(_, &g)| g == 0)
        .map(|(r, _)| r.covector.0.clone())
        .collect();
    let center_a = if g0_rows.is_empty() {
        (0..rank).map(|i| crate::exact::unit_vec(rank, i)).collect()
    } else {
        kernel(&Matrix::from_rows(&g0_rows, rank)?)
    };
    let semisimple_a = if center_a.is_empty() {
        (0..rank).map(|i| crate::exact::unit_vec(rank, i)).collect()
    } else {
        let gram = system.cartan_gram();
        let rows: Vec<Vector> = center_a.iter().map(|z| gram.mul_vec(z)).collect();
        kernel(&Matrix::from_rows(&rows, rank)?)
    };
    Ok(ParabolicGrading { system, crossed, grading_a, depth, basis_grades, root_grades, center_a, semisimple_a })
}

impl ParabolicGrading {
    pub fn system(&self) -> &RestrictedRootSystem {
        &self.system
    }

    pub fn crossed(&self) -> &[usize] {
        &self.crossed
    }

    pub fn depth(&self) -> i64 {
        self.depth
    }

    /// `E_gr` in 𝔞-coordinates.
    pub fn grading_element_a(&self) -> &[Scalar] {
        &self.grading_a
    }

    /// `E_gr` in 𝔤-coordinates.
    pub fn grading_element(&self) -> Vector {
        self.system.embed_a(&self.grading_a)
    }

    pub fn grade_of_basis(&self, i: usize) -> i64 {
        self.basis_grades[i]
    }

    pub fn grade_of_root(&self, r: usize) -> i64 {
        self.root_grades[r]
    }

    /// Basis indices of `𝔤_i`.
    pub fn component(&self, i: i64) -> Vec<usize> {
        (0..self.system.dim()).filter(|&b| self.basis_grades[b] == i).collect()
    }

    /// Basis indices of `𝔭₊`, ascending.
    pub fn p_plus(&self) -> Vec<usize> {
        (0..self.system.dim()).filter(|&b| self.basis_grades[b] > 0).collect()
    }

    /// Basis indices of `𝔤₋`, ascending.
    pub fn g_minus(&self) -> Vec<usize> {
        (0..self.system.dim()).filter(|&b| self.basis_grades[b] < 0).collect()
    }

    pub fn g0(&self) -> Vec<usize> {
        self.component(0)
    }

    /// Roots with positive grade, in canonical order.
    pub fn p_plus_roots(&self) -> Vec<usize> {
        (0..self.root_grades.len()).filter(|&r| self.root_grades[r] > 0).collect()
    }

    /// Roots of 𝔤₀.
    pub fn g0_roots(&self) -> Vec<usize> {
        (0..self.root_grades.len()).filter(|&r| self.root_grades[r] == 0).collect()
    }

    pub fn in_p_plus(&self, nu: &Covector) -> bool {
        self.system.find_root(nu).is_some_and(|r| self.root_grades[r] > 0)
    }

    /// Basis vectors of negative roots of 𝔤₀; a vector killed by all of them is lowest weight.
    pub fn g0_lowering(&self) -> Vec<usize> {
        self.g0_roots()
            .into_iter()
            .filter(|&r| !self.system.root(r).positive)
            .flat_map(|r| self.system.root(r).space.clone())
            .collect()
    }

    /// Basis indices of `𝔟₋`, the sum of negative root spaces.
    pub fn b_minus(&self) -> Vec<usize> {
        self.system
            .roots()
            .iter()
            .filter(|r| !r.positive)
            .flat_map(|r| r.space.clone())
            .collect()
    }

    /// `w(E_gr)`.
    pub fn homogeneity(&self, w: &Covector) -> Scalar {
        w.apply(&self.grading_a)
    }

    /// Basis of `𝔷(𝔤₀) ∩ 𝔞` in 𝔞-coordinates.
    pub fn center_a(&self) -> &[Vector] {
        &self.center_a
    }

    /// Basis of `𝔤₀^ss ∩ 𝔞`, the κ-orthocomplement of the centre in 𝔞.
    pub fn semisimple_a(&self) -> &[Vector] {
        &self.semisimple_a
    }

    /// `Z ∈ 𝔷(𝔤₀) ∩ 𝔞` with `α(Z) ≠ 0` for every `α ∈ Δ⁺(𝔭₊)`.
    pub fn is_scaling_element(&self, z: &[Scalar]) -> bool {
        let Some(a) = self.system.a_coords(z) else {
            return false;
        };
        let roots = self.system.roots();
        self.g0_roots().iter().all(|&r| roots[r].covector.apply(&a).is_zero())
            && self.p_plus_roots().iter().all(|&r| !roots[r].covector.apply(&a).is_zero())
    }

    /// Checks the defining properties of the grading. Returns failures by name.
    pub fn audit(&self) -> Vec<(String, bool)> {
        let alg = self.system.algebra();
        let n = alg.dim();
        let e = self.grading_element();
        let mut out = Vec::new();
        let eigen = (0..n).all(|i| {
            let v = alg.bracket_with_basis(&e, i);
            v == crate::exact::scale(&int(self.basis_grades[i]), &crate::exact::unit_vec(n, i))
        });
        out.push(("[E_gr, X] = iX on 𝔤_i".into(), eigen));
        let graded = (0..n).all(|i| {
            (0..n).all(|j| {
                alg.structure(i, j)
                    .iter()
                    .all(|(k, _)| self.basis_grades[*k] == self.basis_grades[i] + self.basis_grades[j])
            })
        });
        out.push(("[𝔤_i, 𝔤_j] ⊆ 𝔤_{i+j}".into(), graded));
        let pairing = (1..=self.depth).all(|i| {
            let (a, b) = (self.component(i), self.component(-i));
            if a.len() != b.len() {
                return false;
            }
            let k = alg.killing_matrix();
            let mut m = Matrix::zeros(a.len(), b.len());
            for (r, &x) in a.iter().enumerate() {
                for (c, &y) in b.iter().enumerate() {
                    m[(r, c)] = k[(x, y)].clone();
                }
            }
            m.rank() == a.len()
        });
        out.push(("κ pairs 𝔤_i with 𝔤_-i".into(), pairing));
        out.push(("𝔭₊ generated by 𝔤₁".into(), self.generated_by(1)));
        out.push(("𝔤₋ generated by 𝔤₋₁".into(), self.generated_by(-1)));
        out
    }

    fn generated_by(&self, sign: i64) -> bool {
        let alg = self.system.algebra();
        let n = alg.dim();
        let span_of = |idx: Vec<usize>| Subspace::span(n, idx.into_iter().map(|i| crate::exact::unit_vec(n, i)));
        let g1 = span_of(self.component(sign));
        let target = span_of(if sign > 0 { self.p_plus() } else { self.g_minus() });
        let mut acc = g1.clone();
        let mut layer = g1.clone();
        for _ in 1..self.depth {
            layer = alg.bracket_span(&g1, &layer);
            acc = acc.sum(&layer);
        }
        acc.dim() == target.dim() && target.contains_subspace(&acc)
    }

    /// Whether `x` lies in the span of the given basis indices.
    pub fn supported_on(&self, x: &[Scalar], idx: &[usize]) -> bool {
        let mut y = x.to_vec();
        for &i in idx {
            y[i] = Scalar::zero();
        }
        is_zero_vec(&y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::build_sl;
    use crate::exact::frac;

    #[test]
    fn grassmannian_grading() {
        let g = grade(build_sl(4).unwrap(), &[2]).unwrap();
        assert_eq!(g.depth(), 1);
        assert_eq!(g.p_plus().len(), 4);
        assert_eq!(g.g0().len(), 7);
        assert!(g.audit().iter().all(|(_, ok)| *ok));
        // E_gr = diag(1/2, 1/2, -1/2, -1/2)
        let b = crate::builders::SlBasis::new(4);
        let d = b.diag(&[frac(1, 2), frac(1, 2), frac(-1, 2), frac(-1, 2)]).unwrap();
        assert_eq!(g.grading_element(), d);
        assert!(g.is_scaling_element(&d));
        assert_eq!(g.center_a().len(), 1);
        assert_eq!(g.semisimple_a().len(), 2);
    }

    #[test]
    fn borel_grading() {
        let g = grade(build_sl(4).unwrap(), &[1, 2, 3]).unwrap();
        assert_eq!(g.depth(), 3);
        assert_eq!(g.g0().len(), 3);
        assert!(g.audit().iter().all(|(_, ok)| *ok));
        assert!(g.semisimple_a().is_empty());
    }

    #[test]
    fn bad_crossing() {
        assert!(matches!(grade(build_sl(4).unwrap(), &[4]), Err(Error::NotSimple(4))));
        assert!(grade(build_sl(4).unwrap(), &[]).is_err());
    }
}
