//! The complex `Λ^k 𝔭₊ ⊗ 𝔤` with Kostant's codifferential, the Lie algebra
//! differential, the Laplacian and the 𝔤₀-action.
//!
//! Chains are sparse in the basis `(Y_{i1})_κ ∧ … ∧ (Y_{ik})_κ ⊗ e_j` where the
//! `Y` run over the 𝔭₊ basis vectors. A slot `(Y)_κ` pairs with `V ∈ 𝔤₋` by
//! `κ(Y, V)`, and wedges evaluate by determinants.

mod chain;
mod enumerate;
mod hodge;

pub use chain::{canonical_wedge, Chain, ChainKey};
pub use enumerate::{enumerate_candidates, lemma_assume_check, Candidate, CandidateSource, LemmaVerdict};
pub use hodge::{hodge_audit, HodgeBlock, HodgeReport};

use crate::exact::{one, zero_vec, Matrix, Scalar, Vector};
use crate::lie::{to_sparse, Sparse};
use crate::parabolic::ParabolicGrading;
use crate::roots::Covector;
use crate::error::{Error, Result};
use num_traits::Zero;
use std::collections::HashMap;

/// Operators on `Λ^k 𝔭₊ ⊗ 𝔤` for a fixed grading.
#[derive(Debug)]
pub struct ChainComplex<'g> {
    grading: &'g ParabolicGrading,
    p_plus: Vec<usize>,
    slot: Vec<Option<usize>>,
    dual: Vec<Vector>,
    ad_dual: Vec<Vec<Sparse>>,
    ce: Vec<Vec<(usize, usize, Scalar)>>,
    by_weight: HashMap<Covector, Vec<usize>>,
}

impl<'g> ChainComplex<'g> {
    pub fn new(grading: &'g ParabolicGrading) -> Result<Self> {
        let sys = grading.system();
        let alg = sys.algebra();
        let n = alg.dim();
        let p_plus = grading.p_plus();
        let g_minus = grading.g_minus();
        let p = p_plus.len();
        let mut slot = vec![None; n];
        for (pos, &i) in p_plus.iter().enumerate() {
            slot[i] = Some(pos);
        }
        // V̂_c = Σ_b W_b x_bc with κ(Y_a, V̂_c) = δ_ac.
        let k = alg.killing_matrix();
        let mut pairing = Matrix::zeros(p, p);
        for (a, &y) in p_plus.iter().enumerate() {
            for (b, &w) in g_minus.iter().enumerate() {
                pairing[(a, b)] = k[(y, w)].clone();
            }
        }
        let x = pairing.inverse().ok_or(Error::DegenerateForm)?;
        let dual: Vec<Vector> = (0..p)
            .map(|c| {
                let mut v = zero_vec(n);
                for (b, &w) in g_minus.iter().enumerate() {
                    v[w] = x[(b, c)].clone();
                }
                v
            })
            .collect();
        let ad_dual = dual
            .iter()
            .map(|v| (0..n).map(|j| to_sparse(&alg.bracket_with_basis(v, j))).collect())
            .collect();
        // d(ε^c) = -Σ_{a<b} κ(Y_c, [V̂_a, V̂_b]) ε^a ∧ ε^b
        let mut ce = vec![Vec::new(); p];
        for a in 0..p {
            for b in a + 1..p {
                let br = alg.bracket(&dual[a], &dual[b]);
                let lowered = alg.lower(&br);
                for (c, &y) in p_plus.iter().enumerate() {
                    let coeff = &lowered[y];
                    if !coeff.is_zero() {
                        ce[c].push((p_plus[a], p_plus[b], -coeff));
                    }
                }
            }
        }
        let mut by_weight: HashMap<Covector, Vec<usize>> = HashMap::new();
        for i in 0..n {
            by_weight.entry(sys.weight_of_basis(i)).or_default().push(i);
        }
        Ok(ChainComplex { grading, p_plus, slot, dual, ad_dual, ce, by_weight })
    }

    pub fn grading(&self) -> &'g ParabolicGrading {
        self.grading
    }

    /// Basis indices of 𝔭₊ used as wedge slots.
    pub fn p_plus(&self) -> &[usize] {
        &self.p_plus
    }

    /// `V̂` dual to the 𝔭₊ basis vector `y` (algebra index).
    pub fn dual_of(&self, y: usize) -> &Vector {
        &self.dual[self.slot[y].expect("index lies in 𝔭₊")]
    }

    pub fn is_slot(&self, i: usize) -> bool {
        self.slot[i].is_some()
    }

    pub fn weight_of_key(&self, key: &ChainKey) -> Covector {
        let sys = self.grading.system();
        key.wedge
            .iter()
            .fold(sys.weight_of_basis(key.value), |acc, &i| &acc + &sys.weight_of_basis(i))
    }

    /// Weight of a chain if all its terms share one.
    pub fn weight(&self, c: &Chain) -> Option<Covector> {
        let mut w = None;
        for (k, _) in c.terms() {
            let wk = self.weight_of_key(k);
            match &w {
                None => w = Some(wk),
                Some(prev) if *prev != wk => return None,
                _ => {}
            }
        }
        w
    }

    /// Projects a 𝔤-vector supported on 𝔭₊ into wedge-slot coordinates.
    fn slot_coords(&self, v: &[Scalar]) -> Sparse {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| {
                assert!(self.slot[i].is_some(), "vector leaves 𝔭₊");
                (i, x.clone())
            })
            .collect()
    }

    /// `∂` raising degree by one.
    pub fn differential(&self, c: &Chain) -> Chain {
        let mut out = Chain::zero(c.degree() + 1);
        for (key, coeff) in c.terms() {
            // Σ_b ε^b ∧ φ ⊗ [V̂_b, X]
            for (pos, &b) in self.p_plus.iter().enumerate() {
                if key.wedge.contains(&b) {
                    continue;
                }
                for (j, x) in &self.ad_dual[pos][key.value] {
                    let mut slots = vec![b];
                    slots.extend_from_slice(&key.wedge);
                    out.add_term(slots, *j, coeff * x);
                }
            }
            // dφ ⊗ X with d a graded derivation
            for t in 0..key.wedge.len() {
                let pos = self.slot[key.wedge[t]].expect("slot");
                let sign = if t % 2 == 0 { coeff.clone() } else { -coeff };
                for (a, b, d) in &self.ce[pos] {
                    let mut slots = key.wedge[..t].to_vec();
                    slots.push(*a);
                    slots.push(*b);
                    slots.extend_from_slice(&key.wedge[t + 1..]);
                    out.add_term(slots, key.value, &sign * d);
                }
            }
        }
        out
    }

    /// Kostant's codifferential `∂*`, lowering degree by one. Degree 0 maps to 0.
    pub fn codifferential(&self, c: &Chain) -> Chain {
        if c.degree() == 0 {
            return Chain::zero(0);
        }
        let alg = self.grading.system().algebra();
        let mut out = Chain::zero(c.degree() - 1);
        for (key, coeff) in c.terms() {
            let w = &key.wedge;
            let k = w.len();
            // Σ_i (-1)^i (… Ŷ_i …) ⊗ [Y_i, X], i 1-based
            for i in 0..k {
                let sign = if i % 2 == 0 { -coeff } else { coeff.clone() };
                let rest: Vec<usize> = w.iter().enumerate().filter(|(l, _)| *l != i).map(|(_, &y)| y).collect();
                for (j, x) in alg.structure(w[i], key.value) {
                    out.add_term(rest.clone(), *j, &sign * x);
                }
            }
            // Σ_{i<j} (-1)^{i+j} [Y_i, Y_j] ∧ (… Ŷ_i … Ŷ_j …) ⊗ X
            for i in 0..k {
                for j in i + 1..k {
                    let sign = if (i + j) % 2 == 0 { coeff.clone() } else { -coeff };
                    let rest: Vec<usize> = w
                        .iter()
                        .enumerate()
                        .filter(|(l, _)| *l != i && *l != j)
                        .map(|(_, &y)| y)
                        .collect();
                    for (y, x) in self.slot_coords(&sparse_to_dense(alg.structure(w[i], w[j]), alg.dim())) {
                        let mut slots = vec![y];
                        slots.extend_from_slice(&rest);
                        out.add_term(slots, key.value, &sign * &x);
                    }
                }
            }
        }
        out
    }

    /// `□ = ∂*∂ + ∂∂*`.
    pub fn laplacian(&self, c: &Chain) -> Chain {
        let a = self.codifferential(&self.differential(c));
        if c.degree() == 0 {
            return a;
        }
        a.sum(&self.differential(&self.codifferential(c)))
    }

    /// Infinitesimal action of `Z ∈ 𝔤₀`: a derivation over every slot and the value.
    pub fn g0_action(&self, z: &[Scalar], c: &Chain) -> Chain {
        let alg = self.grading.system().algebra();
        let mut out = Chain::zero(c.degree());
        for (key, coeff) in c.terms() {
            for t in 0..key.wedge.len() {
                let img = alg.bracket_with_basis(z, key.wedge[t]);
                for (y, x) in self.slot_coords(&img) {
                    let mut slots = key.wedge.clone();
                    slots[t] = y;
                    out.add_term(slots, key.value, coeff * &x);
                }
            }
            for (j, x) in alg.bracket_with_basis(z, key.value).iter().enumerate() {
                if !x.is_zero() {
                    out.add_term(key.wedge.clone(), j, coeff * x);
                }
            }
        }
        out
    }

    /// Annihilated by every root vector of a negative 𝔤₀-root.
    pub fn is_lowest_weight(&self, c: &Chain) -> bool {
        let n = self.grading.system().dim();
        self.grading
            .g0_lowering()
            .into_iter()
            .all(|z| self.g0_action(&crate::exact::unit_vec(n, z), c).is_zero())
    }

    /// Evaluates a chain on `X_1, …, X_k ∈ 𝔤` by `det κ(Y_{i_r}, X_s)`.
    pub fn evaluate(&self, c: &Chain, args: &[Vector]) -> Vector {
        assert_eq!(args.len(), c.degree(), "argument count");
        let alg = self.grading.system().algebra();
        let lowered: Vec<Vector> = args.iter().map(|x| alg.lower(x)).collect();
        let mut out = zero_vec(alg.dim());
        for (key, coeff) in c.terms() {
            let m: Vec<Vec<Scalar>> = key
                .wedge
                .iter()
                .map(|&y| lowered.iter().map(|l| l[y].clone()).collect())
                .collect();
            out[key.value] += coeff * det(&m);
        }
        out
    }

    /// All basis keys of the given degree and weight.
    pub fn keys_of_weight(&self, degree: usize, weight: &Covector) -> Vec<ChainKey> {
        let sys = self.grading.system();
        let mut out = Vec::new();
        for wedge in subsets(&self.p_plus, degree) {
            let w = wedge.iter().fold(Covector::zero(sys.rank()), |acc, &i| &acc + &sys.weight_of_basis(i));
            if let Some(values) = self.by_weight.get(&(weight - &w)) {
                for &v in values {
                    out.push(ChainKey { wedge: wedge.clone(), value: v });
                }
            }
        }
        out
    }

    /// Distinct weights of degree-k basis keys whose homogeneity is `h`.
    pub fn weights_of_homogeneity(&self, degree: usize, h: &Scalar) -> Vec<Covector> {
        let sys = self.grading.system();
        let mut set = std::collections::BTreeSet::new();
        for wedge in subsets(&self.p_plus, degree) {
            let w = wedge.iter().fold(Covector::zero(sys.rank()), |acc, &i| &acc + &sys.weight_of_basis(i));
            for v in self.by_weight.keys() {
                let total = &w + v;
                if &self.grading.homogeneity(&total) == h {
                    set.insert(total);
                }
            }
        }
        set.into_iter().collect()
    }

    /// Matrix of a linear operator from the span of `from` to the span of `to`.
    pub fn block_matrix(&self, op: impl Fn(&Chain) -> Chain, from: &[ChainKey], to: &[ChainKey]) -> Result<Matrix> {
        let index: HashMap<&ChainKey, usize> = to.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut m = Matrix::zeros(to.len(), from.len());
        for (c, key) in from.iter().enumerate() {
            let img = op(&Chain::monomial(key.wedge.clone(), key.value, one()));
            for (k, x) in img.terms() {
                let r = *index.get(k).ok_or_else(|| Error::RootSystem("operator leaves its weight block".into()))?;
                m[(r, c)] = x.clone();
            }
        }
        Ok(m)
    }

    /// Chain from coordinates against a key list.
    pub fn chain_from(&self, degree: usize, keys: &[ChainKey], coords: &[Scalar]) -> Chain {
        let mut c = Chain::zero(degree);
        for (k, x) in keys.iter().zip(coords) {
            c.add_key(k.clone(), x.clone());
        }
        c
    }
}

fn sparse_to_dense(s: &Sparse, n: usize) -> Vector {
    let mut v = zero_vec(n);
    for (i, x) in s {
        v[*i] = x.clone();
    }
    v
}

/// Sorted `k`-subsets of `items`.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

fn det(m: &[Vec<Scalar>]) -> Scalar {
    match m.len() {
        0 => one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        n => {
            let mut total = Scalar::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Scalar>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect()).collect();
                let term = &m[0][c] * det(&minor);
                if c % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

#[cfg(test)]
mod tests;
