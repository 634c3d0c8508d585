use crate::exact::{format_scalar, Scalar};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Basis element `(Y_{i1})_κ ∧ … ∧ (Y_{ik})_κ ⊗ e_value`, wedge indices
/// ascending and referring to the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainKey {
    pub wedge: Vec<usize>,
    pub value: usize,
}

/// Sorts wedge slots, returning the permutation sign, or `None` on a repeat.
pub fn canonical_wedge(mut slots: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut negative = false;
    for i in 1..slots.len() {
        let mut j = i;
        while j > 0 && slots[j - 1] > slots[j] {
            slots.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if slots.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((slots, negative))
}

/// A sparse element of `Λ^k 𝔭₊ ⊗ 𝔤`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<ChainKey, Scalar>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    /// `coeff · (Y_{slots})_κ ⊗ e_value` with slots in any order.
    pub fn monomial(slots: Vec<usize>, value: usize, coeff: Scalar) -> Self {
        let mut c = Chain::zero(slots.len());
        c.add_term(slots, value, coeff);
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChainKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &ChainKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `coeff` times the wedge in the given slot order.
    pub fn add_term(&mut self, slots: Vec<usize>, value: usize, coeff: Scalar) {
        assert_eq!(slots.len(), self.degree, "chain degree mismatch");
        if coeff.is_zero() {
            return;
        }
        let Some((wedge, negative)) = canonical_wedge(slots) else {
            return;
        };
        let c = if negative { -coeff } else { coeff };
        self.add_key(ChainKey { wedge, value }, c);
    }

    pub fn add_key(&mut self, key: ChainKey, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_chain(&mut self, other: &Chain, factor: &Scalar) {
        assert_eq!(self.degree, other.degree, "chain degree mismatch");
        for (k, c) in &other.terms {
            self.add_key(k.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Chain {
        let mut out = Chain::zero(self.degree);
        out.add_chain(self, factor);
        out
    }

    pub fn sum(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_chain(other, &crate::exact::one());
        out
    }

    pub fn difference(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_chain(other, &-crate::exact::one());
        out
    }

    /// Renders terms as `coeff * (a ∧ b) ⊗ v` using basis labels.
    pub fn render(&self, labels: &[String]) -> Vec<(Vec<String>, String, String)> {
        self.terms
            .iter()
            .map(|(k, c)| {
                let wedge = k.wedge.iter().map(|&i| labels[i].clone()).collect();
                (wedge, labels[k.value].clone(), format_scalar(c))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn wedge_sign() {
        assert_eq!(canonical_wedge(vec![3, 1, 2]), Some((vec![1, 2, 3], false)));
        assert_eq!(canonical_wedge(vec![2, 1]), Some((vec![1, 2], true)));
        assert_eq!(canonical_wedge(vec![2, 2]), None);
    }

    #[test]
    fn antisymmetric_terms_cancel() {
        let mut c = Chain::monomial(vec![1, 2], 0, int(1));
        c.add_term(vec![2, 1], 0, int(1));
        assert!(c.is_zero());
    }
}
