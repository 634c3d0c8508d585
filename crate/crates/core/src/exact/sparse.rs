use super::Scalar;
use num_traits::Zero;
use std::collections::{BTreeSet, HashMap};

/// Sparse vector as `(index, value)` pairs with strictly increasing indices
/// and no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Incremental row echelon form for sparse vectors.
///
/// Each stored row has its pivot as leading entry, normalised to 1. With
/// `track` set, every row carries the combination of inputs producing it, so
/// inputs that reduce to zero yield kernel relations.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    ambient: usize,
    pivots: HashMap<usize, usize>,
    rows: Vec<(SparseVec, SparseVec)>,
    track: bool,
    pushed: usize,
}

struct Accumulator {
    values: Vec<Scalar>,
    support: BTreeSet<usize>,
}

impl Accumulator {
    fn new(n: usize, v: &[(usize, Scalar)]) -> Self {
        let mut values = vec![Scalar::zero(); n];
        let mut support = BTreeSet::new();
        for (i, x) in v {
            values[*i] = x.clone();
            support.insert(*i);
        }
        Accumulator { values, support }
    }

    fn axpy(&mut self, f: &Scalar, row: &[(usize, Scalar)]) {
        for (j, x) in row {
            self.values[*j] -= f * x;
            if self.values[*j].is_zero() {
                self.support.remove(j);
            } else {
                self.support.insert(*j);
            }
        }
    }

    fn drain_from(&mut self, start: usize) -> SparseVec {
        let out = self.support.range(start..).map(|&i| (i, self.values[i].clone())).collect();
        self.support.clear();
        out
    }
}

impl SparseEchelon {
    pub fn new(ambient: usize) -> Self {
        SparseEchelon { ambient, pivots: HashMap::new(), rows: Vec::new(), track: false, pushed: 0 }
    }

    /// Echelon form that records how each row combines the pushed inputs.
    pub fn tracking(ambient: usize) -> Self {
        SparseEchelon { track: true, ..Self::new(ambient) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`. Returns `None` if it was independent, otherwise the relation
    /// among inputs (empty unless tracking) that expresses the dependency.
    pub fn push(&mut self, v: &[(usize, Scalar)]) -> Option<SparseVec> {
        let input = self.pushed;
        self.pushed += 1;
        let mut acc = Accumulator::new(self.ambient, v);
        let mut tag = if self.track { Some(Accumulator::new(input + 1, &[(input, Scalar::from_integer(1.into()))])) } else { None };
        while let Some(&c) = acc.support.iter().next() {
            let Some(&r) = self.pivots.get(&c) else {
                let row = acc.drain_from(c);
                let inv = row[0].1.recip();
                let row: SparseVec = row.into_iter().map(|(i, x)| (i, x * &inv)).collect();
                let tag_row = tag.map(|mut t| t.drain_from(0).into_iter().map(|(i, x)| (i, x * &inv)).collect()).unwrap_or_default();
                self.pivots.insert(c, self.rows.len());
                self.rows.push((row, tag_row));
                return None;
            };
            let f = acc.values[c].clone();
            let (row, tag_row) = &self.rows[r];
            acc.axpy(&f, row);
            if let Some(t) = tag.as_mut() {
                t.axpy(&f, tag_row);
            }
        }
        Some(tag.map(|mut t| t.drain_from(0)).unwrap_or_default())
    }
}

/// Rank of a family of sparse vectors in `Q^ambient`.
pub fn sparse_rank<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = SparseEchelon::new(ambient);
    for v in vectors {
        e.push(v);
    }
    e.rank()
}

/// Basis of `{x : Σ x_j cols[j] = 0}`, as sparse vectors indexed by column.
pub fn sparse_kernel(ambient: usize, cols: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = SparseEchelon::tracking(ambient);
    cols.iter().filter_map(|c| e.push(c)).collect()
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn reduce_mod(x: &Scalar) -> Option<u64> {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    let p = BigInt::from(PRIME);
    let residue = |n: &BigInt| ((n % &p + &p) % &p).to_u64();
    let (num, den) = (residue(x.numer())?, residue(x.denom())?);
    (den != 0).then(|| mul_mod(num, pow_mod(den, PRIME - 2)))
}

/// Rank over `F_p` for `p = 2^61 - 1`, a lower bound for the rank over `Q`.
/// `None` when a denominator vanishes modulo `p`.
pub fn rank_mod_p<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut acc = vec![0u64; ambient];
    let mut support = BTreeSet::new();
    for v in vectors {
        for (i, x) in v {
            acc[*i] = reduce_mod(x)?;
            if acc[*i] != 0 {
                support.insert(*i);
            }
        }
        while let Some(&c) = support.iter().next() {
            let f = acc[c];
            match pivots.get(&c) {
                Some(row) => {
                    for &(j, y) in row {
                        acc[j] = (acc[j] + PRIME - mul_mod(f, y)) % PRIME;
                        if acc[j] == 0 {
                            support.remove(&j);
                        } else {
                            support.insert(j);
                        }
                    }
                }
                None => {
                    let inv = pow_mod(f, PRIME - 2);
                    let row: Vec<(usize, u64)> = support.iter().map(|&j| (j, mul_mod(acc[j], inv))).collect();
                    for &j in &support {
                        acc[j] = 0;
                    }
                    support.clear();
                    pivots.insert(c, row);
                }
            }
        }
    }
    Some(pivots.len())
}

pub fn densify(v: &[(usize, Scalar)], n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, kernel, Matrix};

    fn sv(xs: &[i64]) -> SparseVec {
        xs.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, int(x))).collect()
    }

    #[test]
    fn modular_rank_agrees() {
        let cols = [sv(&[1, 2, 0, 1]), sv(&[0, 1, 1, 0]), sv(&[1, 3, 1, 1]), sv(&[2, 4, 0, 2])];
        assert_eq!(rank_mod_p(4, &cols), Some(2));
        let halves: Vec<SparseVec> = cols.iter().map(|c| c.iter().map(|(i, x)| (*i, x / int(3))).collect()).collect();
        assert_eq!(rank_mod_p(4, &halves), Some(2));
    }

    #[test]
    fn rank_and_kernel_match_dense() {
        let cols = [sv(&[1, 2, 0, 1]), sv(&[0, 1, 1, 0]), sv(&[1, 3, 1, 1]), sv(&[2, 4, 0, 2]), sv(&[0, 0, 0, 5])];
        assert_eq!(sparse_rank(4, &cols), 3);
        let dense: Vec<Vec<Scalar>> = cols.iter().map(|c| densify(c, 4)).collect();
        let m = Matrix::from_cols(&dense, 4).unwrap();
        let ker = sparse_kernel(4, &cols);
        assert_eq!(ker.len(), kernel(&m).len());
        for k in &ker {
            assert!(m.mul_vec(&densify(k, 5)).iter().all(Zero::is_zero));
        }
    }
}
