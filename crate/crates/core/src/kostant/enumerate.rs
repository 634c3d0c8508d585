use super::{Chain, ChainComplex, ChainKey};
use crate::error::{Error, Result};
use crate::exact::{kernel, one, Matrix, Scalar};
use crate::roots::Covector;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use std::collections::HashMap;

/// How a candidate was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateSource {
    /// BBW form for the ordered pair of simple roots (1-based, canonical order).
    Bbw { i: usize, j: usize },
    /// Joint kernel of □ and the lowering operators on a triple span.
    Scan,
}

/// A certified lowest weight vector of positive homogeneity in `ker □`.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub beta: Covector,
    pub gamma: Covector,
    pub zeta: Covector,
    pub chain: Chain,
    pub source: CandidateSource,
}

/// All certified candidates. The split case seeds from the BBW form; the
/// non-split case scans `(β ≤ γ, ζ)` triples.
pub fn enumerate_candidates(cx: &ChainComplex<'_>) -> Vec<Candidate> {
    let sys = cx.grading().system();
    if sys.is_split() {
        bbw_candidates(cx)
    } else {
        scan_candidates(cx)
    }
}

fn certified(cx: &ChainComplex<'_>, c: &Chain) -> bool {
    cx.laplacian(c).is_zero() && cx.is_lowest_weight(c)
}

fn bbw_candidates(cx: &ChainComplex<'_>) -> Vec<Candidate> {
    let g = cx.grading();
    let sys = g.system();
    let Some(mu) = sys.highest_root() else {
        return Vec::new();
    };
    let mu = sys.root(mu).covector.clone();
    let simple = sys.simple_roots();
    let pairs: Vec<(usize, usize)> = (0..simple.len())
        .flat_map(|i| (0..simple.len()).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let ai = &sys.root(simple[i]).covector;
            let aj = &sys.root(simple[j]).covector;
            let beta = ai.clone();
            let gamma = sys.reflect(ai, aj);
            let zeta = -&sys.reflect(ai, &sys.reflect(aj, &mu));
            if !g.in_p_plus(&beta) || !g.in_p_plus(&gamma) {
                return None;
            }
            if !g.homogeneity(&(&(&beta + &gamma) + &zeta)).is_positive() {
                return None;
            }
            let b = sys.root(sys.find_root(&beta)?).space[0];
            let c = sys.root(sys.find_root(&gamma)?).space[0];
            let z = sys.root(sys.find_root(&zeta)?).space[0];
            let chain = Chain::monomial(vec![b, c], z, one());
            certified(cx, &chain).then(|| Candidate {
                beta,
                gamma,
                zeta,
                chain,
                source: CandidateSource::Bbw { i: i + 1, j: j + 1 },
            })
        })
        .collect()
}

fn scan_candidates(cx: &ChainComplex<'_>) -> Vec<Candidate> {
    let g = cx.grading();
    let sys = g.system();
    let pp = g.p_plus_roots();
    let mut triples = Vec::new();
    for (x, &b) in pp.iter().enumerate() {
        for &c in &pp[x..] {
            for z in 0..sys.roots().len() {
                let w = &(&sys.root(b).covector + &sys.root(c).covector) + &sys.root(z).covector;
                if g.homogeneity(&w).is_positive() {
                    triples.push((b, c, z));
                }
            }
        }
    }
    triples.par_iter().flat_map_iter(|&t| scan_triple(cx, t)).collect()
}

fn scan_triple(cx: &ChainComplex<'_>, (b, c, z): (usize, usize, usize)) -> Vec<Candidate> {
    let sys = cx.grading().system();
    let (rb, rc, rz) = (sys.root(b), sys.root(c), sys.root(z));
    let mut cols: Vec<ChainKey> = Vec::new();
    for (x, &yb) in rb.space.iter().enumerate() {
        for (y, &yc) in rc.space.iter().enumerate() {
            if b == c && y <= x {
                continue;
            }
            for &e in &rz.space {
                let (wedge, _) = super::canonical_wedge(vec![yb, yc]).expect("distinct");
                cols.push(ChainKey { wedge, value: e });
            }
        }
    }
    if cols.is_empty() {
        return Vec::new();
    }
    let n = sys.dim();
    let lowering = cx.grading().g0_lowering();
    let monomials: Vec<Chain> = cols.iter().map(|k| Chain::monomial(k.wedge.clone(), k.value, one())).collect();
    // Lowering operators first: they are cheap and usually cut the span to nothing.
    let lowered: Vec<Chain> = monomials
        .iter()
        .map(|mono| {
            let mut acc = Chain::zero(2);
            for (op, &l) in lowering.iter().enumerate() {
                let img = cx.g0_action(&crate::exact::unit_vec(n, l), mono);
                for (k, x) in img.terms() {
                    acc.add_key(ChainKey { wedge: tagged(op, &k.wedge), value: k.value }, x.clone());
                }
            }
            acc
        })
        .collect();
    let low = kernel(&columns(&lowered));
    if low.is_empty() {
        return Vec::new();
    }
    let combos: Vec<Chain> = low.iter().map(|v| combine_chains(v, &monomials)).collect();
    let boxed: Vec<Chain> = combos.iter().map(|c| cx.laplacian(c)).collect();
    kernel(&columns(&boxed))
        .into_iter()
        .map(|v| Candidate {
            beta: rb.covector.clone(),
            gamma: rc.covector.clone(),
            zeta: rz.covector.clone(),
            chain: combine_chains(&v, &combos),
            source: CandidateSource::Scan,
        })
        .collect()
}

/// Keeps images under different operators apart by prefixing the wedge.
fn tagged(op: usize, wedge: &[usize]) -> Vec<usize> {
    let mut w = vec![usize::MAX - op];
    w.extend_from_slice(wedge);
    w
}

fn combine_chains(coeffs: &[Scalar], chains: &[Chain]) -> Chain {
    let mut out = Chain::zero(chains.first().map_or(2, Chain::degree));
    for (x, c) in coeffs.iter().zip(chains) {
        if !x.is_zero() {
            out.add_chain(c, x);
        }
    }
    out
}

fn columns(chains: &[Chain]) -> Matrix {
    let mut rows: HashMap<ChainKey, usize> = HashMap::new();
    for c in chains {
        for (k, _) in c.terms() {
            let len = rows.len();
            rows.entry(k.clone()).or_insert(len);
        }
    }
    let mut m = Matrix::zeros(rows.len(), chains.len());
    for (j, c) in chains.iter().enumerate() {
        for (k, x) in c.terms() {
            m[(rows[k], j)] = x.clone();
        }
    }
    m
}

/// Outcome of checking the conclusion of the lemma on lowest weight vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaVerdict {
    /// `ζ ∈ -Δ⁺` and one of `β`, `γ` is simple. `swapped` records that `β`
    /// and `γ` were exchanged to meet `β - γ ∉ Δ⁺`.
    Holds { beta_simple: bool, gamma_simple: bool, swapped: bool },
    Violated(String),
}

/// Checks that a certified seed has `ζ ∈ -Δ⁺` and a simple `β` or `γ`.
pub fn lemma_assume_check(
    cx: &ChainComplex<'_>,
    beta: &Covector,
    gamma: &Covector,
    zeta: &Covector,
    c: &Chain,
) -> Result<LemmaVerdict> {
    let g = cx.grading();
    let sys = g.system();
    let not_met = |m: &str| Err(Error::HypothesesNotMet(m.to_string()));
    if c.is_zero() || !certified(cx, c) {
        return not_met("chain is not a lowest weight vector in ker □");
    }
    if !g.homogeneity(&(&(beta + gamma) + zeta)).is_positive() {
        return not_met("homogeneity is not positive");
    }
    if g.in_p_plus(zeta) {
        return not_met("ζ lies in Δ⁺(𝔭₊)");
    }
    let positive = |v: &Covector| sys.find_root(v).is_some_and(|r| sys.root(r).positive);
    let (b, gm, swapped) = if positive(&(beta - gamma)) { (gamma, beta, true) } else { (beta, gamma, false) };
    if positive(&(b - gm)) {
        return not_met("β - γ ∈ Δ⁺");
    }
    let is_simple = |v: &Covector| sys.find_root(v).is_some_and(|r| sys.simple_roots().contains(&r));
    let zeta_negative = sys.find_root(zeta).is_some_and(|r| !sys.root(r).positive);
    if !zeta_negative {
        return Ok(LemmaVerdict::Violated(format!("ζ = {} is not in -Δ⁺", sys.label(zeta))));
    }
    let (bs, gs) = (is_simple(b), is_simple(gm));
    if !bs && !gs {
        return Ok(LemmaVerdict::Violated(format!(
            "neither {} nor {} is simple",
            sys.label(b),
            sys.label(gm)
        )));
    }
    Ok(LemmaVerdict::Holds { beta_simple: bs, gamma_simple: gs, swapped })
}
