use super::{Chain, ChainComplex, ChainKey};
use crate::error::{Error, Result};
use crate::exact::{one, rank_mod_p, sparse_kernel, sparse_rank, Scalar, SparseVec};
use std::collections::HashMap;
use crate::roots::Covector;
use serde::Serialize;

/// Dimensions of one weight block of the Hodge decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct HodgeBlock {
    pub weight: String,
    pub dim: usize,
    pub im_d: usize,
    pub ker_laplacian: usize,
    pub im_dstar: usize,
    pub ker_d: usize,
    pub ker_dstar: usize,
    pub ok: bool,
}

/// Hodge audit of all weight blocks in one (degree, homogeneity) slice.
#[derive(Clone, Debug, Serialize)]
pub struct HodgeReport {
    pub degree: usize,
    pub homogeneity: String,
    pub dim: usize,
    pub im_d: usize,
    pub ker_laplacian: usize,
    pub im_dstar: usize,
    pub blocks: Vec<HodgeBlock>,
    pub ok: bool,
}

/// Columns of `op` on the span of `from`, in coordinates against `to`.
fn columns(op: impl Fn(&Chain) -> Chain, from: &[ChainKey], to: &[ChainKey]) -> Result<Vec<SparseVec>> {
    let index: HashMap<&ChainKey, usize> = to.iter().enumerate().map(|(i, k)| (k, i)).collect();
    from.iter()
        .map(|key| {
            let img = op(&Chain::monomial(key.wedge.clone(), key.value, one()));
            let mut col = Vec::with_capacity(img.len());
            for (k, x) in img.terms() {
                let r = *index.get(k).ok_or_else(|| Error::RootSystem("operator leaves its weight block".into()))?;
                col.push((r, x.clone()));
            }
            col.sort_by_key(|(r, _)| *r);
            Ok(col)
        })
        .collect()
}

fn block(cx: &ChainComplex<'_>, degree: usize, weight: &Covector) -> Result<HodgeBlock> {
    let keys: Vec<ChainKey> = cx.keys_of_weight(degree, weight);
    let below = if degree > 0 { cx.keys_of_weight(degree - 1, weight) } else { Vec::new() };
    let above = cx.keys_of_weight(degree + 1, weight);
    let dim = keys.len();
    let as_chain = |v: &SparseVec| {
        let mut c = Chain::zero(degree);
        for (i, x) in v {
            c.add_key(keys[*i].clone(), x.clone());
        }
        c
    };
    let d_in = columns(|c| cx.differential(c), &below, &keys)?;
    let ds_in = columns(|c| cx.codifferential(c), &above, &keys)?;
    let d_out = columns(|c| cx.differential(c), &keys, &above)?;
    let ds_out = columns(|c| cx.codifferential(c), &keys, &below)?;
    let lap = columns(|c| cx.laplacian(c), &keys, &keys)?;
    // ker ∂ ∩ ker ∂* lies in ker □; it is all of it once rank □ ≥ dim − k.
    let stacked: Vec<SparseVec> = d_out
        .iter()
        .zip(&ds_out)
        .map(|(a, b)| a.iter().cloned().chain(b.iter().map(|(i, x)| (i + above.len(), x.clone()))).collect())
        .collect();
    let harmonic = sparse_kernel(above.len() + below.len(), &stacked);
    let lap_rank = match rank_mod_p(dim, &lap) {
        Some(r) if r + harmonic.len() == dim => r,
        _ => sparse_rank(dim, &lap),
    };
    let lap_kills = harmonic.iter().all(|v| cx.laplacian(&as_chain(v)).is_zero());
    let im_d = sparse_rank(dim, &d_in);
    let im_dstar = sparse_rank(dim, &ds_in);
    let ker_d = dim - sparse_rank(above.len(), &d_out);
    let ker_dstar = dim - sparse_rank(below.len(), &ds_out);
    let k = harmonic.len();
    let family = || d_in.iter().chain(&ds_in).chain(&harmonic);
    let spans = rank_mod_p(dim, family()) == Some(dim) || sparse_rank(dim, family()) == dim;
    let closed_d = d_in.iter().chain(&harmonic).all(|v| cx.differential(&as_chain(v)).is_zero());
    let closed_ds = ds_in.iter().chain(&harmonic).all(|v| cx.codifferential(&as_chain(v)).is_zero());
    let ok = lap_kills
        && lap_rank + k == dim
        && im_d + k + im_dstar == dim
        && spans
        && closed_d
        && closed_ds
        && ker_d == im_d + k
        && ker_dstar == im_dstar + k;
    Ok(HodgeBlock {
        weight: cx.grading().system().label(weight),
        dim,
        im_d,
        ker_laplacian: k,
        im_dstar,
        ker_d,
        ker_dstar,
        ok,
    })
}

/// Checks `im ∂ ⊕ ker □ ⊕ im ∂*` on every weight block of the slice, along
/// with `ker ∂ = im ∂ ⊕ ker □` and `ker ∂* = im ∂* ⊕ ker □`.
pub fn hodge_audit(cx: &ChainComplex<'_>, degree: usize, homogeneity: &Scalar) -> Result<HodgeReport> {
    let mut blocks = Vec::new();
    for w in cx.weights_of_homogeneity(degree, homogeneity) {
        blocks.push(block(cx, degree, &w)?);
    }
    let sum = |f: fn(&HodgeBlock) -> usize| blocks.iter().map(f).sum::<usize>();
    Ok(HodgeReport {
        degree,
        homogeneity: crate::exact::format_scalar(homogeneity),
        dim: sum(|b| b.dim),
        im_d: sum(|b| b.im_d),
        ker_laplacian: sum(|b| b.ker_laplacian),
        im_dstar: sum(|b| b.im_dstar),
        ok: blocks.iter().all(|b| b.ok),
        blocks,
    })
}
