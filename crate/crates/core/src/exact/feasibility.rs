use super::{axpy, dot, int, solve_affine, sub, zero, zero_vec, Matrix, Scalar, Vector};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Strict constraint `coeffs · t > rhs`.
#[derive(Clone, Debug)]
struct Strict {
    coeffs: Vector,
    rhs: Scalar,
}

/// Finds `x` with `a · x = b` for every equality and `a · x > b` for every
/// strict inequality, or reports [`Error::Infeasible`].
///
/// Equalities are eliminated by parametrising their solution set; the strict
/// system is then decided by Fourier-Motzkin elimination.
pub fn linear_feasibility(
    dim: usize,
    equalities: &[(Vector, Scalar)],
    strict: &[(Vector, Scalar)],
) -> Result<Vector> {
    for (a, _) in equalities.iter().chain(strict) {
        if a.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: a.len() });
        }
    }
    let (particular, directions) = if equalities.is_empty() {
        let dirs = (0..dim).map(|i| super::unit_vec(dim, i)).collect();
        (zero_vec(dim), dirs)
    } else {
        let rows: Vec<Vector> = equalities.iter().map(|(a, _)| a.clone()).collect();
        let rhs: Vector = equalities.iter().map(|(_, b)| b.clone()).collect();
        let sol = solve_affine(&Matrix::from_rows(&rows, dim)?, &rhs)?;
        (sol.particular, sol.homogeneous)
    };
    let reduced: Vec<Strict> = strict
        .iter()
        .map(|(a, b)| Strict {
            coeffs: directions.iter().map(|d| dot(a, d)).collect(),
            rhs: b - dot(a, &particular),
        })
        .collect();
    let t = fourier_motzkin(directions.len(), reduced).ok_or(Error::Infeasible)?;
    let mut x = particular;
    for (ti, d) in t.iter().zip(&directions) {
        axpy(&mut x, ti, d);
    }
    debug_assert!(equalities.iter().all(|(a, b)| &dot(a, &x) == b));
    debug_assert!(strict.iter().all(|(a, b)| &dot(a, &x) > b));
    Ok(x)
}

fn normalize(cons: Vec<Strict>) -> Vec<Strict> {
    // Scale by a positive factor so equal directions coincide, keep tightest bound.
    let mut best: BTreeMap<Vec<Scalar>, Scalar> = BTreeMap::new();
    let mut trivial = Vec::new();
    for c in cons {
        match c.coeffs.iter().find(|x| !x.is_zero()) {
            None => trivial.push(c),
            Some(lead) => {
                let f = lead.abs().recip();
                let key: Vec<Scalar> = c.coeffs.iter().map(|x| x * &f).collect();
                let rhs = &c.rhs * &f;
                best.entry(key)
                    .and_modify(|r| {
                        if rhs > *r {
                            *r = rhs.clone();
                        }
                    })
                    .or_insert(rhs);
            }
        }
    }
    trivial
        .into_iter()
        .chain(best.into_iter().map(|(coeffs, rhs)| Strict { coeffs, rhs }))
        .collect()
}

fn fourier_motzkin(dim: usize, cons: Vec<Strict>) -> Option<Vector> {
    let cons = normalize(cons);
    if dim == 0 {
        return cons.iter().all(|c| c.rhs < zero()).then(Vec::new);
    }
    let last = dim - 1;
    let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
    for c in cons {
        let a = c.coeffs[last].clone();
        if a.is_zero() {
            rest.push(Strict { coeffs: c.coeffs[..last].to_vec(), rhs: c.rhs });
            continue;
        }
        // a t_last > rhs - a' t'  becomes a bound  t_last ? (rhs - a' t') / a
        let inv = a.recip();
        let bound = Strict {
            coeffs: c.coeffs[..last].iter().map(|x| -(x * &inv)).collect(),
            rhs: &c.rhs * &inv,
        };
        if a.is_positive() {
            lower.push(bound);
        } else {
            upper.push(bound);
        }
    }
    // A bound is `t_last (>|<) coeffs · t' + rhs`.
    for l in &lower {
        for u in &upper {
            rest.push(Strict { coeffs: sub(&u.coeffs, &l.coeffs), rhs: &l.rhs - &u.rhs });
        }
    }
    let mut t = fourier_motzkin(last, rest)?;
    let eval = |b: &Strict| dot(&b.coeffs, &t) + &b.rhs;
    let lo = lower.iter().map(eval).max();
    let hi = upper.iter().map(eval).min();
    let value = match (lo, hi) {
        (Some(l), Some(h)) => {
            if l >= h {
                return None;
            }
            (l + h) / int(2)
        }
        (Some(l), None) => l + int(1),
        (None, Some(h)) => h - int(1),
        (None, None) => zero(),
    };
    t.push(value);
    Some(t)
}
