//! Seeds `Ω = Σ (η_β)_κ ∧ (η_γ)_κ ⊗ η_ζ`: stabiliser, Kruglikov–The property,
//! the deformed algebra `𝔧_Ω` and the harmonic-seed verdict.

use crate::error::{Error, Result};
use crate::exact::{is_zero_vec, kernel, one, unit_vec, zero_vec, CoordinateMap, Matrix, Scalar, Subspace, Vector};
use crate::kostant::{Candidate, Chain, ChainComplex};
use crate::lie::{derived_series, is_ideal, LieAlgebra};
use crate::roots::Covector;
use num_traits::{Signed, Zero};
use std::collections::HashMap;

/// One term `coeff · (e_beta)_κ ∧ (e_gamma)_κ ⊗ e_zeta`, indices in the algebra basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedTerm {
    pub beta: usize,
    pub gamma: usize,
    pub zeta: usize,
    pub coeff: Scalar,
}

#[derive(Clone, Debug)]
pub struct Seed {
    pub beta: Covector,
    pub gamma: Covector,
    pub zeta: Covector,
    pub terms: Vec<SeedTerm>,
    pub omega: Chain,
}

impl Seed {
    /// Validates root-space membership and positive homogeneity, then builds Ω.
    pub fn from_terms(
        cx: &ChainComplex<'_>,
        beta: Covector,
        gamma: Covector,
        zeta: Covector,
        terms: Vec<SeedTerm>,
    ) -> Result<Seed> {
        let g = cx.grading();
        let sys = g.system();
        for (name, c) in [("β", &beta), ("γ", &gamma)] {
            if !g.in_p_plus(c) {
                return Err(Error::InvalidSeed(format!("{name} = {} is not in Δ⁺(𝔭₊)", sys.label(c))));
            }
        }
        if !sys.is_root(&zeta) {
            return Err(Error::NotARoot(sys.label(&zeta)));
        }
        let w = &(&beta + &gamma) + &zeta;
        if !g.homogeneity(&w).is_positive() {
            return Err(Error::InvalidSeed("homogeneity is not positive".into()));
        }
        let mut omega = Chain::zero(2);
        for t in &terms {
            for (idx, c) in [(t.beta, &beta), (t.gamma, &gamma), (t.zeta, &zeta)] {
                if idx >= sys.dim() || &sys.weight_of_basis(idx) != c {
                    return Err(Error::InvalidSeed(format!("basis vector {idx} is not in 𝔤_{}", sys.label(c))));
                }
            }
            omega.add_term(vec![t.beta, t.gamma], t.zeta, t.coeff.clone());
        }
        if omega.is_zero() {
            return Err(Error::InvalidSeed("Ω vanishes".into()));
        }
        Ok(Seed { beta, gamma, zeta, terms, omega })
    }

    pub fn from_candidate(c: &Candidate) -> Seed {
        let terms = c
            .chain
            .terms()
            .map(|(k, x)| SeedTerm { beta: k.wedge[0], gamma: k.wedge[1], zeta: k.value, coeff: x.clone() })
            .collect();
        Seed { beta: c.beta.clone(), gamma: c.gamma.clone(), zeta: c.zeta.clone(), terms, omega: c.chain.clone() }
    }

    pub fn weight(&self) -> Covector {
        &(&self.beta + &self.gamma) + &self.zeta
    }

    /// The same seed with Ω multiplied by `factor`.
    pub fn rescaled(&self, factor: &Scalar) -> Seed {
        let mut s = self.clone();
        s.omega = s.omega.scale(factor);
        for t in &mut s.terms {
            t.coeff = &t.coeff * factor;
        }
        s
    }
}

/// `𝔨_Ω`: the annihilator of Ω in 𝔤₀.
pub fn stabilizer_algebra(cx: &ChainComplex<'_>, omega: &Chain) -> Subspace {
    let g = cx.grading();
    let n = g.system().dim();
    let g0 = g.g0();
    let images: Vec<Chain> = g0.iter().map(|&z| cx.g0_action(&unit_vec(n, z), omega)).collect();
    let m = chains_to_matrix(&images);
    let vectors = kernel(&m).into_iter().map(|k| {
        let mut v = zero_vec(n);
        for (c, &z) in k.iter().zip(&g0) {
            v[z] = c.clone();
        }
        v
    });
    Subspace::span(n, vectors)
}

fn chains_to_matrix(cols: &[Chain]) -> Matrix {
    let mut rows = HashMap::new();
    for c in cols {
        for (k, _) in c.terms() {
            let len = rows.len();
            rows.entry(k.clone()).or_insert(len);
        }
    }
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (k, x) in c.terms() {
            m[(rows[k], j)] = x.clone();
        }
    }
    m
}

/// `Ω(X ∧ Y)` for any `X, Y ∈ 𝔤`; only the 𝔤₋ components contribute.
pub fn omega_eval(cx: &ChainComplex<'_>, omega: &Chain, x: &[Scalar], y: &[Scalar]) -> Vector {
    cx.evaluate(omega, &[x.to_vec(), y.to_vec()])
}

/// Images and kernels of Ω on `Λ²𝔤₋`, with `Λ²𝔤₋` coordinates indexed by
/// `pairs` of slots `(a, b)`, `a < b`, against the κ-dual basis `V̂`.
#[derive(Clone, Debug)]
pub struct OmegaMaps {
    pub image: Subspace,
    pub kernel: Subspace,
    pub wedge_image: Subspace,
    pub pairs: Vec<(usize, usize)>,
}

pub fn omega_image_kernel(cx: &ChainComplex<'_>, omega: &Chain) -> OmegaMaps {
    let alg = cx.grading().system().algebra();
    let n = alg.dim();
    let duals: Vec<Vector> = cx.p_plus().iter().map(|&y| cx.dual_of(y).clone()).collect();
    let p = duals.len();
    let pairs: Vec<(usize, usize)> = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect();
    let pair_index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let values: Vec<Vector> = pairs.iter().map(|&(a, b)| omega_eval(cx, omega, &duals[a], &duals[b])).collect();
    let image = Subspace::span(n, values.iter().cloned());
    let ker = if pairs.is_empty() {
        Subspace::zero(0)
    } else {
        Subspace::span(pairs.len(), kernel(&Matrix::from_cols(&values, n).expect("lengths")))
    };
    // Ω values projected to 𝔤/𝔭 ≅ 𝔤₋ in V̂ coordinates: u_d = κ(Y_d, W).
    let proj = |w: &Vector| -> Vector {
        let l = alg.lower(w);
        cx.p_plus().iter().map(|&y| l[y].clone()).collect()
    };
    let projected: HashMap<(usize, usize), Vector> =
        pairs.iter().zip(&values).map(|(&q, v)| (q, proj(v))).collect();
    let wedge_with = |u: &Vector, c: usize, out: &mut Vector, sign: &Scalar| {
        for (d, x) in u.iter().enumerate() {
            if x.is_zero() || d == c {
                continue;
            }
            let (key, s) = if d < c { ((d, c), sign.clone()) } else { ((c, d), -sign) };
            out[pair_index[&key]] += &s * x;
        }
    };
    let mut wedge_image = Subspace::zero(pairs.len());
    for a in 0..p {
        for b in a + 1..p {
            for c in b + 1..p {
                // Ω(X∧Y)∧Z − Ω(X∧Z)∧Y + Ω(Y∧Z)∧X
                let mut out = zero_vec(pairs.len());
                wedge_with(&projected[&(a, b)], c, &mut out, &one());
                wedge_with(&projected[&(a, c)], b, &mut out, &-one());
                wedge_with(&projected[&(b, c)], a, &mut out, &one());
                if !is_zero_vec(&out) {
                    wedge_image.push(out);
                }
            }
        }
    }
    OmegaMaps { image, kernel: ker, wedge_image, pairs }
}

/// Both inclusions of the Kruglikov–The property, with witnesses on failure.
#[derive(Clone, Debug)]
pub struct KtVerdict {
    pub image_in_g_minus_plus_k: bool,
    pub image_witness: Option<Vector>,
    pub wedge_image_in_kernel: bool,
    pub wedge_witness: Option<Vector>,
}

impl KtVerdict {
    pub fn holds(&self) -> bool {
        self.image_in_g_minus_plus_k && self.wedge_image_in_kernel
    }
}

pub fn check_kruglikov_the(cx: &ChainComplex<'_>, omega: &Chain) -> KtVerdict {
    let maps = omega_image_kernel(cx, omega);
    let k = stabilizer_algebra(cx, omega);
    let target = g_minus_space(cx).sum(&k);
    let image_witness = maps.image.basis().iter().find(|v| !target.contains(v)).cloned();
    let wedge_witness = maps.wedge_image.basis().iter().find(|v| !maps.kernel.contains(v)).cloned();
    KtVerdict {
        image_in_g_minus_plus_k: image_witness.is_none(),
        image_witness,
        wedge_image_in_kernel: wedge_witness.is_none(),
        wedge_witness,
    }
}

fn g_minus_space(cx: &ChainComplex<'_>) -> Subspace {
    let n = cx.grading().system().dim();
    Subspace::span(n, cx.grading().g_minus().into_iter().map(|i| unit_vec(n, i)))
}

/// `𝔧_Ω = 𝔤₋ + 𝔨_Ω` with `[X, Y] − Ω(X ∧ Y)`.
#[derive(Debug)]
pub struct DeformedAlgebra {
    /// Basis of the carrier in 𝔤-coordinates: 𝔤₋ basis vectors then 𝔨_Ω.
    pub carrier: Vec<Vector>,
    pub minus_dim: usize,
    pub stabilizer: Subspace,
    pub algebra: LieAlgebra,
    /// First carrier triple on which `"∂Ω"` is nonzero.
    pub partial_omega_witness: Option<(usize, usize, usize)>,
}

impl DeformedAlgebra {
    pub fn carrier_coordinates(&self) -> CoordinateMap {
        CoordinateMap::new(&self.carrier, self.carrier[0].len()).expect("independent carrier")
    }
}

/// Builds `𝔧_Ω`, certifying Jacobi and the vanishing of `"∂Ω"` on carrier triples.
pub fn build_deformed_algebra(cx: &ChainComplex<'_>, omega: &Chain) -> Result<DeformedAlgebra> {
    let g = cx.grading();
    let alg = g.system().algebra();
    let n = alg.dim();
    let stabilizer = stabilizer_algebra(cx, omega);
    let minus: Vec<Vector> = g.g_minus().into_iter().map(|i| unit_vec(n, i)).collect();
    let minus_dim = minus.len();
    let mut carrier = minus;
    carrier.extend(stabilizer.basis().iter().cloned());
    let labels: Vec<String> = (0..carrier.len())
        .map(|i| match g.g_minus().get(i) {
            Some(&b) => alg.label(b).to_string(),
            None => format!("k{}", i - minus_dim),
        })
        .collect();
    let coords = CoordinateMap::new(&carrier, n)?;
    let size = carrier.len();
    let mut brackets = vec![Vec::new(); size * size];
    let mut omegas = vec![Vec::new(); size * size];
    for i in 0..size {
        for j in 0..size {
            brackets[i * size + j] = alg.bracket(&carrier[i], &carrier[j]);
            omegas[i * size + j] = omega_eval(cx, omega, &carrier[i], &carrier[j]);
        }
    }
    let mut failure = None;
    let algebra = LieAlgebra::from_brackets(labels, |i, j| {
        let v = crate::exact::sub(&brackets[i * size + j], &omegas[i * size + j]);
        coords.coordinates(&v).unwrap_or_else(|| {
            failure.get_or_insert((i, j));
            zero_vec(size)
        })
    });
    if let Some((left, right)) = failure {
        return Err(Error::NotClosed { left, right });
    }
    let algebra = algebra?;
    let partial_omega_witness = partial_omega(cx, omega, &carrier, &brackets, &omegas);
    Ok(DeformedAlgebra { carrier, minus_dim, stabilizer, algebra, partial_omega_witness })
}

/// `[X,Ω(Y,Z)] − [Y,Ω(X,Z)] + [Z,Ω(X,Y)] − Ω([X,Y],Z) + Ω([X,Z],Y) − Ω([Y,Z],X)`.
fn partial_omega(
    cx: &ChainComplex<'_>,
    omega: &Chain,
    carrier: &[Vector],
    brackets: &[Vector],
    omegas: &[Vector],
) -> Option<(usize, usize, usize)> {
    let alg = cx.grading().system().algebra();
    let size = carrier.len();
    let at = |t: &[Vector], i: usize, j: usize| t[i * size + j].clone();
    for i in 0..size {
        for j in i + 1..size {
            for k in j + 1..size {
                let mut acc = alg.bracket(&carrier[i], &at(omegas, j, k));
                crate::exact::axpy(&mut acc, &-one(), &alg.bracket(&carrier[j], &at(omegas, i, k)));
                crate::exact::axpy(&mut acc, &one(), &alg.bracket(&carrier[k], &at(omegas, i, j)));
                crate::exact::axpy(&mut acc, &-one(), &omega_eval(cx, omega, &at(brackets, i, j), &carrier[k]));
                crate::exact::axpy(&mut acc, &one(), &omega_eval(cx, omega, &at(brackets, i, k), &carrier[j]));
                crate::exact::axpy(&mut acc, &-one(), &omega_eval(cx, omega, &at(brackets, j, k), &carrier[i]));
                if !is_zero_vec(&acc) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Lie-algebraic layer of the opening-number construction.
#[derive(Clone, Debug)]
pub struct FOmegaReport {
    pub f_dim: usize,
    pub is_ideal: bool,
    pub ideal_witness: Option<(usize, usize)>,
    pub n_omega_dim: usize,
    pub solvable: bool,
    pub derived_dims: Vec<usize>,
    pub image_in_b_minus: bool,
}

pub fn analyze_f_omega(cx: &ChainComplex<'_>, omega: &Chain, d: &DeformedAlgebra) -> Result<FOmegaReport> {
    let g = cx.grading();
    let maps = omega_image_kernel(cx, omega);
    let f = g_minus_space(cx).sum(&maps.image);
    let coords = d.carrier_coordinates();
    let size = d.carrier.len();
    let f_carrier = Subspace::span(
        size,
        f.basis().iter().map(|v| coords.coordinates(v).ok_or(Error::NotClosed { left: 0, right: 0 })).collect::<Result<Vec<_>>>()?,
    );
    let ideal = is_ideal(&d.algebra, &f_carrier, &Subspace::full(size));
    let series = derived_series(&d.algebra, &f_carrier)?;
    let n_omega = f.intersect(&d.stabilizer);
    let b_minus = g.b_minus();
    let image_in_b_minus = maps.image.basis().iter().all(|v| g.supported_on(v, &b_minus));
    Ok(FOmegaReport {
        f_dim: f.dim(),
        is_ideal: ideal.holds,
        ideal_witness: ideal.witness,
        n_omega_dim: n_omega.dim(),
        solvable: series.solvable,
        derived_dims: series.terms.iter().map(Subspace::dim).collect(),
        image_in_b_minus,
    })
}

/// Which theorem certifies the seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedRoute {
    /// `ζ ∉ Δ⁺(𝔭₊) ∪ {−β, −γ}` for a lowest weight vector.
    MainTheorem,
    /// Kruglikov–The and `im Ω ⊆ 𝔟₋`.
    OpeningNumber,
}

/// The consequences `β+γ, β+ζ, γ+ζ ∉ Δ ∪ {0}` for split candidates.
#[derive(Clone, Debug)]
pub struct CorollaryCheck {
    pub sums_avoid_roots: bool,
    pub offending: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SeedVerdict {
    pub in_kernel: bool,
    pub lowest_weight: bool,
    pub homogeneity: Scalar,
    pub zeta_outside_p_plus: bool,
    pub zeta_not_minus_beta_gamma: bool,
    pub kruglikov_the: KtVerdict,
    pub image_in_b_minus: bool,
    pub corollary: Option<CorollaryCheck>,
    pub route: Option<SeedRoute>,
    /// Set when the chain fails a hypothesis of every available theorem.
    pub unmet: Option<String>,
}

impl SeedVerdict {
    pub fn is_harmonic_seed(&self) -> bool {
        self.route.is_some()
    }
}

pub fn certify_harmonic_seed(cx: &ChainComplex<'_>, seed: &Seed) -> SeedVerdict {
    let g = cx.grading();
    let sys = g.system();
    let omega = &seed.omega;
    let in_kernel = cx.laplacian(omega).is_zero();
    let lowest_weight = cx.is_lowest_weight(omega);
    let homogeneity = g.homogeneity(&seed.weight());
    let zeta_outside_p_plus = !g.in_p_plus(&seed.zeta);
    let zeta_not_minus_beta_gamma = seed.zeta != -&seed.beta && seed.zeta != -&seed.gamma;
    let kt = check_kruglikov_the(cx, omega);
    let maps = omega_image_kernel(cx, omega);
    let b_minus = g.b_minus();
    let image_in_b_minus = maps.image.basis().iter().all(|v| g.supported_on(v, &b_minus));
    let corollary = sys.is_split().then(|| {
        let mut offending = Vec::new();
        for (name, a, b) in [("β+γ", &seed.beta, &seed.gamma), ("β+ζ", &seed.beta, &seed.zeta), ("γ+ζ", &seed.gamma, &seed.zeta)] {
            let s = a + b;
            if s.is_zero() || sys.is_root(&s) {
                offending.push(name.to_string());
            }
        }
        CorollaryCheck { sums_avoid_roots: offending.is_empty(), offending }
    });
    let mut unmet = None;
    let route = if !in_kernel || !lowest_weight || !homogeneity.is_positive() {
        unmet = Some("Ω is not a lowest weight vector in ker(□)₊".to_string());
        None
    } else if zeta_outside_p_plus && zeta_not_minus_beta_gamma {
        Some(SeedRoute::MainTheorem)
    } else if kt.holds() && image_in_b_minus {
        Some(SeedRoute::OpeningNumber)
    } else {
        unmet = Some("theorem hypotheses not met".to_string());
        None
    };
    SeedVerdict {
        in_kernel,
        lowest_weight,
        homogeneity,
        zeta_outside_p_plus,
        zeta_not_minus_beta_gamma,
        kruglikov_the: kt,
        image_in_b_minus,
        corollary,
        route,
        unmet,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_sl, SlBasis};
    use crate::exact::int;
    use crate::parabolic::grade;

    fn sl4_seed(cross: &[usize]) -> (crate::parabolic::ParabolicGrading, SlBasis) {
        (grade(build_sl(4).unwrap(), cross).unwrap(), SlBasis::new(4))
    }

    fn eps_seed(cx: &ChainComplex<'_>, b: &SlBasis, pairs: [(usize, usize); 3]) -> Seed {
        let f = cx.grading().system().frame();
        let cov = |(i, j): (usize, usize)| {
            let mut e = vec![0i64; 4];
            e[i] = 1;
            e[j] = -1;
            f.from_eps_ints(&e).unwrap()
        };
        let t = SeedTerm { beta: b.e(pairs[0].0, pairs[0].1), gamma: b.e(pairs[1].0, pairs[1].1), zeta: b.e(pairs[2].0, pairs[2].1), coeff: int(1) };
        Seed::from_terms(cx, cov(pairs[0]), cov(pairs[1]), cov(pairs[2]), vec![t]).unwrap()
    }

    #[test]
    fn grassmannian_seed_certifies() {
        let (g, b) = sl4_seed(&[2]);
        let cx = ChainComplex::new(&g).unwrap();
        let s = eps_seed(&cx, &b, [(1, 2), (1, 3), (1, 0)]);
        let v = certify_harmonic_seed(&cx, &s);
        assert_eq!(v.route, Some(SeedRoute::MainTheorem));
        assert!(v.kruglikov_the.holds());
        assert!(v.corollary.unwrap().sums_avoid_roots);
        let k = stabilizer_algebra(&cx, &s.omega);
        // 𝔞 ∩ 𝔨_Ω = ker(4ε₂)
        let a = Subspace::span(15, (0..3).map(|i| unit_vec(15, i)));
        assert_eq!(a.intersect(&k).dim(), 2);
        for z in k.basis() {
            assert!(cx.g0_action(z, &s.omega).is_zero());
        }
        let d = build_deformed_algebra(&cx, &s.omega).unwrap();
        assert_eq!(d.partial_omega_witness, None);
        let f = analyze_f_omega(&cx, &s.omega, &d).unwrap();
        assert!(f.is_ideal && f.solvable && f.image_in_b_minus);
        assert_eq!(f.n_omega_dim, 1);
    }

    #[test]
    fn borel_seed_image_is_one_root_space() {
        let (g, b) = sl4_seed(&[1, 2, 3]);
        let cx = ChainComplex::new(&g).unwrap();
        let s = eps_seed(&cx, &b, [(1, 2), (1, 3), (1, 0)]);
        let maps = omega_image_kernel(&cx, &s.omega);
        assert_eq!(maps.image.dim(), 1);
        assert!(maps.image.contains(&unit_vec(15, b.e(1, 0))));
        let a = Subspace::span(15, (0..3).map(|i| unit_vec(15, i)));
        assert_eq!(a.intersect(&stabilizer_algebra(&cx, &s.omega)).dim(), 2);
    }

    #[test]
    fn zero_chain_is_vacuous() {
        let (g, _) = sl4_seed(&[2]);
        let cx = ChainComplex::new(&g).unwrap();
        let z = Chain::zero(2);
        assert_eq!(stabilizer_algebra(&cx, &z).dim(), g.g0().len());
        assert!(check_kruglikov_the(&cx, &z).holds());
        let d = build_deformed_algebra(&cx, &z).unwrap();
        assert_eq!(d.carrier.len(), g.g_minus().len() + g.g0().len());
    }
}
