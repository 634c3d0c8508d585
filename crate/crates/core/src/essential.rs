//! Essential and shrinking elements `ȧ₀, ċ₀ ∈ ker(β+γ+ζ) ⊆ 𝔞`, the holonomy
//! algebra of the curvature tree, and the aggregate construction certificate.

use crate::error::{Error, Result};
use crate::exact::{dot, is_zero_vec, kernel, linear_feasibility, project_orthogonal, solve_affine, zero, Matrix, Scalar, Subspace, Vector};
use crate::kostant::ChainComplex;
use crate::parabolic::ParabolicGrading;
use crate::roots::Covector;
use crate::seed::{certify_harmonic_seed, omega_image_kernel, Seed, SeedVerdict};
use num_traits::{Signed, Zero};

/// `{H ∈ 𝔞 : w(H) = 0}` in 𝔞-coordinates.
pub fn weight_kernel(g: &ParabolicGrading, w: &Covector) -> Subspace {
    let rank = g.system().rank();
    if w.is_zero() {
        return Subspace::full(rank);
    }
    let m = Matrix::from_rows(&[w.0.clone()], rank).expect("rank-length covector");
    Subspace::span(rank, kernel(&m))
}

/// Whether `w^κ` is a scaling element.
pub fn weight_is_scaling(g: &ParabolicGrading, w: &Covector) -> bool {
    g.is_scaling_element(&g.system().dual(w))
}

/// κ-orthogonal projection of `h ∈ 𝔞` onto `𝔤₀^ss ∩ 𝔞`.
pub fn project_semisimple(g: &ParabolicGrading, h: &[Scalar]) -> Vector {
    if g.center_a().is_empty() {
        return h.to_vec();
    }
    project_orthogonal(h, g.center_a(), g.system().cartan_gram()).expect("κ is definite on 𝔞")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum A0Strategy {
    CentralNotScaling,
    BigG0,
    RankOneFallback,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C0Strategy {
    Projection,
    Feasibility,
}

/// `ȧ₀ = α^κ + R` with `ȧ₀ ∈ ker(β+γ+ζ) ∩ ker(ν₀)`.
#[derive(Clone, Debug)]
pub struct A0Certificate {
    pub alpha: Covector,
    pub nu0: Covector,
    pub r: Vector,
    pub a0: Vector,
    pub strategy: A0Strategy,
    /// Basis vector of `𝔤_{-ν₀}` whose exponential is the second fixed point.
    pub fixed_point: usize,
    pub in_weight_kernel: bool,
    pub in_nu0_kernel: bool,
    pub r_in_semisimple: bool,
    /// `λ_*(ȧ₀) = λ_*(α^κ) ≠ 0` for the scaling elements among `E_gr` and the centre basis.
    pub essential_on_scaling: bool,
}

impl A0Certificate {
    pub fn valid(&self) -> bool {
        self.in_weight_kernel && self.in_nu0_kernel && self.r_in_semisimple && self.essential_on_scaling
    }
}

#[derive(Clone, Debug)]
pub struct C0Certificate {
    pub c0: Vector,
    pub strategy: C0Strategy,
    /// Whether the projection criterion held, and the first violating root otherwise.
    pub projection_accepted: bool,
    pub projection_violation: Option<Covector>,
    pub in_weight_kernel: bool,
    pub shrinks_all: bool,
}

impl C0Certificate {
    pub fn valid(&self) -> bool {
        self.in_weight_kernel && self.shrinks_all
    }
}

fn roots_p_plus(g: &ParabolicGrading) -> Vec<Covector> {
    g.p_plus_roots().into_iter().map(|r| g.system().root(r).covector.clone()).collect()
}

/// Certifies `ȧ₀ = α^κ + R`.
fn certify_a0(g: &ParabolicGrading, w: &Covector, alpha: &Covector, nu0: &Covector, r: Vector, strategy: A0Strategy) -> Option<A0Certificate> {
    let sys = g.system();
    let alpha_k = sys.dual_a(alpha);
    let a0: Vector = alpha_k.iter().zip(&r).map(|(x, y)| x + y).collect();
    let gram = sys.cartan_gram();
    let r_in_semisimple = g.center_a().iter().all(|z| gram.bilinear(z, &r).is_zero());
    let mut scaling: Vec<Vector> = vec![g.grading_element_a().to_vec()];
    scaling.extend(g.center_a().iter().filter(|z| g.is_scaling_element(&sys.embed_a(z))).cloned());
    let essential_on_scaling = g.in_p_plus(alpha)
        && scaling.iter().all(|z| {
            let lam = gram.bilinear(z, &a0);
            lam == alpha.apply(z) && !lam.is_zero()
        });
    let minus = sys.find_root(&-nu0)?;
    Some(A0Certificate {
        alpha: alpha.clone(),
        nu0: nu0.clone(),
        in_weight_kernel: w.apply(&a0).is_zero(),
        in_nu0_kernel: nu0.apply(&a0).is_zero(),
        r,
        a0,
        strategy,
        fixed_point: sys.root(minus).space[0],
        r_in_semisimple,
        essential_on_scaling,
    })
}

/// `R ∈ 𝔤₀^ss ∩ 𝔞` with `w(α^κ + R) = 0` and `ν₀(α^κ + R) = 0`, if any.
fn solve_r(g: &ParabolicGrading, w: &Covector, alpha: &Covector, nu0: &Covector) -> Option<Vector> {
    let sys = g.system();
    let rank = sys.rank();
    let ss = g.semisimple_a();
    let alpha_k = sys.dual_a(alpha);
    if ss.is_empty() {
        return (w.apply(&alpha_k).is_zero() && nu0.apply(&alpha_k).is_zero()).then(|| vec![zero(); rank]);
    }
    let row = |c: &Covector| -> Vector { ss.iter().map(|s| c.apply(s)).collect() };
    let m = Matrix::from_rows(&[row(w), row(nu0)], ss.len()).ok()?;
    let rhs = [-w.apply(&alpha_k), -nu0.apply(&alpha_k)];
    let sol = solve_affine(&m, &rhs).ok()?;
    let mut r = vec![zero(); rank];
    for (c, s) in sol.particular.iter().zip(ss) {
        crate::exact::axpy(&mut r, c, s);
    }
    Some(r)
}

/// Finds `(α, ν₀, R)`, trying the central case, the large-`𝔤₀^ss` case, the
/// rank-one formula and finally every pair in canonical order.
pub fn find_a0(g: &ParabolicGrading, w: &Covector) -> Result<A0Certificate> {
    if weight_is_scaling(g, w) {
        return Err(Error::NotFound("weight is scaling element".into()));
    }
    let sys = g.system();
    let pp = roots_p_plus(g);
    let wk = sys.dual_a(w);
    let pr_w = project_semisimple(g, &wk);
    let accept = |c: Option<A0Certificate>| c.filter(A0Certificate::valid);

    if is_zero_vec(&pr_w) {
        for alpha in pp.iter().filter(|a| sys.inner(w, a).is_zero()) {
            for nu0 in &pp {
                let r = if g.semisimple_a().is_empty() {
                    if !sys.inner(nu0, alpha).is_zero() {
                        continue;
                    }
                    vec![zero(); sys.rank()]
                } else {
                    let pr_nu = project_semisimple(g, &sys.dual_a(nu0));
                    let denom = nu0.apply(&pr_nu);
                    if denom.is_zero() {
                        continue;
                    }
                    let f = -sys.inner(nu0, alpha) / denom;
                    crate::exact::scale(&f, &pr_nu)
                };
                if let Some(c) = accept(certify_a0(g, w, alpha, nu0, r, A0Strategy::CentralNotScaling)) {
                    return Ok(c);
                }
            }
        }
    } else if g.semisimple_a().len() > 1 {
        let mut alphas = pp.clone();
        if let Some(h) = sys.highest_root() {
            let h = sys.root(h).covector.clone();
            if let Some(p) = alphas.iter().position(|a| *a == h) {
                let h = alphas.remove(p);
                alphas.insert(0, h);
            }
        }
        for want_zero in [true, false] {
            for alpha in &alphas {
                for nu0 in &pp {
                    let Some(r) = solve_r(g, w, alpha, nu0) else { continue };
                    if want_zero != is_zero_vec(&r) {
                        continue;
                    }
                    if let Some(c) = accept(certify_a0(g, w, alpha, nu0, r, A0Strategy::BigG0)) {
                        return Ok(c);
                    }
                }
            }
        }
    } else if g.semisimple_a().len() == 1 {
        let g0_roots: Vec<Covector> = g.g0_roots().into_iter().map(|r| sys.root(r).covector.clone()).collect();
        let orthogonal: Vec<&Covector> =
            pp.iter().filter(|a| g0_roots.iter().all(|b| sys.inner(a, b).is_zero())).collect();
        let denom = w.apply(&pr_w);
        for alpha in &orthogonal {
            for nu0 in orthogonal.iter().filter(|n| sys.inner(n, alpha).is_zero()) {
                let f = -sys.inner(w, alpha) / &denom;
                let r = crate::exact::scale(&f, &pr_w);
                if let Some(c) = accept(certify_a0(g, w, alpha, nu0, r, A0Strategy::RankOneFallback)) {
                    return Ok(c);
                }
            }
        }
    }
    for alpha in &pp {
        for nu0 in &pp {
            if let Some(r) = solve_r(g, w, alpha, nu0) {
                if let Some(c) = accept(certify_a0(g, w, alpha, nu0, r, A0Strategy::Exhaustive)) {
                    return Ok(c);
                }
            }
        }
    }
    Err(Error::NotFound("no α, ν₀ ∈ Δ⁺(𝔭₊) and R ∈ 𝔤₀^ss ∩ 𝔞 satisfy both kernel conditions".into()))
}

/// `κ(w, ν) < κ(w, w) / w(E_gr)` for every grade-one root; returns the first violation.
pub fn shrink_criterion(g: &ParabolicGrading, w: &Covector) -> Option<Covector> {
    let sys = g.system();
    let bound = sys.inner(w, w) / g.homogeneity(w);
    roots_p_plus(g)
        .into_iter()
        .filter(|nu| g.homogeneity(nu) == Scalar::from_integer(1.into()))
        .find(|nu| sys.inner(w, nu) >= bound)
}

/// `pr_{ker w}(E_gr)` in 𝔞-coordinates.
pub fn projected_grading_element(g: &ParabolicGrading, w: &Covector) -> Vector {
    let sys = g.system();
    project_orthogonal(g.grading_element_a(), &[sys.dual_a(w)], sys.cartan_gram()).expect("w ≠ 0")
}

pub fn certify_c0(g: &ParabolicGrading, w: &Covector, c0: Vector, strategy: C0Strategy, violation: Option<Covector>) -> C0Certificate {
    C0Certificate {
        in_weight_kernel: w.apply(&c0).is_zero(),
        shrinks_all: roots_p_plus(g).iter().all(|nu| nu.apply(&c0).is_positive()),
        projection_accepted: violation.is_none(),
        projection_violation: violation,
        c0,
        strategy,
    }
}

/// `ċ₀ ∈ ker w` with `ν(ċ₀) > 0` on `Δ⁺(𝔭₊)`: the projection of `E_gr` when the
/// criterion holds, otherwise a feasibility search on the grade-one roots.
pub fn find_c0(g: &ParabolicGrading, w: &Covector) -> Result<C0Certificate> {
    if w.is_zero() || !g.homogeneity(w).is_positive() {
        return Err(Error::NotFound("weight has no positive homogeneity".into()));
    }
    let violation = shrink_criterion(g, w);
    if violation.is_none() {
        let c = certify_c0(g, w, projected_grading_element(g, w), C0Strategy::Projection, None);
        if c.valid() {
            return Ok(c);
        }
    }
    let strict: Vec<(Vector, Scalar)> = roots_p_plus(g)
        .into_iter()
        .filter(|nu| g.homogeneity(nu) == Scalar::from_integer(1.into()))
        .map(|nu| (nu.0, zero()))
        .collect();
    let x = linear_feasibility(g.system().rank(), &[(w.0.clone(), zero())], &strict)
        .map_err(|_| Error::NotFound("no ċ₀ in ker(β+γ+ζ) is positive on 𝔤₁".into()))?;
    let c = certify_c0(g, w, x, C0Strategy::Feasibility, violation);
    if c.valid() {
        Ok(c)
    } else {
        Err(Error::NotFound("feasibility output failed re-check".into()))
    }
}

#[derive(Clone, Debug)]
pub struct HolonomyReport {
    pub hol: Subspace,
    /// Weights of the root spaces meeting `hol`, in canonical order.
    pub support: Vec<Covector>,
    pub steps: usize,
    pub closed: bool,
    pub contains_image: bool,
    pub within_cone: bool,
    pub transversal: bool,
    pub nilpotent: bool,
}

impl HolonomyReport {
    pub fn ok(&self) -> bool {
        self.closed && self.contains_image && self.within_cone && self.transversal && self.nilpotent
    }
}

/// `im Ω + [𝔤₋, im Ω] + [𝔤₋, [𝔤₋, im Ω]] + …` with its verdicts.
pub fn holonomy_algebra(cx: &ChainComplex<'_>, seed: &Seed) -> HolonomyReport {
    let g = cx.grading();
    let sys = g.system();
    let alg = sys.algebra();
    let n = alg.dim();
    let image = omega_image_kernel(cx, &seed.omega).image;
    let minus = Subspace::span(n, g.g_minus().into_iter().map(|i| crate::exact::unit_vec(n, i)));
    let mut hol = image.clone();
    let mut steps = 0;
    loop {
        let next = hol.sum(&alg.bracket_span(&minus, &hol));
        if next.dim() == hol.dim() {
            break;
        }
        hol = next;
        steps += 1;
    }
    let closed = hol.contains_subspace(&alg.bracket_span(&minus, &hol));
    let mut cone = Vec::new();
    let depth = g.depth() as usize * 4 + 2;
    for i in 0..=depth {
        for j in 0..=depth {
            let nu = &(&seed.zeta - &seed.beta.scale(&Scalar::from_integer((i as i64).into())))
                - &seed.gamma.scale(&Scalar::from_integer((j as i64).into()));
            if nu.is_zero() {
                cone.extend(sys.zero_space().iter().copied());
            } else if let Some(r) = sys.find_root(&nu) {
                cone.extend(sys.root(r).space.iter().copied());
            }
        }
    }
    let within_cone = hol.basis().iter().all(|v| g.supported_on(v, &cone));
    let w = seed.weight();
    let kernel_in_g = Subspace::span(n, weight_kernel(g, &w).basis().iter().map(|h| sys.embed_a(h)));
    let transversal = kernel_in_g.intersect(&hol).dim() == 0;
    let nilpotent = hol.basis().iter().all(|v| alg.is_ad_nilpotent(v));
    let mut support = Vec::new();
    for (r, root) in sys.roots().iter().enumerate() {
        if hol.basis().iter().any(|v| root.space.iter().any(|&i| !v[i].is_zero())) {
            support.push(sys.root(r).covector.clone());
        }
    }
    if hol.basis().iter().any(|v| sys.zero_space().iter().any(|&i| !v[i].is_zero())) {
        support.insert(0, Covector::zero(sys.rank()));
    }
    HolonomyReport {
        contains_image: hol.contains_subspace(&image),
        hol,
        support,
        steps,
        closed,
        within_cone,
        transversal,
        nilpotent,
    }
}

/// Everything needed to apply the compact-quotient construction.
#[derive(Clone, Debug)]
pub struct ConstructionCertificate {
    pub seed: SeedVerdict,
    pub weight: Covector,
    pub weight_is_scaling: bool,
    pub a0: Option<A0Certificate>,
    pub c0: Option<C0Certificate>,
    pub holonomy: Option<HolonomyReport>,
    /// The first unmet hypothesis, if any.
    pub failure: Option<String>,
}

impl ConstructionCertificate {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs every gate in order, stopping at the first failure.
pub fn certify_construction(cx: &ChainComplex<'_>, seed: &Seed) -> ConstructionCertificate {
    let g = cx.grading();
    let w = seed.weight();
    let verdict = certify_harmonic_seed(cx, seed);
    let scaling = weight_is_scaling(g, &w);
    let mut cert = ConstructionCertificate {
        seed: verdict,
        weight: w.clone(),
        weight_is_scaling: scaling,
        a0: None,
        c0: None,
        holonomy: None,
        failure: None,
    };
    if !cert.seed.is_harmonic_seed() {
        cert.failure = Some(format!("harmonic seed: {}", cert.seed.unmet.clone().unwrap_or_default()));
        return cert;
    }
    if scaling {
        cert.failure = Some("weight is scaling element".into());
        return cert;
    }
    match find_a0(g, &w) {
        Ok(a) => cert.a0 = Some(a),
        Err(e) => {
            cert.failure = Some(format!("ȧ₀: {e}"));
            return cert;
        }
    }
    match find_c0(g, &w) {
        Ok(c) => cert.c0 = Some(c),
        Err(e) => {
            cert.failure = Some(format!("ċ₀: {e}"));
            return cert;
        }
    }
    let hol = holonomy_algebra(cx, seed);
    if !hol.ok() {
        cert.failure = Some("holonomy".into());
    }
    cert.holonomy = Some(hol);
    cert
}

/// `ν(x)` for every positive root of `𝔭₊`, used when rendering certificates.
pub fn p_plus_values(g: &ParabolicGrading, x: &[Scalar]) -> Vec<(Covector, Scalar)> {
    roots_p_plus(g).into_iter().map(|nu| {
        let v = dot(&nu.0, x);
        (nu, v)
    }).collect()
}
