use crate::report::{Check, Report};
use parabolic_seeds::builders::AlgebraSpec;
use parabolic_seeds::essential::{certify_construction, A0Certificate, C0Certificate, ConstructionCertificate, HolonomyReport};
use parabolic_seeds::exact::{format_scalar, format_vector, unit_vec, Scalar};
use parabolic_seeds::fixtures::{resolve_fixture, SeedSpec};
use parabolic_seeds::kostant::{enumerate_candidates, hodge_audit, Candidate, CandidateSource, Chain, ChainComplex};
use parabolic_seeds::lie::{parse_structure_constants, LieAlgebra};
use parabolic_seeds::parabolic::{grade, ParabolicGrading};
use parabolic_seeds::roots::{Covector, RestrictedRootSystem};
use parabolic_seeds::seed::{Seed, SeedRoute, SeedVerdict};
use parabolic_seeds::Error;
use rayon::prelude::*;

/// Failures that map to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Report, InputError>;

fn eps_string(sys: &RestrictedRootSystem, nu: &Covector) -> String {
    let parts: Vec<String> = sys.frame().to_eps(nu).iter().map(format_scalar).collect();
    parts.join(",")
}

/// ε-coordinates of an element of 𝔞 given in 𝔞-coordinates.
fn a_element(sys: &RestrictedRootSystem, h: &[Scalar]) -> String {
    let f = sys.frame();
    let n = f.eps_len();
    let values: Vec<Scalar> = (0..n)
        .map(|i| {
            let e: Vec<Scalar> = unit_vec(n, i);
            f.from_eps(&e).expect("unit ε").apply(h)
        })
        .collect();
    format!("ε-values {}", format_vector(&values))
}

fn term_units(sys: &RestrictedRootSystem, idx: usize) -> String {
    let r = sys.root_of_basis(idx).expect("root vector");
    let root = sys.root(r);
    let pos = root.space.iter().position(|&i| i == idx).expect("in root space");
    root.units[pos].clone()
}

/// Inline descriptor accepted by `certify --seed`.
pub fn seed_descriptor(sys: &RestrictedRootSystem, beta: &Covector, gamma: &Covector, zeta: &Covector, chain: &Chain) -> String {
    let mut terms = Vec::new();
    for (key, c) in chain.terms() {
        let (a, b) = (key.wedge[0], key.wedge[1]);
        let (x, y, coeff) = if &sys.weight_of_basis(a) == beta { (a, b, c.clone()) } else { (b, a, -c) };
        terms.push(format!(
            "{}@{}.{}.{}",
            format_scalar(&coeff),
            term_units(sys, x),
            term_units(sys, y),
            term_units(sys, key.value)
        ));
    }
    format!(
        "beta={};gamma={};zeta={};terms={}",
        eps_string(sys, beta),
        eps_string(sys, gamma),
        eps_string(sys, zeta),
        terms.join(",")
    )
}

fn pool(parallel: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(parallel.max(1)).build().expect("thread pool")
}

fn graded(algebra: &AlgebraSpec, cross: &[usize]) -> Result<ParabolicGrading, InputError> {
    if cross.is_empty() {
        return Err(InputError("--cross is required".into()));
    }
    Ok(grade(algebra.build()?, cross)?)
}

pub fn enumerate(algebra: &AlgebraSpec, cross: &[usize], parallel: usize) -> CmdResult {
    let g = graded(algebra, cross)?;
    let cx = ChainComplex::new(&g)?;
    let candidates = enumerate_candidates(&cx);
    let certs: Vec<ConstructionCertificate> =
        pool(parallel).install(|| candidates.par_iter().map(|c| certify_construction(&cx, &Seed::from_candidate(c))).collect());
    let mut report = Report::new("enumerate");
    report.algebra = Some(algebra.to_string());
    report.cross = cross.to_vec();
    report.push(Check::info("candidates", "lowest weight vectors in ker □ of positive homogeneity").with("count", candidates.len().to_string()));
    for (k, (c, cert)) in candidates.iter().zip(&certs).enumerate() {
        report.push(candidate_check(k + 1, &g, c, cert));
    }
    report.finish();
    Ok(report)
}

fn candidate_check(k: usize, g: &ParabolicGrading, c: &Candidate, cert: &ConstructionCertificate) -> Check {
    let sys = g.system();
    let source = match c.source {
        CandidateSource::Bbw { i, j } => format!("BBW form for simple roots ({i}, {j})"),
        CandidateSource::Scan => "joint kernel scan".into(),
    };
    let w = cert.weight.clone();
    Check::info(format!("candidate {k}"), "lowest weight vector in ker □")
        .with("β", sys.label(&c.beta))
        .with("γ", sys.label(&c.gamma))
        .with("ζ", sys.label(&c.zeta))
        .with("weight", sys.label(&w))
        .with("homogeneity", format_scalar(&g.homogeneity(&w)))
        .with("source", source)
        .with("terms", c.chain.len().to_string())
        .with("descriptor", seed_descriptor(sys, &c.beta, &c.gamma, &c.zeta, &c.chain))
        .with("route", route_name(&cert.seed))
        .with("construction", match &cert.failure {
            None => "PASS".to_string(),
            Some(f) => format!("FAIL ({f})"),
        })
}

fn route_name(v: &SeedVerdict) -> String {
    match v.route {
        Some(SeedRoute::MainTheorem) => "main theorem".into(),
        Some(SeedRoute::OpeningNumber) => "Kruglikov–The with im Ω ⊆ 𝔟₋".into(),
        None => format!("none ({})", v.unmet.clone().unwrap_or_default()),
    }
}

pub struct CertifyInput {
    pub algebra: AlgebraSpec,
    pub cross: Vec<usize>,
    pub seed: SeedSpec,
    pub descriptor: String,
}

pub fn certify_input(
    fixture: Option<&str>,
    algebra: Option<AlgebraSpec>,
    cross: &[usize],
    seed: Option<&str>,
) -> Result<CertifyInput, InputError> {
    match (fixture, seed) {
        (Some(_), Some(_)) => Err(InputError("--fixture and --seed are exclusive".into())),
        (Some(name), None) => {
            let f = resolve_fixture(name)?;
            Ok(CertifyInput { algebra: f.algebra, cross: f.cross, seed: f.seed, descriptor: format!("fixture:{}", f.name) })
        }
        (None, Some(s)) => {
            let algebra = algebra.ok_or_else(|| InputError("--seed needs --algebra".into()))?;
            Ok(CertifyInput { algebra, cross: cross.to_vec(), seed: SeedSpec::parse_inline(s)?, descriptor: s.to_string() })
        }
        (None, None) => Err(InputError("certify needs --fixture or --seed".into())),
    }
}

pub fn certify(input: &CertifyInput) -> CmdResult {
    let g = graded(&input.algebra, &input.cross)?;
    let cx = ChainComplex::new(&g)?;
    let seed = input.seed.build(&cx)?;
    let cert = certify_construction(&cx, &seed);
    let sys = g.system();
    let mut report = Report::new("certify");
    report.algebra = Some(input.algebra.to_string());
    report.cross = input.cross.clone();
    report.seed = Some(input.descriptor.clone());
    let v = &cert.seed;
    report.push(
        Check::info("seed", "input")
            .with("β", sys.label(&seed.beta))
            .with("γ", sys.label(&seed.gamma))
            .with("ζ", sys.label(&seed.zeta))
            .with("weight", sys.label(&cert.weight))
            .with("terms", seed.omega.len().to_string()),
    );
    report.push(Check::new("□Ω = 0", "harmonic curvature", v.in_kernel));
    report.push(Check::new("Ω is a lowest weight vector", "lowest weight", v.lowest_weight));
    report.push(Check::new("positive homogeneity", "ker(□)₊", v.homogeneity > Scalar::from_integer(0.into())).with("homogeneity", format_scalar(&v.homogeneity)));
    report.push(Check::info("ζ ∉ Δ⁺(𝔭₊)", "main theorem").with("holds", v.zeta_outside_p_plus.to_string()));
    report.push(Check::info("ζ ∉ {−β, −γ}", "main theorem").with("holds", v.zeta_not_minus_beta_gamma.to_string()));
    let kt = &v.kruglikov_the;
    let mut kt_check = Check::info("Kruglikov–The property", "Kruglikov–The")
        .with("im Ω ⊆ 𝔤₋ ⊕ 𝔨_Ω", kt.image_in_g_minus_plus_k.to_string())
        .with("Ω(Λ²) ∧ · ⊆ ker", kt.wedge_image_in_kernel.to_string());
    if let Some(w) = &kt.image_witness {
        kt_check = kt_check.with("image witness", format_vector(w));
    }
    if let Some(w) = &kt.wedge_witness {
        kt_check = kt_check.with("wedge witness", format_vector(w));
    }
    report.push(kt_check);
    report.push(Check::info("im Ω ⊆ 𝔟₋", "opening number").with("holds", v.image_in_b_minus.to_string()));
    if let Some(c) = &v.corollary {
        let mut check = Check::new("β+γ, β+ζ, γ+ζ are not roots", "split corollary", c.sums_avoid_roots);
        if !c.offending.is_empty() {
            check = check.with("offending", c.offending.join(", "));
        }
        report.push(check);
    }
    report.push(Check::new("harmonic seed", "harmonic seed", v.is_harmonic_seed()).with("route", route_name(v)));
    if v.is_harmonic_seed() {
        report.push(Check::new("weight is not a scaling element", "essential flow", !cert.weight_is_scaling));
    }
    if let Some(a) = &cert.a0 {
        report.push(a0_check(sys, a));
    }
    if let Some(c) = &cert.c0 {
        report.push(c0_check(sys, c));
    }
    if let Some(h) = &cert.holonomy {
        report.push(holonomy_check(sys, h));
    }
    report.failure = cert.failure.clone();
    report.finish();
    Ok(report)
}

fn a0_check(sys: &RestrictedRootSystem, a: &A0Certificate) -> Check {
    Check::new("ȧ₀ exists", "essential ȧ₀", a.valid())
        .with("strategy", format!("{:?}", a.strategy))
        .with("α", sys.label(&a.alpha))
        .with("ν₀", sys.label(&a.nu0))
        .with("R", a_element(sys, &a.r))
        .with("ȧ₀", a_element(sys, &a.a0))
        .with("fixed point direction", sys.algebra().label(a.fixed_point).to_string())
        .with("(β+γ+ζ)(ȧ₀) = 0", a.in_weight_kernel.to_string())
        .with("ν₀(ȧ₀) = 0", a.in_nu0_kernel.to_string())
        .with("R semisimple", a.r_in_semisimple.to_string())
        .with("essential on scaling elements", a.essential_on_scaling.to_string())
}

fn c0_check(sys: &RestrictedRootSystem, c: &C0Certificate) -> Check {
    let mut check = Check::new("ċ₀ exists", "shrinking ċ₀", c.valid())
        .with("strategy", format!("{:?}", c.strategy))
        .with("projection accepted", c.projection_accepted.to_string());
    if let Some(v) = &c.projection_violation {
        check = check.with("projection violated by", sys.label(v));
    }
    check
        .with("ċ₀", a_element(sys, &c.c0))
        .with("(β+γ+ζ)(ċ₀) = 0", c.in_weight_kernel.to_string())
        .with("ν(ċ₀) > 0 on Δ⁺(𝔭₊)", c.shrinks_all.to_string())
}

fn holonomy_check(sys: &RestrictedRootSystem, h: &HolonomyReport) -> Check {
    let support: Vec<String> = h.support.iter().map(|c| sys.label(c)).collect();
    Check::new("holonomy", "holonomy transversality", h.ok())
        .with("dim", h.hol.dim().to_string())
        .with("support", support.join(", "))
        .with("closed under 𝔤₋", h.closed.to_string())
        .with("contains im Ω", h.contains_image.to_string())
        .with("within ζ − ℕβ − ℕγ", h.within_cone.to_string())
        .with("transversal to ker(β+γ+ζ)", h.transversal.to_string())
        .with("ad-nilpotent", h.nilpotent.to_string())
}

/// `ad x` is κ-skew for every basis vector; returns the first offender.
fn killing_invariance_witness(alg: &LieAlgebra) -> Option<usize> {
    let n = alg.dim();
    let k = alg.killing_matrix();
    (0..n).find(|&i| {
        let ad = alg.ad_matrix(&unit_vec(n, i));
        let lhs = ad.transpose().mul(k);
        let rhs = k.mul(&ad);
        !(0..n).all(|r| (0..n).all(|c| (&lhs[(r, c)] + &rhs[(r, c)]) == Scalar::from_integer(0.into())))
    })
}

fn algebra_checks(report: &mut Report, alg: &LieAlgebra) {
    let mut jacobi = Check::new("Jacobi identity", "plumbing", true);
    if let Some((i, j, k)) = alg.jacobi_witness() {
        jacobi = Check::new("Jacobi identity", "plumbing", false)
            .with("witness", format!("({}, {}, {})", alg.label(i), alg.label(j), alg.label(k)));
    }
    report.push(jacobi);
    let semisimple = alg.is_semisimple();
    report.push(Check::new("κ nondegenerate", "plumbing", semisimple).with("dim", alg.dim().to_string()));
    let mut inv = Check::new("κ ad-invariance", "plumbing", true);
    if let Some(i) = killing_invariance_witness(alg) {
        inv = Check::new("κ ad-invariance", "plumbing", false).with("witness", alg.label(i).to_string());
    }
    report.push(inv);
}

fn root_checks(report: &mut Report, sys: &RestrictedRootSystem) {
    let total: usize = sys.zero_space().len() + sys.roots().iter().map(|r| r.multiplicity()).sum::<usize>();
    report.push(
        Check::new("dim 𝔤 = dim 𝔤₀(𝔞) + Σ dim 𝔤_ν", "plumbing", total == sys.dim())
            .with("dim", sys.dim().to_string())
            .with("roots", sys.roots().len().to_string()),
    );
    let symmetric = sys.roots().iter().all(|r| sys.is_root(&r.covector.scale(&Scalar::from_integer((-1).into()))));
    report.push(Check::new("Δ = −Δ", "plumbing", symmetric));
}

fn basis_chains(cx: &ChainComplex<'_>, degree: usize) -> Vec<Chain> {
    let n = cx.grading().system().dim();
    let slots = cx.p_plus().to_vec();
    parabolic_seeds::kostant::subsets(&slots, degree)
        .into_iter()
        .flat_map(|w| (0..n).map(move |v| Chain::monomial(w.clone(), v, Scalar::from_integer(1.into()))))
        .collect()
}

fn grading_checks(report: &mut Report, g: &ParabolicGrading, parallel: usize) -> Result<(), InputError> {
    for (name, ok) in g.audit() {
        report.push(Check::new(name, "plumbing", ok));
    }
    let cx = ChainComplex::new(g)?;
    let pool = pool(parallel);
    for degree in 0..=1 {
        let chains = basis_chains(&cx, degree);
        let bad = pool.install(|| chains.par_iter().position_first(|c| !cx.differential(&cx.differential(c)).is_zero()));
        let mut check = Check::new(format!("∂∂ = 0 on Λ^{degree}𝔭₊ ⊗ 𝔤"), "plumbing", bad.is_none()).with("chains", chains.len().to_string());
        if let Some(k) = bad {
            check = check.with("witness", format!("{:?}", chains[k]));
        }
        report.push(check);
    }
    for degree in 2..=3 {
        let chains = basis_chains(&cx, degree);
        let bad = pool.install(|| chains.par_iter().position_first(|c| !cx.codifferential(&cx.codifferential(c)).is_zero()));
        let mut check = Check::new(format!("∂*∂* = 0 on Λ^{degree}𝔭₊ ⊗ 𝔤"), "plumbing", bad.is_none()).with("chains", chains.len().to_string());
        if let Some(k) = bad {
            check = check.with("witness", format!("{:?}", chains[k]));
        }
        report.push(check);
    }
    let depth = g.depth();
    for degree in 1..=2usize {
        let lo = degree as i64 - depth;
        let hi = degree as i64 * depth + depth;
        let audits: Vec<_> = pool.install(|| {
            (lo..=hi).into_par_iter().map(|h| hodge_audit(&cx, degree, &Scalar::from_integer(h.into()))).collect()
        });
        let mut total = 0;
        let mut failed = Vec::new();
        for (h, a) in (lo..=hi).zip(audits) {
            let a = a?;
            total += a.dim;
            if !a.ok {
                failed.push(h.to_string());
            }
        }
        let expected = binomial(cx.p_plus().len(), degree) * g.system().dim();
        let mut check = Check::new(format!("Hodge decomposition in degree {degree}"), "plumbing", failed.is_empty() && total == expected)
            .with("homogeneities", format!("{lo}..={hi}"))
            .with("total dim", total.to_string())
            .with("expected", expected.to_string());
        if !failed.is_empty() {
            check = check.with("failing homogeneities", failed.join(", "));
        }
        report.push(check);
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn audit(algebra: &AlgebraSpec, cross: &[usize], parallel: usize) -> CmdResult {
    let mut report = Report::new("audit");
    report.algebra = Some(algebra.to_string());
    report.cross = cross.to_vec();
    if let AlgebraSpec::File(path) = algebra {
        if !cross.is_empty() {
            return Err(InputError("file algebras carry no root data; drop --cross".into()));
        }
        let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        match parse_structure_constants(&text) {
            Ok(alg) => algebra_checks(&mut report, &alg),
            Err(Error::JacobiViolation { i, j, k }) => report.push(
                Check::new("Jacobi identity", "plumbing", false).with("witness", format!("(e{}, e{}, e{})", i + 1, j + 1, k + 1)),
            ),
            Err(e) => return Err(e.into()),
        }
        report.finish();
        return Ok(report);
    }
    let sys = algebra.build()?;
    algebra_checks(&mut report, sys.algebra());
    root_checks(&mut report, &sys);
    let crossed: Vec<usize> = if cross.is_empty() { vec![1] } else { cross.to_vec() };
    report.cross = crossed.clone();
    let g = grade(sys, &crossed)?;
    grading_checks(&mut report, &g, parallel)?;
    report.finish();
    Ok(report)
}
