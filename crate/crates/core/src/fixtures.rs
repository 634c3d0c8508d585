//! Seed fixtures: TOML records naming an algebra, a crossing and a seed.
//!
//! ```toml
//! name = "grassmannian_k2_m4"
//! algebra = "sl:4"
//! cross = [2]
//! beta = [0, 1, -1, 0]        # ε-coordinates
//! gamma = [0, 1, 0, -1]
//! zeta = [-1, 1, 0, 0]
//!
//! [[terms]]
//! units = ["0", "0", "0"]     # optional when every root space is a line
//! coeff = "1"
//!
//! [expect]
//! verdict = "PASS"
//! ```

use crate::builders::AlgebraSpec;
use crate::error::{Error, Result};
use crate::exact::parse_scalar;
use crate::kostant::ChainComplex;
use crate::parabolic::{grade, ParabolicGrading};
use crate::seed::{Seed, SeedTerm};
use serde::Deserialize;
use std::path::Path;

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    #[serde(default)]
    pub units: Option<Vec<String>>,
    pub coeff: String,
}

/// β, γ, ζ in ε-coordinates plus the term list.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedSpec {
    pub beta: Vec<i64>,
    pub gamma: Vec<i64>,
    pub zeta: Vec<i64>,
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Default)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub verdict: Option<String>,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFixture {
    name: String,
    #[serde(default)]
    summary: String,
    algebra: String,
    cross: Vec<usize>,
    beta: Vec<i64>,
    gamma: Vec<i64>,
    zeta: Vec<i64>,
    #[serde(default)]
    terms: Vec<TermSpec>,
    #[serde(default)]
    expect: Expectation,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub summary: String,
    pub algebra: AlgebraSpec,
    pub cross: Vec<usize>,
    pub seed: SeedSpec,
    pub expect: Expectation,
}

const BUILTIN: [(&str, &str); 7] = [
    ("grassmannian_k2_m4", include_str!("../../../fixtures/grassmannian_k2_m4.toml")),
    ("grassmannian_k1_m5", include_str!("../../../fixtures/grassmannian_k1_m5.toml")),
    ("grassmannian_k3_m7", include_str!("../../../fixtures/grassmannian_k3_m7.toml")),
    ("borel_pgl4_pos", include_str!("../../../fixtures/borel_pgl4_pos.toml")),
    ("borel_pgl4_neg", include_str!("../../../fixtures/borel_pgl4_neg.toml")),
    ("path_m5", include_str!("../../../fixtures/path_m5.toml")),
    ("quaternionic_m2_n2", include_str!("../../../fixtures/quaternionic_m2_n2.toml")),
];

pub fn builtin_names() -> Vec<&'static str> {
    BUILTIN.iter().map(|(n, _)| *n).collect()
}

pub fn builtin_fixtures() -> Vec<Fixture> {
    BUILTIN.iter().map(|(_, text)| parse_fixture(text).expect("shipped fixture parses")).collect()
}

/// A shipped fixture by name, or a fixture file when `name` is a path.
pub fn resolve_fixture(name: &str) -> Result<Fixture> {
    if let Some((_, text)) = BUILTIN.iter().find(|(n, _)| *n == name) {
        return parse_fixture(text);
    }
    let path = Path::new(name);
    if path.exists() {
        return load_fixture(path);
    }
    Err(Error::NotFound(format!("fixture {name}")))
}

pub fn load_fixture(path: &Path) -> Result<Fixture> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_fixture(&text)
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let raw: RawFixture = toml::from_str(text).map_err(|e| Error::Parse {
        line: e.span().map_or(0, |s| text[..s.start].lines().count().max(1)),
        message: e.message().to_string(),
    })?;
    let seed = SeedSpec { beta: raw.beta, gamma: raw.gamma, zeta: raw.zeta, terms: raw.terms };
    seed.validate()?;
    Ok(Fixture {
        name: raw.name,
        summary: raw.summary,
        algebra: raw.algebra.parse()?,
        cross: raw.cross,
        seed,
        expect: raw.expect,
    })
}

impl Fixture {
    pub fn grading(&self) -> Result<ParabolicGrading> {
        grade(self.algebra.build()?, &self.cross)
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse { line: 0, message: format!("bad integer {x:?}") }))
        .collect()
}

impl SeedSpec {
    fn validate(&self) -> Result<()> {
        let n = self.beta.len();
        if self.gamma.len() != n || self.zeta.len() != n {
            return Err(Error::InvalidSeed("β, γ, ζ have different lengths".into()));
        }
        for t in &self.terms {
            if parse_scalar(&t.coeff).is_none() {
                return Err(Error::InvalidSeed(format!("bad coefficient {:?}", t.coeff)));
            }
            if t.units.as_ref().is_some_and(|u| u.len() != 3) {
                return Err(Error::InvalidSeed("units must name three root-space vectors".into()));
            }
        }
        Ok(())
    }

    /// Parses `beta=0,1,-1,0;gamma=0,1,0,-1;zeta=-1,1,0,0[;terms=c@u.u.u,…]`.
    /// Without `terms` the seed is the single monomial with coefficient 1.
    pub fn parse_inline(s: &str) -> Result<SeedSpec> {
        let bad = |m: &str| Error::Parse { line: 0, message: m.to_string() };
        let (mut beta, mut gamma, mut zeta, mut terms) = (None, None, None, Vec::new());
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            match key.trim() {
                "beta" => beta = Some(parse_ints(value)?),
                "gamma" => gamma = Some(parse_ints(value)?),
                "zeta" => zeta = Some(parse_ints(value)?),
                "terms" => {
                    for t in value.split(',') {
                        let (coeff, units) = t.split_once('@').ok_or_else(|| bad("term must be coeff@u.u.u"))?;
                        let units: Vec<String> = units.split('.').map(|u| u.trim().to_string()).collect();
                        terms.push(TermSpec { units: Some(units), coeff: coeff.trim().to_string() });
                    }
                }
                other => return Err(bad(&format!("unknown key {other}"))),
            }
        }
        if terms.is_empty() {
            terms.push(TermSpec { units: None, coeff: "1".into() });
        }
        let spec = SeedSpec {
            beta: beta.ok_or_else(|| bad("missing beta"))?,
            gamma: gamma.ok_or_else(|| bad("missing gamma"))?,
            zeta: zeta.ok_or_else(|| bad("missing zeta"))?,
            terms,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn build(&self, cx: &ChainComplex<'_>) -> Result<Seed> {
        let sys = cx.grading().system();
        let frame = sys.frame();
        let beta = frame.from_eps_ints(&self.beta)?;
        let gamma = frame.from_eps_ints(&self.gamma)?;
        let zeta = frame.from_eps_ints(&self.zeta)?;
        let mut roots = Vec::new();
        for c in [&beta, &gamma, &zeta] {
            roots.push(sys.find_root(c).ok_or_else(|| Error::NotARoot(sys.label(c)))?);
        }
        let terms = if self.terms.is_empty() {
            vec![TermSpec { units: None, coeff: "1".into() }]
        } else {
            self.terms.clone()
        };
        let mut out = Vec::new();
        for t in &terms {
            let mut idx = [0usize; 3];
            for (k, &r) in roots.iter().enumerate() {
                let root = sys.root(r);
                idx[k] = match &t.units {
                    Some(u) => sys
                        .basis_by_unit(r, &u[k])
                        .ok_or_else(|| Error::InvalidSeed(format!("no unit {} in 𝔤_{}", u[k], root.label)))?,
                    None if root.space.len() == 1 => root.space[0],
                    None => return Err(Error::InvalidSeed(format!("𝔤_{} needs a unit", root.label))),
                };
            }
            let coeff = parse_scalar(&t.coeff).ok_or_else(|| Error::InvalidSeed(t.coeff.clone()))?;
            out.push(SeedTerm { beta: idx[0], gamma: idx[1], zeta: idx[2], coeff });
        }
        Seed::from_terms(cx, beta, gamma, zeta, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixtures_parse() {
        let all = builtin_fixtures();
        assert_eq!(all.len(), 7);
        assert_eq!(all[6].seed.terms.len(), 4);
        assert_eq!(all[4].expect.failure.as_deref(), Some("weight is scaling element"));
    }

    #[test]
    fn inline_descriptor() {
        let s = SeedSpec::parse_inline("beta=0,1,-1,0;gamma=0,1,0,-1;zeta=-1,1,0,0").unwrap();
        assert_eq!(s, builtin_fixtures()[0].seed);
        let q = SeedSpec::parse_inline("beta=1,-1,0;gamma=1,-1,0;zeta=0,-2,0;terms=1@1.i.j,-1@k.i.i").unwrap();
        assert_eq!(q.terms[1].units.as_ref().unwrap()[0], "k");
        assert!(SeedSpec::parse_inline("beta=1;gamma=1").is_err());
        assert!(parse_fixture("name = 3").is_err());
    }
}
