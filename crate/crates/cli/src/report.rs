use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

/// One named check with the hypothesis it certifies and supporting data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub tag: String,
    pub verdict: Verdict,
    pub witness: Vec<(String, String)>,
}

impl Check {
    pub fn new(name: impl Into<String>, tag: impl Into<String>, ok: bool) -> Self {
        Check {
            name: name.into(),
            tag: tag.into(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness: Vec::new(),
        }
    }

    pub fn info(name: impl Into<String>, tag: impl Into<String>) -> Self {
        Check { verdict: Verdict::Info, ..Check::new(name, tag, true) }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.witness.push((key.into(), value.into()));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub algebra: Option<String>,
    pub cross: Vec<usize>,
    pub seed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub checks: Vec<Check>,
    pub overall: Verdict,
    pub failure: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            algebra: None,
            cross: Vec::new(),
            seed: None,
            timestamp: None,
            checks: Vec::new(),
            overall: Verdict::Pass,
            failure: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Sets the overall verdict from the checks unless a failure was recorded.
    pub fn finish(&mut self) {
        if self.failure.is_none() {
            self.failure = self.checks.iter().find(|c| c.verdict == Verdict::Fail).map(|c| c.name.clone());
        }
        self.overall = if self.failure.is_some() { Verdict::Fail } else { Verdict::Pass };
    }

    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "seedcert {}", self.command);
        if let Some(a) = &self.algebra {
            let _ = writeln!(out, "algebra: {a}");
        }
        if !self.cross.is_empty() {
            let cross: Vec<String> = self.cross.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "cross: {}", cross.join(","));
        }
        if let Some(s) = &self.seed {
            let _ = writeln!(out, "seed: {s}");
        }
        if let Some(t) = self.timestamp {
            let _ = writeln!(out, "timestamp: {t}");
        }
        for c in &self.checks {
            let v = match c.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Info => "INFO",
            };
            let _ = writeln!(out, "[{v}] {} ({})", c.name, c.tag);
            for (k, val) in &c.witness {
                let _ = writeln!(out, "    {k}: {val}");
            }
        }
        match &self.failure {
            None => {
                let _ = writeln!(out, "overall: PASS");
            }
            Some(f) => {
                let _ = writeln!(out, "overall: FAIL ({f})");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("certify");
        r.algebra = Some("sl:4".into());
        r.cross = vec![2];
        r.push(Check::new("□Ω = 0", "harmonic curvature", true).with("homogeneity", "2"));
        r.push(Check::new("ċ₀ exists", "shrinking ċ₀", false).with("ċ₀", "ε-values (2/3, 0, -1/3, -1/3)"));
        r.finish();
        assert_eq!(r.failure.as_deref(), Some("ċ₀ exists"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_text().ends_with("overall: FAIL (ċ₀ exists)\n"));
    }
}
