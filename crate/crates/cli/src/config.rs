//! Scenario configuration, read from TOML.
//!
//! ```toml
//! output = "report.json"
//! jobs = 8
//! ybe_jobs = 2
//!
//! [[scenario]]
//! name = "bq-grid"
//! family = "Bq"
//! alpha = [2, 4]
//! beta = 2
//! q = [0.7, 1.3]
//! dim = 8
//! suites = ["relations", "hopf", "rmatrix"]
//! tolerance = { rmatrix = 1e-8 }
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use boson_hopf::Family;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    Hopf,
    DeltaHom,
    Rmatrix,
    Ybe,
    Casimir,
    Structure,
    Iso,
    Corpus,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Relations,
        Suite::Hopf,
        Suite::DeltaHom,
        Suite::Rmatrix,
        Suite::Ybe,
        Suite::Casimir,
        Suite::Structure,
        Suite::Iso,
        Suite::Corpus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Hopf => "hopf",
            Suite::DeltaHom => "delta-hom",
            Suite::Rmatrix => "rmatrix",
            Suite::Ybe => "ybe",
            Suite::Casimir => "casimir",
            Suite::Structure => "structure",
            Suite::Iso => "iso",
            Suite::Corpus => "corpus",
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            Suite::Rmatrix | Suite::Ybe => 1e-8,
            _ => boson_hopf::DEFAULT_TOL,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A parameter given either as one value or as a list to sweep.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany {
    One(f64),
    Many(Vec<f64>),
}

impl OneOrMany {
    pub fn values(&self) -> Vec<f64> {
        match self {
            OneOrMany::One(v) => vec![*v],
            OneOrMany::Many(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: Option<String>,
    pub family: String,
    pub alpha: Option<OneOrMany>,
    pub beta: Option<OneOrMany>,
    pub sigma: Option<OneOrMany>,
    pub tau: Option<OneOrMany>,
    pub delta: Option<OneOrMany>,
    pub nu: Option<OneOrMany>,
    /// Omitted for `H`: the distinguished value `(δ − ν − 1)/(2δ)`.
    pub rho: Option<OneOrMany>,
    pub q: Option<OneOrMany>,
    pub dim: Option<usize>,
    pub suites: Vec<Suite>,
    #[serde(default = "yes")]
    pub unitary: bool,
    pub lambda1: Option<f64>,
    pub lambda4: Option<f64>,
    #[serde(default)]
    pub tolerance: BTreeMap<Suite, f64>,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub output: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub ybe_jobs: Option<usize>,
    #[serde(default, rename = "scenario")]
    pub scenarios: Vec<Scenario>,
}

impl Scenario {
    pub fn family(&self) -> Result<Family, CliError> {
        self.family.parse().map_err(|e: boson_hopf::Error| CliError::invalid(e.to_string()))
    }

    pub fn label(&self, index: usize) -> String {
        self.name.clone().unwrap_or_else(|| format!("scenario-{index}"))
    }

    /// Named parameter lists, in a fixed order.
    pub fn param_lists(&self) -> [(&'static str, Option<&OneOrMany>); 8] {
        [
            ("alpha", self.alpha.as_ref()),
            ("beta", self.beta.as_ref()),
            ("sigma", self.sigma.as_ref()),
            ("tau", self.tau.as_ref()),
            ("delta", self.delta.as_ref()),
            ("nu", self.nu.as_ref()),
            ("rho", self.rho.as_ref()),
            ("q", self.q.as_ref()),
        ]
    }
}

/// Parameters each family requires; `rho` is optional for `H`.
pub fn required_params(family: Family) -> &'static [&'static str] {
    match family {
        Family::B => &["alpha", "beta"],
        Family::Bbar => &["sigma", "tau"],
        Family::Bq => &["alpha", "beta", "q"],
        Family::Bbarq => &["sigma", "tau", "q"],
        Family::H => &["delta", "nu"],
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let cfg: Config = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.scenarios.is_empty() {
            return Err(CliError::invalid("no [[scenario]] blocks"));
        }
        if self.jobs == Some(0) || self.ybe_jobs == Some(0) {
            return Err(CliError::invalid("job counts must be positive"));
        }
        let mut names = std::collections::BTreeSet::new();
        for (i, s) in self.scenarios.iter().enumerate() {
            let label = s.label(i);
            if !names.insert(label.clone()) {
                return Err(CliError::invalid(format!("duplicate scenario name `{label}`")));
            }
            let family = s.family().map_err(|e| CliError::invalid(format!("{label}: {e}")))?;
            if s.suites.is_empty() {
                return Err(CliError::invalid(format!("{label}: `suites` is empty")));
            }
            if let Some(d) = s.dim {
                if !(2..=64).contains(&d) {
                    return Err(CliError::invalid(format!("{label}: dim must lie in 2..=64, got {d}")));
                }
            }
            for (name, list) in s.param_lists() {
                if let Some(list) = list {
                    let v = list.values();
                    if v.is_empty() {
                        return Err(CliError::invalid(format!("{label}: `{name}` is an empty list")));
                    }
                    if v.iter().any(|x| !x.is_finite()) {
                        return Err(CliError::invalid(format!("{label}: `{name}` has a non-finite value")));
                    }
                }
            }
            for req in required_params(family) {
                if s.param_lists().iter().all(|(n, l)| n != req || l.is_none()) {
                    return Err(CliError::invalid(format!("{label}: family {family} needs `{req}`")));
                }
            }
            for (suite, tol) in &s.tolerance {
                if !(tol.is_finite() && *tol > 0.0) {
                    return Err(CliError::invalid(format!("{label}: tolerance for {suite} must be positive")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_scalars_and_lists() {
        let cfg = Config::parse(
            r#"
            jobs = 2
            [[scenario]]
            family = "B"
            alpha = [2, 4]
            beta = 1
            suites = ["relations", "delta-hom"]
            tolerance = { relations = 1e-9 }
            "#,
        )
        .unwrap();
        let s = &cfg.scenarios[0];
        assert_eq!(s.alpha.as_ref().unwrap().values(), vec![2.0, 4.0]);
        assert_eq!(s.suites, vec![Suite::Relations, Suite::DeltaHom]);
        assert_eq!(s.tolerance[&Suite::Relations], 1e-9);
        assert_eq!(s.label(0), "scenario-0");
    }

    #[test]
    fn rejects_bad_configs() {
        let bad = [
            "",
            "[[scenario]]\nfamily = \"X\"\nalpha = 1\nbeta = 1\nsuites = [\"hopf\"]",
            "[[scenario]]\nfamily = \"B\"\nalpha = 1\nsuites = [\"hopf\"]",
            "[[scenario]]\nfamily = \"B\"\nalpha = 1\nbeta = 1\nsuites = []",
            "[[scenario]]\nfamily = \"B\"\nalpha = 1\nbeta = 1\nsuites = [\"nope\"]",
            "[[scenario]]\nfamily = \"B\"\nalpha = 1\nbeta = 1\nsuites = [\"hopf\"]\ncolour = 3",
            "[[scenario]]\nfamily = \"B\"\nalpha = []\nbeta = 1\nsuites = [\"hopf\"]",
            "[[scenario]]\nfamily = \"B\"\nalpha = 1\nbeta = 1\ndim = 1\nsuites = [\"hopf\"]",
        ];
        for text in bad {
            assert!(Config::parse(text).is_err(), "{text}");
        }
    }
}
