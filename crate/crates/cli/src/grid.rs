//! Cartesian expansion of scenario parameter lists into algebra specs.

use std::collections::BTreeMap;

use boson_hopf::{AlgebraSpec, Error, Family, Params};

use crate::config::Scenario;
use crate::CliError;

/// One grid point: its parameters and either a spec or the reason it is skipped.
#[derive(Debug, Clone)]
pub struct GridPoint {
    pub params: BTreeMap<String, f64>,
    pub spec: Result<AlgebraSpec, String>,
}

fn spec_for(family: Family, p: &BTreeMap<String, f64>) -> boson_hopf::Result<AlgebraSpec> {
    let g = |k: &str| p[k];
    let params = match family {
        Family::B => Params::B { alpha: g("alpha"), beta: g("beta") },
        Family::Bbar => Params::Bbar { sigma: g("sigma"), tau: g("tau") },
        Family::Bq => Params::Bq { alpha: g("alpha"), beta: g("beta"), q: g("q") },
        Family::Bbarq => Params::Bbarq { sigma: g("sigma"), tau: g("tau"), q: g("q") },
        Family::H => Params::H { delta: g("delta"), nu: g("nu"), rho: g("rho") },
    };
    AlgebraSpec::new(params)
}

fn describe(err: &Error) -> String {
    match err {
        Error::Proviso { what, citation } => format!("{what}: {citation}"),
        e => e.to_string(),
    }
}

/// Builds a spec from named parameters, filling the distinguished `ρ` for `H`.
pub fn build_spec(family: Family, params: &BTreeMap<String, f64>, unitary: bool) -> boson_hopf::Result<AlgebraSpec> {
    let mut p = params.clone();
    if family == Family::H && !p.contains_key("rho") {
        let (delta, nu) = (p["delta"], p["nu"]);
        // δ = 0 is caught as a proviso by the constructor
        let rho = if delta != 0.0 { (delta - nu - 1.0) / (2.0 * delta) } else { 0.0 };
        p.insert("rho".into(), rho);
    }
    Ok(spec_for(family, &p)?.with_unitary(unitary))
}

/// Expands a scenario; returns the points and any warnings.
pub fn expand(scenario: &Scenario, label: &str) -> Result<(Vec<GridPoint>, Vec<String>), CliError> {
    let family = scenario.family()?;
    let required = crate::config::required_params(family);
    let mut warnings = Vec::new();
    let mut axes: Vec<(&str, Vec<f64>)> = Vec::new();
    for (name, list) in scenario.param_lists() {
        let Some(list) = list else { continue };
        let relevant = required.contains(&name) || (family == Family::H && name == "rho");
        if relevant {
            axes.push((name, list.values()));
        } else if name == "q" {
            warnings.push(format!("{label}: q ignored for the undeformed family {family}"));
        } else {
            warnings.push(format!("{label}: `{name}` ignored for family {family}"));
        }
    }
    let mut points = vec![BTreeMap::new()];
    for (name, values) in axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut p = p.clone();
                    p.insert(name.to_string(), *v);
                    p
                })
            })
            .collect();
    }
    let out = points
        .into_iter()
        .map(|params| {
            let spec = build_spec(family, &params, scenario.unitary).map_err(|e| describe(&e));
            GridPoint { params, spec }
        })
        .collect();
    Ok((out, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;

    fn scenario(body: &str) -> Scenario {
        Config::parse(&format!("[[scenario]]\nsuites = [\"relations\"]\n{body}")).unwrap().scenarios.remove(0)
    }

    #[test]
    fn cartesian_product() {
        let (pts, warn) = expand(&scenario("family = \"B\"\nalpha = [2, 4]\nbeta = [1, 2]"), "s").unwrap();
        assert_eq!(pts.len(), 4);
        assert!(warn.is_empty());
        assert!(pts.iter().all(|p| p.spec.is_ok()));
        assert_eq!(pts[1].params["beta"], 2.0);
    }

    #[test]
    fn q_ignored_for_undeformed() {
        let (pts, warn) = expand(&scenario("family = \"Bbar\"\nsigma = 1\ntau = 0\nq = [0.7, 1.3]"), "s").unwrap();
        assert_eq!(pts.len(), 1);
        assert!(warn[0].contains("q ignored"));
    }

    #[test]
    fn provisos_become_skipped_points() {
        let (pts, _) = expand(&scenario("family = \"H\"\ndelta = [0, 1]\nnu = 2"), "s").unwrap();
        assert!(pts[0].spec.as_ref().unwrap_err().contains("δ ≠ 0"));
        let h = pts[1].spec.clone().unwrap();
        assert_eq!(h.h_params(), Some((1.0, 2.0, -1.0)));
    }
}
