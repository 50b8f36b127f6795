//! The `eval` command: one expression on one algebra.

use std::collections::BTreeMap;
use std::fmt::Write;

use boson_hopf::expr::{identity_residual, parse, EvalContext, Value};
use boson_hopf::linalg::spectral_norm;
use boson_hopf::{Family, Mat};
use serde::Serialize;

use crate::grid::build_spec;
use crate::CliError;

#[derive(Debug, Clone)]
pub struct EvalRequest {
    pub family: Family,
    pub params: BTreeMap<String, f64>,
    pub unitary: bool,
    pub dim: usize,
    pub degree: Option<usize>,
    pub expression: String,
}

#[derive(Debug, Serialize)]
pub struct MatrixDump {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixDump {
    pub fn of(m: &Mat) -> Self {
        let rows = m.rows().into_iter().map(|r| r.iter().map(|z| z.re).collect()).collect();
        let im = m.rows().into_iter().map(|r| r.iter().map(|z| z.im).collect()).collect();
        MatrixDump { rows: m.nrows(), cols: m.ncols(), re: rows, im }
    }
}

#[derive(Debug)]
pub struct EvalOutcome {
    pub text: String,
    pub matrix: Mat,
    pub windowed: f64,
    pub full: f64,
}

pub fn evaluate(req: &EvalRequest) -> Result<EvalOutcome, CliError> {
    for p in crate::config::required_params(req.family) {
        if !req.params.contains_key(*p) {
            return Err(CliError::invalid(format!("family {} needs --{p}", req.family)));
        }
    }
    let spec = build_spec(req.family, &req.params, req.unitary)?;
    let expr = parse(&req.expression).map_err(boson_hopf::Error::from)?;
    let ctx = EvalContext::new(&spec, req.dim)?;
    let value = ctx.evaluate(&expr).map_err(boson_hopf::Error::from)?;
    let (res, window) = identity_residual(&ctx, &expr, req.degree)?;
    let sites = value.sites().max(1);
    let matrix = value.to_matrix(req.dim, sites);
    let full = spectral_norm(&matrix);
    let mut text = String::new();
    let _ = writeln!(text, "expression: {expr}");
    let _ = writeln!(text, "algebra:    {spec}, dim {}, sites {sites}", req.dim);
    if let Value::Scalar(s) = value {
        let _ = writeln!(text, "scalar:     {s}");
    }
    let _ = writeln!(text, "window:     {} degree {} ({} states)", window.kind, window.degree, window.states);
    let _ = writeln!(text, "windowed:   {:.6e}", res.norm);
    let _ = writeln!(text, "full:       {full:.6e}");
    let _ = writeln!(text, "relative:   {:.6e}", res.value());
    Ok(EvalOutcome { text, matrix, windowed: res.norm, full })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(family: Family, params: &[(&str, f64)], expr: &str) -> EvalRequest {
        EvalRequest {
            family,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            unitary: true,
            dim: 8,
            degree: None,
            expression: expr.into(),
        }
    }

    #[test]
    fn examples() {
        let out = evaluate(&req(Family::B, &[("alpha", 2.0), ("beta", 1.0)], "acomm(a,ad)-(2*N+I)")).unwrap();
        assert!(out.windowed <= 1e-12);
        let h = [("delta", 1.0), ("nu", 0.5), ("rho", -0.25)];
        assert!(evaluate(&req(Family::H, &h, "comm(M,b)+b")).unwrap().windowed <= 1e-12);
        let err = evaluate(&req(Family::B, &[("alpha", 2.0), ("beta", 1.0)], "a + c")).unwrap_err();
        assert!(err.to_string().contains("1:5"), "{err}");
        assert!(evaluate(&req(Family::B, &[("alpha", 2.0)], "a")).is_err());
    }
}
