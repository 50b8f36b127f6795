//! Suite dispatch and the parallel runner.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};

use boson_hopf::fock::{build_rep, check_defining_relations, check_q_continuity, check_reflection_square};
use boson_hopf::hopf::{build_hopf, check_delta_homomorphism, check_hopf};
use boson_hopf::rmatrix::{build_r0, build_r, build_trivial, check_rmatrix_suite, check_ybe};
use boson_hopf::structure::{casimir_suite, iso_suite, structure_suite};
use boson_hopf::{catalog, expr, AlgebraSpec, CheckReport, Error, Family};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Config, Suite};
use crate::grid::{expand, GridPoint};
use crate::CliError;

/// Settings that apply across scenarios.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub jobs: Option<usize>,
    pub ybe_jobs: Option<usize>,
    /// Dimension for scenarios that do not set one.
    pub dim: Option<usize>,
    /// Tolerance for suites without a scenario override.
    pub tol: Option<f64>,
}

/// One report with the scenario and grid point it came from.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub scenario: String,
    pub suite: Suite,
    pub point: usize,
    pub params: BTreeMap<String, f64>,
    #[serde(flatten)]
    pub report: CheckReport,
    #[serde(skip)]
    order: (usize, usize),
}

#[derive(Debug, Clone)]
struct Job {
    scenario: usize,
    label: String,
    suite: Suite,
    point: usize,
    grid: GridPoint,
    dim: usize,
    tol: f64,
    lambda1: f64,
    lambda4: f64,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub warnings: Vec<String>,
    pub records: Vec<Record>,
}

impl RunOutput {
    pub fn failed(&self) -> usize {
        self.records.iter().filter(|r| r.report.failed()).count()
    }
}


/// Runs one suite at one point.
pub fn run_suite(suite: Suite, spec: &AlgebraSpec, dim: usize, tol: f64, l1: f64, l4: f64) -> boson_hopf::Result<Vec<CheckReport>> {
    Ok(match suite {
        Suite::Relations => {
            let rep = build_rep(spec, dim)?;
            let mut out = check_defining_relations(&rep, tol);
            out.extend(check_reflection_square(&rep, tol));
            if spec.family().is_deformed() {
                out.push(check_q_continuity(spec, 1.0001, 10, 1e-2)?);
            }
            out
        }
        Suite::Hopf => check_hopf(&build_hopf(spec, dim)?, tol),
        Suite::DeltaHom => check_delta_homomorphism(&build_hopf(spec, dim)?, tol),
        Suite::Rmatrix => check_rmatrix_suite(spec, dim, tol)?,
        Suite::Ybe => {
            build_hopf(spec, dim)?;
            let rep = build_rep(spec, dim)?;
            let r = match spec.family() {
                Family::Bq | Family::Bbarq => build_r(&rep)?,
                Family::B => build_r0(&rep)?,
                Family::Bbar => build_trivial(&rep),
                Family::H => return Err(Error::proviso(format!("{spec}"), "no R-matrix is given for the H family")),
            };
            vec![check_ybe(&r, tol)]
        }
        Suite::Casimir => casimir_suite(spec, dim, tol)?,
        Suite::Structure => structure_suite(spec, dim, l1, l4, tol)?,
        Suite::Iso => iso_suite(spec, dim, l1, tol)?,
        Suite::Corpus => {
            let entries = expr::corpus()?;
            let ctx = expr::EvalContext::new(spec, dim)?;
            expr::run_corpus(&ctx, &entries, tol)
        }
    })
}

fn panic_message(p: &(dyn std::any::Any + Send)) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".into())
}

fn execute(job: &Job) -> Vec<Record> {
    let target = job.suite.name();
    let reports = match &job.grid.spec {
        Err(reason) => vec![CheckReport::skipped(catalog::PROVISO, target, None, job.dim, reason.clone())],
        Ok(spec) => {
            let result = catch_unwind(AssertUnwindSafe(|| run_suite(job.suite, spec, job.dim, job.tol, job.lambda1, job.lambda4)));
            match result {
                Ok(Ok(reports)) => reports,
                Ok(Err(Error::Proviso { what, citation })) => {
                    vec![CheckReport::skipped(catalog::PROVISO, target, Some(spec), job.dim, format!("{what}: {citation}"))]
                }
                Ok(Err(e)) => vec![CheckReport::errored(catalog::RUNNER_ERROR, target, Some(spec), job.dim, &e, job.tol)],
                Err(p) => {
                    let msg = format!("panic: {}", panic_message(p.as_ref()));
                    vec![CheckReport::errored(catalog::RUNNER_ERROR, target, Some(spec), job.dim, &msg, job.tol)]
                }
            }
        }
    };
    reports
        .into_iter()
        .enumerate()
        .map(|(i, report)| Record {
            scenario: job.label.clone(),
            suite: job.suite,
            point: job.point,
            params: job.grid.params.clone(),
            report,
            order: (job.scenario, i),
        })
        .collect()
}

fn pool(threads: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::invalid(format!("thread pool: {e}")))
}

/// Expands every scenario and runs all suites.
///
/// Output order is independent of scheduling: records are sorted by
/// scenario, suite, identity id, grid point and emission order.
pub fn run(config: &Config, opts: &RunOptions) -> Result<RunOutput, CliError> {
    let mut warnings = Vec::new();
    let mut jobs = Vec::new();
    for (si, s) in config.scenarios.iter().enumerate() {
        let label = s.label(si);
        let (points, w) = expand(s, &label)?;
        warnings.extend(w);
        let dim = s.dim.or(opts.dim).unwrap_or(boson_hopf::DEFAULT_DIM);
        for &suite in &s.suites {
            let tol = s.tolerance.get(&suite).copied().or(opts.tol).unwrap_or(suite.default_tolerance());
            for (pi, grid) in points.iter().enumerate() {
                jobs.push(Job {
                    scenario: si,
                    label: label.clone(),
                    suite,
                    point: pi,
                    grid: grid.clone(),
                    dim,
                    tol,
                    lambda1: s.lambda1.unwrap_or(1.0),
                    lambda4: s.lambda4.unwrap_or(0.0),
                });
            }
        }
    }
    let threads = opts.jobs.or(config.jobs).unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let ybe_threads = opts.ybe_jobs.or(config.ybe_jobs).unwrap_or(threads.min(2));
    let (ybe, rest): (Vec<Job>, Vec<Job>) = jobs.into_iter().partition(|j| j.suite == Suite::Ybe);

    let mut records: Vec<Record> = pool(threads)?.install(|| rest.par_iter().flat_map_iter(execute).collect());
    records.extend(pool(ybe_threads)?.install(|| ybe.par_iter().flat_map_iter(execute).collect::<Vec<_>>()));
    records.sort_by(|a, b| {
        (a.order.0, a.suite, &a.report.identity, a.point, a.order.1).cmp(&(
            b.order.0,
            b.suite,
            &b.report.identity,
            b.point,
            b.order.1,
        ))
    });
    Ok(RunOutput { warnings, records })
}
