use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::catalog::Identity;
use crate::fock::AlgebraSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Where a residual was measured.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowInfo {
    pub kind: String,
    pub degree: usize,
    pub states: usize,
}

impl WindowInfo {
    pub fn full(states: usize) -> Self {
        WindowInfo { kind: "full".into(), degree: 0, states }
    }
}

/// A measured residual together with the scale it was normalized by.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub norm: f64,
    pub scale: f64,
}

impl Residual {
    pub fn absolute(norm: f64) -> Self {
        Residual { norm, scale: 1.0 }
    }

    /// `norm / max(1, scale)`, NaN-propagating.
    pub fn value(&self) -> f64 {
        if self.norm.is_nan() || self.scale.is_nan() {
            return f64::NAN;
        }
        self.norm / self.scale.max(1.0)
    }

    pub fn max(self, other: Residual) -> Residual {
        if other.value() > self.value() || other.value().is_nan() {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub reference: String,
    pub target: String,
    pub spec: Option<AlgebraSpec>,
    pub dim: usize,
    pub window: WindowInfo,
    pub residual: f64,
    pub scale: f64,
    pub tolerance: f64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, f64>,
    /// Diagnostics are informational and never decide the exit status.
    #[serde(default)]
    pub diagnostic: bool,
    pub wall_time_ms: f64,
}

impl CheckReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        identity: Identity,
        target: impl Into<String>,
        spec: Option<&AlgebraSpec>,
        dim: usize,
        window: WindowInfo,
        residual: Residual,
        tolerance: f64,
        started: Instant,
    ) -> Self {
        let value = residual.value();
        CheckReport {
            identity: identity.id.into(),
            reference: identity.reference.into(),
            target: target.into(),
            spec: spec.cloned(),
            dim,
            window,
            residual: value,
            scale: residual.scale,
            tolerance,
            status: if value < tolerance { Status::Pass } else { Status::Fail },
            branch_note: None,
            note: None,
            details: BTreeMap::new(),
            diagnostic: false,
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn skipped(
        identity: Identity,
        target: impl Into<String>,
        spec: Option<&AlgebraSpec>,
        dim: usize,
        note: impl Into<String>,
    ) -> Self {
        CheckReport {
            identity: identity.id.into(),
            reference: identity.reference.into(),
            target: target.into(),
            spec: spec.cloned(),
            dim,
            window: WindowInfo::full(0),
            residual: f64::NAN,
            scale: 1.0,
            tolerance: 0.0,
            status: Status::Skipped,
            branch_note: None,
            note: Some(note.into()),
            details: BTreeMap::new(),
            diagnostic: false,
            wall_time_ms: 0.0,
        }
    }

    /// A check that could not be computed; counts as a failure.
    pub fn errored(
        identity: Identity,
        target: impl Into<String>,
        spec: Option<&AlgebraSpec>,
        dim: usize,
        err: &dyn std::fmt::Display,
        tolerance: f64,
    ) -> Self {
        let mut r = Self::skipped(identity, target, spec, dim, format!("error: {err}"));
        r.status = Status::Fail;
        r.tolerance = tolerance;
        r
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail && !self.diagnostic
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_branch(mut self, note: impl Into<String>) -> Self {
        self.branch_note = Some(note.into());
        self
    }

    pub fn with_detail(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.into(), value);
        self
    }

    pub fn as_diagnostic(mut self) -> Self {
        self.diagnostic = true;
        self
    }

    pub fn label(&self) -> String {
        match &self.spec {
            Some(s) => format!("{}[{}] {} D={}", self.identity, self.target, s, self.dim),
            None => format!("{}[{}] D={}", self.identity, self.target, self.dim),
        }
    }
}
