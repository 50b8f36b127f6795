//! Algebra parameters and their truncated Fock representations.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, diag, diag_real, identity, zeros, Mat};
use crate::relations::{self, Images};
use crate::report::{CheckReport, WindowInfo};
use crate::scalars::{phase_pow, q_bracket, QValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    Bbar,
    Bq,
    Bbarq,
    H,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::B, Family::Bbar, Family::Bq, Family::Bbarq, Family::H];

    pub fn is_deformed(self) -> bool {
        matches!(self, Family::Bq | Family::Bbarq)
    }

    /// Families whose algebra carries the grade element `(−1)^Ñ`.
    pub fn is_graded(self) -> bool {
        matches!(self, Family::B | Family::Bq | Family::H)
    }

    /// Names of the lowering and raising generators.
    pub fn ladder_names(self) -> (&'static str, &'static str) {
        match self {
            Family::H => ("b", "bd"),
            _ => ("a", "ad"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::B => "B",
            Family::Bbar => "Bbar",
            Family::Bq => "Bq",
            Family::Bbarq => "Bbarq",
            Family::H => "H",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(Family::B),
            "Bbar" => Ok(Family::Bbar),
            "Bq" => Ok(Family::Bq),
            "Bbarq" => Ok(Family::Bbarq),
            "H" => Ok(Family::H),
            other => Err(Error::Incompatible(format!(
                "unknown family `{other}` (expected B, Bbar, Bq, Bbarq or H)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Params {
    B { alpha: f64, beta: f64 },
    Bbar { sigma: f64, tau: f64 },
    Bq { alpha: f64, beta: f64, q: f64 },
    Bbarq { sigma: f64, tau: f64, q: f64 },
    H { delta: f64, nu: f64, rho: f64 },
}

/// A family together with concrete parameters and a normalization choice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(flatten)]
    pub params: Params,
    pub unitary: bool,
}

fn finite(vals: &[f64]) -> Result<()> {
    if vals.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::Incompatible(format!("non-finite parameter in {vals:?}")))
    }
}

impl AlgebraSpec {
    pub fn new(params: Params) -> Result<Self> {
        match params {
            Params::B { alpha, beta } => finite(&[alpha, beta])?,
            Params::Bbar { sigma, tau } => finite(&[sigma, tau])?,
            Params::Bq { alpha, beta, q } => {
                finite(&[alpha, beta])?;
                QValue::new(q)?;
                if alpha == 0.0 {
                    return Err(Error::proviso("Bq with α = 0", "the q-deformed family is defined for α ≠ 0"));
                }
            }
            Params::Bbarq { sigma, tau, q } => {
                finite(&[sigma, tau])?;
                QValue::new(q)?;
                if sigma == 0.0 {
                    return Err(Error::proviso(
                        "Bbarq with σ = 0",
                        "the weights divide by [σ/2]_q, which requires σ ≠ 0",
                    ));
                }
            }
            Params::H { delta, nu, rho } => {
                finite(&[delta, nu, rho])?;
                if nu == 0.0 {
                    return Err(Error::proviso("H with ν = 0", "the reflection K is defined for ν ≠ 0"));
                }
                if delta == 0.0 {
                    return Err(Error::proviso("H with δ = 0", "the number operator M is defined for δ ≠ 0"));
                }
            }
        }
        Ok(AlgebraSpec { params, unitary: true })
    }

    pub fn b(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(Params::B { alpha, beta })
    }
    pub fn bbar(sigma: f64, tau: f64) -> Result<Self> {
        Self::new(Params::Bbar { sigma, tau })
    }
    pub fn bq(alpha: f64, beta: f64, q: f64) -> Result<Self> {
        Self::new(Params::Bq { alpha, beta, q })
    }
    pub fn bbarq(sigma: f64, tau: f64, q: f64) -> Result<Self> {
        Self::new(Params::Bbarq { sigma, tau, q })
    }
    pub fn h(delta: f64, nu: f64, rho: f64) -> Result<Self> {
        Self::new(Params::H { delta, nu, rho })
    }
    /// The distinguished choice `ρ = (δ − ν − 1)/(2δ)`.
    pub fn h_distinguished(delta: f64, nu: f64) -> Result<Self> {
        Self::h(delta, nu, (delta - nu - 1.0) / (2.0 * delta))
    }

    pub fn unnormalized(mut self) -> Self {
        self.unitary = false;
        self
    }

    pub fn with_unitary(mut self, unitary: bool) -> Self {
        self.unitary = unitary;
        self
    }

    pub fn family(&self) -> Family {
        match self.params {
            Params::B { .. } => Family::B,
            Params::Bbar { .. } => Family::Bbar,
            Params::Bq { .. } => Family::Bq,
            Params::Bbarq { .. } => Family::Bbarq,
            Params::H { .. } => Family::H,
        }
    }

    pub fn q(&self) -> Option<f64> {
        match self.params {
            Params::Bq { q, .. } | Params::Bbarq { q, .. } => Some(q),
            _ => None,
        }
    }

    pub(crate) fn qv(&self) -> Option<QValue> {
        self.q().map(|q| QValue::new(q).expect("validated at construction"))
    }

    /// `(α, β)` for the anticommutator families.
    pub fn alpha_beta(&self) -> Option<(f64, f64)> {
        match self.params {
            Params::B { alpha, beta } | Params::Bq { alpha, beta, .. } => Some((alpha, beta)),
            _ => None,
        }
    }

    /// `(σ, τ)` for the commutator families.
    pub fn sigma_tau(&self) -> Option<(f64, f64)> {
        match self.params {
            Params::Bbar { sigma, tau } | Params::Bbarq { sigma, tau, .. } => Some((sigma, tau)),
            _ => None,
        }
    }

    pub fn h_params(&self) -> Option<(f64, f64, f64)> {
        match self.params {
            Params::H { delta, nu, rho } => Some((delta, nu, rho)),
            _ => None,
        }
    }

    /// The undeformed counterpart (`Bq → B`, `Bbarq → Bbar`).
    pub fn undeformed(&self) -> AlgebraSpec {
        let params = match self.params {
            Params::Bq { alpha, beta, .. } => Params::B { alpha, beta },
            Params::Bbarq { sigma, tau, .. } => Params::Bbar { sigma, tau },
            p => p,
        };
        AlgebraSpec { params, unitary: self.unitary }
    }

    /// Shift `s` with `Ñ = X + s`, where `X` is `N` (or `M` for `H`).
    ///
    /// `None` when the shift is undefined (`α = 0` or `σ = 0`).
    pub fn number_shift(&self) -> Option<f64> {
        match self.params {
            Params::B { alpha, beta } | Params::Bq { alpha, beta, .. } => {
                (alpha != 0.0).then(|| beta / alpha)
            }
            Params::Bbar { sigma, tau } | Params::Bbarq { sigma, tau, .. } => {
                (sigma != 0.0).then(|| tau / sigma)
            }
            Params::H { rho, .. } => Some(0.5 - rho),
        }
    }

    /// Shift used for diagonal functions; an undefined shift is taken as 0.
    pub fn shift(&self) -> f64 {
        self.number_shift().unwrap_or(0.0)
    }

    /// Eigenvalue offset of the number atom on `|n⟩` (non-zero only for `M`).
    pub fn number_offset(&self) -> f64 {
        match self.params {
            Params::H { delta, nu, rho } => (nu - delta + 1.0) / (2.0 * delta) + rho,
            _ => 0.0,
        }
    }

    /// Fock weight `[n]`, with `a a† |n−1⟩ = [n] |n−1⟩`.
    pub fn weight(&self, n: usize) -> f64 {
        let nf = n as f64;
        let parity = if n % 2 == 1 { 2.0 } else { 0.0 }; // 1 + (−1)^(n+1)
        match self.params {
            Params::B { alpha, beta } => alpha * nf / 2.0 + (2.0 * beta - alpha) / 4.0 * parity,
            Params::Bbar { sigma, tau } => sigma * nf * (nf - 1.0) / 2.0 + nf * tau,
            Params::Bq { alpha, beta, q } => {
                let qv = QValue::new(q).expect("validated");
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                let pre = q.powf(alpha / 2.0) + q.powf(-alpha / 2.0);
                (sign * q_bracket(beta - alpha / 2.0, qv)
                    + q_bracket(nf * alpha + beta - alpha / 2.0, qv))
                    / pre
            }
            Params::Bbarq { sigma, tau, q } => {
                let qv = QValue::new(q).expect("validated");
                q_bracket(sigma * nf / 2.0, qv) * q_bracket(sigma * (nf - 1.0) / 2.0 + tau, qv)
                    / q_bracket(sigma / 2.0, qv)
            }
            Params::H { delta, nu, .. } => delta * nf + (nu - delta + 1.0) / 2.0 * parity,
        }
    }

    /// Short parameter signature used for sorting and labels.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params {
            Params::B { alpha, beta } => write!(f, "B(alpha={alpha}, beta={beta})"),
            Params::Bbar { sigma, tau } => write!(f, "Bbar(sigma={sigma}, tau={tau})"),
            Params::Bq { alpha, beta, q } => write!(f, "Bq(alpha={alpha}, beta={beta}, q={q})"),
            Params::Bbarq { sigma, tau, q } => write!(f, "Bbarq(sigma={sigma}, tau={tau}, q={q})"),
            Params::H { delta, nu, rho } => write!(f, "H(delta={delta}, nu={nu}, rho={rho})"),
        }?;
        if !self.unitary {
            f.write_str("[unnormalized]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WindowKind {
    /// Every site occupation at most `D − 1 − d`.
    PerSlot,
    /// Total occupation at most `D − 1 − d`.
    TotalOccupation,
    Full,
}

/// The set of basis states on which a degree-`d` identity is unaffected by the cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidityWindow {
    pub dim: usize,
    pub sites: usize,
    pub degree: usize,
    pub kind: WindowKind,
    pub mask: Vec<bool>,
}

impl ValidityWindow {
    fn build(dim: usize, sites: usize, degree: usize, kind: WindowKind) -> Result<Self> {
        if dim == 0 || sites == 0 {
            return Err(Error::Dimension("empty space".into()));
        }
        if kind != WindowKind::Full && degree >= dim {
            return Err(Error::Dimension(format!(
                "raise degree {degree} leaves no valid states at dimension {dim}"
            )));
        }
        let total = dim.pow(sites as u32);
        let top = dim - 1 - degree.min(dim - 1);
        let mask = (0..total)
            .map(|idx| {
                let occ = occupations(idx, dim, sites);
                match kind {
                    WindowKind::PerSlot => occ.iter().all(|&n| n <= top),
                    WindowKind::TotalOccupation => occ.iter().sum::<usize>() <= top,
                    WindowKind::Full => true,
                }
            })
            .collect();
        Ok(ValidityWindow { dim, sites, degree, kind, mask })
    }

    pub fn per_slot(dim: usize, sites: usize, degree: usize) -> Result<Self> {
        Self::build(dim, sites, degree, WindowKind::PerSlot)
    }

    pub fn total_occupation(dim: usize, sites: usize, degree: usize) -> Result<Self> {
        Self::build(dim, sites, degree, WindowKind::TotalOccupation)
    }

    pub fn full(dim: usize, sites: usize) -> Result<Self> {
        Self::build(dim, sites, 0, WindowKind::Full)
    }

    pub fn states(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn projector(&self) -> Mat {
        diag_real(&self.mask.iter().map(|&m| if m { 1.0 } else { 0.0 }).collect::<Vec<_>>())
    }

    pub fn info(&self) -> WindowInfo {
        let kind = match self.kind {
            WindowKind::PerSlot => "per-slot",
            WindowKind::TotalOccupation => "total-occupation",
            WindowKind::Full => "full",
        };
        WindowInfo { kind: kind.into(), degree: self.degree, states: self.states() }
    }
}

/// Site occupations of a product-basis index, most significant site first.
pub fn occupations(mut idx: usize, dim: usize, sites: usize) -> Vec<usize> {
    let mut occ = vec![0; sites];
    for s in (0..sites).rev() {
        occ[s] = idx % dim;
        idx /= dim;
    }
    occ
}

/// Matrices of the generators on the first `dim` Fock states.
#[derive(Debug, Clone)]
pub struct FockRep {
    pub spec: AlgebraSpec,
    pub dim: usize,
    pub lowering: Mat,
    pub raising: Mat,
    /// `N`, or `M` for the `H` family.
    pub number: Mat,
    pub grade: Mat,
    pub grade_inv: Mat,
    /// `K`, only for the `H` family.
    pub reflection: Option<Mat>,
    /// `weights[n−1] = [n]` for `n = 1..=dim`.
    pub weights: Vec<f64>,
    /// Eigenvalues of `Ñ` on `|0⟩..|dim−1⟩`.
    pub tilde: Vec<f64>,
}

pub fn build_rep(spec: &AlgebraSpec, dim: usize) -> Result<FockRep> {
    if dim == 0 {
        return Err(Error::Dimension("dimension must be at least 1".into()));
    }
    let mut weights = Vec::with_capacity(dim);
    for n in 1..=dim {
        let mut w = spec.weight(n);
        if !w.is_finite() {
            return Err(Error::NonPositiveWeight { n, value: w });
        }
        if w.abs() < 1e-12 * (n as f64) {
            w = 0.0;
        }
        if spec.unitary && w < 0.0 && n < dim {
            return Err(Error::NonPositiveWeight { n, value: w });
        }
        weights.push(w);
    }
    let mut lowering = zeros(dim);
    let mut raising = zeros(dim);
    for n in 1..dim {
        let w = weights[n - 1];
        if spec.unitary {
            lowering[[n - 1, n]] = c(w.sqrt());
            raising[[n, n - 1]] = c(w.sqrt());
        } else {
            lowering[[n - 1, n]] = c(w);
            raising[[n, n - 1]] = c(1.0);
        }
    }
    let offset = spec.number_offset();
    let number = diag_real(&(0..dim).map(|n| n as f64 + offset).collect::<Vec<_>>());
    let s = spec.shift();
    let tilde: Vec<f64> = (0..dim).map(|n| n as f64 + offset + s).collect();
    let grade = diag(&tilde.iter().map(|&t| phase_pow(t)).collect::<Vec<_>>());
    let grade_inv = diag(&tilde.iter().map(|&t| phase_pow(-t)).collect::<Vec<_>>());
    let reflection = spec.h_params().map(|(delta, nu, _)| {
        let k = (nu - delta + 1.0) / nu;
        diag_real(&(0..dim).map(|m| if m % 2 == 0 { k } else { -k }).collect::<Vec<_>>())
    });
    Ok(FockRep {
        spec: *spec,
        dim,
        lowering,
        raising,
        number,
        grade,
        grade_inv,
        reflection,
        weights,
        tilde,
    })
}

impl FockRep {
    pub fn identity(&self) -> Mat {
        identity(self.dim)
    }

    /// `f(Ñ)` as a diagonal matrix.
    pub fn diag_fn(&self, f: impl Fn(f64) -> crate::C64) -> Mat {
        diag(&self.tilde.iter().map(|&t| f(t)).collect::<Vec<_>>())
    }

    pub fn weight(&self, n: usize) -> f64 {
        if n == 0 {
            0.0
        } else {
            self.weights[n - 1]
        }
    }
}

pub fn validity_window(rep: &FockRep, raise_degree: usize) -> Result<ValidityWindow> {
    ValidityWindow::per_slot(rep.dim, 1, raise_degree)
}

/// Residuals of every defining relation of the family on the valid window.
pub fn check_defining_relations(rep: &FockRep, tol: f64) -> Vec<CheckReport> {
    let images = Images::single(rep);
    relations::defining_relations(&rep.spec)
        .iter()
        .map(|rel| {
            let started = Instant::now();
            let window = ValidityWindow::per_slot(rep.dim, 1, rel.raise_degree.min(rep.dim - 1))
                .expect("degree clamped below dim");
            let residual = relations::relation_residual(rel, &images, &rep.spec, &window);
            CheckReport::new(
                rel.identity,
                rel.identity.id.trim_start_matches("rel."),
                Some(&rep.spec),
                rep.dim,
                window.info(),
                residual,
                tol,
                started,
            )
        })
        .collect()
}

/// `K² = ((ν−δ+1)/ν)² I` for the `H` family.
pub fn check_reflection_square(rep: &FockRep, tol: f64) -> Option<CheckReport> {
    let started = Instant::now();
    let k = rep.reflection.as_ref()?;
    let (delta, nu, _) = rep.spec.h_params()?;
    let kk = (nu - delta + 1.0) / nu;
    let diff = k.dot(k) - identity(rep.dim).mapv(|z| z * kk * kk);
    let res = crate::report::Residual { norm: crate::linalg::spectral_norm(&diff), scale: kk * kk };
    Some(CheckReport::new(
        crate::catalog::FOCK_REFL_SQUARE,
        "K",
        Some(&rep.spec),
        rep.dim,
        WindowInfo::full(rep.dim),
        res,
        tol,
        started,
    ))
}

/// `max_{n ≤ nmax} |(n)_q − [n]|` for a deformed family at a given `q`,
/// compared with the undeformed weights.
pub fn check_q_continuity(spec: &AlgebraSpec, q: f64, nmax: usize, tol: f64) -> Result<CheckReport> {
    let started = Instant::now();
    let params = match spec.params {
        Params::Bq { alpha, beta, .. } => Params::Bq { alpha, beta, q },
        Params::Bbarq { sigma, tau, .. } => Params::Bbarq { sigma, tau, q },
        _ => return Err(Error::Incompatible(format!("{} has no deformation parameter", spec.family()))),
    };
    let near = AlgebraSpec::new(params)?.with_unitary(spec.unitary);
    let flat = spec.undeformed();
    let norm = (1..=nmax).map(|n| (near.weight(n) - flat.weight(n)).abs()).fold(0.0, f64::max);
    Ok(CheckReport::new(
        crate::catalog::QCONT,
        format!("weights n ≤ {nmax}"),
        Some(&near),
        nmax,
        WindowInfo::full(nmax),
        crate::report::Residual { norm, scale: 0.0 },
        tol,
        started,
    )
    .with_detail("q", q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_tend_to_undeformed() {
        for spec in [AlgebraSpec::bq(2.0, 1.0, 1.3).unwrap(), AlgebraSpec::bbarq(2.0, 1.0, 0.7).unwrap()] {
            let r = check_q_continuity(&spec, 1.0001, 10, 1e-2).unwrap();
            assert!(r.passed() && r.residual > 0.0, "{r:?}");
            assert!(check_q_continuity(&spec, 1.3, 10, 1e-2).unwrap().failed());
        }
        assert!(check_q_continuity(&AlgebraSpec::b(2.0, 1.0).unwrap(), 1.0001, 10, 1e-2).is_err());
    }

    #[test]
    fn weight_examples() {
        let b = AlgebraSpec::b(2.0, 1.0).unwrap();
        assert!((b.weight(5) - 5.0).abs() < 1e-14);
        let bbar = AlgebraSpec::bbar(0.0, 1.0).unwrap();
        assert!((bbar.weight(5) - 5.0).abs() < 1e-14);
        let h = AlgebraSpec::h(1.0, 0.5, 0.0).unwrap();
        assert!((h.weight(3) - 3.5).abs() < 1e-14);
        // odd weights pick up the constant term, even ones do not
        let b41 = AlgebraSpec::b(4.0, 1.0).unwrap();
        assert!((b41.weight(1) - 1.0).abs() < 1e-14);
        assert!((b41.weight(2) - 4.0).abs() < 1e-14);
        let bbar21 = AlgebraSpec::bbar(2.0, 1.0).unwrap();
        assert!((bbar21.weight(3) - 9.0).abs() < 1e-14);
    }

    #[test]
    fn q_weight_example() {
        // α = 2, β = 1 reduces to [2n]_q / (q + 1/q); at q = 2, n = 3 that is 17.0625
        let s = AlgebraSpec::bq(2.0, 1.0, 2.0).unwrap();
        assert!((s.weight(3) - 17.0625).abs() < 1e-12);
        assert!((s.weight(1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn build_rejects_negative_unitary_weight() {
        let s = AlgebraSpec::b(-2.0, 1.0).unwrap();
        assert!(matches!(build_rep(&s, 4), Err(Error::NonPositiveWeight { .. })));
        assert!(build_rep(&s.unnormalized(), 4).is_ok());
        assert!(build_rep(&AlgebraSpec::b(2.0, 1.0).unwrap(), 0).is_err());
    }

    #[test]
    fn provisos_reported() {
        assert!(AlgebraSpec::h(1.0, 0.0, 0.0).unwrap_err().is_proviso());
        assert!(AlgebraSpec::bbarq(0.0, 1.0, 1.3).unwrap_err().is_proviso());
        assert_eq!(AlgebraSpec::bq(2.0, 1.0, 1.0), Err(Error::InvalidQ(1.0)));
    }

    #[test]
    fn windows_count_states() {
        assert_eq!(ValidityWindow::per_slot(4, 1, 1).unwrap().states(), 3);
        assert_eq!(ValidityWindow::per_slot(4, 2, 1).unwrap().states(), 9);
        // n1 + n2 ≤ 2
        assert_eq!(ValidityWindow::total_occupation(4, 2, 1).unwrap().states(), 6);
        assert!(ValidityWindow::per_slot(3, 1, 3).is_err());
        assert_eq!(occupations(7, 3, 2), vec![2, 1]);
    }

    #[test]
    fn relations_hold_on_grid_point() {
        let spec = AlgebraSpec::bq(2.0, 1.0, 1.3).unwrap();
        let rep = build_rep(&spec, 10).unwrap();
        for r in check_defining_relations(&rep, 1e-10) {
            assert!(r.passed(), "{}: {}", r.label(), r.residual);
        }
    }

    #[test]
    fn unnormalized_matches_unitary_products() {
        let spec = AlgebraSpec::h(1.0, 2.0, 0.0).unwrap();
        let u = build_rep(&spec, 6).unwrap();
        let n = build_rep(&spec.unnormalized(), 6).unwrap();
        let a = u.lowering.dot(&u.raising);
        let b = n.lowering.dot(&n.raising);
        assert!(crate::linalg::frobenius(&(a - b)) < 1e-12);
    }
}
