//! Distinguished elements `L`, `L⁺`, `M`, the characteristic identity, Casimir
//! spectra of the embedded realizations, and the `B ↔ H` isomorphism pair.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, Identity};
use crate::error::{Error, Result};
use crate::fock::{build_rep, AlgebraSpec, Family, FockRep, ValidityWindow};
use crate::hopf::{windowed_difference, HopfTables};
use crate::linalg::{c, diag_real, identity, kron, restrict_columns, spectral_norm, Mat, C64};
use crate::relations::{t, terms_residual, Term};
use crate::report::{CheckReport, Residual};
use crate::scalars::{phase_pow, q_bracket};

/// `(λ₂, λ₃)` from `2λ₃ + βλ₁ + λ₂ = 0` and `2λ₂ + αλ₁ = 0`.
pub fn solve_lambda_constraints(alpha: f64, beta: f64, l1: f64) -> (f64, f64) {
    let l2 = -alpha * l1 / 2.0;
    let l3 = -(beta * l1 + l2) / 2.0;
    (l2, l3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ElementKind {
    L,
    Lplus,
    M,
}

#[derive(Debug, Clone)]
pub struct StructureElement {
    pub kind: ElementKind,
    /// `(λ₁, λ₂, λ₃, λ₄)` or `(μ₁, μ₂, ρ)`.
    pub coefficients: Vec<f64>,
    pub matrix: Mat,
}

fn window(dim: usize, degree: usize) -> ValidityWindow {
    ValidityWindow::per_slot(dim, 1, degree.min(dim - 1)).expect("degree clamped")
}

fn scaled(m: &Mat, k: f64) -> Mat {
    m.mapv(|z| z * k)
}

fn require_family(rep: &FockRep, family: Family, what: &str) -> Result<()> {
    if rep.spec.family() == family {
        Ok(())
    } else {
        Err(Error::Incompatible(format!("{what} needs a {family} representation, got {}", rep.spec)))
    }
}

fn report(id: Identity, target: &str, rep: &FockRep, w: &ValidityWindow, res: Residual, tol: f64, started: Instant) -> CheckReport {
    CheckReport::new(id, target, Some(&rep.spec), rep.dim, w.info(), res, tol, started)
}

fn terms_report(id: Identity, target: &str, rep: &FockRep, degree: usize, terms: &[Term], tol: f64) -> CheckReport {
    let started = Instant::now();
    let w = window(rep.dim, degree);
    report(id, target, rep, &w, terms_residual(terms, false, &w), tol, started)
}

/// `L⁺ = λ₁(a†a − (α/2)N + (α/4 − β/2)I) + λ₄(−1)^Ñ`; `L` when `λ₄ = 0`.
pub fn build_l(rep: &FockRep, l1: f64, l4: f64) -> Result<StructureElement> {
    require_family(rep, Family::B, "L")?;
    if l1 == 0.0 && l4 == 0.0 {
        return Err(Error::Incompatible("L with λ₁ = λ₄ = 0 is the zero element".into()));
    }
    let (alpha, beta) = rep.spec.alpha_beta().expect("B family");
    let (l2, l3) = solve_lambda_constraints(alpha, beta, l1);
    let ata = rep.raising.dot(&rep.lowering);
    let matrix = scaled(&ata, l1) + scaled(&rep.number, l2) + scaled(&rep.identity(), l3) + scaled(&rep.grade, l4);
    Ok(StructureElement {
        kind: if l4 == 0.0 { ElementKind::L } else { ElementKind::Lplus },
        coefficients: vec![l1, l2, l3, l4],
        matrix,
    })
}

/// Anticommutation with the ladder, Fock action, `Δ`, `ε` and `S` of `L⁺`.
pub fn check_l_properties(elem: &StructureElement, tables: &HopfTables, tol: f64) -> Vec<CheckReport> {
    let rep = &tables.rep;
    let (alpha, beta) = rep.spec.alpha_beta().expect("B family");
    let (l1, _, l3, l4) = (elem.coefficients[0], elem.coefficients[1], elem.coefficients[2], elem.coefficients[3]);
    let l = &elem.matrix;
    let (a, ad) = (&rep.lowering, &rep.raising);
    let mut out = vec![
        terms_report(catalog::L_ACOMM_LOWER, "L", rep, 1, &[t(1.0, &[l, a]), t(1.0, &[a, l])], tol),
        terms_report(catalog::L_ACOMM_RAISE, "L", rep, 1, &[t(1.0, &[l, ad]), t(1.0, &[ad, l])], tol),
    ];

    let started = Instant::now();
    let w = window(rep.dim, 1);
    let pref = l1 * (alpha / 4.0 - beta / 2.0);
    let fock: Vec<C64> = (0..rep.dim)
        .map(|n| (c(pref) + phase_pow(beta / alpha) * l4) * if n % 2 == 0 { 1.0 } else { -1.0 })
        .collect();
    out.push(report(catalog::L_FOCK, "L", rep, &w, windowed_difference(l, &crate::linalg::diag(&fock), &w), tol, started));

    // Δ(L⁺) from the generator images versus the closed form
    let started = Instant::now();
    let d2 = |g| tables.delta[&g].matrix.clone();
    use crate::hopf::Generator as G;
    let id2 = identity(rep.dim * rep.dim);
    let dl = scaled(&d2(G::Raise).dot(&d2(G::Lower)), l1)
        + scaled(&d2(G::Number), -alpha * l1 / 2.0)
        + scaled(&id2, l3)
        + scaled(&d2(G::Grade), l4);
    let lbare = l - &scaled(&rep.grade, l4);
    let i1 = rep.identity();
    let (g, gi) = (&rep.grade, &rep.grade_inv);
    let closed = kron(&lbare, &i1) + kron(&i1, &lbare) - scaled(&id2, l1 * alpha / 4.0) + scaled(&kron(g, g), l4)
        - scaled(&(kron(&g.dot(ad), a) - kron(&gi.dot(a), ad)), l1);
    let w2 = ValidityWindow::per_slot(rep.dim, 2, 1.min(rep.dim - 1)).expect("valid");
    out.push(report(catalog::L_DELTA, "L+", rep, &w2, windowed_difference(&dl, &closed, &w2), tol, started));

    let started = Instant::now();
    let w2b = ValidityWindow::per_slot(rep.dim, 2, 2.min(rep.dim - 1)).expect("valid");
    let da = d2(G::Lower);
    let res = terms_residual(&[t(1.0, &[&dl, &da]), t(1.0, &[&da, &dl])], false, &w2b);
    out.push(report(catalog::L_DELTA_ACOMM, "L+", rep, &w2b, res, tol, started));

    let started = Instant::now();
    let eps = tables.counit[&G::Number] * (-alpha * l1 / 2.0) + l3 + l4 * tables.counit[&G::Grade];
    let res = Residual::absolute((eps - c(l1 * alpha / 4.0 + l4)).norm());
    out.push(
        CheckReport::new(catalog::L_COUNIT, "L+", Some(&rep.spec), rep.dim, crate::report::WindowInfo::full(1), res, tol, started)
            .with_detail("counit", eps.re),
    );

    let s = |g| tables.antipode[&g].clone();
    let integral = rep.spec.shift().fract() == 0.0;
    if l4 != 0.0 && !integral {
        out.push(CheckReport::skipped(
            catalog::L_ANTIPODE,
            "L+",
            Some(&rep.spec),
            rep.dim,
            "S((−1)^Ñ) = (−1)^(−Ñ) coincides with (−1)^Ñ only for β/α ∈ ℤ",
        ));
    } else {
        let started = Instant::now();
        let sl = scaled(&s(G::Lower).dot(&s(G::Raise)), l1)
            + scaled(&s(G::Number), -alpha * l1 / 2.0)
            + scaled(&i1, l3)
            + scaled(&s(G::Grade), l4);
        out.push(report(catalog::L_ANTIPODE, "L+", rep, &w, windowed_difference(&sl, l, &w), tol, started));
    }
    out
}

/// `C(C + (α/2 − β)I) + (α/4 − β/2)²I − (η/λ₁²)I` with `C = a†a − (α/2)N`.
pub fn characteristic_identity_residual(rep: &FockRep, l1: f64, tol: f64) -> Result<CheckReport> {
    require_family(rep, Family::B, "the characteristic identity")?;
    if l1 == 0.0 {
        return Err(Error::Incompatible("the characteristic identity needs λ₁ ≠ 0".into()));
    }
    let (alpha, beta) = rep.spec.alpha_beta().expect("B family");
    let cm = rep.raising.dot(&rep.lowering) - scaled(&rep.number, alpha / 2.0);
    let k = alpha / 4.0 - beta / 2.0;
    let eta = l1 * l1 * k * k;
    let i = rep.identity();
    let terms = [t(1.0, &[&cm, &cm]), t(alpha / 2.0 - beta, &[&cm]), t(k * k - eta / (l1 * l1), &[&i])];
    Ok(terms_report(catalog::CHARACTERISTIC, "C", rep, 1, &terms, tol).with_detail("eta", eta))
}

/// `M = (1/δ)b†b + (ν/2δ)K + ρI`.
pub fn build_m(rep: &FockRep) -> Result<StructureElement> {
    require_family(rep, Family::H, "M")?;
    let (delta, nu, rho) = rep.spec.h_params().expect("H family");
    if delta == 0.0 {
        return Err(Error::proviso("M with δ = 0", "no such element exists for δ = 0"));
    }
    let (mu1, mu2) = (1.0 / delta, nu / (2.0 * delta));
    let k = rep.reflection.as_ref().expect("H carries K");
    let matrix = scaled(&rep.raising.dot(&rep.lowering), mu1) + scaled(k, mu2) + scaled(&rep.identity(), rho);
    Ok(StructureElement { kind: ElementKind::M, coefficients: vec![mu1, mu2, rho], matrix })
}

pub fn check_m(rep: &FockRep, tol: f64) -> Result<Vec<CheckReport>> {
    let m = build_m(rep)?;
    let (delta, _, rho) = rep.spec.h_params().expect("H family");
    let (b, bd) = (&rep.lowering, &rep.raising);
    let mm = &m.matrix;
    let started = Instant::now();
    let w = window(rep.dim, 1);
    let mut out = vec![report(catalog::M_NUMBER, "M", rep, &w, windowed_difference(mm, &rep.number, &w), tol, started)];
    out.push(terms_report(catalog::M_LOWER, "M", rep, 0, &[t(1.0, &[mm, b]), t(-1.0, &[b, mm]), t(1.0, &[b])], tol));
    out.push(terms_report(catalog::M_RAISE, "M", rep, 1, &[t(1.0, &[mm, bd]), t(-1.0, &[bd, mm]), t(-1.0, &[bd])], tol));
    let i = rep.identity();
    out.push(terms_report(
        catalog::COM,
        "b",
        rep,
        1,
        &[t(1.0, &[b, bd]), t(1.0, &[bd, b]), t(-2.0 * delta, &[mm]), t(-delta * (1.0 - 2.0 * rho), &[&i])],
        tol,
    ));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    Osp12,
    Sl2,
    Ospq12,
    Slq2,
}

/// Images of `e`, `f`, `h` in a Fock representation.
#[derive(Debug, Clone)]
pub struct Realization {
    pub target: Target,
    pub spec: AlgebraSpec,
    pub dim: usize,
    pub e: Mat,
    pub f: Mat,
    pub h: Mat,
    /// Product constraint value (`μλ`, `μ′λ′` or `ξζ`).
    pub normalization: f64,
    /// `[h,e] = κe`.
    pub kappa: f64,
    /// Raising degree of `e`.
    pub degree: usize,
    /// `(J₀, J₊, J₋)` for the `sl(2)` realization built from the boson families.
    pub j: Option<(Mat, Mat, Mat)>,
}

fn split(cst: f64) -> (f64, f64) {
    let mu = cst.abs().sqrt();
    (mu, cst / mu)
}

fn osp_from(rep: &FockRep) -> Result<(Mat, Mat, Mat, f64)> {
    let i = rep.identity();
    match rep.spec.family() {
        Family::B => {
            let (alpha, beta) = rep.spec.alpha_beta().expect("B");
            if alpha == 0.0 {
                return Err(Error::proviso("osp(1|2) from B with α = 0", "the realization needs α ≠ 0"));
            }
            let cst = 2.0 / alpha;
            let (mu, la) = split(cst);
            let h = scaled(&rep.number, 2.0) + scaled(&i, 2.0 * beta / alpha);
            Ok((scaled(&rep.raising, mu), scaled(&rep.lowering, la), h, cst))
        }
        Family::H => {
            let (delta, nu, _) = rep.spec.h_params().expect("H");
            let cst = 1.0 / delta;
            let (mu, la) = split(cst);
            let k = rep.reflection.as_ref().expect("K");
            let h = scaled(k, nu / delta) + scaled(&rep.raising.dot(&rep.lowering), 2.0 / delta) + i;
            Ok((scaled(&rep.raising, mu), scaled(&rep.lowering, la), h, cst))
        }
        f => Err(Error::Incompatible(format!("osp(1|2) is realized from B or H, not {f}"))),
    }
}

pub fn build_realization(rep: &FockRep, target: Target) -> Result<Realization> {
    let fam = rep.spec.family();
    let i = rep.identity();
    let mk = |e, f, h, normalization, kappa, degree, j| Realization {
        target,
        spec: rep.spec,
        dim: rep.dim,
        e,
        f,
        h,
        normalization,
        kappa,
        degree,
        j,
    };
    match (target, fam) {
        (Target::Osp12, Family::B | Family::H) => {
            let (e, f, h, cst) = osp_from(rep)?;
            Ok(mk(e, f, h, cst, 2.0, 1, None))
        }
        (Target::Sl2, Family::B | Family::H) => {
            let (e, f, h, _) = osp_from(rep)?;
            let (mup, lap) = (0.5, -0.5);
            let ep = scaled(&e.dot(&e), mup);
            let fp = scaled(&f.dot(&f), lap);
            let hp = scaled(&h, 0.5);
            let k = C64::new(0.0, 1.0 / 2f64.sqrt());
            let j0 = scaled(&hp, 0.5);
            let jp = ep.mapv(|z| z * k);
            let jm = fp.mapv(|z| z * k);
            Ok(mk(ep, fp, hp, mup * lap, 2.0, 2, Some((j0, jp, jm))))
        }
        (Target::Sl2, Family::Bbar) => {
            let (sigma, tau) = rep.spec.sigma_tau().expect("Bbar");
            if sigma == 0.0 {
                return Err(Error::proviso("sl(2) from Bbar with σ = 0", "the realization needs σ ≠ 0"));
            }
            let cst = -2.0 / sigma;
            let (xi, zeta) = split(cst);
            let h = scaled(&rep.number, 2.0) + scaled(&i, 2.0 * tau / sigma);
            Ok(mk(scaled(&rep.raising, xi), scaled(&rep.lowering, zeta), h, cst, 2.0, 1, None))
        }
        (Target::Ospq12, Family::Bq) => {
            let (alpha, beta) = rep.spec.alpha_beta().expect("Bq");
            let q = rep.spec.qv().expect("Bq");
            let cst = 1.0 / q_bracket(alpha, q);
            let (mu, la) = split(cst);
            let h = &rep.number + &scaled(&i, beta / alpha);
            Ok(mk(scaled(&rep.raising, mu), scaled(&rep.lowering, la), h, cst, 1.0, 1, None))
        }
        (Target::Slq2, Family::Bbarq) => {
            let (sigma, tau) = rep.spec.sigma_tau().expect("Bbarq");
            let q = rep.spec.qv().expect("Bbarq");
            let cst = -1.0 / q_bracket(sigma / 2.0, q);
            let (xi, zeta) = split(cst);
            let h = scaled(&rep.number, 2.0) + scaled(&i, 2.0 * tau / sigma);
            Ok(mk(scaled(&rep.raising, xi), scaled(&rep.lowering, zeta), h, cst, 2.0, 1, None))
        }
        (t, f) => Err(Error::Incompatible(format!("{t:?} is not realized from the {f} family"))),
    }
}

fn rep_stub(real: &Realization) -> FockRep {
    build_rep(&real.spec, real.dim).expect("realization was built from this spec")
}

/// Defining relations of the target algebra on the realization.
pub fn check_realization(real: &Realization, tol: f64) -> Vec<CheckReport> {
    let rep = rep_stub(real);
    let (e, f, h) = (&real.e, &real.f, &real.h);
    let d = real.degree;
    let ef = match real.target {
        Target::Osp12 => terms_report(catalog::REAL_ACOMM_EF, "e,f", &rep, d, &[t(1.0, &[e, f]), t(1.0, &[f, e]), t(-1.0, &[h])], tol),
        Target::Sl2 => terms_report(catalog::REAL_COMM_EF, "e,f", &rep, d, &[t(1.0, &[e, f]), t(-1.0, &[f, e]), t(-1.0, &[h])], tol),
        Target::Ospq12 | Target::Slq2 => {
            let q = rep.spec.q().expect("deformed");
            let (qp, id, sign) = match real.target {
                Target::Ospq12 => (q.powf(rep.spec.alpha_beta().expect("Bq").0), catalog::REAL_ACOMM_EF_Q, 1.0),
                _ => (q.powf(rep.spec.sigma_tau().expect("Bbarq").0 / 2.0), catalog::REAL_COMM_EF_Q, -1.0),
            };
            let qv = crate::scalars::QValue::new(qp).expect("q' ≠ 1");
            let hq = diag_real(&h.diag().iter().map(|z| q_bracket(z.re, qv)).collect::<Vec<_>>());
            terms_report(id, "e,f", &rep, d, &[t(1.0, &[e, f]), t(sign, &[f, e]), t(-1.0, &[&hq])], tol)
        }
    };
    let k = real.kappa;
    vec![
        ef,
        terms_report(catalog::REAL_COMM_HE, "h,e", &rep, d, &[t(1.0, &[h, e]), t(-1.0, &[e, h]), t(-k, &[e])], tol),
        terms_report(catalog::REAL_COMM_HF, "h,f", &rep, d, &[t(1.0, &[h, f]), t(-1.0, &[f, h]), t(k, &[f])], tol),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CasimirKind {
    OspI2,
    Sl2C2,
}

/// `c_n`, `c_even`, `c_odd` of the `sl(2)` Casimir on `B_{α,β}`.
pub fn sl2_casimir_values(alpha: f64, beta: f64, n: usize) -> (f64, f64, f64) {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let cn = 0.5 - beta / (2.0 * alpha) - beta * beta / (4.0 * alpha * alpha) + (2.0 * beta - alpha) / (8.0 * alpha) * (3.0 + sign);
    let ce = -beta * beta / (4.0 * alpha * alpha) + beta / (2.0 * alpha);
    let co = 0.25 - beta * beta / (4.0 * alpha * alpha);
    (cn, ce, co)
}

pub fn osp_casimir_value(alpha: f64, beta: f64) -> f64 {
    beta * beta / (4.0 * alpha * alpha) - beta / (4.0 * alpha)
}

/// Casimir matrix against its closed-form spectrum on the valid levels.
pub fn casimir_spectrum(real: &Realization, which: CasimirKind, tol: f64) -> Result<Vec<CheckReport>> {
    let rep = rep_stub(real);
    require_family(&rep, Family::B, "the Casimir spectrum")?;
    let (alpha, beta) = rep.spec.alpha_beta().expect("B");
    let started = Instant::now();
    let w = window(rep.dim, 2);
    match (which, real.target) {
        (CasimirKind::OspI2, Target::Osp12) => {
            let (e, f, h) = (&real.e, &real.f, &real.h);
            let cas = scaled(&e.dot(e).dot(f).dot(f), -0.25) + scaled(&e.dot(f), -0.25) + scaled(&h.dot(h), 1.0 / 16.0)
                - scaled(h, 1.0 / 8.0);
            let i2 = osp_casimir_value(alpha, beta);
            let res = windowed_difference(&cas, &scaled(&rep.identity(), i2), &w);
            Ok(vec![report(catalog::CASIMIR_OSP, "I2", &rep, &w, res, tol, started).with_detail("i2", i2)])
        }
        (CasimirKind::Sl2C2, Target::Sl2) => {
            let (j0, jp, jm) = real.j.as_ref().expect("sl2 realization from B carries J");
            let cas = scaled(&jm.dot(jp), 2.0) - j0.dot(j0) - j0;
            let cn: Vec<f64> = (0..rep.dim).map(|n| sl2_casimir_values(alpha, beta, n).0).collect();
            let res = windowed_difference(&cas, &diag_real(&cn), &w);
            let (_, ce, co) = sl2_casimir_values(alpha, beta, 0);
            let mut out = vec![report(catalog::CASIMIR_SL2, "C2", &rep, &w, res, tol, started)];
            // sector constancy and the sector values
            let started = Instant::now();
            let sector: Vec<f64> = (0..rep.dim).map(|n| if n % 2 == 0 { ce } else { co }).collect();
            let res = windowed_difference(&cas, &diag_real(&sector), &w);
            let diagv: Vec<f64> = cas.diag().iter().map(|z| z.re).collect();
            let spread = |par: usize| {
                let v: Vec<f64> = (0..rep.dim).filter(|&n| n % 2 == par && w.mask[n]).map(|n| diagv[n]).collect();
                let m = v.iter().sum::<f64>() / v.len().max(1) as f64;
                (v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / v.len().max(1) as f64).sqrt()
            };
            out.push(
                report(catalog::CASIMIR_SL2_SECTORS, "C2", &rep, &w, res, tol, started)
                    .with_detail("c_even", ce)
                    .with_detail("c_odd", co)
                    .with_detail("std_even", spread(0))
                    .with_detail("std_odd", spread(1)),
            );
            Ok(out)
        }
        (k, t) => Err(Error::Incompatible(format!("{k:?} is not defined on a {t:?} realization"))),
    }
}

/// `[a,a†] + (2/λ₁)L − (α/2)I`.
pub fn bh_form_check(rep: &FockRep, l1: f64, tol: f64) -> Result<CheckReport> {
    require_family(rep, Family::B, "the BH form")?;
    let (alpha, _) = rep.spec.alpha_beta().expect("B");
    if alpha == 0.0 {
        return Err(Error::proviso("B with α = 0", "B_{0,β} cannot be brought to the H form"));
    }
    if l1 == 0.0 {
        return Err(Error::Incompatible("the BH form needs λ₁ ≠ 0".into()));
    }
    let l = build_l(rep, l1, 0.0)?.matrix;
    let (a, ad) = (&rep.lowering, &rep.raising);
    let i = rep.identity();
    Ok(terms_report(
        catalog::BH_FORM,
        "a,ad",
        rep,
        1,
        &[t(1.0, &[a, ad]), t(-1.0, &[ad, a]), t(2.0 / l1, &[&l]), t(-alpha / 2.0, &[&i])],
        tol,
    ))
}

fn max_residual(id: Identity, target: &str, rep: &FockRep, degree: usize, relations: &[Vec<Term>], tol: f64) -> CheckReport {
    let started = Instant::now();
    let w = window(rep.dim, degree);
    let res = relations
        .iter()
        .map(|terms| terms_residual(terms, false, &w))
        .fold(Residual::absolute(0.0), Residual::max);
    report(id, target, rep, &w, res, tol, started)
}

/// `‖witness·P‖` against `‖operand·P‖`: passes when the witness exceeds 1% of the operand.
fn witness_report(rep: &FockRep, witness: &Mat, operand: &Mat, started: Instant) -> CheckReport {
    let w = window(rep.dim, 1);
    let wn = spectral_norm(&restrict_columns(witness, &w.mask));
    let on = spectral_norm(&restrict_columns(operand, &w.mask));
    let ratio = if wn > 0.0 { 1e-2 * on / wn } else { f64::INFINITY };
    let mut r = report(catalog::ISO_WITNESS, "defect", rep, &w, Residual::absolute(ratio), 1.0, started);
    r.scale = on;
    r.with_detail("witness", wn).with_detail("operand", on)
}

fn phi_n(h: &FockRep, alpha: f64, beta: f64) -> Mat {
    let (delta, nu, _) = h.spec.h_params().expect("H");
    let k = h.reflection.as_ref().expect("K");
    scaled(&h.raising.dot(&h.lowering), 2.0 / alpha) + scaled(k, nu / alpha) + scaled(&h.identity(), (delta - beta) / alpha)
}

fn phi_prime_k(b: &FockRep, delta: f64, nu: f64) -> Mat {
    let (alpha, beta) = b.spec.alpha_beta().expect("B");
    scaled(&b.raising.dot(&b.lowering), -2.0 / nu) + scaled(&b.number, alpha / nu) + scaled(&b.identity(), (beta - delta) / nu)
}

/// `φ: B_{α,β} → H_{δ,ν}` on the `H` representation.
///
/// At `α = 2δ` reports the homomorphism residual and `φ(L)`; otherwise reports
/// the defect `[φ(N), b] + b = (1 − 2δ/α) b` as a witness.
pub fn iso_phi(b_spec: &AlgebraSpec, h_spec: &AlgebraSpec, dim: usize, l1: f64, tol: f64) -> Result<Vec<CheckReport>> {
    let (alpha, beta) = b_spec.alpha_beta().filter(|_| b_spec.family() == Family::B).ok_or_else(|| {
        Error::Incompatible(format!("φ maps from a B algebra, got {b_spec}"))
    })?;
    if alpha == 0.0 {
        return Err(Error::proviso("B with α = 0", "B_{0,β} cannot be mapped to an H form"));
    }
    let h = build_rep(h_spec, dim)?;
    let (delta, nu, _) = h.spec.h_params().ok_or_else(|| Error::Incompatible(format!("φ maps into H, got {h_spec}")))?;
    let (b, bd) = (&h.lowering, &h.raising);
    let pn = phi_n(&h, alpha, beta);
    let i = h.identity();
    let started = Instant::now();
    if alpha != 2.0 * delta {
        let witness = pn.dot(b) - b.dot(&pn) + b;
        return Ok(vec![witness_report(&h, &witness, b, started)]);
    }
    let rels = vec![
        vec![t(1.0, &[b, bd]), t(1.0, &[bd, b]), t(-alpha, &[&pn]), t(-beta, &[&i])],
        vec![t(1.0, &[&pn, b]), t(-1.0, &[b, &pn]), t(1.0, &[b])],
        vec![t(1.0, &[&pn, bd]), t(-1.0, &[bd, &pn]), t(-1.0, &[bd])],
    ];
    let mut out = vec![max_residual(catalog::ISO_PHI, "phi", &h, 1, &rels, tol)];
    let (l2, l3) = solve_lambda_constraints(alpha, beta, l1);
    let pl = scaled(&bd.dot(b), l1) + scaled(&pn, l2) + scaled(&i, l3);
    let k = h.reflection.as_ref().expect("K");
    let started = Instant::now();
    let w = window(dim, 1);
    out.push(report(catalog::ISO_PHI_L, "phi(L)", &h, &w, windowed_difference(&pl, &scaled(k, -l1 * nu / 2.0), &w), tol, started));
    Ok(out)
}

/// `φ′: H_{δ,ν} → B_{α,β}` on the `B` representation, with round trips at `α = 2δ`.
pub fn iso_phi_prime(h_spec: &AlgebraSpec, b_spec: &AlgebraSpec, dim: usize, tol: f64) -> Result<Vec<CheckReport>> {
    let (delta, nu, rho) = h_spec.h_params().ok_or_else(|| Error::Incompatible(format!("φ′ maps from H, got {h_spec}")))?;
    if nu == 0.0 {
        return Err(Error::proviso("H with ν = 0", "φ′ divides by ν"));
    }
    if b_spec.family() != Family::B {
        return Err(Error::Incompatible(format!("φ′ maps into a B algebra, got {b_spec}")));
    }
    let b = build_rep(b_spec, dim)?;
    let (alpha, beta) = b.spec.alpha_beta().expect("B");
    let (a, ad) = (&b.lowering, &b.raising);
    let pk = phi_prime_k(&b, delta, nu);
    let i = b.identity();
    let started = Instant::now();
    if alpha != 2.0 * delta {
        let witness = pk.dot(a) + a.dot(&pk);
        return Ok(vec![witness_report(&b, &witness, a, started)]);
    }
    let rels = vec![
        vec![t(1.0, &[a, ad]), t(-1.0, &[ad, a]), t(-delta, &[&i]), t(-nu, &[&pk])],
        vec![t(1.0, &[&pk, a]), t(1.0, &[a, &pk])],
        vec![t(1.0, &[&pk, ad]), t(1.0, &[ad, &pk])],
    ];
    let mut out = vec![max_residual(catalog::ISO_PHI_PRIME, "phi'", &b, 1, &rels, tol)];

    let w = window(dim, 1);
    let started = Instant::now();
    // φ′(φ(N)) in the B representation
    let back_n = scaled(&ad.dot(a), 2.0 / alpha) + scaled(&pk, nu / alpha) + scaled(&i, (delta - beta) / alpha);
    out.push(report(catalog::ISO_ROUNDTRIP, "phi'(phi(N))", &b, &w, windowed_difference(&back_n, &b.number, &w), tol, started));

    let h = build_rep(h_spec, dim)?;
    let started = Instant::now();
    let pn = phi_n(&h, alpha, beta);
    let back_k = scaled(&h.raising.dot(&h.lowering), -2.0 / nu) + scaled(&pn, alpha / nu) + scaled(&h.identity(), (beta - delta) / nu);
    let k = h.reflection.as_ref().expect("K");
    out.push(report(catalog::ISO_ROUNDTRIP, "phi(phi'(K))", &h, &w, windowed_difference(&back_k, k, &w), tol, started));

    let started = Instant::now();
    let pm = scaled(&ad.dot(a), 1.0 / delta) + scaled(&pk, nu / (2.0 * delta)) + scaled(&i, rho);
    let expect = &b.number + &scaled(&i, (beta - delta) / (2.0 * delta) + rho);
    out.push(report(catalog::ISO_PHI_PRIME_M, "phi'(M)", &b, &w, windowed_difference(&pm, &expect, &w), tol, started));
    Ok(out)
}

/// Iso checks at the matched point and a witness point for one spec.
pub fn iso_suite(spec: &AlgebraSpec, dim: usize, l1: f64, tol: f64) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    match spec.family() {
        Family::H => {
            let (delta, nu, _) = spec.h_params().expect("H");
            let b = AlgebraSpec::b(2.0 * delta, nu + 1.0)?;
            let bw = AlgebraSpec::b(2.0 * delta + 1.0, nu + 1.0)?;
            out.extend(iso_phi(&b, spec, dim, l1, tol)?);
            out.extend(iso_phi(&bw, spec, dim, l1, tol)?);
            out.extend(iso_phi_prime(spec, &b, dim, tol)?);
            out.extend(iso_phi_prime(spec, &bw, dim, tol)?);
        }
        Family::B => {
            let (alpha, beta) = spec.alpha_beta().expect("B");
            let nu = if beta != 1.0 { beta - 1.0 } else { 1.0 };
            let h = AlgebraSpec::h(alpha / 2.0, nu, 0.0)?;
            let hw = AlgebraSpec::h(alpha / 2.0 + 0.5, nu, 0.0)?;
            out.extend(iso_phi(spec, &h, dim, l1, tol)?);
            out.extend(iso_phi(spec, &hw, dim, l1, tol)?);
            out.extend(iso_phi_prime(&h, spec, dim, tol)?);
            out.extend(iso_phi_prime(&hw, spec, dim, tol)?);
        }
        f => return Err(Error::proviso(format!("iso for {f}"), "the isomorphism pair relates B and H only")),
    }
    Ok(out)
}

/// Structure-suite checks for one spec.
pub fn structure_suite(spec: &AlgebraSpec, dim: usize, l1: f64, l4: f64, tol: f64) -> Result<Vec<CheckReport>> {
    let rep = build_rep(spec, dim)?;
    let mut out = Vec::new();
    match spec.family() {
        Family::B => {
            let tables = HopfTables::from_rep(rep.clone());
            out.extend(check_l_properties(&build_l(&rep, l1, 0.0)?, &tables, tol));
            if l4 != 0.0 {
                out.extend(check_l_properties(&build_l(&rep, l1, l4)?, &tables, tol));
            }
            out.push(characteristic_identity_residual(&rep, l1, tol)?);
            out.push(bh_form_check(&rep, l1, tol)?);
            for target in [Target::Osp12, Target::Sl2] {
                out.extend(check_realization(&build_realization(&rep, target)?, tol));
            }
        }
        Family::H => {
            out.extend(check_m(&rep, tol)?);
            for target in [Target::Osp12, Target::Sl2] {
                out.extend(check_realization(&build_realization(&rep, target)?, tol));
            }
        }
        Family::Bbar => out.extend(check_realization(&build_realization(&rep, Target::Sl2)?, tol)),
        Family::Bq => out.extend(check_realization(&build_realization(&rep, Target::Ospq12)?, tol)),
        Family::Bbarq => out.extend(check_realization(&build_realization(&rep, Target::Slq2)?, tol)),
    }
    Ok(out)
}

/// Casimir-suite checks for one spec (boson family `B` only).
pub fn casimir_suite(spec: &AlgebraSpec, dim: usize, tol: f64) -> Result<Vec<CheckReport>> {
    if spec.family() != Family::B {
        return Err(Error::proviso(format!("Casimirs for {}", spec.family()), "closed-form Casimir spectra are given for B only"));
    }
    let rep = build_rep(spec, dim)?;
    let mut out = casimir_spectrum(&build_realization(&rep, Target::Osp12)?, CasimirKind::OspI2, tol)?;
    out.extend(casimir_spectrum(&build_realization(&rep, Target::Sl2)?, CasimirKind::Sl2C2, tol)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_examples() {
        assert_eq!(solve_lambda_constraints(2.0, 1.0, 1.0), (-1.0, 0.0));
        assert_eq!(solve_lambda_constraints(0.0, 0.0, 1.0), (0.0, 0.0));
        assert_eq!(solve_lambda_constraints(4.0, 1.0, 2.0), (-4.0, 1.0));
    }

    #[test]
    fn l_examples() {
        let rep = build_rep(&AlgebraSpec::b(2.0, 1.0).unwrap(), 8).unwrap();
        let l = build_l(&rep, 1.0, 0.0).unwrap();
        assert!(crate::linalg::frobenius(&l.matrix) < 1e-12);
        let rep = build_rep(&AlgebraSpec::b(4.0, 1.0).unwrap(), 6).unwrap();
        let l = build_l(&rep, 1.0, 0.0).unwrap();
        for n in 0..5 {
            let expect = 0.5 * if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((l.matrix[[n, n]] - c(expect)).norm() < 1e-12);
        }
        assert!(build_l(&rep, 0.0, 0.0).is_err());
    }

    #[test]
    fn casimir_values() {
        assert_eq!(osp_casimir_value(2.0, 1.0), -1.0 / 16.0);
        let (c0, ce, co) = sl2_casimir_values(2.0, 1.0, 0);
        assert!((c0 - 3.0 / 16.0).abs() < 1e-15 && (ce - 3.0 / 16.0).abs() < 1e-15 && (co - 3.0 / 16.0).abs() < 1e-15);
        let (_, ce, co) = sl2_casimir_values(4.0, 1.0, 0);
        assert!((ce - 7.0 / 64.0).abs() < 1e-15 && (co - 15.0 / 64.0).abs() < 1e-15);
    }

    #[test]
    fn m_values() {
        let rep = build_rep(&AlgebraSpec::h(1.0, 0.5, -0.25).unwrap(), 6).unwrap();
        let m = build_m(&rep).unwrap();
        for n in 0..6 {
            assert!((m.matrix[[n, n]] - c(n as f64)).norm() < 1e-12);
        }
        let rep = build_rep(&AlgebraSpec::h(1.0, 0.5, 0.0).unwrap(), 6).unwrap();
        assert!((build_m(&rep).unwrap().matrix[[0, 0]] - c(0.25)).norm() < 1e-12);
    }

    #[test]
    fn suites_pass() {
        let specs = [
            AlgebraSpec::b(2.0, 1.0).unwrap(),
            AlgebraSpec::b(4.0, 1.0).unwrap(),
            AlgebraSpec::bbar(1.0, 0.0).unwrap(),
            AlgebraSpec::bq(2.0, 1.0, 1.3).unwrap(),
            AlgebraSpec::bbarq(1.0, 2.0, 0.7).unwrap(),
            AlgebraSpec::h(0.5, 1.0, 0.25).unwrap(),
        ];
        for s in &specs {
            for r in structure_suite(s, 10, 1.0, 0.5, 1e-10).unwrap() {
                assert!(r.passed() || r.status == crate::report::Status::Skipped, "{} {}", r.label(), r.residual);
            }
        }
        for r in casimir_suite(&specs[1], 12, 1e-10).unwrap() {
            assert!(r.passed(), "{} {}", r.label(), r.residual);
        }
        for s in [&specs[0], &specs[5]] {
            for r in iso_suite(s, 10, 1.0, 1e-10).unwrap() {
                assert!(r.passed(), "{} {} {:?}", r.label(), r.residual, r.details);
            }
        }
    }
}
