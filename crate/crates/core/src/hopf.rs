//! Coproduct, counit and antipode tables, and the Hopf axiom checks.
//!
//! Generators are words in a small atom alphabet. `Diag { grade, qexp }`
//! stands for `(−1)^{grade·Ñ} q^{qexp·Ñ}`; it is grouplike, so the grade
//! element `g` and the Cartan factors `q^{±κÑ/2}` need no special casing.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::catalog::{self, Identity};
use crate::error::{Error, Result};
use crate::fock::{build_rep, AlgebraSpec, Family, FockRep, ValidityWindow};
use crate::linalg::{SparseDot, c, identity, kron, restrict_columns, spectral_norm, zeros, Mat, C64};
use crate::relations::{self, Images};
use crate::report::{CheckReport, Residual};
use crate::scalars::phase_pow;
use crate::tensor::TensorOperator;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Atom {
    Lower,
    Raise,
    /// `N`, or `M` for the `H` family.
    Number,
    Reflection,
    Diag { grade: i32, qexp: f64 },
}

pub type Word = Vec<Atom>;

pub const GRADE: Atom = Atom::Diag { grade: 1, qexp: 0.0 };
pub const GRADE_INV: Atom = Atom::Diag { grade: -1, qexp: 0.0 };

/// A linear combination of words.
#[derive(Debug, Clone, Default)]
pub struct Element(pub Vec<(C64, Word)>);

impl Element {
    pub fn word(coef: C64, word: Word) -> Self {
        Element(vec![(coef, word)])
    }

    pub fn scalar(coef: C64) -> Self {
        Element(vec![(coef, vec![])])
    }

    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Vec::with_capacity(self.0.len() * other.0.len());
        for (a, u) in &self.0 {
            for (b, v) in &other.0 {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.push((a * b, w));
            }
        }
        Element(out)
    }

    pub fn add(mut self, other: Element) -> Element {
        self.0.extend(other.0);
        self
    }

    pub fn scale(mut self, k: C64) -> Element {
        for t in &mut self.0 {
            t.0 *= k;
        }
        self
    }
}

#[derive(Debug, Clone)]
pub struct SweedlerTerm {
    pub coef: C64,
    pub left: Word,
    pub right: Word,
}

/// `Σ coef · left ⊗ right`.
#[derive(Debug, Clone, Default)]
pub struct Sweedler(pub Vec<SweedlerTerm>);

impl Sweedler {
    fn term(coef: f64, left: Word, right: Word) -> SweedlerTerm {
        SweedlerTerm { coef: c(coef), left, right }
    }

    pub fn mul(&self, other: &Sweedler) -> Sweedler {
        let mut out = Vec::with_capacity(self.0.len() * other.0.len());
        for x in &self.0 {
            for y in &other.0 {
                let mut left = x.left.clone();
                left.extend_from_slice(&y.left);
                let mut right = x.right.clone();
                right.extend_from_slice(&y.right);
                out.push(SweedlerTerm { coef: x.coef * y.coef, left, right });
            }
        }
        Sweedler(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Lower,
    Raise,
    Number,
    Reflection,
    Grade,
    GradeInv,
}

impl Generator {
    pub fn atom(self) -> Atom {
        match self {
            Generator::Lower => Atom::Lower,
            Generator::Raise => Atom::Raise,
            Generator::Number => Atom::Number,
            Generator::Reflection => Atom::Reflection,
            Generator::Grade => GRADE,
            Generator::GradeInv => GRADE_INV,
        }
    }

    pub fn name(self, family: Family) -> &'static str {
        match (self, family) {
            (Generator::Lower, Family::H) => "b",
            (Generator::Raise, Family::H) => "bd",
            (Generator::Number, Family::H) => "M",
            (Generator::Lower, _) => "a",
            (Generator::Raise, _) => "ad",
            (Generator::Number, _) => "N",
            (Generator::Reflection, _) => "K",
            (Generator::Grade, _) => "g",
            (Generator::GradeInv, _) => "ginv",
        }
    }

    /// Raising generators per slot in the coproduct image.
    pub fn raise_degree(self) -> usize {
        match self {
            Generator::Raise | Generator::Reflection => 1,
            _ => 0,
        }
    }

    pub fn of_family(family: Family) -> Vec<Generator> {
        use Generator::*;
        match family {
            Family::B | Family::Bq => vec![Lower, Raise, Number, Grade, GradeInv],
            Family::Bbar | Family::Bbarq => vec![Lower, Raise, Number],
            Family::H => vec![Lower, Raise, Number, Reflection, Grade, GradeInv],
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Hopf structure maps for one algebra on a truncated Fock space.
#[derive(Debug, Clone)]
pub struct HopfTables {
    pub spec: AlgebraSpec,
    pub rep: FockRep,
    pub generators: Vec<Generator>,
    pub delta: BTreeMap<Generator, TensorOperator>,
    pub counit: BTreeMap<Generator, C64>,
    pub antipode: BTreeMap<Generator, Mat>,
    pub antipode_inv: BTreeMap<Generator, Mat>,
}

/// Hopf tables for `spec`; `B` needs `α ≠ 0` and `Bbar` needs `σ ≠ 0`, since
/// `Δ(N)` and the grade element carry the shift `β/α` (`τ/σ`).
pub fn build_hopf(spec: &AlgebraSpec, dim: usize) -> Result<HopfTables> {
    if spec.number_shift().is_none() {
        return Err(match spec.family() {
            Family::Bbar => Error::proviso(format!("Hopf structure on {spec}"), "defined provided that σ ≠ 0"),
            _ => Error::proviso(format!("Hopf structure on {spec}"), "defined provided that α ≠ 0"),
        });
    }
    let rep = build_rep(spec, dim)?;
    Ok(HopfTables::from_rep(rep))
}

impl HopfTables {
    pub fn from_rep(rep: FockRep) -> Self {
        let spec = rep.spec;
        let generators = Generator::of_family(spec.family());
        let mut t = HopfTables {
            spec,
            rep,
            generators: generators.clone(),
            delta: BTreeMap::new(),
            counit: BTreeMap::new(),
            antipode: BTreeMap::new(),
            antipode_inv: BTreeMap::new(),
        };
        for g in generators {
            let w = vec![g.atom()];
            let d = TensorOperator { dim: t.rep.dim, sites: 2, matrix: t.sweedler_matrix(&t.delta_word(&w)) };
            t.delta.insert(g, d);
            t.counit.insert(g, t.counit_word(&w));
            t.antipode.insert(g, t.element_matrix(&t.antipode_word(&w)));
            t.antipode_inv.insert(g, t.element_matrix(&t.antipode_inv_word(&w)));
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.rep.dim
    }

    fn q(&self) -> f64 {
        self.spec.q().unwrap_or(1.0)
    }

    /// Exponent unit `κ` of the Cartan factor `k = q^{κÑ/2}` (0 if undeformed).
    fn kappa(&self) -> f64 {
        match self.spec.params {
            crate::fock::Params::Bq { alpha, .. } => alpha,
            crate::fock::Params::Bbarq { sigma, .. } => sigma,
            _ => 0.0,
        }
    }

    pub fn atom_matrix(&self, atom: &Atom) -> Mat {
        match atom {
            Atom::Lower => self.rep.lowering.clone(),
            Atom::Raise => self.rep.raising.clone(),
            Atom::Number => self.rep.number.clone(),
            Atom::Reflection => self.rep.reflection.clone().unwrap_or_else(|| zeros(self.rep.dim)),
            Atom::Diag { grade, qexp } => {
                let q = self.q();
                self.rep.diag_fn(|t| phase_pow(*grade as f64 * t) * q.powf(qexp * t))
            }
        }
    }

    pub fn word_matrix(&self, word: &[Atom]) -> Mat {
        let mut acc = identity(self.rep.dim);
        for a in word {
            acc = acc.sdot(&self.atom_matrix(a));
        }
        acc
    }

    pub fn element_matrix(&self, el: &Element) -> Mat {
        let mut acc = zeros(self.rep.dim);
        for (k, w) in &el.0 {
            acc = acc + self.word_matrix(w).mapv(|z| z * k);
        }
        acc
    }

    pub fn sweedler_matrix(&self, s: &Sweedler) -> Mat {
        let d = self.rep.dim;
        let mut acc = zeros(d * d);
        for t in &s.0 {
            acc = acc + kron(&self.word_matrix(&t.left), &self.word_matrix(&t.right)).mapv(|z| z * t.coef);
        }
        acc
    }

    pub fn delta_atom(&self, atom: &Atom) -> Sweedler {
        use Atom::*;
        let s = self.spec.shift();
        let kap = self.kappa();
        let k = Diag { grade: 0, qexp: kap / 2.0 };
        let kinv = Diag { grade: 0, qexp: -kap / 2.0 };
        let t = Sweedler::term;
        let terms = match (atom, self.spec.family()) {
            (Number, _) => vec![t(1.0, vec![Number], vec![]), t(1.0, vec![], vec![Number]), t(s, vec![], vec![])],
            (Diag { .. }, _) => vec![t(1.0, vec![*atom], vec![*atom])],
            (Reflection, _) => {
                let (delta, nu, _) = self.spec.h_params().unwrap_or((0.0, 1.0, 0.0));
                vec![
                    t(1.0, vec![Reflection], vec![]),
                    t(1.0, vec![], vec![Reflection]),
                    t(delta / nu, vec![], vec![]),
                    t(-2.0 / nu, vec![GRADE_INV, Lower], vec![Raise]),
                    t(2.0 / nu, vec![GRADE, Raise], vec![Lower]),
                ]
            }
            (Lower, Family::B | Family::H) => vec![t(1.0, vec![Lower], vec![]), t(1.0, vec![GRADE], vec![Lower])],
            (Raise, Family::B | Family::H) => {
                vec![t(1.0, vec![Raise], vec![]), t(1.0, vec![GRADE_INV], vec![Raise])]
            }
            (Lower, Family::Bbar) => vec![t(1.0, vec![Lower], vec![]), t(1.0, vec![], vec![Lower])],
            (Raise, Family::Bbar) => vec![t(1.0, vec![Raise], vec![]), t(1.0, vec![], vec![Raise])],
            (Lower, Family::Bq) => vec![
                t(1.0, vec![Lower], vec![k]),
                t(1.0, vec![Diag { grade: 1, qexp: -kap / 2.0 }], vec![Lower]),
            ],
            (Raise, Family::Bq) => vec![
                t(1.0, vec![Raise], vec![k]),
                t(1.0, vec![Diag { grade: -1, qexp: -kap / 2.0 }], vec![Raise]),
            ],
            (Lower, Family::Bbarq) => vec![t(1.0, vec![Lower], vec![k]), t(1.0, vec![kinv], vec![Lower])],
            (Raise, Family::Bbarq) => vec![t(1.0, vec![Raise], vec![k]), t(1.0, vec![kinv], vec![Raise])],
        };
        Sweedler(terms)
    }

    pub fn delta_word(&self, word: &[Atom]) -> Sweedler {
        let mut acc = Sweedler(vec![SweedlerTerm { coef: c(1.0), left: vec![], right: vec![] }]);
        for a in word {
            acc = acc.mul(&self.delta_atom(a));
        }
        acc
    }

    pub fn delta_element(&self, el: &Element) -> Sweedler {
        let mut out = Vec::new();
        for (k, w) in &el.0 {
            for mut t in self.delta_word(w).0 {
                t.coef *= k;
                out.push(t);
            }
        }
        Sweedler(out)
    }

    pub fn counit_atom(&self, atom: &Atom) -> C64 {
        match atom {
            Atom::Lower | Atom::Raise => c(0.0),
            Atom::Number => c(-self.spec.shift()),
            Atom::Reflection => {
                let (delta, nu, _) = self.spec.h_params().unwrap_or((0.0, 1.0, 0.0));
                c(-delta / nu)
            }
            Atom::Diag { .. } => c(1.0),
        }
    }

    pub fn counit_word(&self, word: &[Atom]) -> C64 {
        word.iter().map(|a| self.counit_atom(a)).product()
    }

    pub fn counit_element(&self, el: &Element) -> C64 {
        el.0.iter().map(|(k, w)| k * self.counit_word(w)).sum()
    }

    fn ladder_antipode(&self, atom: &Atom, inverse: bool) -> Element {
        let kap = self.kappa();
        let qh = self.q().powf(kap / 2.0);
        // sign of the ladder image and the power of q^{κ/2} it carries
        let (sign, qpow, word): (f64, f64, Word) = match (atom, self.spec.family(), inverse) {
            (Atom::Lower, Family::B | Family::H, false) => (-1.0, 0.0, vec![GRADE_INV, Atom::Lower]),
            (Atom::Lower, Family::B | Family::H, true) => (1.0, 0.0, vec![GRADE_INV, Atom::Lower]),
            (Atom::Raise, Family::B | Family::H, false) => (1.0, 0.0, vec![Atom::Raise, GRADE]),
            (Atom::Raise, Family::B | Family::H, true) => (-1.0, 0.0, vec![Atom::Raise, GRADE]),
            (Atom::Lower, Family::Bq, false) => (-1.0, -1.0, vec![GRADE_INV, Atom::Lower]),
            (Atom::Lower, Family::Bq, true) => (1.0, 1.0, vec![GRADE_INV, Atom::Lower]),
            (Atom::Raise, Family::Bq, false) => (1.0, 1.0, vec![Atom::Raise, GRADE]),
            (Atom::Raise, Family::Bq, true) => (-1.0, -1.0, vec![Atom::Raise, GRADE]),
            (Atom::Lower, Family::Bbar, _) => (-1.0, 0.0, vec![Atom::Lower]),
            (Atom::Raise, Family::Bbar, _) => (-1.0, 0.0, vec![Atom::Raise]),
            (Atom::Lower, Family::Bbarq, false) => (-1.0, -1.0, vec![Atom::Lower]),
            (Atom::Lower, Family::Bbarq, true) => (-1.0, 1.0, vec![Atom::Lower]),
            (Atom::Raise, Family::Bbarq, false) => (-1.0, 1.0, vec![Atom::Raise]),
            (Atom::Raise, Family::Bbarq, true) => (-1.0, -1.0, vec![Atom::Raise]),
            _ => unreachable!("ladder atoms only"),
        };
        Element::word(c(sign * qh.powf(qpow)), word)
    }

    fn antipode_atom_impl(&self, atom: &Atom, inverse: bool) -> Element {
        match atom {
            Atom::Number => Element(vec![(c(-1.0), vec![Atom::Number]), (c(-2.0 * self.spec.shift()), vec![])]),
            Atom::Reflection => Element::word(c(1.0), vec![Atom::Reflection]),
            Atom::Diag { grade, qexp } => Element::word(c(1.0), vec![Atom::Diag { grade: -grade, qexp: -qexp }]),
            Atom::Lower | Atom::Raise => self.ladder_antipode(atom, inverse),
        }
    }

    pub fn antipode_atom(&self, atom: &Atom) -> Element {
        self.antipode_atom_impl(atom, false)
    }

    pub fn antipode_inv_atom(&self, atom: &Atom) -> Element {
        self.antipode_atom_impl(atom, true)
    }

    fn anti_word(&self, word: &[Atom], inverse: bool) -> Element {
        let mut acc = Element::scalar(c(1.0));
        for a in word.iter().rev() {
            acc = acc.mul(&self.antipode_atom_impl(a, inverse));
        }
        acc
    }

    pub fn antipode_word(&self, word: &[Atom]) -> Element {
        self.anti_word(word, false)
    }

    pub fn antipode_inv_word(&self, word: &[Atom]) -> Element {
        self.anti_word(word, true)
    }

    pub fn antipode_element(&self, el: &Element) -> Element {
        let mut out = Element::default();
        for (k, w) in &el.0 {
            out = out.add(self.antipode_word(w).scale(*k));
        }
        out
    }

    pub fn antipode_inv_element(&self, el: &Element) -> Element {
        let mut out = Element::default();
        for (k, w) in &el.0 {
            out = out.add(self.antipode_inv_word(w).scale(*k));
        }
        out
    }

    /// Images `Δ(x)` of all generators, for the homomorphism check.
    pub fn delta_images(&self) -> Images {
        let d2 = |a: Atom| self.sweedler_matrix(&self.delta_word(&[a]));
        Images {
            lower: d2(Atom::Lower),
            raise: d2(Atom::Raise),
            number: d2(Atom::Number),
            grade: d2(GRADE),
            grade_inv: d2(GRADE_INV),
            reflection: self.rep.reflection.as_ref().map(|_| d2(Atom::Reflection)),
            identity: identity(self.rep.dim * self.rep.dim),
            reversed: false,
        }
    }

    /// Images `S(x)`, evaluated with reversed products.
    pub fn antipode_images(&self) -> Images {
        let s1 = |a: Atom| self.element_matrix(&self.antipode_word(&[a]));
        Images {
            lower: s1(Atom::Lower),
            raise: s1(Atom::Raise),
            number: s1(Atom::Number),
            grade: s1(GRADE),
            grade_inv: s1(GRADE_INV),
            reflection: self.rep.reflection.as_ref().map(|_| s1(Atom::Reflection)),
            identity: identity(self.rep.dim),
            reversed: true,
        }
    }

    fn target(&self, g: Generator) -> &'static str {
        g.name(self.spec.family())
    }

    fn report(
        &self,
        id: Identity,
        g: Generator,
        w: &ValidityWindow,
        lhs: &Mat,
        rhs: &Mat,
        tol: f64,
        started: Instant,
    ) -> CheckReport {
        let res = windowed_difference(lhs, rhs, w);
        CheckReport::new(id, self.target(g), Some(&self.spec), self.rep.dim, w.info(), res, tol, started)
    }
}

/// `‖(L − R)·P‖` scaled by `‖L·P‖ + ‖R·P‖`.
pub fn windowed_difference(lhs: &Mat, rhs: &Mat, w: &ValidityWindow) -> Residual {
    let l = restrict_columns(lhs, &w.mask);
    let r = restrict_columns(rhs, &w.mask);
    let scale = spectral_norm(&l) + spectral_norm(&r);
    Residual { norm: spectral_norm(&(l - r)), scale }
}

fn window(dim: usize, sites: usize, degree: usize) -> ValidityWindow {
    ValidityWindow::per_slot(dim, sites, degree.min(dim - 1)).expect("degree clamped")
}

pub fn check_coassociativity(t: &HopfTables, tol: f64) -> Vec<CheckReport> {
    let d = t.dim();
    t.generators
        .iter()
        .map(|&g| {
            let started = Instant::now();
            let sw = t.delta_word(&[g.atom()]);
            let mut lhs = zeros(d * d * d);
            let mut rhs = zeros(d * d * d);
            for term in &sw.0 {
                let l = t.sweedler_matrix(&t.delta_word(&term.left));
                lhs = lhs + kron(&l, &t.word_matrix(&term.right)).mapv(|z| z * term.coef);
                let r = t.sweedler_matrix(&t.delta_word(&term.right));
                rhs = rhs + kron(&t.word_matrix(&term.left), &r).mapv(|z| z * term.coef);
            }
            t.report(catalog::HOPF_COASSOC, g, &window(d, 3, g.raise_degree()), &lhs, &rhs, tol, started)
        })
        .collect()
}

pub fn check_counit(t: &HopfTables, tol: f64) -> Vec<CheckReport> {
    let d = t.dim();
    let mut out = Vec::new();
    for &g in &t.generators {
        let x = t.word_matrix(&[g.atom()]);
        let sw = t.delta_word(&[g.atom()]);
        let w = window(d, 1, g.raise_degree());
        for (id, left) in [(catalog::HOPF_COUNIT_LEFT, true), (catalog::HOPF_COUNIT_RIGHT, false)] {
            let started = Instant::now();
            let mut acc = zeros(d);
            for term in &sw.0 {
                let (eps, keep) = if left { (&term.left, &term.right) } else { (&term.right, &term.left) };
                acc = acc + t.word_matrix(keep).mapv(|z| z * term.coef * t.counit_word(eps));
            }
            out.push(t.report(id, g, &w, &acc, &x, tol, started));
        }
    }
    out
}

pub fn check_antipode(t: &HopfTables, tol: f64) -> Vec<CheckReport> {
    let d = t.dim();
    let mut out = Vec::new();
    for &g in &t.generators {
        let sw = t.delta_word(&[g.atom()]);
        let eps = identity(d).mapv(|z| z * t.counit_word(&[g.atom()]));
        let w = window(d, 1, g.raise_degree());
        for (id, left) in [(catalog::HOPF_ANTIPODE_LEFT, true), (catalog::HOPF_ANTIPODE_RIGHT, false)] {
            let started = Instant::now();
            let mut acc = zeros(d);
            for term in &sw.0 {
                let m = if left {
                    t.element_matrix(&t.antipode_word(&term.left)).sdot(&t.word_matrix(&term.right))
                } else {
                    t.word_matrix(&term.left).sdot(&t.element_matrix(&t.antipode_word(&term.right)))
                };
                acc = acc + m.mapv(|z| z * term.coef);
            }
            out.push(t.report(id, g, &w, &acc, &eps, tol, started));
        }
    }
    out
}

pub fn check_antipode_inverse(t: &HopfTables, tol: f64) -> Vec<CheckReport> {
    let d = t.dim();
    t.generators
        .iter()
        .map(|&g| {
            let started = Instant::now();
            let w = vec![g.atom()];
            let back = t.element_matrix(&t.antipode_inv_element(&t.antipode_word(&w)));
            t.report(catalog::HOPF_ANTIPODE_INVERSE, g, &window(d, 1, 0), &back, &t.word_matrix(&w), tol, started)
        })
        .collect()
}

/// `Δ` and `S` respect every defining relation.
pub fn check_delta_homomorphism(t: &HopfTables, tol: f64) -> Vec<CheckReport> {
    let d = t.dim();
    let mut out = Vec::new();
    let rels = relations::defining_relations(&t.spec);
    let dimg = t.delta_images();
    for rel in &rels {
        let started = Instant::now();
        let w = window(d, 2, rel.raise_degree.max(2));
        let res = relations::relation_residual(rel, &dimg, &t.spec, &w);
        out.push(CheckReport::new(
            catalog::HOPF_DELTA_HOM,
            rel.identity.id,
            Some(&t.spec),
            d,
            w.info(),
            res,
            tol,
            started,
        ));
    }
    let simg = t.antipode_images();
    for rel in &rels {
        let started = Instant::now();
        let w = window(d, 1, rel.raise_degree.max(1));
        let res = relations::relation_residual(rel, &simg, &t.spec, &w);
        out.push(CheckReport::new(
            catalog::HOPF_ANTIPODE_ANTIHOM,
            rel.identity.id,
            Some(&t.spec),
            d,
            w.info(),
            res,
            tol,
            started,
        ));
    }
    out
}

/// Every Hopf-suite check.
pub fn check_hopf(t: &HopfTables, tol: f64) -> Vec<CheckReport> {
    let mut out = check_coassociativity(t, tol);
    out.extend(check_counit(t, tol));
    out.extend(check_antipode(t, tol));
    out.extend(check_antipode_inverse(t, tol));
    out.extend(check_delta_homomorphism(t, tol));
    out
}

/// `ad_x(y) = Σ x₍₁₎ y S(x₍₂₎)`, or with `prime`, `Σ x₍₂₎ y S⁻¹(x₍₁₎)`.
pub fn adjoint_action(t: &HopfTables, x: &[Atom], y: &Mat, prime: bool) -> Mat {
    let mut acc = zeros(t.dim());
    for term in t.delta_word(x).0 {
        let m = if prime {
            t.word_matrix(&term.right).sdot(y).sdot(&t.element_matrix(&t.antipode_inv_word(&term.left)))
        } else {
            t.word_matrix(&term.left).sdot(y).sdot(&t.element_matrix(&t.antipode_word(&term.right)))
        };
        acc = acc + m.mapv(|z| z * term.coef);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(reports: &[CheckReport]) {
        for r in reports {
            assert!(r.passed(), "{} residual {}", r.label(), r.residual);
        }
    }

    #[test]
    fn degenerate_shift_is_a_proviso() {
        assert!(build_hopf(&AlgebraSpec::b(0.0, 1.0).unwrap(), 4).unwrap_err().is_proviso());
        assert!(build_hopf(&AlgebraSpec::bbar(0.0, 1.0).unwrap(), 4).unwrap_err().is_proviso());
    }

    #[test]
    fn hopf_axioms_small() {
        for spec in [
            AlgebraSpec::b(2.0, 1.0).unwrap(),
            AlgebraSpec::bq(4.0, 1.0, 0.7).unwrap(),
            AlgebraSpec::bbar(1.0, 2.0).unwrap(),
            AlgebraSpec::bbarq(2.0, 1.0, 1.3).unwrap(),
            AlgebraSpec::h(1.0, 0.5, -0.25).unwrap(),
        ] {
            let t = build_hopf(&spec, 5).unwrap();
            all_pass(&check_hopf(&t, 1e-10));
        }
    }

    #[test]
    fn adjoint_of_number_on_lowering() {
        let spec = AlgebraSpec::b(2.0, 2.0).unwrap();
        let t = build_hopf(&spec, 6).unwrap();
        let ad = adjoint_action(&t, &[Atom::Number], &t.rep.lowering, false);
        // [N,a] − (β/α)a = −(1 + β/α) a
        let expect = t.rep.lowering.mapv(|z| z * -2.0);
        assert!(crate::linalg::frobenius(&(ad - expect)) < 1e-12);
    }

    #[test]
    fn counit_values() {
        let t = build_hopf(&AlgebraSpec::h(1.0, 2.0, 0.0).unwrap(), 4).unwrap();
        assert_eq!(t.counit[&Generator::Reflection], c(-0.5));
        assert_eq!(t.counit[&Generator::Number], c(-0.5));
        assert_eq!(t.counit[&Generator::Lower], c(0.0));
    }
}
