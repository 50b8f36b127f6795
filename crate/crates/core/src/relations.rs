//! Defining relations as term lists, evaluated on any set of generator images.
//!
//! The same relation list serves the single-site check, the coproduct
//! homomorphism check (images `Δ(x)`) and the antipode anti-homomorphism
//! check (images `S(x)`, products reversed).

use crate::catalog::{self, Identity};
use crate::fock::{AlgebraSpec, Family, FockRep, ValidityWindow};
use crate::linalg::{c, diag, diagonal, restrict_columns, spectral_norm, Mat, C64};
use crate::report::Residual;
use crate::scalars::q_bracket;

/// Generator images in some representation.
#[derive(Debug, Clone)]
pub struct Images {
    pub lower: Mat,
    pub raise: Mat,
    pub number: Mat,
    pub grade: Mat,
    pub grade_inv: Mat,
    pub reflection: Option<Mat>,
    pub identity: Mat,
    /// Evaluate products right to left (antipode images).
    pub reversed: bool,
}

impl Images {
    pub fn single(rep: &FockRep) -> Self {
        Images {
            lower: rep.lowering.clone(),
            raise: rep.raising.clone(),
            number: rep.number.clone(),
            grade: rep.grade.clone(),
            grade_inv: rep.grade_inv.clone(),
            reflection: rep.reflection.clone(),
            identity: rep.identity(),
            reversed: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Term {
    pub coef: C64,
    pub factors: Vec<Mat>,
}

pub fn t(coef: f64, factors: &[&Mat]) -> Term {
    Term { coef: c(coef), factors: factors.iter().map(|m| (*m).clone()).collect() }
}

pub struct Relation {
    pub identity: Identity,
    /// Largest number of raising generators in any monomial.
    pub raise_degree: usize,
    pub terms: fn(&Images, &AlgebraSpec) -> Vec<Term>,
}

/// `f` applied entrywise to the diagonal of a diagonal image.
fn diag_apply(m: &Mat, f: impl Fn(f64) -> f64) -> Mat {
    diag(&diagonal(m).iter().map(|z| c(f(z.re))).collect::<Vec<_>>())
}

fn refl(im: &Images) -> &Mat {
    im.reflection.as_ref().expect("H images carry K")
}

pub fn defining_relations(spec: &AlgebraSpec) -> Vec<Relation> {
    let mut out = Vec::new();
    let ladder = match spec.family() {
        Family::B => Some(Relation {
            identity: catalog::REL_ACOMM_LADDER,
            raise_degree: 1,
            terms: |im, s| {
                let (alpha, beta) = s.alpha_beta().unwrap();
                vec![
                    t(1.0, &[&im.lower, &im.raise]),
                    t(1.0, &[&im.raise, &im.lower]),
                    t(-alpha, &[&im.number]),
                    t(-beta, &[&im.identity]),
                ]
            },
        }),
        Family::Bq => Some(Relation {
            identity: catalog::REL_ACOMM_LADDER_Q,
            raise_degree: 1,
            terms: |im, s| {
                let (alpha, beta) = s.alpha_beta().unwrap();
                let q = s.qv().unwrap();
                let rhs = diag_apply(&im.number, |x| q_bracket(alpha * x + beta, q));
                vec![t(1.0, &[&im.lower, &im.raise]), t(1.0, &[&im.raise, &im.lower]), t(-1.0, &[&rhs])]
            },
        }),
        Family::Bbar => Some(Relation {
            identity: catalog::REL_COMM_LADDER,
            raise_degree: 1,
            terms: |im, s| {
                let (sigma, tau) = s.sigma_tau().unwrap();
                vec![
                    t(1.0, &[&im.lower, &im.raise]),
                    t(-1.0, &[&im.raise, &im.lower]),
                    t(-sigma, &[&im.number]),
                    t(-tau, &[&im.identity]),
                ]
            },
        }),
        Family::Bbarq => Some(Relation {
            identity: catalog::REL_COMM_LADDER_Q,
            raise_degree: 1,
            terms: |im, s| {
                let (sigma, tau) = s.sigma_tau().unwrap();
                let q = s.qv().unwrap();
                let rhs = diag_apply(&im.number, |x| q_bracket(sigma * x + tau, q));
                vec![t(1.0, &[&im.lower, &im.raise]), t(-1.0, &[&im.raise, &im.lower]), t(-1.0, &[&rhs])]
            },
        }),
        Family::H => None,
    };
    if let Some(r) = ladder {
        out.push(r);
        out.push(Relation {
            identity: catalog::REL_NUMBER_LOWER,
            raise_degree: 0,
            terms: |im, _| {
                vec![t(1.0, &[&im.number, &im.lower]), t(-1.0, &[&im.lower, &im.number]), t(1.0, &[&im.lower])]
            },
        });
        out.push(Relation {
            identity: catalog::REL_NUMBER_RAISE,
            raise_degree: 1,
            terms: |im, _| {
                vec![t(1.0, &[&im.number, &im.raise]), t(-1.0, &[&im.raise, &im.number]), t(-1.0, &[&im.raise])]
            },
        });
    }
    match spec.family() {
        Family::B | Family::Bq => {
            out.push(Relation {
                identity: catalog::REL_GRADE_LOWER,
                raise_degree: 0,
                terms: |im, _| vec![t(1.0, &[&im.grade, &im.lower]), t(1.0, &[&im.lower, &im.grade])],
            });
            out.push(Relation {
                identity: catalog::REL_GRADE_RAISE,
                raise_degree: 1,
                terms: |im, _| vec![t(1.0, &[&im.grade, &im.raise]), t(1.0, &[&im.raise, &im.grade])],
            });
            out.push(Relation {
                identity: catalog::REL_GRADE_NUMBER,
                raise_degree: 0,
                terms: |im, _| vec![t(1.0, &[&im.grade, &im.number]), t(-1.0, &[&im.number, &im.grade])],
            });
            out.push(Relation {
                identity: catalog::REL_GRADE_INVERSE,
                raise_degree: 0,
                terms: |im, _| vec![t(1.0, &[&im.grade, &im.grade_inv]), t(-1.0, &[&im.identity])],
            });
        }
        Family::H => {
            out.push(Relation {
                identity: catalog::REL_H_COMM,
                raise_degree: 1,
                terms: |im, s| {
                    let (delta, nu, _) = s.h_params().unwrap();
                    vec![
                        t(1.0, &[&im.lower, &im.raise]),
                        t(-1.0, &[&im.raise, &im.lower]),
                        t(-delta, &[&im.identity]),
                        t(-nu, &[refl(im)]),
                    ]
                },
            });
            out.push(Relation {
                identity: catalog::REL_H_REFL_LOWER,
                raise_degree: 0,
                terms: |im, _| vec![t(1.0, &[refl(im), &im.lower]), t(1.0, &[&im.lower, refl(im)])],
            });
            out.push(Relation {
                identity: catalog::REL_H_REFL_RAISE,
                raise_degree: 1,
                terms: |im, _| vec![t(1.0, &[refl(im), &im.raise]), t(1.0, &[&im.raise, refl(im)])],
            });
            out.push(Relation {
                identity: catalog::REL_H_M_LOWER,
                raise_degree: 0,
                terms: |im, _| {
                    vec![t(1.0, &[&im.number, &im.lower]), t(-1.0, &[&im.lower, &im.number]), t(1.0, &[&im.lower])]
                },
            });
            out.push(Relation {
                identity: catalog::REL_H_M_RAISE,
                raise_degree: 1,
                terms: |im, _| {
                    vec![t(1.0, &[&im.number, &im.raise]), t(-1.0, &[&im.raise, &im.number]), t(-1.0, &[&im.raise])]
                },
            });
            out.push(Relation {
                identity: catalog::REL_H_GRADE_LOWER,
                raise_degree: 0,
                terms: |im, _| vec![t(1.0, &[&im.grade, &im.lower]), t(1.0, &[&im.lower, &im.grade])],
            });
            out.push(Relation {
                identity: catalog::REL_H_GRADE_RAISE,
                raise_degree: 1,
                terms: |im, _| vec![t(1.0, &[&im.grade, &im.raise]), t(1.0, &[&im.raise, &im.grade])],
            });
            out.push(Relation {
                identity: catalog::REL_H_GRADE_REFL,
                raise_degree: 0,
                terms: |im, _| vec![t(1.0, &[&im.grade, refl(im)]), t(-1.0, &[refl(im), &im.grade])],
            });
            out.push(Relation {
                identity: catalog::REL_H_GRADE_NUMBER,
                raise_degree: 0,
                terms: |im, _| vec![t(1.0, &[&im.grade, &im.number]), t(-1.0, &[&im.number, &im.grade])],
            });
            out.push(Relation {
                identity: catalog::REL_H_GRADE_INVERSE,
                raise_degree: 0,
                terms: |im, _| vec![t(1.0, &[&im.grade, &im.grade_inv]), t(-1.0, &[&im.identity])],
            });
        }
        Family::Bbar | Family::Bbarq => {}
    }
    out
}

/// `‖Σ terms · P‖`, scaled by `Σ ‖term · P‖`.
pub fn terms_residual(terms: &[Term], reversed: bool, window: &ValidityWindow) -> Residual {
    let mut total: Option<Mat> = None;
    let mut scale = 0.0;
    for term in terms {
        let prod = if reversed {
            crate::linalg::product(term.factors.iter().rev())
        } else {
            crate::linalg::product(term.factors.iter())
        }
        .expect("terms have at least one factor");
        let prod = restrict_columns(&prod, &window.mask).mapv(|z| z * term.coef);
        scale += spectral_norm(&prod);
        total = Some(match total {
            Some(acc) => acc + prod,
            None => prod,
        });
    }
    let norm = total.map(|m| spectral_norm(&m)).unwrap_or(0.0);
    Residual { norm, scale }
}

pub fn relation_residual(
    rel: &Relation,
    images: &Images,
    spec: &AlgebraSpec,
    window: &ValidityWindow,
) -> Residual {
    let terms = (rel.terms)(images, spec);
    terms_residual(&terms, images.reversed, window)
}
