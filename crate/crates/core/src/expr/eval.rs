use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::fock::{build_rep, AlgebraSpec, Family, FockRep, Params, ValidityWindow};
use crate::hopf::HopfTables;
use crate::linalg::{diag, diagonal, identity, is_diagonal, kron, restrict_columns, spectral_norm, Mat, C64};
use crate::relations::Images;
use crate::report::{Residual, WindowInfo};
use crate::scalars::{phase_pow, q_bracket_checked};

use super::{AtomName, EvalError, Expr, Func, Param};

type EResult<T> = std::result::Result<T, EvalError>;

/// Result of evaluating an expression: a scalar or an operator on `sites`
/// copies of the truncated Fock space.
#[derive(Debug, Clone)]
pub enum Value {
    Scalar(C64),
    Op { sites: usize, matrix: Mat },
}

impl Value {
    pub fn sites(&self) -> usize {
        match self {
            Value::Scalar(_) => 0,
            Value::Op { sites, .. } => *sites,
        }
    }

    /// Matrix form; scalars become multiples of the identity on `sites` sites.
    pub fn to_matrix(&self, dim: usize, sites: usize) -> Mat {
        match self {
            Value::Scalar(s) => identity(dim.pow(sites.max(1) as u32)) * *s,
            Value::Op { matrix, .. } => matrix.clone(),
        }
    }
}

/// Everything needed to evaluate expressions for one algebra.
pub struct EvalContext {
    pub tables: HopfTables,
    bindings: BTreeMap<Param, f64>,
    single: Images,
    coprod: OnceLock<Images>,
    antipode: OnceLock<Images>,
}

fn spec_bindings(spec: &AlgebraSpec) -> BTreeMap<Param, f64> {
    let mut b = BTreeMap::new();
    match spec.params {
        Params::B { alpha, beta } => {
            b.insert(Param::Alpha, alpha);
            b.insert(Param::Beta, beta);
        }
        Params::Bq { alpha, beta, q } => {
            b.insert(Param::Alpha, alpha);
            b.insert(Param::Beta, beta);
            b.insert(Param::Q, q);
        }
        Params::Bbar { sigma, tau } => {
            b.insert(Param::Sigma, sigma);
            b.insert(Param::Tau, tau);
        }
        Params::Bbarq { sigma, tau, q } => {
            b.insert(Param::Sigma, sigma);
            b.insert(Param::Tau, tau);
            b.insert(Param::Q, q);
        }
        Params::H { delta, nu, rho } => {
            b.insert(Param::Delta, delta);
            b.insert(Param::Nu, nu);
            b.insert(Param::Rho, rho);
        }
    }
    b
}

fn atom_allowed(atom: AtomName, family: Family) -> bool {
    use AtomName::*;
    match atom {
        I => true,
        A | Ad | N => family != Family::H,
        B | Bd | M | K => family == Family::H,
        G | Ginv => family.is_graded(),
    }
}

struct Frame<'a> {
    img: &'a Images,
    sites: usize,
    nested: bool,
}

impl EvalContext {
    pub fn new(spec: &AlgebraSpec, dim: usize) -> crate::Result<Self> {
        Ok(Self::from_tables(HopfTables::from_rep(build_rep(spec, dim)?)))
    }

    pub fn from_tables(tables: HopfTables) -> Self {
        let bindings = spec_bindings(&tables.spec);
        let single = Images::single(&tables.rep);
        EvalContext { tables, bindings, single, coprod: OnceLock::new(), antipode: OnceLock::new() }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.tables.spec
    }

    pub fn rep(&self) -> &FockRep {
        &self.tables.rep
    }

    pub fn dim(&self) -> usize {
        self.tables.rep.dim
    }

    /// Overrides or adds a parameter binding.
    pub fn bind(&mut self, p: Param, value: f64) {
        self.bindings.insert(p, value);
    }

    pub fn evaluate(&self, e: &Expr) -> EResult<Value> {
        self.eval(e, &Frame { img: &self.single, sites: 1, nested: false })
    }

    fn param(&self, p: Param) -> EResult<f64> {
        self.bindings.get(&p).copied().ok_or_else(|| EvalError::UnboundParameter(p.name().into()))
    }

    fn eval(&self, e: &Expr, fr: &Frame) -> EResult<Value> {
        Ok(match e {
            Expr::Num(v) => Value::Scalar(C64::new(*v, 0.0)),
            Expr::Imag => Value::Scalar(C64::i()),
            Expr::Param(p) => Value::Scalar(C64::new(self.param(*p)?, 0.0)),
            Expr::Atom(a) => self.atom(*a, fr)?,
            Expr::Neg(x) => match self.eval(x, fr)? {
                Value::Scalar(s) => Value::Scalar(-s),
                Value::Op { sites, matrix } => Value::Op { sites, matrix: -matrix },
            },
            Expr::Add(x, y) => self.linear(self.eval(x, fr)?, self.eval(y, fr)?, 1.0)?,
            Expr::Sub(x, y) => self.linear(self.eval(x, fr)?, self.eval(y, fr)?, -1.0)?,
            Expr::Mul(x, y) => self.mul(self.eval(x, fr)?, self.eval(y, fr)?, fr.img.reversed)?,
            Expr::Div(x, y) => match (self.eval(x, fr)?, self.eval(y, fr)?) {
                (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a / b),
                (Value::Op { sites, matrix }, Value::Scalar(b)) => Value::Op { sites, matrix: matrix / b },
                _ => return Err(EvalError::NotScalar("division".into())),
            },
            Expr::Pow(x, k) => {
                let base = self.eval(x, fr)?;
                match base {
                    Value::Scalar(s) => Value::Scalar(s.powu(*k)),
                    Value::Op { sites, ref matrix } => {
                        let mut acc = identity(matrix.nrows());
                        for _ in 0..*k {
                            acc = acc.dot(matrix);
                        }
                        Value::Op { sites, matrix: acc }
                    }
                }
            }
            Expr::Call(f, args) => self.call(*f, args, fr)?,
        })
    }

    fn atom(&self, a: AtomName, fr: &Frame) -> EResult<Value> {
        let family = self.spec().family();
        if !atom_allowed(a, family) {
            return Err(EvalError::IncompatibleAtom { atom: a.name().into(), family: format!("{family}") });
        }
        let img = fr.img;
        let m = match a {
            AtomName::A | AtomName::B => img.lower.clone(),
            AtomName::Ad | AtomName::Bd => img.raise.clone(),
            AtomName::N | AtomName::M => img.number.clone(),
            AtomName::K => img.reflection.clone().expect("H carries a reflection"),
            AtomName::G => img.grade.clone(),
            AtomName::Ginv => img.grade_inv.clone(),
            AtomName::I => img.identity.clone(),
        };
        Ok(Value::Op { sites: fr.sites, matrix: m })
    }

    fn promote(&self, s: C64, sites: usize) -> Mat {
        identity(self.dim().pow(sites as u32)) * s
    }

    fn linear(&self, x: Value, y: Value, sign: f64) -> EResult<Value> {
        Ok(match (x, y) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + b * sign),
            (Value::Op { sites, matrix }, Value::Scalar(b)) => {
                Value::Op { sites, matrix: matrix + self.promote(b * sign, sites) }
            }
            (Value::Scalar(a), Value::Op { sites, matrix }) => {
                Value::Op { sites, matrix: self.promote(a, sites) + matrix * C64::new(sign, 0.0) }
            }
            (Value::Op { sites: l, matrix: a }, Value::Op { sites: r, matrix: b }) => {
                if l != r {
                    return Err(EvalError::SiteMismatch { left: l, right: r });
                }
                Value::Op { sites: l, matrix: a + b * C64::new(sign, 0.0) }
            }
        })
    }

    fn mul(&self, x: Value, y: Value, reversed: bool) -> EResult<Value> {
        Ok(match (x, y) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a * b),
            (Value::Op { sites, matrix }, Value::Scalar(b)) | (Value::Scalar(b), Value::Op { sites, matrix }) => {
                Value::Op { sites, matrix: matrix * b }
            }
            (Value::Op { sites: l, matrix: a }, Value::Op { sites: r, matrix: b }) => {
                if l != r {
                    return Err(EvalError::SiteMismatch { left: l, right: r });
                }
                let matrix = if reversed { b.dot(&a) } else { a.dot(&b) };
                Value::Op { sites: l, matrix }
            }
        })
    }

    fn call(&self, f: Func, args: &[Expr], fr: &Frame) -> EResult<Value> {
        match f {
            Func::Comm | Func::Acomm => {
                let x = self.eval(&args[0], fr)?;
                let y = self.eval(&args[1], fr)?;
                let xy = self.mul(x.clone(), y.clone(), fr.img.reversed)?;
                let yx = self.mul(y, x, fr.img.reversed)?;
                self.linear(xy, yx, if f == Func::Comm { -1.0 } else { 1.0 })
            }
            Func::Tensor => {
                if fr.nested {
                    return Err(EvalError::Domain("tensor is not allowed inside coprod or antipode".into()));
                }
                match (self.eval(&args[0], fr)?, self.eval(&args[1], fr)?) {
                    (Value::Op { sites: l, matrix: a }, Value::Op { sites: r, matrix: b }) => {
                        Ok(Value::Op { sites: l + r, matrix: kron(&a, &b) })
                    }
                    _ => Err(EvalError::Domain("tensor needs operator arguments".into())),
                }
            }
            Func::Coprod | Func::Antipode => {
                if fr.nested || fr.sites != 1 {
                    return Err(EvalError::Domain(format!("{} cannot be nested", f.name())));
                }
                let (img, sites) = if f == Func::Coprod {
                    (self.coprod.get_or_init(|| self.tables.delta_images()), 2)
                } else {
                    (self.antipode.get_or_init(|| self.tables.antipode_images()), 1)
                };
                match self.eval(&args[0], &Frame { img, sites, nested: true })? {
                    Value::Scalar(s) => Ok(Value::Op { sites, matrix: self.promote(s, sites) }),
                    v => Ok(v),
                }
            }
            Func::QBracket => {
                let base = match self.eval(&args[1], fr)? {
                    Value::Scalar(s) if s.im == 0.0 => s.re,
                    _ => return Err(EvalError::NotScalar("qbracket base".into())),
                };
                let bracket = |x: C64| -> EResult<C64> {
                    if x.im.abs() > 1e-12 * (1.0 + x.re.abs()) {
                        return Err(EvalError::Domain("qbracket needs real arguments".into()));
                    }
                    q_bracket_checked(x.re, base).map(|v| C64::new(v, 0.0)).map_err(|e| EvalError::Domain(e.to_string()))
                };
                self.diagonal_map("qbracket", self.eval(&args[0], fr)?, bracket)
            }
            Func::Phase => {
                let v = self.eval(&args[0], fr)?;
                self.diagonal_map("phase", v, |x| {
                    if x.im.abs() > 1e-12 * (1.0 + x.re.abs()) {
                        Err(EvalError::Domain("phase needs real arguments".into()))
                    } else {
                        Ok(phase_pow(x.re))
                    }
                })
            }
            Func::QPow => {
                let q = self.param(Param::Q)?;
                let v = self.eval(&args[0], fr)?;
                self.diagonal_map("qpow", v, |x| Ok((x * q.ln()).exp()))
            }
            Func::Sqrt => match self.eval(&args[0], fr)? {
                Value::Scalar(s) => Ok(Value::Scalar(s.sqrt())),
                _ => Err(EvalError::NotScalar("sqrt".into())),
            },
        }
    }

    fn diagonal_map(&self, what: &str, v: Value, f: impl Fn(C64) -> EResult<C64>) -> EResult<Value> {
        match v {
            Value::Scalar(s) => Ok(Value::Scalar(f(s)?)),
            Value::Op { sites, matrix } => {
                let scale = matrix.iter().map(|z| z.norm()).fold(1.0, f64::max);
                if !is_diagonal(&matrix, 1e-12 * scale) {
                    return Err(EvalError::NotDiagonal(what.into()));
                }
                let d = diagonal(&matrix).into_iter().map(f).collect::<EResult<Vec<_>>>()?;
                Ok(Value::Op { sites, matrix: diag(&d) })
            }
        }
    }
}

/// Raising generators per slot, used to size the validity window.
pub fn raise_degree(e: &Expr) -> usize {
    degree_in(e, false)
}

// `Δ(K)` carries a raising factor in each slot.
fn degree_in(e: &Expr, coprod: bool) -> usize {
    let d = |x: &Expr| degree_in(x, coprod);
    match e {
        Expr::Atom(AtomName::Ad | AtomName::Bd) => 1,
        Expr::Atom(AtomName::K) if coprod => 1,
        Expr::Num(_) | Expr::Imag | Expr::Param(_) | Expr::Atom(_) => 0,
        Expr::Neg(x) | Expr::Div(x, _) => d(x),
        Expr::Add(x, y) | Expr::Sub(x, y) => d(x).max(d(y)),
        Expr::Mul(x, y) => d(x) + d(y),
        Expr::Pow(x, k) => d(x) * *k as usize,
        Expr::Call(f, args) => match f {
            Func::Comm | Func::Acomm => d(&args[0]) + d(&args[1]),
            Func::Tensor => d(&args[0]).max(d(&args[1])),
            Func::Coprod => degree_in(&args[0], true),
            Func::Antipode => d(&args[0]),
            _ => 0,
        },
    }
}

/// Top-level additive terms, looking through the linear maps `coprod` and `antipode`.
fn flatten(e: &Expr, out: &mut Vec<Expr>) {
    match e {
        Expr::Add(x, y) | Expr::Sub(x, y) => {
            flatten(x, out);
            flatten(y, out);
        }
        Expr::Neg(x) => flatten(x, out),
        Expr::Call(f @ (Func::Coprod | Func::Antipode), args) if args.len() == 1 => {
            let mut inner = Vec::new();
            flatten(&args[0], &mut inner);
            out.extend(inner.into_iter().map(|t| Expr::Call(*f, vec![t])));
        }
        _ => out.push(e.clone()),
    }
}

/// Windowed norm of an expression that should vanish, scaled by the sum of
/// the windowed norms of its additive terms.
///
/// `degree` overrides the inferred raise degree.
pub fn identity_residual(
    ctx: &EvalContext,
    e: &Expr,
    degree: Option<usize>,
) -> crate::Result<(Residual, WindowInfo)> {
    let total = ctx.evaluate(e)?;
    let sites = total.sites().max(1);
    let dim = ctx.dim();
    let degree = degree.unwrap_or_else(|| raise_degree(e)).min(dim - 1);
    let w = ValidityWindow::per_slot(dim, sites, degree)?;
    let norm_of = |m: &Mat| spectral_norm(&restrict_columns(m, &w.mask));
    let mut terms = Vec::new();
    flatten(e, &mut terms);
    let mut scale = 0.0;
    for t in &terms {
        scale += norm_of(&ctx.evaluate(t)?.to_matrix(dim, sites));
    }
    let norm = norm_of(&total.to_matrix(dim, sites));
    Ok((Residual { norm, scale }, w.info()))
}
