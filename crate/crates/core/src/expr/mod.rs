//! A small expression language for algebra elements.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' INT)*
//! primary := NUMBER | IDENT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'
//! ```
//!
//! Atoms: `a ad N b bd K M g ginv I`. Parameters: `alpha beta sigma tau delta
//! nu rho q`, plus the imaginary unit `i`. Functions: `comm acomm tensor
//! qbracket phase qpow sqrt coprod antipode`.

mod corpus;
mod eval;
mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use corpus::{corpus, run_corpus, CorpusEntry, CORPUS_TEXT};
pub use eval::{identity_residual, raise_degree, EvalContext, Value};
pub use parse::parse;

/// Bumped whenever the accepted grammar changes.
pub const GRAMMAR_VERSION: &str = "1.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AtomName {
    A,
    Ad,
    N,
    B,
    Bd,
    K,
    M,
    G,
    Ginv,
    I,
}

impl AtomName {
    pub const ALL: [AtomName; 10] = [
        AtomName::A,
        AtomName::Ad,
        AtomName::N,
        AtomName::B,
        AtomName::Bd,
        AtomName::K,
        AtomName::M,
        AtomName::G,
        AtomName::Ginv,
        AtomName::I,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AtomName::A => "a",
            AtomName::Ad => "ad",
            AtomName::N => "N",
            AtomName::B => "b",
            AtomName::Bd => "bd",
            AtomName::K => "K",
            AtomName::M => "M",
            AtomName::G => "g",
            AtomName::Ginv => "ginv",
            AtomName::I => "I",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    Alpha,
    Beta,
    Sigma,
    Tau,
    Delta,
    Nu,
    Rho,
    Q,
}

impl Param {
    pub const ALL: [Param; 8] =
        [Param::Alpha, Param::Beta, Param::Sigma, Param::Tau, Param::Delta, Param::Nu, Param::Rho, Param::Q];

    pub fn name(self) -> &'static str {
        match self {
            Param::Alpha => "alpha",
            Param::Beta => "beta",
            Param::Sigma => "sigma",
            Param::Tau => "tau",
            Param::Delta => "delta",
            Param::Nu => "nu",
            Param::Rho => "rho",
            Param::Q => "q",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Func {
    Comm,
    Acomm,
    Tensor,
    QBracket,
    Phase,
    QPow,
    Sqrt,
    Coprod,
    Antipode,
}

impl Func {
    pub const ALL: [Func; 9] = [
        Func::Comm,
        Func::Acomm,
        Func::Tensor,
        Func::QBracket,
        Func::Phase,
        Func::QPow,
        Func::Sqrt,
        Func::Coprod,
        Func::Antipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Comm => "comm",
            Func::Acomm => "acomm",
            Func::Tensor => "tensor",
            Func::QBracket => "qbracket",
            Func::Phase => "phase",
            Func::QPow => "qpow",
            Func::Sqrt => "sqrt",
            Func::Coprod => "coprod",
            Func::Antipode => "antipode",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Comm | Func::Acomm | Func::Tensor | Func::QBracket => 2,
            _ => 1,
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Expr {
    Num(f64),
    Imag,
    Param(Param),
    Atom(AtomName),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Func, Vec<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// True when the tree contains no generator atoms.
    pub fn is_scalar(&self) -> bool {
        match self {
            Expr::Num(_) | Expr::Imag | Expr::Param(_) => true,
            Expr::Atom(_) => false,
            Expr::Neg(x) | Expr::Pow(x, _) => x.is_scalar(),
            Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div(x, y) => x.is_scalar() && y.is_scalar(),
            Expr::Call(f, args) => !matches!(f, Func::Tensor | Func::Coprod | Func::Antipode) && args.iter().all(Expr::is_scalar),
        }
    }
}

struct Wrapped<'a>(&'a Expr, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.prec();
        let bin = |f: &mut fmt::Formatter<'_>, x: &Expr, op: &str, y: &Expr| {
            write!(f, "{}{op}{}", Wrapped(x, x.prec() < p), Wrapped(y, y.prec() <= p))
        };
        match self {
            Expr::Num(v) => {
                if *v < 0.0 || v.is_sign_negative() {
                    write!(f, "({v})")
                } else {
                    write!(f, "{v}")
                }
            }
            Expr::Imag => f.write_str("i"),
            Expr::Param(q) => f.write_str(q.name()),
            Expr::Atom(a) => f.write_str(a.name()),
            Expr::Neg(x) => write!(f, "-{}", Wrapped(x, x.prec() < p)),
            Expr::Add(x, y) => bin(f, x, " + ", y),
            Expr::Sub(x, y) => bin(f, x, " - ", y),
            Expr::Mul(x, y) => bin(f, x, "*", y),
            Expr::Div(x, y) => bin(f, x, "/", y),
            Expr::Pow(x, k) => write!(f, "{}^{k}", Wrapped(x, x.prec() < p)),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{line}:{col}: {message}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected one of: {})", expected.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("parameter `{0}` is not bound for this algebra")]
    UnboundParameter(String),
    #[error("atom `{atom}` does not belong to the {family} family")]
    IncompatibleAtom { atom: String, family: String },
    #[error("operands act on {left} and {right} sites")]
    SiteMismatch { left: usize, right: usize },
    #[error("{0} needs a scalar argument")]
    NotScalar(String),
    #[error("{0} needs a diagonal argument")]
    NotDiagonal(String),
    #[error("{0}")]
    Domain(String),
}

#[cfg(test)]
mod tests;
