use proptest::prelude::*;

use super::*;
use crate::fock::AlgebraSpec;
use crate::linalg::{diagonal, is_diagonal};

fn ctx(spec: AlgebraSpec, dim: usize) -> EvalContext {
    EvalContext::new(&spec, dim).unwrap()
}

#[test]
fn precedence_and_printing() {
    let e = parse("a + ad*N^2 - -b").unwrap();
    assert_eq!(e.to_string(), "a + ad*N^2 - -b");
    let e = parse("(a - b) - (c0)").err().unwrap();
    assert_eq!((e.line, e.col), (1, 12));
    assert_eq!(parse("a - (b - I)").unwrap().to_string(), "a - (b - I)");
    assert_eq!(parse("(-a)^2").unwrap().to_string(), "(-a)^2");
}

#[test]
fn parse_errors_carry_position() {
    let e = parse("a +\n  * b").unwrap_err();
    assert_eq!((e.line, e.col), (2, 3));
    assert!(e.expected.iter().any(|s| s == "identifier"));

    let e = parse("a^-1").unwrap_err();
    assert_eq!((e.line, e.col), (1, 3));
    assert!(e.message.contains("negative"));
    assert!(parse("a^1.5").unwrap_err().message.contains("non-negative integer"));
    assert!(parse("comm(a)").unwrap_err().message.contains("takes 2"));
    assert!(parse("foo(a)").unwrap_err().message.contains("unknown function"));
    assert!(parse("a + x").unwrap_err().message.contains("unknown identifier"));
    assert!(parse("(a").is_err());
    assert!(parse("a b").is_err());
}

#[test]
fn example_relations_vanish() {
    let c = ctx(AlgebraSpec::b(2.0, 1.0).unwrap(), 16);
    let (res, _) = identity_residual(&c, &parse("acomm(a, ad) - (alpha*N + beta*I)").unwrap(), None).unwrap();
    assert!(res.norm < 1e-10, "{res:?}");

    let c = ctx(AlgebraSpec::h(1.0, 2.0, 0.0).unwrap(), 16);
    let (res, _) = identity_residual(&c, &parse("comm(b, bd) - (delta*I + nu*K)").unwrap(), None).unwrap();
    assert!(res.norm < 1e-10, "{res:?}");
}

#[test]
fn qbracket_is_diagonal() {
    let c = ctx(AlgebraSpec::bq(2.0, 1.0, 1.3).unwrap(), 6);
    let Value::Op { matrix, .. } = c.evaluate(&parse("qbracket(alpha*N + beta*I, q)").unwrap()).unwrap() else {
        panic!("operator expected")
    };
    assert!(is_diagonal(&matrix, 0.0));
    let q: f64 = 1.3;
    let expect = (q.powi(5) - q.powi(-5)) / (q - 1.0 / q);
    assert!((diagonal(&matrix)[2].re - expect).abs() < 1e-12);
}

#[test]
fn evaluation_errors() {
    let c = ctx(AlgebraSpec::b(2.0, 1.0).unwrap(), 4);
    let err = |s: &str| c.evaluate(&parse(s).unwrap()).unwrap_err();
    assert!(matches!(err("sigma*a"), EvalError::UnboundParameter(p) if p == "sigma"));
    assert!(matches!(err("b + a"), EvalError::IncompatibleAtom { .. }));
    assert!(matches!(err("a + tensor(a, a)"), EvalError::SiteMismatch { left: 1, right: 2 }));
    assert!(matches!(err("qbracket(a, 2)"), EvalError::NotDiagonal(_)));
    assert!(matches!(err("a/ad"), EvalError::NotScalar(_)));
    assert!(matches!(err("coprod(coprod(a))"), EvalError::Domain(_)));

    let bbar = ctx(AlgebraSpec::bbar(1.0, 0.0).unwrap(), 4);
    assert!(bbar.evaluate(&parse("g").unwrap()).is_err());
}

#[test]
fn raise_degree_inference() {
    let d = |s: &str| raise_degree(&parse(s).unwrap());
    assert_eq!(d("a*N"), 0);
    assert_eq!(d("ad^2*a + a"), 2);
    assert_eq!(d("comm(ad, ad) - coprod(ad)"), 2);
    assert_eq!(d("tensor(ad, ad*ad)"), 2);
}

#[test]
fn corpus_parses_and_covers_every_family() {
    let entries = corpus().unwrap();
    for f in crate::fock::Family::ALL {
        assert!(entries.iter().filter(|e| e.family == f).count() >= 5, "{f}");
    }
    for e in &entries {
        assert_eq!(parse(&e.expr.to_string()).unwrap(), e.expr, "line {}", e.line);
    }
}

#[test]
fn corpus_vanishes_at_small_dim() {
    let entries = corpus().unwrap();
    let specs = [
        AlgebraSpec::b(2.0, 1.0).unwrap(),
        AlgebraSpec::bq(1.0, 3.0, 0.7).unwrap(),
        AlgebraSpec::bbar(2.0, 1.0).unwrap(),
        AlgebraSpec::bbarq(1.0, 2.0, 1.3).unwrap(),
        AlgebraSpec::h(0.5, 1.0, 0.25).unwrap(),
    ];
    let mut bad = Vec::new();
    for s in specs {
        for r in run_corpus(&ctx(s, 7), &entries, 1e-10) {
            if !r.passed() {
                bad.push(format!("{} {} {:?} {}", s, r.target, r.note, r.residual));
            }
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0u32..1000, 0u32..4).prop_map(|(m, e)| Expr::Num(m as f64 / 10f64.powi(e as i32))),
        Just(Expr::Imag),
        proptest::sample::select(Param::ALL.to_vec()).prop_map(Expr::Param),
        proptest::sample::select(AtomName::ALL.to_vec()).prop_map(Expr::Atom),
    ]
}

fn tree() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(6, 64, 3, |inner| {
        let b = |x: Expr| Box::new(x);
        prop_oneof![
            inner.clone().prop_map(move |x| Expr::Neg(b(x))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Div(b(x), b(y))),
            (inner.clone(), 0u32..5).prop_map(move |(x, k)| Expr::Pow(b(x), k)),
            (proptest::sample::select(Func::ALL.to_vec()), proptest::collection::vec(inner, 2)).prop_map(
                |(f, mut args)| {
                    args.truncate(f.arity());
                    Expr::Call(f, args)
                }
            ),
        ]
    })
}

fn b_operator() -> impl Strategy<Value = String> {
    let atom = proptest::sample::select(vec!["a", "ad", "N", "g", "I", "alpha", "beta"]);
    proptest::collection::vec((atom, proptest::sample::select(vec!["+", "-", "*"])), 1..6).prop_map(|v| {
        let mut s = String::from("I");
        for (a, op) in v {
            s.push_str(op);
            s.push_str(a);
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_round_trip(e in tree()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e, "{}", printed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_additive(x in b_operator(), y in b_operator()) {
        let c = ctx(AlgebraSpec::b(2.0, 1.0).unwrap(), 5);
        let sum = c.evaluate(&parse(&format!("({x}) + ({y})")).unwrap()).unwrap().to_matrix(5, 1);
        let sep = c.evaluate(&parse(&x).unwrap()).unwrap().to_matrix(5, 1)
            + c.evaluate(&parse(&y).unwrap()).unwrap().to_matrix(5, 1);
        prop_assert!(crate::linalg::frobenius(&(sum - sep)) < 1e-9);
    }
}
