//! Relations and Hopf axioms at random parameter points away from the standard grid.

use boson_hopf::fock::{build_rep, check_defining_relations, check_q_continuity};
use boson_hopf::hopf::{build_hopf, check_delta_homomorphism, check_hopf};
use boson_hopf::{AlgebraSpec, CheckReport};
use proptest::prelude::*;

fn failures(reports: &[CheckReport]) -> Vec<String> {
    reports.iter().filter(|r| !r.passed()).map(|r| format!("{} {:.3e}", r.label(), r.residual)).collect()
}

fn spec() -> impl Strategy<Value = AlgebraSpec> {
    prop_oneof![
        (0.5f64..4.0, 0.1f64..4.0).prop_map(|(a, b)| AlgebraSpec::b(a, b).unwrap()),
        (0.5f64..3.0, 0.1f64..3.0, 0.75f64..1.3).prop_map(|(a, b, q)| AlgebraSpec::bq(a, b, q).unwrap()),
        (0.5f64..3.0, 0.0f64..3.0).prop_map(|(s, t)| AlgebraSpec::bbar(s, t).unwrap()),
        (0.5f64..2.0, 0.0f64..2.0, 0.8f64..1.25).prop_map(|(s, t, q)| AlgebraSpec::bbarq(s, t, q).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relations_hold(s in spec()) {
        let bad = failures(&check_defining_relations(&build_rep(&s, 12).unwrap(), 1e-10));
        prop_assert!(bad.is_empty(), "{}", bad.join("\n"));
    }

    #[test]
    fn hopf_axioms_hold(s in spec()) {
        let t = build_hopf(&s, 6).unwrap();
        let mut reports = check_hopf(&t, 1e-10);
        reports.extend(check_delta_homomorphism(&t, 1e-10));
        let bad = failures(&reports);
        prop_assert!(bad.is_empty(), "{}", bad.join("\n"));
    }

    #[test]
    fn deformed_weights_are_continuous(a in 0.5f64..3.0, b in 0.1f64..3.0) {
        let s = AlgebraSpec::bq(a, b, 1.3).unwrap();
        let r = check_q_continuity(&s, 1.0001, 10, 1e-2).unwrap();
        prop_assert!(r.passed(), "{}", r.residual);
    }
}
