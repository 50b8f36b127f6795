//! Scalar kernel: q-brackets, phases of −1 and bracket factorials.
//!
//! Every non-integer power of −1 in the crate goes through [`phase_pow`],
//! which fixes the principal branch `(−1)^x = exp(iπx)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::C64;

/// A generic deformation parameter: `q > 0`, `q != 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct QValue(f64);

impl QValue {
    pub fn new(q: f64) -> Result<Self> {
        if q.is_finite() && q > 0.0 && q != 1.0 {
            Ok(QValue(q))
        } else {
            Err(Error::InvalidQ(q))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// `[x]_q = (q^x − q^{−x}) / (q − q^{−1})`.
pub fn q_bracket(x: f64, q: QValue) -> f64 {
    let q = q.0;
    (q.powf(x) - q.powf(-x)) / (q - q.recip())
}

/// Checked variant of [`q_bracket`] for raw parameters.
pub fn q_bracket_checked(x: f64, q: f64) -> Result<f64> {
    Ok(q_bracket(x, QValue::new(q)?))
}

/// `(−1)^x` on the principal branch, `exp(iπx)`.
///
/// Integer and half-integer exponents return exact values so that grade
/// operators with integral shifts square to the identity without rounding.
pub fn phase_pow(x: f64) -> C64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 {
        C64::new(1.0, 0.0)
    } else if r == 0.5 {
        C64::new(0.0, 1.0)
    } else if r == 1.0 {
        C64::new(-1.0, 0.0)
    } else if r == 1.5 {
        C64::new(0.0, -1.0)
    } else {
        C64::from_polar(1.0, PI * r)
    }
}

/// `[l]_x! = Π_{m=1..l} (x^m − x^{−m}) / (x − x^{−1})` for a complex base.
pub fn bracket_factorial(l: u32, x: C64) -> Result<C64> {
    if x.norm() == 0.0 {
        return Err(Error::DegenerateBase(format!("{x}")));
    }
    let inv = x.inv();
    let denom = x - inv;
    if denom.norm() < 1e-300 {
        return Err(Error::DegenerateBase(format!("{x}")));
    }
    let mut acc = C64::new(1.0, 0.0);
    for m in 1..=l as i32 {
        let num = x.powi(m) - inv.powi(m);
        acc *= num / denom;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn bracket_examples() {
        let q = QValue::new(2.0).unwrap();
        assert_eq!(q_bracket(0.0, q), 0.0);
        assert!((q_bracket(1.0, q) - 1.0).abs() < 1e-15);
        // (8 - 1/8) / (2 - 1/2)
        assert!((q_bracket(3.0, q) - 5.25).abs() < 1e-14);
    }

    #[test]
    fn invalid_q_rejected() {
        assert_eq!(QValue::new(1.0), Err(Error::InvalidQ(1.0)));
        assert!(QValue::new(0.0).is_err());
        assert!(QValue::new(-2.0).is_err());
        assert!(q_bracket_checked(1.0, f64::NAN).is_err());
    }

    #[test]
    fn phase_examples() {
        assert_eq!(phase_pow(1.0), C64::new(-1.0, 0.0));
        assert_eq!(phase_pow(0.5), C64::new(0.0, 1.0));
        assert_eq!(phase_pow(-0.5), C64::new(0.0, -1.0));
        assert_eq!(phase_pow(-3.0), C64::new(-1.0, 0.0));
        assert!(close(phase_pow(0.25), C64::from_polar(1.0, PI / 4.0), 1e-15));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(bracket_factorial(0, C64::new(3.0, 0.0)).unwrap(), C64::new(1.0, 0.0));
        // [1]_x [2]_x = x + 1/x at x = 2
        let f = bracket_factorial(2, C64::new(2.0, 0.0)).unwrap();
        assert!(close(f, C64::new(2.5, 0.0), 1e-14));
        // x = i/2: x + 1/x = i/2 - 2i
        let f = bracket_factorial(2, C64::new(0.0, 0.5)).unwrap();
        assert!(close(f, C64::new(0.0, -1.5), 1e-14));
    }

    #[test]
    fn factorial_rejects_degenerate_bases() {
        assert!(bracket_factorial(3, C64::new(1.0, 0.0)).is_err());
        assert!(bracket_factorial(3, C64::new(-1.0, 0.0)).is_err());
        assert!(bracket_factorial(1, C64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn classical_limit_of_bracket() {
        let q = QValue::new(1.0001).unwrap();
        for x in 1..=10 {
            assert!((q_bracket(x as f64, q) - x as f64).abs() < 1e-3);
        }
    }

    proptest! {
        #[test]
        fn bracket_is_odd_and_inversion_symmetric(x in -20.0f64..20.0, q in 0.2f64..3.0) {
            prop_assume!((q - 1.0).abs() > 1e-3);
            let qv = QValue::new(q).unwrap();
            let qi = QValue::new(q.recip()).unwrap();
            let b = q_bracket(x, qv);
            prop_assert!((q_bracket(-x, qv) + b).abs() <= 1e-9 * b.abs().max(1.0));
            prop_assert!((q_bracket(x, qi) - b).abs() <= 1e-9 * b.abs().max(1.0));
        }

        #[test]
        fn phase_is_multiplicative(x in -50.0f64..50.0, y in -50.0f64..50.0) {
            let lhs = phase_pow(x) * phase_pow(y);
            prop_assert!((lhs - phase_pow(x + y)).norm() < 1e-12);
            prop_assert!((phase_pow(x) * phase_pow(-x) - C64::new(1.0, 0.0)).norm() < 1e-12);
        }

        #[test]
        fn factorial_recurrence(l in 0u32..12, re in -3.0f64..3.0, im in -3.0f64..3.0) {
            let x = C64::new(re, im);
            prop_assume!(x.norm() > 0.1 && (x - x.inv()).norm() > 0.1);
            let f = bracket_factorial(l, x).unwrap();
            let g = bracket_factorial(l + 1, x).unwrap();
            let k = l as i32 + 1;
            let step = (x.powi(k) - x.inv().powi(k)) / (x - x.inv());
            prop_assert!((g - f * step).norm() <= 1e-9 * g.norm().max(1.0));
        }
    }
}
