//! Exact scalar arithmetic: rationals, the field ℚ(i, √2), polynomials and
//! rational functions on coordinate charts.

mod chart;
mod expr;
mod number;
mod poly;
mod rational;

pub use chart::{same_chart, Chart, ChartKind, ChartRef, MAX_SLOTS};
pub use expr::{norm_poly, slot_values, ScalarExpr};
pub use number::CoeffNumber;
pub use poly::{Monomial, Poly};
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("chart mismatch: {left} vs {right}")]
    ChartMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0:?} is not a variable of the chart")]
    NotAVariable(String),
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("norm at the evaluation point is not the square of a rational")]
    NormNotSquare,
    #[error("point has {got} coordinates, chart expects {expected}")]
    PointArity { expected: usize, got: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> ChartRef {
        Chart::complex_n("C2", 2, true).unwrap()
    }

    fn v(chart: &ChartRef, name: &str) -> ScalarExpr {
        ScalarExpr::var(chart, name).unwrap()
    }

    fn f_of(chart: &ChartRef) -> ScalarExpr {
        (1..=chart.complex_dim())
            .map(|j| v(chart, &format!("z{j}")).pow(2))
            .fold(ScalarExpr::zero(chart), |a, b| &a + &b)
    }

    #[test]
    fn difference_of_squares() {
        let ch = c2();
        let (z, zb) = (v(&ch, "z1"), v(&ch, "zb1"));
        let lhs = &(&z + &zb) * &(&z - &zb);
        let rhs = &z.pow(2) - &zb.pow(2);
        assert!(lhs.is_polynomial());
        assert_eq!(lhs.numerator(), rhs.numerator());
    }

    #[test]
    fn rho_squared_is_norm() {
        let ch = c2();
        let rho = ScalarExpr::rho(&ch).unwrap();
        let sq = &rho * &rho;
        assert_eq!(sq.numerator(), &norm_poly(&ch));
    }

    #[test]
    fn rationalised_inverse_of_one_plus_rho() {
        let ch = c2();
        let one = ScalarExpr::one(&ch);
        let rho = ScalarExpr::rho(&ch).unwrap();
        let inv = (&one + &rho).inv().unwrap();
        // oracle: multiply by the conjugate (1 − rho) and reduce
        let expected = &(&one - &rho) / &(&one - &ScalarExpr::norm_squared(&ch));
        assert_eq!(inv, expected);
        // radical-free denominator, radical degree ≤ 1 numerator
        assert!(inv.denominator_factors().iter().all(|(b, _)| b.degree_in(4) == 0));
        assert!(inv.numerator().degree_in(4) <= 1);
        // re-multiplying recovers one
        assert_eq!(&inv * &(&one + &rho), one);
    }

    #[test]
    fn conjugation_examples() {
        let ch = c2();
        let iz = v(&ch, "z1").scale(&CoeffNumber::i());
        let expected = v(&ch, "zb1").scale(&-CoeffNumber::i());
        assert_eq!(iz.conjugate(), expected);
        let f = f_of(&ch);
        let fb = &v(&ch, "zb1").pow(2) + &v(&ch, "zb2").pow(2);
        assert_eq!(f.conjugate(), fb);
        let rho = ScalarExpr::rho(&ch).unwrap();
        assert_eq!(rho.conjugate(), rho);
    }

    #[test]
    fn derivative_of_rho() {
        let ch = c2();
        let rho = ScalarExpr::rho(&ch).unwrap();
        let d = rho.partial_derivative("z1").unwrap();
        let expected = &v(&ch, "zb1") / &rho.scale_int(2);
        assert_eq!(d, expected);
        assert!(matches!(rho.partial_derivative("rho"), Err(CoeffError::NotAVariable(_))));
    }

    #[test]
    fn quotient_rule_for_f_over_rho() {
        let ch = c2();
        let rho = ScalarExpr::rho(&ch).unwrap();
        let f = f_of(&ch);
        let d = (&f / &rho).partial_derivative("z1").unwrap();
        // oracle: (2 z1 rho − f zb1/(2 rho)) / rho²
        let z1 = v(&ch, "z1");
        let zb1 = v(&ch, "zb1");
        let top = &(&z1.scale_int(2) * &rho) - &(&(&f * &zb1) / &rho.scale_int(2));
        let expected = &top / &(&rho * &rho);
        assert_eq!(d, expected);
        // multiply back: d·rho² recovers the quotient-rule numerator
        assert_eq!(&d * &(&rho * &rho), top);
    }

    #[test]
    fn derivative_of_independent_variable() {
        let ch = c2();
        let d = v(&ch, "z2").pow(2).partial_derivative("z1").unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let ch = c2();
        let p = [CoeffNumber::frac(3, 5), CoeffNumber::gaussian(Rational::zero(), Rational::new(4, 5))];
        assert_eq!(f_of(&ch).evaluate(&p).unwrap(), CoeffNumber::frac(-7, 25));
        assert_eq!(ScalarExpr::rho(&ch).unwrap().evaluate(&p).unwrap(), CoeffNumber::one());
        let c3 = Chart::complex_n("C3", 3, true).unwrap();
        let e1 = [CoeffNumber::one(), CoeffNumber::zero(), CoeffNumber::zero()];
        assert_eq!(f_of(&c3).evaluate(&e1).unwrap(), CoeffNumber::one());
    }

    #[test]
    fn evaluation_errors() {
        let ch = c2();
        let rho = ScalarExpr::rho(&ch).unwrap();
        let not_square = [CoeffNumber::one(), CoeffNumber::one()];
        assert_eq!(rho.evaluate(&not_square), Err(CoeffError::NormNotSquare));
        let inv_z = ScalarExpr::one(&ch) / v(&ch, "z1");
        let p = [CoeffNumber::zero(), CoeffNumber::one()];
        assert_eq!(inv_z.evaluate(&p), Err(CoeffError::DenominatorVanishes));
    }

    #[test]
    fn chart_mismatch_and_zero_division() {
        let a = ScalarExpr::one(&c2());
        let b = ScalarExpr::one(&Chart::complex_n("C3", 3, true).unwrap());
        assert!(matches!(a.try_add(&b), Err(CoeffError::ChartMismatch { .. })));
        assert_eq!(a.try_div(&ScalarExpr::zero(&c2())).unwrap_err(), CoeffError::DivisionByZero);
    }
}
