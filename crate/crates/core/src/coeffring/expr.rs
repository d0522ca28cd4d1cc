//! Rational functions on a chart, with the radical `rho` adjoined.
//!
//! A [`ScalarExpr`] is `numerator / Π baseᵢ^eᵢ`. The numerator has radical
//! degree at most one; every base is a monic, radical-free, nonconstant
//! polynomial. Keeping the denominator factored lets common factors be
//! cancelled by trial division instead of a full multivariate gcd.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::chart::{same_chart, ChartKind, ChartRef};
use super::number::CoeffNumber;
use super::poly::{Monomial, Poly};
use super::rational::Rational;
use super::CoeffError;

#[derive(Clone)]
pub struct ScalarExpr {
    chart: ChartRef,
    num: Poly,
    den: Vec<(Poly, u32)>,
}

/// `Σ z_j·zb_j` on a complex chart, as a polynomial.
pub fn norm_poly(chart: &ChartRef) -> Poly {
    let mut p = Poly::zero();
    for j in 0..chart.complex_dim() {
        p.add_term(Monomial::var(2 * j).mul(&Monomial::var(2 * j + 1)), &CoeffNumber::one());
    }
    p
}

impl ScalarExpr {
    pub fn zero(chart: &ChartRef) -> Self {
        Self::from_poly(chart, Poly::zero())
    }

    pub fn one(chart: &ChartRef) -> Self {
        Self::constant(chart, CoeffNumber::one())
    }

    pub fn constant(chart: &ChartRef, c: CoeffNumber) -> Self {
        Self::from_poly(chart, Poly::constant(c))
    }

    pub fn int(chart: &ChartRef, v: i64) -> Self {
        Self::constant(chart, CoeffNumber::int(v))
    }

    pub fn from_poly(chart: &ChartRef, num: Poly) -> Self {
        ScalarExpr {
            chart: chart.clone(),
            num,
            den: Vec::new(),
        }
    }

    /// The chart variable called `name`.
    pub fn var(chart: &ChartRef, name: &str) -> Result<Self, CoeffError> {
        let idx = chart
            .index_of(name)
            .ok_or_else(|| CoeffError::NotAVariable(name.to_string()))?;
        Ok(Self::var_at(chart, idx))
    }

    pub fn var_at(chart: &ChartRef, idx: usize) -> Self {
        Self::from_poly(chart, Poly::var(idx))
    }

    /// The radical `rho`; fails on charts without one.
    pub fn rho(chart: &ChartRef) -> Result<Self, CoeffError> {
        let slot = chart
            .radical_slot()
            .ok_or_else(|| CoeffError::NotAVariable("rho".into()))?;
        Ok(Self::from_poly(chart, Poly::var(slot)))
    }

    /// `Σ z_j·zb_j` as an expression.
    pub fn norm_squared(chart: &ChartRef) -> Self {
        Self::from_poly(chart, norm_poly(chart))
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// Denominator as a list of monic, radical-free bases with multiplicities.
    pub fn denominator_factors(&self) -> &[(Poly, u32)] {
        &self.den
    }

    /// Expanded denominator (monic, radical-free).
    pub fn denominator(&self) -> Poly {
        let mut d = Poly::one();
        for (b, e) in &self.den {
            d = d.mul(&b.pow(*e));
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the expression is a polynomial (trivial denominator).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_constant(&self) -> Option<CoeffNumber> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn radical(&self) -> Option<(usize, Poly)> {
        self.chart.radical_slot().map(|s| (s, norm_poly(&self.chart)))
    }

    fn check_chart(&self, other: &ScalarExpr) -> Result<(), CoeffError> {
        if same_chart(&self.chart, &other.chart) {
            Ok(())
        } else {
            Err(CoeffError::ChartMismatch {
                left: self.chart.name().to_string(),
                right: other.chart.name().to_string(),
            })
        }
    }

    fn mul_num(&self, a: &Poly, b: &Poly) -> Poly {
        match self.radical() {
            Some((slot, norm)) => a.mul_reduced(b, Some((slot, &norm))),
            None => a.mul(b),
        }
    }

    /// Divide a (possibly radical-carrying) numerator by a radical-free base.
    fn div_num(&self, p: &Poly, base: &Poly) -> Option<Poly> {
        match self.chart.radical_slot() {
            Some(slot) if p.degree_in(slot) > 0 => {
                let (a, b) = p.split_linear(slot);
                let qa = a.div_exact(base)?;
                let qb = b.div_exact(base)?;
                Some(qa.add(&qb.mul(&Poly::var(slot))))
            }
            _ => p.div_exact(base),
        }
    }

    /// Cancel denominator bases that divide the numerator.
    fn cancel(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut den = std::mem::take(&mut self.den);
        for (base, e) in den.iter_mut() {
            while *e > 0 {
                match self.div_num(&self.num, base) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|(_, e)| *e > 0);
        self.den = den;
        self
    }

    pub fn try_add(&self, other: &ScalarExpr) -> Result<ScalarExpr, CoeffError> {
        self.check_chart(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn try_sub(&self, other: &ScalarExpr) -> Result<ScalarExpr, CoeffError> {
        self.check_chart(other)?;
        Ok(self.add_unchecked(other, true))
    }

    fn add_unchecked(&self, other: &ScalarExpr, negate: bool) -> ScalarExpr {
        let rhs_num = |p: &Poly| if negate { p.neg() } else { p.clone() };
        if other.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return ScalarExpr {
                chart: self.chart.clone(),
                num: rhs_num(&other.num),
                den: other.den.clone(),
            };
        }
        if self.den == other.den {
            let s = ScalarExpr {
                chart: self.chart.clone(),
                num: self.num.add(&rhs_num(&other.num)),
                den: self.den.clone(),
            };
            return s.cancel();
        }
        // Least common multiple of the two factor lists.
        let mut lcm: Vec<(Poly, u32)> = self.den.clone();
        for (b, e) in &other.den {
            match lcm.iter_mut().find(|(q, _)| q == b) {
                Some((_, f)) => *f = (*f).max(*e),
                None => lcm.push((b.clone(), *e)),
            }
        }
        let lift = |x: &ScalarExpr| -> Poly {
            let mut p = x.num.clone();
            for (b, e) in &lcm {
                let have = x.den.iter().find(|(q, _)| q == b).map_or(0, |(_, f)| *f);
                if *e > have {
                    p = p.mul(&b.pow(*e - have));
                }
            }
            p
        };
        let num = lift(self).add(&rhs_num(&lift(other)));
        ScalarExpr {
            chart: self.chart.clone(),
            num,
            den: lcm,
        }
        .cancel()
    }

    pub fn try_mul(&self, other: &ScalarExpr) -> Result<ScalarExpr, CoeffError> {
        self.check_chart(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &ScalarExpr) -> ScalarExpr {
        if self.num.is_zero() || other.num.is_zero() {
            return ScalarExpr::zero(&self.chart);
        }
        let num = self.mul_num(&self.num, &other.num);
        let mut den = self.den.clone();
        for (b, e) in &other.den {
            match den.iter_mut().find(|(q, _)| q == b) {
                Some((_, f)) => *f += *e,
                None => den.push((b.clone(), *e)),
            }
        }
        ScalarExpr {
            chart: self.chart.clone(),
            num,
            den,
        }
        .cancel()
    }

    pub fn scale(&self, c: &CoeffNumber) -> ScalarExpr {
        ScalarExpr {
            chart: self.chart.clone(),
            num: self.num.scale(c),
            den: if c.is_zero() { Vec::new() } else { self.den.clone() },
        }
    }

    pub fn scale_int(&self, v: i64) -> ScalarExpr {
        self.scale(&CoeffNumber::int(v))
    }

    /// Multiplicative inverse. Radicals are cleared from the new denominator
    /// with the conjugate `a − b·rho`.
    pub fn inv(&self) -> Result<ScalarExpr, CoeffError> {
        if self.num.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let (partner, base) = match self.radical() {
            Some((slot, norm)) if self.num.degree_in(slot) > 0 => {
                let (a, b) = self.num.split_linear(slot);
                let partner = a.sub(&b.mul(&Poly::var(slot)));
                let base = a.mul(&a).sub(&b.mul(&b).mul(&norm));
                (partner, base)
            }
            _ => (Poly::one(), self.num.clone()),
        };
        if base.is_zero() {
            // a² = b²·N would make rho rational, which never happens for a
            // nonzero numerator; kept as an explicit error.
            return Err(CoeffError::DivisionByZero);
        }
        let mut num = self.mul_num(&partner, &self.denominator());
        let (mut base, lc) = base.make_monic();
        num = num.scale(&lc.inv().expect("nonzero"));

        // Split the new base along known factors so bases stay small and shared.
        let mut candidates: Vec<Poly> = self.den.iter().map(|(b, _)| b.clone()).collect();
        if self.chart.has_radical() {
            candidates.push(norm_poly(&self.chart));
        }
        let mut den: Vec<(Poly, u32)> = Vec::new();
        for q in candidates {
            if q.total_degree() == 0 {
                continue;
            }
            let mut e = 0;
            while base.total_degree() > 0 {
                match base.div_exact(&q) {
                    Some(r) => {
                        base = r;
                        e += 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                den.push((q, e));
            }
        }
        match base.as_constant() {
            Some(c) => num = num.scale(&c.inv().expect("nonzero")),
            None => match den.iter_mut().find(|(q, _)| *q == base) {
                Some((_, e)) => *e += 1,
                None => den.push((base, 1)),
            },
        }
        Ok(ScalarExpr {
            chart: self.chart.clone(),
            num,
            den,
        }
        .cancel())
    }

    pub fn try_div(&self, other: &ScalarExpr) -> Result<ScalarExpr, CoeffError> {
        self.check_chart(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> ScalarExpr {
        let mut out = ScalarExpr::one(&self.chart);
        for _ in 0..e {
            out = out.mul_unchecked(self);
        }
        out
    }

    /// Formal conjugation: `z_j ↔ zb_j`, coefficients conjugated, `rho` and
    /// real variables fixed.
    pub fn conjugate(&self) -> ScalarExpr {
        let slots = self.chart.num_slots();
        let perm: Vec<usize> = (0..slots)
            .map(|k| if Some(k) == self.chart.radical_slot() { k } else { self.chart.conj_index(k) })
            .collect();
        let mut num = self.num.map_terms(&perm, CoeffNumber::conj);
        let mut den = Vec::with_capacity(self.den.len());
        for (b, e) in &self.den {
            let (monic, lc) = b.map_terms(&perm, CoeffNumber::conj).make_monic();
            let inv = lc.inv().expect("nonzero");
            for _ in 0..*e {
                num = num.scale(&inv);
            }
            den.push((monic, *e));
        }
        ScalarExpr {
            chart: self.chart.clone(),
            num,
            den,
        }
    }

    /// Partial derivative along a chart variable; `rho` depends on the
    /// complex coordinates through `∂rho/∂z_j = zb_j / (2·rho)`.
    pub fn partial_derivative(&self, var: &str) -> Result<ScalarExpr, CoeffError> {
        let idx = self
            .chart
            .index_of(var)
            .ok_or_else(|| CoeffError::NotAVariable(var.to_string()))?;
        Ok(self.partial_at(idx))
    }

    pub fn partial_at(&self, idx: usize) -> ScalarExpr {
        let chart = &self.chart;
        let recip_den = ScalarExpr::one(chart).with_den(&self.den);
        // d(num)/den − (num/den)·Σ e·b'/b
        let mut out = self.poly_derivative(&self.num, idx).mul_unchecked(&recip_den);
        for (b, e) in &self.den {
            let db = b.partial(idx);
            if db.is_zero() {
                continue;
            }
            let ratio = ScalarExpr::from_poly(chart, db.scale_rational(&Rational::from(i64::from(*e))))
                .with_den(&[(b.clone(), 1)]);
            out = out.add_unchecked(&self.mul_unchecked(&ratio), true);
        }
        out
    }

    /// Derivative of a numerator polynomial, including the radical's chain rule.
    fn poly_derivative(&self, p: &Poly, idx: usize) -> ScalarExpr {
        let chart = &self.chart;
        match chart.radical_slot() {
            Some(slot) if p.degree_in(slot) > 0 => {
                let (a, b) = p.split_linear(slot);
                let rho = Poly::var(slot);
                let explicit = ScalarExpr::from_poly(chart, a.partial(idx).add(&self.mul_num(&b.partial(idx), &rho)));
                // b · ∂rho/∂v = b · conj(v) · rho / (2N)
                let conj = Poly::var(chart.conj_index(idx));
                let top = self
                    .mul_num(&b.mul(&conj), &rho)
                    .scale(&CoeffNumber::frac(1, 2));
                let implicit = ScalarExpr::from_poly(chart, top).with_den(&[(norm_poly(chart), 1)]);
                explicit.add_unchecked(&implicit.cancel(), false)
            }
            _ => ScalarExpr::from_poly(chart, p.partial(idx)),
        }
    }

    fn with_den(mut self, den: &[(Poly, u32)]) -> ScalarExpr {
        self.den = den.to_vec();
        self
    }

    /// Exact value at a point. Complex charts take one value per holomorphic
    /// coordinate (the conjugates are forced); real charts one per variable.
    pub fn evaluate(&self, point: &[CoeffNumber]) -> Result<CoeffNumber, CoeffError> {
        let values = slot_values(&self.chart, point)?;
        let d = self.denominator().evaluate(&values);
        let inv = d.inv().ok_or(CoeffError::DenominatorVanishes)?;
        Ok(&self.num.evaluate(&values) * &inv)
    }

    /// Exact equality via the difference, which cross-multiplies.
    pub fn equals(&self, other: &ScalarExpr) -> Result<bool, CoeffError> {
        Ok(self.try_sub(other)?.is_zero())
    }

    pub fn render(&self) -> String {
        let num = self.num.render(&self.chart);
        if self.den.is_empty() {
            return num;
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(b, e)| {
                let r = b.render(&self.chart);
                let r = if b.len() > 1 { format!("({r})") } else { r };
                if *e > 1 {
                    format!("{r}^{e}")
                } else {
                    r
                }
            })
            .collect();
        format!("({num})/({})", den.join("*"))
    }
}

/// Slot values for evaluating on `chart` at `point`.
pub fn slot_values(chart: &ChartRef, point: &[CoeffNumber]) -> Result<Vec<CoeffNumber>, CoeffError> {
    match chart.kind() {
        ChartKind::Real => {
            if point.len() != chart.num_vars() {
                return Err(CoeffError::PointArity {
                    expected: chart.num_vars(),
                    got: point.len(),
                });
            }
            Ok(point.to_vec())
        }
        ChartKind::Complex => {
            let n = chart.complex_dim();
            if point.len() != n {
                return Err(CoeffError::PointArity { expected: n, got: point.len() });
            }
            let mut values = Vec::with_capacity(chart.num_slots());
            let mut norm = CoeffNumber::zero();
            for z in point {
                let zb = z.conj();
                norm = &norm + &(z * &zb);
                values.push(z.clone());
                values.push(zb);
            }
            if chart.has_radical() {
                let rho = norm
                    .as_rational()
                    .and_then(Rational::sqrt_exact)
                    .ok_or(CoeffError::NormNotSquare)?;
                values.push(CoeffNumber::rational(rho));
            }
            Ok(values)
        }
    }
}

impl PartialEq for ScalarExpr {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl fmt::Display for ScalarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for ScalarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarExpr[{}]({})", self.chart.name(), self.render())
    }
}

// Operator sugar for same-chart arithmetic; panics on chart mismatch or
// division by zero. Library code uses the `try_*` forms.
macro_rules! sugar {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&ScalarExpr> for &ScalarExpr {
            type Output = ScalarExpr;
            fn $m(self, rhs: &ScalarExpr) -> ScalarExpr {
                self.$f(rhs).expect(concat!("ScalarExpr ", stringify!($m)))
            }
        }
        impl $tr<ScalarExpr> for ScalarExpr {
            type Output = ScalarExpr;
            fn $m(self, rhs: ScalarExpr) -> ScalarExpr {
                (&self).$f(&rhs).expect(concat!("ScalarExpr ", stringify!($m)))
            }
        }
    };
}

sugar!(Add, add, try_add);
sugar!(Sub, sub, try_sub);
sugar!(Mul, mul, try_mul);
sugar!(Div, div, try_div);

impl Neg for &ScalarExpr {
    type Output = ScalarExpr;
    fn neg(self) -> ScalarExpr {
        ScalarExpr {
            chart: self.chart.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for ScalarExpr {
    type Output = ScalarExpr;
    fn neg(self) -> ScalarExpr {
        -&self
    }
}
