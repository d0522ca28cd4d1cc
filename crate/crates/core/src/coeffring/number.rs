use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;

/// Element `a + b·i + c·√2 + d·i·√2` of the field ℚ(i, √2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoeffNumber {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl CoeffNumber {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        CoeffNumber { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(a: Rational) -> Self {
        CoeffNumber {
            a,
            ..Default::default()
        }
    }

    pub fn int(v: i64) -> Self {
        Self::rational(Rational::from(v))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(Rational::new(n, d))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        CoeffNumber {
            b: Rational::one(),
            ..Default::default()
        }
    }

    pub fn sqrt2() -> Self {
        CoeffNumber {
            c: Rational::one(),
            ..Default::default()
        }
    }

    /// Gaussian rational `re + im·i`.
    pub fn gaussian(re: Rational, im: Rational) -> Self {
        CoeffNumber {
            a: re,
            b: im,
            ..Default::default()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then_some(&self.a)
    }

    /// Complex conjugation `i ↦ −i`, fixing √2.
    pub fn conj(&self) -> Self {
        CoeffNumber {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            d: -&self.d,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CoeffNumber {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            d: &self.d * r,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Write x = p + q√2 with p, q in ℚ(i); x·(p − q√2) = p² − 2q² lies in ℚ(i).
        let p = CoeffNumber::gaussian(self.a.clone(), self.b.clone());
        let q = CoeffNumber::gaussian(self.c.clone(), self.d.clone());
        let partner = &p - &(&q * &CoeffNumber::sqrt2());
        let u = &(&p * &p) - &(&(&q * &q) * &CoeffNumber::int(2));
        let norm = &(&u.a * &u.a) + &(&u.b * &u.b);
        let u_inv = CoeffNumber::gaussian(&u.a / &norm, -(&u.b / &norm));
        Some(&partner * &u_inv)
    }

    /// At most one of the four components is nonzero.
    fn is_monomial(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .filter(|r| !r.is_zero())
            .count()
            <= 1
    }
}

impl Add<&CoeffNumber> for &CoeffNumber {
    type Output = CoeffNumber;
    fn add(self, o: &CoeffNumber) -> CoeffNumber {
        CoeffNumber {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            c: &self.c + &o.c,
            d: &self.d + &o.d,
        }
    }
}

impl Sub<&CoeffNumber> for &CoeffNumber {
    type Output = CoeffNumber;
    fn sub(self, o: &CoeffNumber) -> CoeffNumber {
        CoeffNumber {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            c: &self.c - &o.c,
            d: &self.d - &o.d,
        }
    }
}

impl Mul<&CoeffNumber> for &CoeffNumber {
    type Output = CoeffNumber;
    fn mul(self, o: &CoeffNumber) -> CoeffNumber {
        // Fast path: both rational.
        if self.b.is_zero() && self.c.is_zero() && self.d.is_zero() {
            return o.scale(&self.a);
        }
        if o.b.is_zero() && o.c.is_zero() && o.d.is_zero() {
            return self.scale(&o.a);
        }
        let two = Rational::from(2);
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&o.a, &o.b, &o.c, &o.d);
        // basis 1, i, s, is with i² = −1, s² = 2
        let r0 = &(&(a * e) - &(b * f)) + &(&two * &(&(c * g) - &(d * h)));
        let r1 = &(&(a * f) + &(b * e)) + &(&two * &(&(c * h) + &(d * g)));
        let r2 = &(&(a * g) + &(c * e)) - &(&(b * h) + &(d * f));
        let r3 = &(&(a * h) + &(d * e)) + &(&(b * g) + &(c * f));
        CoeffNumber::new(r0, r1, r2, r3)
    }
}

impl Neg for &CoeffNumber {
    type Output = CoeffNumber;
    fn neg(self) -> CoeffNumber {
        CoeffNumber {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

impl Neg for CoeffNumber {
    type Output = CoeffNumber;
    fn neg(self) -> CoeffNumber {
        -&self
    }
}

impl fmt::Display for CoeffNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            (&self.a, ""),
            (&self.b, "i"),
            (&self.c, "sqrt2"),
            (&self.d, "i*sqrt2"),
        ]
        .iter()
        .filter(|(r, _)| !r.is_zero())
        .map(|(r, unit)| match (*unit, r.is_one()) {
            ("", _) => r.to_string(),
            (u, true) => u.to_string(),
            (u, false) if (-*r).is_one() => format!("-{u}"),
            (u, false) => format!("{r}*{u}"),
        })
        .collect();
        if parts.is_empty() {
            return write!(f, "0");
        }
        let body = parts.join(" + ").replace("+ -", "- ");
        if self.is_monomial() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})")
        }
    }
}

impl fmt::Debug for CoeffNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
