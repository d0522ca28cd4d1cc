//! Sparse multivariate polynomials over ℚ(i, √2).
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! degree-lexicographic order with the highest slot index as the largest
//! variable. The last entry of the map is therefore the leading term.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::chart::{Chart, MAX_SLOTS};
use super::number::CoeffNumber;
use super::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u16,
    exps: [u8; MAX_SLOTS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            deg: 0,
            exps: [0; MAX_SLOTS],
        }
    }

    pub fn var(idx: usize) -> Self {
        let mut m = Self::one();
        m.exps[idx] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| u16::from(e)).sum();
        m
    }

    pub fn degree(&self) -> u16 {
        self.deg
    }

    pub fn exp(&self, idx: usize) -> u8 {
        self.exps[idx]
    }

    pub fn exponents(&self) -> &[u8; MAX_SLOTS] {
        &self.exps
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_SLOTS];
        for (k, e) in exps.iter_mut().enumerate() {
            *e = self.exps[k]
                .checked_add(other.exps[k])
                .expect("monomial exponent overflow");
        }
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u8; MAX_SLOTS];
        for (k, e) in exps.iter_mut().enumerate() {
            *e = self.exps[k].checked_sub(other.exps[k])?;
        }
        Some(Monomial {
            deg: self.deg - other.deg,
            exps,
        })
    }

    pub(crate) fn with_exp(&self, idx: usize, e: u8) -> Monomial {
        let mut m = *self;
        m.deg = m.deg - u16::from(m.exps[idx]) + u16::from(e);
        m.exps[idx] = e;
        m
    }

    /// Apply a slot permutation: exponent of slot `k` moves to `perm[k]`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps = [0u8; MAX_SLOTS];
        for (k, &to) in perm.iter().enumerate() {
            exps[to] = self.exps[k];
        }
        Monomial { deg: self.deg, exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, CoeffNumber>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: CoeffNumber) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(CoeffNumber::one())
    }

    pub fn var(idx: usize) -> Self {
        Self::term(Monomial::var(idx), CoeffNumber::one())
    }

    pub fn term(m: Monomial, c: CoeffNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, CoeffNumber)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CoeffNumber)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &CoeffNumber)> {
        self.terms.iter().next_back()
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<CoeffNumber> {
        match self.terms.len() {
            0 => Some(CoeffNumber::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u16 {
        self.leading().map_or(0, |(m, _)| m.degree())
    }

    /// Highest exponent of slot `idx` across all terms.
    pub fn degree_in(&self, idx: usize) -> u8 {
        self.terms.keys().map(|m| m.exp(idx)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: &CoeffNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c);
        }
        big
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &CoeffNumber) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Poly {
        self.scale(&CoeffNumber::rational(r.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &CoeffNumber) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_reduced(other, None)
    }

    /// Product with the radical rewrite `rho² → norm` applied when `radical`
    /// is given as `(slot, norm)`. Both factors must have radical degree ≤ 1.
    pub fn mul_reduced(&self, other: &Poly, radical: Option<(usize, &Poly)>) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Monomial, CoeffNumber> = HashMap::with_capacity(self.len() * other.len());
        let mut overflow: Vec<(Monomial, CoeffNumber)> = Vec::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                if let Some((slot, _)) = radical {
                    if m.exp(slot) >= 2 {
                        overflow.push((m, c));
                        continue;
                    }
                }
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        if let Some((slot, norm)) = radical {
            for (m, c) in overflow {
                let base = m.with_exp(slot, m.exp(slot) - 2);
                for (mn, cn) in norm.terms() {
                    let mm = base.mul(mn);
                    let cc = &c * cn;
                    match acc.get_mut(&mm) {
                        Some(v) => *v = &*v + &cc,
                        None => {
                            acc.insert(mm, cc);
                        }
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. The radical slot, if any, is treated as an ordinary variable.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading()?;
        let lc_inv = lc.inv()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if divisor.len() == 1 {
            let mut q = BTreeMap::new();
            for (m, c) in &self.terms {
                q.insert(m.div(lm)?, c * &lc_inv);
            }
            return Some(Poly { terms: q });
        }
        let mut rem = self.terms.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            // Exact division forces lt(divisor) | lt(remainder).
            let qm = m.div(lm)?;
            let qc = &c * &lc_inv;
            for (dm, dc) in divisor.terms() {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        let s = &*v - &delta;
                        if s.is_zero() {
                            rem.remove(&key);
                        } else {
                            *v = s;
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Monic normalisation: divide by the leading coefficient. Returns the
    /// leading coefficient that was divided out.
    pub fn make_monic(&self) -> (Poly, CoeffNumber) {
        match self.leading() {
            None => (Poly::zero(), CoeffNumber::one()),
            Some((_, lc)) => {
                let lc = lc.clone();
                let inv = lc.inv().expect("nonzero leading coefficient");
                (self.scale(&inv), lc)
            }
        }
    }

    /// Split `self = a + b·x_slot` where neither part involves `slot`;
    /// requires the slot degree to be at most 1.
    pub fn split_linear(&self, slot: usize) -> (Poly, Poly) {
        let mut a = Poly::zero();
        let mut b = Poly::zero();
        for (m, c) in &self.terms {
            match m.exp(slot) {
                0 => {
                    a.terms.insert(*m, c.clone());
                }
                1 => {
                    b.terms.insert(m.with_exp(slot, 0), c.clone());
                }
                e => panic!("radical degree {e} not reduced"),
            }
        }
        (a, b)
    }

    /// Partial derivative with respect to slot `idx`, treating every slot as
    /// an independent variable.
    pub fn partial(&self, idx: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(idx);
            if e > 0 {
                out.add_term(m.with_exp(idx, e - 1), &c.scale(&Rational::from(i64::from(e))));
            }
        }
        out
    }

    /// Apply `f` to every coefficient and the slot permutation `perm` to every
    /// monomial.
    pub(crate) fn map_terms(&self, perm: &[usize], f: impl Fn(&CoeffNumber) -> CoeffNumber) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.permuted(perm), f(c))).collect(),
        }
    }

    /// Evaluate at the given slot values.
    pub fn evaluate(&self, values: &[CoeffNumber]) -> CoeffNumber {
        let mut cache: HashMap<(usize, u8), CoeffNumber> = HashMap::new();
        let mut total = CoeffNumber::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, v) in values.iter().enumerate() {
                let e = m.exp(k);
                if e == 0 {
                    continue;
                }
                let p = cache.entry((k, e)).or_insert_with(|| {
                    let mut acc = CoeffNumber::one();
                    for _ in 0..e {
                        acc = &acc * v;
                    }
                    acc
                });
                t = &t * p;
            }
            total = &total + &t;
        }
        total
    }

    /// Human-readable rendering using the chart's slot names, highest term first.
    pub fn render(&self, chart: &Chart) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = (0..chart.num_slots())
                .filter(|&s| m.exp(s) > 0)
                .map(|s| match m.exp(s) {
                    1 => chart.slot_name(s).to_string(),
                    e => format!("{}^{e}", chart.slot_name(s)),
                })
                .collect();
            let (neg, mag) = match c.as_rational() {
                Some(r) if r.is_negative() => (true, CoeffNumber::rational(-r)),
                _ => (false, c.clone()),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", mag, mono.join("*")));
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().rev()).finish()
    }
}
