use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::coeffring::{same_chart, ChartRef, CoeffNumber, ScalarExpr};

use super::field::VectorField;
use super::ExtError;

/// Strictly increasing list of chart-variable indices naming a basis form
/// `dx_{i1} ∧ … ∧ dx_{ik}`.
pub type Index = Vec<usize>;

/// A differential form on a chart, possibly of mixed degree.
#[derive(Clone)]
pub struct DiffForm {
    chart: ChartRef,
    terms: BTreeMap<Index, ScalarExpr>,
}

/// Sign and merged index of `dx_a ∧ dx_b`, or `None` when they share a
/// generator.
pub(crate) fn merge_indices(a: &[usize], b: &[usize]) -> Option<(bool, Index)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut odd = false;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                // b[j] jumps over the remaining a[i..]
                odd ^= (a.len() - i) % 2 == 1;
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((odd, out))
}

impl DiffForm {
    pub fn zero(chart: &ChartRef) -> Self {
        DiffForm {
            chart: chart.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A 0-form.
    pub fn function(f: &ScalarExpr) -> Self {
        let mut out = Self::zero(f.chart());
        out.add_term(Vec::new(), f.clone());
        out
    }

    /// `c · dx_{i1} ∧ … ∧ dx_{ik}` for arbitrary (unsorted) indices.
    pub fn monomial(chart: &ChartRef, indices: &[usize], c: ScalarExpr) -> Result<Self, ExtError> {
        if !same_chart(chart, c.chart()) {
            return Err(ExtError::chart_mismatch(chart, c.chart()));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= chart.num_vars()) {
            return Err(ExtError::BadIndex(bad));
        }
        let mut sorted = Vec::new();
        let mut odd = false;
        for &i in indices {
            match merge_indices(&sorted, &[i]) {
                Some((s, m)) => {
                    odd ^= s;
                    sorted = m;
                }
                None => return Ok(Self::zero(chart)),
            }
        }
        let mut out = Self::zero(chart);
        out.add_term(sorted, if odd { -c } else { c });
        Ok(out)
    }

    /// The basis form `d(names[0]) ∧ d(names[1]) ∧ …`.
    pub fn basis(chart: &ChartRef, names: &[&str]) -> Result<Self, ExtError> {
        let idx = names
            .iter()
            .map(|n| chart.index_of(n).ok_or_else(|| ExtError::UnknownVariable(n.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::monomial(chart, &idx, ScalarExpr::one(chart))
    }

    /// `d(name)` for a chart variable.
    pub fn dvar(chart: &ChartRef, name: &str) -> Result<Self, ExtError> {
        Self::basis(chart, &[name])
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Index, &ScalarExpr)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the basis form with the given sorted index.
    pub fn coefficient(&self, index: &[usize]) -> ScalarExpr {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(|| ScalarExpr::zero(&self.chart))
    }

    /// The single degree of a homogeneous form; `None` when degrees are mixed.
    /// The zero form reports degree 0.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Vec::len);
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|e| e == d).then_some(d),
        }
    }

    /// Part of degree `k`.
    pub fn homogeneous_part(&self, k: usize) -> DiffForm {
        DiffForm {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| i.len() == k)
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, index: Index, c: ScalarExpr) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&index) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(index, s);
                }
            }
            None => {
                self.terms.insert(index, c);
            }
        }
    }

    fn check(&self, other_chart: &ChartRef) -> Result<(), ExtError> {
        if same_chart(&self.chart, other_chart) {
            Ok(())
        } else {
            Err(ExtError::chart_mismatch(&self.chart, other_chart))
        }
    }

    pub fn try_add(&self, other: &DiffForm) -> Result<DiffForm, ExtError> {
        self.check(&other.chart)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &DiffForm) -> Result<DiffForm, ExtError> {
        self.try_add(&-other)
    }

    /// Multiply every coefficient by a function.
    pub fn mul_function(&self, f: &ScalarExpr) -> Result<DiffForm, ExtError> {
        self.check(f.chart())?;
        let mut out = Self::zero(&self.chart);
        for (i, c) in &self.terms {
            out.add_term(i.clone(), c * f);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CoeffNumber) -> DiffForm {
        let mut out = Self::zero(&self.chart);
        for (i, t) in &self.terms {
            out.add_term(i.clone(), t.scale(c));
        }
        out
    }

    pub fn conjugate(&self) -> DiffForm {
        let mut out = Self::zero(&self.chart);
        for (i, c) in &self.terms {
            let idx: Vec<usize> = i.iter().map(|&v| self.chart.conj_index(v)).collect();
            let conj = Self::monomial(&self.chart, &idx, c.conjugate()).expect("same chart");
            out = &out + &conj;
        }
        out
    }

    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm, ExtError> {
        self.check(&other.chart)?;
        let mut out = Self::zero(&self.chart);
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                if let Some((odd, idx)) = merge_indices(ia, ib) {
                    let prod = ca * cb;
                    out.add_term(idx, if odd { -prod } else { prod });
                }
            }
        }
        Ok(out)
    }

    pub fn exterior_derivative(&self) -> DiffForm {
        let mut out = Self::zero(&self.chart);
        for (idx, c) in &self.terms {
            for v in 0..self.chart.num_vars() {
                if idx.binary_search(&v).is_ok() {
                    continue;
                }
                let dc = c.partial_at(v);
                if dc.is_zero() {
                    continue;
                }
                if let Some((odd, merged)) = merge_indices(&[v], idx) {
                    out.add_term(merged, if odd { -dc } else { dc });
                }
            }
        }
        out
    }

    pub fn interior_product(&self, x: &VectorField) -> Result<DiffForm, ExtError> {
        self.check(x.chart())?;
        let mut out = Self::zero(&self.chart);
        for (idx, c) in &self.terms {
            for (s, &v) in idx.iter().enumerate() {
                let Some(xv) = x.component_at(v) else { continue };
                let mut rest = idx.clone();
                rest.remove(s);
                let t = c * xv;
                out.add_term(rest, if s % 2 == 1 { -t } else { t });
            }
        }
        Ok(out)
    }

    /// Lie derivative by Cartan's formula `ι_X d + d ι_X`.
    pub fn lie_derivative(&self, x: &VectorField) -> Result<DiffForm, ExtError> {
        let a = self.exterior_derivative().interior_product(x)?;
        let b = self.interior_product(x)?.exterior_derivative();
        a.try_add(&b)
    }

    /// `self ∧ … ∧ self` with `k` factors.
    pub fn wedge_power(&self, k: u32) -> Result<DiffForm, ExtError> {
        if k == 0 {
            return Err(ExtError::ZeroPower);
        }
        if k == 1 {
            return Ok(self.clone());
        }
        match self.degree() {
            Some(d) if d % 2 == 0 => {}
            Some(d) => return Err(ExtError::OddPower { degree: d }),
            None => return Err(ExtError::NotHomogeneous),
        }
        let mut acc = self.clone();
        for _ in 1..k {
            if acc.is_zero() {
                break;
            }
            acc = acc.wedge(self)?;
        }
        Ok(acc)
    }

    /// Structural equality after subtraction.
    pub fn equals(&self, other: &DiffForm) -> Result<bool, ExtError> {
        Ok(self.try_sub(other)?.is_zero())
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let basis: Vec<String> = idx.iter().map(|&v| format!("d{}", self.chart.variables()[v])).collect();
                let coeff = c.render();
                if basis.is_empty() {
                    coeff
                } else if c.as_constant().is_some_and(|k| k.is_one()) {
                    basis.join("^")
                } else {
                    format!("({coeff}) {}", basis.join("^"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl PartialEq for DiffForm {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffForm[{}]({})", self.chart.name(), self.render())
    }
}

impl Add<&DiffForm> for &DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        self.try_add(rhs).expect("DiffForm add")
    }
}

impl Sub<&DiffForm> for &DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        self.try_sub(rhs).expect("DiffForm sub")
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        DiffForm {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }
}

impl Neg for DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        -&self
    }
}
