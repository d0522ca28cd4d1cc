use std::collections::BTreeMap;
use std::fmt;

use crate::coeffring::{same_chart, ChartRef, ScalarExpr};

use super::form::DiffForm;
use super::ExtError;

/// A vector field `Σ X^i ∂_{x_i}` on a chart. The radical has no component.
#[derive(Clone)]
pub struct VectorField {
    chart: ChartRef,
    components: BTreeMap<usize, ScalarExpr>,
}

impl VectorField {
    pub fn zero(chart: &ChartRef) -> Self {
        VectorField {
            chart: chart.clone(),
            components: BTreeMap::new(),
        }
    }

    /// Field from `(variable name, component)` pairs; repeated names add up.
    pub fn from_components<'a>(
        chart: &ChartRef,
        comps: impl IntoIterator<Item = (&'a str, ScalarExpr)>,
    ) -> Result<Self, ExtError> {
        let mut out = Self::zero(chart);
        for (name, c) in comps {
            let idx = chart
                .index_of(name)
                .ok_or_else(|| ExtError::UnknownVariable(name.to_string()))?;
            out = out.with_component_at(idx, c)?;
        }
        Ok(out)
    }

    /// Add `c` to the component along variable `idx`.
    pub fn with_component_at(mut self, idx: usize, c: ScalarExpr) -> Result<Self, ExtError> {
        if !same_chart(&self.chart, c.chart()) {
            return Err(ExtError::chart_mismatch(&self.chart, c.chart()));
        }
        if idx >= self.chart.num_vars() {
            return Err(ExtError::BadIndex(idx));
        }
        let sum = match self.components.remove(&idx) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.components.insert(idx, sum);
        }
        Ok(self)
    }

    /// The coordinate field `∂_{name}`.
    pub fn coordinate(chart: &ChartRef, name: &str) -> Result<Self, ExtError> {
        Self::from_components(chart, [(name, ScalarExpr::one(chart))])
    }

    /// `½ Σ x_i ∂_{x_i}` over all chart variables: the radial field used for
    /// the Liouville pairing on complex charts.
    pub fn half_euler(chart: &ChartRef) -> Self {
        let half = ScalarExpr::constant(chart, crate::coeffring::CoeffNumber::frac(1, 2));
        let mut out = Self::zero(chart);
        for i in 0..chart.num_vars() {
            out = out
                .with_component_at(i, &ScalarExpr::var_at(chart, i) * &half)
                .expect("same chart");
        }
        out
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn component_at(&self, idx: usize) -> Option<&ScalarExpr> {
        self.components.get(&idx)
    }

    pub fn component(&self, name: &str) -> ScalarExpr {
        self.chart
            .index_of(name)
            .and_then(|i| self.components.get(&i).cloned())
            .unwrap_or_else(|| ScalarExpr::zero(&self.chart))
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &ScalarExpr)> {
        self.components.iter().map(|(i, c)| (*i, c))
    }

    pub fn scale(&self, c: &crate::coeffring::CoeffNumber) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            components: self
                .components
                .iter()
                .map(|(i, x)| (*i, x.scale(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// `X(f) = Σ X^i ∂f/∂x_i`.
    pub fn apply(&self, f: &ScalarExpr) -> Result<ScalarExpr, ExtError> {
        DiffForm::function(f)
            .exterior_derivative()
            .interior_product(self)
            .map(|g| g.coefficient(&[]))
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(i, c)| format!("({}) d/d{}", c.render(), self.chart.variables()[*i]))
            .collect();
        write!(f, "VectorField[{}]({})", self.chart.name(), parts.join(" + "))
    }
}
