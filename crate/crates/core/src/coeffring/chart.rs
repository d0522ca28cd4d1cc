use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::CoeffError;

/// Largest number of polynomial slots (chart variables plus the radical).
pub const MAX_SLOTS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChartKind {
    Real,
    Complex,
}

/// A coordinate chart: an ordered list of variables and, for complex charts,
/// an optional radical symbol `rho` with `rho² = Σ z_j·zb_j`.
///
/// Complex charts store their variables as conjugate pairs
/// `z1, zb1, z2, zb2, …` so that the declaration order is also the monomial
/// order `z1 < zb1 < … < zn < zbn < rho`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    name: String,
    kind: ChartKind,
    variables: Vec<String>,
    has_radical: bool,
}

pub type ChartRef = Arc<Chart>;

impl Chart {
    pub fn real<S: AsRef<str>>(name: &str, vars: &[S]) -> Result<ChartRef, CoeffError> {
        let variables: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        Self::build(name, ChartKind::Real, variables, false)
    }

    /// Complex chart from the holomorphic variable names; each `z` gets a
    /// partner named `zb` formed by inserting `b` after the leading letters
    /// (`z1` → `zb1`).
    pub fn complex<S: AsRef<str>>(name: &str, holomorphic: &[S], has_radical: bool) -> Result<ChartRef, CoeffError> {
        let mut variables = Vec::with_capacity(2 * holomorphic.len());
        for z in holomorphic {
            let z = z.as_ref();
            variables.push(z.to_string());
            variables.push(bar_name(z));
        }
        Self::build(name, ChartKind::Complex, variables, has_radical)
    }

    /// The standard chart `z1, …, zn` on ℂⁿ.
    pub fn complex_n(name: &str, n: usize, has_radical: bool) -> Result<ChartRef, CoeffError> {
        let names: Vec<String> = (1..=n).map(|j| format!("z{j}")).collect();
        Self::complex(name, &names, has_radical)
    }

    fn build(name: &str, kind: ChartKind, variables: Vec<String>, has_radical: bool) -> Result<ChartRef, CoeffError> {
        let mut seen = HashSet::new();
        for v in &variables {
            if v.is_empty() || v == "rho" || !seen.insert(v.as_str()) {
                return Err(CoeffError::InvalidChart(format!("bad or duplicate variable name {v:?}")));
            }
        }
        if has_radical && kind != ChartKind::Complex {
            return Err(CoeffError::InvalidChart("a radical requires a complex chart".into()));
        }
        let slots = variables.len() + usize::from(has_radical);
        if slots > MAX_SLOTS {
            return Err(CoeffError::InvalidChart(format!(
                "chart needs {slots} slots, at most {MAX_SLOTS} supported"
            )));
        }
        Ok(Arc::new(Chart {
            name: name.to_string(),
            kind,
            variables,
            has_radical,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ChartKind {
        self.kind
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn has_radical(&self) -> bool {
        self.has_radical
    }

    /// Polynomial slot holding the radical exponent.
    pub fn radical_slot(&self) -> Option<usize> {
        self.has_radical.then_some(self.variables.len())
    }

    /// Number of exponent slots a monomial on this chart uses.
    pub fn num_slots(&self) -> usize {
        self.variables.len() + usize::from(self.has_radical)
    }

    pub fn index_of(&self, var: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == var)
    }

    /// Index of the conjugate variable (itself on real charts).
    pub fn conj_index(&self, idx: usize) -> usize {
        match self.kind {
            ChartKind::Real => idx,
            ChartKind::Complex => idx ^ 1,
        }
    }

    /// Number of complex coordinates (pairs) on a complex chart.
    pub fn complex_dim(&self) -> usize {
        match self.kind {
            ChartKind::Real => 0,
            ChartKind::Complex => self.variables.len() / 2,
        }
    }

    /// Printable name for slot `idx`, including the radical.
    pub fn slot_name(&self, idx: usize) -> &str {
        if Some(idx) == self.radical_slot() {
            "rho"
        } else {
            &self.variables[idx]
        }
    }
}

impl fmt::Debug for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chart({} {:?} [{}]", self.name, self.kind, self.variables.join(", "))?;
        if self.has_radical {
            write!(f, " + rho")?;
        }
        write!(f, ")")
    }
}

fn bar_name(z: &str) -> String {
    let split = z.find(|c: char| c.is_ascii_digit()).unwrap_or(z.len());
    format!("{}b{}", &z[..split], &z[split..])
}

/// Charts are compared structurally, with a pointer fast path.
pub fn same_chart(a: &ChartRef, b: &ChartRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
