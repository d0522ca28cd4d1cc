//! Inference over bounded exact sequences of finitely generated abelian
//! groups.
//!
//! Each slot is a direct sum of known groups and named unknowns; unknowns
//! may be shared between sequences. Arrows carry three monotone flags
//! (zero, injective, surjective) seeded from declared facts. The rules
//! below run to saturation; every rule only adds information, so the
//! result does not depend on the order in which they fire.
//!
//! * R1: exactness between neighbouring arrows (`f` surjective ⇔ next
//!   arrow zero, `f` zero ⇔ next arrow injective); a zero slot makes its
//!   arrows zero; a slot entered surjectively and left injectively is zero.
//! * R2: `0 → A → G → C → 0` with `C` free splits, so `G ≅ A ⊕ C`; a group
//!   injecting into a free group is free.
//! * R3: an injective and surjective arrow identifies its ends.
//! * R4: a surjection between isomorphic finitely generated groups, or an
//!   injection between isomorphic finite groups, is a bijection.
//! * R5: ranks alternate to zero along every stretch between zero arrows;
//!   used as a check and to solve one unknown rank.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::group::FGAbelian;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Known(FGAbelian),
    Var(String),
}

/// One position of an exact sequence: a direct sum of terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub label: String,
    pub terms: Vec<Term>,
}

impl Slot {
    pub fn zero() -> Self {
        Slot {
            label: "0".into(),
            terms: Vec::new(),
        }
    }

    pub fn known(label: &str, g: FGAbelian) -> Self {
        Slot {
            label: label.into(),
            terms: vec![Term::Known(g)],
        }
    }

    pub fn var(name: &str) -> Self {
        Slot {
            label: name.into(),
            terms: vec![Term::Var(name.into())],
        }
    }

    pub fn sum(label: &str, terms: Vec<Term>) -> Self {
        Slot {
            label: label.into(),
            terms,
        }
    }

    fn vars(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v.as_str()),
            Term::Known(_) => None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapFact {
    IsZero,
    IsInjective,
    IsSurjective,
    IsIsomorphism,
}

/// A declared property of the arrow from slot `arrow` to slot `arrow + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowFact {
    pub arrow: usize,
    pub fact: MapFact,
    pub reason: String,
}

/// A bounded exact sequence `0 → S₁ → … → S_k → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSeqProblem {
    pub name: String,
    slots: Vec<Slot>,
    facts: Vec<ArrowFact>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("malformed problem: {0}")]
    Malformed(String),
    #[error("contradiction: {0}")]
    Contradiction(String),
}

impl ExactSeqProblem {
    /// Slots in order; the first and last must be the zero group.
    pub fn new(name: &str, slots: Vec<Slot>, facts: Vec<ArrowFact>) -> Result<Self, SolveError> {
        let is_zero = |s: &Slot| {
            s.terms.iter().all(|t| matches!(t, Term::Known(g) if g.is_trivial()))
        };
        if slots.len() < 2 || !is_zero(&slots[0]) || !is_zero(&slots[slots.len() - 1]) {
            return Err(SolveError::Malformed(format!("{name}: sequence must start and end with 0")));
        }
        if let Some(f) = facts.iter().find(|f| f.arrow + 1 >= slots.len()) {
            return Err(SolveError::Malformed(format!("{name}: no arrow {}", f.arrow)));
        }
        Ok(ExactSeqProblem {
            name: name.into(),
            slots,
            facts,
        })
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn facts(&self) -> &[ArrowFact] {
        &self.facts
    }

    /// Index of the first slot with the given label.
    pub fn slot_index(&self, label: &str) -> Option<usize> {
        self.slots.iter().position(|s| s.label == label)
    }
}

/// Values assumed for some unknowns, with their justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Given {
    pub var: String,
    pub value: FGAbelian,
    pub reason: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

impl Rule {
    pub const ALL: [Rule; 5] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5];
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ArrowStatus {
    pub zero: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl ArrowStatus {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct VarInfo {
    value: Option<FGAbelian>,
    rank: Option<usize>,
    free: bool,
}

/// Saturated state of a system.
#[derive(Clone, Debug)]
pub struct Solution {
    pub values: BTreeMap<String, FGAbelian>,
    pub unresolved: Vec<String>,
    /// Arrow status per problem, in problem order.
    pub arrows: Vec<Vec<ArrowStatus>>,
    /// Human-readable record of each inference.
    pub trace: Vec<String>,
}

impl Solution {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }

    pub fn value(&self, var: &str) -> Option<&FGAbelian> {
        self.values.get(var)
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut entries: Vec<_> = self.values.iter().collect();
        entries.sort_by_key(|(k, _)| natural_key(k));
        let parts: Vec<String> = entries.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        write!(f, "{}", parts.join(", "))?;
        if !self.unresolved.is_empty() {
            write!(f, "; underdetermined: {}", self.unresolved.join(", "))?;
        }
        Ok(())
    }
}

/// Sort key treating digit runs as numbers, so `H_2` precedes `H_10`.
fn natural_key(s: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_ascii_digit() {
            let mut n = u64::from(c as u8 - b'0');
            while let Some(d) = chars.peek().and_then(|d| d.to_digit(10)) {
                n = n.saturating_mul(10).saturating_add(u64::from(d));
                chars.next();
            }
            out.push((std::mem::take(&mut text), n));
        } else {
            text.push(c);
        }
    }
    out.push((text, 0));
    out
}

struct State<'a> {
    problems: &'a [ExactSeqProblem],
    vars: BTreeMap<String, VarInfo>,
    arrows: Vec<Vec<ArrowStatus>>,
    trace: Vec<String>,
}

type Step = Result<bool, SolveError>;

fn contradiction(msg: String) -> SolveError {
    SolveError::Contradiction(msg)
}

impl<'a> State<'a> {
    fn new(problems: &'a [ExactSeqProblem]) -> Self {
        let mut vars = BTreeMap::new();
        for p in problems {
            for s in &p.slots {
                for v in s.vars() {
                    vars.entry(v.to_string()).or_insert_with(VarInfo::default);
                }
            }
        }
        let arrows = problems.iter().map(|p| vec![ArrowStatus::default(); p.slots.len() - 1]).collect();
        State {
            problems,
            vars,
            arrows,
            trace: Vec::new(),
        }
    }

    fn slot(&self, p: usize, i: usize) -> &'a Slot {
        &self.problems[p].slots[i]
    }

    fn where_(&self, p: usize, i: usize) -> String {
        format!("{}[{}]", self.problems[p].name, self.slot(p, i).label)
    }

    fn slot_value(&self, p: usize, i: usize) -> Option<FGAbelian> {
        let mut acc = FGAbelian::zero();
        for t in &self.slot(p, i).terms {
            let g = match t {
                Term::Known(g) => g,
                Term::Var(v) => self.vars[v].value.as_ref()?,
            };
            acc = acc.direct_sum(g);
        }
        Some(acc)
    }

    fn slot_rank(&self, p: usize, i: usize) -> Option<usize> {
        let mut r = 0;
        for t in &self.slot(p, i).terms {
            r += match t {
                Term::Known(g) => g.rank(),
                Term::Var(v) => self.vars[v].rank?,
            };
        }
        Some(r)
    }

    fn set_var(&mut self, var: &str, g: FGAbelian, why: &str) -> Step {
        let info = self.vars.get_mut(var).expect("declared var");
        if let Some(old) = &info.value {
            if *old != g {
                return Err(contradiction(format!("{var}: {old} vs {g} ({why})")));
            }
            return Ok(false);
        }
        if info.rank.is_some_and(|r| r != g.rank()) {
            return Err(contradiction(format!("{var}: rank {} vs {g} ({why})", info.rank.unwrap())));
        }
        if info.free && !g.is_free() {
            return Err(contradiction(format!("{var}: known free but {g} ({why})")));
        }
        info.rank = Some(g.rank());
        info.free = g.is_free();
        self.trace.push(format!("{var} = {g} [{why}]"));
        info.value = Some(g);
        Ok(true)
    }

    fn set_rank(&mut self, var: &str, r: usize, why: &str) -> Step {
        let info = self.vars.get_mut(var).expect("declared var");
        match info.rank {
            Some(old) if old != r => return Err(contradiction(format!("{var}: rank {old} vs {r} ({why})"))),
            Some(_) => return Ok(false),
            None => {}
        }
        info.rank = Some(r);
        self.trace.push(format!("rank {var} = {r} [{why}]"));
        if info.free {
            self.set_var(var, FGAbelian::free(r), why)?;
        }
        Ok(true)
    }

    fn set_free(&mut self, var: &str, why: &str) -> Step {
        let info = self.vars.get_mut(var).expect("declared var");
        if info.free {
            return Ok(false);
        }
        if let Some(g) = &info.value {
            if !g.is_free() {
                return Err(contradiction(format!("{var} = {g} is not free ({why})")));
            }
        }
        info.free = true;
        self.trace.push(format!("{var} is free [{why}]"));
        if let (Some(r), None) = (info.rank, &info.value) {
            self.set_var(var, FGAbelian::free(r), why)?;
        }
        Ok(true)
    }

    /// Record that slot `i` of problem `p` is isomorphic to `g`.
    fn assign_slot(&mut self, p: usize, i: usize, g: &FGAbelian, why: &str) -> Step {
        let slot = self.slot(p, i);
        let mut known = FGAbelian::zero();
        let mut open: Vec<&str> = Vec::new();
        for t in &slot.terms {
            match t {
                Term::Known(h) => known = known.direct_sum(h),
                Term::Var(v) => match &self.vars[v].value {
                    Some(h) => known = known.direct_sum(h),
                    None => open.push(v),
                },
            }
        }
        let at = self.where_(p, i);
        match open.len() {
            0 if known == *g => Ok(false),
            0 => Err(contradiction(format!("{at} is {known} but must be {g} ({why})"))),
            1 => {
                let x = g
                    .cancel(&known)
                    .map_err(|_| contradiction(format!("{at}: {known} is not a summand of {g} ({why})")))?;
                self.set_var(open[0], x, &format!("{why} at {at}"))
            }
            _ if g.is_trivial() => {
                let mut changed = false;
                for v in open {
                    changed |= self.set_var(v, FGAbelian::zero(), &format!("{why} at {at}"))?;
                }
                Ok(changed)
            }
            _ => Ok(false),
        }
    }

    fn mark(&mut self, p: usize, a: usize, zero: bool, inj: bool, surj: bool, why: &str) -> Step {
        let st = &mut self.arrows[p][a];
        let before = *st;
        st.zero |= zero;
        st.injective |= inj;
        st.surjective |= surj;
        let after = *st;
        if after == before {
            return Ok(false);
        }
        let name = format!(
            "{}: {} -> {}",
            self.problems[p].name,
            self.slot(p, a).label,
            self.slot(p, a + 1).label
        );
        let mut flags = Vec::new();
        if after.zero && !before.zero {
            flags.push("zero");
        }
        if after.injective && !before.injective {
            flags.push("injective");
        }
        if after.surjective && !before.surjective {
            flags.push("surjective");
        }
        self.trace.push(format!("{name} {} [{why}]", flags.join(", ")));
        Ok(true)
    }

    fn apply_facts(&mut self) -> Step {
        let mut changed = false;
        for p in 0..self.problems.len() {
            for f in &self.problems[p].facts {
                let (z, i, s) = match f.fact {
                    MapFact::IsZero => (true, false, false),
                    MapFact::IsInjective => (false, true, false),
                    MapFact::IsSurjective => (false, false, true),
                    MapFact::IsIsomorphism => (false, true, true),
                };
                changed |= self.mark(p, f.arrow, z, i, s, &format!("declared: {}", f.reason))?;
            }
        }
        Ok(changed)
    }

    fn r1(&mut self) -> Step {
        let mut changed = false;
        for p in 0..self.problems.len() {
            let n = self.problems[p].slots.len();
            for i in 0..n {
                if self.slot_value(p, i).is_some_and(|g| g.is_trivial()) {
                    if i > 0 {
                        changed |= self.mark(p, i - 1, true, false, true, "R1 into zero group")?;
                    }
                    if i + 1 < n {
                        changed |= self.mark(p, i, true, true, false, "R1 out of zero group")?;
                    }
                }
            }
            for a in 0..n - 2 {
                let (f, g) = (self.arrows[p][a], self.arrows[p][a + 1]);
                if f.surjective || g.zero {
                    changed |= self.mark(p, a, false, false, true, "R1 exactness")?;
                    changed |= self.mark(p, a + 1, true, false, false, "R1 exactness")?;
                }
                if f.zero || g.injective {
                    changed |= self.mark(p, a, true, false, false, "R1 exactness")?;
                    changed |= self.mark(p, a + 1, false, true, false, "R1 exactness")?;
                }
            }
            for i in 1..n - 1 {
                let (inn, out) = (self.arrows[p][i - 1], self.arrows[p][i]);
                let vanishes = (inn.surjective && out.injective)
                    || (out.zero && out.injective)
                    || (inn.zero && inn.surjective);
                if vanishes {
                    changed |= self.assign_slot(p, i, &FGAbelian::zero(), "R1 zero slot")?;
                }
            }
        }
        Ok(changed)
    }

    fn r2(&mut self) -> Step {
        let mut changed = false;
        for p in 0..self.problems.len() {
            let n = self.problems[p].slots.len();
            // subgroups of free groups are free
            for i in 1..n - 1 {
                if !self.arrows[p][i].injective {
                    continue;
                }
                if self.slot_value(p, i + 1).is_some_and(|g| g.is_free()) {
                    let vars: Vec<&str> = self.slot(p, i).vars().collect();
                    for v in vars {
                        changed |= self.set_free(v, &format!("R2 injects into free {}", self.where_(p, i + 1)))?;
                    }
                }
            }
            // 0 → A → G → C → 0 with C free
            for i in 1..n.saturating_sub(3) {
                let (ag, gc) = (self.arrows[p][i], self.arrows[p][i + 1]);
                if !(ag.injective && gc.surjective && self.arrows[p][i - 1].zero && self.arrows[p][i + 2].zero) {
                    continue;
                }
                let Some(c) = self.slot_value(p, i + 2).filter(FGAbelian::is_free) else {
                    continue;
                };
                let why = format!("R2 split 0 -> A -> G -> {c} -> 0");
                if let Some(a) = self.slot_value(p, i) {
                    changed |= self.assign_slot(p, i + 1, &a.direct_sum(&c), &why)?;
                }
                if let Some(g) = self.slot_value(p, i + 1) {
                    let a = g
                        .cancel(&c)
                        .map_err(|_| contradiction(format!("{}: cannot split off {c} from {g}", self.where_(p, i + 1))))?;
                    changed |= self.assign_slot(p, i, &a, &why)?;
                }
            }
        }
        Ok(changed)
    }

    fn r3(&mut self) -> Step {
        let mut changed = false;
        for p in 0..self.problems.len() {
            for a in 0..self.arrows[p].len() {
                if !self.arrows[p][a].is_isomorphism() {
                    continue;
                }
                let why = format!("R3 isomorphism {} -> {}", self.slot(p, a).label, self.slot(p, a + 1).label);
                if let Some(g) = self.slot_value(p, a) {
                    changed |= self.assign_slot(p, a + 1, &g, &why)?;
                }
                if let Some(g) = self.slot_value(p, a + 1) {
                    changed |= self.assign_slot(p, a, &g, &why)?;
                }
            }
        }
        Ok(changed)
    }

    fn r4(&mut self) -> Step {
        let mut changed = false;
        for p in 0..self.problems.len() {
            for a in 0..self.arrows[p].len() {
                let st = self.arrows[p][a];
                let (Some(x), Some(y)) = (self.slot_value(p, a), self.slot_value(p, a + 1)) else {
                    continue;
                };
                if x != y {
                    continue;
                }
                if st.surjective && !st.injective {
                    changed |= self.mark(p, a, false, true, false, "R4 surjection between isomorphic groups")?;
                }
                if st.injective && !st.surjective && x.rank() == 0 {
                    changed |= self.mark(p, a, false, false, true, "R4 injection between isomorphic finite groups")?;
                }
            }
        }
        Ok(changed)
    }

    fn r5(&mut self) -> Step {
        let mut changed = false;
        for p in 0..self.problems.len() {
            let n = self.problems[p].slots.len();
            // stretches of slots strictly between zero arrows
            let mut start = 0;
            for a in 0..n {
                let cut = a == n - 1 || self.arrows[p][a].zero;
                if !cut {
                    continue;
                }
                changed |= self.rank_stretch(p, start, a)?;
                start = a + 1;
            }
        }
        Ok(changed)
    }

    /// Alternating rank sum over slots `lo..=hi`.
    fn rank_stretch(&mut self, p: usize, lo: usize, hi: usize) -> Step {
        let mut total: i64 = 0;
        let mut unknown: Option<(usize, i64)> = None;
        for i in lo..=hi {
            let sign = if (i - lo).is_multiple_of(2) { 1 } else { -1 };
            match self.slot_rank(p, i) {
                Some(r) => total += sign * r as i64,
                None if unknown.is_none() => unknown = Some((i, sign)),
                None => return Ok(false),
            }
        }
        let span = format!("{}..{}", self.where_(p, lo), self.slot(p, hi).label);
        let Some((i, sign)) = unknown else {
            if total != 0 {
                return Err(contradiction(format!("R5 alternating rank sum {total} over {span}")));
            }
            return Ok(false);
        };
        // sign·rank(slot i) + total = 0
        let slot_rank = -sign * total;
        let mut known = 0i64;
        let mut open = Vec::new();
        for t in &self.slot(p, i).terms {
            match t {
                Term::Known(g) => known += g.rank() as i64,
                Term::Var(v) => match self.vars[v].rank {
                    Some(r) => known += r as i64,
                    None => open.push(v.clone()),
                },
            }
        }
        let r = slot_rank - known;
        if r < 0 {
            return Err(contradiction(format!("R5 negative rank {r} forced at {}", self.where_(p, i))));
        }
        match open.as_slice() {
            [v] => self.set_rank(v, r as usize, &format!("R5 ranks over {span}")),
            _ if r == 0 => {
                let mut changed = false;
                for v in &open {
                    changed |= self.set_rank(v, 0, &format!("R5 ranks over {span}"))?;
                }
                Ok(changed)
            }
            _ => Ok(false),
        }
    }

    fn apply(&mut self, rule: Rule) -> Step {
        match rule {
            Rule::R1 => self.r1(),
            Rule::R2 => self.r2(),
            Rule::R3 => self.r3(),
            Rule::R4 => self.r4(),
            Rule::R5 => self.r5(),
        }
    }
}

/// Solve a system of sequences sharing unknowns, firing rules in the
/// given order until nothing changes.
pub fn solve_system(problems: &[ExactSeqProblem], given: &[Given], order: &[Rule]) -> Result<Solution, SolveError> {
    let mut st = State::new(problems);
    for g in given {
        if !st.vars.contains_key(&g.var) {
            st.vars.insert(g.var.clone(), VarInfo::default());
        }
        st.set_var(&g.var, g.value.clone(), &format!("given: {}", g.reason))?;
    }
    st.apply_facts()?;
    loop {
        let mut changed = false;
        for &r in order {
            changed |= st.apply(r)?;
        }
        if !changed {
            break;
        }
    }
    let mut values = BTreeMap::new();
    let mut unresolved = Vec::new();
    for (k, info) in &st.vars {
        match &info.value {
            Some(v) => {
                values.insert(k.clone(), v.clone());
            }
            None => unresolved.push(k.clone()),
        }
    }
    Ok(Solution {
        values,
        unresolved,
        arrows: st.arrows,
        trace: st.trace,
    })
}

/// Solve one sequence with the standard rule order.
pub fn solve_exact(problem: &ExactSeqProblem) -> Result<Solution, SolveError> {
    solve_system(std::slice::from_ref(problem), &[], &Rule::ALL)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(r: usize) -> FGAbelian {
        FGAbelian::free(r)
    }

    fn iso(arrow: usize) -> ArrowFact {
        ArrowFact {
            arrow,
            fact: MapFact::IsIsomorphism,
            reason: "test".into(),
        }
    }

    #[test]
    fn splits_free_quotient() {
        let p = ExactSeqProblem::new(
            "s",
            vec![Slot::zero(), Slot::known("A", z(2)), Slot::var("G"), Slot::known("C", z(2)), Slot::zero()],
            vec![],
        )
        .unwrap();
        let s = solve_exact(&p).unwrap();
        assert_eq!(s.value("G"), Some(&z(4)));
    }

    #[test]
    fn kernel_of_isomorphism_vanishes() {
        let p = ExactSeqProblem::new(
            "s",
            vec![Slot::zero(), Slot::var("H"), Slot::known("X", z(2)), Slot::known("Y", z(2)), Slot::zero()],
            vec![iso(2)],
        )
        .unwrap();
        assert_eq!(solve_exact(&p).unwrap().value("H"), Some(&FGAbelian::zero()));
    }

    #[test]
    fn short_sequence_is_isomorphism() {
        let p = ExactSeqProblem::new("s", vec![Slot::zero(), Slot::known("Z", z(1)), Slot::var("X"), Slot::zero()], vec![])
            .unwrap();
        let s = solve_exact(&p).unwrap();
        assert_eq!(s.value("X"), Some(&z(1)));
        assert!(s.arrows[0][1].is_isomorphism());
    }

    #[test]
    fn summand_with_unknown() {
        // 0 → Z² → X ⊕ Z² → Z² → 0 gives X = Z²
        let p = ExactSeqProblem::new(
            "s",
            vec![
                Slot::zero(),
                Slot::known("I", z(2)),
                Slot::sum("S", vec![Term::Var("X".into()), Term::Known(z(2))]),
                Slot::known("U", z(2)),
                Slot::zero(),
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(solve_exact(&p).unwrap().value("X"), Some(&z(2)));
    }

    #[test]
    fn torsion_quotient_is_underdetermined() {
        // 0 → Z → G → Z/2 → 0: G is Z or Z ⊕ Z/2
        let p = ExactSeqProblem::new(
            "s",
            vec![Slot::zero(), Slot::known("A", z(1)), Slot::var("G"), Slot::known("C", FGAbelian::cyclic(2)), Slot::zero()],
            vec![],
        )
        .unwrap();
        let s = solve_exact(&p).unwrap();
        assert!(!s.is_complete());
        assert_eq!(s.unresolved, vec!["G".to_string()]);
    }

    #[test]
    fn rank_contradiction() {
        let p = ExactSeqProblem::new(
            "s",
            vec![Slot::zero(), Slot::known("A", z(1)), Slot::known("B", z(3)), Slot::known("C", z(1)), Slot::zero()],
            vec![],
        )
        .unwrap();
        assert!(matches!(solve_exact(&p), Err(SolveError::Contradiction(_))));
    }

    #[test]
    fn declared_fact_contradiction() {
        let p = ExactSeqProblem::new(
            "s",
            vec![Slot::zero(), Slot::known("A", z(1)), Slot::known("B", z(1)), Slot::zero()],
            vec![ArrowFact {
                arrow: 1,
                fact: MapFact::IsZero,
                reason: "test".into(),
            }],
        )
        .unwrap();
        assert!(matches!(solve_exact(&p), Err(SolveError::Contradiction(_))));
    }

    #[test]
    fn malformed() {
        assert!(ExactSeqProblem::new("s", vec![Slot::var("X"), Slot::zero()], vec![]).is_err());
        assert!(ExactSeqProblem::new("s", vec![Slot::zero(), Slot::zero()], vec![iso(1)]).is_err());
    }

    #[test]
    fn hopfian_surjection() {
        // 0 → K → Z² → Z² → 0 with the middle map onto: K = 0
        let p = ExactSeqProblem::new(
            "s",
            vec![Slot::zero(), Slot::var("K"), Slot::known("X", z(2)), Slot::known("Y", z(2)), Slot::zero()],
            vec![],
        )
        .unwrap();
        let s = solve_exact(&p).unwrap();
        assert_eq!(s.value("K"), Some(&FGAbelian::zero()));
    }
}
