//! Finitely presented groups: words, Tietze eliminations, abelianization,
//! and replays of fundamental-group computations.

pub(crate) mod replay;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::abelian::{FGAbelian, IntMatrix};

pub use replay::{
    replay_levine_criterion, replay_levine_criterion_control, replay_pi1_complement, replay_pi1_complement_control,
    replay_pi1_handlebody, replay_pi1_handlebody_control, replay_pi1_m0, replay_pi1_m0_control, surgered_m0,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
    #[error("relator uses undeclared generator {0}")]
    UndeclaredGenerator(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("no relator eliminates {0}")]
    NoEliminatingRelator(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: &str, inverse: bool) -> Self {
        Letter {
            gen: gen.to_string(),
            inverse,
        }
    }

    pub fn inv(&self) -> Letter {
        Letter {
            gen: self.gen.clone(),
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.gen)
        } else {
            f.write_str(&self.gen)
        }
    }
}

/// A word in generator names; constructors always reduce freely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters).free_reduce()
    }

    /// Parse space-separated tokens `g`, `g^-1` or `g^k`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                None => (tok, 1i64),
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| format!("bad exponent in {tok}"))?),
            };
            if !valid_name(name) {
                return Err(format!("bad generator name {name:?}"));
            }
            if exp == 0 {
                return Err(format!("zero exponent in {tok}"));
            }
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter::new(name, exp < 0));
            }
        }
        Ok(Word::new(letters))
    }

    /// Commutator `x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &str, y: &str) -> Self {
        Word::new(vec![
            Letter::new(x, false),
            Letter::new(y, false),
            Letter::new(x, true),
            Letter::new(y, true),
        ])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn free_reduce(self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in self.0 {
            if out.last().is_some_and(|p| p.gen == l.gen && p.inverse != l.inverse) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Strip inverse pairs wrapping around the ends.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.0.as_slice();
        while w.len() >= 2 && w[0].gen == w[w.len() - 1].gen && w[0].inverse != w[w.len() - 1].inverse {
            w = &w[1..w.len() - 1];
        }
        Word(w.to_vec())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inv).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let n = v.len();
            v.rotate_left(k % n);
        }
        Word(v)
    }

    pub fn occurrences(&self, gen: &str) -> usize {
        self.0.iter().filter(|l| l.gen == gen).count()
    }

    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.0
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| if l.inverse { -1 } else { 1 })
            .sum()
    }

    /// Replace every occurrence of `gen` by `w` (and `gen⁻¹` by `w⁻¹`).
    pub fn substitute(&self, gen: &str, w: &Word) -> Word {
        let winv = w.inverse();
        let mut out = Vec::new();
        for l in &self.0 {
            if l.gen == gen {
                out.extend_from_slice(if l.inverse { &winv.0 } else { &w.0 });
            } else {
                out.push(l.clone());
            }
        }
        Word::new(out)
    }

    pub fn delete_generator(&self, gen: &str) -> Word {
        Word::new(self.0.iter().filter(|l| l.gen != gen).cloned().collect())
    }

    /// Equal up to cyclic permutation and inversion.
    pub fn conjugate_equivalent(&self, other: &Word) -> bool {
        let (a, b) = (self.cyclic_reduce(), other.cyclic_reduce());
        if a.len() != b.len() {
            return false;
        }
        let binv = b.inverse();
        (0..a.len().max(1)).any(|k| {
            let r = a.rotate(k);
            r == b || r == binv
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        f.write_str(&toks.join(" "))
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

/// Outcome of [`Presentation::simplify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: Presentation,
    pub steps: Vec<String>,
}

impl Simplified {
    /// `Some(rank)` when no relators remain.
    pub fn free_rank(&self) -> Option<usize> {
        self.presentation
            .relators
            .is_empty()
            .then_some(self.presentation.generators.len())
    }
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !valid_name(g) {
                return Err(PresentationError::Parse {
                    line: 0,
                    msg: format!("bad generator name {g:?}"),
                });
            }
            if !seen.insert(g.as_str()) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            if let Some(l) = r.0.iter().find(|l| !seen.contains(l.gen.as_str())) {
                return Err(PresentationError::UndeclaredGenerator(l.gen.clone()));
            }
        }
        let relators = relators.into_iter().map(Word::free_reduce).collect();
        Ok(Presentation { generators, relators })
    }

    /// Build from generator names and relator strings; panics on bad input.
    pub fn from_strs(gens: &[&str], rels: &[&str]) -> Self {
        let rels = rels.iter().map(|r| Word::parse(r).expect("relator")).collect();
        Presentation::new(gens.iter().map(|g| g.to_string()).collect(), rels).expect("presentation")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Parse the `gens:` / `rel:` text format.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut gens: Option<Vec<String>> = None;
        let mut rels = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |msg: String| PresentationError::Parse { line: i + 1, msg };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                if gens.is_some() {
                    return Err(err("second gens: line".into()));
                }
                gens = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if let Some(rest) = line.strip_prefix("rel:") {
                if gens.is_none() {
                    return Err(err("rel: before gens:".into()));
                }
                rels.push(Word::parse(rest).map_err(err)?);
            } else {
                return Err(err(format!("unrecognised line {line:?}")));
            }
        }
        let gens = gens.ok_or(PresentationError::Parse {
            line: 0,
            msg: "missing gens: line".into(),
        })?;
        Presentation::new(gens, rels)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.generators.join(" "));
        for r in &self.relators {
            s.push_str(&format!("rel: {r}\n").replace(": \n", ":\n"));
        }
        s
    }

    /// Shortest relator (lowest index on ties) in which `gen` occurs
    /// exactly once.
    fn eliminating_relator(&self, gen: &str) -> Option<usize> {
        self.relators
            .iter()
            .enumerate()
            .filter(|(_, r)| r.occurrences(gen) == 1)
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i)
    }

    /// Tietze elimination of `gen` using a relator in which it occurs once.
    pub fn eliminate_generator(&self, gen: &str) -> Result<Presentation, PresentationError> {
        if !self.generators.iter().any(|g| g == gen) {
            return Err(PresentationError::UnknownGenerator(gen.to_string()));
        }
        let idx = self
            .eliminating_relator(gen)
            .ok_or_else(|| PresentationError::NoEliminatingRelator(gen.to_string()))?;
        let r = &self.relators[idx];
        let pos = r.0.iter().position(|l| l.gen == gen).expect("occurs once");
        let rotated = r.rotate(pos);
        let rest = Word(rotated.0[1..].to_vec());
        // g·u = 1 gives g = u⁻¹; g⁻¹·u = 1 gives g = u
        let image = if rotated.0[0].inverse { rest } else { rest.inverse() };
        let relators = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, w)| w.substitute(gen, &image))
            .collect();
        Ok(Presentation {
            generators: self.generators.iter().filter(|g| *g != gen).cloned().collect(),
            relators,
        })
    }

    /// A relator is redundant when some generator `c` has exponent sum zero
    /// in it, deleting `c` leaves a freely trivial word, and the other
    /// relators make `c` commute with every remaining letter.
    fn redundant_relator(&self) -> Option<(usize, String)> {
        for (i, r) in self.relators.iter().enumerate() {
            for c in &self.generators {
                if r.occurrences(c) == 0 || r.exponent_sum(c) != 0 {
                    continue;
                }
                if !r.delete_generator(c).cyclic_reduce().is_empty() {
                    continue;
                }
                let others: BTreeSet<&str> = r.0.iter().map(|l| l.gen.as_str()).filter(|g| g != c).collect();
                let commutes = others.iter().all(|x| {
                    let comm = Word::commutator(c, x);
                    self.relators
                        .iter()
                        .enumerate()
                        .any(|(j, w)| j != i && w.conjugate_equivalent(&comm))
                });
                if commutes {
                    return Some((i, c.clone()));
                }
            }
        }
        None
    }

    /// Deterministic simplification: repeated eliminations (shortest
    /// eligible relator first, ties by generator order), removal of
    /// trivial relators, and removal of relators that follow from
    /// commutator relators.
    pub fn simplify(&self) -> Simplified {
        let mut p = self.clone();
        let mut steps = Vec::new();
        loop {
            p.relators = p.relators.iter().map(Word::cyclic_reduce).filter(|r| !r.is_empty()).collect();
            let best = p
                .generators
                .iter()
                .enumerate()
                .filter_map(|(gi, g)| p.eliminating_relator(g).map(|ri| (p.relators[ri].len(), gi, ri)))
                .min();
            if let Some((_, gi, ri)) = best {
                let g = p.generators[gi].clone();
                steps.push(format!("eliminate {g} using {}", p.relators[ri]));
                p = p.eliminate_generator(&g).expect("eligible");
                continue;
            }
            if let Some((ri, c)) = p.redundant_relator() {
                steps.push(format!("drop {} ({c} commutes with its letters)", p.relators[ri]));
                p.relators.remove(ri);
                continue;
            }
            break;
        }
        Simplified { presentation: p, steps }
    }

    /// Exponent-sum matrix (relators × generators).
    pub fn exponent_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relators.len(), self.generators.len());
        for (i, r) in self.relators.iter().enumerate() {
            for (j, g) in self.generators.iter().enumerate() {
                m.set(i, j, BigInt::from(r.exponent_sum(g)));
            }
        }
        m
    }

    pub fn abelianization(&self) -> FGAbelian {
        let factors = self.exponent_matrix().invariant_factors();
        FGAbelian::from_cyclic_orders(self.generators.len() - factors.len(), &factors)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(Word::to_string).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}
