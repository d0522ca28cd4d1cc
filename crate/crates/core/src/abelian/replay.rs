//! Mayer–Vietoris replays of the surgery homology computations.

use std::collections::BTreeMap;

use crate::contactlab::{check_range, Checks, Limits, ScenarioError, VerificationResult};
use crate::grouppres;

use super::exact::{solve_system, ArrowFact, ExactSeqProblem, Given, MapFact, Rule, Slot, Solution, Term};
use super::group::FGAbelian;

/// A space in a Mayer–Vietoris sequence: homology either known (degrees
/// not listed are zero) or a family of unknowns `H_k(name)`.
#[derive(Clone, Debug)]
enum Space {
    Known(String, BTreeMap<usize, FGAbelian>),
    Unknown(String),
}

impl Space {
    fn known(name: &str, groups: &[(usize, FGAbelian)]) -> Self {
        Space::Known(name.into(), groups.iter().cloned().collect())
    }

    fn name(&self) -> &str {
        match self {
            Space::Known(n, _) | Space::Unknown(n) => n,
        }
    }

    fn term(&self, k: usize) -> Term {
        match self {
            Space::Known(_, h) => Term::Known(h.get(&k).cloned().unwrap_or_default()),
            Space::Unknown(n) => Term::Var(var(k, n)),
        }
    }
}

fn var(k: usize, space: &str) -> String {
    format!("H_{k}({space})")
}

fn z(r: usize) -> FGAbelian {
    FGAbelian::free(r)
}

/// Arrows of a Mayer–Vietoris sequence, by degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mv {
    /// `H_k(A∩B) → H_k(A) ⊕ H_k(B)`
    Inclusion(usize),
    /// `H_k(X) → H_{k-1}(A∩B)`
    Connecting(usize),
}

impl Mv {
    fn arrow(self, top: usize) -> usize {
        let base = |k: usize| 1 + 3 * (top - k);
        match self {
            Mv::Inclusion(k) => base(k),
            Mv::Connecting(k) => base(k) + 2,
        }
    }
}

const H0_INJECTIVE: &str = "H_0(A∩B) -> H_0(A) + H_0(B) is injective, so the sequence ends at H_1(X) -> 0";

/// `0 → H_top(A∩B) → … → H_1(A) ⊕ H_1(B) → H_1(X) → 0`, cut below
/// `H_1(X)` because the inclusion is injective on `H_0`.
fn mayer_vietoris(
    name: &str,
    top: usize,
    inter: &Space,
    a: &Space,
    b: &Space,
    x: &Space,
    facts: &[(Mv, MapFact, &str)],
) -> ExactSeqProblem {
    let mut slots = vec![Slot::zero()];
    for k in (1..=top).rev() {
        slots.push(Slot::sum(&var(k, inter.name()), vec![inter.term(k)]));
        slots.push(Slot::sum(
            &format!("{} + {}", var(k, a.name()), var(k, b.name())),
            vec![a.term(k), b.term(k)],
        ));
        slots.push(Slot::sum(&var(k, x.name()), vec![x.term(k)]));
    }
    slots.push(Slot::zero());
    let facts = facts
        .iter()
        .map(|&(mv, fact, reason)| ArrowFact {
            arrow: mv.arrow(top),
            fact,
            reason: reason.into(),
        })
        .collect();
    ExactSeqProblem::new(name, slots, facts).expect("well-formed sequence")
}

/// Closed orientable `dim`-manifold: `H_k ≅ H^{dim-k} ≅ F(H_{dim-k}) ⊕ T(H_{dim-k-1})`.
fn poincare_uct(dim: usize, k: usize, h: &[FGAbelian]) -> FGAbelian {
    let at = |i: Option<usize>| i.and_then(|i| h.get(i)).cloned().unwrap_or_default();
    let j = dim.checked_sub(k);
    at(j).free_part().direct_sum(&at(j.and_then(|j| j.checked_sub(1))).torsion_part())
}

fn record_axioms(checks: &mut Checks, problems: &[ExactSeqProblem], given: &[Given]) {
    for g in given {
        checks.axiom(format!("{} = {}: {}", g.var, g.value, g.reason));
    }
    for p in problems {
        for f in p.facts() {
            let s = p.slots();
            checks.axiom(format!(
                "{}: {} -> {} {:?}: {}",
                p.name,
                s[f.arrow].label,
                s[f.arrow + 1].label,
                f.fact,
                f.reason
            ));
        }
    }
}

fn run(checks: &mut Checks, step: &str, problems: &[ExactSeqProblem], given: &[Given], order: &[Rule]) -> Option<Solution> {
    record_axioms(checks, problems, given);
    match solve_system(problems, given, order) {
        Ok(sol) => {
            checks.detail(format!("{step}: {sol}"));
            if !sol.is_complete() {
                checks.fail(step, format!("underdetermined: {}", sol.unresolved.join(", ")));
                return None;
            }
            Some(sol)
        }
        Err(e) => {
            checks.fail(step, e);
            None
        }
    }
}

fn expect(checks: &mut Checks, sol: &Solution, name: &str, want: &FGAbelian) {
    let got = sol.value(name);
    checks.fact(&format!("{name} = {want}"), got == Some(want), || match got {
        Some(g) => format!("got {g}"),
        None => "undetermined".into(),
    });
}

fn given(var: &str, value: FGAbelian, reason: &str) -> Given {
    Given {
        var: var.into(),
        value,
        reason: reason.into(),
    }
}

fn surgered_sphere(mutate: bool, order: &[Rule], name: &str) -> VerificationResult {
    let mut checks = Checks::new(name, &[]);
    let h2_m0 = if mutate { z(1) } else { FGAbelian::zero() };
    let m0 = Space::known("M0", &[(1, z(2)), (2, h2_m0)]);
    let inter = Space::known("A∩B", &[(1, z(2))]);
    let b = Space::known("B", &[(1, z(2))]);
    let bt = Space::known("B~", &[]);
    let a = Space::Unknown("A".into());
    let mt = Space::Unknown("M~0".into());
    checks.axiom("H_*(M0) = (Z, Z^2, 0, 0, Z^2, Z) as stated for M0");
    checks.axiom("H_*(B) = H_*(S^1 x D^4 twice), H_*(B~) = H_*(D^2 x S^3 twice), H_*(A∩B) = H_*(S^1 x S^3 twice)");
    checks.axiom(H0_INJECTIVE);

    let pi1 = grouppres::surgered_m0().simplify();
    let h1 = pi1.presentation.abelianization();
    checks.detail(format!("pi_1(M~0): {} with abelianization {h1}", pi1.presentation));

    let problems = [
        mayer_vietoris("M0 = A ∪ B", 2, &inter, &a, &b, &m0, &[]),
        mayer_vietoris("M~0 = A ∪ B~", 2, &inter, &a, &bt, &mt, &[]),
    ];
    let inputs = [given(&var(1, "M~0"), h1, "abelianization of the simplified pi_1(M~0)")];
    let Some(sol) = run(&mut checks, "Mayer-Vietoris", &problems, &inputs, order) else {
        return checks.finish();
    };
    expect(&mut checks, &sol, "H_2(A)", &FGAbelian::zero());
    expect(&mut checks, &sol, "H_1(A)", &z(2));
    expect(&mut checks, &sol, "H_2(M~0)", &FGAbelian::zero());

    checks.axiom("M~0 is connected: H_0(M~0) = Z");
    checks.axiom("Poincare duality and universal coefficients for the closed orientable 5-manifold M~0");
    let mut h = vec![z(1), sol.value("H_1(M~0)").cloned().unwrap_or_default(), sol.value("H_2(M~0)").cloned().unwrap_or_default()];
    for k in 3..=5 {
        let g = poincare_uct(5, k, &h);
        h.push(g);
    }
    let rendered: Vec<String> = h.iter().map(FGAbelian::to_string).collect();
    checks.detail(format!("H_*(M~0) = ({})", rendered.join(", ")));
    let sphere = [z(1), FGAbelian::zero(), FGAbelian::zero(), FGAbelian::zero(), FGAbelian::zero(), z(1)];
    checks.fact("H_*(M~0) = H_*(S^5)", h == sphere, || format!("got ({})", rendered.join(", ")));
    checks.finish()
}

/// Rebuilds `H_*(M̃₀) = H_*(S⁵)` from the stated homology of `M₀`.
pub fn replay_surgered_sphere() -> VerificationResult {
    surgered_sphere(false, &Rule::ALL, "surgered-sphere")
}

/// The same replay with a caller-chosen rule firing order.
pub fn replay_surgered_sphere_with(order: &[Rule]) -> VerificationResult {
    surgered_sphere(false, order, "surgered-sphere")
}

/// Negative control: `H₂(M₀)` replaced by `ℤ`.
pub fn replay_surgered_sphere_control() -> VerificationResult {
    surgered_sphere(true, &Rule::ALL, "surgered-sphere/control")
}

fn handlebody(n: usize, mutate: bool, order: &[Rule], name: &str) -> VerificationResult {
    let mut checks = Checks::new(name, &[("n", n.to_string())]);
    let top = 2 * n + 2;
    checks.axiom("homology of D^2n x T^2, disks, spheres and their products (Kunneth)");
    checks.axiom(H0_INJECTIVE);

    // step 1: H = (D^2n x T^2) ∪ (D^2n ⊔ D^2 ⊔ D^2)
    let pi1 = grouppres::replay::handlebody(false).simplify();
    let h1 = pi1.presentation.abelianization();
    checks.detail(format!("pi_1(H): {} with abelianization {h1}", pi1.presentation));
    let a1 = Space::known("D^2n x T^2", &[(1, z(2)), (2, z(1))]);
    let b1 = Space::known("D^2n ⊔ D^2 ⊔ D^2", &[]);
    let i1 = Space::known("S^(2n-1) ⊔ S^1 ⊔ S^1", &[(1, z(2)), (2 * n - 1, z(1))]);
    let hh = Space::Unknown("H".into());
    let p1 = [mayer_vietoris("H", top, &i1, &a1, &b1, &hh, &[])];
    let g1 = [given("H_1(H)", h1, "abelianization of the simplified pi_1(H)")];
    let Some(s1) = run(&mut checks, "step 1", &p1, &g1, order) else {
        return checks.finish();
    };
    let mut h_groups = Vec::new();
    for k in 1..=top {
        let want = if k == 2 || k == 2 * n { z(1) } else { FGAbelian::zero() };
        expect(&mut checks, &s1, &var(k, "H"), &want);
        h_groups.push((k, s1.value(&var(k, "H")).cloned().unwrap_or_default()));
    }

    // step 2: H = A ∪ (S^2 x D^2n)
    let x2 = Space::known("H", &h_groups);
    let b2 = Space::known("S^2 x D^2n", &[(2, z(1))]);
    let i2 = Space::known("S^2 x S^(2n-1)", &[(2, z(1)), (2 * n - 1, z(1)), (2 * n + 1, z(1))]);
    let a2 = Space::Unknown("A".into());
    let facts2: &[(Mv, MapFact, &str)] = if mutate {
        &[]
    } else {
        &[(
            Mv::Connecting(2 * n),
            MapFact::IsIsomorphism,
            "the connecting homomorphism sends the generator of H_2n(H) to the fibre sphere",
        )]
    };
    let p2 = [mayer_vietoris("H = A ∪ B", top, &i2, &a2, &b2, &x2, facts2)];
    let Some(s2) = run(&mut checks, "step 2", &p2, &[], order) else {
        return checks.finish();
    };
    let mut a_groups = Vec::new();
    for k in 1..=top {
        let want = if k == 2 || k == 2 * n + 1 { z(1) } else { FGAbelian::zero() };
        expect(&mut checks, &s2, &var(k, "A"), &want);
        a_groups.push((k, s2.value(&var(k, "A")).cloned().unwrap_or_default()));
    }
    let carried = s2.arrows[0][Mv::Inclusion(2 * n + 1).arrow(top)].is_isomorphism();
    checks.fact("H_(2n+1)(A∩B) -> H_(2n+1)(A) derived isomorphic", carried, || "not derived".into());

    // step 3: H~ = A ∪ (D^3 x S^(2n-1))
    let a3 = Space::known("A", &a_groups);
    let b3 = Space::known("D^3 x S^(2n-1)", &[(2 * n - 1, z(1))]);
    let ht = Space::Unknown("H~".into());
    let mut facts3 = vec![
        (
            Mv::Inclusion(2),
            MapFact::IsIsomorphism,
            "iota_*: H_2(A∩B) -> H_2(A) is an isomorphism (generator of H_2(B) maps to a generator of H_2(H))",
        ),
        (Mv::Inclusion(2 * n - 1), MapFact::IsIsomorphism, "the middle map H_(2n-1)(A∩B~) -> H_(2n-1)(B~) is an isomorphism"),
    ];
    if carried {
        facts3.push((Mv::Inclusion(2 * n + 1), MapFact::IsIsomorphism, "derived in step 2"));
    }
    let p3 = [mayer_vietoris("H~ = A ∪ B~", top, &i2, &a3, &b3, &ht, &facts3)];
    let Some(s3) = run(&mut checks, "step 3", &p3, &[], order) else {
        return checks.finish();
    };
    checks.axiom("H~ is connected: H_0(H~) = Z");
    for k in 1..=top {
        expect(&mut checks, &s3, &var(k, "H~"), &FGAbelian::zero());
    }
    checks.finish()
}

/// Homology of the handlebody `H`, of `A = H − S² × D^{2n}`, and of the
/// surgered `H̃`, which is that of a point.
pub fn replay_handlebody(n: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    check_range("n", n, 2, limits.handlebody)?;
    Ok(handlebody(n, false, &Rule::ALL, "handlebody"))
}

/// The same replay with a caller-chosen rule firing order.
pub fn replay_handlebody_with(n: usize, limits: &Limits, order: &[Rule]) -> Result<VerificationResult, ScenarioError> {
    check_range("n", n, 2, limits.handlebody)?;
    Ok(handlebody(n, false, order, "handlebody"))
}

/// Negative control: the connecting homomorphism fact withheld.
pub fn replay_handlebody_control(n: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    check_range("n", n, 2, limits.handlebody)?;
    Ok(handlebody(n, true, &Rule::ALL, "handlebody/control"))
}
