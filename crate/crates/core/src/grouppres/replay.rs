use crate::abelian::FGAbelian;
use crate::contactlab::{Checks, VerificationResult};

use super::{Presentation, Word};

/// `π₁(M₀) = ⟨a,b,c | aba⁻¹b⁻¹ = c⟩`.
fn m0(mutate: bool) -> Presentation {
    let rel = if mutate { "a b a^-1 b^-1 c^-2" } else { "a b a^-1 b^-1 c^-1" };
    Presentation::from_strs(&["a", "b", "c"], &[rel])
}

/// `π₁(M₀)` with the surgery relators `a`, `b` added.
pub fn surgered_m0() -> Presentation {
    Presentation::from_strs(&["a", "b", "c"], &["a b a^-1 b^-1 c^-1", "a", "b"])
}

/// `π₁(D^{2n} × T²)` with the two 2-handles attached along `a` and `b`.
pub(crate) fn handlebody(drop_handle: bool) -> Presentation {
    let rels: &[&str] = if drop_handle { &["a b a^-1 b^-1", "a"] } else { &["a b a^-1 b^-1", "a", "b"] };
    Presentation::from_strs(&["a", "b"], rels)
}

/// The complement presentation, optionally without `ce = ec`.
fn complement(mutate: bool) -> Presentation {
    let mut rels = vec!["a b a^-1 b^-1", "c d c^-1 d^-1", "c e c^-1 e^-1", "d e d^-1 e^-1 a^-1", "b c^-1"];
    if mutate {
        rels.remove(2);
    }
    Presentation::from_strs(&["a", "b", "c", "d", "e"], &rels)
}

fn pi1_m0(mutate: bool, name: &str) -> VerificationResult {
    let mut checks = Checks::new(name, &[]);
    let p = m0(mutate);
    let s = p.simplify();
    checks.detail(format!("{p} simplifies to {}", s.presentation));
    checks.fact("relator-free of rank 2", s.free_rank() == Some(2), || {
        format!("got {}", s.presentation)
    });
    let ab = p.abelianization();
    checks.axiom("H_1(M_0) = Z^2 (stated homology of M_0)");
    checks.fact("abelianization equals H_1(M_0)", ab == FGAbelian::free(2), || format!("got {ab}"));
    let t = surgered_m0().simplify();
    checks.detail(format!("after surgery on a, b: {}", t.presentation));
    checks.fact("surgered group is trivial", t.free_rank() == Some(0), || {
        format!("got {}", t.presentation)
    });
    checks.finish()
}

/// `⟨a,b,c | aba⁻¹b⁻¹c⁻¹⟩` is free on `a, b`, and surgery on `a, b` kills it.
pub fn replay_pi1_m0() -> VerificationResult {
    pi1_m0(false, "pi1-m0")
}

/// Negative control: the relator changed to `aba⁻¹b⁻¹c⁻²`.
pub fn replay_pi1_m0_control() -> VerificationResult {
    pi1_m0(true, "pi1-m0/control")
}

fn pi1_complement(mutate: bool, name: &str) -> VerificationResult {
    let mut checks = Checks::new(name, &[]);
    let p = complement(mutate);
    let s = p.simplify();
    let target = Presentation::new(
        vec!["c".into(), "d".into(), "e".into()],
        vec![Word::commutator("c", "d"), Word::commutator("c", "e")],
    )
    .expect("target");
    checks.detail(format!("{p} simplifies to {}", s.presentation));
    for step in &s.steps {
        checks.detail(step.clone());
    }
    checks.fact("matches <c,d,e | [c,d], [c,e]>", s.presentation == target, || {
        format!("got {}", s.presentation)
    });
    let ab = s.presentation.abelianization();
    checks.fact("abelianization Z^3", ab == FGAbelian::free(3), || format!("got {ab}"));
    let ab0 = p.abelianization();
    checks.fact("abelianization preserved", ab0 == ab, || format!("{ab0} before, {ab} after"));
    checks.finish()
}

/// The five-generator complement presentation reduces to
/// `⟨c,d,e | [c,d], [c,e]⟩` with abelianization `ℤ³`.
pub fn replay_pi1_complement() -> VerificationResult {
    pi1_complement(false, "pi1-complement")
}

/// Negative control: the relation `ce = ec` omitted.
pub fn replay_pi1_complement_control() -> VerificationResult {
    pi1_complement(true, "pi1-complement/control")
}

fn pi1_handlebody(drop_handle: bool, name: &str) -> VerificationResult {
    let mut checks = Checks::new(name, &[]);
    checks.axiom("pi_1(D^2n x T^2) = <a, b | [a, b]>; the 2n-handle does not change pi_1");
    let p = handlebody(drop_handle);
    let s = p.simplify();
    checks.detail(format!("{p} simplifies to {}", s.presentation));
    checks.fact("trivial presentation", s.free_rank() == Some(0), || {
        format!("got {}", s.presentation)
    });
    checks.finish()
}

/// The two 2-handles kill `π₁(D^{2n} × T²)`.
pub fn replay_pi1_handlebody() -> VerificationResult {
    pi1_handlebody(false, "pi1-handlebody")
}

/// Negative control: only the handle along `a` attached.
pub fn replay_pi1_handlebody_control() -> VerificationResult {
    pi1_handlebody(true, "pi1-handlebody/control")
}

fn levine(p: Presentation, name: &str) -> VerificationResult {
    let mut checks = Checks::new(name, &[]);
    checks.axiom("H_1 of the complement is Z");
    checks.axiom("pi_1 of the complement is generated by c (geometric argument)");
    let s = p.simplify();
    checks.detail(format!("{p} simplifies to {}", s.presentation));
    checks.fact("at most one generator", s.presentation.generators().len() <= 1, || {
        format!("got {}", s.presentation)
    });
    let ab = s.presentation.abelianization();
    checks.fact("abelianization matches H_1 = Z", ab == FGAbelian::free(1), || format!("got {ab}"));
    checks.finish()
}

/// A one-generator group whose abelianization is `ℤ` is `ℤ`.
pub fn replay_levine_criterion() -> VerificationResult {
    levine(Presentation::from_strs(&["c"], &[]), "levine-criterion")
}

/// Negative control: `⟨c | c³⟩`.
pub fn replay_levine_criterion_control() -> VerificationResult {
    levine(Presentation::from_strs(&["c"], &["c^3"]), "levine-criterion/control")
}

#[cfg(test)]
pub(crate) fn levine_from(p: Presentation) -> VerificationResult {
    levine(p, "levine-criterion")
}
