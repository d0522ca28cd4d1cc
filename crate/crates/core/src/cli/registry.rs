//! Named scenarios with their parameter bounds.

use std::time::Duration;

use crate::abelian;
use crate::contactlab::{self, Limits, ScenarioError, Status, VerificationResult};
use crate::grouppres;

type Runner = fn(usize, &Limits) -> Result<VerificationResult, ScenarioError>;

/// The single integer parameter a scenario takes.
#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: usize,
    pub default: usize,
    cap: fn(&Limits) -> usize,
}

impl ParamSpec {
    pub fn max(&self, limits: &Limits) -> usize {
        (self.cap)(limits)
    }
}

#[derive(Clone, Copy)]
pub struct ScenarioDescriptor {
    pub name: &'static str,
    pub module: &'static str,
    pub description: &'static str,
    pub param: Option<ParamSpec>,
    run: Runner,
    control: Runner,
}

impl ScenarioDescriptor {
    /// Run with `value` (or the default) for the parameter.
    pub fn run(&self, value: Option<usize>, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
        (self.run)(self.value(value), limits)
    }

    /// Run the negative control, which is expected to fail.
    pub fn run_control(&self, value: Option<usize>, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
        (self.control)(self.value(value), limits)
    }

    fn value(&self, value: Option<usize>) -> usize {
        value.or(self.param.map(|p| p.default)).unwrap_or(0)
    }
}

impl std::fmt::Debug for ScenarioDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScenarioDescriptor")
            .field("name", &self.name)
            .field("module", &self.module)
            .field("param", &self.param)
            .finish()
    }
}

const fn param(name: &'static str, min: usize, default: usize, cap: fn(&Limits) -> usize) -> Option<ParamSpec> {
    Some(ParamSpec { name, min, default, cap })
}

/// All insertion slots `j = 1..=k+1` folded into one record.
fn embedding_all(k: usize, limits: &Limits, control: bool) -> Result<VerificationResult, ScenarioError> {
    let mut merged: Option<VerificationResult> = None;
    let mut elapsed = Duration::ZERO;
    let mut witnesses = Vec::new();
    for j in 1..=k + 1 {
        let r = if control {
            contactlab::verify_embedding_chain_control(k, j, limits)?
        } else {
            contactlab::verify_embedding_chain(k, j, limits)?
        };
        elapsed += r.elapsed;
        if let Some(w) = &r.witness {
            witnesses.push(format!("j={j}: {w}"));
        }
        let m = merged.get_or_insert_with(|| VerificationResult {
            params: vec![("k".into(), k.to_string())],
            status: Status::Pass,
            witness: None,
            details: Vec::new(),
            ..r.clone()
        });
        if !r.passed() {
            m.status = Status::Fail;
        }
        m.details.push(format!("j={j}: {}", r.status));
    }
    let mut m = merged.expect("k >= 1 slots");
    m.elapsed = elapsed;
    m.witness = (!witnesses.is_empty()).then(|| witnesses.join("; "));
    Ok(m)
}

fn ok(r: VerificationResult) -> Result<VerificationResult, ScenarioError> {
    Ok(r)
}

/// Every scenario, in report order.
pub fn registry() -> &'static [ScenarioDescriptor] {
    const REGISTRY: &[ScenarioDescriptor] = &[
        ScenarioDescriptor {
            name: "liouville-pairing",
            module: "contactlab",
            description: "interior product of the Liouville field X_L = r/2 d/dr with omega_- equals alpha~_-",
            param: param("n", 2, 2, |l| l.liouville),
            run: contactlab::verify_liouville_pairing,
            control: contactlab::verify_liouville_pairing_control,
        },
        ScenarioDescriptor {
            name: "top-power",
            module: "contactlab",
            description: "omega_-^n = -(2i)^n n! rho^-4 (3 rho^4 - 2 f fbar) times the volume form",
            param: param("n", 2, 2, |l| l.top_power),
            run: contactlab::verify_top_power,
            control: contactlab::verify_top_power_control,
        },
        ScenarioDescriptor {
            name: "lagrange-certificate",
            module: "contactlab",
            description: "|z|^4 - |f|^2 as a sum of squared moduli (Cauchy-Schwarz certificate)",
            param: param("n", 2, 2, |l| l.lagrange),
            run: contactlab::verify_lagrange_certificate,
            control: contactlab::verify_lagrange_certificate_control,
        },
        ScenarioDescriptor {
            name: "embedding-chain",
            module: "contactlab",
            description: "inserting a zero coordinate pulls alpha~_- in dimension k+1 back to dimension k, every slot",
            param: param("k", 2, 2, |l| l.embedding),
            run: |k, l| embedding_all(k, l, false),
            control: |k, l| embedding_all(k, l, true),
        },
        ScenarioDescriptor {
            name: "stereographic-image",
            module: "contactlab",
            description: "the stereographic disk lies on the unit sphere with equal middle components",
            param: None,
            run: |_, _| ok(contactlab::verify_stereographic_image()),
            control: |_, _| ok(contactlab::verify_stereographic_image_control()),
        },
        ScenarioDescriptor {
            name: "disk-pullback",
            module: "contactlab",
            description: "pullback of alpha_- to the stereographic disk is 4(3r^4-10r^2+3)/(1+r^2)^4 (y dx - x dy)",
            param: None,
            run: |_, _| contactlab::verify_disk_pullback(),
            control: |_, _| contactlab::verify_disk_pullback_control(),
        },
        ScenarioDescriptor {
            name: "weinstein",
            module: "contactlab",
            description: "Weinstein handle model: X is Liouville and df_W(X) is a positive sum of squares (b = 2)",
            param: param("a", 1, 1, |l| l.weinstein),
            run: |a, l| contactlab::verify_weinstein(a, 2, l),
            control: |a, l| contactlab::verify_weinstein_control(a, 2, l),
        },
        ScenarioDescriptor {
            name: "model-curve-isotropic",
            module: "contactlab",
            description: "the circle w1^2 + w2^2 = 2 is isotropic for lambda and lies in f_W = -1",
            param: None,
            run: |_, _| contactlab::verify_model_curve_isotropic(),
            control: |_, _| contactlab::verify_model_curve_isotropic_control(),
        },
        ScenarioDescriptor {
            name: "surgered-sphere",
            module: "abelian",
            description: "Mayer-Vietoris replay: surgery on a, b turns M0 into a homology 5-sphere",
            param: None,
            run: |_, _| ok(abelian::replay_surgered_sphere()),
            control: |_, _| ok(abelian::replay_surgered_sphere_control()),
        },
        ScenarioDescriptor {
            name: "handlebody",
            module: "abelian",
            description: "Mayer-Vietoris replay: H2(H) = Z, H_2n(H) = Z, and the surgered handlebody is acyclic",
            param: param("n", 2, 2, |l| l.handlebody),
            run: abelian::replay_handlebody,
            control: abelian::replay_handlebody_control,
        },
        ScenarioDescriptor {
            name: "pi1-m0",
            module: "grouppres",
            description: "<a,b,c | aba^-1b^-1c^-1> is free of rank 2 and dies after surgery on a, b",
            param: None,
            run: |_, _| ok(grouppres::replay_pi1_m0()),
            control: |_, _| ok(grouppres::replay_pi1_m0_control()),
        },
        ScenarioDescriptor {
            name: "pi1-complement",
            module: "grouppres",
            description: "the five-generator complement presentation reduces to <c,d,e | [c,d], [c,e]>",
            param: None,
            run: |_, _| ok(grouppres::replay_pi1_complement()),
            control: |_, _| ok(grouppres::replay_pi1_complement_control()),
        },
        ScenarioDescriptor {
            name: "pi1-handlebody",
            module: "grouppres",
            description: "two 2-handles along a and b kill <a, b | [a, b]>",
            param: None,
            run: |_, _| ok(grouppres::replay_pi1_handlebody()),
            control: |_, _| ok(grouppres::replay_pi1_handlebody_control()),
        },
        ScenarioDescriptor {
            name: "levine-criterion",
            module: "grouppres",
            description: "a one-generator group with abelianization Z is Z",
            param: None,
            run: |_, _| ok(grouppres::replay_levine_criterion()),
            control: |_, _| ok(grouppres::replay_levine_criterion_control()),
        },
    ];
    REGISTRY
}

pub fn find(name: &str) -> Option<&'static ScenarioDescriptor> {
    registry().iter().find(|d| d.name == name)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn names_unique() {
        let names: BTreeSet<&str> = registry().iter().map(|d| d.name).collect();
        assert_eq!(names.len(), registry().len());
        assert!(find("top-power").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn defaults_within_bounds() {
        let l = Limits::default();
        for d in registry() {
            if let Some(p) = d.param {
                assert!(p.min <= p.default && p.default <= p.max(&l), "{}", d.name);
            }
        }
    }

    #[test]
    fn embedding_merges_slots() {
        let l = Limits::default();
        let r = find("embedding-chain").unwrap().run(Some(2), &l).unwrap();
        assert!(r.passed());
        assert_eq!(r.details.len(), 3);
        assert_eq!(r.param("k"), Some("2"));
        let c = find("embedding-chain").unwrap().run_control(Some(2), &l).unwrap();
        assert!(!c.passed());
        assert!(c.witness.unwrap().starts_with("j=1"));
    }
}
