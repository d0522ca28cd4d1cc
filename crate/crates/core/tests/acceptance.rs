//! Acceptance suite: one line per criterion, run with `harness = false`.
//!
//! Criterion 4 is a known failure: the pullback computed from the defining
//! formula is exactly twice the displayed profile. It is reported as FAIL
//! and the run only errors if it starts passing or if anything else fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use contactcheck::abelian::{replay_handlebody, replay_surgered_sphere, smith_normal_form, IntMatrix};
use contactcheck::cli::registry;
use contactcheck::coeffring::{Chart, ChartRef, ScalarExpr};
use contactcheck::contactlab::{
    verify_disk_pullback, verify_embedding_chain, verify_lagrange_certificate, verify_liouville_pairing,
    verify_model_curve_isotropic, verify_stereographic_image, verify_top_power, verify_weinstein, Limits,
    VerificationResult,
};
use contactcheck::extalg::DiffForm;
use contactcheck::grouppres::{
    replay_levine_criterion, replay_pi1_complement, replay_pi1_handlebody, replay_pi1_m0, Presentation, Word,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_FAILING: &[usize] = &[4];

type Outcome = Result<String, String>;

type Criterion = (usize, &'static str, fn() -> Outcome);

fn require(r: &VerificationResult, budget: Duration) -> Result<(), String> {
    let label = format!("{}{:?}", r.scenario, r.params);
    if !r.passed() {
        return Err(format!("{label}: {}", r.witness.clone().unwrap_or_default()));
    }
    if r.elapsed > budget {
        return Err(format!("{label}: {:?} over budget {budget:?}", r.elapsed));
    }
    Ok(())
}

fn has_detail(r: &VerificationResult, needle: &str) -> Result<(), String> {
    if r.details.iter().any(|d| d.contains(needle)) {
        Ok(())
    } else {
        Err(format!("{}: no detail containing {needle:?}", r.scenario))
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1_top_power() -> Outcome {
    let l = Limits::default();
    for (n, budget) in [(2, secs(1)), (3, secs(1)), (4, secs(120))] {
        require(&verify_top_power(n, &l).map_err(|e| e.to_string())?, budget)?;
    }
    Ok("n = 2, 3, 4 exact".into())
}

fn c2_liouville() -> Outcome {
    let l = Limits::default();
    for n in 2..=4 {
        require(&verify_liouville_pairing(n, &l).map_err(|e| e.to_string())?, secs(5))?;
    }
    Ok("n = 2, 3, 4 exact".into())
}

fn c3_lagrange() -> Outcome {
    let l = Limits::default();
    for n in 2..=5 {
        require(&verify_lagrange_certificate(n, &l).map_err(|e| e.to_string())?, secs(5))?;
    }
    Ok("n = 2..5 exact".into())
}

fn c4_disk() -> Outcome {
    require(&verify_stereographic_image(), secs(5))?;
    let r = verify_disk_pullback().map_err(|e| e.to_string())?;
    has_detail(&r, "zero set")?;
    match &r.witness {
        None => Ok("image, pullback, factorisation and zero set exact".into()),
        Some(w) => {
            let ratio = r.details.iter().find(|d| d.contains("coefficient =")).cloned().unwrap_or_default();
            Err(format!("image and factorisation pass; pullback differs from displayed form ({ratio}); {}",
                w.split(':').next().unwrap_or("")))
        }
    }
}

fn c5_embedding() -> Outcome {
    let l = Limits::default();
    let start = Instant::now();
    let mut runs = 0;
    for k in 2..=5 {
        for j in 1..=k + 1 {
            require(&verify_embedding_chain(k, j, &l).map_err(|e| e.to_string())?, secs(10))?;
            runs += 1;
        }
    }
    let total = start.elapsed();
    if total > secs(10) {
        return Err(format!("{runs} pullbacks took {total:?}"));
    }
    Ok(format!("k = 2..5, all {runs} insertion slots, {} ms", total.as_millis()))
}

fn c6_weinstein() -> Outcome {
    let l = Limits::default();
    for a in 1..=4 {
        let r = verify_weinstein(a, 2, &l).map_err(|e| e.to_string())?;
        require(&r, secs(2))?;
        has_detail(&r, "df_W(X) = 1/4*x1^2")?;
    }
    let c = verify_model_curve_isotropic().map_err(|e| e.to_string())?;
    require(&c, secs(2))?;
    has_detail(&c, "f_W along the curve = -1")?;
    Ok("a = 1..4, model curve isotropic on f_W = -1".into())
}

fn c7_surgered_sphere() -> Outcome {
    let r = replay_surgered_sphere();
    require(&r, secs(1))?;
    has_detail(&r, "H_1(A) = Z^2")?;
    has_detail(&r, "H_2(M~0) = 0")?;
    has_detail(&r, "H_*(M~0) = (Z, 0, 0, 0, 0, Z)")?;
    if r.axioms_used.is_empty() {
        return Err("no axioms listed".into());
    }
    Ok(format!("H_*(M~0) = (Z, 0, 0, 0, 0, Z), {} axioms listed", r.axioms_used.len()))
}

fn c8_handlebody() -> Outcome {
    let l = Limits::default();
    for n in 2..=4 {
        let r = replay_handlebody(n, &l).map_err(|e| e.to_string())?;
        require(&r, secs(1))?;
        has_detail(&r, "H_2(H) = Z")?;
        has_detail(&r, &format!("H_{}(H) = Z", 2 * n))?;
        has_detail(&r, &format!("H_{}(A) = Z", 2 * n + 1))?;
        let step3 = r.details.iter().find(|d| d.starts_with("step 3")).ok_or("no step 3")?;
        if step3.contains("= Z") {
            return Err(format!("n = {n}: {step3}"));
        }
    }
    Ok("n = 2, 3, 4: H_2(H) = Z, H_2n(H) = Z, reduced H_*(H~) = 0".into())
}

fn c9_pi1() -> Outcome {
    for r in [replay_pi1_m0(), replay_pi1_complement(), replay_pi1_handlebody(), replay_levine_criterion()] {
        require(&r, secs(1))?;
    }
    let complement = replay_pi1_complement();
    has_detail(&complement, "simplifies to < c, d, e | c d c^-1 d^-1, c e c^-1 e^-1 >")?;
    Ok("m0 free of rank 2, complement reduced, handlebody trivial, Levine step".into())
}

// --- criterion 10 -------------------------------------------------------

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let rows = rng.gen_range(0..=7);
    let cols = rng.gen_range(0..=7);
    let bound = [1, 3, 20, 1000][rng.gen_range(0..4)];
    let entries = (0..rows * cols)
        .map(|_| if rng.gen_bool(0.3) { BigInt::zero() } else { BigInt::from(rng.gen_range(-bound..=bound)) })
        .collect();
    IntMatrix::from_entries(rows, cols, entries).unwrap()
}

fn check_smith(m: &IntMatrix) -> Result<(), String> {
    let f = smith_normal_form(m);
    if f.u.mul(m).unwrap().mul(&f.v).unwrap() != f.s {
        return Err(format!("U M V != S for {m:?}"));
    }
    for w in [&f.u, &f.v] {
        if !w.determinant().unwrap().abs().is_one() {
            return Err(format!("transform not unimodular for {m:?}"));
        }
    }
    let k = m.rows().min(m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = f.s.get(r, c);
            if (r != c && !v.is_zero()) || v.is_negative() {
                return Err(format!("S not a nonnegative diagonal for {m:?}"));
            }
        }
    }
    for i in 1..k {
        let (a, b) = (f.s.get(i - 1, i - 1), f.s.get(i, i));
        if !(b.is_zero() || (!a.is_zero() && b.is_multiple_of(a))) {
            return Err(format!("divisibility fails for {m:?}"));
        }
    }
    Ok(())
}

fn random_coeff(ch: &ChartRef, rng: &mut ChaCha8Rng) -> ScalarExpr {
    let mut p = ScalarExpr::zero(ch);
    for _ in 0..rng.gen_range(1..=2) {
        let mut t = ScalarExpr::int(ch, rng.gen_range(-3..=3));
        for i in 0..4 {
            t = &t * &ScalarExpr::var_at(ch, i).pow(rng.gen_range(0..=1));
        }
        p = &p + &t;
    }
    let rho = ScalarExpr::rho(ch).unwrap();
    if rng.gen_bool(0.5) {
        p = &p * &rho;
    }
    match rng.gen_range(0..3) {
        0 => &p / &rho,
        1 => &p / &(&ScalarExpr::one(ch) + &ScalarExpr::norm_squared(ch)),
        _ => p,
    }
}

fn random_form(ch: &ChartRef, degree: usize, rng: &mut ChaCha8Rng) -> DiffForm {
    let mut f = DiffForm::zero(ch);
    for _ in 0..rng.gen_range(1..=2) {
        let mut idx: Vec<usize> = rand::seq::index::sample(rng, 4, degree).into_vec();
        idx.sort_unstable();
        f = &f + &DiffForm::monomial(ch, &idx, random_coeff(ch, rng)).unwrap();
    }
    f
}

fn random_presentation(rng: &mut ChaCha8Rng) -> Presentation {
    let gens = ["a", "b", "c", "d"];
    let ngens = rng.gen_range(1..=4);
    let rels: Vec<String> = (0..rng.gen_range(0..=4))
        .map(|_| {
            let len = rng.gen_range(1..=7);
            (0..len)
                .map(|_| {
                    let g = gens[rng.gen_range(0..ngens)];
                    if rng.gen_bool(0.5) { format!("{g}^-1") } else { g.to_string() }
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let words = rels.iter().map(|r| Word::parse(r).unwrap()).collect();
    Presentation::new(gens[..ngens].iter().map(|s| s.to_string()).collect(), words).unwrap()
}

fn c10_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    const MATRICES: usize = 500;
    for _ in 0..MATRICES {
        check_smith(&random_matrix(&mut rng))?;
    }

    const FORMS: usize = 200;
    let ch = Chart::complex_n("C2", 2, true).unwrap();
    for i in 0..FORMS {
        let a = random_form(&ch, rng.gen_range(0..=2), &mut rng);
        if !a.exterior_derivative().exterior_derivative().is_zero() {
            return Err(format!("d^2 != 0 for form #{i}"));
        }
        let b = random_form(&ch, rng.gen_range(0..=1), &mut rng);
        let deg = a.degree().unwrap();
        let lhs = a.wedge(&b).unwrap().exterior_derivative();
        let second = a.wedge(&b.exterior_derivative()).unwrap();
        let second = if deg % 2 == 1 { -second } else { second };
        let rhs = &a.exterior_derivative().wedge(&b).unwrap() + &second;
        if lhs != rhs {
            return Err(format!("Leibniz fails for pair #{i}"));
        }
    }

    const PRESENTATIONS: usize = 200;
    for _ in 0..PRESENTATIONS {
        let p = random_presentation(&mut rng);
        let s = p.simplify();
        if s.presentation.abelianization() != p.abelianization() {
            return Err(format!("simplify changes the abelianization of {p}"));
        }
    }

    let l = Limits::default();
    let mut controls = 0;
    for d in registry() {
        let r = d.run_control(None, &l).map_err(|e| e.to_string())?;
        if r.passed() {
            return Err(format!("negative control {} passed", d.name));
        }
        controls += 1;
    }

    let total = start.elapsed();
    if total > secs(120) {
        return Err(format!("property suites took {total:?}"));
    }
    Ok(format!(
        "{MATRICES} SNFs, {FORMS} forms (d^2, Leibniz), {PRESENTATIONS} presentations, {controls} controls fail, {} ms",
        total.as_millis()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "top power", c1_top_power),
        (2, "Liouville pairing", c2_liouville),
        (3, "Lagrange certificate", c3_lagrange),
        (4, "stereographic disk", c4_disk),
        (5, "embedding chain", c5_embedding),
        (6, "Weinstein model", c6_weinstein),
        (7, "surgered sphere homology", c7_surgered_sphere),
        (8, "handlebody homology", c8_handlebody),
        (9, "pi_1 replays", c9_pi1),
        (10, "property suites", c10_properties),
    ];
    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let outcome = check();
        let known = KNOWN_FAILING.contains(&id);
        match &outcome {
            Ok(msg) => println!("criterion {id:>2} {name}: PASS ({msg})"),
            Err(msg) if known => println!("criterion {id:>2} {name}: FAIL, known ({msg})"),
            Err(msg) => println!("criterion {id:>2} {name}: FAIL ({msg})"),
        }
        if outcome.is_ok() == known {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
