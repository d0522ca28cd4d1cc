use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffring::{Chart, ChartRef, CoeffNumber, Rational, ScalarExpr};
use crate::extalg::{ChartMap, DiffForm, VectorField};

use super::result::{check_range, Checks, Limits, ScenarioError, VerificationResult};

/// The ambient forms on ℂⁿ with radical `rho = ‖z‖`.
#[derive(Clone, Debug)]
pub struct SphereContext {
    pub n: usize,
    pub chart: ChartRef,
    pub alpha_std: DiffForm,
    pub alpha_minus_tilde: DiffForm,
    pub omega_minus: DiffForm,
    pub f: ScalarExpr,
    pub f_bar: ScalarExpr,
    pub x_l: VectorField,
}

fn var(chart: &ChartRef, name: &str) -> ScalarExpr {
    ScalarExpr::var(chart, name).expect("chart variable")
}

fn dvar(chart: &ChartRef, name: &str) -> DiffForm {
    DiffForm::dvar(chart, name).expect("chart variable")
}

fn d(f: &ScalarExpr) -> DiffForm {
    DiffForm::function(f).exterior_derivative()
}

fn times(f: &ScalarExpr, a: &DiffForm) -> DiffForm {
    a.mul_function(f).expect("same chart")
}

impl SphereContext {
    pub fn new(n: usize) -> Self {
        let chart = Chart::complex_n(&format!("C{n}"), n, true).expect("chart");
        Self::on_chart(&chart)
    }

    fn on_chart(chart: &ChartRef) -> Self {
        let n = chart.complex_dim();
        let i = CoeffNumber::i();
        let mut alpha_std = DiffForm::zero(chart);
        let mut f = ScalarExpr::zero(chart);
        for j in 1..=n {
            let (z, zb) = (format!("z{j}"), format!("zb{j}"));
            let t = &times(&var(chart, &z), &dvar(chart, &zb)) - &times(&var(chart, &zb), &dvar(chart, &z));
            alpha_std = &alpha_std + &t;
            f = &f + &var(chart, &z).pow(2);
        }
        let alpha_std = alpha_std.scale(&i);
        let f_bar = f.conjugate();
        let rho = ScalarExpr::rho(chart).expect("radical");
        let big_f = &f / &rho;
        let big_fb = &f_bar / &rho;
        let twist = (&times(&big_f, &d(&big_fb)) - &times(&big_fb, &d(&big_f))).scale(&i);
        let alpha_minus_tilde = &alpha_std - &twist;
        let omega_minus = alpha_minus_tilde.exterior_derivative();
        SphereContext {
            n,
            chart: chart.clone(),
            alpha_std,
            alpha_minus_tilde,
            omega_minus,
            f,
            f_bar,
            x_l: VectorField::half_euler(chart),
        }
    }

    /// `dz1 ∧ dzb1 ∧ … ∧ dzn ∧ dzbn`.
    pub fn volume_basis(&self) -> DiffForm {
        let idx: Vec<usize> = (0..self.chart.num_vars()).collect();
        DiffForm::monomial(&self.chart, &idx, ScalarExpr::one(&self.chart)).expect("indices")
    }

    /// `−(2i)ⁿ n! (c·N² − 2 f f̄) / N²` with `c = 3` for the true identity.
    fn top_coefficient(&self, c: i64) -> ScalarExpr {
        let ch = &self.chart;
        let n = self.n as u32;
        let two_i = CoeffNumber::gaussian(Rational::zero(), Rational::from(2));
        let mut lead = CoeffNumber::one();
        for _ in 0..n {
            lead = &lead * &two_i;
        }
        let fact: i64 = (1..=self.n as i64).product();
        let lead = -(&lead * &CoeffNumber::int(fact));
        let norm = ScalarExpr::norm_squared(ch);
        let n2 = norm.pow(2);
        let body = &n2.scale_int(c) - &(&self.f * &self.f_bar).scale_int(2);
        (&body / &n2).scale(&lead)
    }
}

/// Points on the unit sphere in ℂⁿ with rational coordinates, from inverse
/// stereographic projection of random rational points of ℝ^{2n−1}.
pub fn sphere_points(n: usize, count: usize, seed: u64) -> Vec<Vec<CoeffNumber>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u: Vec<Rational> = (0..2 * n - 1)
                .map(|_| Rational::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=7)))
                .collect();
            let s = u.iter().fold(Rational::zero(), |acc, x| &acc + &(x * x));
            let den = &s + &Rational::one();
            let mut real: Vec<Rational> = u.iter().map(|x| &(x * &Rational::from(2)) / &den).collect();
            real.push(&(&s - &Rational::one()) / &den);
            real.chunks(2)
                .map(|p| CoeffNumber::gaussian(p[0].clone(), p[1].clone()))
                .collect()
        })
        .collect()
}

fn liouville(n: usize, limits: &Limits, factor: i64, name: &str) -> Result<VerificationResult, ScenarioError> {
    check_range("n", n, 2, limits.liouville)?;
    let mut checks = Checks::new(name, &[("n", n.to_string())]);
    let ctx = SphereContext::new(n);
    let x = ctx.x_l.scale(&CoeffNumber::int(factor));
    let paired = ctx.omega_minus.interior_product(&x)?;
    checks.form("i_X omega_minus - alpha_minus_tilde", &(&paired - &ctx.alpha_minus_tilde));
    Ok(checks.finish())
}

/// `ι_{X_L} ω₋ = α̃₋` on ℂⁿ.
pub fn verify_liouville_pairing(n: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    liouville(n, limits, 1, "liouville-pairing")
}

/// Negative control: the field doubled, leaving residual `α̃₋`.
pub fn verify_liouville_pairing_control(n: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    liouville(n, limits, 2, "liouville-pairing/control")
}

fn top_power(n: usize, limits: &Limits, c: i64, name: &str) -> Result<VerificationResult, ScenarioError> {
    check_range("n", n, 2, limits.top_power)?;
    let mut checks = Checks::new(name, &[("n", n.to_string())]);
    let ctx = SphereContext::new(n);
    let power = ctx.omega_minus.wedge_power(n as u32)?;
    let expected = times(&ctx.top_coefficient(c), &ctx.volume_basis());
    checks.form("omega_minus^n - closed form", &(&power - &expected));

    let coeff = power.coefficient(&(0..ctx.chart.num_vars()).collect::<Vec<_>>());
    let points = sphere_points(n, 20, 0x5eed + n as u64);
    let mut zeros = 0;
    for p in &points {
        match coeff.evaluate(p) {
            Ok(v) if !v.is_zero() => {}
            Ok(_) => zeros += 1,
            Err(e) => checks.fail("sphere evaluation", e),
        }
    }
    checks.fact("top coefficient nonzero on sphere points", zeros == 0, || {
        format!("{zeros} of {} points give zero", points.len())
    });
    checks.detail(format!("top coefficient nonzero at {} rational sphere points", points.len() - zeros));
    Ok(checks.finish())
}

/// `ω₋ⁿ = −(2i)ⁿ n! ρ⁻⁴ (3ρ⁴ − 2 f f̄) dz1∧dzb1∧…`, plus nonvanishing of the
/// computed coefficient at random rational points of the unit sphere.
pub fn verify_top_power(n: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    top_power(n, limits, 3, "top-power")
}

/// Negative control: `3ρ⁴` replaced by `2ρ⁴` in the closed form.
pub fn verify_top_power_control(n: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    top_power(n, limits, 2, "top-power/control")
}

fn lagrange(n: usize, limits: &Limits, drop_last: bool, name: &str) -> Result<VerificationResult, ScenarioError> {
    check_range("n", n, 2, limits.lagrange)?;
    let mut checks = Checks::new(name, &[("n", n.to_string())]);
    let ch = Chart::complex_n(&format!("C{n}"), n, false).expect("chart");
    let z = |j: usize| var(&ch, &format!("z{j}"));
    let zb = |j: usize| var(&ch, &format!("zb{j}"));
    let norm = ScalarExpr::norm_squared(&ch);
    let f = (1..=n).fold(ScalarExpr::zero(&ch), |acc, j| &acc + &z(j).pow(2));
    let ff = &f * &f.conjugate();
    let lhs = &norm.pow(2) - &ff;

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n {
            pairs.push((j, k));
        }
    }
    if drop_last {
        pairs.pop();
    }
    let mut rhs = ScalarExpr::zero(&ch);
    for &(j, k) in &pairs {
        let w = &(&z(j) * &zb(k)) - &(&z(k) * &zb(j));
        let w_conj = &(&zb(j) * &z(k)) - &(&zb(k) * &z(j));
        checks.scalar(&format!("factor ({j},{k}) is w*conj(w)"), &(&w.conjugate() - &w_conj));
        rhs = &rhs + &(&w * &w_conj);
    }
    checks.scalar("N^2 - f fbar - sum |w_jk|^2", &(&lhs - &rhs));
    // 3N² − 2 f f̄ = N² + 2 Σ|w_jk|², a positive term plus a certified square sum
    let three = &norm.pow(2).scale_int(3) - &ff.scale_int(2);
    checks.scalar("3N^2 - 2 f fbar - (N^2 + 2 sum |w_jk|^2)", &(&three - &(&norm.pow(2) + &rhs.scale_int(2))));
    checks.detail(format!(
        "3N^2 - 2|f|^2 = N^2 + 2 * (sum of {} squared moduli)",
        pairs.len()
    ));
    Ok(checks.finish())
}

/// `N² − f f̄ = Σ_{j<k} |z_j zb_k − z_k zb_j|²` and the resulting
/// decomposition of `3N² − 2 f f̄`.
pub fn verify_lagrange_certificate(n: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    lagrange(n, limits, false, "lagrange-certificate")
}

/// Negative control: the last square dropped from the sum.
pub fn verify_lagrange_certificate_control(n: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    lagrange(n, limits, true, "lagrange-certificate/control")
}

fn embedding(k: usize, j: usize, limits: &Limits, inserted: i64, name: &str) -> Result<VerificationResult, ScenarioError> {
    check_range("k", k, 2, limits.embedding)?;
    check_range("j", j, 1, k + 1)?;
    let mut checks = Checks::new(name, &[("k", k.to_string()), ("j", j.to_string())]);
    let low = SphereContext::new(k);
    let high = SphereContext::new(k + 1);
    let src = &low.chart;
    let mut images: Vec<ScalarExpr> = (1..=k).map(|i| var(src, &format!("z{i}"))).collect();
    images.insert(j - 1, ScalarExpr::int(src, inserted));
    let rho = ScalarExpr::rho(src).expect("radical");
    match ChartMap::holomorphic(src, &high.chart, images, Some(rho)) {
        Ok(map) => {
            let pulled = map.pullback(&high.alpha_minus_tilde)?;
            checks.form("pullback alpha_minus_tilde(k+1) - alpha_minus_tilde(k)", &(&pulled - &low.alpha_minus_tilde));
        }
        Err(e) => checks.fail("embedding map", e),
    }
    Ok(checks.finish())
}

/// `ι_j^* α̃₋^{(k+1)} = α̃₋^{(k)}` for the embedding inserting a zero
/// coordinate at position `j` (1-based).
pub fn verify_embedding_chain(k: usize, j: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    embedding(k, j, limits, 0, "embedding-chain")
}

/// Negative control: the inserted coordinate is the constant 1.
pub fn verify_embedding_chain_control(k: usize, j: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    embedding(k, j, limits, 1, "embedding-chain/control")
}
