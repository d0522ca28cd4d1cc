use crate::coeffring::{Chart, ChartRef, CoeffNumber, Rational, ScalarExpr};
use crate::extalg::{ChartMap, DiffForm, VectorField};

use super::result::{check_range, Checks, Limits, ScenarioError, VerificationResult};

/// The Weinstein handle model on `ℝ^{2a + 2b}` with coordinates
/// `x1..xa, y1..ya, z1, w1, …, zb, wb`.
#[derive(Clone, Debug)]
pub struct WeinsteinContext {
    pub a: usize,
    pub b: usize,
    pub chart: ChartRef,
    pub omega: DiffForm,
    pub x: VectorField,
    pub f_w: ScalarExpr,
}

fn names(a: usize, b: usize) -> Vec<String> {
    let mut v: Vec<String> = (1..=a).map(|i| format!("x{i}")).collect();
    v.extend((1..=a).map(|i| format!("y{i}")));
    for i in 1..=b {
        v.push(format!("z{i}"));
        v.push(format!("w{i}"));
    }
    v
}

impl WeinsteinContext {
    pub fn new(a: usize, b: usize) -> Self {
        Self::with_z_weight(a, b, 2)
    }

    /// The model with the `∂_z` coefficient of the field set to `k·z`.
    fn with_z_weight(a: usize, b: usize, k: i64) -> Self {
        let chart = Chart::real(&format!("W{a}_{b}"), &names(a, b)).expect("chart");
        let v = |n: &str| ScalarExpr::var(&chart, n).expect("variable");
        let basis = |p: &str, q: &str| DiffForm::basis(&chart, &[p, q]).expect("variables");
        let quarter = CoeffNumber::frac(1, 4);
        let half = CoeffNumber::frac(1, 2);

        let mut omega = DiffForm::zero(&chart);
        let mut comps: Vec<(String, ScalarExpr)> = Vec::new();
        let mut f_w = ScalarExpr::zero(&chart);
        for i in 1..=a {
            let (x, y) = (format!("x{i}"), format!("y{i}"));
            omega = &omega + &basis(&x, &y);
            comps.push((x.clone(), v(&x).scale(&half)));
            comps.push((y.clone(), v(&y).scale(&half)));
            f_w = &f_w + &(&v(&x).pow(2) + &v(&y).pow(2)).scale(&quarter);
        }
        for i in 1..=b {
            let (z, w) = (format!("z{i}"), format!("w{i}"));
            omega = &omega + &basis(&z, &w);
            comps.push((z.clone(), v(&z).scale_int(k)));
            comps.push((w.clone(), -v(&w)));
            f_w = &f_w + &(&v(&z).pow(2) - &v(&w).pow(2).scale(&half));
        }
        let x = VectorField::from_components(&chart, comps.iter().map(|(n, c)| (n.as_str(), c.clone())))
            .expect("variables");
        WeinsteinContext {
            a,
            b,
            chart,
            omega,
            x,
            f_w,
        }
    }

    /// The primitive `λ = ι_X ω`.
    pub fn lambda(&self) -> DiffForm {
        self.omega.interior_product(&self.x).expect("same chart")
    }

    /// The weighted squares `¼x², ¼y², 4z², w²` certifying `df_W(X) > 0`
    /// away from the origin.
    pub fn transversality_squares(&self) -> Vec<(Rational, String)> {
        let mut out = Vec::new();
        for i in 1..=self.a {
            out.push((Rational::new(1, 4), format!("x{i}")));
        }
        for i in 1..=self.a {
            out.push((Rational::new(1, 4), format!("y{i}")));
        }
        for i in 1..=self.b {
            out.push((Rational::from(4), format!("z{i}")));
            out.push((Rational::one(), format!("w{i}")));
        }
        out
    }
}

fn weinstein(a: usize, b: usize, limits: &Limits, z_weight: i64, name: &str) -> Result<VerificationResult, ScenarioError> {
    check_range("a", a, 1, limits.weinstein)?;
    check_range("b", b, 1, limits.weinstein)?;
    let mut checks = Checks::new(name, &[("a", a.to_string()), ("b", b.to_string())]);
    let ctx = WeinsteinContext::with_z_weight(a, b, z_weight);
    let lie = ctx.omega.lie_derivative(&ctx.x)?;
    checks.form("L_X omega - omega", &(&lie - &ctx.omega));
    checks.form("d(i_X omega) - omega", &(&ctx.lambda().exterior_derivative() - &ctx.omega));

    let dfx = ctx.x.apply(&ctx.f_w)?;
    let squares = ctx.transversality_squares();
    let mut sos = ScalarExpr::zero(&ctx.chart);
    for (wt, v) in &squares {
        let t = ScalarExpr::var(&ctx.chart, v).expect("variable").pow(2);
        sos = &sos + &t.scale(&CoeffNumber::rational(wt.clone()));
    }
    checks.scalar("df_W(X) - weighted sum of squares", &(&dfx - &sos));
    checks.fact("square weights positive", squares.iter().all(|(w, _)| !w.is_negative() && !w.is_zero()), || {
        "nonpositive weight".into()
    });
    let rendered: Vec<String> = squares.iter().map(|(w, v)| format!("{w}*{v}^2")).collect();
    checks.detail(format!("df_W(X) = {}", rendered.join(" + ")));
    Ok(checks.finish())
}

/// `L_X ω = ω`, `d(ι_X ω) = ω`, and `df_W(X)` as a positive sum of squares.
pub fn verify_weinstein(a: usize, b: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    weinstein(a, b, limits, 2, "weinstein")
}

/// Negative control: the field's `z`-coefficient changed from `2z` to `z`.
pub fn verify_weinstein_control(a: usize, b: usize, limits: &Limits) -> Result<VerificationResult, ScenarioError> {
    weinstein(a, b, limits, 1, "weinstein/control")
}

fn model_curve(mutate: bool, name: &str) -> Result<VerificationResult, ScenarioError> {
    let mut checks = Checks::new(name, &[]);
    let ctx = WeinsteinContext::new(1, 2);
    let src = Chart::real("T", &["t"]).expect("chart");
    let t = ScalarExpr::var(&src, "t").expect("t");
    let one = ScalarExpr::one(&src);
    let den = &one + &t.pow(2);
    let w1 = (&(&one - &t.pow(2)) / &den).scale(&CoeffNumber::sqrt2());
    let w2 = (&t.scale_int(2) / &den).scale(&CoeffNumber::sqrt2());
    let zero = ScalarExpr::zero(&src);
    let z1 = if mutate { t.clone() } else { zero.clone() };
    // x1, y1, z1, w1, z2, w2
    let images = vec![zero.clone(), zero.clone(), z1, w1.clone(), zero, w2.clone()];
    let map = ChartMap::new(&src, &ctx.chart, images, None)?;

    checks.scalar("w1^2 + w2^2 - 2", &(&(&(&w1 * &w1) + &(&w2 * &w2)) - &ScalarExpr::int(&src, 2)));
    checks.form("pullback of lambda", &map.pullback(&ctx.lambda())?);
    let f_on_curve = map.pullback_function(&ctx.f_w)?;
    checks.scalar("f_W on the curve + 1", &(&f_on_curve + &one));
    checks.detail(format!("f_W along the curve = {f_on_curve}"));
    Ok(checks.finish())
}

/// The rational circle `w1² + w2² = 2` is isotropic for `λ = ι_X ω` and lies
/// in `f_W = −1`.
pub fn verify_model_curve_isotropic() -> Result<VerificationResult, ScenarioError> {
    model_curve(false, "model-curve-isotropic")
}

/// Negative control: the curve tilted out of the `w`-plane by `z1 = t`.
pub fn verify_model_curve_isotropic_control() -> Result<VerificationResult, ScenarioError> {
    model_curve(true, "model-curve-isotropic/control")
}
