use crate::coeffring::{Chart, ChartRef, CoeffNumber, Rational, ScalarExpr};
use crate::extalg::{ChartMap, DiffForm};

use super::result::{Checks, ScenarioError, VerificationResult};
use super::sphere::SphereContext;

/// The real `(x, y)` chart of the disk.
pub fn stereographic_chart() -> ChartRef {
    Chart::real("R2", &["x", "y"]).expect("chart")
}

/// The four real components of the stereographic map over
/// `√2·(1 + x² + y²)`; `flip` negates the third one.
fn components(chart: &ChartRef, flip: bool) -> [ScalarExpr; 4] {
    let x = ScalarExpr::var(chart, "x").expect("x");
    let y = ScalarExpr::var(chart, "y").expect("y");
    let one = ScalarExpr::one(chart);
    let two = ScalarExpr::int(chart, 2);
    let r2 = &(&x * &x) + &(&y * &y);
    let den = (&one + &r2).scale(&CoeffNumber::sqrt2());
    let c0 = &(&(&(&x + &one).pow(2) + &(&y * &y)) - &two) / &den;
    let c1 = &y.scale_int(2) / &den;
    let c2 = if flip { -&c1 } else { c1.clone() };
    let c3 = &(&(&(&x - &one).pow(2) + &(&y * &y)) - &two) / &den;
    [c0, c1, c2, c3]
}

fn map_from(chart: &ChartRef, c: &[ScalarExpr; 4]) -> Result<ChartMap, crate::extalg::ExtError> {
    let target = SphereContext::new(2).chart;
    let i = CoeffNumber::i();
    let z1 = &c[0] + &c[1].scale(&i);
    let z2 = &c[2] + &c[3].scale(&i);
    ChartMap::holomorphic(chart, &target, vec![z1, z2], Some(ScalarExpr::one(chart)))
}

/// Stereographic parametrisation of the unit sphere in the hyperplane
/// `Im z1 = Re z2` of ℂ², with `rho ↦ 1`.
pub fn build_stereographic() -> ChartMap {
    let chart = stereographic_chart();
    map_from(&chart, &components(&chart, false)).expect("stereographic map lands on the unit sphere")
}

fn stereographic(flip: bool, name: &str) -> VerificationResult {
    let chart = stereographic_chart();
    let c = components(&chart, flip);
    let mut checks = Checks::new(name, &[]);
    let norm = c.iter().fold(ScalarExpr::zero(&chart), |acc, t| &acc + &(t * t));
    checks.scalar("|Phi|^2 - 1", &(&norm - &ScalarExpr::one(&chart)));
    checks.scalar("component 2 - component 3", &(&c[1] - &c[2]));
    if let Err(e) = map_from(&chart, &c) {
        checks.fail("chart map", e);
    }
    let origin = [CoeffNumber::zero(), CoeffNumber::zero()];
    let at0: Vec<String> = c
        .iter()
        .map(|t| t.evaluate(&origin).map_or_else(|e| e.to_string(), |v| v.to_string()))
        .collect();
    checks.detail(format!("Phi(0,0) = ({})", at0.join(", ")));
    checks.finish()
}

/// `‖Φ‖² = 1` and equal middle components.
pub fn verify_stereographic_image() -> VerificationResult {
    stereographic(false, "stereographic-image")
}

/// Negative control: the third component negated.
pub fn verify_stereographic_image_control() -> VerificationResult {
    stereographic(true, "stereographic-image/control")
}

/// `4(3s² − 10s + 3)/(1 + s)⁴` on a one-variable chart in `s = r²`.
fn displayed_profile() -> (ChartRef, ScalarExpr) {
    let ch = Chart::real("S", &["s"]).expect("chart");
    let s = ScalarExpr::var(&ch, "s").expect("s");
    let quartic = &(&s.pow(2).scale_int(3) - &s.scale_int(10)) + &ScalarExpr::int(&ch, 3);
    let den = (&ScalarExpr::one(&ch) + &s).pow(4);
    (ch, &quartic.scale_int(4) / &den)
}

fn disk(flip: bool, name: &str) -> Result<VerificationResult, ScenarioError> {
    let chart = stereographic_chart();
    let mut checks = Checks::new(name, &[]);
    let map = map_from(&chart, &components(&chart, flip))?;
    let ctx = SphereContext::new(2);
    let pulled = map.pullback(&ctx.alpha_minus_tilde)?;

    let x = ScalarExpr::var(&chart, "x").expect("x");
    let y = ScalarExpr::var(&chart, "y").expect("y");
    let r2 = &(&x * &x) + &(&y * &y);
    let one = ScalarExpr::one(&chart);
    let profile = &(&(&r2.pow(2).scale_int(3) - &r2.scale_int(10)) + &ScalarExpr::int(&chart, 3)).scale_int(4)
        / &(&one + &r2).pow(4);
    let dx = DiffForm::dvar(&chart, "x")?;
    let dy = DiffForm::dvar(&chart, "y")?;
    let rotation = &dx.mul_function(&y)? - &dy.mul_function(&x)?;
    let displayed = rotation.mul_function(&profile)?;
    checks.form("Phi^* alpha_minus - displayed form", &(&pulled - &displayed));

    // Report the computed pullback in the same shape.
    let g = &pulled.coefficient(&[0]) / &y;
    let proportional = rotation.mul_function(&g)?;
    checks.form("Phi^* alpha_minus is a multiple of (y dx - x dy)", &(&pulled - &proportional));
    checks.detail(format!("computed Phi^* alpha_minus = ({g}) (y dx - x dy)"));
    if !profile.is_zero() {
        let ratio = &g / &profile;
        checks.detail(format!("computed / displayed coefficient = {ratio}"));
    }

    let (sch, shown) = displayed_profile();
    let s = ScalarExpr::var(&sch, "s").expect("s");
    let quartic = &(&s.pow(2).scale_int(3) - &s.scale_int(10)) + &ScalarExpr::int(&sch, 3);
    let factored = &(&s.scale_int(3) - &ScalarExpr::one(&sch)) * &(&s - &ScalarExpr::int(&sch, 3));
    checks.scalar("3s^2 - 10s + 3 - (3s - 1)(s - 3)", &(&quartic - &factored));
    for (label, sval) in [("1/3", Rational::new(1, 3)), ("3", Rational::from(3))] {
        let v = shown.evaluate(&[CoeffNumber::rational(sval)]).map_err(crate::extalg::ExtError::from)?;
        checks.fact(&format!("profile vanishes at r^2 = {label}"), v.is_zero(), || format!("value {v}"));
    }
    let at1 = shown.evaluate(&[CoeffNumber::one()]).map_err(crate::extalg::ExtError::from)?;
    checks.fact("profile at r^2 = 1 equals -1", at1 == CoeffNumber::int(-1), || format!("value {at1}"));
    checks.detail("zero set: origin and circles r^2 = 1/3, r^2 = 3");
    Ok(checks.finish())
}

/// `Φ*α₋ = 4(3r⁴ − 10r² + 3)/(1 + r²)⁴ (y dx − x dy)` together with the
/// factorisation and zero set of the profile.
pub fn verify_disk_pullback() -> Result<VerificationResult, ScenarioError> {
    disk(false, "disk-pullback")
}

/// Negative control: pullback along the map with the third component
/// negated.
pub fn verify_disk_pullback_control() -> Result<VerificationResult, ScenarioError> {
    disk(true, "disk-pullback/control")
}
