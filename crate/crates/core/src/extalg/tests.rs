use proptest::prelude::*;

use super::*;
use crate::coeffring::{Chart, ChartRef, CoeffNumber, ScalarExpr};

fn c2() -> ChartRef {
    Chart::complex_n("C2", 2, true).unwrap()
}

fn v(ch: &ChartRef, n: &str) -> ScalarExpr {
    ScalarExpr::var(ch, n).unwrap()
}

fn d(ch: &ChartRef, n: &str) -> DiffForm {
    DiffForm::dvar(ch, n).unwrap()
}

fn fun(f: &ScalarExpr) -> DiffForm {
    DiffForm::function(f)
}

fn times(f: &ScalarExpr, a: &DiffForm) -> DiffForm {
    a.mul_function(f).unwrap()
}

fn alpha_std(ch: &ChartRef) -> DiffForm {
    let mut a = DiffForm::zero(ch);
    for j in 1..=ch.complex_dim() {
        let (z, zb) = (format!("z{j}"), format!("zb{j}"));
        a = &a + &(&times(&v(ch, &z), &d(ch, &zb)) - &times(&v(ch, &zb), &d(ch, &z)));
    }
    a.scale(&CoeffNumber::i())
}

#[test]
fn wedge_basics() {
    let ch = c2();
    let w = d(&ch, "z1").wedge(&d(&ch, "zb1")).unwrap();
    assert_eq!(w, DiffForm::basis(&ch, &["z1", "zb1"]).unwrap());
    assert_eq!(w.coefficient(&[0, 1]), ScalarExpr::one(&ch));
    assert!(d(&ch, "z1").wedge(&d(&ch, "z1")).unwrap().is_zero());
    // reorder dzb1 ∧ dz1 = −dz1 ∧ dzb1
    let a = times(&v(&ch, "z1"), &d(&ch, "zb1"));
    let b = times(&v(&ch, "zb1"), &d(&ch, "z1"));
    let expected = times(&-(&v(&ch, "z1") * &v(&ch, "zb1")), &w);
    assert_eq!(a.wedge(&b).unwrap(), expected);
}

#[test]
fn monomial_sorts_with_sign() {
    let ch = c2();
    let f = DiffForm::basis(&ch, &["z2", "z1", "zb1"]).unwrap();
    assert_eq!(f.coefficient(&[0, 1, 2]), ScalarExpr::int(&ch, 1));
    let g = DiffForm::basis(&ch, &["zb1", "z1"]).unwrap();
    assert_eq!(g.coefficient(&[0, 1]), ScalarExpr::int(&ch, -1));
    assert!(DiffForm::basis(&ch, &["z1", "z1"]).unwrap().is_zero());
    assert!(matches!(DiffForm::basis(&ch, &["rho"]), Err(ExtError::UnknownVariable(_))));
}

#[test]
fn exterior_derivative_examples() {
    let ch = c2();
    let a = times(&v(&ch, "z1"), &d(&ch, "zb1"));
    assert_eq!(a.exterior_derivative(), DiffForm::basis(&ch, &["z1", "zb1"]).unwrap());

    let rho = ScalarExpr::rho(&ch).unwrap();
    let mut expected = DiffForm::zero(&ch);
    for j in 1..=2 {
        let (z, zb) = (format!("z{j}"), format!("zb{j}"));
        let t = &times(&v(&ch, &zb), &d(&ch, &z)) + &times(&v(&ch, &z), &d(&ch, &zb));
        expected = &expected + &t;
    }
    let expected = times(&(ScalarExpr::one(&ch) / rho.scale_int(2)), &expected);
    assert_eq!(fun(&rho).exterior_derivative(), expected);

    assert!(alpha_std(&ch).exterior_derivative().exterior_derivative().is_zero());
}

#[test]
fn interior_product_examples() {
    let ch = c2();
    let x = VectorField::half_euler(&ch);
    let two_i = ScalarExpr::constant(&ch, CoeffNumber::gaussian(0.into(), 2.into()));
    let w = times(&two_i, &DiffForm::basis(&ch, &["z1", "zb1"]).unwrap());
    // term-by-term: ι(dz1∧dzb1) = X^{z1} dzb1 − X^{zb1} dz1
    let expected = (&times(&v(&ch, "z1"), &d(&ch, "zb1")) - &times(&v(&ch, "zb1"), &d(&ch, "z1")))
        .scale(&CoeffNumber::i());
    assert_eq!(w.interior_product(&x).unwrap(), expected);

    assert!(fun(&v(&ch, "z1")).interior_product(&x).unwrap().is_zero());

    let dz1 = VectorField::coordinate(&ch, "z1").unwrap();
    let w = DiffForm::basis(&ch, &["z1", "zb1"]).unwrap();
    assert_eq!(w.interior_product(&dz1).unwrap(), d(&ch, "zb1"));
    // ι_X ι_X = 0
    let a = alpha_std(&ch).exterior_derivative();
    assert!(a.interior_product(&x).unwrap().interior_product(&x).unwrap().is_zero());
}

#[test]
fn lie_derivative_examples() {
    let r = Chart::real("R2", &["x", "y"]).unwrap();
    let x = ScalarExpr::var(&r, "x").unwrap();
    let dxdy = DiffForm::basis(&r, &["x", "y"]).unwrap();
    let dx = VectorField::coordinate(&r, "x").unwrap();
    assert_eq!(times(&x, &dxdy).lie_derivative(&dx).unwrap(), dxdy);
    let c = fun(&ScalarExpr::int(&r, 7));
    assert!(c.lie_derivative(&dx).unwrap().is_zero());
}

#[test]
fn pullback_square_map() {
    let src = Chart::real("U", &["u"]).unwrap();
    let tgt = Chart::real("X", &["x"]).unwrap();
    let u = ScalarExpr::var(&src, "u").unwrap();
    let m = ChartMap::new(&src, &tgt, vec![u.pow(2)], None).unwrap();
    let dx = DiffForm::dvar(&tgt, "x").unwrap();
    let expected = times(&u.scale_int(2), &DiffForm::dvar(&src, "u").unwrap());
    assert_eq!(m.pullback(&dx).unwrap(), expected);
}

#[test]
fn chart_map_checks() {
    let src = c2();
    let tgt = Chart::complex_n("C3", 3, true).unwrap();
    let rho = ScalarExpr::rho(&src).unwrap();
    let zero = ScalarExpr::zero(&src);
    let imgs = vec![v(&src, "z1"), v(&src, "z2"), zero.clone()];
    assert!(ChartMap::holomorphic(&src, &tgt, imgs.clone(), Some(rho.clone())).is_ok());
    assert!(ChartMap::holomorphic(&src, &tgt, imgs.clone(), None).is_err());
    let bad = vec![v(&src, "z1"), v(&src, "z2"), ScalarExpr::one(&src)];
    assert!(ChartMap::holomorphic(&src, &tgt, bad, Some(rho.clone())).is_err());
    // unpaired conjugates
    let mut raw: Vec<ScalarExpr> = Vec::new();
    for img in &imgs {
        raw.push(img.clone());
        raw.push(img.clone());
    }
    assert!(ChartMap::new(&src, &tgt, raw, Some(rho)).is_err());
}

#[test]
fn wedge_power_examples() {
    let ch = c2();
    let w = &DiffForm::basis(&ch, &["z1", "zb1"]).unwrap() + &DiffForm::basis(&ch, &["z2", "zb2"]).unwrap();
    let sq = w.wedge_power(2).unwrap();
    let expected = DiffForm::basis(&ch, &["z1", "zb1", "z2", "zb2"]).unwrap().scale(&CoeffNumber::int(2));
    assert_eq!(sq, expected);
    assert_eq!(w.wedge_power(1).unwrap(), w);
    assert_eq!(d(&ch, "z1").wedge_power(2), Err(ExtError::OddPower { degree: 1 }));
    assert_eq!(d(&ch, "z1").wedge_power(1).unwrap(), d(&ch, "z1"));
    let mixed = &w + &d(&ch, "z1");
    assert_eq!(mixed.wedge_power(2), Err(ExtError::NotHomogeneous));
}

#[test]
fn chart_mismatch_is_reported() {
    let a = d(&c2(), "z1");
    let b = d(&Chart::complex_n("C3", 3, true).unwrap(), "z1");
    assert!(matches!(a.wedge(&b), Err(ExtError::ChartMismatch { .. })));
    assert!(matches!(a.try_add(&b), Err(ExtError::ChartMismatch { .. })));
}

// Random coefficients: a small polynomial in z1, zb1, z2, zb2, optionally
// times rho, optionally over rho or (1 + N).
fn coeff(ch: &ChartRef, spec: &(Vec<(i64, [u8; 4])>, u8, u8)) -> ScalarExpr {
    let (terms, rho_mul, den) = spec;
    let mut p = ScalarExpr::zero(ch);
    for (c, e) in terms {
        let mut t = ScalarExpr::int(ch, *c);
        for (i, &k) in e.iter().enumerate() {
            t = &t * &ScalarExpr::var_at(ch, i).pow(u32::from(k));
        }
        p = &p + &t;
    }
    let rho = ScalarExpr::rho(ch).unwrap();
    if *rho_mul == 1 {
        p = &p * &rho;
    }
    match den {
        1 => &p / &rho,
        2 => &p / &(&ScalarExpr::one(ch) + &ScalarExpr::norm_squared(ch)),
        _ => p,
    }
}

type CoeffSpec = (Vec<(i64, [u8; 4])>, u8, u8);

fn coeff_spec() -> impl Strategy<Value = CoeffSpec> {
    (
        prop::collection::vec((-3i64..=3, prop::array::uniform4(0u8..=1)), 1..3),
        0u8..2,
        0u8..3,
    )
}

fn form_spec(degree: usize) -> impl Strategy<Value = Vec<(Vec<usize>, CoeffSpec)>> {
    prop::collection::vec(
        (prop::sample::subsequence(vec![0usize, 1, 2, 3], degree), coeff_spec()),
        1..3,
    )
}

fn build(ch: &ChartRef, spec: &[(Vec<usize>, CoeffSpec)]) -> DiffForm {
    let mut f = DiffForm::zero(ch);
    for (idx, c) in spec {
        f = &f + &DiffForm::monomial(ch, idx, coeff(ch, c)).unwrap();
    }
    f
}

fn field(ch: &ChartRef, spec: &[CoeffSpec]) -> VectorField {
    let mut x = VectorField::zero(ch);
    for (i, c) in spec.iter().enumerate() {
        x = x.with_component_at(i, coeff(ch, c)).unwrap();
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn d_squared_vanishes(s in (0usize..3).prop_flat_map(form_spec)) {
        let ch = c2();
        let a = build(&ch, &s);
        prop_assert!(a.exterior_derivative().exterior_derivative().is_zero());
    }

    #[test]
    fn graded_leibniz(sa in (0usize..3).prop_flat_map(form_spec), sb in (0usize..2).prop_flat_map(form_spec)) {
        let ch = c2();
        let a = build(&ch, &sa);
        let b = build(&ch, &sb);
        let deg = a.degree().unwrap();
        let lhs = a.wedge(&b).unwrap().exterior_derivative();
        let second = a.wedge(&b.exterior_derivative()).unwrap();
        let second = if deg % 2 == 1 { -second } else { second };
        let rhs = &a.exterior_derivative().wedge(&b).unwrap() + &second;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_commutativity(sa in (0usize..3).prop_flat_map(form_spec), sb in (0usize..3).prop_flat_map(form_spec)) {
        let ch = c2();
        let a = build(&ch, &sa);
        let b = build(&ch, &sb);
        let (p, q) = (a.degree().unwrap(), b.degree().unwrap());
        let ba = b.wedge(&a).unwrap();
        let ba = if (p * q) % 2 == 1 { -ba } else { ba };
        prop_assert_eq!(a.wedge(&b).unwrap(), ba);
    }

    #[test]
    fn cartan_consistency(sa in (0usize..3).prop_flat_map(form_spec), sx in prop::collection::vec(coeff_spec(), 4)) {
        let ch = c2();
        let a = build(&ch, &sa);
        let x = field(&ch, &sx);
        let lie = a.lie_derivative(&x).unwrap();
        let rhs = &a.exterior_derivative().interior_product(&x).unwrap()
            + &a.interior_product(&x).unwrap().exterior_derivative();
        prop_assert_eq!(lie, rhs);
        // interior product is nilpotent
        prop_assert!(a.interior_product(&x).unwrap().interior_product(&x).unwrap().is_zero());
    }

    #[test]
    fn pullback_is_natural(sa in (0usize..3).prop_flat_map(form_spec), sb in (0usize..2).prop_flat_map(form_spec), slot in 0usize..3) {
        // insertion of a zero coordinate C2 -> C3 preserves the radical
        let src = c2();
        let tgt = Chart::complex_n("C3", 3, true).unwrap();
        let mut imgs = vec![v(&src, "z1"), v(&src, "z2")];
        imgs.insert(slot, ScalarExpr::zero(&src));
        let m = ChartMap::holomorphic(&src, &tgt, imgs, Some(ScalarExpr::rho(&src).unwrap())).unwrap();
        // forms on C3 built from specs over its first four variables
        let a = build(&tgt, &sa.iter().map(|(i, c)| (i.iter().map(|k| k + 2).collect(), c.clone())).collect::<Vec<_>>());
        let b = build(&tgt, &sb);
        prop_assert_eq!(
            m.pullback(&a.wedge(&b).unwrap()).unwrap(),
            m.pullback(&a).unwrap().wedge(&m.pullback(&b).unwrap()).unwrap()
        );
        prop_assert_eq!(
            m.pullback(&a.exterior_derivative()).unwrap(),
            m.pullback(&a).unwrap().exterior_derivative()
        );
    }

    #[test]
    fn wedge_power_is_additive(s in form_spec(2), j in 1u32..3, k in 1u32..3) {
        let ch = Chart::complex_n("C3", 3, true).unwrap();
        let a = build(&ch, &s);
        let lhs = a.wedge_power(j + k).unwrap();
        let rhs = a.wedge_power(j).unwrap().wedge(&a.wedge_power(k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
