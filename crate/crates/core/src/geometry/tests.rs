use super::*;
use crate::babylon::{ApproximationContext, IrrationalSymbol};
use crate::numerics::{ExactReal, Precision, Quantity, Rational, RoundingMode, Sexagesimal};

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn exact() -> ExactEval {
    ExactEval::default()
}

fn real(v: &Quantity) -> &ExactReal {
    v.as_real().expect("exact mode yields reals")
}

fn rat(v: &Quantity) -> &Rational {
    v.as_rational().expect("context mode yields rationals")
}

fn sexa(v: &Quantity) -> String {
    Sexagesimal::from_rational(rat(v), 8, RoundingMode::Truncate).unwrap().to_string()
}

fn tol() -> Rational {
    // 10^-(P-10) at the default precision
    Rational::new(num_bigint::BigInt::from(1), num_bigint::BigInt::from(10u8).pow(20)).unwrap()
}

#[test]
fn barley_field_in_the_standard_context() {
    let ctx = ApproximationContext::standard();
    let m = barley_field_metrics(&ContextEval::new(&ctx), &Rational::one()).unwrap();
    assert_eq!(sexa(&m.area), "0;13,20");
    assert_eq!(sexa(m.get(MetricKey::Length).unwrap()), "0;56,40");
    assert_eq!(sexa(m.get(MetricKey::Width).unwrap()), "0;23,20");
    assert_eq!(m.lengths.len(), 2);
}

#[test]
fn ox_eye_in_the_standard_context() {
    let ctx = ApproximationContext::standard();
    let m = ox_eye_metrics(&ContextEval::new(&ctx), &Rational::one()).unwrap();
    assert_eq!(rat(&m.area), &q(9, 32));
    assert_eq!(sexa(&m.area), "0;16,52,30");
    assert_eq!(sexa(m.get(MetricKey::Length).unwrap()), "0;52,30");
    assert_eq!(sexa(m.get(MetricKey::Width).unwrap()), "0;30");
}

#[test]
fn apusamikkum_in_the_standard_context() {
    let ctx = ApproximationContext::standard();
    let e = ContextEval::new(&ctx);
    let m = apusamikkum4_metrics(&e, &Rational::one()).unwrap();
    assert_eq!(sexa(&m.area), "0;26,40");
    assert_eq!(sexa(m.get(MetricKey::Diagonal).unwrap()), "1;20");
    assert_eq!(sexa(m.get(MetricKey::Transversal).unwrap()), "0;33,20");
    assert_eq!(concave_area_general(&e, 4, &Rational::one()).unwrap(), q(4, 9));
    let m3 = apusamikkum3_metrics(&e, &Rational::one()).unwrap();
    assert_eq!(rat(&m3.area), &q(1, 4));
}

#[test]
fn convex4_square_under_both_surrogates() {
    let alt = ApproximationContext::alt_sqrt3();
    let m = convex4_metrics(&ContextEval::new(&alt), &Rational::one()).unwrap();
    assert_eq!(rat(m.get(MetricKey::SquareArea).unwrap()), &q(4, 15));
    assert_eq!(sexa(m.get(MetricKey::SquareArea).unwrap()), "0;16");
    // π → 3 makes the segments vanish, so the total is the square too
    assert_eq!(rat(&m.area), &q(4, 15));
    assert!(m.get(MetricKey::SquareSide).is_none());

    let std = ApproximationContext::standard();
    let m = convex4_metrics(&ContextEval::new(&std), &Rational::one()).unwrap();
    assert_eq!(sexa(m.get(MetricKey::SquareArea).unwrap()), "0;15");
    assert_eq!(rat(m.get(MetricKey::SquareSide).unwrap()), &q(1, 2));
}

#[test]
fn convex6_hexagon_surrogates() {
    let base = ApproximationContext::standard();
    let with = |x: Rational| base.clone().with(IrrationalSymbol::Sqrt21, x).unwrap();
    let c1 = with(q(527, 115));
    let m = convex6_metrics(&ContextEval::new(&c1), &Rational::one()).unwrap();
    assert_eq!(rat(&m.area), &q(63, 230));
    assert_eq!(
        Sexagesimal::from_rational(rat(&m.area), 5, RoundingMode::Truncate).unwrap().to_string(),
        "0;16,26,5,13,2"
    );
    let c2 = with(q(55, 12));
    let m = convex6_metrics(&ContextEval::new(&c2), &Rational::one()).unwrap();
    assert_eq!(sexa(m.get(MetricKey::HexagonArea).unwrap()), "0;16,24,22,30");
    assert_eq!(m.lengths.len(), 1);

    let err = convex6_metrics(&ContextEval::new(&base), &Rational::one()).unwrap_err();
    assert!(matches!(err, crate::Error::MissingSymbol { symbol: IrrationalSymbol::Sqrt21, .. }));
}

#[test]
fn exact_areas() {
    let e = exact();
    let one = e.int(1);
    let cases = [
        (barley_field_metrics(&e, &one).unwrap(), "0.231335037798"),
        (ox_eye_metrics(&e, &one).unwrap(), "0.280034711580"),
        (convex4_metrics(&e, &one).unwrap(), "0.315146743628"),
        (convex6_metrics(&e, &one).unwrap(), "0.288114532528"),
        (apusamikkum4_metrics(&e, &one).unwrap(), "0.347899393542"),
        (apusamikkum3_metrics(&e, &one).unwrap(), "0.161254480774"),
    ];
    for (m, expected) in cases {
        assert_eq!(real(&m.area).to_decimal_string(12), expected, "{}", m.figure);
    }
    let hex = convex6_metrics(&e, &one).unwrap();
    assert_eq!(real(hex.get(MetricKey::HexagonArea).unwrap()).to_decimal_string(9), "0.271125039");
    assert_eq!(real(hex.get(MetricKey::HexagonSide).unwrap()).to_decimal_string(6), "0.323042");
}

#[test]
fn convex6_exact_matches_the_long_sexagesimal_value() {
    let m = convex6_metrics(&exact(), &exact().int(1)).unwrap();
    let area = real(&m.area).to_rational();
    let s = Sexagesimal::from_rational(&area, 8, RoundingMode::Truncate).unwrap();
    assert_eq!(s.to_string(), "0;17,17,12,44,20,29,36,54");
}

#[test]
fn general_formulas_agree_with_the_figures() {
    let e = exact();
    let t = tol();
    let pi = e.symbol(IrrationalSymbol::Pi).unwrap();
    for r in [q(1, 1), q(3, 2), q(7, 3)] {
        let rv = e.constant(&r);
        let lens = barley_field_metrics(&e, &(pi.clone() * rv.clone() / e.int(2))).unwrap();
        assert!(convex_area_general(&e, 2, &rv).unwrap().rel_eq(real(&lens.area), &t));
        let c4 = convex4_metrics(&e, &rv).unwrap();
        assert!(convex_area_general(&e, 4, &rv).unwrap().rel_eq(real(&c4.area), &t));
        let c6 = convex6_metrics(&e, &rv).unwrap();
        assert!(convex_area_general(&e, 6, &rv).unwrap().rel_eq(real(&c6.area), &t));
        let a3 = apusamikkum3_metrics(&e, &rv).unwrap();
        let a = pi.clone() * rv.clone() / e.int(3);
        assert!(concave_area_general(&e, 3, &a).unwrap().rel_eq(real(&a3.area), &t));
        let a4 = apusamikkum4_metrics(&e, &rv).unwrap();
        assert!(concave_area_general(&e, 4, &rv).unwrap().rel_eq(real(&a4.area), &t));
    }
    let half_pi_minus_one = pi / e.int(2) - e.int(1);
    assert!(convex_area_general(&e, 2, &e.int(1)).unwrap().rel_eq(&half_pi_minus_one, &t));
}

#[test]
fn general_formulas_reject_bad_n_and_modes() {
    let e = exact();
    assert!(concave_area_general(&e, 2, &e.int(1)).is_err());
    assert!(convex_area_general(&e, 5, &e.int(1)).is_err());
    let ctx = ApproximationContext::standard();
    let c = ContextEval::new(&ctx);
    assert_eq!(
        convex_area_general(&c, 4, &Rational::one()),
        Err(crate::Error::ExactOnly("general convex polyarc area"))
    );
    assert!(concave_area_general(&c, 5, &Rational::one()).is_err());
}

#[test]
fn exact_internal_identities() {
    let e = exact();
    let t = tol();
    let one = e.int(1);
    let ox = ox_eye_metrics(&e, &one).unwrap();
    let ratio = real(ox.get(MetricKey::Length).unwrap()) / real(ox.get(MetricKey::Width).unwrap());
    assert!(ratio.rel_eq(&e.symbol(IrrationalSymbol::Sqrt3).unwrap(), &t));

    let c4 = convex4_metrics(&e, &one).unwrap();
    let side = real(c4.get(MetricKey::SquareSide).unwrap());
    assert!(side.square().rel_eq(real(c4.get(MetricKey::SquareArea).unwrap()), &t));

    let c6 = convex6_metrics(&e, &one).unwrap();
    let half = real(c6.get(MetricKey::HalfAngleAlpha).unwrap());
    let x = real(c6.get(MetricKey::HexagonSide).unwrap());
    assert!(half.sin().rel_eq(&(x / &e.int(2)), &t));

    let a4 = apusamikkum4_metrics(&e, &one).unwrap();
    let r = real(a4.get(MetricKey::Diagonal).unwrap()) / real(a4.get(MetricKey::Transversal).unwrap());
    let s2p1 = e.symbol(IrrationalSymbol::Sqrt2).unwrap() + e.int(1);
    assert!(r.rel_eq(&s2p1, &t));
}

#[test]
fn context_mode_is_exactly_homogeneous() {
    let ctx = ApproximationContext::standard();
    let e = ContextEval::new(&ctx);
    let k = q(7, 5);
    let one = barley_field_metrics(&e, &Rational::one()).unwrap();
    let scaled = barley_field_metrics(&e, &k).unwrap();
    assert_eq!(rat(&scaled.area), &(rat(&one.area) * k.square()));
    for (key, v) in &one.lengths {
        assert_eq!(rat(&scaled.lengths[key]), &(rat(v) * &k));
    }
    let two = barley_field_metrics(&e, &q(2, 1)).unwrap();
    assert_eq!(rat(&two.area), &(rat(&one.area) * Rational::integer(4)));
    let three = apusamikkum3_metrics(&e, &q(3, 1)).unwrap();
    assert_eq!(rat(&three.area), &Rational::frac(9, 4));
}

#[test]
fn zero_size_is_a_degenerate_limit() {
    let ctx = ApproximationContext::standard();
    let m = ox_eye_metrics(&ContextEval::new(&ctx), &Rational::zero()).unwrap();
    assert!(rat(&m.area).is_zero());
    assert!(m.lengths.values().all(|v| rat(v).is_zero()));
    assert!(ox_eye_metrics(&ContextEval::new(&ctx), &q(-1, 1)).is_err());
}

#[test]
fn chain_radii() {
    let p = Precision::DEFAULT;
    let one = ExactReal::from_int(1, p);
    let t = tol();
    assert!(chain_radius(6, &one).unwrap().rel_eq(&ExactReal::from_int(2, p), &t));
    assert!(chain_radius(4, &one).unwrap().rel_eq(&IrrationalSymbol::Sqrt2.exact(p), &t));
    assert_eq!(chain_radius(3, &one).unwrap().to_decimal_string(6), "1.154701");
    assert!(chain_radius(2, &one).is_err());
}

#[test]
fn spec_dispatch_converts_sizes() {
    let e = exact();
    let t = tol();
    let by_a = metrics(&e, &PolyarcSpec::apusamikkum3(Rational::one()).unwrap()).unwrap();
    let by_arc = metrics(
        &e,
        &PolyarcSpec::new(Family::Apusamikkum3, None, Size::ArcLength(Rational::one())).unwrap(),
    )
    .unwrap();
    // r = 3a/π
    let r = e.int(3) / e.symbol(IrrationalSymbol::Pi).unwrap();
    assert!(real(&by_arc.area).rel_eq(&(real(&by_a.area) * &r.square()), &t));
    let concave = metrics(&e, &PolyarcSpec::regular_concave(4, Size::ArcLength(Rational::one())).unwrap()).unwrap();
    assert_eq!(real(&concave.area).to_decimal_string(12), "0.347899393542");
    let convex8 = area(&e, &PolyarcSpec::regular_convex(8, Rational::one()).unwrap()).unwrap();
    assert_eq!(real(&convex8).to_decimal_string(12), "0.279671052362");
}

#[test]
fn oracle_agrees_with_closed_forms() {
    let e = exact();
    let specs = [
        PolyarcSpec::barley_field(Rational::one()).unwrap(),
        PolyarcSpec::ox_eye(Rational::one()).unwrap(),
        PolyarcSpec::convex4(Rational::one()).unwrap(),
        PolyarcSpec::convex6(Rational::one()).unwrap(),
        PolyarcSpec::apusamikkum4(Rational::one()).unwrap(),
        PolyarcSpec::apusamikkum3(Rational::one()).unwrap(),
        PolyarcSpec::regular_concave(5, Size::QuadrantRadius(Rational::one())).unwrap(),
        PolyarcSpec::regular_convex(8, Rational::one()).unwrap(),
    ];
    for spec in specs {
        let closed = area(&e, &spec).unwrap().to_f64();
        let approx = oracle_area(&spec, 4096).unwrap();
        assert!((approx - closed).abs() <= 1e-6, "{}: {approx} vs {closed}", spec.family);
    }
}

#[test]
fn metrics_json_carries_mode() {
    let ctx = ApproximationContext::standard();
    let m = barley_field_metrics(&ContextEval::new(&ctx), &Rational::one()).unwrap();
    let v = serde_json::to_value(&m).unwrap();
    assert_eq!(v["figure"], "barley-field");
    assert_eq!(v["mode"], "context");
    assert_eq!(v["context"], "standard");
    assert_eq!(v["area"]["rational"]["num"], "2");
    assert_eq!(v["lengths"]["length"]["rational"]["den"], "18");

    let m = barley_field_metrics(&exact(), &exact().int(1)).unwrap();
    let v = serde_json::to_value(&m).unwrap();
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["precision"], 30);
    assert!(v["area"]["decimal"].as_str().unwrap().starts_with("0.2313350377982302573"));
    let back: FigureMetrics = serde_json::from_value(v).unwrap();
    assert_eq!(back.mode, m.mode);
    // the decimal form keeps P significant digits
    let (a, b) = (back.area.to_real(Precision::DEFAULT), m.area.to_real(Precision::DEFAULT));
    assert!(a.rel_eq(&b, &"1/100000000000000000000000000000".parse().unwrap()));
}
