use proptest::prelude::*;

use super::*;
use crate::cubic::{CubicParams, CubicScalar};
use crate::expr::{random_polynomial, ExprVec};
use crate::groupoid::{DomainShape, DomainSpec};
use crate::sampling::{self, ParamMode};
use crate::scalars::{Backend, RingValue};
use crate::vector::{self, Vector};
use crate::{Error, Primitive};

fn q(n: i64, d: i64) -> RingValue {
    RingValue::rational(n, d)
}

fn qs(xs: &[i64]) -> Vector {
    xs.iter().map(|&n| q(n, 1)).collect()
}

fn fl(x: f64) -> RingValue {
    RingValue::Float(x)
}

fn poly(rng: &mut sampling::SampleRng, arity: usize, degree: u32, terms: usize) -> MapFn {
    MapFn::from_expr(ExprVec::new(arity, vec![random_polynomial(rng, arity, degree, terms)]).unwrap())
}

fn map(text: &str, arity: usize) -> MapFn {
    MapFn::parse(text, arity).unwrap()
}

/// Test-side nested difference quotient over an explicit `(w, t)` layout
/// indexed by bitmask, independent of the library's face splitting.
/// `None` when some intermediate parameter is not a unit.
fn oracle_nested(f: &MapFn, n: usize, w: &[Vector], t: &[RingValue]) -> Option<Vector> {
    let backend = Backend::of(&t[0]);
    if n == 0 {
        return Some(f.eval(&w[0], &backend).unwrap());
    }
    let half = 1 << (n - 1);
    let tn = &t[half];
    let base_w: Vec<Vector> = w[..half].to_vec();
    let base_t: Vec<RingValue> = t[..half].to_vec();
    let moved_w: Vec<Vector> = (0..half).map(|a| vector::add(&w[a], &vector::scale(tn, &w[a + half]))).collect();
    let moved_t: Vec<RingValue> = (0..half).map(|a| if a == 0 { t[0].clone() } else { &t[a] + &(tn * &t[a + half]) }).collect();
    let hi = oracle_nested(f, n - 1, &moved_w, &moved_t)?;
    let lo = oracle_nested(f, n - 1, &base_w, &base_t)?;
    Some(vector::scale(&tn.try_invert()?, &vector::sub(&hi, &lo)))
}

fn random_hyper(rng: &mut sampling::SampleRng, backend: &Backend, n: usize, d: usize, mode: ParamMode) -> (Vec<Vector>, Vec<RingValue>) {
    let w = (0..1 << n).map(|_| sampling::vector(rng, backend, d)).collect();
    let t = (1..1 << n).map(|_| sampling::param(rng, backend, mode)).collect();
    (w, t)
}

#[test]
fn multiplication_slope() {
    let m = map("x1*x2", 2);
    for t in [q(0, 1), q(1, 1), q(-3, 2), q(7, 5)] {
        let (x, y, u, v) = (q(2, 3), q(-5, 1), q(1, 7), q(4, 1));
        let s = slope1(&m, &[x.clone(), y.clone()], &[u.clone(), v.clone()], &t).unwrap();
        let want = &(&(&u * &y) + &(&x * &v)) + &(&(&t * &u) * &v);
        assert_eq!(s, vec![want]);
    }
}

#[test]
fn square_derivative_at_three() {
    let f = map("x1^2", 1);
    let s = slope1(&f, &qs(&[3]), &qs(&[1]), &q(0, 1)).unwrap();
    let oracle = f.body().clone();
    let Body::Expr(e) = oracle else { unreachable!() };
    assert_eq!(s, e.diff(0).eval(&qs(&[3]), &Backend::Rational).unwrap());
    assert_eq!(s, qs(&[6]));
}

#[test]
fn linear_slope_is_constant() {
    let f = map("2*x1 - x2; x2", 2);
    for t in [q(0, 1), q(1, 1), q(3, 4)] {
        assert_eq!(slope1(&f, &qs(&[5, 1]), &qs(&[1, 2]), &t).unwrap(), qs(&[0, 2]));
    }
}

#[test]
fn second_full_slope_of_square() {
    let f = map("x1^2", 1);
    let p = HyperPoint::order2(qs(&[0]), qs(&[1]), qs(&[0]), qs(&[0]), q(1, 1), q(1, 1), q(1, 1)).unwrap();
    // f^[1](x, v, t) = 2xv + tv², then one more difference quotient in
    // (x, v, t) along (v2, v12, t12) with parameter t2.
    let f1 = map("2*x1*x2 + x3*x2^2", 3);
    let oracle = slope1(&f1, &qs(&[0, 1, 1]), &qs(&[0, 0, 1]), &q(1, 1)).unwrap();
    assert_eq!(oracle, qs(&[1]));
    assert_eq!(slope2_full(&f, &p).unwrap(), oracle);
    assert_eq!(slope_n_full(&f, &p).unwrap(), oracle);
}

#[test]
fn zero_directions_give_zero() {
    let f = map("x1^3 - x1*x2; x2^2", 2);
    let z = qs(&[0, 0]);
    let p = HyperPoint::order2(qs(&[2, 3]), z.clone(), z.clone(), z.clone(), q(1, 2), q(0, 1), q(2, 1)).unwrap();
    assert_eq!(slope2_full(&f, &p).unwrap(), z);
    let c = map("7; 1/3", 2);
    let (w, t) = random_hyper(&mut sampling::rng(3), &Backend::Rational, 3, 2, ParamMode::Mixed);
    let p = HyperPoint::new(3, w, t).unwrap();
    assert_eq!(slope_n_full(&c, &p).unwrap(), z);
}

#[test]
fn symmetric_slope_of_square() {
    let f = map("x1^2", 1);
    for (t1, t2) in [(q(1, 1), q(1, 1)), (q(2, 3), q(-5, 1)), (q(0, 1), q(3, 1)), (q(0, 1), q(0, 1))] {
        let sym = SymPoint::order2(qs(&[0]), qs(&[1]), qs(&[1]), qs(&[0]), t1, t2).unwrap();
        assert_eq!(slope2_sym(&f, &sym).unwrap(), qs(&[2]));
    }
}

#[test]
fn symmetric_slope_of_linear_map_vanishes() {
    let f = map("3*x1 - x2", 2);
    let sym = SymPoint::order2(qs(&[1, 2]), qs(&[4, 1]), qs(&[-2, 5]), qs(&[0, 0]), q(1, 3), q(2, 1)).unwrap();
    assert_eq!(slope2_sym(&f, &sym).unwrap(), qs(&[0]));
}

#[test]
fn flip_of_identical_directions_is_literal() {
    let sym = SymPoint::order2(qs(&[1]), qs(&[2]), qs(&[2]), qs(&[5]), q(3, 1), q(3, 1)).unwrap();
    assert_eq!(sym.flip(1, 2), sym);
}

#[test]
fn lift_of_square_follows_relation() {
    let f = map("x1^2", 1);
    let (a, b, t) = (q(2, 1), q(-3, 1), q(5, 7));
    let params = CubicParams::new(Backend::Rational, vec![t.clone()]).unwrap();
    let x = CubicScalar::from_coeffs(&params, params.full(), vec![a.clone(), b.clone()]).unwrap();
    let out = lift_sym(&f, &[x], &params).unwrap();
    let e1 = &(&(&q(2, 1) * &a) * &b) + &(&t * &(&b * &b));
    assert_eq!(out[0].coeffs(), &[&a * &a, e1]);
}

#[test]
fn lift_of_exp_at_unit_parameter() {
    let f = MapFn::native(Primitive::Exp, 1);
    let params = CubicParams::new(Backend::float(), vec![fl(1.0)]).unwrap();
    let (x, v) = (0.3, -1.2);
    let input = CubicScalar::from_coeffs(&params, params.full(), vec![fl(x), fl(v)]).unwrap();
    let out = lift_sym(&f, &[input], &params).unwrap();
    let b = Backend::float();
    assert!(b.ring_eq(&out[0].coeffs()[0], &fl(x.exp())).unwrap());
    assert!(b.ring_eq(&out[0].coeffs()[1], &fl((x + v).exp() - x.exp())).unwrap());
}

#[test]
fn identity_lift_is_identity() {
    let f = MapFn::identity(2);
    let params = CubicParams::new(Backend::Rational, vec![q(0, 1), q(2, 1)]).unwrap();
    let mut rng = sampling::rng(9);
    let input: Vec<_> = (0..2).map(|_| CubicScalar::sample(&mut rng, &params, params.full()).unwrap()).collect();
    assert_eq!(lift_sym(&f, &input, &params).unwrap(), input);
}

#[test]
fn cube_at_zero_parameters() {
    let f = map("x1^3", 1);
    let Body::Expr(e) = f.body().clone() else { unreachable!() };
    let second = e.diff(0).diff(0);
    let params = CubicParams::zeros(Backend::Rational, 2).unwrap();
    for x in [-2, 0, 3, 11] {
        let input = CubicScalar::from_coeffs(&params, params.full(), qs(&[x, 1, 1, 0])).unwrap();
        let out = lift_sym(&f, &[input], &params).unwrap();
        assert_eq!(out[0].top(), &second.eval(&qs(&[x]), &Backend::Rational).unwrap()[0]);
        assert_eq!(out[0].top(), &q(6 * x, 1));
    }
}

#[test]
fn tangent_map_examples() {
    let id = MapFn::identity(2);
    let (x, v) = (qs(&[1, 2]), qs(&[3, -4]));
    assert_eq!(tangent_map_t(&id, &q(5, 3), &x, &v).unwrap(), (x.clone(), v.clone()));

    let f = map("x1*x2; x1^2 - x2", 2);
    let t = q(2, 3);
    let (fx, s) = tangent_map_t(&f, &t, &x, &v).unwrap();
    let y = vector::axpy(&x, &t, &v);
    let fy = f.eval(&y, &Backend::Rational).unwrap();
    // anchor of (f(x), s, t) is (f(x) + t s, f(x)) = (f(x + tv), f(x))
    assert_eq!(vector::axpy(&fx, &t, &s), fy);

    let (_, d) = tangent_map_t(&f, &q(0, 1), &x, &v).unwrap();
    let Body::Expr(e) = f.body().clone() else { unreachable!() };
    let mut xv = x.clone();
    xv.extend(v.clone());
    assert_eq!(d, e.directional().eval(&xv, &Backend::Rational).unwrap());
}

#[test]
fn converge_square_is_affine() {
    let f = map("x1^2", 1);
    let table = estimate_limit_slope(&f, &[3.0], &[1.0], 1.0, 6).unwrap();
    for row in &table.rows {
        assert!((row.slope[0] - (6.0 + row.t)).abs() < 1e-12);
    }
    assert!((table.limit[0] - 6.0).abs() < 1e-12);
    let csv = table.to_csv();
    assert!(csv.starts_with("t,slope_0,richardson_err\n1,7,"));
    assert_eq!(csv.lines().count(), 9);
    assert!(csv.ends_with("\n0,6,0\n"));
}

#[test]
fn converge_exp_limit() {
    let f = MapFn::native(Primitive::Exp, 1);
    let table = estimate_limit_slope(&f, &[0.0], &[1.0], 1.0, 10).unwrap();
    assert!((table.limit[0] - 1.0).abs() < 1e-6);
    assert!(table.limit_error < 1e-6);
    assert!(table.monotone());
}

#[test]
fn converge_linear_is_flat() {
    let f = map("2*x1 + x2; x1", 2);
    let table = estimate_limit_slope(&f, &[1.0, -1.0], &[0.5, 2.0], 0.5, 4).unwrap();
    assert!(table.rows.iter().all(|r| r.slope == vec![3.0, 0.5]));
}

#[test]
fn extended_domain_examples() {
    let full = DomainSpec::full(1);
    let (w, t) = random_hyper(&mut sampling::rng(1), &Backend::Rational, 3, 1, ParamMode::Mixed);
    assert!(extended_contains(&full, &HyperPoint::new(3, w, t).unwrap()));

    let punctured = DomainSpec::new(1, DomainShape::FiniteComplement { excluded: vec![qs(&[0])] }).unwrap();
    let p = HyperPoint::new(1, vec![qs(&[1]), qs(&[-1])], vec![q(1, 1)]).unwrap();
    assert!(!extended_contains(&punctured, &p));
    let f = map("1/x1", 1).with_domain(punctured.clone()).unwrap();
    assert!(matches!(slope1(&f, &qs(&[1]), &qs(&[-1]), &q(1, 1)), Err(Error::DomainViolation(_))));

    // v0 = 1, v1 = 1, v2 = 2, v12 = 3, (t1, t2, t12) = (1, 1, -1):
    // v0+t1v1 = 2, v0+t2v2 = 3, v0+t2v2+(t1+t2t12)(v1+t2v12) = 3.
    let p2 = HyperPoint::order2(qs(&[1]), qs(&[1]), qs(&[2]), qs(&[3]), q(1, 1), q(1, 1), q(-1, 1)).unwrap();
    assert!(extended_contains(&punctured, &p2));
    for bad in [1, 2, 3] {
        let dom = DomainSpec::new(1, DomainShape::FiniteComplement { excluded: vec![qs(&[bad])] }).unwrap();
        assert!(!extended_contains(&dom, &p2));
    }

    let naked = DomainSpec::full(0);
    for t in [q(0, 1), q(1, 1), q(-7, 2)] {
        assert!(extended_contains(&naked, &HyperPoint::new(1, vec![vec![], vec![]], vec![t]).unwrap()));
    }
}

#[test]
fn symmetric_domain_membership() {
    let sym = SymPoint::order2(qs(&[1]), qs(&[1]), qs(&[1]), qs(&[1]), q(1, 1), q(1, 1)).unwrap();
    let pts = sym.evaluation_points();
    assert_eq!(pts, vec![qs(&[1]), qs(&[2]), qs(&[2]), qs(&[4])]);
    let dom = DomainSpec::new(1, DomainShape::FiniteComplement { excluded: vec![qs(&[4])] }).unwrap();
    assert!(!sym_contains(&dom, &sym));
    let f = map("x1^2", 1).with_domain(dom).unwrap();
    assert!(matches!(slope2_sym(&f, &sym), Err(Error::DomainViolation(_))));
}

#[test]
fn natives_on_full_cubic() {
    let f = MapFn::native(Primitive::Exp, 1);
    let b = Backend::float();
    let x = 0.4;
    // all-zero parameters: second derivative along (1, 1) plus first along v12
    let p = HyperPoint::order2(vec![fl(x)], vec![fl(1.0)], vec![fl(1.0)], vec![fl(2.0)], fl(0.0), fl(0.0), fl(0.0)).unwrap();
    let s = slope_n_full(&f, &p).unwrap();
    assert!(b.ring_eq(&s[0], &fl(3.0 * x.exp())).unwrap());
    // unit parameters go through nested quotients and agree with the closed formula
    let p = HyperPoint::order2(vec![fl(x)], vec![fl(0.5)], vec![fl(-1.0)], vec![fl(2.0)], fl(0.5), fl(0.25), fl(2.0)).unwrap();
    let a = slope2_full(&f, &p).unwrap();
    let c = slope_n_full(&f, &p).unwrap();
    assert!(b.vec_eq(&a, &c));
    // non-zero parameter with a zero one: no algebraic route for natives
    let p = HyperPoint::order2(vec![fl(x)], vec![fl(1.0)], vec![fl(1.0)], vec![fl(0.0)], fl(0.0), fl(1.0), fl(0.0)).unwrap();
    assert!(matches!(slope_n_full(&f, &p), Err(Error::NonUnitParameter(_))));
}

#[test]
fn composition_kinds() {
    let f = map("x1^2 + x2; x1", 2);
    let g = map("x1*x2", 2);
    assert!(matches!(MapFn::compose(&g, &f).unwrap().body(), Body::Expr(_)));
    let e = MapFn::native(Primitive::Sin, 1);
    let c = MapFn::compose(&e, &g).unwrap();
    assert!(matches!(c.body(), Body::Composite(..)));
    assert_eq!((c.d_in(), c.d_out()), (2, 1));
    assert!(matches!(MapFn::compose(&f, &e), Err(Error::Arity { .. })));
}

#[test]
fn chain_rule_examples() {
    let f = map("x1^2", 1);
    let g = map("x1 + 1", 1);
    let b = Backend::Rational;
    let mut rng = sampling::rng(5);
    let report = check_chain_rule(&f, &g, "chain", 500, || {
        Ok((sampling::vector(&mut rng, &b, 1), sampling::vector(&mut rng, &b, 1), sampling::param(&mut rng, &b, ParamMode::Mixed)))
    });
    assert_eq!((report.samples, report.failures), (500, 0));
    let report = check_chain_rule(&f, &MapFn::identity(1), "id", 50, || {
        Ok((sampling::vector(&mut rng, &b, 1), sampling::vector(&mut rng, &b, 1), sampling::param(&mut rng, &b, ParamMode::Mixed)))
    });
    assert!(report.passed());
}

#[test]
fn schwarz_cube_at_zero() {
    let f = map("x1^3", 1);
    for x in [-1, 2, 5] {
        let sym = SymPoint::order2(qs(&[x]), qs(&[2]), qs(&[3]), qs(&[0]), q(0, 1), q(0, 1)).unwrap();
        let want = qs(&[6 * x * 6]);
        assert_eq!(slope2_sym(&f, &sym).unwrap(), want);
        assert_eq!(slope2_sym(&f, &sym.flip(1, 2)).unwrap(), want);
    }
}

#[test]
fn prime_field_chain_rule_and_additivity() {
    let b = Backend::prime(101).unwrap();
    let f = map("x1*x2 + x2^3; x1 - x2^2", 2);
    let g = map("x1^2*x2 + 4", 2);
    let mut rng = sampling::rng(11);
    let report = check_chain_rule(&f, &g, "fp", 200, || {
        Ok((sampling::vector(&mut rng, &b, 2), sampling::vector(&mut rng, &b, 2), sampling::param(&mut rng, &b, ParamMode::Mixed)))
    });
    assert!(report.passed(), "{report:?}");
    let report = check_additivity(&f, "fp-add", 200, || {
        Ok((
            sampling::vector(&mut rng, &b, 2),
            sampling::vector(&mut rng, &b, 2),
            sampling::vector(&mut rng, &b, 2),
            sampling::param(&mut rng, &b, ParamMode::Mixed),
            sampling::scalar(&mut rng, &b),
        ))
    });
    assert!(report.passed(), "{report:?}");
}

#[test]
fn lift_commutes_with_edge_maps() {
    let f = map("x1^2*x2 - x2; x1 + x2^3", 2);
    let params = CubicParams::new(Backend::Rational, vec![q(2, 1), q(0, 1)]).unwrap();
    let mut rng = sampling::rng(2);
    let input: Vec<_> = (0..2).map(|_| CubicScalar::sample(&mut rng, &params, params.full()).unwrap()).collect();
    let out = lift_sym(&f, &input, &params).unwrap();
    for k in 1..=2 {
        let src: Vec<_> = input.iter().map(|c| c.source(k).unwrap()).collect();
        let tgt: Vec<_> = input.iter().map(|c| c.target(k).unwrap()).collect();
        assert_eq!(out.iter().map(|c| c.source(k).unwrap()).collect::<Vec<_>>(), lift_sym(&f, &src, &params).unwrap());
        assert_eq!(out.iter().map(|c| c.target(k).unwrap()).collect::<Vec<_>>(), lift_sym(&f, &tgt, &params).unwrap());
    }
}

fn rational() -> impl Strategy<Value = RingValue> {
    (-20i64..20, 1i64..6).prop_map(|(n, d)| q(n, d))
}

fn unit_rational() -> impl Strategy<Value = RingValue> {
    rational().prop_filter("unit", |v| !v.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_formula_matches_recursion(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let b = Backend::Rational;
        let f = poly(&mut rng, 2, 4, 4);
        let (w, t) = random_hyper(&mut rng, &b, 2, 2, ParamMode::Unit);
        let p = HyperPoint::new(2, w.clone(), t.clone()).unwrap();
        let mut tt = vec![b.one()];
        tt.extend(t);
        let oracle = oracle_nested(&f, 2, &w, &tt);
        prop_assume!(oracle.is_some());
        let oracle = oracle.unwrap();
        prop_assert_eq!(slope2_full(&f, &p).unwrap(), oracle.clone());
        prop_assert_eq!(slope_n_full(&f, &p).unwrap(), oracle);
    }

    #[test]
    fn third_order_matches_nested_quotients(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let b = Backend::Rational;
        let f = poly(&mut rng, 1, 5, 4);
        let (w, t) = random_hyper(&mut rng, &b, 3, 1, ParamMode::Unit);
        let mut tt = vec![b.one()];
        tt.extend(t.clone());
        // every intermediate parameter must be a unit for the oracle
        let p = HyperPoint::new(3, w.clone(), t).unwrap();
        let oracle = oracle_nested(&f, 3, &w, &tt);
        prop_assume!(oracle.is_some());
        prop_assert_eq!(slope_n_nested(&f, &p).unwrap(), oracle.clone().unwrap());
        prop_assert_eq!(slope_n_full(&f, &p).unwrap(), oracle.unwrap());
    }

    #[test]
    fn full_slope_is_polynomial_in_parameters(seed in any::<u64>()) {
        // Agreement at zero parameters with the limit of unit parameters is
        // checked on a polynomial, where the zero value is the jet value.
        let mut rng = sampling::rng(seed);
        let b = Backend::Rational;
        let f = poly(&mut rng, 1, 4, 3);
        let (w, _) = random_hyper(&mut rng, &b, 2, 1, ParamMode::Zero);
        let p = HyperPoint::new(2, w.clone(), vec![b.zero(); 3]).unwrap();
        let Body::Expr(e) = f.body().clone() else { unreachable!() };
        // f^[2] at t = 0: f''(x) v1 v2 + f'(x) v12
        let x = &w[0];
        let d1 = e.diff(0).eval(x, &b).unwrap();
        let d2 = e.diff(0).diff(0).eval(x, &b).unwrap();
        let want = &(&(&d2[0] * &w[1][0]) * &w[2][0]) + &(&d1[0] * &w[3][0]);
        prop_assert_eq!(slope_n_full(&f, &p).unwrap(), vec![want]);
    }

    #[test]
    fn symmetric_equals_full_without_t12(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let b = Backend::Rational;
        let f = poly(&mut rng, 2, 4, 4);
        let u: Vec<Vector> = (0..4).map(|_| sampling::vector(&mut rng, &b, 2)).collect();
        let t1 = sampling::param(&mut rng, &b, ParamMode::Mixed);
        let t2 = sampling::param(&mut rng, &b, ParamMode::Mixed);
        let sym = SymPoint::new(u.clone(), vec![t1.clone(), t2.clone()]).unwrap();
        let full = HyperPoint::new(2, u, vec![t1, t2, b.zero()]).unwrap();
        prop_assert_eq!(slope2_sym(&f, &sym).unwrap(), slope2_full(&f, &full).unwrap());
    }

    #[test]
    fn schwarz_flip(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let b = Backend::Rational;
        let f = poly(&mut rng, 2, 4, 4);
        let u: Vec<Vector> = (0..4).map(|_| sampling::vector(&mut rng, &b, 2)).collect();
        let t = vec![sampling::param(&mut rng, &b, ParamMode::Mixed), sampling::param(&mut rng, &b, ParamMode::Mixed)];
        let sym = SymPoint::new(u, t).unwrap();
        prop_assert_eq!(slope2_sym(&f, &sym).unwrap(), slope2_sym(&f, &sym.flip(1, 2)).unwrap());
    }

    #[test]
    fn lift_agrees_with_anchor_split(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let b = Backend::Rational;
        let f = poly(&mut rng, 2, 3, 4);
        let t: Vec<RingValue> = (0..2).map(|_| sampling::unit(&mut rng, &b)).collect();
        let params = CubicParams::new(b.clone(), t).unwrap();
        let input: Vec<_> = (0..2).map(|_| CubicScalar::sample(&mut rng, &params, params.full()).unwrap()).collect();
        let lifted = lift_sym(&f, &input, &params).unwrap();
        let chars: Vec<Vec<RingValue>> = input.iter().map(|c| c.anchor_split()).collect();
        let images: Vec<Vector> = (0..4)
            .map(|s| f.eval(&[chars[0][s].clone(), chars[1][s].clone()], &b).unwrap())
            .collect();
        for (j, out) in lifted.iter().enumerate() {
            let vals: Vec<RingValue> = images.iter().map(|img| img[j].clone()).collect();
            prop_assert_eq!(out, &CubicScalar::anchor_unsplit(&params, params.full(), &vals).unwrap());
        }
    }

    #[test]
    fn multiplication_slope_everywhere(x in rational(), y in rational(), u in rational(), v in rational(), t in rational()) {
        let m = map("x1*x2", 2);
        let s = slope1(&m, &[x.clone(), y.clone()], &[u.clone(), v.clone()], &t).unwrap();
        prop_assert_eq!(s, vec![&(&(&u * &y) + &(&x * &v)) + &(&(&t * &u) * &v)]);
    }

    #[test]
    fn additivity_over_rationals(seed in any::<u64>()) {
        let mut rng = sampling::rng(seed);
        let b = Backend::Rational;
        let f = poly(&mut rng, 2, 4, 4);
        let report = check_additivity(&f, "add", 8, || {
            Ok((
                sampling::vector(&mut rng, &b, 2),
                sampling::vector(&mut rng, &b, 2),
                sampling::vector(&mut rng, &b, 2),
                sampling::param(&mut rng, &b, ParamMode::Mixed),
                sampling::scalar(&mut rng, &b),
            ))
        });
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn extended_membership_matches_character_points(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = sampling::rng(seed);
        let b = Backend::Rational;
        let (w, t) = random_hyper(&mut rng, &b, n, 1, ParamMode::Mixed);
        let p = HyperPoint::new(n, w, t).unwrap();
        let pts = p.evaluation_points().unwrap();
        let excluded = pts[seed as usize % pts.len()].clone();
        let dom = DomainSpec::new(1, DomainShape::FiniteComplement { excluded: vec![excluded] }).unwrap();
        prop_assert!(!extended_contains(&dom, &p));
        let other = DomainSpec::new(1, DomainShape::FiniteComplement { excluded: vec![qs(&[1000])] }).unwrap();
        prop_assert_eq!(extended_contains(&other, &p), pts.iter().all(|x| other.contains(x)));
    }

    #[test]
    fn slope_at_unit_t_is_difference_quotient(x in rational(), v in rational(), t in unit_rational()) {
        let f = map("x1^3 - 2*x1", 1);
        let b = Backend::Rational;
        let fy = f.eval(&[&x + &(&t * &v)], &b).unwrap();
        let fx = f.eval(&[x.clone()], &b).unwrap();
        let want = &(&fy[0] - &fx[0]) * &t.try_invert().unwrap();
        prop_assert_eq!(slope1(&f, &[x], &[v], &t).unwrap(), vec![want]);
    }
}
