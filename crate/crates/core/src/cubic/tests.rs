use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::scalars::sample_with;

fn q(n: i64, d: i64) -> RingValue {
    RingValue::rational(n, d)
}

fn params(t: &[RingValue]) -> Arc<CubicParams> {
    CubicParams::new(Backend::Rational, t.to_vec()).unwrap()
}

fn scalar(p: &Arc<CubicParams>, terms: &[(&str, RingValue)]) -> CubicScalar {
    let terms = terms.iter().map(|(n, v)| (Subset::parse_name(n).unwrap(), v.clone()));
    CubicScalar::from_terms(p, p.full(), terms).unwrap()
}

/// Oracle: `K_t^n = K_{t_n} ⊗ K_t^{n-1}`, so an element is `a + b e_n` with
/// `a, b` one order lower and `(a + b e)(c + d e) = ac + (ad + bc + t bd) e`.
fn oracle_mul(t: &[RingValue], x: &[RingValue], y: &[RingValue]) -> Vec<RingValue> {
    if t.is_empty() {
        return vec![&x[0] * &y[0]];
    }
    let half = x.len() / 2;
    let (lower, tn) = (&t[..t.len() - 1], &t[t.len() - 1]);
    let (a, b) = x.split_at(half);
    let (c, d) = y.split_at(half);
    let ac = oracle_mul(lower, a, c);
    let ad = oracle_mul(lower, a, d);
    let bc = oracle_mul(lower, b, c);
    let bd = oracle_mul(lower, b, d);
    let top = (0..half).map(|i| &(&ad[i] + &bc[i]) + &(tn * &bd[i]));
    ac.iter().cloned().chain(top).collect()
}

fn random_params(rng: &mut ChaCha8Rng, backend: &Backend, n: usize) -> Arc<CubicParams> {
    let t = (0..n)
        .map(|_| match rng.random_range(0..3) {
            0 => backend.zero(),
            1 => backend.one(),
            _ => sample_with(rng, backend, false),
        })
        .collect();
    CubicParams::new(*backend, t).unwrap()
}

fn backends() -> Vec<Backend> {
    vec![Backend::Rational, Backend::prime(101).unwrap(), Backend::prime(7).unwrap()]
}

#[test]
fn order_one_products() {
    let p = params(&[q(3, 1)]);
    let e = scalar(&p, &[("1", q(1, 1))]);
    assert_eq!(&e * &e, scalar(&p, &[("1", q(3, 1))]));

    let (x, u, y, v, t) = (q(2, 1), q(-1, 3), q(5, 2), q(7, 1), q(3, 1));
    let a = scalar(&p, &[("∅", x.clone()), ("1", u.clone())]);
    let b = scalar(&p, &[("∅", y.clone()), ("1", v.clone())]);
    let expected = scalar(&p, &[("∅", &x * &y), ("1", &(&(&u * &y) + &(&x * &v)) + &(&t * &(&u * &v)))]);
    assert_eq!(&a * &b, expected);

    let dual = params(&[q(0, 1)]);
    let e = scalar(&dual, &[("1", q(1, 1))]);
    assert_eq!(&e * &e, CubicScalar::zero(&dual, dual.full()).unwrap());
}

#[test]
fn order_two_products() {
    let (t1, t2) = (q(2, 1), q(-3, 5));
    let p = params(&[t1.clone(), t2.clone()]);
    let e1 = scalar(&p, &[("1", q(1, 1))]);
    let e2 = scalar(&p, &[("2", q(1, 1))]);
    let e12 = scalar(&p, &[("12", q(1, 1))]);
    assert_eq!(&e1 * &e2, e12);
    assert_eq!(&e12 * &e12, scalar(&p, &[("12", &t1 * &t2)]));
}

#[test]
fn addition_examples() {
    let p = params(&[q(5, 1)]);
    let a = scalar(&p, &[("∅", q(1, 1)), ("1", q(2, 1))]);
    let b = scalar(&p, &[("∅", q(3, 1)), ("1", q(4, 1))]);
    assert_eq!(&a + &b, scalar(&p, &[("∅", q(4, 1)), ("1", q(6, 1))]));
    assert_eq!(&a + &CubicScalar::zero(&p, p.full()).unwrap(), a);
}

#[test]
fn mismatched_operands_are_rejected() {
    let p = params(&[q(1, 1), q(2, 1)]);
    let other = params(&[q(1, 1), q(3, 1)]);
    let a = CubicScalar::one(&p, p.full()).unwrap();
    assert_eq!(a.try_mul(&CubicScalar::one(&other, other.full()).unwrap()), Err(Error::ParamsMismatch));
    assert_eq!(a.try_add(&CubicScalar::one(&p, Subset::single(1)).unwrap()), Err(Error::CarrierMismatch));
}

#[test]
fn source_and_target_examples() {
    let p = params(&[q(4, 1)]);
    let a = scalar(&p, &[("∅", q(2, 1)), ("1", q(3, 1))]);
    assert_eq!(a.source(1).unwrap().coeffs(), &[q(2, 1)]);
    assert_eq!(a.target(1).unwrap().coeffs(), &[q(14, 1)]);

    let zero_t = params(&[q(0, 1)]);
    let a = scalar(&zero_t, &[("∅", q(2, 1)), ("1", q(3, 1))]);
    assert_eq!(a.source(1).unwrap(), a.target(1).unwrap());

    let p = params(&[q(9, 1), q(1, 1)]);
    let a = scalar(&p, &[("∅", q(1, 1)), ("1", q(2, 1)), ("2", q(3, 1)), ("12", q(4, 1))]);
    let b = a.target(2).unwrap();
    assert_eq!(b.carrier(), Subset::single(1));
    assert_eq!(b.coeffs(), &[q(4, 1), q(6, 1)]);
    let s = a.source(2).unwrap();
    assert_eq!(s.coeffs(), &[q(1, 1), q(2, 1)]);
    assert_eq!(a.source(3), Err(Error::DirectionOutOfRange { k: 3, n: 2 }));
    assert_eq!(s.source(2), Err(Error::DirectionNotInCarrier(2)));
}

#[test]
fn unit_embedding_is_a_section() {
    let p = params(&[q(2, 1), q(3, 1)]);
    let b = CubicScalar::from_coeffs(&p, Subset::single(2), vec![q(1, 2), q(5, 1)]).unwrap();
    let up = b.unit_embed(1).unwrap();
    assert_eq!(up.carrier(), Subset::full(2));
    assert_eq!(up.source(1).unwrap(), b);
    assert_eq!(up.target(1).unwrap(), b);
    assert_eq!(up.unit_embed(1), Err(Error::DirectionInCarrier(1)));
}

#[test]
fn flip_swaps_directions_and_parameters() {
    let p = params(&[q(2, 1), q(7, 1)]);
    let sigma = Permutation::transposition(2, 1, 2).unwrap();
    let e1 = scalar(&p, &[("1", q(1, 1))]);
    let f = e1.flip(&sigma).unwrap();
    assert_eq!(f.params().t_values(), &[q(7, 1), q(2, 1)]);
    assert_eq!(f.coeff(Subset::single(2)), Some(&q(1, 1)));
    assert_eq!(f.coeff(Subset::single(1)), Some(&q(0, 1)));
    assert_eq!(e1.flip(&Permutation::identity(2)).unwrap(), e1);
    assert!(Permutation::new(vec![1, 1]).is_err());
    assert!(Permutation::new(vec![0, 1]).is_err());
}

#[test]
fn rescale_examples() {
    let p = params(&[q(2, 1)]);
    let a = scalar(&p, &[("∅", q(5, 1)), ("1", q(3, 1))]);
    let r = a.rescale(&[q(2, 1)]).unwrap();
    assert_eq!(r.params().t_values(), &[q(1, 1)]);
    assert_eq!(r.coeffs(), &[q(5, 1), q(6, 1)]);
    assert_eq!(a.rescale(&[q(1, 1)]).unwrap(), a);
    assert!(matches!(a.rescale(&[q(0, 1)]), Err(Error::NotUnit(_))));
}

#[test]
fn anchor_split_examples() {
    let p = params(&[q(1, 1)]);
    let a = scalar(&p, &[("∅", q(4, 1)), ("1", q(3, 1))]);
    assert_eq!(a.anchor_split(), vec![q(4, 1), q(7, 1)]);

    let p = params(&[q(2, 1)]);
    let a = scalar(&p, &[("∅", q(1, 1)), ("1", q(3, 1))]);
    assert_eq!(a.anchor_split(), vec![q(1, 1), q(7, 1)]);

    let p = params(&[q(2, 1), q(0, 1), q(5, 1)]);
    let c = CubicScalar::constant(&p, p.full(), q(-4, 3)).unwrap();
    assert!(c.anchor_split().iter().all(|v| *v == q(-4, 3)));
}

#[test]
fn anchor_unsplit_examples() {
    let t = q(5, 2);
    let p = params(&[t.clone()]);
    let (x, z) = (q(1, 3), q(4, 1));
    let a = CubicScalar::anchor_unsplit(&p, p.full(), &[x.clone(), z.clone()]).unwrap();
    let expected_v = &(&z - &x) * &t.try_invert().unwrap();
    assert_eq!(a.coeffs(), &[x, expected_v]);

    let p = params(&[q(3, 1), q(-2, 1)]);
    let c = CubicScalar::anchor_unsplit(&p, p.full(), &[q(6, 1), q(6, 1), q(6, 1), q(6, 1)]).unwrap();
    assert_eq!(c, CubicScalar::constant(&p, p.full(), q(6, 1)).unwrap());

    let p = params(&[q(3, 1), q(0, 1)]);
    assert!(matches!(
        CubicScalar::anchor_unsplit(&p, p.full(), &[q(1, 1), q(1, 1), q(1, 1), q(1, 1)]),
        Err(Error::NotUnit(_))
    ));
}

#[test]
fn core_ideal_examples() {
    let one = Subset::single(1);
    assert_eq!(core_ideal_basis(one, one).unwrap(), vec![one]);
    assert_eq!(core_ideal_basis(one, Subset::full(2)).unwrap(), vec![one, Subset::full(2)]);
    assert!(core_ideal_basis(Subset::EMPTY, one).is_err());
    assert!(core_ideal_basis(Subset::single(2), one).is_err());
}

#[test]
fn core_ideals_absorb_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for backend in backends() {
        for n in 1..=4 {
            let p = random_params(&mut rng, &backend, n);
            let c = p.full();
            for b in c.subsets().filter(|b| !b.is_empty()) {
                let basis = core_ideal_basis(b, c).unwrap();
                let x = CubicScalar::from_terms(&p, c, basis.iter().map(|a| (*a, sample_with(&mut rng, &backend, false))))
                    .unwrap();
                assert!(x.in_core_ideal(b));
                for a in c.subsets() {
                    let ea = CubicScalar::basis(&p, c, a).unwrap();
                    assert!((&ea * &x).in_core_ideal(b), "B={b} A={a}");
                }
            }
        }
    }
}

#[test]
fn nilpotency_at_zero_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=4 {
        let p = CubicParams::zeros(Backend::Rational, n).unwrap();
        for _ in 0..10 {
            let mut acc = CubicScalar::one(&p, p.full()).unwrap();
            for _ in 0..=n {
                let mut x = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
                x.coeffs[0] = q(0, 1);
                acc = &acc * &x;
            }
            assert!(acc.coeffs().iter().all(RingValue::is_zero));
        }
    }
}

#[test]
fn inverse_handles_mixed_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for backend in backends() {
        for n in 0..=4 {
            for _ in 0..10 {
                let p = random_params(&mut rng, &backend, n);
                let x = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
                let one = CubicScalar::one(&p, p.full()).unwrap();
                match x.try_inverse() {
                    Some(inv) => assert_eq!(&x * &inv, one),
                    None => assert!(x.anchor_split().iter().any(|c| !c.is_unit())),
                }
            }
        }
    }
}

#[test]
fn native_lift_on_unit_parameters_is_pointwise() {
    let b = Backend::float();
    let p = CubicParams::new(b, vec![RingValue::Float(0.5), RingValue::Float(0.0)]).unwrap();
    let x = CubicScalar::from_coeffs(
        &p,
        p.full(),
        vec![RingValue::Float(0.3), RingValue::Float(1.0), RingValue::Float(2.0), RingValue::Float(-1.0)],
    )
    .unwrap();
    let y = x.apply_native(Primitive::Exp).unwrap();
    // characters of the result along the split direction are exp of the characters
    let xs = x.split_units().unwrap();
    let ys = y.split_units().unwrap();
    for (xp, yp) in xs.parts.iter().zip(&ys.parts) {
        let c = xp.coeffs()[0].to_f64().unwrap();
        let d = xp.coeffs()[1].to_f64().unwrap();
        let out = yp.coeffs();
        assert!((out[0].to_f64().unwrap() - c.exp()).abs() < 1e-12);
        assert!((out[1].to_f64().unwrap() - c.exp() * d).abs() < 1e-12);
    }
    assert!(matches!(
        CubicScalar::one(&params(&[q(0, 1)]), Subset::full(1)).unwrap().apply_native(Primitive::Sin),
        Err(Error::FloatOnlyPrimitive(_))
    ));
}

#[test]
fn json_round_trip() {
    let p = params(&[q(1, 2), q(0, 1)]);
    let a = scalar(&p, &[("∅", q(1, 1)), ("1", q(-2, 3)), ("12", q(5, 1))]);
    let text = a.to_json_string();
    assert_eq!(
        text,
        r#"{"n":2,"t":["1/2","0"],"carrier":[1,2],"coeffs":{"∅":"1","1":"-2/3","2":"0","12":"5"},"backend":"rational"}"#
    );
    assert_eq!(CubicScalar::from_json_str(&text, &Backend::float()).unwrap(), a);

    let fp = Backend::prime(101).unwrap();
    let p = CubicParams::new(fp, vec![fp.int(3)]).unwrap();
    let a = CubicScalar::from_coeffs(&p, p.full(), vec![fp.int(100), fp.int(7)]).unwrap();
    assert_eq!(CubicScalar::from_json_str(&a.to_json_string(), &Backend::Rational).unwrap(), a);

    let partial = r#"{"t":["2"],"coeffs":{"1":"3"}}"#;
    let b = CubicScalar::from_json_str(partial, &Backend::Rational).unwrap();
    assert_eq!(b.coeffs(), &[q(0, 1), q(3, 1)]);
    assert!(CubicScalar::from_json_str(r#"{"t":["2"],"coeffs":{"2":"3"}}"#, &Backend::Rational).is_err());
    assert!(CubicScalar::from_json_str(r#"{"n":3,"t":["2"]}"#, &Backend::Rational).is_err());
}

#[test]
fn faces_commute() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 2..=4 {
        let p = random_params(&mut rng, &Backend::Rational, n);
        let ring = CubicRing::new(p.clone());
        assert_eq!(ring.edges().len(), n << (n - 1));
        for face in ring.faces() {
            let x = CubicScalar::sample(&mut rng, &p, face.top()).unwrap();
            assert_eq!(ring.check_face(&face, &x).unwrap(), None);
        }
    }
}

fn arb_case() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 0usize..3, 0usize..=4)
}

fn setup(seed: u64, backend_ix: usize, n: usize) -> (ChaCha8Rng, Arc<CubicParams>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let backend = backends()[backend_ix];
    let p = random_params(&mut rng, &backend, n);
    (rng, p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_tensor_oracle((seed, bi, n) in arb_case()) {
        let (mut rng, p) = setup(seed, bi, n);
        let x = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let y = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        prop_assert_eq!((&x * &y).coeffs().to_vec(), oracle_mul(p.t_values(), x.coeffs(), y.coeffs()));
    }

    #[test]
    fn ring_axioms((seed, bi, n) in arb_case()) {
        let (mut rng, p) = setup(seed, bi, n);
        let c = p.full();
        let [a, b, d] = [0, 1, 2].map(|_| CubicScalar::sample(&mut rng, &p, c).unwrap());
        let one = CubicScalar::one(&p, c).unwrap();
        let zero = CubicScalar::zero(&p, c).unwrap();
        prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a - &a, zero);
    }

    #[test]
    fn edge_maps_are_morphisms((seed, bi, n) in arb_case()) {
        prop_assume!(n > 0);
        let (mut rng, p) = setup(seed, bi, n);
        let c = p.full();
        let a = CubicScalar::sample(&mut rng, &p, c).unwrap();
        let b = CubicScalar::sample(&mut rng, &p, c).unwrap();
        for k in 1..=n {
            for map in [CubicScalar::source, CubicScalar::target] {
                let lower_one = CubicScalar::one(&p, c.without(k)).unwrap();
                prop_assert_eq!(map(&(&a * &b), k).unwrap(), &map(&a, k).unwrap() * &map(&b, k).unwrap());
                prop_assert_eq!(map(&(&a + &b), k).unwrap(), &map(&a, k).unwrap() + &map(&b, k).unwrap());
                prop_assert_eq!(map(&CubicScalar::one(&p, c).unwrap(), k).unwrap(), lower_one);
            }
            let lo = a.source(k).unwrap();
            let lo2 = b.source(k).unwrap();
            prop_assert_eq!((&lo * &lo2).unit_embed(k).unwrap(), &lo.unit_embed(k).unwrap() * &lo2.unit_embed(k).unwrap());
            prop_assert_eq!(lo.unit_embed(k).unwrap().source(k).unwrap(), lo.clone());
            prop_assert_eq!(lo.unit_embed(k).unwrap().target(k).unwrap(), lo);
        }
    }

    #[test]
    fn characters_are_multiplicative((seed, bi, n) in arb_case()) {
        let (mut rng, p) = setup(seed, bi, n);
        let a = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let b = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let prod = (&a * &b).anchor_split();
        let (sa, sb) = (a.anchor_split(), b.anchor_split());
        for (i, s) in p.full().subsets().enumerate() {
            prop_assert_eq!(&prod[i], &(&sa[i] * &sb[i]));
            prop_assert_eq!(&sa[i], &a.character(s).unwrap());
        }
    }

    #[test]
    fn anchor_split_round_trip((seed, bi, n) in arb_case()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let backend = backends()[bi];
        let t = (0..n).map(|_| sample_with(&mut rng, &backend, true)).collect();
        let p = CubicParams::new(backend, t).unwrap();
        let a = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let back = CubicScalar::anchor_unsplit(&p, p.full(), &a.anchor_split()).unwrap();
        prop_assert_eq!(&back, &a);
        let vals: Vec<RingValue> = (0..a.coeffs().len()).map(|_| sample_with(&mut rng, &backend, false)).collect();
        prop_assert_eq!(CubicScalar::anchor_unsplit(&p, p.full(), &vals).unwrap().anchor_split(), vals);
    }

    #[test]
    fn partial_split_round_trip((seed, bi, n) in arb_case()) {
        let (mut rng, p) = setup(seed, bi, n);
        let a = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let b = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let split = a.split_units().unwrap();
        prop_assert_eq!(CubicScalar::unsplit_units(&p, &split).unwrap(), a.clone());
        // the factorization is multiplicative part by part
        let sp = (&a * &b).split_units().unwrap();
        let sb = b.split_units().unwrap();
        for i in 0..sp.parts.len() {
            prop_assert_eq!(&sp.parts[i], &(&split.parts[i] * &sb.parts[i]));
        }
    }

    #[test]
    fn flip_is_an_isomorphism((seed, bi, n) in arb_case()) {
        prop_assume!(n >= 2);
        let (mut rng, p) = setup(seed, bi, n);
        let mut images: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            images.swap(i, rng.random_range(0..=i));
        }
        let sigma = Permutation::new(images).unwrap();
        let a = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let b = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let fa = a.flip(&sigma).unwrap();
        let fb = b.flip(&sigma).unwrap();
        prop_assert_eq!((&a * &b).flip(&sigma).unwrap(), &fa * &fb);
        prop_assert_eq!((&a + &b).flip(&sigma).unwrap(), &fa + &fb);
        prop_assert_eq!(fa.flip(&sigma.inverse()).unwrap(), a);
    }

    #[test]
    fn rescale_is_an_isomorphism_and_composes((seed, bi, n) in arb_case()) {
        let (mut rng, p) = setup(seed, bi, n);
        let backend = *p.backend();
        let s: Vec<RingValue> = (0..n).map(|_| sample_with(&mut rng, &backend, true)).collect();
        let r: Vec<RingValue> = (0..n).map(|_| sample_with(&mut rng, &backend, true)).collect();
        let a = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        let b = CubicScalar::sample(&mut rng, &p, p.full()).unwrap();
        prop_assert_eq!((&a * &b).rescale(&s).unwrap(), &a.rescale(&s).unwrap() * &b.rescale(&s).unwrap());
        let sr: Vec<RingValue> = s.iter().zip(&r).map(|(x, y)| x * y).collect();
        prop_assert_eq!(a.rescale(&sr).unwrap(), a.rescale(&r).unwrap().rescale(&s).unwrap());
    }
}
