//! Named law suites run by `liecalc check`.
//!
//! Each law draws from its own generator, seeded from the suite seed and the
//! law name, so adding a law never changes the samples of another.

use std::collections::BTreeSet;

use rand::Rng;

use crate::calculus::{
    check_additivity, check_chain_rule, check_schwarz, lift_sym, slope1, slope2_full, slope2_sym, slope_n_full,
    slope_n_nested, tangent_map_t, HyperPoint, MapFn, SymPoint,
};
use crate::cubic::{CubicParams, CubicRing, CubicScalar};
use crate::error::{Error, Result};
use crate::expr::{random_polynomial, Expr, ExprVec};
use crate::groupoid::{
    bisection_map, bisections, check_groupoid, check_interchange, check_torsor, is_bisection, rel_compose,
    sample_interchange, unit_section, Arrow1, DerivedDouble, DomainShape, DomainSpec, FiniteGroupoid, Groupoid,
    LawReport, TangentGroupoid,
};
use crate::sampling::{self, ParamMode, SampleRng};
use crate::scalars::{Backend, RingValue};
use crate::subset::Subset;
use crate::vector::{self, Vector};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 7] = ["all", "chain", "groupoid", "interchange", "ring", "schwarz", "torsor"];

/// Random polynomial pairs in the chain-rule law.
pub const CHAIN_PAIRS: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub backend: Backend,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { backend: Backend::Rational, samples: 500, seed: 0 }
    }
}

impl SuiteConfig {
    fn rng(&self, law: &str) -> SampleRng {
        // FNV-1a, stable across platforms and releases
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in law.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        sampling::rng(self.seed ^ h)
    }
}

/// Runs every law of a suite; reports are sorted by law name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<LawReport>> {
    let mut reports = match name {
        "all" => {
            let mut all = Vec::new();
            for suite in &SUITES[1..] {
                all.extend(run_suite(suite, cfg)?);
            }
            all
        }
        "chain" => chain_suite(cfg),
        "groupoid" => groupoid_suite(cfg),
        "interchange" => interchange_suite(cfg),
        "ring" => ring_suite(cfg),
        "schwarz" => schwarz_suite(cfg),
        "torsor" => torsor_suite(cfg),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    reports.sort_by(|a, b| a.law.cmp(&b.law));
    Ok(reports)
}

/// JSON Lines rendering of reports, one object per line.
pub fn reports_to_jsonl(reports: &[LawReport]) -> String {
    reports.iter().map(|r| r.to_json().to_string() + "\n").collect()
}

fn poly(rng: &mut SampleRng, backend: &Backend, arity: usize, out: usize, degree: u32) -> MapFn {
    // constants must make sense in the backend (denominators prime to p)
    let zero = vector::zeros(backend, arity);
    loop {
        let comps: Vec<Expr> = (0..out).map(|_| random_polynomial(rng, arity, degree, 4)).collect();
        let f = MapFn::from_expr(ExprVec::new(arity, comps).expect("variables in range"));
        if f.eval(&zero, backend).is_ok() {
            return f;
        }
    }
}

fn vec_eq(backend: &Backend, a: &[RingValue], b: &[RingValue]) -> bool {
    backend.vec_eq(a, b)
}

fn record(report: &mut LawReport, outcome: Result<Option<String>>) {
    report.record(outcome.unwrap_or_else(|e| Some(format!("error: {e}"))));
}

fn groupoid_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let b = cfg.backend;
    let mut out = Vec::new();
    for d in [1, 3] {
        let holes = vec![vector::zeros(&b, d), vec![b.one(); d]];
        let domains = [
            ("full", DomainSpec::full(d)),
            ("punctured", DomainSpec::new(d, DomainShape::FiniteComplement { excluded: holes }).expect("valid")),
        ];
        for (label, domain) in domains {
            let law = format!("groupoid/tangent-d{d}-{label}");
            let mut rng = cfg.rng(&law);
            let g = TangentGroupoid::new(domain, b);
            out.push(check_groupoid(&g, &law, cfg.samples, || {
                let c = g.sample_chain(&mut rng, ParamMode::Mixed, 3)?;
                Ok([c[0].clone(), c[1].clone(), c[2].clone()])
            }));
        }
    }

    let g = TangentGroupoid::new(DomainSpec::full(2), b);
    let law = "groupoid/anchor";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let outcome = g.sample_chain(&mut rng, ParamMode::Unit, 2).and_then(|c| {
            let (a, c1) = (&c[0], &c[1]);
            let ab = g.try_compose(a, c1)?;
            let (z, x) = a.anchor();
            let back = g.anchor_inverse(&z, &x, &a.t)?;
            let (p, q) = ab.anchor();
            let ok = g.arrows_approx_eq(&back, a) && vec_eq(&b, &p, &a.anchor().0) && vec_eq(&b, &q, &c1.anchor().1);
            Ok((!ok).then(|| format!("anchor fails on {a:?} and {c1:?}")))
        });
        record(&mut report, outcome);
    }
    out.push(report);

    let law = "groupoid/rescaling";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let outcome = g.sample_chain(&mut rng, ParamMode::Mixed, 2).and_then(|c| {
            let s = sampling::unit(&mut rng, &b);
            let r = sampling::unit(&mut rng, &b);
            let phi = |a: &Arrow1, s: &RingValue| g.rescale(a, s);
            let hom = g.arrows_approx_eq(
                &phi(&g.try_compose(&c[0], &c[1])?, &s)?,
                &g.try_compose(&phi(&c[0], &s)?, &phi(&c[1], &s)?)?,
            );
            let unit = g.unit(&c[1].source());
            let units = g.arrows_approx_eq(&phi(&unit, &s)?, &g.unit(&phi(&c[1], &s)?.source()));
            let action = g.arrows_approx_eq(&phi(&c[0], &(&s * &r))?, &phi(&phi(&c[0], &r)?, &s)?);
            let s_inv = s.try_invert().expect("sampled unit");
            let inverse = g.arrows_approx_eq(&phi(&phi(&c[0], &s)?, &s_inv)?, &c[0]);
            Ok(match (hom, units, action, inverse) {
                (false, ..) => Some(format!("not a homomorphism at s={s}: {:?}", c[0])),
                (_, false, ..) => Some(format!("units not preserved at s={s}")),
                (_, _, false, _) => Some(format!("Φ_(sr) ≠ Φ_s Φ_r at s={s}, r={r}")),
                (.., false) => Some(format!("Φ_(1/s) does not invert Φ_s at s={s}")),
                _ => None,
            })
        });
        record(&mut report, outcome);
    }
    out.push(report);

    let pg = FiniteGroupoid::pair(3);
    let triples = pg.composable_triples();
    let mut it = triples.iter();
    out.push(check_groupoid(&pg, "groupoid/pair-groupoid", triples.len(), || {
        Ok(*it.next().expect("counted"))
    }));
    out
}

fn chain_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let b = cfg.backend;
    let mut out = Vec::new();
    let point = |rng: &mut SampleRng, d: usize| -> Result<(Vector, Vector, RingValue)> {
        Ok((sampling::vector(rng, &b, d), sampling::vector(rng, &b, d), sampling::param(rng, &b, ParamMode::Mixed)))
    };

    let law = "chain/functoriality";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..CHAIN_PAIRS {
        let f = poly(&mut rng, &b, 2, 2, 4);
        let g = poly(&mut rng, &b, 2, 1, 4);
        report.merge(check_chain_rule(&f, &g, law, cfg.samples, || point(&mut rng, 2)));
    }
    out.push(report);

    let law = "chain/identity";
    let mut rng = cfg.rng(law);
    let id = MapFn::identity(2);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let outcome = point(&mut rng, 2).and_then(|(x, v, t)| {
            let (fx, fv) = tangent_map_t(&id, &t, &x, &v)?;
            Ok((!(vec_eq(&b, &fx, &x) && vec_eq(&b, &fv, &v))).then(|| format!("identity moves ({x:?}, {v:?}, {t})")))
        });
        record(&mut report, outcome);
    }
    out.push(report);

    let law = "chain/additivity";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..CHAIN_PAIRS {
        let f = poly(&mut rng, &b, 2, 2, 4);
        let per = cfg.samples.div_ceil(CHAIN_PAIRS);
        report.merge(check_additivity(&f, law, per, || {
            Ok((
                sampling::vector(&mut rng, &b, 2),
                sampling::vector(&mut rng, &b, 2),
                sampling::vector(&mut rng, &b, 2),
                // half of the samples exercise homogeneity at t = 0
                if rng.random_bool(0.5) { b.zero() } else { sampling::param(&mut rng, &b, ParamMode::Unit) },
                sampling::scalar(&mut rng, &b),
            ))
        }));
    }
    out.push(report);

    let law = "chain/multiplication-slope";
    let mut rng = cfg.rng(law);
    let m = MapFn::parse("x1*x2", 2).expect("valid");
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let outcome = point(&mut rng, 2).and_then(|(x, v, t)| {
            let s = slope1(&m, &x, &v, &t)?;
            let want = &(&(&v[0] * &x[1]) + &(&x[0] * &v[1])) + &(&(&t * &v[0]) * &v[1]);
            Ok((!vec_eq(&b, &s, std::slice::from_ref(&want))).then(|| format!("m^[1] at x={x:?} v={v:?} t={t}")))
        });
        record(&mut report, outcome);
    }
    out.push(report);

    let law = "chain/symbolic-derivative";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let d = rng.random_range(1..=3);
        let f = poly(&mut rng, &b, d, 1, 5);
        let outcome = (|| {
            let crate::calculus::Body::Expr(e) = f.body() else { unreachable!("expression map") };
            let (x, v) = (sampling::vector(&mut rng, &b, d), sampling::vector(&mut rng, &b, d));
            let s = slope1(&f, &x, &v, &b.zero())?;
            let mut xv = x.clone();
            xv.extend(v.clone());
            let want = e.directional().eval(&xv, &b)?;
            Ok((!vec_eq(&b, &s, &want)).then(|| format!("{e} at x={x:?} v={v:?}")))
        })();
        record(&mut report, outcome);
    }
    out.push(report);
    out
}

fn sym_point(rng: &mut SampleRng, b: &Backend, d: usize, t: [RingValue; 2]) -> Result<SymPoint> {
    let u = (0..4).map(|_| sampling::vector(rng, b, d)).collect();
    SymPoint::new(u, t.to_vec())
}

fn schwarz_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let b = cfg.backend;
    let mut out = Vec::new();

    for (law, mode) in [("schwarz/flip-unit", ParamMode::Unit), ("schwarz/flip-mixed", ParamMode::Mixed)] {
        let mut rng = cfg.rng(law);
        let mut report = LawReport::new(law);
        for _ in 0..CHAIN_PAIRS {
            let f = poly(&mut rng, &b, 2, 1, 4);
            let per = cfg.samples.div_ceil(CHAIN_PAIRS);
            report.merge(check_schwarz(&f, law, per, || {
                let t = [sampling::param(&mut rng, &b, mode), sampling::param(&mut rng, &b, mode)];
                sym_point(&mut rng, &b, 2, t)
            }));
        }
        out.push(report);
    }

    let law = "schwarz/flip-zero-lift";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    let params = CubicParams::zeros(b, 2).expect("order 2");
    for _ in 0..cfg.samples {
        let f = poly(&mut rng, &b, 1, 1, 5);
        let outcome = (|| {
            let (x, v1, v2) = (sampling::scalar(&mut rng, &b), sampling::scalar(&mut rng, &b), sampling::scalar(&mut rng, &b));
            let lift = |a: &RingValue, c: &RingValue| -> Result<RingValue> {
                let input = CubicScalar::from_coeffs(&params, params.full(), vec![x.clone(), a.clone(), c.clone(), b.zero()])?;
                Ok(lift_sym(&f, &[input], &params)?[0].top().clone())
            };
            let (p, q) = (lift(&v1, &v2)?, lift(&v2, &v1)?);
            Ok((!b.vec_eq(std::slice::from_ref(&p), std::slice::from_ref(&q))).then(|| format!("e12 {p} vs {q} at x={x}")))
        })();
        record(&mut report, outcome);
    }
    out.push(report);

    let law = "schwarz/symmetric-vs-full";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let f = poly(&mut rng, &b, 2, 1, 4);
        let outcome = (|| {
            let t = [sampling::param(&mut rng, &b, ParamMode::Mixed), sampling::param(&mut rng, &b, ParamMode::Mixed)];
            let q = sym_point(&mut rng, &b, 2, t.clone())?;
            let p = HyperPoint::new(2, q.u_all().to_vec(), vec![t[0].clone(), t[1].clone(), b.zero()])?;
            let (s, full) = (slope2_sym(&f, &q)?, slope2_full(&f, &p)?);
            Ok((!vec_eq(&b, &s, &full)).then(|| format!("{} vs {} at t={t:?}", vector::format(&s), vector::format(&full))))
        })();
        record(&mut report, outcome);
    }
    out.push(report);

    let law = "schwarz/closed-formula-vs-recursion";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let f = poly(&mut rng, &b, 2, 1, 4);
        let outcome = (|| loop {
            let w: Vec<Vector> = (0..4).map(|_| sampling::vector(&mut rng, &b, 2)).collect();
            let t: Vec<RingValue> = (0..3).map(|_| sampling::unit(&mut rng, &b)).collect();
            if !(&t[0] + &(&t[1] * &t[2])).is_unit() {
                continue;
            }
            let p = HyperPoint::new(2, w, t)?;
            let (closed, rec) = (slope2_full(&f, &p)?, slope_n_nested(&f, &p)?);
            let ring = slope_n_full(&f, &p)?;
            return Ok((!(vec_eq(&b, &closed, &rec) && vec_eq(&b, &closed, &ring)))
                .then(|| format!("closed {} recursion {} ring {}", vector::format(&closed), vector::format(&rec), vector::format(&ring))));
        })();
        record(&mut report, outcome);
    }
    out.push(report);

    let law = "schwarz/second-order-ad";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let d = rng.random_range(1..=2);
        let f = poly(&mut rng, &b, d, 1, 5);
        let outcome = (|| {
            let crate::calculus::Body::Expr(e) = f.body() else { unreachable!("expression map") };
            let (x, v1, v2) = (sampling::vector(&mut rng, &b, d), sampling::vector(&mut rng, &b, d), sampling::vector(&mut rng, &b, d));
            let q = SymPoint::new(vec![x.clone(), v1.clone(), v2.clone(), vector::zeros(&b, d)], vec![b.zero(), b.zero()])?;
            let top = slope2_sym(&f, &q)?;
            let mut want = b.zero();
            for i in 0..d {
                for j in 0..d {
                    let h = e.diff(i).diff(j).eval(&x, &b)?;
                    want = &want + &(&(&h[0] * &v1[i]) * &v2[j]);
                }
            }
            Ok((!vec_eq(&b, &top, std::slice::from_ref(&want))).then(|| format!("{e} at x={x:?}: {} vs {want}", vector::format(&top))))
        })();
        record(&mut report, outcome);
    }
    out.push(report);

    let law = "schwarz/third-order-full";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples.div_ceil(5) {
        let f = poly(&mut rng, &b, 1, 1, 5);
        let outcome = (|| loop {
            let w: Vec<Vector> = (0..8).map(|_| sampling::vector(&mut rng, &b, 1)).collect();
            let t: Vec<RingValue> = (0..7).map(|_| sampling::unit(&mut rng, &b)).collect();
            let p = HyperPoint::new(3, w, t)?;
            let Ok(nested) = slope_n_nested(&f, &p) else { continue };
            let ring = slope_n_full(&f, &p)?;
            return Ok((!vec_eq(&b, &nested, &ring)).then(|| format!("nested {} ring {}", vector::format(&nested), vector::format(&ring))));
        })();
        record(&mut report, outcome);
    }
    out.push(report);
    out
}

fn torsor_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let b = cfg.backend;
    let mut out = Vec::new();

    let g = TangentGroupoid::new(DomainSpec::full(2), b);
    let mut rng = cfg.rng("torsor/tangent");
    let (ip, pa) = check_torsor(&g, "torsor/tangent", cfg.samples, || {
        let t = sampling::param(&mut rng, &b, ParamMode::Mixed);
        let mut v = || sampling::vector(&mut rng, &b, 2);
        let p = v();
        let (vu, vv, vw, vy, vz) = (v(), v(), v(), v(), v());
        // u, v share a source; w ends where v ends; y starts where w starts; z ends where y ends
        let u = g.arrow(p.clone(), vu, t.clone())?;
        let va = g.arrow(p.clone(), vv.clone(), t.clone())?;
        let end = vector::axpy(&p, &t, &vv);
        let w = g.arrow(vector::sub(&end, &vector::scale(&t, &vw)), vw, t.clone())?;
        let y = g.arrow(w.x.clone(), vy, t.clone())?;
        let z = g.arrow(vector::sub(&y.target().0, &vector::scale(&t, &vz)), vz, t.clone())?;
        Ok([u, va, w, y, z])
    });
    out.extend([ip, pa]);

    let pg = FiniteGroupoid::pair(3);
    let mut rng = cfg.rng("torsor/pair");
    let (ip, pa) = check_torsor(&pg, "torsor/pair", cfg.samples, || {
        let mut o = || rng.random_range(0..3usize);
        let (p, a, c, d, e, f) = (o(), o(), o(), o(), o(), o());
        Ok([pg.pair_arrow(a, p), pg.pair_arrow(c, p), pg.pair_arrow(c, d), pg.pair_arrow(e, d), pg.pair_arrow(e, f)])
    });
    out.extend([ip, pa]);

    out.push(bisection_group_report(&pg));
    out
}

/// The bisections of the pair groupoid on three points form a group under
/// the relational product, mapped onto the bijections of the objects.
fn bisection_group_report(pg: &FiniteGroupoid) -> LawReport {
    let mut report = LawReport::new("torsor/bisections");
    let bis = bisections(pg);
    let unit = unit_section(pg);
    report.check(bis.len() == 6, || format!("{} bisections, expected 6", bis.len()));
    report.check(bis.contains(&unit), || "unit section missing".into());
    for r in &bis {
        report.check(rel_compose(pg, r, &unit) == *r && rel_compose(pg, &unit, r) == *r, || format!("unit law fails for {r:?}"));
        report.check(bis.iter().any(|s| rel_compose(pg, s, r) == unit && rel_compose(pg, r, s) == unit), || {
            format!("{r:?} has no inverse")
        });
        for s in &bis {
            let rs = rel_compose(pg, r, s);
            report.check(is_bisection(pg, &rs), || format!("{r:?}·{s:?} is not a bisection"));
            // the map to bijections is a morphism: (r·s)(x) = r(s(x))
            let (mr, ms, mrs) = (bisection_map(pg, r), bisection_map(pg, s), bisection_map(pg, &rs));
            report.check((0..3).all(|x| mrs[x] == mr[ms[x]]), || format!("map fails on {r:?}·{s:?}"));
            for u in &bis {
                report.check(rel_compose(pg, &rs, u) == rel_compose(pg, r, &rel_compose(pg, s, u)), || {
                    format!("associativity fails on {r:?}, {s:?}, {u:?}")
                });
            }
        }
    }
    let images: BTreeSet<Vec<usize>> = bis.iter().map(|s| bisection_map(pg, s)).collect();
    report.check(images.len() == 6, || format!("image has {} bijections, expected 6", images.len()));
    report
}

fn ring_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let b = cfg.backend;
    let mut out = Vec::new();
    let eq = |x: &CubicScalar, y: &CubicScalar| x.approx_eq(y);
    let random_params = |rng: &mut SampleRng, n: usize| {
        let t = (0..n).map(|_| sampling::param(rng, &b, ParamMode::Mixed)).collect();
        CubicParams::new(b, t).expect("valid parameters")
    };
    for n in 1..=3usize {
        let law = format!("ring/n{n}/axioms");
        let mut rng = cfg.rng(&law);
        let mut report = LawReport::new(&law);
        for _ in 0..cfg.samples {
            let p = random_params(&mut rng, n);
            let c = p.full();
            let outcome = (|| {
                let [x, y, z] = [(); 3].map(|_| CubicScalar::sample(&mut rng, &p, c));
                let (x, y, z) = (x?, y?, z?);
                let one = CubicScalar::one(&p, c)?;
                let zero = CubicScalar::zero(&p, c)?;
                let checks = [
                    ("associativity", eq(&(&(&x * &y) * &z), &(&x * &(&y * &z)))),
                    ("commutativity", eq(&(&x * &y), &(&y * &x))),
                    ("distributivity", eq(&(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z)))),
                    ("unit", eq(&(&x * &one), &x)),
                    ("additive inverse", eq(&(&x - &x), &zero)),
                ];
                Ok(checks.iter().find(|(_, ok)| !ok).map(|(name, _)| format!("{name} fails at t={:?}", p.t_values())))
            })();
            record(&mut report, outcome);
        }
        out.push(report);

        let law = format!("ring/n{n}/edge-morphisms");
        let mut rng = cfg.rng(&law);
        let mut report = LawReport::new(&law);
        for _ in 0..cfg.samples {
            let p = random_params(&mut rng, n);
            let c = p.full();
            let outcome = (|| {
                let (x, y) = (CubicScalar::sample(&mut rng, &p, c)?, CubicScalar::sample(&mut rng, &p, c)?);
                for k in 1..=n {
                    for (name, map) in [("alpha", CubicScalar::source as fn(&CubicScalar, usize) -> Result<CubicScalar>), ("beta", CubicScalar::target)] {
                        let ok = eq(&map(&(&x * &y), k)?, &(&map(&x, k)? * &map(&y, k)?))
                            && eq(&map(&(&x + &y), k)?, &(&map(&x, k)? + &map(&y, k)?))
                            && eq(&map(&CubicScalar::one(&p, c)?, k)?, &CubicScalar::one(&p, c.without(k))?);
                        if !ok {
                            return Ok(Some(format!("{name}_{k} is not a morphism at t={:?}", p.t_values())));
                        }
                    }
                    let (lx, ly) = (x.source(k)?, y.source(k)?);
                    let ok = eq(&(&lx * &ly).unit_embed(k)?, &(&lx.unit_embed(k)? * &ly.unit_embed(k)?))
                        && eq(&lx.unit_embed(k)?.source(k)?, &lx)
                        && eq(&lx.unit_embed(k)?.target(k)?, &lx);
                    if !ok {
                        return Ok(Some(format!("unit edge {k} fails at t={:?}", p.t_values())));
                    }
                }
                Ok(None)
            })();
            record(&mut report, outcome);
        }
        out.push(report);

        if n >= 2 {
            let law = format!("ring/n{n}/faces");
            let mut rng = cfg.rng(&law);
            let mut report = LawReport::new(&law);
            for _ in 0..cfg.samples {
                let ring = CubicRing::new(random_params(&mut rng, n));
                let outcome = (|| {
                    for face in ring.faces() {
                        let x = CubicScalar::sample(&mut rng, ring.params(), face.top())?;
                        if let Some(which) = ring.check_face(&face, &x)? {
                            return Ok(Some(format!("{which} on face {face:?}")));
                        }
                    }
                    Ok(None)
                })();
                record(&mut report, outcome);
            }
            out.push(report);
        }

        let law = format!("ring/n{n}/characters");
        let mut rng = cfg.rng(&law);
        let mut report = LawReport::new(&law);
        for _ in 0..cfg.samples {
            let p = random_params(&mut rng, n);
            let outcome = (|| {
                let (x, y) = (CubicScalar::sample(&mut rng, &p, p.full())?, CubicScalar::sample(&mut rng, &p, p.full())?);
                let (sx, sy, sxy) = (x.anchor_split(), y.anchor_split(), (&x * &y).anchor_split());
                let prod: Vec<RingValue> = sx.iter().zip(&sy).map(|(a, c)| a * c).collect();
                let one = CubicScalar::one(&p, p.full())?.anchor_split();
                Ok((!(vec_eq(&b, &sxy, &prod) && one.iter().all(|v| vec_eq(&b, std::slice::from_ref(v), &[b.one()]))))
                    .then(|| format!("character not multiplicative at t={:?}", p.t_values())))
            })();
            record(&mut report, outcome);
        }
        out.push(report);
    }

    let law = "ring/relations";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    for _ in 0..cfg.samples {
        let p = random_params(&mut rng, 2);
        let outcome = (|| {
            let c = p.full();
            let e = |a: u32| CubicScalar::basis(&p, c, Subset(a));
            let (e1, e12) = (e(1)?, e(3)?);
            let (t1, t2) = (p.t(1).clone(), p.t(2).clone());
            let ok = eq(&(&e1 * &e1), &e1.scale(&t1))
                && eq(&(&e12 * &e12), &e12.scale(&(&t1 * &t2)))
                && eq(&(&e1 * &e(2)?), &e12);
            Ok((!ok).then(|| format!("basis relations fail at t={:?}", p.t_values())))
        })();
        record(&mut report, outcome);
    }
    out.push(report);
    out
}

fn interchange_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let b = cfg.backend;
    let mut out = Vec::new();
    let law = "interchange/law";
    let mut rng = cfg.rng(law);
    let mut report = LawReport::new(law);
    let per = cfg.samples.div_ceil(CHAIN_PAIRS);
    for _ in 0..CHAIN_PAIRS {
        let t1 = sampling::param(&mut rng, &b, ParamMode::Mixed);
        let t2 = sampling::param(&mut rng, &b, ParamMode::Mixed);
        match DerivedDouble::new(b, 2, t1, t2) {
            Ok(dd) => report.merge(check_interchange(&dd, law, per, || Ok(sample_interchange(&dd, &mut rng)))),
            Err(e) => report.record(Some(e.to_string())),
        }
    }
    out.push(report);

    for (law, horizontal) in [("interchange/horizontal-axioms", true), ("interchange/vertical-axioms", false)] {
        let mut rng = cfg.rng(law);
        let mut report = LawReport::new(law);
        for _ in 0..CHAIN_PAIRS {
            let t1 = sampling::param(&mut rng, &b, ParamMode::Mixed);
            let t2 = sampling::param(&mut rng, &b, ParamMode::Mixed);
            let dd = match DerivedDouble::new(b, 2, t1, t2) {
                Ok(dd) => dd,
                Err(e) => {
                    report.record(Some(e.to_string()));
                    continue;
                }
            };
            let mut sampler = || {
                let c = dd.sample_chain(&mut rng, horizontal, 3);
                Ok([c[0].clone(), c[1].clone(), c[2].clone()])
            };
            report.merge(if horizontal {
                check_groupoid(&dd.horizontal(), law, per, &mut sampler)
            } else {
                check_groupoid(&dd.vertical(), law, per, &mut sampler)
            });
        }
        out.push(report);
    }
    out
}
