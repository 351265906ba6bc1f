use std::io::Read;

use liecalc::calculus::{estimate_limit_slope, lift_sym, slope1, slope2_full, slope2_sym, HyperPoint, MapFn, SymPoint};
use liecalc::cubic::CubicScalar;
use liecalc::expr::{parse, parse_infer, ExprVec};
use liecalc::groupoid::{check_groupoid, DomainShape, DomainSpec, FiniteGroupoid, Groupoid, LawReport};
use liecalc::suites::{reports_to_jsonl, run_suite, SuiteConfig};
use liecalc::vector::{self, Vector};
use liecalc::{Backend, Error, RingValue};
use serde_json::{json, Value};

use crate::fail::CliError;
use crate::{CheckArgs, ConvergeArgs, Format, Global, LiftArgs, SlopeArgs, SplitArgs};

type Out = Result<String, CliError>;

/// The selected backend and whether it was chosen explicitly.
fn backend(g: &Global, default: Backend) -> Result<(Backend, bool), CliError> {
    let (mut b, explicit) = match &g.backend {
        Some(s) => (s.parse::<Backend>()?, true),
        None => (default, false),
    };
    if let Some(tol) = g.tol {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::Usage(format!("tolerance must be positive, got {tol}")));
        }
        if let Backend::Float { tol: t } = &mut b {
            *t = tol;
        }
    }
    Ok((b, explicit))
}

fn parse_vector(b: &Backend, text: &str) -> Result<Vector, CliError> {
    text.split(',').map(|s| b.parse_value(s).map_err(CliError::from)).collect()
}

fn parse_floats(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| Error::Json(format!("not a number: `{}`", s.trim())).into()))
        .collect()
}

/// Parses `text` at the arity given by the number of inputs, rejecting
/// expressions that mention more variables.
fn parse_map(text: &str, arity: usize) -> Result<ExprVec, CliError> {
    let inferred = parse_infer(text)?;
    if inferred.arity() > arity {
        return Err(Error::Arity { expected: inferred.arity(), found: arity }.into());
    }
    Ok(parse(text, arity)?)
}

fn read_input(spec: &str) -> Result<Value, CliError> {
    let text = if spec == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        s
    } else if let Some(path) = spec.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?
    } else {
        spec.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()).into())
}

fn render_values(values: &[RingValue], format: Format, key: &str) -> String {
    match format {
        Format::Json => json!({ key: values.iter().map(RingValue::to_json).collect::<Vec<_>>() }).to_string() + "\n",
        Format::Csv => values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",") + "\n",
        Format::Plain => values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ") + "\n",
    }
}

pub fn slope(g: &Global, a: &SlopeArgs) -> Out {
    let (b, _) = backend(g, Backend::Rational)?;
    let x = parse_vector(&b, &a.x)?;
    let d = x.len();
    let mut f = MapFn::from_expr(parse_map(&a.expr, d)?);
    if !a.exclude.is_empty() {
        let excluded = a.exclude.iter().map(|p| parse_vector(&b, p)).collect::<Result<Vec<_>, _>>()?;
        for p in &excluded {
            vector::check(&b, p, d)?;
        }
        f = f.with_domain(DomainSpec::new(d, DomainShape::FiniteComplement { excluded })?)?;
    }
    let v1 = parse_vector(&b, &a.v1)?;
    let t = a.t.iter().map(|s| b.parse_value(s)).collect::<Result<Vec<_>, _>>()?;
    let opt_vec = |s: &Option<String>| match s {
        Some(s) => parse_vector(&b, s),
        None => Ok(vector::zeros(&b, d)),
    };
    let result = match (a.order, a.sym) {
        (1, false) => {
            let [t] = t.as_slice() else {
                return Err(CliError::Usage(format!("order 1 takes one parameter, got {}", t.len())));
            };
            slope1(&f, &x, &v1, t)?
        }
        (1, true) => return Err(CliError::Usage("--sym needs --order 2".into())),
        (_, false) => {
            let (t1, t2, t12) = match t.as_slice() {
                [t1, t2] => (t1.clone(), t2.clone(), b.zero()),
                [t1, t2, t12] => (t1.clone(), t2.clone(), t12.clone()),
                _ => return Err(CliError::Usage(format!("order 2 takes t1 t2 [t12], got {} values", t.len()))),
            };
            let p = HyperPoint::order2(x, v1, opt_vec(&a.v2)?, opt_vec(&a.v12)?, t1, t2, t12)?;
            slope2_full(&f, &p)?
        }
        (_, true) => {
            let [t1, t2] = t.as_slice() else {
                return Err(CliError::Usage(format!("symmetric order 2 takes t1 t2, got {} values", t.len())));
            };
            let q = SymPoint::order2(x, v1, opt_vec(&a.v2)?, opt_vec(&a.v12)?, t1.clone(), t2.clone())?;
            slope2_sym(&f, &q)?
        }
    };
    Ok(render_values(&result, g.format.unwrap_or(Format::Plain), "slope"))
}

pub fn lift(g: &Global, a: &LiftArgs) -> Out {
    let (b, _) = backend(g, Backend::Rational)?;
    let doc = read_input(&a.input)?;
    let (items, single) = match &doc {
        Value::Array(items) => (items.clone(), false),
        other => (vec![other.clone()], true),
    };
    let input = items.iter().map(|v| CubicScalar::from_json(v, &b)).collect::<Result<Vec<_>, _>>()?;
    let Some(first) = input.first() else {
        return Err(CliError::Usage("no cubic scalars in the input".into()));
    };
    let params = first.params().clone();
    let f = MapFn::from_expr(parse_map(&a.expr, input.len())?);
    let out = lift_sym(&f, &input, &params)?;
    Ok(match g.format.unwrap_or(Format::Json) {
        Format::Plain => out.iter().map(|c| format!("{c}\n")).collect(),
        _ if single && out.len() == 1 => out[0].to_json_string() + "\n",
        _ => Value::Array(out.iter().map(CubicScalar::to_json).collect()).to_string() + "\n",
    })
}

/// The pair groupoid on three points with one composite rerouted.
fn corrupted_pair_groupoid() -> Result<FiniteGroupoid, Error> {
    let pg = FiniteGroupoid::pair(3);
    let n = pg.arrow_count();
    let mut compose: Vec<Option<usize>> = (0..n * n).map(|i| pg.composite(i / n, i % n)).collect();
    compose[pg.pair_arrow(2, 1) * n + pg.pair_arrow(1, 0)] = Some(pg.pair_arrow(2, 1));
    FiniteGroupoid::from_tables_unchecked(
        3,
        pg.arrows().map(|a| pg.source(&a)).collect(),
        pg.arrows().map(|a| pg.target(&a)).collect(),
        (0..3).map(|x| pg.unit(&x)).collect(),
        pg.arrows().map(|a| pg.inverse(&a)).collect(),
        compose,
    )
}

pub fn check(g: &Global, a: &CheckArgs) -> Out {
    let (b, _) = backend(g, Backend::Rational)?;
    let cfg = SuiteConfig { backend: b, samples: g.samples, seed: g.seed };
    let mut reports = run_suite(&a.suite, &cfg)?;
    if a.inject_fault {
        let broken = corrupted_pair_groupoid()?;
        let triples = broken.composable_triples();
        let mut it = triples.iter();
        reports.push(check_groupoid(&broken, "canary/corrupted-pair-groupoid", triples.len(), || {
            Ok(*it.next().expect("counted"))
        }));
        reports.sort_by(|x, y| x.law.cmp(&y.law));
    }
    let output = match g.format.unwrap_or(Format::Json) {
        Format::Json => reports_to_jsonl(&reports),
        Format::Csv => {
            let mut s = String::from("law,samples,failures\n");
            for r in &reports {
                s += &format!("{},{},{}\n", r.law, r.samples, r.failures);
            }
            s
        }
        Format::Plain => reports.iter().map(plain_report).collect(),
    };
    let failures: usize = reports.iter().map(|r| r.failures).sum();
    if failures > 0 {
        return Err(CliError::LawFailures { output, failures });
    }
    Ok(output)
}

fn plain_report(r: &LawReport) -> String {
    let status = if r.passed() { "ok" } else { "FAILED" };
    let mut line = format!("{status} {} ({} samples, {} failures)\n", r.law, r.samples, r.failures);
    if let Some(c) = &r.counterexample {
        line += &format!("    {c}\n");
    }
    line
}

pub fn converge(g: &Global, a: &ConvergeArgs) -> Out {
    let (b, explicit) = backend(g, Backend::float())?;
    if explicit && !matches!(b, Backend::Float { .. }) {
        return Err(Error::BackendMismatch { expected: "float".into(), found: b.to_string() }.into());
    }
    let x = parse_floats(&a.x)?;
    let v = parse_floats(&a.v)?;
    let f = MapFn::from_expr(parse_map(&a.expr, x.len())?);
    if v.len() != x.len() {
        return Err(Error::Dimension { expected: x.len(), found: v.len() }.into());
    }
    let table = estimate_limit_slope(&f, &x, &v, a.t0, a.halvings)?;
    Ok(match g.format.unwrap_or(Format::Csv) {
        Format::Json => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| json!({ "t": r.t, "slope": r.slope, "richardson_err": r.error }))
                .collect();
            json!({ "rows": rows, "limit": table.limit }).to_string() + "\n"
        }
        _ => table.to_csv(),
    })
}

pub fn split(g: &Global, a: &SplitArgs) -> Out {
    let (b, _) = backend(g, Backend::Rational)?;
    let x = CubicScalar::from_json(&read_input(&a.input)?, &b)?;
    let values = x.anchor_split();
    let back = CubicScalar::anchor_unsplit(x.params(), x.carrier(), &values)?;
    if !back.approx_eq(&x) {
        return Err(Error::InvalidStructure("unsplit(split(x)) differs from x".into()).into());
    }
    if a.roundtrip {
        return Ok("ok\n".into());
    }
    Ok(match g.format.unwrap_or(Format::Json) {
        Format::Json => Value::Array(values.iter().map(RingValue::to_json).collect()).to_string() + "\n",
        f => render_values(&values, f, "characters"),
    })
}
