//! Ring backends.
//!
//! Three concrete coefficient rings share one commutative-unital-ring
//! contract: exact rationals, binary floating point and prime fields `Z/pZ`.
//! Values carry their backend; arithmetic between values of different
//! backends is rejected (`try_*`) or panics (operator impls).
//!
//! The [`Ring`] trait is the abstraction every generic evaluator in the crate
//! runs on. It is implemented by [`RingValue`] and by the cubic scalar rings.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::primitive::Primitive;

/// Default relative tolerance of the Float backend.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-9;

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// Identifies the ring a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Backend {
    Rational,
    /// `tol` is the relative tolerance used by [`Backend::ring_eq`].
    Float { tol: f64 },
    PrimeField { p: u32 },
}

impl Backend {
    pub fn float() -> Self {
        Backend::Float { tol: DEFAULT_FLOAT_TOL }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Backend::PrimeField { p: p as u32 })
    }

    /// The backend a value lives on (Float with the default tolerance).
    pub fn of(v: &RingValue) -> Backend {
        match v {
            RingValue::Rational(_) => Backend::Rational,
            RingValue::Float(_) => Backend::float(),
            RingValue::Prime(x) => Backend::PrimeField { p: x.p },
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Backend::Float { .. })
    }

    /// Same ring, ignoring the float tolerance.
    pub fn same_ring(&self, other: &Backend) -> bool {
        match (self, other) {
            (Backend::Rational, Backend::Rational) => true,
            (Backend::Float { .. }, Backend::Float { .. }) => true,
            (Backend::PrimeField { p }, Backend::PrimeField { p: q }) => p == q,
            _ => false,
        }
    }

    pub fn zero(&self) -> RingValue {
        match *self {
            Backend::Rational => RingValue::Rational(BigRational::zero()),
            Backend::Float { .. } => RingValue::Float(0.0),
            Backend::PrimeField { p } => RingValue::Prime(Fp::new(0, p)),
        }
    }

    pub fn one(&self) -> RingValue {
        match *self {
            Backend::Rational => RingValue::Rational(BigRational::one()),
            Backend::Float { .. } => RingValue::Float(1.0),
            Backend::PrimeField { p } => RingValue::Prime(Fp::new(1, p)),
        }
    }

    pub fn int(&self, n: i64) -> RingValue {
        match *self {
            Backend::Rational => RingValue::Rational(BigRational::from_integer(n.into())),
            Backend::Float { .. } => RingValue::Float(n as f64),
            Backend::PrimeField { p } => RingValue::Prime(Fp::from_i64(n, p)),
        }
    }

    /// Image of a rational number in this ring.
    pub fn from_rational(&self, q: &BigRational) -> Result<RingValue> {
        match *self {
            Backend::Rational => Ok(RingValue::Rational(q.clone())),
            Backend::Float { .. } => Ok(RingValue::Float(q.to_f64().unwrap_or(f64::NAN))),
            Backend::PrimeField { p } => {
                let num = Fp::from_bigint(q.numer(), p);
                let den = Fp::from_bigint(q.denom(), p);
                let inv = den.inverse().ok_or(Error::DivisionByNonUnit)?;
                Ok(RingValue::Prime(num * inv))
            }
        }
    }

    /// Parses a scalar literal (`3`, `-1/2`, `0.25`) into this ring.
    pub fn parse_value(&self, s: &str) -> Result<RingValue> {
        let s = s.trim();
        if let Backend::Float { .. } = self {
            if let Ok(x) = s.parse::<f64>() {
                return Ok(RingValue::Float(x));
            }
        }
        let q = parse_rational(s).ok_or_else(|| Error::Json(format!("not a scalar: `{s}`")))?;
        self.from_rational(&q)
    }

    /// Approximate equality for Float, exact equality otherwise.
    pub fn ring_eq(&self, a: &RingValue, b: &RingValue) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (RingValue::Float(x), RingValue::Float(y)) => {
                let tol = match self {
                    Backend::Float { tol } => *tol,
                    _ => unreachable!(),
                };
                (x - y).abs() <= tol * 1f64.max(x.abs()).max(y.abs())
            }
            _ => a == b,
        })
    }

    /// Componentwise [`Backend::ring_eq`]; mismatched lengths compare unequal.
    pub fn vec_eq(&self, a: &[RingValue], b: &[RingValue]) -> bool {
        a.len() == b.len()
            && a.iter()
                .zip(b)
                .all(|(x, y)| self.ring_eq(x, y).unwrap_or(false))
    }

    pub fn check(&self, v: &RingValue) -> Result<()> {
        if v.belongs_to(self) {
            Ok(())
        } else {
            Err(Error::BackendMismatch {
                expected: self.to_string(),
                found: v.backend_name(),
            })
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => f.write_str("rational"),
            Backend::Float { .. } => f.write_str("float"),
            Backend::PrimeField { p } => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rational" | "q" => Ok(Backend::Rational),
            "float" | "f64" => Ok(Backend::float()),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidBackend(other.to_string()))?;
                Backend::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses `a`, `a/b` or a finite decimal `a.b` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if int_digits.is_empty() { "0" } else { int_digits }, frac);
        let mut n: BigInt = digits.parse().ok()?;
        if negative {
            n = -n;
        }
        let d = num::pow(BigInt::from(10), frac.len());
        return Some(BigRational::new(n, d));
    }
    s.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// Residue modulo a prime `p < 2^31`, always reduced into `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: u32,
}

impl Fp {
    pub fn new(value: u64, p: u32) -> Self {
        Fp { value: (value % u64::from(p)) as u32, p }
    }

    pub fn from_i64(n: i64, p: u32) -> Self {
        Fp { value: n.rem_euclid(i64::from(p)) as u32, p }
    }

    fn from_bigint(n: &BigInt, p: u32) -> Self {
        let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
        Fp { value: r.to_u32().expect("residue below p"), p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(u64::from(self.p) - 2))
        }
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp::new(u64::from(self.value) + u64::from(rhs.value), self.p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp::new(u64::from(self.value) + u64::from(self.p) - u64::from(rhs.value), self.p)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp::new(u64::from(self.value) * u64::from(rhs.value), self.p)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::new(u64::from(self.p) - u64::from(self.value), self.p)
    }
}

/// A scalar on one of the three backends.
#[derive(Debug, Clone, PartialEq)]
pub enum RingValue {
    /// Always in lowest terms with positive denominator (maintained by `BigRational`).
    Rational(BigRational),
    Float(f64),
    Prime(Fp),
}

impl RingValue {
    pub fn rational(n: i64, d: i64) -> Self {
        RingValue::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn belongs_to(&self, backend: &Backend) -> bool {
        match (self, backend) {
            (RingValue::Rational(_), Backend::Rational) => true,
            (RingValue::Float(_), Backend::Float { .. }) => true,
            (RingValue::Prime(x), Backend::PrimeField { p }) => x.p == *p,
            _ => false,
        }
    }

    pub fn same_backend(&self, other: &RingValue) -> bool {
        match (self, other) {
            (RingValue::Rational(_), RingValue::Rational(_)) => true,
            (RingValue::Float(_), RingValue::Float(_)) => true,
            (RingValue::Prime(a), RingValue::Prime(b)) => a.p == b.p,
            _ => false,
        }
    }

    fn backend_name(&self) -> String {
        match self {
            RingValue::Rational(_) => "rational".into(),
            RingValue::Float(_) => "float".into(),
            RingValue::Prime(x) => format!("fp:{}", x.p),
        }
    }

    fn mismatch(&self, other: &RingValue) -> Error {
        Error::BackendMismatch {
            expected: self.backend_name(),
            found: other.backend_name(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Rational(q) => q.is_zero(),
            RingValue::Float(x) => *x == 0.0,
            RingValue::Prime(x) => x.value == 0,
        }
    }

    pub fn zero_like(&self) -> RingValue {
        match self {
            RingValue::Rational(_) => RingValue::Rational(BigRational::zero()),
            RingValue::Float(_) => RingValue::Float(0.0),
            RingValue::Prime(x) => RingValue::Prime(Fp::new(0, x.p)),
        }
    }

    pub fn one_like(&self) -> RingValue {
        match self {
            RingValue::Rational(_) => RingValue::Rational(BigRational::one()),
            RingValue::Float(_) => RingValue::Float(1.0),
            RingValue::Prime(x) => RingValue::Prime(Fp::new(1, x.p)),
        }
    }

    /// Multiplicative inverse, or `None` when `self` is not a unit.
    pub fn try_invert(&self) -> Option<RingValue> {
        match self {
            RingValue::Rational(q) if !q.is_zero() => Some(RingValue::Rational(q.recip())),
            RingValue::Float(x) if *x != 0.0 && x.is_finite() => Some(RingValue::Float(1.0 / x)),
            RingValue::Prime(x) => x.inverse().map(RingValue::Prime),
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.try_invert().is_some()
    }

    pub fn try_add(&self, rhs: &RingValue) -> Result<RingValue> {
        Ok(match (self, rhs) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a + b),
            (RingValue::Float(a), RingValue::Float(b)) => RingValue::Float(a + b),
            (RingValue::Prime(a), RingValue::Prime(b)) if a.p == b.p => RingValue::Prime(*a + *b),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn try_sub(&self, rhs: &RingValue) -> Result<RingValue> {
        Ok(match (self, rhs) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a - b),
            (RingValue::Float(a), RingValue::Float(b)) => RingValue::Float(a - b),
            (RingValue::Prime(a), RingValue::Prime(b)) if a.p == b.p => RingValue::Prime(*a - *b),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn try_mul(&self, rhs: &RingValue) -> Result<RingValue> {
        Ok(match (self, rhs) {
            (RingValue::Rational(a), RingValue::Rational(b)) => RingValue::Rational(a * b),
            (RingValue::Float(a), RingValue::Float(b)) => RingValue::Float(a * b),
            (RingValue::Prime(a), RingValue::Prime(b)) if a.p == b.p => RingValue::Prime(*a * *b),
            _ => return Err(self.mismatch(rhs)),
        })
    }

    /// Float view of the value; `None` on prime fields.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            RingValue::Rational(q) => q.to_f64(),
            RingValue::Float(x) => Some(*x),
            RingValue::Prime(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RingValue::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Magnitude used for pivoting; exact backends report 1 for non-zero values.
    pub(crate) fn magnitude(&self) -> f64 {
        match self {
            RingValue::Float(x) => x.abs(),
            RingValue::Rational(q) => q.abs().to_f64().unwrap_or(f64::INFINITY),
            other => {
                if other.is_zero() {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            RingValue::Rational(q) => serde_json::Value::String(q.to_string()),
            RingValue::Float(x) => serde_json::Number::from_f64(*x)
                .map(serde_json::Value::Number)
                .unwrap_or_else(|| serde_json::Value::String(x.to_string())),
            RingValue::Prime(x) => serde_json::Value::from(x.value),
        }
    }

    pub fn from_json(value: &serde_json::Value, backend: &Backend) -> Result<RingValue> {
        match value {
            serde_json::Value::String(s) => backend.parse_value(s),
            serde_json::Value::Number(n) => match backend {
                Backend::Float { .. } => n
                    .as_f64()
                    .map(RingValue::Float)
                    .ok_or_else(|| Error::Json(format!("bad number {n}"))),
                _ => backend.parse_value(&n.to_string()),
            },
            other => Err(Error::Json(format!("expected a scalar, found {other}"))),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Rational(q) => write!(f, "{q}"),
            RingValue::Float(x) => write!(f, "{x}"),
            RingValue::Prime(x) => write!(f, "{}", x.value),
        }
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for RingValue {
            type Output = RingValue;
            fn $method(self, rhs: RingValue) -> RingValue {
                self.$checked(&rhs).expect("ring arithmetic across backends")
            }
        }

        impl<'a> $trait<&'a RingValue> for &'a RingValue {
            type Output = RingValue;
            fn $method(self, rhs: &'a RingValue) -> RingValue {
                self.$checked(rhs).expect("ring arithmetic across backends")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        match self {
            RingValue::Rational(q) => RingValue::Rational(-q),
            RingValue::Float(x) => RingValue::Float(-x),
            RingValue::Prime(x) => RingValue::Prime(-x),
        }
    }
}

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        -(self.clone())
    }
}

/// Commutative unital ring contract shared by scalars and scalar extensions.
///
/// Elements know which ring they live in only up to a context (`Ctx`): the
/// backend for plain scalars, the parameter vector and carrier for cubic
/// scalars. Binary operators require both operands to belong to the same
/// context; callers validate inputs with [`Ring::belongs_to`] before running
/// generic code.
pub trait Ring:
    Clone
    + fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Ctx: Clone + fmt::Debug;

    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rational_in(ctx: &Self::Ctx, q: &BigRational) -> Result<Self>;
    fn belongs_to(&self, ctx: &Self::Ctx) -> bool;
    fn try_invert(&self) -> Option<Self>;
    fn apply_primitive(&self, prim: Primitive) -> Result<Self>;

    /// Square-and-multiply power; `x^0 = 1`.
    fn pow_in(&self, ctx: &Self::Ctx, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Ring for RingValue {
    type Ctx = Backend;

    fn zero_in(ctx: &Backend) -> Self {
        ctx.zero()
    }

    fn one_in(ctx: &Backend) -> Self {
        ctx.one()
    }

    fn from_rational_in(ctx: &Backend, q: &BigRational) -> Result<Self> {
        ctx.from_rational(q)
    }

    fn belongs_to(&self, ctx: &Backend) -> bool {
        RingValue::belongs_to(self, ctx)
    }

    fn try_invert(&self) -> Option<Self> {
        RingValue::try_invert(self)
    }

    fn apply_primitive(&self, prim: Primitive) -> Result<Self> {
        match self {
            RingValue::Float(x) => Ok(RingValue::Float(prim.eval(*x))),
            _ => Err(Error::FloatOnlyPrimitive(prim.name().into())),
        }
    }
}

/// Free-function form of [`RingValue::try_invert`].
pub fn try_invert(a: &RingValue) -> Option<RingValue> {
    a.try_invert()
}

/// Free-function form of [`Backend::ring_eq`] using the backend of `a`.
///
/// Float values are compared with the default tolerance.
pub fn ring_eq(a: &RingValue, b: &RingValue) -> Result<bool> {
    Backend::of(a).ring_eq(a, b)
}

/// Deterministic pseudo-random element; a pure function of its arguments.
///
/// Rationals have numerators in `[-12, 12]` and denominators in `[1, 6]`,
/// floats lie in `[-10, 10]`, residues are uniform.
pub fn sample_ring(seed: u64, backend: &Backend, want_unit: bool) -> RingValue {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(&mut rng, backend, want_unit)
}

/// Draws one element from `rng`; used by all samplers in the crate.
pub fn sample_with<R: Rng + ?Sized>(rng: &mut R, backend: &Backend, want_unit: bool) -> RingValue {
    loop {
        let v = match *backend {
            Backend::Rational => {
                let n: i64 = rng.random_range(-12..=12);
                let d: i64 = rng.random_range(1..=6);
                RingValue::rational(n, d)
            }
            Backend::Float { .. } => RingValue::Float(rng.random_range(-10.0..=10.0)),
            Backend::PrimeField { p } => RingValue::Prime(Fp::new(rng.random_range(0..u64::from(p)), p)),
        };
        if !want_unit || v.is_unit() {
            return v;
        }
    }
}
