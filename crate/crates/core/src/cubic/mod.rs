//! Cubic scalar-extension rings `K_t^{C;n}`.
//!
//! An element is a coefficient vector over the basis `e_A`, `A ⊆ C`, with the
//! multiplication rule `e_A · e_B = t_{A∩B} e_{A∪B}` where `t_A = ∏_{i∈A} t_i`
//! and `t_∅ = 1`. At `t = 0` this is the ring of `n`-fold dual numbers (a Weil
//! algebra); with every `t_i` a unit it splits into `2^|C|` copies of `K`
//! through the characters `χ_S(Σ v_A e_A) = Σ_{A⊆S} t_A v_A`.
//!
//! Coefficients are stored densely. Slot `i` holds the coefficient of
//! `e_{C.deposit(i)}`, so within one carrier the union and intersection of
//! basis subsets are the bitwise or/and of their slot indices.

mod json;
mod ring;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::BigRational;

use crate::error::{Error, Result};
use crate::primitive::Primitive;
use crate::scalars::{sample_with, Backend, Ring, RingValue};
use crate::subset::{Subset, MAX_ORDER};

pub use ring::{CubicRing, Edge, Face};

/// Order `n`, parameter vector `t ∈ K^n` and the backend they live on.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicParams {
    backend: Backend,
    t: Vec<RingValue>,
}

impl CubicParams {
    pub fn new(backend: Backend, t: Vec<RingValue>) -> Result<Arc<Self>> {
        if t.len() > MAX_ORDER {
            return Err(Error::OrderTooLarge(t.len(), MAX_ORDER));
        }
        for v in &t {
            backend.check(v)?;
        }
        Ok(Arc::new(CubicParams { backend, t }))
    }

    /// Parameters with every `t_i = 0` (the `n`-th order tangent ring).
    pub fn zeros(backend: Backend, n: usize) -> Result<Arc<Self>> {
        Self::new(backend, vec![backend.zero(); n])
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n())
    }

    /// `t_k` for a 1-based direction.
    pub fn t(&self, k: usize) -> &RingValue {
        &self.t[k - 1]
    }

    pub fn t_values(&self) -> &[RingValue] {
        &self.t
    }

    /// `t_A = ∏_{i∈A} t_i`.
    pub fn t_of(&self, a: Subset) -> RingValue {
        a.dirs().fold(self.backend.one(), |acc, k| acc * self.t(k).clone())
    }

    fn check_dir(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.n() {
            Err(Error::DirectionOutOfRange { k, n: self.n() })
        } else {
            Ok(())
        }
    }

    fn check_carrier(&self, carrier: Subset) -> Result<()> {
        if carrier.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::InvalidSubset(format!("carrier {carrier} exceeds order {}", self.n())))
        }
    }
}

/// A permutation of `{1..n}`, stored as the list of images `σ(1), …, σ(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The transposition `(i j)` on `{1..n}`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidPermutation(format!("({i} {j}) on {n} points")));
        }
        images.swap(i - 1, j - 1);
        Ok(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn apply_set(&self, s: Subset) -> Subset {
        s.dirs().fold(Subset::EMPTY, |acc, k| acc.with(self.apply(k)))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img - 1] = i + 1;
        }
        Permutation(inv)
    }
}

/// Ring context of a cubic scalar: which parameters and which carrier.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicCtx {
    pub params: Arc<CubicParams>,
    pub carrier: Subset,
}

/// An element of `K_t^{C;n}`.
#[derive(Debug, Clone)]
pub struct CubicScalar {
    params: Arc<CubicParams>,
    carrier: Subset,
    coeffs: Vec<RingValue>,
}

impl PartialEq for CubicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && same_params(&self.params, &other.params) && self.coeffs == other.coeffs
    }
}

fn same_params(a: &Arc<CubicParams>, b: &Arc<CubicParams>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl CubicScalar {
    pub fn zero(params: &Arc<CubicParams>, carrier: Subset) -> Result<Self> {
        params.check_carrier(carrier)?;
        Ok(CubicScalar {
            params: params.clone(),
            carrier,
            coeffs: vec![params.backend.zero(); carrier.subset_count()],
        })
    }

    /// The constant `c` (coefficient of `e_∅`).
    pub fn constant(params: &Arc<CubicParams>, carrier: Subset, c: RingValue) -> Result<Self> {
        params.backend.check(&c)?;
        let mut out = Self::zero(params, carrier)?;
        out.coeffs[0] = c;
        Ok(out)
    }

    pub fn one(params: &Arc<CubicParams>, carrier: Subset) -> Result<Self> {
        Self::constant(params, carrier, params.backend.one())
    }

    /// The basis element `e_A`.
    pub fn basis(params: &Arc<CubicParams>, carrier: Subset, a: Subset) -> Result<Self> {
        if !a.is_subset_of(carrier) {
            return Err(Error::InvalidSubset(format!("{a} is not inside carrier {carrier}")));
        }
        let mut out = Self::zero(params, carrier)?;
        out.coeffs[carrier.compress(a)] = params.backend.one();
        Ok(out)
    }

    /// Builds an element from a dense coefficient vector in slot order.
    pub fn from_coeffs(params: &Arc<CubicParams>, carrier: Subset, coeffs: Vec<RingValue>) -> Result<Self> {
        params.check_carrier(carrier)?;
        if coeffs.len() != carrier.subset_count() {
            return Err(Error::Dimension { expected: carrier.subset_count(), found: coeffs.len() });
        }
        for c in &coeffs {
            params.backend.check(c)?;
        }
        Ok(CubicScalar { params: params.clone(), carrier, coeffs })
    }

    /// Builds `Σ v_A e_A` from `(A, v_A)` pairs; unspecified coefficients are zero.
    pub fn from_terms<I>(params: &Arc<CubicParams>, carrier: Subset, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, RingValue)>,
    {
        let mut out = Self::zero(params, carrier)?;
        for (a, v) in terms {
            if !a.is_subset_of(carrier) {
                return Err(Error::InvalidSubset(format!("{a} is not inside carrier {carrier}")));
            }
            params.backend.check(&v)?;
            let slot = carrier.compress(a);
            out.coeffs[slot] = &out.coeffs[slot] + &v;
        }
        Ok(out)
    }

    pub fn params(&self) -> &Arc<CubicParams> {
        &self.params
    }

    pub fn carrier(&self) -> Subset {
        self.carrier
    }

    pub fn ctx(&self) -> CubicCtx {
        CubicCtx { params: self.params.clone(), carrier: self.carrier }
    }

    /// Coefficients in slot order (see module docs).
    pub fn coeffs(&self) -> &[RingValue] {
        &self.coeffs
    }

    /// Coefficient `v_A`, or `None` when `A` is not inside the carrier.
    pub fn coeff(&self, a: Subset) -> Option<&RingValue> {
        a.is_subset_of(self.carrier).then(|| &self.coeffs[self.carrier.compress(a)])
    }

    /// `(A, v_A)` pairs in slot order.
    pub fn terms(&self) -> impl Iterator<Item = (Subset, &RingValue)> {
        self.carrier.subsets().zip(self.coeffs.iter())
    }

    /// Coefficient of `e_C`, the top basis element.
    pub fn top(&self) -> &RingValue {
        self.coeffs.last().expect("at least one coefficient")
    }

    pub fn compatible(&self, other: &CubicScalar) -> Result<()> {
        if !same_params(&self.params, &other.params) {
            return Err(Error::ParamsMismatch);
        }
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &CubicScalar) -> Result<CubicScalar> {
        self.compatible(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a + b))
    }

    pub fn try_sub(&self, rhs: &CubicScalar) -> Result<CubicScalar> {
        self.compatible(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a - b))
    }

    /// Bilinear extension of `e_A · e_B = t_{A∩B} e_{A∪B}`.
    pub fn try_mul(&self, rhs: &CubicScalar) -> Result<CubicScalar> {
        self.compatible(rhs)?;
        let len = self.coeffs.len();
        let t_table: Vec<RingValue> = self.carrier.subsets().map(|a| self.params.t_of(a)).collect();
        let mut out = vec![self.params.backend.zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = &t_table[i & j];
                if t.is_zero() {
                    continue;
                }
                let term = &(a * b) * t;
                out[i | j] = &out[i | j] + &term;
            }
        }
        Ok(CubicScalar { params: self.params.clone(), carrier: self.carrier, coeffs: out })
    }

    pub fn scale(&self, c: &RingValue) -> CubicScalar {
        self.map_coeffs(|v| v * c)
    }

    fn zip_with(&self, rhs: &CubicScalar, f: impl Fn(&RingValue, &RingValue) -> RingValue) -> CubicScalar {
        CubicScalar {
            params: self.params.clone(),
            carrier: self.carrier,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn map_coeffs(&self, f: impl Fn(&RingValue) -> RingValue) -> CubicScalar {
        CubicScalar {
            params: self.params.clone(),
            carrier: self.carrier,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn require_dir(&self, k: usize) -> Result<()> {
        self.params.check_dir(k)?;
        if !self.carrier.contains(k) {
            return Err(Error::DirectionNotInCarrier(k));
        }
        Ok(())
    }

    /// Source projection `α_k`: drops every `e_A` with `k ∈ A`.
    pub fn source(&self, k: usize) -> Result<CubicScalar> {
        self.require_dir(k)?;
        let lower = self.carrier.without(k);
        let coeffs = lower.subsets().map(|a| self.coeffs[self.carrier.compress(a)].clone()).collect();
        Ok(CubicScalar { params: self.params.clone(), carrier: lower, coeffs })
    }

    /// Target projection `β_k`: `v'_A = v_A + t_k v_{A∪{k}}` for `A ⊆ C∖{k}`.
    pub fn target(&self, k: usize) -> Result<CubicScalar> {
        self.require_dir(k)?;
        let lower = self.carrier.without(k);
        let tk = self.params.t(k);
        let coeffs = lower
            .subsets()
            .map(|a| {
                let kept = &self.coeffs[self.carrier.compress(a)];
                let moved = &self.coeffs[self.carrier.compress(a.with(k))];
                kept + &(tk * moved)
            })
            .collect();
        Ok(CubicScalar { params: self.params.clone(), carrier: lower, coeffs })
    }

    /// Unit section in direction `k`: zero-pads into `K_t^{C∪{k};n}`.
    pub fn unit_embed(&self, k: usize) -> Result<CubicScalar> {
        self.params.check_dir(k)?;
        if self.carrier.contains(k) {
            return Err(Error::DirectionInCarrier(k));
        }
        let upper = self.carrier.with(k);
        let mut out = CubicScalar::zero(&self.params, upper)?;
        for (a, v) in self.terms() {
            out.coeffs[upper.compress(a)] = v.clone();
        }
        Ok(out)
    }

    /// Relabels directions by `σ`: `e_A ↦ e_{σ(A)}`, `t ↦ σ·t` (so `t'_{σ(i)} = t_i`).
    pub fn flip(&self, sigma: &Permutation) -> Result<CubicScalar> {
        let n = self.params.n();
        if sigma.len() != n {
            return Err(Error::InvalidPermutation(format!("expected a permutation of {n} points")));
        }
        let mut t = vec![self.params.backend.zero(); n];
        for k in 1..=n {
            t[sigma.apply(k) - 1] = self.params.t(k).clone();
        }
        let params = CubicParams::new(self.params.backend, t)?;
        let carrier = sigma.apply_set(self.carrier);
        let mut out = CubicScalar::zero(&params, carrier)?;
        for (a, v) in self.terms() {
            out.coeffs[carrier.compress(sigma.apply_set(a))] = v.clone();
        }
        Ok(out)
    }

    /// Rescaling by units `s`: `v_A ↦ s_A v_A`, `t_k ↦ t_k s_k^{-1}`.
    pub fn rescale(&self, s: &[RingValue]) -> Result<CubicScalar> {
        let n = self.params.n();
        if s.len() != n {
            return Err(Error::Dimension { expected: n, found: s.len() });
        }
        let mut t = Vec::with_capacity(n);
        for (k, sk) in s.iter().enumerate() {
            self.params.backend.check(sk)?;
            let inv = sk.try_invert().ok_or_else(|| Error::NotUnit(format!("rescaling factor s_{} = {sk}", k + 1)))?;
            t.push(self.params.t(k + 1) * &inv);
        }
        let params = CubicParams::new(self.params.backend, t)?;
        let coeffs = self
            .terms()
            .map(|(a, v)| a.dirs().fold(v.clone(), |acc, k| acc * s[k - 1].clone()))
            .collect();
        Ok(CubicScalar { params, carrier: self.carrier, coeffs })
    }

    /// The character `χ_S(a) = Σ_{A⊆S} t_A v_A` for `S ⊆ C`.
    pub fn character(&self, s: Subset) -> Result<RingValue> {
        if !s.is_subset_of(self.carrier) {
            return Err(Error::InvalidSubset(format!("{s} is not inside carrier {}", self.carrier)));
        }
        Ok(s.subsets().fold(self.params.backend.zero(), |acc, a| {
            acc + self.params.t_of(a) * self.coeffs[self.carrier.compress(a)].clone()
        }))
    }

    /// All characters `χ_S`, `S ⊆ C`, in slot order. Defined for every `t`.
    pub fn anchor_split(&self) -> Vec<RingValue> {
        let mut w: Vec<RingValue> = self.terms().map(|(a, v)| self.params.t_of(a) * v.clone()).collect();
        zeta(&mut w, |hi, lo| hi.clone() + lo.clone());
        w
    }

    /// Inverse of [`CubicScalar::anchor_split`]; needs every `t_k`, `k ∈ C`, to be a unit.
    pub fn anchor_unsplit(params: &Arc<CubicParams>, carrier: Subset, values: &[RingValue]) -> Result<CubicScalar> {
        params.check_carrier(carrier)?;
        if values.len() != carrier.subset_count() {
            return Err(Error::Dimension { expected: carrier.subset_count(), found: values.len() });
        }
        for v in values {
            params.backend.check(v)?;
        }
        let inv_t = unit_inverses(params, carrier)?;
        let mut w = values.to_vec();
        zeta(&mut w, |hi, lo| hi.clone() - lo.clone());
        let coeffs = carrier
            .subsets()
            .zip(w)
            .map(|(a, v)| a.dirs().fold(v, |acc, k| acc * inv_t[k - 1].clone()))
            .collect();
        Ok(CubicScalar { params: params.clone(), carrier, coeffs })
    }

    /// Partial splitting along the unit directions of the carrier.
    ///
    /// Writing `C = U ⊔ Z` with `t_k` a unit for `k ∈ U` and `t_k = 0` for
    /// `k ∈ Z`, the ring factors as `K^{2^|U|} ⊗ K_0^{Z}`. Part `S ⊆ U`
    /// (in slot order of `U`) is the image of `self` in the jet ring over `Z`.
    pub fn split_units(&self) -> Result<UnitSplit> {
        let (units, zeros) = classify(&self.params, self.carrier)?;
        let zlen = zeros.subset_count();
        let mut rows: Vec<Vec<RingValue>> = vec![vec![self.params.backend.zero(); zlen]; units.subset_count()];
        for (a, v) in self.terms() {
            let au = a.intersection(units);
            let az = a.intersection(zeros);
            rows[units.compress(au)][zeros.compress(az)] = self.params.t_of(au) * v.clone();
        }
        zeta(&mut rows, |hi, lo| hi.iter().zip(lo).map(|(x, y)| x + y).collect());
        let parts = rows
            .into_iter()
            .map(|coeffs| CubicScalar { params: self.params.clone(), carrier: zeros, coeffs })
            .collect();
        Ok(UnitSplit { units, zeros, parts })
    }

    /// Reassembles a [`UnitSplit`] into `K_t^{U∪Z;n}`.
    pub fn unsplit_units(params: &Arc<CubicParams>, split: &UnitSplit) -> Result<CubicScalar> {
        let UnitSplit { units, zeros, parts } = split;
        if parts.len() != units.subset_count() {
            return Err(Error::Dimension { expected: units.subset_count(), found: parts.len() });
        }
        let mut rows = Vec::with_capacity(parts.len());
        for part in parts {
            if part.carrier != *zeros || !same_params(&part.params, params) {
                return Err(Error::CarrierMismatch);
            }
            rows.push(part.coeffs.clone());
        }
        let inv_t = unit_inverses(params, *units)?;
        zeta(&mut rows, |hi, lo| hi.iter().zip(lo).map(|(x, y)| x - y).collect());
        let carrier = units.union(*zeros);
        let mut out = CubicScalar::zero(params, carrier)?;
        for (su, row) in units.subsets().zip(rows) {
            let scale = su.dirs().fold(params.backend.one(), |acc, k| acc * inv_t[k - 1].clone());
            for (sz, v) in zeros.subsets().zip(row) {
                out.coeffs[carrier.compress(su.union(sz))] = v * scale.clone();
            }
        }
        Ok(out)
    }

    /// Applies a Float-native primitive through the unit/zero factorization:
    /// pointwise on the split directions, by truncated Taylor series on the
    /// nilpotent (zero-parameter) directions.
    pub fn apply_native(&self, prim: Primitive) -> Result<CubicScalar> {
        if !matches!(self.params.backend, Backend::Float { .. }) {
            return Err(Error::FloatOnlyPrimitive(prim.name().into()));
        }
        let mut split = self.split_units()?;
        let order = split.zeros.len() as u32;
        for part in &mut split.parts {
            let c = part.coeffs[0].to_f64().expect("float backend");
            let mut nil = part.clone();
            nil.coeffs[0] = RingValue::Float(0.0);
            let mut power = CubicScalar::one(&part.params, part.carrier)?;
            let mut acc = CubicScalar::zero(&part.params, part.carrier)?;
            let mut factorial = 1.0;
            for j in 0..=order {
                if j > 0 {
                    power = &power * &nil;
                    factorial *= f64::from(j);
                }
                acc = &acc + &power.scale(&RingValue::Float(prim.derivative(j, c) / factorial));
            }
            *part = acc;
        }
        Self::unsplit_units(&self.params, &split)
    }

    /// Multiplicative inverse. A cubic scalar over a field is a unit iff every
    /// character `χ_S` is a unit.
    pub fn try_inverse(&self) -> Option<CubicScalar> {
        if !self.anchor_split().iter().all(RingValue::is_unit) {
            return None;
        }
        let mut split = self.split_units().ok()?;
        let order = split.zeros.len();
        for part in &mut split.parts {
            // part = c (1 + m) with m nilpotent of order `order + 1`
            let c_inv = part.coeffs[0].try_invert()?;
            let mut m = part.scale(&c_inv);
            m.coeffs[0] = m.coeffs[0].zero_like();
            let neg_m = -m;
            let one = CubicScalar::one(&part.params, part.carrier).ok()?;
            let mut power = one.clone();
            let mut acc = one;
            for _ in 0..order {
                power = &power * &neg_m;
                acc = &acc + &power;
            }
            *part = acc.scale(&c_inv);
        }
        Self::unsplit_units(&self.params, &split).ok()
    }

    /// Coefficientwise [`Backend::ring_eq`]: exact on exact backends, within
    /// tolerance on Float.
    pub fn approx_eq(&self, other: &CubicScalar) -> bool {
        self.compatible(other).is_ok() && self.params.backend.vec_eq(&self.coeffs, &other.coeffs)
    }

    /// Random element with independently sampled coefficients.
    pub fn sample<R: rand::Rng + ?Sized>(rng: &mut R, params: &Arc<CubicParams>, carrier: Subset) -> Result<Self> {
        params.check_carrier(carrier)?;
        let coeffs = (0..carrier.subset_count())
            .map(|_| sample_with(rng, &params.backend, false))
            .collect();
        Ok(CubicScalar { params: params.clone(), carrier, coeffs })
    }

    /// True when every coefficient outside the core cube `{A : B ⊆ A}` vanishes.
    pub fn in_core_ideal(&self, b: Subset) -> bool {
        self.terms().all(|(a, v)| b.is_subset_of(a) || v.is_zero())
    }
}

/// Result of [`CubicScalar::split_units`].
#[derive(Debug, Clone, PartialEq)]
pub struct UnitSplit {
    pub units: Subset,
    pub zeros: Subset,
    pub parts: Vec<CubicScalar>,
}

fn classify(params: &CubicParams, carrier: Subset) -> Result<(Subset, Subset)> {
    let mut units = Subset::EMPTY;
    let mut zeros = Subset::EMPTY;
    for k in carrier.dirs() {
        let t = params.t(k);
        if t.is_zero() {
            zeros = zeros.with(k);
        } else if t.is_unit() {
            units = units.with(k);
        } else {
            return Err(Error::NonUnitParameter(format!("t_{k} = {t}")));
        }
    }
    Ok((units, zeros))
}

/// `t_k^{-1}` for every `k` in `dirs` (indexed by `k - 1`, zero elsewhere).
fn unit_inverses(params: &CubicParams, dirs: Subset) -> Result<Vec<RingValue>> {
    let mut inv = vec![params.backend.zero(); params.n()];
    for k in dirs.dirs() {
        inv[k - 1] = params
            .t(k)
            .try_invert()
            .ok_or_else(|| Error::NotUnit(format!("parameter t_{k} = {}", params.t(k))))?;
    }
    Ok(inv)
}

/// In-place subset transform over slot indices: for each bit, `w[s] = op(w[s], w[s ^ bit])`
/// whenever `s` has the bit. With `+` this is the zeta (subset-sum) transform,
/// with `-` its Möbius inverse.
fn zeta<T>(w: &mut [T], op: impl Fn(&T, &T) -> T) {
    let len = w.len();
    debug_assert!(len.is_power_of_two());
    let mut bit = 1;
    while bit < len {
        for s in 0..len {
            if s & bit != 0 {
                w[s] = op(&w[s], &w[s ^ bit]);
            }
        }
        bit <<= 1;
    }
}

/// Basis of the core ideal `I_B^C = span{e_A : B ⊆ A ⊆ C}`.
pub fn core_ideal_basis(b: Subset, c: Subset) -> Result<Vec<Subset>> {
    if b.is_empty() {
        return Err(Error::InvalidSubset("core cube needs a non-empty B".into()));
    }
    if !b.is_subset_of(c) {
        return Err(Error::InvalidSubset(format!("{b} is not inside {c}")));
    }
    Ok(c.subsets().filter(|a| b.is_subset_of(*a)).collect())
}

impl fmt::Display for CubicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, v) in self.terms() {
            if v.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if a.is_empty() {
                write!(f, "{v}")?;
            } else {
                write!(f, "({v})e{}", a.name())?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! forward_cubic_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for CubicScalar {
            type Output = CubicScalar;
            fn $method(self, rhs: CubicScalar) -> CubicScalar {
                self.$checked(&rhs).expect("cubic arithmetic across rings")
            }
        }

        impl<'a> $trait<&'a CubicScalar> for &'a CubicScalar {
            type Output = CubicScalar;
            fn $method(self, rhs: &'a CubicScalar) -> CubicScalar {
                self.$checked(rhs).expect("cubic arithmetic across rings")
            }
        }
    };
}

forward_cubic_op!(Add, add, try_add);
forward_cubic_op!(Sub, sub, try_sub);
forward_cubic_op!(Mul, mul, try_mul);

impl Neg for CubicScalar {
    type Output = CubicScalar;
    fn neg(self) -> CubicScalar {
        self.map_coeffs(|v| -v)
    }
}

impl Ring for CubicScalar {
    type Ctx = CubicCtx;

    fn zero_in(ctx: &CubicCtx) -> Self {
        CubicScalar::zero(&ctx.params, ctx.carrier).expect("valid cubic context")
    }

    fn one_in(ctx: &CubicCtx) -> Self {
        CubicScalar::one(&ctx.params, ctx.carrier).expect("valid cubic context")
    }

    fn from_rational_in(ctx: &CubicCtx, q: &BigRational) -> Result<Self> {
        let c = ctx.params.backend.from_rational(q)?;
        CubicScalar::constant(&ctx.params, ctx.carrier, c)
    }

    fn belongs_to(&self, ctx: &CubicCtx) -> bool {
        self.carrier == ctx.carrier && same_params(&self.params, &ctx.params)
    }

    fn try_invert(&self) -> Option<Self> {
        self.try_inverse()
    }

    fn apply_primitive(&self, prim: Primitive) -> Result<Self> {
        self.apply_native(prim)
    }
}

#[cfg(test)]
mod tests;
