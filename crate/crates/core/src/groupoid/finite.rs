use std::collections::BTreeSet;

use super::Groupoid;
use crate::error::{Error, Result};

/// A set of arrows of a finite groupoid, by index.
pub type ArrowSet = BTreeSet<usize>;

/// A finite groupoid stored as explicit tables. Objects and arrows are indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: usize,
    source: Vec<usize>,
    target: Vec<usize>,
    units: Vec<usize>,
    inverse: Vec<usize>,
    /// `compose[a * arrows + b]` is `a ∗ b` when `source(a) = target(b)`.
    compose: Vec<Option<usize>>,
}

impl FiniteGroupoid {
    /// Builds a groupoid from its tables and checks every axiom exhaustively.
    pub fn new(
        objects: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        units: Vec<usize>,
        inverse: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Result<Self> {
        let g = Self::from_tables_unchecked(objects, source, target, units, inverse, compose)?;
        g.validate()?;
        Ok(g)
    }

    /// Builds a groupoid from its tables checking only their shapes. Used to
    /// feed deliberately broken structures to the law checkers.
    pub fn from_tables_unchecked(
        objects: usize,
        source: Vec<usize>,
        target: Vec<usize>,
        units: Vec<usize>,
        inverse: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Result<Self> {
        let n = source.len();
        let bad = |what: &str| Err(Error::InvalidStructure(what.to_string()));
        if target.len() != n || inverse.len() != n || compose.len() != n * n || units.len() != objects {
            return bad("table sizes do not match");
        }
        if source.iter().chain(&target).any(|&x| x >= objects)
            || units.iter().chain(&inverse).any(|&a| a >= n)
            || compose.iter().flatten().any(|&a| a >= n)
        {
            return bad("table entry out of range");
        }
        for a in 0..n {
            for b in 0..n {
                if compose[a * n + b].is_some() != (source[a] == target[b]) {
                    return bad("composition defined exactly on composable pairs is required");
                }
            }
        }
        Ok(FiniteGroupoid { objects, source, target, units, inverse, compose })
    }

    /// The pair groupoid of `{0..m-1}`: arrow `y·m + x` goes from `x` to `y`.
    pub fn pair(m: usize) -> Self {
        let n = m * m;
        let source = (0..n).map(|a| a % m).collect();
        let target = (0..n).map(|a| a / m).collect();
        let units = (0..m).map(|x| x * m + x).collect();
        let inverse = (0..n).map(|a| (a % m) * m + a / m).collect();
        let mut compose = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                // (z, y) ∗ (y, x) = (z, x)
                if a % m == b / m {
                    compose[a * n + b] = Some((a / m) * m + b % m);
                }
            }
        }
        FiniteGroupoid::new(m, source, target, units, inverse, compose).expect("pair groupoid")
    }

    pub fn pair_arrow(&self, target: usize, source: usize) -> usize {
        target * self.objects + source
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn arrow_count(&self) -> usize {
        self.source.len()
    }

    pub fn arrows(&self) -> std::ops::Range<usize> {
        0..self.arrow_count()
    }

    pub fn composite(&self, a: usize, b: usize) -> Option<usize> {
        self.compose[a * self.arrow_count() + b]
    }

    /// All triples `(a, b, c)` with `source(a) = target(b)` and `source(b) = target(c)`.
    pub fn composable_triples(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for c in self.arrows() {
            for b in self.arrows().filter(|&b| self.source[b] == self.target[c]) {
                for a in self.arrows().filter(|&a| self.source[a] == self.target[b]) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        for [a, b, c] in self.composable_triples() {
            if let Some(axiom) = super::groupoid_axioms(self, &a, &b, &c)? {
                return Err(Error::InvalidStructure(format!("{axiom} fails on ({a}, {b}, {c})")));
            }
        }
        Ok(())
    }
}

impl Groupoid for FiniteGroupoid {
    type Object = usize;
    type Arrow = usize;

    fn source(&self, a: &usize) -> usize {
        self.source[*a]
    }

    fn target(&self, a: &usize) -> usize {
        self.target[*a]
    }

    fn unit(&self, x: &usize) -> usize {
        self.units[*x]
    }

    fn inverse(&self, a: &usize) -> usize {
        self.inverse[*a]
    }

    fn compose(&self, a: &usize, b: &usize) -> Result<usize> {
        self.composite(*a, *b)
            .ok_or_else(|| Error::NotComposable(format!("arrows {a} and {b}")))
    }

    fn objects_eq(&self, x: &usize, y: &usize) -> bool {
        x == y
    }

    fn arrows_eq(&self, a: &usize, b: &usize) -> bool {
        a == b
    }
}

/// `S ∗ R = { s ∗ r | s ∈ S, r ∈ R, source(s) = target(r) }`.
pub fn rel_compose(g: &FiniteGroupoid, s: &ArrowSet, r: &ArrowSet) -> ArrowSet {
    let mut out = ArrowSet::new();
    for &a in s {
        for &b in r {
            if let Some(c) = g.composite(a, b) {
                out.insert(c);
            }
        }
    }
    out
}

/// All unit arrows.
pub fn unit_section(g: &FiniteGroupoid) -> ArrowSet {
    (0..g.object_count()).map(|x| g.unit(&x)).collect()
}

/// True iff `s` meets every source fiber and every target fiber exactly once.
pub fn is_bisection(g: &FiniteGroupoid, s: &ArrowSet) -> bool {
    let mut by_source = vec![0usize; g.object_count()];
    let mut by_target = vec![0usize; g.object_count()];
    for &a in s {
        if a >= g.arrow_count() {
            return false;
        }
        by_source[g.source(&a)] += 1;
        by_target[g.target(&a)] += 1;
    }
    by_source.iter().chain(&by_target).all(|&c| c == 1)
}

/// Every bisection, found by choosing one arrow per source fiber.
pub fn bisections(g: &FiniteGroupoid) -> Vec<ArrowSet> {
    let fibers: Vec<Vec<usize>> =
        (0..g.object_count()).map(|x| g.arrows().filter(|a| g.source(a) == x).collect()).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; fibers.len()];
    if fibers.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let s: ArrowSet = choice.iter().zip(&fibers).map(|(&i, f)| f[i]).collect();
        if is_bisection(g, &s) {
            out.push(s);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == fibers.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < fibers[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// The bijection of objects induced by a bisection: `x ↦ target(s_x)` where
/// `s_x` is the arrow of `s` with source `x`.
pub fn bisection_map(g: &FiniteGroupoid, s: &ArrowSet) -> Vec<usize> {
    let mut map = vec![usize::MAX; g.object_count()];
    for &a in s {
        map[g.source(&a)] = g.target(&a);
    }
    map
}
