//! Subsets of `{1..n}` as bitmasks (bit `k-1` stands for direction `k`).

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order of a cubic ring.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `{1..n}`.
    pub fn full(n: usize) -> Subset {
        Subset(((1u64 << n) - 1) as u32)
    }

    /// `{k}` for a 1-based direction.
    pub fn single(k: usize) -> Subset {
        debug_assert!((1..=MAX_ORDER).contains(&k));
        Subset(1 << (k - 1))
    }

    pub fn from_dirs(dirs: &[usize]) -> Subset {
        dirs.iter().fold(Subset::EMPTY, |s, &k| s.with(k))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, k: usize) -> bool {
        k >= 1 && self.0 & (1 << (k - 1)) != 0
    }

    pub fn with(self, k: usize) -> Subset {
        Subset(self.0 | (1 << (k - 1)))
    }

    pub fn without(self, k: usize) -> Subset {
        Subset(self.0 & !(1 << (k - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Directions in ascending order.
    pub fn dirs(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 & (1 << i) != 0).map(|i| i + 1)
    }

    /// Largest direction, if any.
    pub fn max_dir(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Number of subsets of `self`.
    pub fn subset_count(self) -> usize {
        1 << self.len()
    }

    /// The subset of `self` whose compressed index is `index`: bit `i` of the
    /// index selects the `i`-th smallest direction of `self`.
    pub fn deposit(self, index: usize) -> Subset {
        let mut out = 0u32;
        let mut i = 0;
        let mut rest = self.0;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            if index & (1 << i) != 0 {
                out |= low;
            }
            rest &= rest - 1;
            i += 1;
        }
        Subset(out)
    }

    /// Inverse of [`Subset::deposit`] for `sub ⊆ self`.
    pub fn compress(self, sub: Subset) -> usize {
        debug_assert!(sub.is_subset_of(self));
        let mut out = 0usize;
        let mut i = 0;
        let mut rest = self.0;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            if sub.0 & low != 0 {
                out |= 1 << i;
            }
            rest &= rest - 1;
            i += 1;
        }
        out
    }

    /// All subsets of `self`, in compressed-index order (so `∅` first, `self` last).
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        (0..self.subset_count()).map(move |i| self.deposit(i))
    }

    /// Name used by the JSON schema: `∅`, `1`, `12`, or `1,10` once a
    /// direction exceeds 9.
    pub fn name(self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let dirs: Vec<String> = self.dirs().map(|k| k.to_string()).collect();
        if self.dirs().all(|k| k <= 9) {
            dirs.concat()
        } else {
            dirs.join(",")
        }
    }

    pub fn parse_name(name: &str) -> Result<Subset> {
        let name = name.trim();
        if name == "∅" || name.is_empty() || name == "0" {
            return Ok(Subset::EMPTY);
        }
        let dirs: Vec<usize> = if name.contains(',') {
            name.split(',')
                .map(|d| d.trim().parse::<usize>().map_err(|_| Error::InvalidSubset(name.into())))
                .collect::<Result<_>>()?
        } else {
            name.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::InvalidSubset(name.into())))
                .collect::<Result<_>>()?
        };
        let mut s = Subset::EMPTY;
        for k in dirs {
            if !(1..=MAX_ORDER).contains(&k) || s.contains(k) {
                return Err(Error::InvalidSubset(name.into()));
            }
            s = s.with(k);
        }
        let canonical = s.name();
        if canonical != name {
            return Err(Error::InvalidSubset(format!("{name} (expected ascending form {canonical})")));
        }
        Ok(s)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
