//! Small finite subsets of `{1, 2, ..., 31}` stored as bit masks.

use std::fmt;

/// A subset of `{1, ..., 31}`; bit `i - 1` marks element `i`.
///
/// Ordering is by mask value, which is stable and deterministic but not
/// lexicographic on element lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const MAX_ELEMENT: usize = 31;

    pub const fn empty() -> Self {
        Subset(0)
    }

    pub const fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    /// `{1, ..., m}`.
    pub fn interval(m: usize) -> Self {
        assert!(m <= Self::MAX_ELEMENT);
        if m == 0 {
            Subset(0)
        } else {
            Subset(u32::MAX >> (32 - m))
        }
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut s = Subset(0);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn insert(&mut self, e: usize) {
        assert!(
            (1..=Self::MAX_ELEMENT).contains(&e),
            "subset element {e} out of range"
        );
        self.0 |= 1 << (e - 1);
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=Self::MAX_ELEMENT).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn sum(self) -> usize {
        self.iter().sum()
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=Self::MAX_ELEMENT).filter(move |&e| self.contains(e))
    }

    pub fn elems(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Every subset of `self`, the empty set first and `self` last.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Subset(cur))
        })
    }

    /// All subsets of `{1, ..., m}`.
    pub fn all_of(m: usize) -> impl Iterator<Item = Subset> {
        Subset::interval(m).subsets()
    }

    /// The composition `(s1, s2 - s1, ..., n - s_l)` of `n`.
    ///
    /// Requires `max(self) <= n`; an element equal to `n` yields no trailing
    /// zero part.
    pub fn composition(self, n: usize) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        let mut prev = 0;
        for s in self.iter() {
            debug_assert!(s <= n);
            parts.push(s - prev);
            prev = s;
        }
        if prev < n {
            parts.push(n - prev);
        }
        parts
    }

    /// Inverse of [`Subset::composition`]: partial sums except the last.
    pub fn from_composition(parts: &[usize]) -> Subset {
        let mut s = Subset::empty();
        let mut acc = 0;
        for &p in parts.iter().take(parts.len().saturating_sub(1)) {
            acc += p;
            if acc > 0 {
                s.insert(acc);
            }
        }
        s
    }

    /// `{2, 4, ..., }` up to `m`.
    pub fn evens_up_to(m: usize) -> Subset {
        Subset::from_elems((2..=m).step_by(2))
    }

    /// `{1, 3, ..., }` up to `m`.
    pub fn odds_up_to(m: usize) -> Subset {
        Subset::from_elems((1..=m).step_by(2))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
