use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Result};

/// Largest supported ground set: one machine word.
pub const MAX_GROUND: u32 = 64;

/// A finite subset of the ground set `[n] = {1, ..., n}` with `n <= 64`.
///
/// Elements are 1-based in every public method; element `e` is stored in bit
/// `e - 1`. Ordering is lexicographic on the ascending element lists, which is
/// the canonical order used for every family.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KSet(u64);

impl KSet {
    pub const EMPTY: KSet = KSet(0);

    /// Builds a set from 1-based elements, rejecting zero, elements above 64
    /// and repeated elements.
    pub fn from_elements<I>(elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > MAX_GROUND {
                return Err(invalid(format!("element {e} outside 1..={MAX_GROUND}")));
            }
            let b = 1u64 << (e - 1);
            if bits & b != 0 {
                return Err(invalid(format!("element {e} repeated")));
            }
            bits |= b;
        }
        Ok(KSet(bits))
    }

    /// Panicking variant of [`KSet::from_elements`] for literals in code and tests.
    pub fn of(elements: &[u32]) -> Self {
        Self::from_elements(elements.iter().copied()).expect("valid set literal")
    }

    pub const fn from_bits(bits: u64) -> Self {
        KSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The interval `[lo, hi]`; empty when `lo > hi`.
    pub fn interval(lo: u32, hi: u32) -> Self {
        if lo > hi {
            return KSet::EMPTY;
        }
        assert!(lo >= 1 && hi <= MAX_GROUND, "interval [{lo},{hi}] out of range");
        let width = hi - lo + 1;
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        KSet(mask << (lo - 1))
    }

    /// `[n]` itself.
    pub fn ground(n: u32) -> Self {
        Self::interval(1, n)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: u32) -> bool {
        (1..=MAX_GROUND).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn is_subset(self, other: KSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: KSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: KSet) -> KSet {
        KSet(self.0 | other.0)
    }

    pub fn intersection(self, other: KSet) -> KSet {
        KSet(self.0 & other.0)
    }

    pub fn difference(self, other: KSet) -> KSet {
        KSet(self.0 & !other.0)
    }

    pub fn intersection_size(self, other: KSet) -> usize {
        (self.0 & other.0).count_ones() as usize
    }

    pub fn with(self, e: u32) -> KSet {
        self.union(KSet::of(&[e]))
    }

    pub fn without(self, e: u32) -> KSet {
        self.difference(KSet::of(&[e]))
    }

    pub fn min_element(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max_element(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Ascending 1-based elements.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn elements(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Applies a relabelling `e -> map[e - 1]` (1-based images).
    pub fn relabel(self, map: &[u32]) -> KSet {
        KSet::from_elements(self.iter().map(|e| map[e as usize - 1])).expect("relabelling is a bijection")
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(e + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

/// `|A ∩ B|`.
pub fn intersection_size(a: KSet, b: KSet) -> usize {
    a.intersection_size(b)
}

impl Ord for KSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Elements below the first difference are shared; whoever owns that
        // element is smaller unless the other list has already ended.
        let m = diff.trailing_zeros();
        let above = if m == 63 { 0 } else { !((1u64 << (m + 1)) - 1) };
        if self.0 & (1u64 << m) != 0 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for KSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as the ascending element list.
impl serde::Serialize for KSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for KSet {
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
