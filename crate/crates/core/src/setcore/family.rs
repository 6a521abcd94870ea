use std::ops::Deref;

use itertools::Itertools;

use super::kset::{KSet, MAX_GROUND};
use crate::error::{invalid, Error, Result};

/// A `k`-uniform family over `[n]`: distinct members kept in canonical
/// (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    n: u32,
    k: u32,
    members: Vec<KSet>,
}

fn check_params(n: u32, k: u32) -> Result<()> {
    if n > MAX_GROUND {
        return Err(invalid(format!("ground set size {n} exceeds {MAX_GROUND}")));
    }
    if k > n {
        return Err(invalid(format!("uniformity {k} exceeds ground set size {n}")));
    }
    Ok(())
}

fn check_member(n: u32, k: u32, set: KSet, index: usize) -> Result<()> {
    if set.len() != k as usize {
        return Err(Error::InvariantViolation {
            location: format!("member {index}"),
            message: format!("{set} has {} elements, expected {k}", set.len()),
        });
    }
    if set.max_element().is_some_and(|m| m > n) {
        return Err(Error::InvariantViolation {
            location: format!("member {index}"),
            message: format!("{set} has an element above {n}"),
        });
    }
    Ok(())
}

impl Family {
    /// Strict constructor: every member must be a `k`-subset of `[n]` and no
    /// member may repeat.
    pub fn new<I>(n: u32, k: u32, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = KSet>,
    {
        check_params(n, k)?;
        let mut members: Vec<KSet> = members.into_iter().collect();
        for (i, &m) in members.iter().enumerate() {
            check_member(n, k, m, i)?;
        }
        members.sort_unstable();
        if let Some((a, _)) = members.iter().tuple_windows().find(|(a, b)| a == b) {
            return Err(Error::InvariantViolation {
                location: "members".into(),
                message: format!("duplicate set {a}"),
            });
        }
        Ok(Family { n, k, members })
    }

    /// Like [`Family::new`] but silently merges repeated members.
    pub fn from_sets<I>(n: u32, k: u32, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = KSet>,
    {
        check_params(n, k)?;
        let mut members: Vec<KSet> = members.into_iter().collect();
        for (i, &m) in members.iter().enumerate() {
            check_member(n, k, m, i)?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(Family { n, k, members })
    }

    /// Members are already valid, sorted and distinct.
    pub(crate) fn from_sorted_unchecked(n: u32, k: u32, members: Vec<KSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|m| m.len() == k as usize));
        Family { n, k, members }
    }

    pub fn empty(n: u32, k: u32) -> Result<Self> {
        check_params(n, k)?;
        Ok(Family { n, k, members: Vec::new() })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[KSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, KSet> {
        self.members.iter()
    }

    pub fn contains(&self, set: &KSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    /// Position of `set` in canonical order.
    pub fn index_of(&self, set: &KSet) -> Option<usize> {
        self.members.binary_search(set).ok()
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        if (self.n, self.k) != (other.n, other.k) {
            return Err(invalid("union of families with different (n, k)"));
        }
        let members = self.members.iter().merge(other.members.iter()).dedup().copied().collect();
        Ok(Family::from_sorted_unchecked(self.n, self.k, members))
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &Family) -> Family {
        let members = self.members.iter().filter(|m| !other.contains(m)).copied().collect();
        Family::from_sorted_unchecked(self.n, self.k, members)
    }

    pub fn filter<P: FnMut(&KSet) -> bool>(&self, mut keep: P) -> Family {
        let members = self.members.iter().filter(|m| keep(m)).copied().collect();
        Family::from_sorted_unchecked(self.n, self.k, members)
    }

    /// Adds one `k`-set; a no-op when it is already a member.
    pub fn with_member(&self, set: KSet) -> Result<Family> {
        check_member(self.n, self.k, set, self.len())?;
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&set) {
            members.insert(pos, set);
        }
        Ok(Family::from_sorted_unchecked(self.n, self.k, members))
    }

    /// Image under a permutation of `[n]` given as 1-based images of `1..=n`.
    pub fn relabel(&self, map: &[u32]) -> Result<Family> {
        if map.len() != self.n as usize || !map.iter().copied().sorted().eq(1..=self.n) {
            return Err(invalid("relabelling must be a permutation of [n]"));
        }
        let mut members: Vec<KSet> = self.members.iter().map(|m| m.relabel(map)).collect();
        members.sort_unstable();
        Ok(Family::from_sorted_unchecked(self.n, self.k, members))
    }
}

/// Serialized as `{"n", "k", "sets"}`, matching the JSON file format.
impl serde::Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Family", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("sets", &self.members)?;
        st.end()
    }
}

/// Serialized as `{"n", "t", "sets"}`.
impl serde::Serialize for TSetSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("TSetSystem", 3)?;
        st.serialize_field("n", &self.0.n)?;
        st.serialize_field("t", &self.0.k)?;
        st.serialize_field("sets", &self.0.members)?;
        st.end()
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a KSet;
    type IntoIter = std::slice::Iter<'a, KSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// All of `[n]` choose `k` in canonical order.
pub fn enumerate_ksets(n: u32, k: u32) -> Result<Family> {
    check_params(n, k)?;
    let members = ksets(n, k).collect();
    Ok(Family::from_sorted_unchecked(n, k, members))
}

/// Lazy canonical-order iterator over the `k`-subsets of `[n]`.
pub(crate) fn ksets(n: u32, k: u32) -> impl Iterator<Item = KSet> {
    (1..=n)
        .combinations(k as usize)
        .map(|c| KSet::from_elements(c).expect("combination of [n]"))
}

/// A collection of `t`-subsets of `[n]`: star centres and `t`-covering families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TSetSystem(Family);

impl TSetSystem {
    pub fn new<I>(n: u32, t: u32, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = KSet>,
    {
        Family::new(n, t, members).map(TSetSystem)
    }

    pub fn from_family(family: Family) -> Self {
        TSetSystem(family)
    }

    pub fn t(&self) -> u32 {
        self.0.k()
    }

    pub fn as_family(&self) -> &Family {
        &self.0
    }

    pub fn into_family(self) -> Family {
        self.0
    }

    /// True when the members are pairwise disjoint.
    pub fn is_pairwise_disjoint(&self) -> bool {
        self.0.iter().tuple_combinations().all(|(a, b)| a.is_disjoint(*b))
    }
}

impl Deref for TSetSystem {
    type Target = Family;

    fn deref(&self) -> &Family {
        &self.0
    }
}
