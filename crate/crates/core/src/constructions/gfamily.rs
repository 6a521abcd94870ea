use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;

use super::{avoiding_stars, check_nk, check_sizes, check_within, ell_signed, filtered};
use crate::error::{invalid, Result};
use crate::setcore::{binom, to_count, BigCount, Family, KSet};

/// The non-star part of a G-family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Tail {
    /// `H1(X, C)`: sets containing `X` and meeting `C \ X`, plus the
    /// `k`-subsets of the `(k+1)`-set `C`.
    H1 { x: KSet, c: KSet },
    /// `H2(Z)`: sets meeting the `(t+2)`-set `Z` in at least `t+1` elements.
    H2 { z: KSet },
}

impl Tail {
    pub fn support(&self) -> KSet {
        match *self {
            Tail::H1 { c, .. } => c,
            Tail::H2 { z } => z,
        }
    }

    pub fn contains(&self, f: KSet, t: u32) -> bool {
        match *self {
            Tail::H1 { x, c } => (x.is_subset(f) && !f.is_disjoint(c.difference(x))) || f.is_subset(c),
            Tail::H2 { z } => f.intersection_size(z) > t as usize,
        }
    }

    /// `(p, number of p-subsets P of the support with the tail predicate
    /// holding on sets meeting the support exactly in P)`.
    fn profile(&self, k: u32, t: u32) -> Vec<(i64, BigInt)> {
        let (k, t) = (i64::from(k), i64::from(t));
        match self {
            Tail::H1 { .. } => (t + 1..=k)
                .map(|p| {
                    let mut count = binom(k + 1 - t, p - t);
                    if p == k {
                        count += t;
                    }
                    (p, count)
                })
                .collect(),
            Tail::H2 { .. } => (t + 1..=t + 2).map(|p| (p, binom(t + 2, p))).collect(),
        }
    }
}

/// `S(T_1) ∪ ... ∪ S(T_{s-1})` together with a tail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GFamilySpec {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub centers: Vec<KSet>,
    pub tail: Tail,
}

impl GFamilySpec {
    /// Checks cardinalities only; the pieces may overlap. `n` may exceed the
    /// enumeration cap, in which case only [`g_size`] applies.
    pub fn new(n: u32, k: u32, t: u32, centers: Vec<KSet>, tail: Tail) -> Result<Self> {
        check_sizes(n, k)?;
        if t == 0 || t >= k {
            return Err(invalid(format!("need k > t >= 1, got k = {k}, t = {t}")));
        }
        for &c in &centers {
            check_within(n, c, "center")?;
            if c.len() != t as usize {
                return Err(invalid(format!("center {c} is not a {t}-set")));
            }
        }
        check_within(n, tail.support(), "tail support")?;
        match tail {
            Tail::H1 { x, c } => {
                if x.len() != t as usize || c.len() != k as usize + 1 || !x.is_subset(c) {
                    return Err(invalid("H1 tail needs a t-set X inside a (k+1)-set C"));
                }
            }
            Tail::H2 { z } => {
                if z.len() != t as usize + 2 {
                    return Err(invalid("H2 tail needs a (t+2)-set Z"));
                }
            }
        }
        Ok(GFamilySpec { n, k, t, centers, tail })
    }

    /// Windows laid out left to right: `T_r = [(r-1)t+1, rt]`, then
    /// `X = [(s-1)t+1, st]` inside `C = [(s-1)t+1, (s-1)t+k+1]`, or
    /// `Z = [(s-1)t+1, st+2]`.
    pub fn canonical(n: u32, k: u32, t: u32, s: u32, h1_tail: bool) -> Result<Self> {
        if s == 0 {
            return Err(invalid("s must be at least 1"));
        }
        if t == 0 || t >= k {
            return Err(invalid(format!("need k > t >= 1, got k = {k}, t = {t}")));
        }
        let base = u64::from(s - 1) * u64::from(t);
        let top = if h1_tail { base + u64::from(k) + 1 } else { base + u64::from(t) + 2 };
        if top > u64::from(n) {
            return Err(invalid(format!("canonical windows need n >= {top}, got n = {n}")));
        }
        let base = base as u32;
        let centers = (1..s).map(|r| KSet::interval((r - 1) * t + 1, r * t)).collect();
        let tail = if h1_tail {
            Tail::H1 { x: KSet::interval(base + 1, base + t), c: KSet::interval(base + 1, base + k + 1) }
        } else {
            Tail::H2 { z: KSet::interval(base + 1, base + t + 2) }
        };
        GFamilySpec::new(n, k, t, centers, tail)
    }

    pub fn s(&self) -> usize {
        self.centers.len() + 1
    }

    /// Centres pairwise disjoint and disjoint from the tail support.
    pub fn is_disjoint(&self) -> bool {
        self.centers
            .iter()
            .chain(std::iter::once(&self.tail.support()))
            .tuple_combinations()
            .all(|(a, b)| a.is_disjoint(*b))
    }

    /// The same spec with `T_1` replaced.
    pub fn with_first_center(&self, center: KSet) -> Result<Self> {
        let mut centers = self.centers.clone();
        let first = centers.first_mut().ok_or_else(|| invalid("spec has no centers"))?;
        *first = center;
        GFamilySpec::new(self.n, self.k, self.t, centers, self.tail)
    }

    pub fn contains(&self, f: KSet) -> bool {
        self.centers.iter().any(|c| c.is_subset(f)) || self.tail.contains(f, self.t)
    }
}

pub fn g_family(spec: &GFamilySpec) -> Result<Family> {
    check_nk(spec.n, spec.k)?;
    Ok(filtered(spec.n, spec.k, |f| spec.contains(f)))
}

/// [`g_family`] for a spec with an `H1(X, C)` tail.
pub fn g1_family(spec: &GFamilySpec) -> Result<Family> {
    match spec.tail {
        Tail::H1 { .. } => g_family(spec),
        Tail::H2 { .. } => Err(invalid("G1 needs an H1 tail")),
    }
}

/// [`g_family`] for a spec with an `H2(Z)` tail.
pub fn g2_family(spec: &GFamilySpec) -> Result<Family> {
    match spec.tail {
        Tail::H2 { .. } => g_family(spec),
        Tail::H1 { .. } => Err(invalid("G2 needs an H2 tail")),
    }
}

/// Closed-form size of a G-family with pairwise-disjoint pieces: the star
/// union, plus tail members lying in no star, counted by how they meet the
/// tail support.
pub fn g_size(spec: &GFamilySpec) -> Result<BigCount> {
    if !spec.is_disjoint() {
        return Err(invalid("closed form needs pairwise-disjoint centers and tail support"));
    }
    let m = spec.centers.len() as u32;
    let y = spec.tail.support().len() as u32;
    let mut total = ell_signed(spec.n, spec.k, spec.t, m);
    for (p, count) in spec.tail.profile(spec.k, spec.t) {
        total += count * avoiding_stars(spec.n, y, m, spec.t, i64::from(spec.k) - p);
    }
    Ok(to_count(total))
}

/// Size of the canonical `G1` family.
pub fn g1_size(n: u32, k: u32, t: u32, s: u32) -> Result<BigCount> {
    g_size(&GFamilySpec::canonical(n, k, t, s, true)?)
}

/// Size of the canonical `G2` family.
pub fn g2_size(n: u32, k: u32, t: u32, s: u32) -> Result<BigCount> {
    g_size(&GFamilySpec::canonical(n, k, t, s, false)?)
}
