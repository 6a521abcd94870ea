//! Generators for the named extremal families and exact evaluators for their
//! sizes.
//!
//! Every generator filters `[n]` choose `k` by the defining membership
//! predicate, so outputs come out in canonical order. Closed-form sizes are
//! inclusion-exclusion sums over exact big integers.

mod gfamily;
mod hm;
mod intersecting;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::setcore::{binom, ksets, to_count, BigCount, Family, KSet, TSetSystem};

pub use gfamily::{g1_family, g1_size, g2_family, g2_size, g_family, g_size, GFamilySpec, Tail};
pub use hm::{h_size, hm1_family, hm1_size, hm_t_family, Hm1Size, HmCase, HmTypeSpec};
pub use intersecting::{family_i, family_ii, h1_family, h1_size, h2_family, h2_size, FamilyISpec};

pub(crate) fn filtered(n: u32, k: u32, keep: impl Fn(KSet) -> bool) -> Family {
    Family::from_sorted_unchecked(n, k, ksets(n, k).filter(|&f| keep(f)).collect())
}

/// `k <= n` only; for closed forms, which work beyond the enumeration cap.
fn check_sizes(n: u32, k: u32) -> Result<()> {
    if k > n {
        return Err(invalid(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

fn check_nk(n: u32, k: u32) -> Result<()> {
    Family::empty(n, k).map(|_| ())
}

fn check_within(n: u32, set: KSet, what: &str) -> Result<()> {
    if set.max_element().is_some_and(|m| m > n) {
        return Err(invalid(format!("{what} {set} is not a subset of [{n}]")));
    }
    Ok(())
}

/// The star of all `k`-sets containing `center`.
pub fn star(n: u32, k: u32, center: KSet) -> Result<Family> {
    check_nk(n, k)?;
    check_within(n, center, "center")?;
    if center.len() > k as usize {
        return Err(invalid(format!("center {center} is larger than k = {k}")));
    }
    let rest = KSet::ground(n).difference(center).elements();
    let extra = k as usize - center.len();
    let mut members: Vec<KSet> = itertools::Itertools::combinations(rest.into_iter(), extra)
        .map(|c| KSet::from_elements(c).unwrap().union(center))
        .collect();
    members.sort_unstable();
    Ok(Family::from_sorted_unchecked(n, k, members))
}

/// Union of the stars centred at the members of `centers`.
pub fn star_union(n: u32, k: u32, centers: &TSetSystem) -> Result<Family> {
    check_nk(n, k)?;
    if centers.n() != n {
        return Err(invalid(format!("centers live on [{}], not [{n}]", centers.n())));
    }
    if centers.t() > k {
        return Err(invalid(format!("centers of size {} exceed k = {k}", centers.t())));
    }
    let cs = centers.members().to_vec();
    Ok(filtered(n, k, |f| cs.iter().any(|c| c.is_subset(f))))
}

/// Size of the union of `m` stars with pairwise-disjoint `t`-set centres.
pub fn ell(n: u32, k: u32, t: u32, m: u32) -> Result<BigCount> {
    if m > 0 && t == 0 {
        return Err(invalid("t must be positive when m > 0"));
    }
    if u64::from(n) < u64::from(m) * u64::from(t) {
        return Err(invalid(format!("{m} disjoint {t}-sets do not fit in [{n}]")));
    }
    Ok(to_count(ell_signed(n, k, t, m)))
}

pub(crate) fn ell_signed(n: u32, k: u32, t: u32, m: u32) -> BigInt {
    let (n, k, t) = (i64::from(n), i64::from(k), i64::from(t));
    let mut total = BigInt::zero();
    for j in 1..=i64::from(m) {
        let term = binom(i64::from(m), j) * binom(n - j * t, k - j * t);
        if j % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Number of `rest`-subsets of the `n - y` elements outside a `y`-element
/// region that contain none of `m` pairwise-disjoint `t`-sets lying there.
pub(crate) fn avoiding_stars(n: u32, y: u32, m: u32, t: u32, rest: i64) -> BigInt {
    let free = i64::from(n) - i64::from(y);
    let t = i64::from(t);
    let mut total = BigInt::zero();
    for j in 0..=i64::from(m) {
        let term = binom(i64::from(m), j) * binom(free - j * t, rest - j * t);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The matching-conjecture family `{F : |F ∩ [is+i-1]| >= i}`.
pub fn emc_family(n: u32, k: u32, s: u32, i: u32) -> Result<Family> {
    let window = emc_window(n, k, s, i)?;
    Ok(filtered(n, k, |f| f.intersection_size(window) >= i as usize))
}

/// `C(n, k) - sum_{j < i} C(w, j) C(n - w, k - j)` with `w = is + i - 1`.
pub fn emc_size(n: u32, k: u32, s: u32, i: u32) -> Result<BigCount> {
    emc_window(n, k, s, i)?;
    let (n, k, w) = (i64::from(n), i64::from(k), i64::from(i) * i64::from(s) + i64::from(i) - 1);
    let mut total = binom(n, k);
    for j in 0..i64::from(i) {
        total -= binom(w, j) * binom(n - w, k - j);
    }
    Ok(to_count(total))
}

fn emc_window(n: u32, k: u32, s: u32, i: u32) -> Result<KSet> {
    check_nk(n, k)?;
    if i == 0 || i > k {
        return Err(invalid(format!("i = {i} must satisfy 1 <= i <= k = {k}")));
    }
    let top = u64::from(i) * u64::from(s) + u64::from(i) - 1;
    if top > u64::from(n) {
        return Err(invalid(format!("window [1, {top}] does not fit in [{n}]")));
    }
    Ok(KSet::interval(1, top as u32))
}

/// Permutation of `[n]` (1-based images of `1..=n`) sending the elements of
/// `blocks`, taken in order, to `1, 2, ...` and the remaining elements, in
/// increasing order, to the positions after them. Elements repeated across
/// blocks are placed at their first occurrence.
pub fn canonical_relabeling(n: u32, blocks: &[KSet]) -> Vec<u32> {
    let mut map = vec![0u32; n as usize];
    let mut next = 1;
    let mut place = |e: u32, map: &mut Vec<u32>| {
        if map[(e - 1) as usize] == 0 {
            map[(e - 1) as usize] = next;
            next += 1;
        }
    };
    for b in blocks {
        for e in b.iter() {
            place(e, &mut map);
        }
    }
    for e in 1..=n {
        place(e, &mut map);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcore::binomial;

    #[test]
    fn star_sizes() {
        let s = star(8, 3, KSet::of(&[1, 2])).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.iter().all(|f| KSet::of(&[1, 2]).is_subset(*f)));
        assert_eq!(star(6, 3, KSet::of(&[2, 4, 6])).unwrap().members(), &[KSet::of(&[2, 4, 6])]);
        assert!(star(6, 2, KSet::of(&[1, 2, 3])).is_err());
        assert!(star(6, 3, KSet::of(&[7])).is_err());
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell(6, 3, 2, 2).unwrap(), BigCount::from(8u32));
        assert_eq!(ell(12, 3, 1, 2).unwrap(), BigCount::from(100u32));
        assert_eq!(ell(9, 4, 2, 0).unwrap(), BigCount::from(0u32));
        assert_eq!(ell(20, 5, 2, 1).unwrap(), binomial(18, 3));
        assert!(ell(5, 3, 2, 3).is_err());
    }

    #[test]
    fn star_union_of_nothing_is_empty() {
        let none = TSetSystem::new(6, 2, []).unwrap();
        assert!(star_union(6, 3, &none).unwrap().is_empty());
        let two = TSetSystem::new(6, 2, [KSet::of(&[1, 2]), KSet::of(&[3, 4])]).unwrap();
        assert_eq!(star_union(6, 3, &two).unwrap().len(), 8);
    }

    #[test]
    fn emc_sizes() {
        let a1 = emc_family(12, 3, 2, 1).unwrap();
        assert_eq!(BigCount::from(a1.len()), binomial(12, 3) - binomial(10, 3));
        let a3 = emc_family(12, 3, 2, 3).unwrap();
        assert_eq!(BigCount::from(a3.len()), binomial(8, 3));
        assert!(emc_family(12, 3, 2, 4).is_err());
        assert!(emc_family(6, 3, 2, 3).is_err());
        for i in 1..=3 {
            assert_eq!(emc_size(12, 3, 2, i).unwrap(), BigCount::from(emc_family(12, 3, 2, i).unwrap().len()));
        }
    }

    #[test]
    fn relabeling_places_blocks_first() {
        let map = canonical_relabeling(6, &[KSet::of(&[4, 6]), KSet::of(&[2])]);
        assert_eq!(map, vec![4, 3, 5, 1, 6, 2]);
    }
}
