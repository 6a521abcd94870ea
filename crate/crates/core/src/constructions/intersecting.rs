use num_bigint::BigInt;

use super::{check_nk, check_sizes, check_within, filtered};
use crate::error::{invalid, Result};
use crate::setcore::{binom, to_count, BigCount, Family, KSet};

fn check_kt(n: u32, k: u32, t: u32) -> Result<()> {
    check_nk(n, k)?;
    check_sizes_kt(n, k, t)
}

fn check_sizes_kt(n: u32, k: u32, t: u32) -> Result<()> {
    check_sizes(n, k)?;
    if t == 0 || t >= k {
        return Err(invalid(format!("need k > t >= 1, got k = {k}, t = {t}")));
    }
    Ok(())
}

/// `{F : [1,t] ⊆ F, F ∩ [t+1,k+1] ≠ ∅}` together with the `k+1` sets
/// `[1,k+1] \ {i}`.
pub fn h1_family(n: u32, k: u32, t: u32) -> Result<Family> {
    check_kt(n, k, t)?;
    if n < k + 1 {
        return Err(invalid(format!("n = {n} must be at least k + 1 = {}", k + 1)));
    }
    let x = KSet::interval(1, t);
    let rest = KSet::interval(t + 1, k + 1);
    let c = KSet::interval(1, k + 1);
    Ok(filtered(n, k, |f| (x.is_subset(f) && !f.is_disjoint(rest)) || f.is_subset(c)))
}

/// `{F : |F ∩ [1,t+2]| >= t+1}`.
pub fn h2_family(n: u32, k: u32, t: u32) -> Result<Family> {
    check_kt(n, k, t)?;
    if n < t + 2 {
        return Err(invalid(format!("n = {n} must be at least t + 2 = {}", t + 2)));
    }
    family_ii(n, k, t, KSet::interval(1, t + 2))
}

/// `C(n-t, k-t) - C(n-k-1, k-t) + t`.
pub fn h1_size(n: u32, k: u32, t: u32) -> Result<BigCount> {
    check_sizes_kt(n, k, t)?;
    let (n, k, t) = (i64::from(n), i64::from(k), i64::from(t));
    Ok(to_count(binom(n - t, k - t) - binom(n - k - 1, k - t) + BigInt::from(t)))
}

/// `(t+2) C(n-t-2, k-t-1) + C(n-t-2, k-t-2)`.
pub fn h2_size(n: u32, k: u32, t: u32) -> Result<BigCount> {
    check_sizes_kt(n, k, t)?;
    let (n, k, t) = (i64::from(n), i64::from(k), i64::from(t));
    Ok(to_count(BigInt::from(t + 2) * binom(n - t - 2, k - t - 1) + binom(n - t - 2, k - t - 2)))
}

/// Parameters of the family `H1(X, M, C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyISpec {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub x: KSet,
    pub m: KSet,
    pub c: KSet,
}

impl FamilyISpec {
    /// Validates `X ⊆ M ⊆ C ⊆ [n]`, `|X| = t`, `|M| = k` and
    /// `|C| ∈ {k+1, ..., 2k-t} ∪ {n}`.
    pub fn new(n: u32, k: u32, t: u32, x: KSet, m: KSet, c: KSet) -> Result<Self> {
        check_kt(n, k, t)?;
        check_within(n, c, "C")?;
        if x.len() != t as usize || m.len() != k as usize {
            return Err(invalid(format!("need |X| = t = {t} and |M| = k = {k}")));
        }
        if !x.is_subset(m) || !m.is_subset(c) {
            return Err(invalid("need X ⊆ M ⊆ C"));
        }
        let size = c.len() as u32;
        if !((k + 1..=2 * k - t).contains(&size) || size == n) {
            return Err(invalid(format!("|C| = {size} must lie in [{}, {}] or equal n", k + 1, 2 * k - t)));
        }
        Ok(FamilyISpec { n, k, t, x, m, c })
    }

    /// The component of `H1(X, M, C)` containing `f`: 0 for `A(X,M)`, 1 for
    /// `B(X,M,C)`, 2 for `C(X,M,C)`; `None` for non-members.
    pub fn component(&self, f: KSet) -> Option<usize> {
        let t = self.t as usize;
        let c_size = self.c.len();
        if self.x.is_subset(f) && f.intersection_size(self.m) > t {
            Some(0)
        } else if f.intersection(self.m) == self.x && f.intersection_size(self.c) == c_size - self.k as usize + t {
            Some(1)
        } else if f.is_subset(self.c)
            && f.intersection_size(self.x) + 1 == t
            && f.intersection_size(self.m) + 1 == self.k as usize
        {
            Some(2)
        } else {
            None
        }
    }
}

/// `H1(X, M, C) = A(X,M) ∪ B(X,M,C) ∪ C(X,M,C)`.
pub fn family_i(spec: &FamilyISpec) -> Family {
    filtered(spec.n, spec.k, |f| spec.component(f).is_some())
}

/// `H2(Z) = {F : |F ∩ Z| >= t+1}` for a `(t+2)`-set `Z`.
pub fn family_ii(n: u32, k: u32, t: u32, z: KSet) -> Result<Family> {
    check_kt(n, k, t)?;
    check_within(n, z, "Z")?;
    if z.len() != t as usize + 2 {
        return Err(invalid(format!("|Z| must be t + 2 = {}", t + 2)));
    }
    Ok(filtered(n, k, |f| f.intersection_size(z) > t as usize))
}
