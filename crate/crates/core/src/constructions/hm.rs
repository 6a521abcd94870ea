use num_bigint::BigInt;
use serde::Serialize;

use super::{check_nk, check_sizes, filtered, GFamilySpec};
use crate::error::{invalid, Result};
use crate::setcore::{binom, binomial, to_count, BigCount, Family, KSet};

/// Which tail the family `H_t^(k)(n, s)` uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HmCase {
    /// `t+1 <= k <= 2t+1`: sets meeting `[(s-1)t+1, st+2]` in `t+1` points.
    Frankl,
    /// `k > 2t+1`: a Hilton-Milner-type tail on `[(s-1)t+1, (s-1)t+k+1]`.
    HiltonMilner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HmTypeSpec {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    pub s: u32,
}

impl HmTypeSpec {
    /// Requires `k > t >= 1`, `s >= 1` and room for every window.
    pub fn new(n: u32, k: u32, t: u32, s: u32) -> Result<Self> {
        check_sizes(n, k)?;
        if t == 0 || t >= k || s == 0 {
            return Err(invalid(format!("need k > t >= 1 and s >= 1, got k = {k}, t = {t}, s = {s}")));
        }
        let spec = HmTypeSpec { n, k, t, s };
        let need = u64::from(s - 1) * u64::from(t)
            + match spec.case() {
                HmCase::Frankl => u64::from(t) + 2,
                HmCase::HiltonMilner => u64::from(k) + 1,
            };
        if u64::from(n) < need {
            return Err(invalid(format!("windows need n >= {need}, got n = {n}")));
        }
        Ok(spec)
    }

    pub fn case(&self) -> HmCase {
        if self.k <= 2 * self.t + 1 {
            HmCase::Frankl
        } else {
            HmCase::HiltonMilner
        }
    }

    /// The equivalent canonical G-family description.
    pub fn g_spec(&self) -> GFamilySpec {
        GFamilySpec::canonical(self.n, self.k, self.t, self.s, self.case() == HmCase::HiltonMilner)
            .expect("validated spec fits")
    }

    /// Membership exactly as displayed in the definition.
    pub fn contains(&self, f: KSet) -> bool {
        let HmTypeSpec { k, t, s, .. } = *self;
        let base = (s - 1) * t;
        if (1..s).any(|r| KSet::interval((r - 1) * t + 1, r * t).is_subset(f)) {
            return true;
        }
        match self.case() {
            HmCase::Frankl => f.intersection_size(KSet::interval(base + 1, s * t + 2)) > t as usize,
            HmCase::HiltonMilner => {
                let window = KSet::interval(base + 1, base + k + 1);
                (KSet::interval(base + 1, s * t).is_subset(f) && !f.is_disjoint(KSet::interval(s * t + 1, base + k + 1)))
                    || f.is_subset(window)
            }
        }
    }
}

/// `H_t^(k)(n, s)`: `s - 1` disjoint stars plus the case-dependent tail. For
/// `s = 1` only the tail remains.
pub fn hm_t_family(spec: &HmTypeSpec) -> Result<Family> {
    check_nk(spec.n, spec.k)?;
    Ok(filtered(spec.n, spec.k, |f| spec.contains(f)))
}

/// `h(n, k, t, s)` in closed form.
pub fn h_size(n: u32, k: u32, t: u32, s: u32) -> Result<BigCount> {
    super::g_size(&HmTypeSpec::new(n, k, t, s)?.g_spec())
}

/// Largest `C(n, k)` for which [`hm1_size`] enumerates.
const HM1_ENUMERATION_CAP: u64 = 5_000_000;

/// Size report for the `t = 1` family of [`hm1_family`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hm1Size {
    /// Member count by enumeration, when `C(n, k)` is small enough.
    #[serde(serialize_with = "crate::bigjson::ser_opt_count")]
    pub enumerated: Option<BigCount>,
    /// `C(n,k) - C(n-s,k) + 1 - C(n-s-k,k-1)`, counted from the definition.
    #[serde(serialize_with = "crate::bigjson::ser_count")]
    pub closed_form: BigCount,
    /// `C(n,k) - C(n-k+s,k) + 1 - C(n-s-k,k-1)`, the formula as usually quoted.
    #[serde(serialize_with = "crate::bigjson::ser_signed")]
    pub quoted_formula: BigInt,
    pub quoted_formula_agrees: bool,
}

/// `{F : F ∩ [s] ≠ ∅} ∪ {[s+1, s+k]}` minus `{F : F ∩ [s] = {s}, F ∩ [s+1, s+k] = ∅}`.
pub fn hm1_family(n: u32, k: u32, s: u32) -> Result<Family> {
    check_hm1(n, k, s)?;
    let head = KSet::interval(1, s);
    let block = KSet::interval(s + 1, s + k);
    let last = KSet::of(&[s]);
    Ok(filtered(n, k, |f| {
        let removed = f.intersection(head) == last && f.is_disjoint(block);
        (!f.is_disjoint(head) && !removed) || f == block
    }))
}

pub fn hm1_size(n: u32, k: u32, s: u32) -> Result<Hm1Size> {
    check_hm1(n, k, s)?;
    let enumerated = (binomial(u64::from(n), i64::from(k)) <= BigCount::from(HM1_ENUMERATION_CAP))
        .then(|| hm1_family(n, k, s).map(|f| BigCount::from(f.len())))
        .transpose()?;
    let (n, k, s) = (i64::from(n), i64::from(k), i64::from(s));
    let one = BigInt::from(1);
    let closed = binom(n, k) - binom(n - s, k) + &one - binom(n - s - k, k - 1);
    let quoted = binom(n, k) - binom(n - k + s, k) + &one - binom(n - s - k, k - 1);
    Ok(Hm1Size {
        enumerated,
        quoted_formula_agrees: quoted == closed,
        closed_form: to_count(closed),
        quoted_formula: quoted,
    })
}

fn check_hm1(n: u32, k: u32, s: u32) -> Result<()> {
    check_nk(n, k)?;
    if s == 0 || k == 0 || u64::from(s) + u64::from(k) > u64::from(n) {
        return Err(invalid(format!("need s, k >= 1 and n >= s + k, got n = {n}, k = {k}, s = {s}")));
    }
    Ok(())
}
