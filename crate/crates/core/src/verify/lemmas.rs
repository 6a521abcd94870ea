use std::time::Instant;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{CheckReport, Mode, Violation};
use crate::bigjson;
use crate::constructions::ell;
use crate::error::{invalid, Error, Result};
use crate::setcore::{binomial, ksets, BigCount, KSet, MAX_GROUND};

fn check_nkt(n: u32, k: u32, t: u32) -> Result<()> {
    if n > MAX_GROUND || k > n || t == 0 || t > k {
        return Err(invalid(format!("need 1 <= t <= k <= n <= {}, got n = {n}, k = {k}, t = {t}", MAX_GROUND)));
    }
    Ok(())
}

fn within_cap(instances: &BigCount, cap: u128) -> Result<u128> {
    match u128::try_from(instances) {
        Ok(v) if v <= cap => Ok(v),
        _ => Err(Error::Infeasible { instances: u128::try_from(instances).unwrap_or(u128::MAX), cap }),
    }
}

/// Checks `|S(T_1) ∪ ... ∪ S(T_m)| <= ell(n, k, t, m)` over systems of `m`
/// distinct `t`-sets, either all of them or a seeded sample.
pub fn check_lemma_star(n: u32, k: u32, t: u32, m: u32, mode: Mode, max_instances: u128) -> Result<CheckReport> {
    check_nkt(n, k, t)?;
    if m == 0 {
        return Err(invalid("m must be at least 1"));
    }
    let start = Instant::now();
    let bound = ell(n, k, t, m)?;
    let tsets: Vec<KSet> = ksets(n, t).collect();
    if m as usize > tsets.len() {
        return Err(invalid(format!("there are fewer than {m} distinct {t}-subsets of [{n}]")));
    }
    let systems: Vec<Vec<KSet>> = match mode {
        Mode::Exhaustive => {
            within_cap(&binomial(tsets.len() as u64, i64::from(m)), max_instances)?;
            tsets.iter().copied().combinations(m as usize).collect()
        }
        Mode::Sample { count, seed } => {
            within_cap(&BigCount::from(count), max_instances)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let mut idx = rand::seq::index::sample(&mut rng, tsets.len(), m as usize).into_vec();
                    idx.sort_unstable();
                    idx.into_iter().map(|i| tsets[i]).collect()
                })
                .collect()
        }
    };
    let all: Vec<KSet> = ksets(n, k).collect();
    let sizes: Vec<usize> = systems
        .par_iter()
        .map(|centers| all.iter().filter(|f| centers.iter().any(|c| c.is_subset(**f))).count())
        .collect();

    let mut report = CheckReport::new("lemma_star", json!({"n": n, "k": k, "t": t, "m": m}));
    report.tested = systems.len() as u64;
    let mut attaining = 0u64;
    for (centers, &size) in systems.iter().zip(&sizes) {
        let size = BigCount::from(size);
        if size > bound {
            report.violations.push(Violation::StarUnion { n, k, t, centers: centers.clone(), size, bound: bound.clone() });
        } else if size == bound {
            attaining += 1;
        }
    }
    report.detail("bound", bigjson::count(&bound));
    report.detail("max_size", sizes.iter().max().copied().unwrap_or(0));
    report.detail("attaining_bound", attaining);
    match mode {
        Mode::Exhaustive => report.detail("mode", "exhaustive"),
        Mode::Sample { seed, .. } => {
            report.detail("mode", "sample");
            report.detail("seed", seed);
        }
    }
    Ok(report.timed(start))
}

/// `(C(2k, t+1) C(n-t-1, k-t-1), C(2t, t+1) C(n-t-1, k-t-1))`: the bound the
/// counting argument yields and the sharper constant as literally stated.
pub(crate) fn est1_bounds(n: u32, k: u32, t: u32) -> (BigCount, BigCount) {
    let tail = binomial(u64::from(n - t - 1), i64::from(k) - i64::from(t) - 1);
    (binomial(2 * u64::from(k), i64::from(t) + 1) * &tail, binomial(2 * u64::from(t), i64::from(t) + 1) * tail)
}

pub(crate) fn est2_bound(n: u32, k: u32, t: u32) -> BigCount {
    binomial(u64::from(k + t), i64::from(t) + 1) * binomial(u64::from(n - t - 1), i64::from(k) - i64::from(t) - 1)
}

/// Number of `k`-subsets of `[n]` meeting both `a` and `b` in at least `t`
/// elements.
pub fn est1_count(n: u32, k: u32, t: u32, a: KSet, b: KSet) -> u64 {
    let t = t as usize;
    ksets(n, k).filter(|f| f.intersection_size(a) >= t && f.intersection_size(b) >= t).count() as u64
}

/// Number of `k`-sets containing `center` that meet `a` in at least `t`
/// elements.
pub fn est2_count(n: u32, k: u32, t: u32, a: KSet, center: KSet) -> u64 {
    ksets(n, k).filter(|f| center.is_subset(*f) && f.intersection_size(a) >= t as usize).count() as u64
}

/// For every pair of `k`-sets with `|A ∩ B| < t`, checks that at most
/// `C(2k, t+1) C(n-t-1, k-t-1)` sets meet both in `t` points. The literal
/// constant `C(2t, t+1)` and the pairs with `|A ∩ B| >= t` are reported in
/// `details` without being asserted.
pub fn check_est1(n: u32, k: u32, t: u32, max_instances: u128) -> Result<CheckReport> {
    check_nkt(n, k, t)?;
    if t >= k {
        return Err(invalid("need t < k"));
    }
    let start = Instant::now();
    let all: Vec<KSet> = ksets(n, k).collect();
    within_cap(&binomial(all.len() as u64, 2), max_instances)?;
    let (proof, literal) = est1_bounds(n, k, t);
    let tu = t as usize;

    // For each A, the sets meeting it in t points; counts for a pair are then
    // an intersection of two such lists.
    let meets: Vec<Vec<bool>> =
        all.par_iter().map(|&a| all.iter().map(|f| f.intersection_size(a) >= tu).collect()).collect();
    let rows: Vec<Vec<(usize, u64)>> = (0..all.len())
        .into_par_iter()
        .map(|i| {
            (i + 1..all.len())
                .map(|j| {
                    let c = meets[i].iter().zip(&meets[j]).filter(|(x, y)| **x && **y).count();
                    (j, c as u64)
                })
                .collect()
        })
        .collect();

    let mut report = CheckReport::new("est1", json!({"n": n, "k": k, "t": t}));
    let (mut max_restricted, mut max_any) = (0u64, 0u64);
    let (mut literal_failures, mut unrestricted_over) = (0u64, 0u64);
    let mut first_literal: Option<Value> = None;
    for (i, row) in rows.iter().enumerate() {
        for &(j, count) in row {
            let (a, b) = (all[i], all[j]);
            let c = BigCount::from(count);
            max_any = max_any.max(count);
            if c > proof {
                unrestricted_over += 1;
            }
            if a.intersection_size(b) >= tu {
                continue;
            }
            report.tested += 1;
            max_restricted = max_restricted.max(count);
            if c > proof {
                report.violations.push(Violation::PairOverlap { n, k, t, a, b, count, bound: proof.clone() });
            }
            if c > literal {
                literal_failures += 1;
                first_literal.get_or_insert_with(|| json!({"a": a, "b": b, "count": count}));
            }
        }
    }
    report.detail("bound", bigjson::count(&proof));
    report.detail("max_count", max_restricted);
    report.detail("literal_bound", bigjson::count(&literal));
    report.detail("literal_holds", literal_failures == 0);
    report.detail("literal_failures", literal_failures);
    report.detail("first_literal_failure", first_literal.unwrap_or(Value::Null));
    report.detail(
        "unrestricted",
        json!({
            "pairs": (all.len() as u64) * (all.len() as u64).saturating_sub(1) / 2,
            "max_count": max_any,
            "exceeding_bound": unrestricted_over,
        }),
    );
    Ok(report.timed(start))
}

/// For every `k`-set `A` and `t`-set `T ⊄ A`, checks that at most
/// `C(k+t, t+1) C(n-t-1, k-t-1)` members of the star of `T` meet `A` in `t`
/// points.
pub fn check_est2(n: u32, k: u32, t: u32, max_instances: u128) -> Result<CheckReport> {
    check_nkt(n, k, t)?;
    let start = Instant::now();
    let all: Vec<KSet> = ksets(n, k).collect();
    let tsets: Vec<KSet> = ksets(n, t).collect();
    within_cap(&BigCount::from(all.len() as u128 * tsets.len() as u128), max_instances)?;
    let bound = est2_bound(n, k, t);
    let stars: Vec<Vec<KSet>> =
        tsets.iter().map(|&c| all.iter().copied().filter(|f| c.is_subset(*f)).collect()).collect();
    let tu = t as usize;

    let rows: Vec<Vec<(usize, u64)>> = all
        .par_iter()
        .map(|&a| {
            tsets
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_subset(a))
                .map(|(j, _)| (j, stars[j].iter().filter(|f| f.intersection_size(a) >= tu).count() as u64))
                .collect()
        })
        .collect();

    let mut report = CheckReport::new("est2", json!({"n": n, "k": k, "t": t}));
    let mut max_count = 0u64;
    for (i, row) in rows.iter().enumerate() {
        for &(j, count) in row {
            report.tested += 1;
            max_count = max_count.max(count);
            if BigCount::from(count) > bound {
                report.violations.push(Violation::StarOverlap {
                    n,
                    k,
                    t,
                    a: all[i],
                    center: tsets[j],
                    count,
                    bound: bound.clone(),
                });
            }
        }
    }
    report.detail("bound", bigjson::count(&bound));
    report.detail("max_count", max_count);
    Ok(report.timed(start))
}
