//! The ten acceptance criteria, each run against its time limit. Every
//! criterion prints one `pass`/`fail` line; the test fails if any does.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{all_ksets, choose, kset, nu_oracle, removal_oracle, shifting_example, tau_oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tmatch::constructions::{hm_t_family, HmTypeSpec};
use tmatch::kneser::{chromatic_number, conflict_graph, contains_pattern, extremal_gfree_family, gfree_bound, parse_builtin};
use tmatch::verify::{check_est1, check_est2, check_lemma_star, compare_g1_g2, extremal_search_nontrivial, extremal_search_nu, Mode};
use tmatch::{
    ell, enumerate_ksets, full_compress, nu_t, removal_number, star_union, tau_t, trivial_center, BigCount, Family,
    KSet, PatternGraph, SearchBudget, TSetSystem,
};

const FREE: SearchBudget = SearchBudget::unlimited();
const CAP: u128 = tmatch::verify::DEFAULT_MAX_INSTANCES;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn nu(f: &Family, t: u32) -> Result<usize, String> {
    let out = nu_t(f, t, FREE).map_err(|e| e.to_string())?;
    out.exact().map(|w| w.size()).ok_or_else(|| "nu search not certified".into())
}

fn shifting() -> Outcome {
    let (before, after) = shifting_example();
    ensure(full_compress(&before) == after, || "full_compress differs from the compressed family".into())?;
    let (a, b) = (nu(&before, 2)?, nu(&after, 2)?);
    ensure((a, b) == (2, 3), || format!("nu_2 before/after = {a}/{b}, expected 2/3"))
}

fn ell_consistency() -> Outcome {
    for n in 1..=12u32 {
        for t in 1..=3u32 {
            for k in t + 1..=4.min(n) {
                for m in 0..=n / t {
                    let centers = TSetSystem::new(n, t, (1..=m).map(|r| KSet::interval((r - 1) * t + 1, r * t)))
                        .map_err(|e| e.to_string())?;
                    let size = star_union(n, k, &centers).map_err(|e| e.to_string())?.len();
                    let formula = ell(n, k, t, m).map_err(|e| e.to_string())?;
                    ensure(formula == BigCount::from(size), || format!("ell({n},{k},{t},{m}) = {formula}, union has {size}"))?;
                }
            }
        }
    }
    Ok(())
}

fn lemma_star() -> Outcome {
    let r = check_lemma_star(7, 3, 2, 2, Mode::Exhaustive, CAP).map_err(|e| e.to_string())?;
    ensure(r.tested == 210 && r.violations.is_empty(), || format!("exhaustive: {} tested, {} violations", r.tested, r.violations.len()))?;
    let r = check_lemma_star(10, 4, 2, 3, Mode::Sample { count: 1000, seed: 2024 }, CAP).map_err(|e| e.to_string())?;
    ensure(r.tested == 1000 && r.violations.is_empty(), || format!("sampled: {} tested, {} violations", r.tested, r.violations.len()))
}

fn counting_lemmas() -> Outcome {
    for t in [2, 1] {
        let a = check_est1(8, 3, t, CAP).map_err(|e| e.to_string())?;
        let b = check_est2(8, 3, t, CAP).map_err(|e| e.to_string())?;
        for r in [a, b] {
            ensure(r.violations.is_empty() && r.certified, || format!("{} at t={t}: {} violations", r.check, r.violations.len()))?;
        }
    }
    Ok(())
}

fn ekr() -> Outcome {
    for (n, want) in [(7u32, 15usize), (8, 21)] {
        let x = extremal_search_nu(n, 3, 1, 1, FREE).map_err(|e| e.to_string())?;
        ensure(x.certified, || format!("n={n}: not certified"))?;
        ensure(x.max_size == want, || format!("n={n}: found {}, expected {want}", x.max_size))?;
        let center = trivial_center(&x.witness, 1).map_err(|e| e.to_string())?;
        ensure(center.is_some() && x.witness.len() == want, || format!("n={n}: witness is not a star"))?;
    }
    Ok(())
}

fn hilton_milner() -> Outcome {
    let (n, k, t) = (7u64, 3u64, 2u64);
    let h1 = choose(n - t, k - t) - choose(n - k - 1, k - t) + t;
    // C(a, b) = 0 for b < 0.
    let h2 = (t + 2) * choose(n - t - 2, k - t - 1) + (k - t).checked_sub(2).map_or(0, |b| choose(n - t - 2, b));
    let x = extremal_search_nontrivial(7, 3, 2, FREE).map_err(|e| e.to_string())?;
    ensure(x.certified, || "not certified".into())?;
    ensure(x.max_size as u64 == h1.max(h2), || format!("search found {}, formulas give max({h1},{h2})", x.max_size))
}

/// The grid shared by criteria 7 and 10: `(n, k, t, s)` with `n = st + k + 6`.
fn construction_grid() -> Vec<(u32, u32, u32, u32)> {
    let mut grid = Vec::new();
    for t in 1..=2u32 {
        for k in t + 1..=5.min(2 * t + 2) {
            for s in 1..=3u32 {
                grid.push((s * t + k + 6, k, t, s));
            }
        }
    }
    grid
}

fn construction_invariants() -> Outcome {
    for (n, k, t, s) in construction_grid() {
        let spec = HmTypeSpec::new(n, k, t, s).map_err(|e| e.to_string())?;
        let fam = hm_t_family(&spec).map_err(|e| e.to_string())?;
        let at = format!("(n,k,t,s)=({n},{k},{t},{s})");
        let v = nu(&fam, t)?;
        ensure(v == s as usize, || format!("{at}: nu = {v}"))?;
        let cover = tau_t(&fam, t, FREE).map_err(|e| e.to_string())?;
        ensure(cover.certified(), || format!("{at}: tau not certified"))?;
        ensure(cover.get().value > s as usize, || format!("{at}: tau = {}", cover.get().value))?;
        let bound = ell(n, k, t, s - 1).map_err(|e| e.to_string())?;
        ensure(BigCount::from(fam.len()) > bound, || format!("{at}: size {} <= ell = {bound}", fam.len()))?;
    }
    Ok(())
}

fn crossover() -> Outcome {
    let mut problems = Vec::new();
    for t in 1..=2u32 {
        for k in t + 1..=5 {
            for s in 1..=3u32 {
                for n in 1..=16u32 {
                    let Ok(c) = compare_g1_g2(n, k, t, s) else { continue };
                    if c.g1_enumerated.map(BigCount::from) != Some(c.g1.clone())
                        || c.g2_enumerated.map(BigCount::from) != Some(c.g2.clone())
                    {
                        problems.push(format!("closed form differs from enumeration at ({n},{k},{t},{s})"));
                    }
                }
            }
        }
    }
    for (k, t, want) in [(4, 1, 1i8), (6, 2, 1), (3, 1, -1), (5, 2, -1), (4, 2, -1)] {
        let c = compare_g1_g2(10_000, k, t, 2).map_err(|e| e.to_string())?;
        if c.sign != want {
            problems.push(format!("(k,t)=({k},{t}): |G1|-|G2| = {} has sign {}, expected {want}", c.difference, c.sign));
        }
    }
    ensure(problems.is_empty(), || problems.join("; "))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..200 {
        let n = rng.random_range(4..=8u32);
        let k = rng.random_range(1..=4.min(n));
        let t = rng.random_range(1..=3.min(k));
        let pool = all_ksets(n, k);
        let size = rng.random_range(1..=14.min(pool.len()));
        let picks = rand::seq::index::sample(&mut rng, pool.len(), size);
        let f = Family::new(n, k, picks.iter().map(|j| kset(pool[j]))).map_err(|e| e.to_string())?;
        let s = rng.random_range(1..=4usize);
        let at = format!("family {i} (n={n} k={k} t={t} |F|={size} s={s})");
        let v = nu(&f, t)?;
        ensure(v == nu_oracle(&f, t), || format!("{at}: nu {v} vs oracle {}", nu_oracle(&f, t)))?;
        let c = tau_t(&f, t, FREE).map_err(|e| e.to_string())?.exact().ok_or("tau not certified")?;
        ensure(c.value == tau_oracle(&f, t) && c.validate(&f), || format!("{at}: tau {} vs oracle {}", c.value, tau_oracle(&f, t)))?;
        let r = removal_number(&f, s, t, FREE).map_err(|e| e.to_string())?.exact().ok_or("removal not certified")?;
        ensure(r.value == removal_oracle(&f, s, t), || format!("{at}: removal {} vs oracle {}", r.value, removal_oracle(&f, s, t)))?;
    }
    Ok(())
}

fn kneser_sanity() -> Outcome {
    let g = conflict_graph(&enumerate_ksets(5, 2).map_err(|e| e.to_string())?, 1);
    let chi = chromatic_number(&g, FREE).map_err(|e| e.to_string())?;
    ensure(
        g.vertex_count() == 10 && g.edge_count() == 15 && (0..10).all(|v| g.degree(v) == 3) && chi == 3,
        || format!("conflict graph of [5] choose 2 is not Petersen (chi {chi})"),
    )?;
    for (n, k, t, s) in construction_grid() {
        let b = gfree_bound(n, k, t, &PatternGraph::complete(s as usize + 1), FREE).map_err(|e| e.to_string())?;
        let l = ell(n, k, t, s).map_err(|e| e.to_string())?;
        ensure(b == l, || format!("gfree_bound K{} at ({n},{k},{t}) = {b}, ell = {l}", s + 1))?;
    }
    for (n, k, t) in [(10, 3, 1), (12, 4, 2)] {
        for name in ["K2", "K3", "K1,2", "K2,2"] {
            let g = parse_builtin(name).map_err(|e| e.to_string())?;
            let x = extremal_gfree_family(n, k, t, &g, None, FREE).map_err(|e| e.to_string())?;
            let report = contains_pattern(&x.family, t, &g, FREE).map_err(|e| e.to_string())?;
            ensure(!report.contains, || format!("{name} found in the extremal family at ({n},{k},{t})"))?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const MINUTE: u64 = 60;

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "shifting example", limit: Duration::from_secs(1), run: shifting },
    Criterion { id: 2, name: "ell formula vs disjoint star unions", limit: Duration::from_secs(MINUTE), run: ell_consistency },
    Criterion { id: 3, name: "union of stars bound", limit: Duration::from_secs(MINUTE), run: lemma_star },
    Criterion { id: 4, name: "pair and star overlap counts", limit: Duration::from_secs(10 * MINUTE), run: counting_lemmas },
    Criterion { id: 5, name: "intersecting families at desk scale", limit: Duration::from_secs(20 * MINUTE), run: ekr },
    Criterion { id: 6, name: "non-trivial t-intersecting maximum", limit: Duration::from_secs(30 * MINUTE), run: hilton_milner },
    Criterion { id: 7, name: "multi-star family invariants", limit: Duration::from_secs(10 * MINUTE), run: construction_invariants },
    Criterion { id: 8, name: "G1/G2 crossover", limit: Duration::from_secs(MINUTE), run: crossover },
    Criterion { id: 9, name: "oracle equivalence", limit: Duration::from_secs(10 * MINUTE), run: oracle_equivalence },
    Criterion { id: 10, name: "Kneser sanity", limit: Duration::from_secs(10 * MINUTE), run: kneser_sanity },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= c.limit, || format!("took {elapsed:.2?}, limit {:?}", c.limit))
        });
        let line = match &result {
            Ok(()) => format!("criterion {:>2} pass  {:<40} {elapsed:.2?}", c.id, c.name),
            Err(why) => format!("criterion {:>2} FAIL  {:<40} {elapsed:.2?}: {why}", c.id, c.name),
        };
        // Written straight to stderr so the lines show even when the test passes.
        writeln!(std::io::stderr(), "{line}").unwrap();
        if result.is_err() {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
