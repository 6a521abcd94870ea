//! Verification harness: exhaustive checks of the counting lemmas, exact
//! extremal searches at desk scale, and consistency checks between the
//! constructions' closed forms and enumeration.
//!
//! Every check returns a [`CheckReport`]. A report passes when it has no
//! violations and every search inside it completed; each violation carries
//! enough data to be re-checked on its own with [`Violation::revalidate`].

mod extremal;
mod gfam;
mod lemmas;

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::bigjson::{ser_count, ser_signed};
use crate::constructions::{ell, g_family, g_size, star_union, GFamilySpec};
use crate::error::Error;
use crate::kneser::{extremal_gfree_family, parse_pattern_json};
use crate::search::SearchBudget;
use crate::setcore::{BigCount, KSet, TSetSystem};

pub use extremal::{check_extremal_nontrivial, check_extremal_nu, extremal_search_nontrivial, extremal_search_nu, ExtremalSearch};
pub use gfam::{
    check_g1_g2, check_gfree, check_shift_monotonicity, compare_g1_g2, decomposition_verify, find_decomposition,
    tail_is_isomorphic, G1G2Comparison,
};
pub use lemmas::{check_est1, check_est2, check_lemma_star, est1_count, est2_count};

/// Default cap on the number of instances an exhaustive check may visit.
pub const DEFAULT_MAX_INSTANCES: u128 = 100_000_000;

/// How a check chooses its instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// `count` instances drawn with a ChaCha generator seeded by `seed`.
    Sample { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub tested: u64,
    pub violations: Vec<Violation>,
    pub certified: bool,
    /// Wall time; `None` when timing is switched off for reproducible output.
    pub seconds: Option<f64>,
    pub details: Map<String, Value>,
}

impl CheckReport {
    pub(crate) fn new(check: &str, params: Value) -> Self {
        let Value::Object(params) = params else {
            panic!("params must be a JSON object");
        };
        CheckReport {
            check: check.into(),
            params,
            tested: 0,
            violations: Vec::new(),
            certified: true,
            seconds: None,
            details: Map::new(),
        }
    }

    pub(crate) fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.into(), value.into());
    }

    pub(crate) fn timed(mut self, start: Instant) -> Self {
        self.seconds = Some(start.elapsed().as_secs_f64());
        self
    }

    /// No violations and every search certified.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.certified
    }

    pub fn without_timing(mut self) -> Self {
        self.seconds = None;
        self
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub const CSV_HEADER: [&'static str; 6] = ["check", "params", "tested", "violations", "certified", "seconds"];

    /// One CSV row; `params` is rendered as space-separated `key=value` pairs.
    pub fn csv_record(&self) -> [String; 6] {
        let params = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
        [
            self.check.clone(),
            params,
            self.tested.to_string(),
            self.violations.len().to_string(),
            self.certified.to_string(),
            self.seconds.map_or_else(String::new, |s| format!("{s:.6}")),
        ]
    }
}

/// A counterexample to an asserted inequality or identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A union of `m` stars larger than `ell(n, k, t, m)`.
    StarUnion {
        n: u32,
        k: u32,
        t: u32,
        centers: Vec<KSet>,
        #[serde(serialize_with = "ser_count")]
        size: BigCount,
        #[serde(serialize_with = "ser_count")]
        bound: BigCount,
    },
    /// Too many sets meeting both `a` and `b` in at least `t` points.
    PairOverlap {
        n: u32,
        k: u32,
        t: u32,
        a: KSet,
        b: KSet,
        count: u64,
        #[serde(serialize_with = "ser_count")]
        bound: BigCount,
    },
    /// Too many members of the star of `center` meeting `a` in `t` points.
    StarOverlap {
        n: u32,
        k: u32,
        t: u32,
        a: KSet,
        center: KSet,
        count: u64,
        #[serde(serialize_with = "ser_count")]
        bound: BigCount,
    },
    /// An exact search disagreeing with a known extremal value.
    ExtremalValue {
        check: String,
        n: u32,
        k: u32,
        t: u32,
        s: Option<u32>,
        found: usize,
        #[serde(serialize_with = "ser_count")]
        expected: BigCount,
    },
    /// Moving the first centre away from the rest made the family smaller.
    ShiftMonotonicity {
        spec: GFamilySpec,
        replacement: KSet,
        overlapping: usize,
        disjoint: usize,
    },
    /// A closed-form G-family size disagreeing with enumeration.
    SizeFormula {
        spec: GFamilySpec,
        #[serde(serialize_with = "ser_count")]
        closed_form: BigCount,
        enumerated: usize,
    },
    /// `|G1| - |G2|` with a sign other than the predicted one.
    SignMismatch {
        n: u32,
        k: u32,
        t: u32,
        s: u32,
        #[serde(serialize_with = "ser_signed")]
        difference: BigInt,
        predicted: i8,
    },
    /// A decomposition tail that is not isomorphic to its model family.
    TailShape { spec: GFamilySpec },
    /// The extremal G-free construction failed one of its conditions.
    GFreeCondition { n: u32, k: u32, t: u32, pattern: Value, failure: String },
}

impl Violation {
    /// Recomputes the violated quantity from the stored data alone; true when
    /// the violation is reproduced.
    pub fn revalidate(&self) -> bool {
        match self {
            Violation::StarUnion { n, k, t, centers, bound, .. } => {
                let Ok(system) = TSetSystem::new(*n, *t, centers.iter().copied()) else {
                    return false;
                };
                let Ok(ell_value) = ell(*n, *k, *t, centers.len() as u32) else {
                    return false;
                };
                let size = star_union(*n, *k, &system).map(|f| BigCount::from(f.len()));
                ell_value == *bound && size.is_ok_and(|s| s > ell_value)
            }
            Violation::PairOverlap { n, k, t, a, b, count, bound } => {
                a.intersection_size(*b) < *t as usize
                    && *bound == lemmas::est1_bounds(*n, *k, *t).0
                    && est1_count(*n, *k, *t, *a, *b) == *count
                    && BigCount::from(*count) > *bound
            }
            Violation::StarOverlap { n, k, t, a, center, count, bound } => {
                !center.is_subset(*a)
                    && *bound == lemmas::est2_bound(*n, *k, *t)
                    && est2_count(*n, *k, *t, *a, *center) == *count
                    && BigCount::from(*count) > *bound
            }
            Violation::ExtremalValue { check, n, k, t, s, found, expected } => {
                let budget = SearchBudget::unlimited();
                let result = match (check.as_str(), s) {
                    ("extremal_nu", Some(s)) => extremal_search_nu(*n, *k, *t, *s, budget),
                    ("extremal_nontrivial", None) => extremal_search_nontrivial(*n, *k, *t, budget),
                    _ => return false,
                };
                result.is_ok_and(|r| r.certified && r.max_size == *found && BigCount::from(*found) != *expected)
            }
            Violation::ShiftMonotonicity { spec, replacement, overlapping, disjoint } => {
                let Ok(moved) = spec.with_first_center(*replacement) else {
                    return false;
                };
                let (Ok(a), Ok(b)) = (g_family(spec), g_family(&moved)) else {
                    return false;
                };
                let (a, b) = (a.len(), b.len());
                a == *overlapping && b == *disjoint && a > b
            }
            Violation::SizeFormula { spec, closed_form, enumerated } => {
                g_size(spec).is_ok_and(|c| c == *closed_form)
                    && g_family(spec).is_ok_and(|f| f.len() == *enumerated)
                    && BigCount::from(*enumerated) != *closed_form
            }
            Violation::SignMismatch { n, k, t, s, difference, predicted } => compare_g1_g2(*n, *k, *t, *s)
                .is_ok_and(|c| c.difference == *difference && c.predicted_sign == *predicted && c.sign != *predicted),
            Violation::TailShape { spec } => !tail_is_isomorphic(spec),
            Violation::GFreeCondition { n, k, t, pattern, .. } => {
                let Ok(g) = parse_pattern_json(&pattern.to_string()) else {
                    return false;
                };
                matches!(
                    extremal_gfree_family(*n, *k, *t, &g, None, SearchBudget::unlimited()),
                    Err(Error::ConstructionInfeasible(_))
                )
            }
        }
    }
}
