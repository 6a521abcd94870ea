//! Search budgets and certified/uncertified outcomes shared by every exact search.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Limits on an exact search. Running out never produces a wrong answer: the
/// search reports [`Outcome::Exhausted`] with the best bound it reached.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Result<Self> {
        if max_nodes == 0 || max_seconds.is_nan() || max_seconds <= 0.0 {
            return Err(invalid("search budget limits must be positive"));
        }
        Ok(SearchBudget { max_nodes, max_seconds })
    }

    pub const fn unlimited() -> Self {
        SearchBudget { max_nodes: u64::MAX, max_seconds: f64::INFINITY }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes: max_nodes.max(1), max_seconds: f64::INFINITY }
    }

    pub fn seconds(max_seconds: f64) -> Self {
        SearchBudget { max_nodes: u64::MAX, max_seconds }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::unlimited()
    }
}

/// Result of a budgeted search.
///
/// `Exact` values are certified optima. `Exhausted` carries the best bound
/// reached when the budget ran out; each operation documents which side
/// (lower or upper) that bound is on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Exact(T),
    Exhausted(T),
}

impl<T> Outcome<T> {
    pub fn certified(&self) -> bool {
        matches!(self, Outcome::Exact(_))
    }

    pub fn get(&self) -> &T {
        match self {
            Outcome::Exact(v) | Outcome::Exhausted(v) => v,
        }
    }

    pub fn into_inner(self) -> T {
        match self {
            Outcome::Exact(v) | Outcome::Exhausted(v) => v,
        }
    }

    /// The certified value, or `None` when the budget ran out.
    pub fn exact(self) -> Option<T> {
        match self {
            Outcome::Exact(v) => Some(v),
            Outcome::Exhausted(_) => None,
        }
    }

    pub fn map<U, F: FnOnce(T) -> U>(self, f: F) -> Outcome<U> {
        match self {
            Outcome::Exact(v) => Outcome::Exact(f(v)),
            Outcome::Exhausted(v) => Outcome::Exhausted(f(v)),
        }
    }

    pub(crate) fn with_certified(value: T, certified: bool) -> Self {
        if certified {
            Outcome::Exact(value)
        } else {
            Outcome::Exhausted(value)
        }
    }
}

/// Tri-state answer of a budgeted decision search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Found<T> {
    Yes(T),
    No,
    OutOfBudget,
}

/// Node and wall-clock accounting for one search.
pub(crate) struct Meter {
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Meter { budget, start: Instant::now(), nodes: 0, exhausted: false }
    }

    /// Counts one search node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        let out_of_time = self.nodes.is_multiple_of(512)
            && self.budget.max_seconds.is_finite()
            && self.start.elapsed().as_secs_f64() > self.budget.max_seconds;
        if self.nodes > self.budget.max_nodes || out_of_time {
            self.exhausted = true;
        }
        !self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_must_be_positive() {
        assert!(SearchBudget::new(0, 1.0).is_err());
        assert!(SearchBudget::new(1, 0.0).is_err());
        assert!(SearchBudget::new(1, f64::NAN).is_err());
        assert!(SearchBudget::new(10, 0.5).is_ok());
    }

    #[test]
    fn meter_stops_after_node_limit() {
        let mut m = Meter::new(SearchBudget::nodes(3));
        assert!(m.tick() && m.tick() && m.tick());
        assert!(!m.tick());
        assert!(m.exhausted());
        assert!(!m.tick());
    }
}
