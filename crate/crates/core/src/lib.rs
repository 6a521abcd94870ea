//! Exact constructions, invariants and verification for t-matchings of
//! uniform set families.
//!
//! A `t`-matching is a collection of `k`-sets pairwise meeting in fewer than
//! `t` elements. The crate computes the `t`-matching number `nu_t`, the
//! `t`-covering number `tau_t` and related invariants exactly, generates the
//! extremal families of the theory (stars and unions of stars,
//! Hilton-Milner and Frankl type families and their multi-star versions), and
//! checks the counting lemmas behind them by exhaustive enumeration.
//!
//! ```
//! use tmatch::{nu_t, full_compress, Family, KSet, SearchBudget};
//!
//! let sets = [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 3, 4], [2, 3, 4], [3, 4, 5], [3, 4, 6]];
//! let f = Family::new(6, 3, sets.iter().map(|s| KSet::of(s))).unwrap();
//! let before = nu_t(&f, 2, SearchBudget::unlimited()).unwrap();
//! let after = nu_t(&full_compress(&f), 2, SearchBudget::unlimited()).unwrap();
//! assert_eq!((before.get().size(), after.get().size()), (2, 3));
//! ```

pub mod bigjson;
mod clique;
pub mod constructions;
mod error;
mod graph;
pub mod invariants;
pub mod kneser;
mod search;
pub mod setcore;
pub mod verify;

pub use constructions::{ell, star, star_union};
pub use error::{Error, Result};
pub use graph::PatternGraph;
pub use invariants::{full_compress, is_t_intersecting, nu_t, removal_number, shift, tau_t, trivial_center};
pub use search::{Outcome, SearchBudget};
pub use setcore::{binomial, enumerate_ksets, BigCount, Family, KSet, TSetSystem};

/// The guide chapters under `book/src`, compiled as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/sets-and-families.md")]
    mod sets_and_families {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/kneser.md")]
    mod kneser {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
