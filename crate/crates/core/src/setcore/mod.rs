//! Ground-set arithmetic: k-sets, uniform families, exact binomials and the
//! family file formats.

mod count;
mod family;
mod format;
mod kset;

pub use count::{binomial, BigCount};
pub(crate) use count::{binom, to_count};
pub use family::{enumerate_ksets, Family, TSetSystem};
pub(crate) use family::ksets;
pub use format::{parse_family, parse_tsets, serialize_family, serialize_tsets, Format};
pub use kset::{intersection_size, KSet, MAX_GROUND};
