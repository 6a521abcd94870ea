use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Exact nonnegative count. No floating point is used on any counting path.
pub type BigCount = BigUint;

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> BigCount {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for i in 1..=b {
        // acc = C(a - b + i - 1, i - 1) before this step, so the division is exact.
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// [`binomial`] extended with `C(a, b) = 0` for `a < 0`, so that
/// inclusion-exclusion sums need no case analysis.
pub(crate) fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 {
        return BigInt::zero();
    }
    BigInt::from(binomial(a as u64, b))
}

pub(crate) fn to_count(value: BigInt) -> BigCount {
    value.to_biguint().expect("count must be nonnegative")
}
