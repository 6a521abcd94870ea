//! Exact JSON output for big integers: values are written as plain decimal
//! numbers, never as floats.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::Serializer;
use serde_json::{Number, Value};

pub(crate) fn number(decimal: &str) -> Value {
    Value::Number(Number::from_str(decimal).expect("decimal integer"))
}

pub fn count(v: &BigUint) -> Value {
    number(&v.to_string())
}

pub fn signed(v: &BigInt) -> Value {
    number(&v.to_string())
}

pub(crate) fn ser_count<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&count(v), s)
}

pub(crate) fn ser_opt_count<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&v.as_ref().map(count), s)
}

pub(crate) fn ser_signed<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&signed(v), s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_values_stay_exact() {
        let big = BigUint::from(10u32).pow(30) + 7u32;
        assert_eq!(serde_json::to_string(&count(&big)).unwrap(), "1000000000000000000000000000007");
        assert_eq!(serde_json::to_string(&signed(&-BigInt::from(12))).unwrap(), "-12");
    }
}
