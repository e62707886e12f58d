//! The exact scalar type and a few integer helpers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduced rational with positive denominator; `num_rational` keeps both
/// invariants on every operation.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

pub fn floor(q: &Rat) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil(q: &Rat) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Parses `"num/den"`, `"-7"` or `"  3 / 4 "`.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

pub fn abs(q: &Rat) -> Rat {
    q.abs()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn to_strings(qs: &[Rat]) -> Vec<alloc::string::String> {
    use alloc::string::ToString;
    qs.iter().map(|q| q.to_string()).collect()
}
