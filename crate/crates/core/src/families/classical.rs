use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::rat::{self, Rat};

fn need(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::invalid(alloc::format!("n must be at least {min}")))
    } else {
        Ok(())
    }
}

/// `E_n(x) = Σ_k k! S(n,k) x^k`, counting surjections, via
/// `S̄(n+1,k) = k S̄(n,k−1) + k S̄(n,k)`.
pub fn surjection_poly(n: usize) -> Result<ExactPoly> {
    need(n, 1)?;
    let mut row: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for k in 1..next.len() {
            let kk = BigInt::from(k);
            let left = row.get(k - 1).cloned().unwrap_or_default();
            let here = row.get(k).cloned().unwrap_or_default();
            next[k] = &kk * left + &kk * here;
        }
        row = next;
    }
    Ok(ExactPoly::from_bigints(row))
}

/// `Σ_k S(n,k) x^k`.
pub fn stirling2_poly(n: usize) -> Result<ExactPoly> {
    let e = surjection_poly(n)?;
    Ok(ExactPoly::new(
        e.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c / Rat::from_integer(rat::factorial(k as u64)))
            .collect(),
    ))
}

/// `x (x+1) ⋯ (x+n−1)`, coefficients the signless Stirling numbers of the first kind.
pub fn stirling1_poly(n: usize) -> Result<ExactPoly> {
    need(n, 1)?;
    Ok((0..n).map(|k| ExactPoly::linear(rat::rat(k as i64))).product())
}

/// `[k]_q = 1 + q + ⋯ + q^{k−1}`.
pub fn q_integer(k: usize) -> ExactPoly {
    ExactPoly::new(vec![Rat::one(); k])
}

pub fn q_factorial(n: usize) -> ExactPoly {
    (1..=n).map(q_integer).product()
}

pub fn q_binomial(n: usize, k: usize) -> Result<ExactPoly> {
    if k > n {
        return Err(Error::invalid("q-binomial needs 0 <= k <= n"));
    }
    let den = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n).div_exact(&den)
}

/// `d_ℓ(m) = 4^{−m} Σ_{k=ℓ}^m 2^k C(2m−2k, m−k) C(m+k, m) C(k, ℓ)` for `ℓ = 0 … m`.
pub fn boros_moll(m: usize) -> Vec<Rat> {
    let m64 = m as u64;
    let scale = Rat::new(BigInt::one(), BigInt::from(4u32).pow(m as u32));
    (0..=m64)
        .map(|l| {
            let s: BigInt = (l..=m64)
                .map(|k| {
                    BigInt::from(2u32).pow(k as u32)
                        * rat::binomial(2 * m64 - 2 * k, m64 - k)
                        * rat::binomial(m64 + k, m64)
                        * rat::binomial(k, l)
                })
                .sum();
            Rat::from_integer(s) * &scale
        })
        .collect()
}

/// `Σ_k (1/(n+1)) C(n+1,k) C(n+1,k+1) x^k`.
pub fn narayana_poly(n: usize) -> ExactPoly {
    let n1 = n as u64 + 1;
    ExactPoly::from_bigints(
        (0..=n as u64)
            .map(|k| rat::binomial(n1, k) * rat::binomial(n1, k + 1) / BigInt::from(n1))
            .collect(),
    )
}

/// `Σ_k C_k C(n, 2k) x^k (1+x)^{n−2k}` with `C_k` the Catalan numbers.
pub fn catalan_gamma_poly(n: usize) -> ExactPoly {
    let one_plus_x = ExactPoly::from_ints(&[1, 1]);
    (0..=n / 2)
        .map(|k| {
            let c = rat::catalan(k as u64) * rat::binomial(n as u64, 2 * k as u64);
            one_plus_x.pow((n - 2 * k) as u32).shift(k).scale(&Rat::from_integer(c))
        })
        .sum()
}

/// `C(n+k, k)` for `n = 0 … N−1`.
pub fn pascal_column(k: usize, len: usize) -> Vec<Rat> {
    (0..len as u64)
        .map(|n| Rat::from_integer(rat::binomial(n + k as u64, k as u64)))
        .collect()
}
