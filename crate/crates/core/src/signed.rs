//! Signed permutations of `[±n]` in window notation.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{next_lex, Permutation};

/// Window `σ_1 … σ_n` with `|σ|` a permutation of `[n]`; `σ(−i) = −σ(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let abs: Vec<u32> = window.iter().map(|v| v.unsigned_abs()).collect();
        Permutation::new(abs).map_err(|_| Error::invalid("absolute values are not a permutation of [n]"))?;
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i32).collect() }
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `σ(i)` for `i ∈ [±n]`.
    pub fn apply(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[i as usize - 1]
        } else {
            -self.window[(-i) as usize - 1]
        }
    }

    pub fn negatives(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    pub fn is_type_d(&self) -> bool {
        self.negatives() % 2 == 0
    }

    fn descents_from(&self, sigma0: i32) -> usize {
        let mut prev = sigma0;
        let mut d = 0;
        for &v in &self.window {
            if prev > v {
                d += 1;
            }
            prev = v;
        }
        d
    }

    /// Descents over `i ∈ [n]` with `σ_0 = 0`.
    pub fn des_b(&self) -> usize {
        self.descents_from(0)
    }

    /// Descents over `i ∈ [n]` with `σ_0 = −σ_2`; needs `n ≥ 2`.
    pub fn des_d(&self) -> usize {
        assert!(self.len() >= 2, "type D descents need n >= 2");
        self.descents_from(-self.window[1])
    }

    /// The permutation `i ↦ |σ(i)|`.
    pub fn abs_perm(&self) -> Permutation {
        Permutation::from_word_unchecked(self.window.iter().map(|v| v.unsigned_abs()).collect())
    }

    /// `i` with `|σ(i)| > i` or `σ(i) = −i` (1-based positions).
    pub fn excedance_set(&self) -> Vec<usize> {
        self.window
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v.unsigned_abs() as usize > i + 1 || v == -(i as i32 + 1))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `(negative, positive)` cycle counts of `|σ|`. A cycle is negative when
    /// `σ(j) < 0` for the position `j` whose image `|σ(j)|` is the cycle maximum.
    pub fn signed_cycle_counts(&self) -> (usize, usize) {
        let n = self.len();
        let mut seen = alloc::vec![false; n + 1];
        let (mut neg, mut pos) = (0, 0);
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut j = start;
            let mut best_img = 0u32;
            let mut best_sign = 1i32;
            while !seen[j] {
                seen[j] = true;
                let v = self.window[j - 1];
                let img = v.unsigned_abs();
                if img > best_img {
                    best_img = img;
                    best_sign = v.signum();
                }
                j = img as usize;
            }
            if best_sign < 0 {
                neg += 1;
            } else {
                pos += 1;
            }
        }
        (neg, pos)
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation({:?})", self.window)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Calls `f` on all `2^n n!` signed permutations.
pub fn for_each_signed(n: usize, mut f: impl FnMut(&SignedPermutation)) {
    let mut base: Vec<i32> = (1..=n as i32).collect();
    let mut sp = SignedPermutation { window: base.clone() };
    loop {
        for mask in 0u32..(1u32 << n) {
            for (i, v) in base.iter().enumerate() {
                sp.window[i] = if mask >> i & 1 == 1 { -*v } else { *v };
            }
            f(&sp);
        }
        if !next_lex(&mut base) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_parity() {
        let mut total = 0;
        let mut even = 0;
        for_each_signed(3, |s| {
            total += 1;
            if s.is_type_d() {
                even += 1;
            }
        });
        assert_eq!(total, 48);
        assert_eq!(even, 24);
        assert!(SignedPermutation::new(alloc::vec![1, -1]).is_err());
    }

    #[test]
    fn descents() {
        let s = SignedPermutation::new(alloc::vec![-2, 1, -3]).unwrap();
        // σ0 = 0: 0 > -2, 1 > -3
        assert_eq!(s.des_b(), 2);
        // σ0 = -σ2 = -1: -1 > -2, 1 > -3
        assert_eq!(s.des_d(), 2);
        assert_eq!(s.apply(-1), 2);
    }

    #[test]
    fn excedances_and_cycles() {
        let s = SignedPermutation::new(alloc::vec![1]).unwrap();
        assert!(s.excedance_set().is_empty());
        assert_eq!(s.signed_cycle_counts(), (0, 1));
        let s = SignedPermutation::new(alloc::vec![-1]).unwrap();
        assert_eq!(s.excedance_set(), alloc::vec![1]);
        assert_eq!(s.signed_cycle_counts(), (1, 0));
        // |σ| = (1 3)(2); the cycle {1,3} has maximum 3 = |σ(1)|, σ(1) = -3 < 0.
        let s = SignedPermutation::new(alloc::vec![-3, 2, 1]).unwrap();
        assert_eq!(s.signed_cycle_counts(), (1, 1));
        assert_eq!(s.excedance_set(), alloc::vec![1]);
    }
}
