//! Permutations of `[n]` in one-line notation and their statistics.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A word `a_1 … a_n` that is a bijection on `[n]`; letters are 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

/// The standard statistics of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Stats {
    pub des: usize,
    pub peak: usize,
    pub inv: usize,
    pub maj: usize,
    pub exc: usize,
    pub fix: usize,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = alloc::vec![false; n + 1];
        for &a in &word {
            let a = a as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::invalid("word is not a permutation of [n]"));
            }
            seen[a] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u32).collect() }
    }

    /// Parses `"573148926"` (digits, n ≤ 9) or a comma/space separated list.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Option<Vec<u32>> = if s.contains(',') || s.contains(' ') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        Self::new(word.ok_or_else(|| Error::invalid("permutation contains a non-numeric letter"))?)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `a_i` for 1-based `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut w = alloc::vec![0; self.len()];
        for (i, &a) in self.word.iter().enumerate() {
            w[a as usize - 1] = i as u32 + 1;
        }
        Permutation { word: w }
    }

    /// Positions `i ∈ [n−1]` with `a_i > a_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    pub fn des(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Interior peaks: `a_{i−1} < a_i > a_{i+1}` with `2 ≤ i ≤ n−1`.
    pub fn peak(&self) -> usize {
        self.word.windows(3).filter(|w| w[0] < w[1] && w[1] > w[2]).count()
    }

    pub fn inv(&self) -> usize {
        let mut c = 0;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.word[i] > self.word[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn exc(&self) -> usize {
        self.word.iter().enumerate().filter(|(i, &a)| a as usize > i + 1).count()
    }

    pub fn fix(&self) -> usize {
        self.word.iter().enumerate().filter(|(i, &a)| a as usize == i + 1).count()
    }

    pub fn stats(&self) -> Stats {
        Stats {
            des: self.des(),
            peak: self.peak(),
            inv: self.inv(),
            maj: self.maj(),
            exc: self.exc(),
            fix: self.fix(),
        }
    }

    /// Next permutation in lexicographic order, in place. False at the last one.
    pub fn next_lex(&mut self) -> bool {
        next_lex(&mut self.word)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.len() <= 9;
        for (i, a) in self.word.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{}", a)?;
        }
        Ok(())
    }
}

/// Lexicographic successor of a word of distinct comparable letters.
pub fn next_lex<T: Ord>(w: &mut [T]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Calls `f` on every permutation of `[n]` in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation)) {
    let mut p = Permutation::identity(n);
    loop {
        f(&p);
        if !p.next_lex() {
            break;
        }
    }
}

pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| out.push(p.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_validate() {
        let p = Permutation::parse("573148926").unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(p.to_string(), "573148926");
        assert!(Permutation::parse("1123").is_err());
        assert!(Permutation::parse("1,3").is_err());
        assert_eq!(Permutation::parse("2, 1").unwrap().word(), &[2, 1]);
        let long = Permutation::parse("10 1 2 3 4 5 6 7 8 9").unwrap();
        assert_eq!(long.to_string(), "10,1,2,3,4,5,6,7,8,9");
    }

    #[test]
    fn statistics() {
        let id = Permutation::identity(5);
        assert_eq!(id.stats(), Stats { fix: 5, ..Stats::default() });
        let p = Permutation::parse("573148926").unwrap();
        assert_eq!(p.descent_set(), alloc::vec![2, 3, 7]);
        assert_eq!(p.des(), 3);
        assert_eq!(p.maj(), 12);
        // interior peaks at the letters 7 and 9
        assert_eq!(p.peak(), 2);
        let q = Permutation::parse("2413").unwrap();
        assert_eq!(q.inv(), 3);
        assert_eq!(q.exc(), 2);
        assert_eq!(q.inverse().word(), &[3, 1, 4, 2]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(0).len(), 1);
        let mut seen = alloc::collections::BTreeSet::new();
        for_each_permutation(5, |p| {
            seen.insert(p.clone());
        });
        assert_eq!(seen.len(), 120);
    }
}
