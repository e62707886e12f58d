//! Labeled posets on `[n]`, their linear extensions, `P`-Eulerian
//! polynomials and sign-gradings.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{from_counts, ExactPoly};

/// A poset on the labels `1..=n` given by its cover relations. `(i, j)`
/// means `j` covers `i`, so `i <_P j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    n: usize,
    covers: Vec<(u32, u32)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

/// The ε-sum shared by all maximal chains, if there is one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignGrading {
    pub rank: Option<i64>,
    /// No element is covered by another, so every maximal chain is a single
    /// point and the rank 0 says nothing.
    pub vacuous: bool,
}

impl SignGrading {
    pub fn is_sign_graded(&self) -> bool {
        self.rank.is_some()
    }
}

impl LabeledPoset {
    /// Validates labels, acyclicity and that no cover is implied by the others.
    pub fn new(n: usize, covers: Vec<(u32, u32)>) -> Result<Self> {
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(i, j) in &covers {
            if i == 0 || j == 0 || i as usize > n || j as usize > n {
                return Err(Error::invalid("cover label outside [n]"));
            }
            if i == j {
                return Err(Error::invalid("an element cannot cover itself"));
            }
            if !seen.insert((i, j)) {
                return Err(Error::invalid("repeated cover"));
            }
            up[i as usize - 1].push(j as usize - 1);
            down[j as usize - 1].push(i as usize - 1);
        }
        let p = LabeledPoset { n, covers, up, down };
        let order = p.topological_order().ok_or_else(|| Error::invalid("cover relations contain a cycle"))?;
        let below = p.strict_down_sets(&order);
        for &(i, j) in &p.covers {
            let (i, j) = (i as usize - 1, j as usize - 1);
            // j covers i only if i is not below some other lower cover of j
            if p.down[j].iter().any(|&k| k != i && below[k].contains(&i)) {
                return Err(Error::invalid("cover relation is implied by transitivity"));
            }
        }
        Ok(p)
    }

    pub fn antichain(n: usize) -> Self {
        Self::new(n, Vec::new()).expect("valid")
    }

    /// `1 < 2 < ⋯ < n`.
    pub fn chain(n: usize) -> Self {
        Self::new(n, (1..n as u32).map(|i| (i, i + 1)).collect()).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop() {
            out.push(v);
            for &w in &self.up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (out.len() == self.n).then_some(out)
    }

    fn strict_down_sets(&self, order: &[usize]) -> Vec<BTreeSet<usize>> {
        let mut below = vec![BTreeSet::new(); self.n];
        for &v in order {
            let mut acc = BTreeSet::new();
            for &w in &self.down[v] {
                acc.insert(w);
                acc.extend(below[w].iter().copied());
            }
            below[v] = acc;
        }
        below
    }

    /// `i <_P j` for labels.
    pub fn less(&self, i: u32, j: u32) -> bool {
        let order = self.topological_order().expect("validated");
        self.strict_down_sets(&order)[j as usize - 1].contains(&(i as usize - 1))
    }

    /// `i <_P j ⇒ i < j`.
    pub fn is_naturally_labeled(&self) -> bool {
        self.covers.iter().all(|&(i, j)| i < j)
    }

    pub fn minimal(&self) -> Vec<u32> {
        (0..self.n).filter(|&v| self.down[v].is_empty()).map(|v| v as u32 + 1).collect()
    }

    pub fn maximal(&self) -> Vec<u32> {
        (0..self.n).filter(|&v| self.up[v].is_empty()).map(|v| v as u32 + 1).collect()
    }

    /// Lengths of all maximal chains, as a set.
    pub fn chain_lengths(&self) -> BTreeSet<usize> {
        self.chain_statistic(|_, _| 1).into_iter().map(|v| v as usize).collect()
    }

    /// All maximal chains have the same length.
    pub fn is_graded(&self) -> bool {
        self.chain_lengths().len() <= 1
    }

    // Set of values of Σ w(cover) over maximal chains.
    fn chain_statistic(&self, w: impl Fn(usize, usize) -> i64) -> BTreeSet<i64> {
        let order = self.topological_order().expect("validated");
        let mut sums: Vec<BTreeSet<i64>> = vec![BTreeSet::new(); self.n];
        for &v in order.iter().rev() {
            if self.up[v].is_empty() {
                sums[v].insert(0);
            }
            let mut acc = BTreeSet::new();
            for &u in &self.up[v] {
                for s in &sums[u] {
                    acc.insert(w(v, u) + s);
                }
            }
            sums[v].extend(acc);
        }
        (0..self.n).filter(|&v| self.down[v].is_empty()).flat_map(|v| sums[v].clone()).collect()
    }
}

/// `ε(i, j) = 1` if `i < j` as integers, `−1` otherwise.
fn epsilon(i: usize, j: usize) -> i64 {
    if i < j {
        1
    } else {
        -1
    }
}

/// Checks whether every maximal chain `x_0 ⋖ x_1 ⋖ ⋯ ⋖ x_k` has the same
/// `Σ ε(x_{i−1}, x_i)`.
pub fn sign_grading(p: &LabeledPoset) -> SignGrading {
    let sums = p.chain_statistic(epsilon);
    let vacuous = p.covers.is_empty();
    let rank = if sums.len() == 1 { sums.first().copied() } else { None };
    SignGrading { rank, vacuous }
}

/// Calls `f` with every linear extension as a word `σ_1 ⋯ σ_n` in which
/// `a <_P b` puts `a` before `b`. Words come in lexicographic order.
pub fn for_each_linear_extension(p: &LabeledPoset, budget: u64, mut f: impl FnMut(&[u32])) -> Result<u64> {
    let mut indeg: Vec<usize> = p.down.iter().map(Vec::len).collect();
    let mut word = Vec::with_capacity(p.n);
    let mut count = 0u64;
    fn go(
        p: &LabeledPoset,
        indeg: &mut Vec<usize>,
        word: &mut Vec<u32>,
        count: &mut u64,
        budget: u64,
        f: &mut dyn FnMut(&[u32]),
    ) -> Result<()> {
        if word.len() == p.n {
            *count += 1;
            if *count > budget {
                return Err(Error::Budget { needed: *count as u128, budget });
            }
            f(word);
            return Ok(());
        }
        for v in 0..p.n {
            if indeg[v] != 0 || word.contains(&(v as u32 + 1)) {
                continue;
            }
            word.push(v as u32 + 1);
            for &w in &p.up[v] {
                indeg[w] -= 1;
            }
            let r = go(p, indeg, word, count, budget, f);
            for &w in &p.up[v] {
                indeg[w] += 1;
            }
            word.pop();
            r?;
        }
        Ok(())
    }
    go(p, &mut indeg, &mut word, &mut count, budget, &mut f)?;
    Ok(count)
}

pub fn linear_extensions(p: &LabeledPoset, budget: u64) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for_each_linear_extension(p, budget, |w| out.push(Permutation::new(w.to_vec()).expect("bijection")))?;
    Ok(out)
}

/// `W_P(x) = Σ_{σ ∈ 𝔏(P)} x^{des σ + 1}`.
pub fn p_eulerian(p: &LabeledPoset, budget: u64) -> Result<ExactPoly> {
    let mut counts = vec![0u64; p.n + 1];
    for_each_linear_extension(p, budget, |w| {
        let d = w.windows(2).filter(|ab| ab[0] > ab[1]).count();
        counts[d + 1] += 1;
    })?;
    Ok(from_counts(&counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::eulerian_a;

    #[test]
    fn validation() {
        assert!(LabeledPoset::new(3, alloc::vec![(1, 2), (2, 3), (1, 3)]).is_err());
        assert!(LabeledPoset::new(2, alloc::vec![(1, 2), (2, 1)]).is_err());
        assert!(LabeledPoset::new(2, alloc::vec![(1, 3)]).is_err());
        let v = LabeledPoset::new(3, alloc::vec![(1, 2), (1, 3)]).unwrap();
        assert!(v.less(1, 3));
        assert!(!v.less(2, 3));
    }

    #[test]
    fn extensions() {
        assert_eq!(linear_extensions(&LabeledPoset::antichain(3), 100).unwrap().len(), 6);
        assert_eq!(linear_extensions(&LabeledPoset::chain(3), 100).unwrap(), alloc::vec![Permutation::identity(3)]);
        let v = LabeledPoset::new(3, alloc::vec![(1, 2), (1, 3)]).unwrap();
        assert_eq!(linear_extensions(&v, 100).unwrap().len(), 2);
        assert_eq!(p_eulerian(&v, 100).unwrap(), ExactPoly::from_ints(&[0, 1, 1]));
        assert_eq!(p_eulerian(&LabeledPoset::chain(4), 100).unwrap(), ExactPoly::x());
        for n in 1..=6 {
            assert_eq!(p_eulerian(&LabeledPoset::antichain(n), 1000).unwrap(), eulerian_a(n).unwrap());
        }
        assert!(matches!(linear_extensions(&LabeledPoset::antichain(5), 10), Err(Error::Budget { .. })));
    }

    #[test]
    fn gradings() {
        assert_eq!(sign_grading(&LabeledPoset::chain(4)).rank, Some(3));
        let a = sign_grading(&LabeledPoset::antichain(3));
        assert_eq!(a, SignGrading { rank: Some(0), vacuous: true });
        // 1 ⋖ 3 ⋖ 2 and 1 ⋖ 4: sums 1 - 1 = 0 and 1
        let p = LabeledPoset::new(4, alloc::vec![(1, 3), (3, 2), (1, 4)]).unwrap();
        assert_eq!(sign_grading(&p).rank, None);
        // Mixed signs, rank 1 on both chains: 2 ⋖ 1 ⋖ 4 and 3 ⋖ 4
        let q = LabeledPoset::new(4, alloc::vec![(2, 1), (1, 4), (3, 4)]).unwrap();
        assert_eq!(sign_grading(&q).rank, None);
        let r = LabeledPoset::new(5, alloc::vec![(2, 1), (1, 4), (3, 5), (5, 4)]).unwrap();
        assert_eq!(sign_grading(&r).rank, Some(0));
        let s = LabeledPoset::new(5, alloc::vec![(3, 1), (1, 4), (2, 5), (5, 4)]).unwrap();
        assert_eq!(sign_grading(&s).rank, Some(0));
        // Rank 1 with a descending cover: 3 ⋖ 1 ⋖ 2 ⋖ 5 and 4 ⋖ 5
        let t = LabeledPoset::new(5, alloc::vec![(3, 1), (1, 2), (2, 5), (4, 5)]).unwrap();
        assert_eq!(sign_grading(&t), SignGrading { rank: Some(1), vacuous: false });
        assert!(!t.is_naturally_labeled());
        assert!(!t.is_graded());
    }
}
