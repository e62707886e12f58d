use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::sturm::SturmChain;
use crate::poly::ExactPoly;
use crate::rat::{self, Rat};

/// A half-open interval `(lo, hi]` holding exactly one distinct real root.
/// When the root is known exactly, `lo == hi` and the interval is that point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// Isolating intervals in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootIsolation {
    squarefree: ExactPoly,
    chain: SturmChain,
    factors: Vec<ExactPoly>,
    pub intervals: Vec<RootInterval>,
}

/// Cauchy bound: every root satisfies `|z| < 1 + max |a_k / a_n|`.
fn cauchy_bound(p: &ExactPoly) -> Rat {
    let lead = p.leading().expect("nonzero").abs();
    let n = p.deg();
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rat::zero);
    m + Rat::one()
}

/// Isolate the real roots of a nonzero polynomial. Non-real roots are ignored.
pub fn isolate_roots(p: &ExactPoly) -> RootIsolation {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    let squarefree = p.squarefree_part().expect("nonzero");
    let factors = p.squarefree_decomposition().expect("nonzero");
    let chain = SturmChain::new(&squarefree);
    let mut iso = RootIsolation { squarefree, chain, factors, intervals: Vec::new() };
    if iso.squarefree.is_constant() {
        return iso;
    }
    let b = cauchy_bound(&iso.squarefree);
    let mut stack = vec![(-b.clone(), b)];
    let mut found = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let k = iso.chain.count(Some(&lo), Some(&hi));
        if k == 0 {
            continue;
        }
        if k == 1 {
            found.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / rat::rat(2);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    iso.intervals = found
        .into_iter()
        .map(|(lo, hi)| {
            let (lo, hi) = if iso.squarefree.eval(&hi).is_zero() { (hi.clone(), hi) } else { (lo, hi) };
            let multiplicity = iso.multiplicity_in(&lo, &hi);
            RootInterval { lo, hi, multiplicity }
        })
        .collect();
    iso
}

impl RootIsolation {
    pub fn num_distinct(&self) -> usize {
        self.intervals.len()
    }

    /// Roots counted with multiplicity.
    pub fn num_with_multiplicity(&self) -> usize {
        self.intervals.iter().map(|i| i.multiplicity).sum()
    }

    pub fn squarefree(&self) -> &ExactPoly {
        &self.squarefree
    }

    fn multiplicity_in(&self, lo: &Rat, hi: &Rat) -> usize {
        for (i, f) in self.factors.iter().enumerate() {
            if f.is_constant() {
                continue;
            }
            let hit = if lo == hi {
                f.eval(lo).is_zero()
            } else {
                SturmChain::new(f).count(Some(lo), Some(hi)) > 0
            };
            if hit {
                return i + 1;
            }
        }
        unreachable!("every root of the squarefree part belongs to some Yun factor")
    }

    /// Bisect until every interval is narrower than `width` (exact roots stay points).
    pub fn refine(&mut self, width: &Rat) {
        let two = rat::rat(2);
        for iv in &mut self.intervals {
            while !iv.is_exact() && &iv.width() >= width {
                let mid = (&iv.lo + &iv.hi) / &two;
                if self.squarefree.eval(&mid).is_zero() {
                    iv.lo = mid.clone();
                    iv.hi = mid;
                } else if self.chain.count(Some(&iv.lo), Some(&mid)) == 1 {
                    iv.hi = mid;
                } else {
                    iv.lo = mid;
                }
            }
        }
    }
}

/// Real roots as `(distinct index, multiplicity)` in increasing order.
pub fn real_root_multiset(p: &ExactPoly) -> Vec<usize> {
    isolate_roots(p).intervals.iter().map(|i| i.multiplicity).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    fn contains(iv: &RootInterval, x: &Rat) -> bool {
        if iv.is_exact() {
            &iv.lo == x
        } else {
            &iv.lo < x && x <= &iv.hi
        }
    }

    #[test]
    fn sqrt_two() {
        let iso = isolate_roots(&p(&[-2, 0, 1]));
        assert_eq!(iso.num_distinct(), 2);
        let (a, b) = (&iso.intervals[0], &iso.intervals[1]);
        assert!(a.hi < b.lo || a.hi <= b.lo);
        assert!(a.hi <= rat(0) && b.lo >= rat(0));
        let mut iso = iso;
        iso.refine(&ratio(1, 1000));
        let r = &iso.intervals[1];
        assert!(&r.lo * &r.lo < rat(2) && &r.hi * &r.hi > rat(2));
        assert!(r.width() < ratio(1, 1000));
    }

    #[test]
    fn double_root() {
        let iso = isolate_roots(&p(&[1, 2, 1]));
        assert_eq!(iso.num_distinct(), 1);
        assert_eq!(iso.intervals[0].multiplicity, 2);
        assert!(contains(&iso.intervals[0], &rat(-1)));
    }

    #[test]
    fn three_roots_disjoint() {
        let iso = isolate_roots(&p(&[0, 2, 3, 1]));
        assert_eq!(iso.num_distinct(), 3);
        for (iv, r) in iso.intervals.iter().zip([-2, -1, 0]) {
            assert!(contains(iv, &rat(r)));
            assert_eq!(iv.multiplicity, 1);
        }
        for w in iso.intervals.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn mixed_multiplicities() {
        // x^3 (x+1)^2 (x^2+1)
        let q = &(&p(&[0, 0, 0, 1]) * &p(&[1, 2, 1])) * &p(&[1, 0, 1]);
        let iso = isolate_roots(&q);
        assert_eq!(real_root_multiset(&q), alloc::vec![2, 3]);
        assert_eq!(iso.num_with_multiplicity(), 5);
        assert!(isolate_roots(&p(&[1, 0, 1])).intervals.is_empty());
        assert!(isolate_roots(&p(&[4])).intervals.is_empty());
    }
}
