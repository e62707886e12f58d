use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::{int_prem, ExactPoly};
use crate::rat::Rat;

/// `p, p', -rem(p, p'), …` with each entry replaced by a positive multiple of
/// its primitive part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<ExactPoly>,
}

impl SturmChain {
    /// Chain of `p` itself. Pass a squarefree polynomial to count roots.
    pub fn new(p: &ExactPoly) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        let mut a = p.primitive_ints();
        let mut b = p.derivative().primitive_ints();
        chain.push(ExactPoly::from_bigints(a.clone()));
        while !b.is_empty() {
            chain.push(ExactPoly::from_bigints(b.clone()));
            let mut r = int_prem(&a, &b);
            for c in r.iter_mut() {
                *c = -&*c;
            }
            a = b;
            b = r;
        }
        SturmChain { chain }
    }

    pub fn polys(&self) -> &[ExactPoly] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign variations at `x`; `None` means −∞ and `Some` a finite point.
    pub fn variations_at(&self, x: Option<&Rat>) -> usize {
        self.count_variations(self.chain.iter().map(|p| match x {
            Some(x) => p.sign_at(x),
            None => p.sign_at_neg_inf(),
        }))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        self.count_variations(self.chain.iter().map(ExactPoly::sign_at_pos_inf))
    }

    fn count_variations(&self, signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Distinct roots in `(lo, hi]` for a squarefree chain head.
    pub fn count(&self, lo: Option<&Rat>, hi: Option<&Rat>) -> usize {
        let a = self.variations_at(lo);
        let b = match hi {
            Some(h) => self.variations_at(Some(h)),
            None => self.variations_at_pos_inf(),
        };
        a.saturating_sub(b)
    }
}

/// Number of distinct real roots in `(lo, hi]`, `None` meaning infinite.
/// Returns 0 for the zero polynomial and for an empty interval.
pub fn count_real_roots(p: &ExactPoly, lo: Option<&Rat>, hi: Option<&Rat>) -> usize {
    if p.is_zero() {
        return 0;
    }
    if let (Some(l), Some(h)) = (lo, hi) {
        if l >= h {
            return 0;
        }
    }
    let sf = p.squarefree_part().expect("nonzero");
    SturmChain::new(&sf).count(lo, hi)
}

/// Distinct roots in the closed interval `[lo, hi]`.
pub fn roots_in_closed(p: &ExactPoly, lo: &Rat, hi: &Rat) -> usize {
    if p.is_zero() || lo > hi {
        return 0;
    }
    let at_lo = usize::from(p.eval(lo).is_zero());
    if lo == hi {
        return at_lo;
    }
    count_real_roots(p, Some(lo), Some(hi)) + at_lo
}

/// Constants (including zero) are real-rooted by convention.
pub fn is_real_rooted(p: &ExactPoly) -> bool {
    if p.is_constant() {
        return true;
    }
    let sf = p.squarefree_part().expect("nonconstant");
    SturmChain::new(&sf).count(None, None) == sf.deg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::surjection_poly;
    use crate::rat::{rat, ratio};

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn counts() {
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), None, None), 0);
        assert_eq!(count_real_roots(&p(&[0, 1, 1]), None, None), 2);
        let e3 = p(&[0, 1, 6, 6]);
        assert_eq!(roots_in_closed(&e3, &rat(-1), &rat(0)), 3);
        assert_eq!(count_real_roots(&e3, Some(&rat(-1)), Some(&rat(0))), 3);
        assert_eq!(count_real_roots(&e3, Some(&rat(-1)), Some(&ratio(-1, 100))), 2);
        assert_eq!(count_real_roots(&e3, Some(&rat(0)), None), 0);
        assert_eq!(surjection_poly(3).unwrap(), e3);
    }

    #[test]
    fn half_open_endpoints() {
        // roots -1, 1
        let q = p(&[-1, 0, 1]);
        assert_eq!(count_real_roots(&q, Some(&rat(-1)), Some(&rat(1))), 1);
        assert_eq!(count_real_roots(&q, Some(&rat(-2)), Some(&rat(-1))), 1);
        assert_eq!(count_real_roots(&q, Some(&rat(1)), Some(&rat(2))), 0);
        assert_eq!(roots_in_closed(&q, &rat(-1), &rat(1)), 2);
    }

    #[test]
    fn multiple_roots_counted_once() {
        let q = &p(&[1, 1]).pow(3) * &p(&[-2, 1]);
        assert_eq!(count_real_roots(&q, None, None), 2);
        assert!(is_real_rooted(&q));
    }

    #[test]
    fn real_rooted_examples() {
        assert!(!is_real_rooted(&p(&[1, 4, 3, 1])));
        assert!(is_real_rooted(&p(&[1])));
        assert!(is_real_rooted(&ExactPoly::zero()));
        assert!(is_real_rooted(&p(&[6, 11, 6, 1])));
        assert!(!is_real_rooted(&p(&[1, 1, 1])));
    }

    #[test]
    fn chain_ends_in_gcd() {
        let q = &p(&[1, 1]).pow(2) * &p(&[3, 1]);
        let ch = SturmChain::new(&q);
        let last = ch.polys().last().unwrap();
        assert_eq!(last.monic(), q.gcd(&q.derivative()).unwrap());
    }
}
