//! Sequence-level positivity: unimodality, log-concavity, the ℒ operator,
//! γ-expansions, Pólya frequency tests and moment diagnostics.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::ExactPoly;
use crate::rat::{self, Rat};
use crate::realroot::is_real_rooted;

/// Weak rise to some peak, then weak fall.
pub fn is_unimodal(a: &[Rat]) -> bool {
    let mut i = 0;
    while i + 1 < a.len() && a[i] <= a[i + 1] {
        i += 1;
    }
    while i + 1 < a.len() && a[i] >= a[i + 1] {
        i += 1;
    }
    i + 1 >= a.len()
}

/// `a_j² ≥ a_{j−1} a_{j+1}` for interior `j`. With `strict_positivity` the
/// sequence must also be nonnegative with no zeros between nonzero entries.
pub fn is_log_concave(a: &[Rat], strict_positivity: bool) -> bool {
    if strict_positivity {
        if a.iter().any(Signed::is_negative) {
            return false;
        }
        let lo = a.iter().position(|c| !c.is_zero());
        let hi = a.iter().rposition(|c| !c.is_zero());
        if let (Some(lo), Some(hi)) = (lo, hi) {
            if a[lo..=hi].iter().any(Zero::is_zero) {
                return false;
            }
        }
    }
    a.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Log-concavity of `a_k / C(n, k)` with `n = len − 1`.
pub fn is_binomially_log_concave(a: &[Rat]) -> bool {
    let Some(n) = a.len().checked_sub(1) else {
        return true;
    };
    let b: Vec<Rat> = a
        .iter()
        .enumerate()
        .map(|(k, c)| c / Rat::from_integer(rat::binomial(n as u64, k as u64)))
        .collect();
    is_log_concave(&b, false)
}

fn at(a: &[Rat], k: isize) -> Rat {
    if k < 0 {
        Rat::zero()
    } else {
        a.get(k as usize).cloned().unwrap_or_else(Rat::zero)
    }
}

/// `b_k = a_k² − a_{k−1} a_{k+1}` with zero padding; same length as the input.
#[allow(non_snake_case)]
pub fn L_operator(a: &[Rat]) -> Vec<Rat> {
    (0..a.len() as isize)
        .map(|k| &a[k as usize] * &a[k as usize] - at(a, k - 1) * at(a, k + 1))
        .collect()
}

/// `ℒ^j(a)` is nonnegative for every `0 ≤ j ≤ k`.
pub fn k_fold_log_concave(a: &[Rat], k: usize) -> bool {
    first_negative_iterate(a, k).is_none()
}

/// Smallest `j ≤ k` with a negative entry in `ℒ^j(a)`.
fn first_negative_iterate(a: &[Rat], k: usize) -> Option<usize> {
    let mut cur = a.to_vec();
    for j in 0..=k {
        if cur.iter().any(Signed::is_negative) {
            return Some(j);
        }
        if j < k {
            cur = L_operator(&cur);
        }
    }
    None
}

/// `a_k² ≥ r a_{k−1} a_{k+1}` at every interior index with `r = (3 + √5)/2`,
/// decided in exact arithmetic. Sufficient for infinite log-concavity.
pub fn r_criterion_certificate(a: &[Rat]) -> Result<bool> {
    if a.iter().any(Signed::is_negative) {
        return Err(Error::Negative);
    }
    for w in a.windows(3) {
        let s = &w[1] * &w[1];
        let p = &w[0] * &w[2];
        if p.is_zero() {
            continue;
        }
        // s ≥ r p  ⇔  2s − 3p ≥ √5 p  ⇔  2s − 3p ≥ 0 and (2s − 3p)² ≥ 5p².
        let t = rat::rat(2) * &s - rat::rat(3) * &p;
        if t.is_negative() || &t * &t < rat::rat(5) * &p * &p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of probing infinite log-concavity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfiniteLogConcavity {
    /// The r-criterion certificate holds.
    Proven,
    /// `ℒ^iteration` has a negative entry.
    Refuted { iteration: usize },
    /// No certificate and no refutation within the iteration count.
    Undetermined { iterations: usize },
}

pub fn infinite_log_concavity(a: &[Rat], k: usize) -> InfiniteLogConcavity {
    if let Some(j) = first_negative_iterate(a, k) {
        return InfiniteLogConcavity::Refuted { iteration: j };
    }
    // Any iterate passing the r-test is infinitely log-concave, hence so is `a`.
    let mut cur = a.to_vec();
    for _ in 0..=k {
        if r_criterion_certificate(&cur) == Ok(true) {
            return InfiniteLogConcavity::Proven;
        }
        cur = L_operator(&cur);
    }
    InfiniteLogConcavity::Undetermined { iterations: k }
}

/// Coefficient `k` is `det (a_{k+i−j})_{i,j=0..d}` with zero padding.
#[allow(non_snake_case)]
pub fn fisk_Ld_operator(a: &[Rat], d: usize) -> Result<Vec<Rat>> {
    if d == 0 {
        return Err(Error::invalid("d must be at least 1"));
    }
    (0..a.len() as isize)
        .map(|k| {
            let rows: Vec<Vec<Rat>> = (0..=d as isize)
                .map(|i| (0..=d as isize).map(|j| at(a, k + i - j)).collect())
                .collect();
            Matrix::from_rows(rows)?.det()
        })
        .collect()
}

/// Coefficients of a symmetric polynomial in the basis `x^k (1+x)^{d−2k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    pub d: usize,
    pub gammas: Vec<Rat>,
}

impl GammaVector {
    pub fn reconstruct(&self) -> ExactPoly {
        let one_plus_x = ExactPoly::from_ints(&[1, 1]);
        self.gammas
            .iter()
            .enumerate()
            .map(|(k, g)| one_plus_x.pow((self.d - 2 * k) as u32).shift(k).scale(g))
            .sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.gammas.iter().all(rat::is_integer)
    }
}

/// Expand `p` in the basis `x^k (1+x)^{d−2k}` where `d` is the sum of the
/// lowest and highest degrees in the support.
pub fn gamma_expand(p: &ExactPoly) -> Result<GammaVector> {
    let lo = p.low_degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_palindromic_span() {
        return Err(Error::NotSymmetric);
    }
    gamma_expand_with_degree(p, lo + p.deg())
}

/// Expansion with an explicit symmetry degree `d`.
pub fn gamma_expand_with_degree(p: &ExactPoly, d: usize) -> Result<GammaVector> {
    if !p.is_zero() && p.deg() > d {
        return Err(Error::Degree { degree: p.deg(), bound: d });
    }
    if (0..=d).any(|k| p.coeff(k) != p.coeff(d - k)) {
        return Err(Error::NotSymmetric);
    }
    let one_plus_x = ExactPoly::from_ints(&[1, 1]);
    let mut rest = p.clone();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for k in 0..=d / 2 {
        let g = rest.coeff(k);
        if !g.is_zero() {
            rest = &rest - &one_plus_x.pow((d - 2 * k) as u32).shift(k).scale(&g);
        }
        gammas.push(g);
    }
    if !rest.is_zero() {
        return Err(Error::internal("gamma elimination left a residual"));
    }
    Ok(GammaVector { d, gammas })
}

fn toeplitz(a: &[Rat], k: isize) -> Rat {
    at(a, k)
}

/// All 1×1 and 2×2 minors of the Toeplitz matrix `(a_{i−j})` are nonnegative.
/// Minors whose entries all fall outside the support vanish, so a finite
/// window of offsets suffices.
pub fn toeplitz_tp2(a: &[Rat]) -> bool {
    if a.iter().any(Signed::is_negative) {
        return false;
    }
    let n = a.len() as isize;
    // Minor on rows i, i+r and columns j, j+s with p = i − j:
    // a_p a_{p+r−s} − a_{p−s} a_{p+r}.
    for p in -n..=n {
        for r in 1..=n + 1 {
            for s in 1..=n + 1 {
                let m = toeplitz(a, p) * toeplitz(a, p + r - s) - toeplitz(a, p - s) * toeplitz(a, p + r);
                if m.is_negative() {
                    return false;
                }
            }
        }
    }
    true
}

/// Nonnegative with a real-rooted generating polynomial.
pub fn is_pf_finite(a: &[Rat]) -> bool {
    a.iter().all(|c| !c.is_negative()) && is_real_rooted(&ExactPoly::new(a.to_vec()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeReport {
    /// Indices attaining the maximum coefficient, increasing.
    pub modes: Vec<usize>,
    /// `p'(1) / p(1)`.
    pub mean: Rat,
    /// `⌊μ⌋ ≤ min(modes)` and `max(modes) ≤ ⌈μ⌉`; checked only for real-rooted input.
    pub bracket: Option<bool>,
}

impl ModeReport {
    pub fn bracket_holds(&self) -> bool {
        let lo = rat::floor(&self.mean);
        let hi = rat::ceil(&self.mean);
        let min = BigInt::from(*self.modes.first().unwrap_or(&0));
        let max = BigInt::from(*self.modes.last().unwrap_or(&0));
        lo <= min && max <= hi
    }
}

pub fn mode_report(p: &ExactPoly) -> Result<ModeReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.has_nonnegative_coeffs() {
        return Err(Error::Negative);
    }
    let max = p.coeffs().iter().max().expect("nonzero").clone();
    let modes: Vec<usize> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == max)
        .map(|(k, _)| k)
        .collect();
    let one = Rat::one();
    let mean = p.derivative().eval(&one) / p.eval(&one);
    let mut report = ModeReport { modes, mean, bracket: None };
    if is_real_rooted(p) {
        report.bracket = Some(report.bracket_holds());
    }
    Ok(report)
}

/// Mean and variance of the distribution with generating function `p / p(1)`.
pub fn mean_variance(p: &ExactPoly) -> Result<(Rat, Rat)> {
    let one = Rat::one();
    let total = p.eval(&one);
    if total.is_zero() {
        return Err(Error::invalid("p(1) must be nonzero"));
    }
    let d1 = p.derivative();
    let mu = d1.eval(&one) / &total;
    let var = d1.derivative().eval(&one) / &total + &mu - &mu * &mu;
    Ok((mu, var))
}

/// The coefficient list of `p`, padded to length `len`.
pub fn padded(p: &ExactPoly, len: usize) -> Vec<Rat> {
    let mut v = p.coeffs().to_vec();
    v.resize(len.max(v.len()), Rat::zero());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::rat::{rat, ratio};
    use proptest::prelude::*;

    fn v(c: &[i64]) -> Vec<Rat> {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn unimodal_examples() {
        assert!(is_unimodal(&v(&[1, 4, 6, 4, 1])));
        assert!(!is_unimodal(&v(&[1, 0, 1])));
        assert!(is_unimodal(&v(&[1, 1, 2, 1, 1])));
        assert!(is_unimodal(&[]));
        assert!(is_unimodal(&v(&[3, 3, 3])));
    }

    #[test]
    fn log_concave_examples() {
        assert!(!is_log_concave(&v(&[1, 1, 2, 1, 1]), false));
        assert!(is_log_concave(&v(&[1, 3, 3, 1]), true));
        assert!(is_log_concave(&v(&[1, 2, 2, 1]), true));
        assert!(is_log_concave(&v(&[1, 0, 0]), false));
        assert!(!is_log_concave(&v(&[1, 0, 0, 1]), true));
        assert!(is_log_concave(&v(&[1, 0, 0, 1]), false));
    }

    #[test]
    fn l_operator_examples() {
        assert_eq!(L_operator(&v(&[1, 2, 1])), v(&[1, 3, 1]));
        assert_eq!(L_operator(&v(&[1])), v(&[1]));
        assert_eq!(L_operator(&v(&[1, 1, 2, 1, 1])), v(&[1, -1, 3, -1, 1]));
    }

    #[test]
    fn k_fold_examples() {
        assert!(k_fold_log_concave(&v(&[1, 3, 3, 1]), 5));
        assert!(!k_fold_log_concave(&v(&[1, 1, 2, 1, 1]), 1));
        assert!(k_fold_log_concave(&v(&[7]), 9));
        assert!(!k_fold_log_concave(&v(&[-1]), 0));
    }

    #[test]
    fn r_criterion_examples() {
        assert_eq!(r_criterion_certificate(&v(&[1, 1, 1])), Ok(false));
        assert_eq!(r_criterion_certificate(&v(&[1, 2, 1])), Ok(true));
        assert_eq!(r_criterion_certificate(&v(&[1, 0, 5])), Ok(false));
        assert_eq!(r_criterion_certificate(&v(&[1, -1])), Err(Error::Negative));
    }

    #[test]
    fn r_boundary() {
        // (1, s, s) has ratio a_1² / (a_0 a_2) = s; r ≈ 2.6180339887.
        assert_eq!(r_criterion_certificate(&v(&[1000, 1, 0])), Ok(true));
        let s_hi = ratio(26181, 10000);
        let s_lo = ratio(26180, 10000);
        assert_eq!(r_criterion_certificate(&[rat(1), s_hi.clone(), s_hi]), Ok(true));
        assert_eq!(r_criterion_certificate(&[rat(1), s_lo.clone(), s_lo]), Ok(false));
    }

    #[test]
    fn infinite_report() {
        assert_eq!(infinite_log_concavity(&v(&[1, 2, 1]), 3), InfiniteLogConcavity::Proven);
        assert_eq!(
            infinite_log_concavity(&v(&[1, 1, 2, 1, 1]), 3),
            InfiniteLogConcavity::Refuted { iteration: 1 }
        );
        assert_eq!(infinite_log_concavity(&v(&[1, 3, 3, 1]), 3), InfiniteLogConcavity::Proven);
    }

    #[test]
    fn fisk_examples() {
        assert_eq!(fisk_Ld_operator(&v(&[1, 2, 1]), 1).unwrap(), v(&[1, 3, 1]));
        assert_eq!(fisk_Ld_operator(&v(&[1]), 1).unwrap(), v(&[1]));
        assert!(fisk_Ld_operator(&v(&[1]), 0).is_err());
        let a = v(&[1, 1]);
        let got = fisk_Ld_operator(&a, 2).unwrap();
        for k in 0..2isize {
            let rows: Vec<Vec<Rat>> =
                (0..3).map(|i| (0..3).map(|j| at(&a, k + i - j)).collect()).collect();
            assert_eq!(got[k as usize], crate::linalg::det_by_minors(&rows));
        }
        assert_eq!(got, v(&[1, 1]));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_expand(&ExactPoly::from_ints(&[1, 11, 11, 1])).unwrap();
        assert_eq!(g, GammaVector { d: 3, gammas: v(&[1, 8]) });
        let g = gamma_expand(&ExactPoly::from_ints(&[1, 4, 6, 4, 1])).unwrap();
        assert_eq!(g.gammas, v(&[1, 0, 0]));
        let g = gamma_expand(&ExactPoly::from_ints(&[1, 1, 1])).unwrap();
        assert_eq!(g.gammas, v(&[1, -1]));
        assert!(!g.is_nonnegative());
        assert_eq!(gamma_expand(&ExactPoly::from_ints(&[1, 2])), Err(Error::NotSymmetric));
        assert_eq!(gamma_expand(&ExactPoly::zero()), Err(Error::ZeroPolynomial));
        // Support starting at x: x + 4x^2 + x^3 has d = 4.
        let g = gamma_expand(&ExactPoly::from_ints(&[0, 1, 4, 1])).unwrap();
        assert_eq!(g, GammaVector { d: 4, gammas: v(&[0, 1, 2]) });
    }

    #[test]
    fn pf_examples() {
        assert!(!is_pf_finite(&v(&[1, 4, 3, 1])));
        assert!(is_pf_finite(&v(&[1, 2, 1])));
        assert!(!toeplitz_tp2(&v(&[1, 1, 2, 1, 1])));
        assert!(toeplitz_tp2(&v(&[1, 2, 1])));
        assert!(toeplitz_tp2(&v(&[1, 4, 3, 1])));
    }

    /// Scans every 2×2 minor of an explicit finite Toeplitz block.
    fn tp2_oracle(a: &[Rat]) -> bool {
        let n = a.len() as isize;
        let size = 3 * n + 3;
        let t = |i: isize, j: isize| at(a, i - j - n - 1);
        for i1 in 0..size {
            for i2 in i1 + 1..size {
                for j1 in 0..size {
                    for j2 in j1 + 1..size {
                        if (t(i1, j1) * t(i2, j2) - t(i1, j2) * t(i2, j1)).is_negative() {
                            return false;
                        }
                    }
                }
            }
        }
        a.iter().all(|c| !c.is_negative())
    }

    #[test]
    fn mode_examples() {
        let r = mode_report(&ExactPoly::from_ints(&[0, 2, 3, 1])).unwrap();
        assert_eq!(r.modes, alloc::vec![2]);
        assert_eq!(r.mean, ratio(11, 6));
        assert_eq!(r.bracket, Some(true));
        let r = mode_report(&ExactPoly::from_ints(&[1])).unwrap();
        assert_eq!((r.modes, r.mean), (alloc::vec![0], rat(0)));
        let r = mode_report(&ExactPoly::from_ints(&[1, 3, 3, 1])).unwrap();
        assert_eq!(r.modes, alloc::vec![1, 2]);
        assert_eq!(r.mean, ratio(3, 2));
        assert_eq!(r.bracket, Some(true));
        assert_eq!(mode_report(&ExactPoly::zero()), Err(Error::ZeroPolynomial));
        let r = mode_report(&ExactPoly::from_ints(&[1, 0, 0, 5])).unwrap();
        assert_eq!(r.bracket, None);
    }

    #[test]
    fn moments() {
        assert_eq!(mean_variance(&ExactPoly::from_ints(&[0, 1])).unwrap(), (rat(1), rat(0)));
        let half = ExactPoly::new(alloc::vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(mean_variance(&half).unwrap(), (ratio(1, 2), ratio(1, 4)));
        assert!(mean_variance(&ExactPoly::from_ints(&[1, -1])).is_err());
    }

    fn nonneg_seq() -> impl Strategy<Value = Vec<Rat>> {
        proptest::collection::vec(0i64..12, 1..6).prop_map(|c| c.into_iter().map(rat).collect())
    }

    proptest! {
        #[test]
        fn fisk_d1_is_l(a in proptest::collection::vec(-6i64..9, 0..7)) {
            let a: Vec<Rat> = a.into_iter().map(rat).collect();
            prop_assert_eq!(fisk_Ld_operator(&a, 1).unwrap(), L_operator(&a));
        }

        #[test]
        fn tp2_matches_oracle(a in proptest::collection::vec(0i64..6, 1..5)) {
            let a: Vec<Rat> = a.into_iter().map(rat).collect();
            prop_assert_eq!(toeplitz_tp2(&a), tp2_oracle(&a));
        }

        #[test]
        fn gamma_roundtrip(half in proptest::collection::vec(-5i64..6, 1..5), odd in proptest::bool::ANY, lo in 0usize..3) {
            let mut c: Vec<i64> = half.clone();
            let mut tail: Vec<i64> = half.iter().rev().cloned().collect();
            if odd { tail.remove(0); }
            c.extend(tail);
            let mut coeffs = vec![0i64; lo];
            coeffs.extend(c);
            let p = ExactPoly::from_ints(&coeffs);
            prop_assume!(!p.is_zero());
            let g = gamma_expand(&p).unwrap();
            prop_assert_eq!(g.reconstruct(), p);
        }

        #[test]
        fn element_chain(roots in proptest::collection::vec((0i64..8, 1i64..4), 1..6), scale in 1i64..5) {
            // Nonpositive-zero polynomials.
            let p: ExactPoly = roots.iter().map(|&(n, d)| ExactPoly::linear(ratio(n, d))).product::<ExactPoly>().scale(&rat(scale));
            let a = p.coeffs().to_vec();
            prop_assert!(is_binomially_log_concave(&a));
            prop_assert!(is_log_concave(&a, false));
            prop_assert!(is_unimodal(&a));
            let r = mode_report(&p).unwrap();
            prop_assert_eq!(r.bracket, Some(true));
        }

        #[test]
        fn l_keeps_length(a in nonneg_seq()) {
            prop_assert_eq!(L_operator(&a).len(), a.len());
        }
    }
}
