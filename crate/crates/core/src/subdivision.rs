//! Simplicial complexes, the `f`/`h` transforms, barycentric subdivision and
//! the subdivision operator `ℰ` with `ℰ C(x, k) = x^k`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::next_lex;
use crate::poly::{from_counts, ExactPoly};
use crate::rat::{self, Rat};
use crate::realroot::{count_real_roots, has_simple_roots_in, roots_in_closed};

/// A simplicial complex stored by its facets, each a sorted vertex list.
/// Faces are every subset of a facet, including the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Sorts each facet and drops those contained in another.
    pub fn new(facets: Vec<Vec<u32>>) -> Result<Self> {
        let mut sets: Vec<Vec<u32>> = Vec::new();
        for mut f in facets {
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid("facet repeats a vertex"));
            }
            sets.push(f);
        }
        sets.sort();
        sets.dedup();
        let keep: Vec<Vec<u32>> = sets
            .iter()
            .filter(|f| !sets.iter().any(|g| g.len() > f.len() && f.iter().all(|v| g.binary_search(v).is_ok())))
            .cloned()
            .collect();
        Ok(SimplicialComplex { facets: keep })
    }

    /// The full simplex on `k` vertices.
    pub fn simplex(k: usize) -> Self {
        SimplicialComplex { facets: vec![(0..k as u32).collect()] }
    }

    /// Boundary of the simplex on `k ≥ 2` vertices.
    pub fn simplex_boundary(k: usize) -> Self {
        let all: Vec<u32> = (0..k as u32).collect();
        let facets = (0..k as u32).rev().map(|skip| all.iter().copied().filter(|&v| v != skip).collect()).collect();
        Self::new(facets).expect("valid")
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// `d` with `d − 1` the dimension.
    pub fn d(&self) -> usize {
        self.facets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every face, empty face first, each sorted.
    pub fn faces(&self, budget: u64) -> Result<Vec<Vec<u32>>> {
        let bound: u128 = self.facets.iter().map(|f| 1u128 << f.len().min(100)).sum();
        if bound > budget as u128 {
            return Err(Error::Budget { needed: bound, budget });
        }
        let mut all = BTreeSet::new();
        for f in &self.facets {
            for mask in 0u64..1 << f.len() {
                all.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect::<Vec<_>>());
            }
        }
        if self.facets.is_empty() {
            all.insert(Vec::new());
        }
        let mut out: Vec<Vec<u32>> = all.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// `f_Δ(x) = Σ_F x^{|F|}`.
    pub fn f_poly(&self) -> Result<ExactPoly> {
        let mut counts = vec![0u64; self.d() + 1];
        for f in self.faces(crate::DEFAULT_BUDGET)? {
            counts[f.len()] += 1;
        }
        Ok(from_counts(&counts))
    }

    /// `χ̃(Δ) = −f_Δ(−1)`.
    pub fn reduced_euler_characteristic(&self) -> Result<Rat> {
        Ok(-self.f_poly()?.eval(&-Rat::one()))
    }
}

/// `h(x) = (1 − x)^d f(x / (1 − x))`.
pub fn h_from_f(f: &ExactPoly, d: usize) -> Result<ExactPoly> {
    transform(f, d, -1)
}

/// `f(x) = (1 + x)^d h(x / (1 + x))`, inverse to [`h_from_f`].
pub fn f_from_h(h: &ExactPoly, d: usize) -> Result<ExactPoly> {
    transform(h, d, 1)
}

fn transform(p: &ExactPoly, d: usize, sign: i64) -> Result<ExactPoly> {
    if !p.is_zero() && p.deg() > d {
        return Err(Error::Degree { degree: p.deg(), bound: d });
    }
    let base = ExactPoly::from_ints(&[1, sign]);
    Ok((0..=d)
        .map(|k| base.pow((d - k) as u32).shift(k).scale(&p.coeff(k)))
        .sum())
}

/// `S(m, k)` for `0 ≤ k ≤ m ≤ n`.
pub fn stirling2_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for m in 1..=n {
        for k in 1..=m {
            s[m][k] = &s[m - 1][k - 1] + BigInt::from(k) * &s[m - 1][k];
        }
    }
    s
}

/// `ℰ(p)`, using `ℰ(x^m) = Σ_k k! S(m, k) x^k`.
#[allow(non_snake_case)]
pub fn E_operator(p: &ExactPoly) -> ExactPoly {
    if p.is_zero() {
        return ExactPoly::zero();
    }
    let n = p.deg();
    let s = stirling2_table(n);
    let mut out = vec![Rat::zero(); n + 1];
    for (m, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for k in 0..=m {
            if !s[m][k].is_zero() {
                out[k] += c * rat::from_big(rat::factorial(k as u64) * &s[m][k]);
            }
        }
    }
    ExactPoly::new(out)
}

/// `I(p)(x) = p(−1 − x)`.
fn involution(p: &ExactPoly) -> ExactPoly {
    p.affine_substitute(&-Rat::one(), &-Rat::one())
}

/// `(−1)^d ℰ(p)(−1−x) = ℰ(q)` with `q(x) = (−1)^d p(−1−x)`.
#[allow(non_snake_case)]
pub fn E_symmetry_check(p: &ExactPoly, d: usize) -> bool {
    let sign = if d % 2 == 0 { Rat::one() } else { -Rat::one() };
    let lhs = involution(&E_operator(p)).scale(&sign);
    let rhs = E_operator(&involution(p).scale(&sign));
    lhs == rhs
}

/// Barycentric subdivision: vertices are the nonempty faces (numbered in the
/// order of [`SimplicialComplex::faces`], starting at 0) and facets are the
/// complete flags inside each facet.
pub fn barycentric_sd(c: &SimplicialComplex, budget: u64) -> Result<SimplicialComplex> {
    let faces = c.faces(budget)?;
    let flags: u128 = c.facets.iter().map(|f| (1..=f.len() as u128).product::<u128>()).sum();
    if flags > budget as u128 {
        return Err(Error::Budget { needed: flags, budget });
    }
    let index = |f: &[u32]| faces.binary_search_by(|g| g.len().cmp(&f.len()).then_with(|| g.as_slice().cmp(f))).expect("face") as u32 - 1;
    let mut out = Vec::new();
    for f in &c.facets {
        if f.is_empty() {
            continue;
        }
        let mut order = f.clone();
        loop {
            let mut flag = Vec::with_capacity(order.len());
            for k in 1..=order.len() {
                let mut prefix = order[..k].to_vec();
                prefix.sort_unstable();
                flag.push(index(&prefix));
            }
            out.push(flag);
            if !next_lex(&mut order) {
                break;
            }
        }
    }
    SimplicialComplex::new(out)
}

/// The monic `p_n` with `ℰ(p_n) = n! p_n`, by back substitution. `ℰ` is
/// triangular in the monomial basis with diagonal `k!`; `p_0 = 1` and
/// `p_1 = x + 1/2` are fixed by convention since `ℰ` is the identity in
/// degree at most one.
pub fn eigenpoly(n: usize) -> ExactPoly {
    match n {
        0 => return ExactPoly::one(),
        1 => return ExactPoly::new(vec![rat::ratio(1, 2), Rat::one()]),
        _ => {}
    }
    let s = stirling2_table(n);
    let nf = rat::from_big(rat::factorial(n as u64));
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    for k in (0..n).rev() {
        let kf = rat::from_big(rat::factorial(k as u64));
        let mut acc = Rat::zero();
        for m in k + 1..=n {
            acc += &c[m] * &kf * rat::from_big(s[m][k].clone());
        }
        c[k] = acc / (&nf - &kf);
    }
    ExactPoly::new(c)
}

/// Verdicts for one iterate `f_k = ℰ^k(f_Δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdIterate {
    pub k: usize,
    /// `f_k / d!^k`.
    pub scaled: ExactPoly,
    /// Largest coefficient of `|f_k / d!^k − f_{d−1}(Δ) p_d|`.
    pub distance: Rat,
    /// All zeros of `h_k` real and simple.
    pub h_real_simple: bool,
    /// All zeros of `h_k` nonpositive and simple.
    pub h_nonpositive_simple: bool,
    /// All but one zero of `h_k` nonpositive and simple.
    pub h_all_but_one_nonpositive: bool,
    /// All zeros of `f_k` real, simple and in `[−1, 0]`.
    pub f_in_unit_interval: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdDiagnostic {
    pub d: usize,
    pub reduced_euler: Rat,
    pub limit: ExactPoly,
    pub iterates: Vec<SdIterate>,
    /// First `k` from which the verdict the limit predicts holds for every
    /// later iterate computed, if any.
    pub stable_from: Option<usize>,
}

impl SdDiagnostic {
    pub fn distances_decreasing(&self) -> bool {
        self.iterates.windows(2).all(|w| w[1].distance <= w[0].distance)
    }
}

fn nonpositive_simple(h: &ExactPoly, allowed_outside: usize) -> bool {
    if h.is_zero() {
        return false;
    }
    let d = h.deg();
    if !h.is_squarefree() || count_real_roots(h, None, None) != d {
        return false;
    }
    d - count_real_roots(h, None, Some(&Rat::zero())) <= allowed_outside
}

/// Iterates `ℰ` on `f_Δ` and compares with `f_{d−1}(Δ) p_d(x)`.
pub fn sd_iterate_diagnostic(c: &SimplicialComplex, k: usize) -> Result<SdDiagnostic> {
    let d = c.d();
    let f0 = c.f_poly()?;
    let chi = c.reduced_euler_characteristic()?;
    let limit = eigenpoly(d).scale(&f0.coeff(d));
    let df = rat::from_big(rat::factorial(d as u64));
    let favourable = if d % 2 == 1 { !chi.is_negative() } else { !(-&chi).is_negative() };
    let (lo, hi) = (-Rat::one(), Rat::zero());
    let mut f = f0;
    let mut scale = Rat::one();
    let mut iterates = Vec::with_capacity(k);
    for i in 1..=k {
        f = E_operator(&f);
        scale = scale / &df;
        let scaled = f.scale(&scale);
        let diff = &scaled - &limit;
        let distance = diff.coeffs().iter().map(rat::abs).max().unwrap_or_else(Rat::zero);
        let h = h_from_f(&f, d)?;
        let h_real_simple = !h.is_zero() && h.is_squarefree() && count_real_roots(&h, None, None) == h.deg();
        iterates.push(SdIterate {
            k: i,
            scaled,
            distance,
            h_real_simple,
            h_nonpositive_simple: nonpositive_simple(&h, 0),
            h_all_but_one_nonpositive: nonpositive_simple(&h, 1),
            f_in_unit_interval: has_simple_roots_in(&f, &lo, &hi),
        });
    }
    let predicted = |it: &SdIterate| {
        if favourable {
            it.h_nonpositive_simple
        } else {
            it.h_real_simple && it.h_all_but_one_nonpositive
        }
    };
    let stable_from = (0..iterates.len())
        .find(|&s| iterates[s..].iter().all(predicted))
        .map(|s| iterates[s].k);
    Ok(SdDiagnostic { d, reduced_euler: chi, limit, iterates, stable_from })
}

/// All zeros of `ℰ(f)` real, simple and in `[−1, 0]`.
pub fn e_image_in_unit_interval(f: &ExactPoly) -> bool {
    let e = E_operator(f);
    has_simple_roots_in(&e, &-Rat::one(), &Rat::zero())
}

/// Zeros in `[−1, 0]`, counted without multiplicity.
pub fn zeros_in_unit_interval(p: &ExactPoly) -> usize {
    roots_in_closed(p, &-Rat::one(), &Rat::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    // Newton expansion p(x) = Σ Δ^k p(0) C(x, k), then C(x, k) ↦ x^k.
    fn e_by_differences(q: &ExactPoly) -> ExactPoly {
        if q.is_zero() {
            return ExactPoly::zero();
        }
        let n = q.deg();
        let mut vals: Vec<Rat> = (0..=n).map(|i| q.eval(&rat(i as i64))).collect();
        let mut out = Vec::new();
        for _ in 0..=n {
            out.push(vals[0].clone());
            vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        ExactPoly::new(out)
    }

    fn binom_x(k: usize) -> ExactPoly {
        let num: ExactPoly = (0..k as i64).map(|i| p(&[-i, 1])).product();
        num.scale(&rat::from_big(rat::factorial(k as u64)).recip())
    }

    #[test]
    fn f_h_examples() {
        let tri = SimplicialComplex::simplex_boundary(3);
        let f = tri.f_poly().unwrap();
        assert_eq!(f, p(&[1, 3, 3]));
        assert_eq!(h_from_f(&f, 2).unwrap(), p(&[1, 1, 1]));
        let seg = SimplicialComplex::simplex(2);
        assert_eq!(seg.f_poly().unwrap(), p(&[1, 2, 1]));
        assert_eq!(h_from_f(&p(&[1, 2, 1]), 2).unwrap(), p(&[1]));
        assert_eq!(f_from_h(&p(&[1, 1, 1]), 2).unwrap(), f);
        assert!(h_from_f(&p(&[1, 2, 1]), 1).is_err());
    }

    #[test]
    fn e_examples() {
        assert_eq!(E_operator(&p(&[0, 0, 1])), p(&[0, 1, 2]));
        assert_eq!(E_operator(&p(&[1])), p(&[1]));
        assert_eq!(E_operator(&binom_x(3)), p(&[0, 0, 0, 1]));
        for k in 0..8 {
            assert_eq!(E_operator(&binom_x(k)), ExactPoly::monomial(k, Rat::one()));
        }
        assert!(E_symmetry_check(&p(&[0, 0, 1]), 2));
        assert!(E_symmetry_check(&p(&[1]), 0));
        assert!(E_symmetry_check(&binom_x(3), 3));
    }

    #[test]
    fn subdivision_examples() {
        let seg = SimplicialComplex::simplex(2);
        let sd = barycentric_sd(&seg, 1000).unwrap();
        assert_eq!(sd.f_poly().unwrap(), p(&[1, 3, 2]));
        let pt = SimplicialComplex::simplex(1);
        assert_eq!(barycentric_sd(&pt, 10).unwrap(), pt);
        let tri = SimplicialComplex::simplex_boundary(3);
        let hex = barycentric_sd(&tri, 1000).unwrap();
        assert_eq!(hex.f_poly().unwrap(), p(&[1, 6, 6]));
        for k in 1..=5 {
            for c in [SimplicialComplex::simplex(k), SimplicialComplex::simplex_boundary(k + 1)] {
                let f = c.f_poly().unwrap();
                assert_eq!(barycentric_sd(&c, 100_000).unwrap().f_poly().unwrap(), E_operator(&f));
            }
        }
    }

    #[test]
    fn eigenpolys() {
        assert_eq!(eigenpoly(0), p(&[1]));
        assert_eq!(eigenpoly(1), ExactPoly::new(vec![rat::ratio(1, 2), rat(1)]));
        assert_eq!(eigenpoly(2), p(&[0, 1, 1]));
        for n in 0..=9 {
            let e = eigenpoly(n);
            let nf = rat::from_big(rat::factorial(n as u64));
            assert_eq!(E_operator(&e), e.scale(&nf));
            let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
            assert_eq!(involution(&e).scale(&sign), e);
            assert!(has_simple_roots_in(&e, &rat(-1), &rat(0)));
        }
    }

    #[test]
    fn iterate_diagnostic() {
        let tri = SimplicialComplex::simplex_boundary(3);
        let r = sd_iterate_diagnostic(&tri, 6).unwrap();
        assert!(r.distances_decreasing());
        assert!(r.iterates.iter().all(|it| it.f_in_unit_interval));
        assert_eq!(r.limit, p(&[0, 3, 3]));
        let simplex = SimplicialComplex::simplex(3);
        let r = sd_iterate_diagnostic(&simplex, 1).unwrap();
        assert!(r.iterates[0].f_in_unit_interval);
        let pt = sd_iterate_diagnostic(&SimplicialComplex::simplex(1), 3).unwrap();
        assert!(pt.iterates.iter().all(|it| it.scaled == p(&[1, 1]) || it.distance.is_zero()));
    }

    proptest::proptest! {
        #[test]
        fn e_matches_newton(c in proptest::collection::vec(-20i64..20, 0..9)) {
            let q = p(&c);
            proptest::prop_assert_eq!(E_operator(&q), e_by_differences(&q));
        }

        #[test]
        fn e_commutes_with_involution(c in proptest::collection::vec(-20i64..20, 0..9), d in 0usize..10) {
            proptest::prop_assert!(E_symmetry_check(&p(&c), d));
        }

        #[test]
        fn h_f_roundtrip(c in proptest::collection::vec(-20i64..20, 0..8), extra in 0usize..3) {
            let h = p(&c);
            let d = if h.is_zero() { extra } else { h.deg() + extra };
            proptest::prop_assert_eq!(h_from_f(&f_from_h(&h, d).unwrap(), d).unwrap(), h);
        }
    }
}
