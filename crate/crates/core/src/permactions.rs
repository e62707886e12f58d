//! The valley-hopping action of `Z_2^n` on permutations, its orbits and
//! γ-vectors, West's stack-sorting map, and the two-sided descent expansion.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multipoly::MultiPoly;
use crate::perm::{for_each_permutation, Permutation};
use crate::poly::{from_counts, ExactPoly};
use crate::positivity::GammaVector;
use crate::rat::{self, Rat};

/// Shape of a letter relative to its neighbours, with `a_0 = a_{n+1} = n+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterClass {
    Valley,
    Peak,
    DoubleAscent,
    DoubleDescent,
}

fn padded(pi: &Permutation) -> Vec<u32> {
    let top = pi.len() as u32 + 1;
    let mut b = Vec::with_capacity(pi.len() + 2);
    b.push(top);
    b.extend_from_slice(pi.word());
    b.push(top);
    b
}

/// Class of every letter; entry `x − 1` describes letter `x`.
pub fn letter_classes(pi: &Permutation) -> Vec<LetterClass> {
    let b = padded(pi);
    let mut out = vec![LetterClass::Valley; pi.len()];
    for i in 1..=pi.len() {
        let (l, m, r) = (b[i - 1], b[i], b[i + 1]);
        out[m as usize - 1] = match (l < m, m < r) {
            (false, true) => LetterClass::Valley,
            (true, false) => LetterClass::Peak,
            (true, true) => LetterClass::DoubleAscent,
            (false, false) => LetterClass::DoubleDescent,
        };
    }
    out
}

/// `φ_x`: slide a double descent right, or a double ascent left, to the first
/// slot between letters of opposite sides of `x`. Peaks and valleys are fixed.
pub fn phi(pi: &Permutation, x: u32) -> Permutation {
    let n = pi.len();
    assert!(x >= 1 && x as usize <= n, "letter out of range");
    let class = letter_classes(pi)[x as usize - 1];
    let mut b = padded(pi);
    let p = b.iter().position(|&v| v == x).expect("letter present");
    match class {
        LetterClass::Peak | LetterClass::Valley => return pi.clone(),
        LetterClass::DoubleDescent => {
            b.remove(p);
            let j = (p..b.len() - 1)
                .find(|&j| b[j] < x && x < b[j + 1])
                .expect("boundary letter n+1 closes the search");
            b.insert(j + 1, x);
        }
        LetterClass::DoubleAscent => {
            b.remove(p);
            let j = (0..p - 1)
                .rev()
                .find(|&j| b[j] > x && x > b[j + 1])
                .expect("boundary letter n+1 closes the search");
            b.insert(j + 1, x);
        }
    }
    Permutation::from_word_unchecked(b[1..=n].to_vec())
}

/// `φ_S = Π_{x ∈ S} φ_x`; the factors commute.
pub fn phi_set(pi: &Permutation, set: &[u32]) -> Permutation {
    set.iter().fold(pi.clone(), |acc, &x| phi(&acc, x))
}

fn letters_of(pi: &Permutation, class: LetterClass) -> Vec<u32> {
    letter_classes(pi)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == class)
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

/// The orbit member with no double descents.
pub fn canonical_representative(pi: &Permutation) -> Permutation {
    phi_set(pi, &letters_of(pi, LetterClass::DoubleDescent))
}

/// Orbit of `pi` under all `φ_S`, built as the `φ_S(π̂)` for subsets `S`
/// of the double ascents of the canonical representative. Sorted.
pub fn orbit(pi: &Permutation) -> Vec<Permutation> {
    let hat = canonical_representative(pi);
    let da = letters_of(&hat, LetterClass::DoubleAscent);
    let mut out: Vec<Permutation> = (0u64..1 << da.len())
        .map(|mask| {
            let s: Vec<u32> = da.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
            phi_set(&hat, &s)
        })
        .collect();
    out.sort();
    out
}

/// Orbit by breadth-first closure under single `φ_x`; a cross-check for [`orbit`].
pub fn orbit_bfs(pi: &Permutation) -> Vec<Permutation> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(pi.clone());
    queue.push_back(pi.clone());
    while let Some(p) = queue.pop_front() {
        for x in 1..=p.len() as u32 {
            let q = phi(&p, x);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// `Σ_{σ ∈ Orb(π)} x^{des σ}`, accumulated over subsets of the double ascents
/// of `π̂` without storing the orbit.
pub fn orbit_des_poly(pi: &Permutation) -> ExactPoly {
    let hat = canonical_representative(pi);
    let da = letters_of(&hat, LetterClass::DoubleAscent);
    let mut counts = vec![0u64; pi.len() + 1];
    for mask in 0u64..1 << da.len() {
        let s: Vec<u32> = da.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        counts[phi_set(&hat, &s).des()] += 1;
    }
    from_counts(&counts)
}

/// `x^{peak} (1+x)^{n−1−2 peak}`.
pub fn orbit_closed_form(pi: &Permutation) -> ExactPoly {
    let n = pi.len();
    if n == 0 {
        return ExactPoly::one();
    }
    let pk = pi.peak();
    ExactPoly::from_ints(&[1, 1]).pow((n - 1 - 2 * pk) as u32).shift(pk)
}

pub fn orbit_identity_holds(pi: &Permutation) -> bool {
    orbit_des_poly(pi) == orbit_closed_form(pi)
}

/// `T` is a union of orbits.
pub fn is_invariant(set: &[Permutation]) -> bool {
    let members: BTreeSet<&Permutation> = set.iter().collect();
    set.iter().all(|p| (1..=p.len() as u32).all(|x| members.contains(&phi(p, x))))
}

/// `A(T; x) = Σ_{π ∈ T} x^{des π}`.
pub fn des_poly(set: &[Permutation]) -> ExactPoly {
    let mut counts = Vec::new();
    for p in set {
        let d = p.des();
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    from_counts(&counts)
}

/// `γ_i = 2^{−n+1+2i} |{π ∈ T : peak π = i}|` for an invariant set `T ⊆ S_n`.
pub fn gamma_from_peaks(set: &[Permutation], n: usize) -> Result<GammaVector> {
    if set.iter().any(|p| p.len() != n) {
        return Err(Error::invalid("all permutations must have length n"));
    }
    if !is_invariant(set) {
        return Err(Error::NotInvariant);
    }
    let d = n.saturating_sub(1);
    let mut counts = vec![0u64; d / 2 + 1];
    for p in set {
        counts[p.peak()] += 1;
    }
    let gammas = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            // 2^{-(n-1-2i)}
            let e = (d - 2 * i) as u32;
            Rat::new(c.into(), num_bigint::BigInt::from(2u32).pow(e))
        })
        .collect();
    Ok(GammaVector { d, gammas })
}

/// `S(LmR) = S(L) S(R) m` with `m` the largest letter.
pub fn stack_sort(w: &[u32]) -> Result<Vec<u32>> {
    let distinct: BTreeSet<u32> = w.iter().copied().collect();
    if distinct.len() != w.len() {
        return Err(Error::invalid("stack sorting needs distinct letters"));
    }
    Ok(stack_sort_distinct(w))
}

fn stack_sort_distinct(w: &[u32]) -> Vec<u32> {
    // The recursive definition is equivalent to one pass of a stack.
    let mut stack: Vec<u32> = Vec::new();
    let mut out = Vec::with_capacity(w.len());
    for &a in w {
        while stack.last().is_some_and(|&t| t < a) {
            out.push(stack.pop().expect("nonempty"));
        }
        stack.push(a);
    }
    while let Some(t) = stack.pop() {
        out.push(t);
    }
    out
}

/// `S(LmR) = S(L) S(R) m` taken literally.
pub fn stack_sort_recursive(w: &[u32]) -> Vec<u32> {
    let Some((pos, &m)) = w.iter().enumerate().max_by_key(|(_, &v)| v) else {
        return Vec::new();
    };
    let mut out = stack_sort_recursive(&w[..pos]);
    out.extend(stack_sort_recursive(&w[pos + 1..]));
    out.push(m);
    out
}

/// `S^r(π)` is the identity.
pub fn is_r_stack_sortable(pi: &Permutation, r: usize) -> bool {
    let mut w = pi.word().to_vec();
    for _ in 0..r {
        w = stack_sort_distinct(&w);
    }
    w.windows(2).all(|p| p[0] < p[1])
}

pub fn r_sortable_set(n: usize, r: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| {
        if is_r_stack_sortable(p, r) {
            out.push(p.clone());
        }
    });
    out
}

pub fn r_sortable_des_poly(n: usize, r: usize) -> ExactPoly {
    des_poly(&r_sortable_set(n, r))
}

/// `S` takes a single value on the orbit of `pi`.
pub fn orbit_stacksort_constant(pi: &Permutation) -> bool {
    let target = stack_sort_distinct(pi.word());
    orbit(pi).iter().all(|s| stack_sort_distinct(s.word()) == target)
}

/// Coefficients `c_n(k, j)` of `Σ_π x^{des π} y^{des π^{-1}}` in the family
/// `(x+y)^k (xy)^j (1+xy)^{n−1−k−2j}`, `k + 2j ≤ n − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GesselExpansion {
    pub n: usize,
    pub joint: MultiPoly,
    pub coeffs: BTreeMap<(usize, usize), Rat>,
}

impl GesselExpansion {
    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| *c >= Rat::zero())
    }
}

fn bivariate(c: &[((u32, u32), i64)]) -> MultiPoly {
    MultiPoly::from_terms(2, c.iter().map(|&((a, b), v)| (vec![a, b], rat::rat(v)))).expect("arity 2")
}

fn mp_pow(p: &MultiPoly, e: usize) -> MultiPoly {
    (0..e).fold(MultiPoly::one(p.arity()), |acc, _| &acc * p)
}

pub fn gessel_basis(n: usize, k: usize, j: usize) -> MultiPoly {
    let x_plus_y = bivariate(&[((1, 0), 1), ((0, 1), 1)]);
    let xy = bivariate(&[((1, 1), 1)]);
    let one_xy = bivariate(&[((0, 0), 1), ((1, 1), 1)]);
    let rest = n - 1 - k - 2 * j;
    &(&mp_pow(&x_plus_y, k) * &mp_pow(&xy, j)) * &mp_pow(&one_xy, rest)
}

pub fn joint_descent_poly(n: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(2);
    for_each_permutation(n, |pi| {
        p.add_term(vec![pi.des() as u32, pi.inverse().des() as u32], Rat::one());
    });
    p
}

pub fn gessel_expand(n: usize) -> Result<GesselExpansion> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let joint = joint_descent_poly(n);
    let idx: Vec<(usize, usize)> = (0..n)
        .flat_map(|k| (0..n).map(move |j| (k, j)))
        .filter(|&(k, j)| k + 2 * j < n)
        .collect();
    let basis: Vec<MultiPoly> = idx.iter().map(|&(k, j)| gessel_basis(n, k, j)).collect();
    let monos: Vec<Vec<u32>> = (0..n as u32).flat_map(|a| (0..n as u32).map(move |b| vec![a, b])).collect();
    let mut m = Matrix::zeros(monos.len(), idx.len());
    for (r, e) in monos.iter().enumerate() {
        for (c, b) in basis.iter().enumerate() {
            m[(r, c)] = b.coeff(e);
        }
    }
    let rhs: Vec<Rat> = monos.iter().map(|e| joint.coeff(e)).collect();
    let sol = m.solve(&rhs)?;
    // `solve` rejects inconsistent systems; also confirm the residual vanishes.
    if m.mul_vec(&sol)? != rhs {
        return Err(Error::Inconsistent);
    }
    Ok(GesselExpansion { n, joint, coeffs: idx.into_iter().zip(sol).collect() })
}
