//! Seeded generators for test corpora. Every function draws from a
//! [`ChaCha8Rng`], so a seed fixes the output on every platform.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::SVector;
use crate::graphs::Graph;
use crate::perm::Permutation;
use crate::posets::{sign_grading, LabeledPoset};
use crate::poly::{from_roots, ExactPoly};
use crate::rat::{self, Rat};
use crate::subdivision::SimplicialComplex;

/// The generator behind every seeded draw.
pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in `lo..=hi`.
pub fn index(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}

/// `p/q` with `1 ≤ p ≤ num`, `1 ≤ q ≤ den`.
pub fn positive_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rat {
    rat::ratio(rng.gen_range(1..=num), rng.gen_range(1..=den))
}

/// `p/q` with `0 ≤ p ≤ num`.
pub fn nonnegative_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rat {
    rat::ratio(rng.gen_range(0..=num), rng.gen_range(1..=den))
}

/// `c Π (x + r_i)` with `r_i ≥ 0` rational, `c > 0` and degree in `0..=max_deg`.
/// Roots repeat now and then.
pub fn nonpositive_rooted_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> ExactPoly {
    let deg = rng.gen_range(0..=max_deg);
    let mut roots: Vec<Rat> = Vec::with_capacity(deg);
    for _ in 0..deg {
        let r = if !roots.is_empty() && rng.gen_bool(0.15) {
            roots.choose(rng).cloned().expect("nonempty")
        } else {
            -nonnegative_rat(rng, 12, 4)
        };
        roots.push(r);
    }
    from_roots(&roots).scale(&positive_rat(rng, 6, 3))
}

/// `deg` distinct nonpositive rationals in decreasing order.
fn distinct_nonpositive(rng: &mut ChaCha8Rng, deg: usize) -> Vec<Rat> {
    let mut roots: Vec<Rat> = Vec::with_capacity(deg);
    while roots.len() < deg {
        let r = -nonnegative_rat(rng, 16, 4);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    roots.sort_by(|a, b| b.cmp(a));
    roots
}

/// An interlacing sequence with nonnegative coefficients of length `len`.
/// It is drawn from `g/(x−ρ_1), g/(x−ρ_2), …, g/(x−ρ_d), g` for a random `g`
/// with zeros `0 ≥ ρ_1 > ⋯ > ρ_d`, keeping order, then scaled termwise by
/// positive constants and by a common nonnegative-rooted factor. Zero
/// polynomials are mixed in occasionally.
pub fn interlacing_sequence(rng: &mut ChaCha8Rng, len: usize, max_deg: usize) -> Vec<ExactPoly> {
    let deg = rng.gen_range(len.saturating_sub(1).max(1)..=max_deg.max(len.saturating_sub(1)).max(1));
    let roots = distinct_nonpositive(rng, deg);
    let g = from_roots(&roots);
    let mut pool: Vec<ExactPoly> = roots
        .iter()
        .map(|r| g.div_exact(&ExactPoly::new(vec![-r.clone(), Rat::one()])).expect("root of g"))
        .collect();
    pool.push(g);
    let mut keep: Vec<usize> = (0..pool.len()).collect();
    keep.shuffle(rng);
    keep.truncate(len.min(pool.len()));
    keep.sort_unstable();
    let common = if rng.gen_bool(0.3) { nonpositive_rooted_poly(rng, 2) } else { ExactPoly::one() };
    let mut seq: Vec<ExactPoly> =
        keep.into_iter().map(|i| &pool[i].scale(&positive_rat(rng, 5, 3)) * &common).collect();
    while seq.len() < len {
        let at = rng.gen_range(0..=seq.len());
        seq.insert(at, ExactPoly::zero());
    }
    if len > 1 && rng.gen_bool(0.1) {
        let at = rng.gen_range(0..len);
        seq[at] = ExactPoly::zero();
    }
    seq
}

/// `Σ_k h_k x^k (1+x)^{d−k}` with random nonnegative integers `h_k`, not all zero.
pub fn nonneg_h_poly(rng: &mut ChaCha8Rng, d: usize) -> ExactPoly {
    let mut h: Vec<i64> = (0..=d).map(|_| if rng.gen_bool(0.7) { rng.gen_range(0..=6) } else { 0 }).collect();
    if h.iter().all(|&v| v == 0) {
        let i = rng.gen_range(0..=d);
        h[i] = 1;
    }
    let one_plus_x = ExactPoly::from_ints(&[1, 1]);
    h.iter()
        .enumerate()
        .map(|(k, &c)| ExactPoly::monomial(k, rat::rat(c)) * one_plus_x.pow((d - k) as u32))
        .sum()
}

/// Each edge independently with probability `p`.
pub fn graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("simple graph")
}

/// A random spanning tree (random attachment) plus random extra edges.
pub fn connected_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i], order[j]);
        edges.push((u.min(v), u.max(v)));
    }
    let p = rng.gen_range(0.0..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("simple graph")
}

/// A simplicial complex on at most 5 vertices with at most `max_faces`
/// faces, the empty face included.
pub fn complex(rng: &mut ChaCha8Rng, max_faces: usize) -> SimplicialComplex {
    loop {
        let v = rng.gen_range(1..=5u32);
        let k = rng.gen_range(1..=3);
        let facets: Vec<Vec<u32>> = (0..k)
            .map(|_| {
                let mut pts: Vec<u32> = (1..=v).collect();
                pts.shuffle(rng);
                pts.truncate(rng.gen_range(1..=v.min(3) as usize));
                pts
            })
            .collect();
        let c = SimplicialComplex::new(facets).expect("nonempty facets");
        if c.faces(max_faces as u64).is_ok_and(|f| f.len() <= max_faces) {
            return c;
        }
    }
}

pub fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut w: Vec<u32> = (1..=n as u32).collect();
    w.shuffle(rng);
    Permutation::new(w).expect("bijection")
}

/// `n` in `1..=max_n`, entries in `1..=max_s`.
pub fn svector(rng: &mut ChaCha8Rng, max_n: usize, max_s: u32) -> SVector {
    let n = rng.gen_range(1..=max_n);
    SVector::new((0..n).map(|_| rng.gen_range(1..=max_s)).collect()).expect("positive entries")
}

/// Weakly increasing `λ` of length `m` with entries in `0..=n`.
pub fn lambda(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Vec<usize> {
    let mut l: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=n)).collect();
    l.sort_unstable();
    l
}

/// Rank-type potential of a sign-graded poset: elements added in order, each
/// either a new minimal element with `φ = 0` or stacked on earlier elements
/// with `|Δφ| = 1`. Covers are the Hasse edges of the resulting order. A cover
/// `u ⋖ v` with `Δφ = +1` needs `label(u) < label(v)` and `Δφ = −1` the
/// reverse; labels come from a random topological order of those
/// constraints. Draws are rejected until the maximal elements share one
/// potential and the labeling constraints are acyclic, and the result is
/// confirmed with [`sign_grading`].
pub fn sign_graded_poset(rng: &mut ChaCha8Rng, max_n: usize) -> LabeledPoset {
    assert!(max_n >= 1);
    loop {
        if let Some(p) = try_sign_graded(rng, max_n) {
            return p;
        }
    }
}

fn try_sign_graded(rng: &mut ChaCha8Rng, max_n: usize) -> Option<LabeledPoset> {
    let n = rng.gen_range(1..=max_n);
    let mut phi = vec![0i64; n];
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.2) {
            continue;
        }
        let u = rng.gen_range(0..v);
        phi[v] = phi[u] + if rng.gen_bool(0.5) { 1 } else { -1 };
        arcs.push((u, v));
        for w in 0..v {
            if w != u && (phi[w] - phi[v]).abs() == 1 && rng.gen_bool(0.4) {
                arcs.push((w, v));
            }
        }
    }
    // transitive reduction: u→v kept unless another path reaches v
    let mut reach = vec![vec![false; n]; n];
    for v in 0..n {
        for &(u, w) in &arcs {
            if w == v {
                reach[u][v] = true;
                for t in 0..n {
                    if reach[t][u] {
                        reach[t][v] = true;
                    }
                }
            }
        }
    }
    let covers: Vec<(usize, usize)> = arcs
        .iter()
        .copied()
        .filter(|&(u, v)| !arcs.iter().any(|&(u2, w)| u2 == u && w != v && reach[w][v]))
        .collect();
    let has_up: Vec<bool> = (0..n).map(|v| covers.iter().any(|&(u, _)| u == v)).collect();
    let tops: Vec<i64> = (0..n).filter(|&v| !has_up[v]).map(|v| phi[v]).collect();
    if tops.windows(2).any(|w| w[0] != w[1]) {
        return None;
    }
    // labeling constraints as a digraph: a → b means label(a) < label(b)
    let constraints: Vec<(usize, usize)> =
        covers.iter().map(|&(u, v)| if phi[v] > phi[u] { (u, v) } else { (v, u) }).collect();
    let mut indeg = vec![0usize; n];
    for &(_, b) in &constraints {
        indeg[b] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut label = vec![0u32; n];
    let mut next = 1u32;
    while !ready.is_empty() {
        let i = rng.gen_range(0..ready.len());
        let v = ready.swap_remove(i);
        label[v] = next;
        next += 1;
        for &(a, b) in &constraints {
            if a == v {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
    }
    if next as usize != n + 1 {
        return None;
    }
    let labelled: Vec<(u32, u32)> = covers.iter().map(|&(u, v)| (label[u], label[v])).collect();
    let p = LabeledPoset::new(n, labelled).ok()?;
    sign_grading(&p).is_sign_graded().then_some(p)
}

/// Fresh `k`-tuple of positive rationals.
pub fn positive_point(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rat> {
    (0..k).map(|_| positive_rat(rng, 9, 5)).collect()
}

/// Nonzero rationals, either sign.
pub fn nonzero_point(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rat> {
    (0..k)
        .map(|_| {
            let q = positive_rat(rng, 9, 5);
            if rng.gen_bool(0.5) {
                -q
            } else {
                q
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realroot::{is_interlacing_seq, is_real_rooted};

    #[test]
    fn seeds_are_reproducible() {
        let a = nonpositive_rooted_poly(&mut rng(7), 10);
        let b = nonpositive_rooted_poly(&mut rng(7), 10);
        assert_eq!(a, b);
    }

    #[test]
    fn generated_objects_have_their_properties() {
        let mut r = rng(3);
        for _ in 0..40 {
            assert!(is_real_rooted(&nonpositive_rooted_poly(&mut r, 8)));
            let len = r.gen_range(1..=5);
            let seq = interlacing_sequence(&mut r, len, 5);
            assert_eq!(seq.len(), len);
            assert!(seq.iter().all(ExactPoly::has_nonnegative_coeffs));
            assert!(is_interlacing_seq(&seq).unwrap(), "{seq:?}");
            assert!(connected_graph(&mut r, 6).is_connected());
            assert!(complex(&mut r, 12).faces(100).unwrap().len() <= 12);
            let p = sign_graded_poset(&mut r, 8);
            assert!(p.n() <= 8);
            let l = lambda(&mut r, 4, 5);
            assert!(l.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn sign_graded_posets_are_varied() {
        let mut r = rng(11);
        let ps: Vec<LabeledPoset> = (0..100).map(|_| sign_graded_poset(&mut r, 8)).collect();
        assert!(ps.iter().any(|p| !p.is_naturally_labeled()));
        assert!(ps.iter().any(|p| sign_grading(p).rank.is_some_and(|k| k < 0)));
        assert!(ps.iter().any(|p| p.n() >= 7 && !p.covers().is_empty()));
    }
}
