//! Probability measures on `{0,1}^n` as multiaffine partition functions,
//! negative-dependence checks, the symmetric exclusion process and the
//! multivariate Eulerian polynomials.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graphs::{spanning_tree_poly, Graph};
use crate::linalg::Matrix;
use crate::multipoly::MultiPoly;
use crate::perm::for_each_permutation;
use crate::poly::ExactPoly;
use crate::rat::{self, Rat};
use crate::realroot::{count_real_roots, is_real_rooted, roots_in_closed};
use crate::signed::for_each_signed;

/// Largest ground set for which a measure is expanded into its `2^n` atoms.
pub const MAX_SITES: usize = 20;

/// Largest number of sites for which [`sep_generator`] is built.
pub const MAX_SEP_SITES: usize = 12;

/// A probability measure `μ` on subsets of `{0, …, n−1}`; the partition
/// function is `P(x) = Σ_S μ(S) Π_{i∈S} x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteMeasure {
    partition: MultiPoly,
}

impl DiscreteMeasure {
    pub fn new(partition: MultiPoly) -> Result<Self> {
        if partition.arity() > MAX_SITES {
            return Err(Error::Budget { needed: partition.arity() as u128, budget: MAX_SITES as u64 });
        }
        if !partition.is_multiaffine() {
            return Err(Error::invalid("partition function must be multiaffine"));
        }
        if !partition.has_nonnegative_coeffs() {
            return Err(Error::Negative);
        }
        if partition.sum_coeffs() != Rat::one() {
            return Err(Error::invalid("total mass must be 1"));
        }
        Ok(DiscreteMeasure { partition })
    }

    /// Normalises nonnegative weights indexed by bitmask (bit `i` is element `i`).
    pub fn from_weights(n: usize, weights: &[Rat]) -> Result<Self> {
        if weights.len() != 1 << n {
            return Err(Error::Shape("expected 2^n weights".into()));
        }
        let total: Rat = weights.iter().sum();
        if total.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut p = MultiPoly::zero(n);
        for (mask, w) in weights.iter().enumerate() {
            if !w.is_zero() {
                p.add_term((0..n).map(|i| (mask >> i & 1) as u32).collect(), w / &total);
            }
        }
        Self::new(p)
    }

    /// The product of independent Bernoulli(`p_i`) coordinates.
    pub fn product(ps: &[Rat]) -> Result<Self> {
        let n = ps.len();
        let w: Vec<Rat> = (0..1usize << n)
            .map(|mask| {
                (0..n).fold(Rat::one(), |acc, i| {
                    if mask >> i & 1 == 1 {
                        acc * &ps[i]
                    } else {
                        acc * (Rat::one() - &ps[i])
                    }
                })
            })
            .collect();
        Self::from_weights(n, &w)
    }

    pub fn n(&self) -> usize {
        self.partition.arity()
    }

    pub fn partition(&self) -> &MultiPoly {
        &self.partition
    }

    /// `μ(S)` for `S` given as a bitmask.
    pub fn prob(&self, mask: usize) -> Rat {
        let e: Vec<u32> = (0..self.n()).map(|i| (mask >> i & 1) as u32).collect();
        self.partition.coeff(&e)
    }

    /// All atoms, indexed by bitmask.
    pub fn probs(&self) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); 1 << self.n()];
        for (e, c) in self.partition.terms() {
            let mask = e.iter().enumerate().fold(0usize, |m, (i, &k)| m | (k as usize) << i);
            out[mask] = c.clone();
        }
        out
    }

    /// `P(x, x, …, x)`.
    pub fn diagonal(&self) -> ExactPoly {
        self.partition.diagonal()
    }
}

/// `μ(η_i = η_j = 1) ≤ μ(η_i = 1) μ(η_j = 1)` for all `i < j`.
pub fn pairwise_neg_corr(mu: &DiscreteMeasure) -> bool {
    let n = mu.n();
    let probs = mu.probs();
    let marg = |set: usize| -> Rat { probs.iter().enumerate().filter(|(m, _)| m & set == set).map(|(_, p)| p).sum() };
    let single: Vec<Rat> = (0..n).map(|i| marg(1 << i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if marg(1 << i | 1 << j) > &single[i] * &single[j] {
                return false;
            }
        }
    }
    true
}

/// Every up-set of `{0,1}^k`, as a bitmask over the `2^k` points.
pub fn upsets(k: usize) -> Vec<u64> {
    assert!(k <= 6, "up-sets are listed for at most 6 coordinates");
    if k == 0 {
        return vec![0, 1];
    }
    // An up-set splits by the last coordinate into U0 ⊆ U1, both up-sets.
    let smaller = upsets(k - 1);
    let half = 1u32 << (k - 1);
    let mut out = Vec::new();
    for &u0 in &smaller {
        for &u1 in &smaller {
            if u0 & !u1 == 0 {
                out.push(u0 | u1 << half);
            }
        }
    }
    out
}

/// `max Cov(1_U, 1_V)` over up-sets `U`, `V` depending on disjoint coordinate
/// sets. An up-set in the coordinates `A` is also one in any superset of `A`,
/// so it is enough to let `A` and its complement range over bipartitions.
pub fn max_upset_covariance(mu: &DiscreteMeasure, max_n: usize) -> Result<Rat> {
    let n = mu.n();
    if n > max_n || n > 7 {
        return Err(Error::Budget { needed: n as u128, budget: max_n.min(7) as u64 });
    }
    let probs = mu.probs();
    let mut worst: Option<Rat> = None;
    let full = (1usize << n) - 1;
    for a_set in 1..full {
        // Each unordered pair once.
        if a_set & 1 == 0 {
            continue;
        }
        let b_set = full & !a_set;
        let a_idx: Vec<usize> = (0..n).filter(|i| a_set >> i & 1 == 1).collect();
        let b_idx: Vec<usize> = (0..n).filter(|i| b_set >> i & 1 == 1).collect();
        if a_idx.len() > 6 || b_idx.len() > 6 {
            return Err(Error::Budget { needed: n as u128, budget: 7 });
        }
        let project = |mask: usize, idx: &[usize]| idx.iter().enumerate().fold(0usize, |m, (t, &i)| m | (mask >> i & 1) << t);
        let (ka, kb) = (1usize << a_idx.len(), 1usize << b_idx.len());
        let mut joint = vec![vec![Rat::zero(); kb]; ka];
        for (mask, p) in probs.iter().enumerate() {
            if !p.is_zero() {
                joint[project(mask, &a_idx)][project(mask, &b_idx)] += p;
            }
        }
        let col_marg: Vec<Rat> = (0..kb).map(|b| (0..ka).map(|a| &joint[a][b]).sum()).collect();
        let ups_b = upsets(b_idx.len());
        for u in upsets(a_idx.len()) {
            let row: Vec<Rat> = (0..kb).map(|b| (0..ka).filter(|a| u >> a & 1 == 1).map(|a| &joint[a][b]).sum()).collect();
            let pu: Rat = row.iter().sum();
            for &v in &ups_b {
                let (mut both, mut pv) = (Rat::zero(), Rat::zero());
                for b in (0..kb).filter(|b| v >> b & 1 == 1) {
                    both += &row[b];
                    pv += &col_marg[b];
                }
                let cov = both - &pu * &pv;
                if worst.as_ref().is_none_or(|w| cov > *w) {
                    worst = Some(cov);
                }
            }
        }
    }
    Ok(worst.unwrap_or_else(Rat::zero))
}

/// `Cov(1_U, 1_V) ≤ 0` for every pair of up-sets on disjoint coordinate
/// sets. Indicator pairs suffice because an increasing function is a
/// nonnegative combination of up-set indicators plus a constant.
pub fn negatively_associated(mu: &DiscreteMeasure, max_n: usize) -> Result<bool> {
    Ok(!max_upset_covariance(mu, max_n)?.is_positive())
}

/// Decides stability of a multiaffine symmetric polynomial through its
/// diagonal, as the Grace–Walsh–Szegő theorem allows.
pub fn gws_symmetric_diag(p: &MultiPoly) -> Result<bool> {
    if !p.is_multiaffine() {
        return Err(Error::invalid("polynomial is not multiaffine"));
    }
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(is_real_rooted(&p.diagonal()))
}

/// The uniform measure on spanning trees, one coordinate per edge.
pub fn uniform_spanning_tree_measure(g: &Graph) -> Result<DiscreteMeasure> {
    let t = spanning_tree_poly(g)?;
    let count = t.sum_coeffs();
    DiscreteMeasure::new(t.scale(&count.recip()))
}

/// `μ_C(T ⊇ S) = det C(S)` for a real symmetric `C` with `0 ≼ C ≼ I`.
pub fn determinantal_measure(c: &Matrix) -> Result<DiscreteMeasure> {
    if !c.is_square() {
        return Err(Error::Shape("kernel must be square".into()));
    }
    if !c.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = c.rows();
    if n > MAX_SITES {
        return Err(Error::Budget { needed: n as u128, budget: MAX_SITES as u64 });
    }
    let cp = c.charpoly()?;
    // Every eigenvalue lies in [0, 1]: all real zeros of det(xI − C) fall there.
    let total = count_real_roots(&cp, None, None);
    if !is_real_rooted(&cp) || roots_in_closed(&cp, &Rat::zero(), &Rat::one()) != total {
        return Err(Error::NotContraction);
    }
    let mut up: Vec<Rat> = (0..1usize << n)
        .map(|mask| {
            let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            c.principal_minor(&set)
        })
        .collect::<Result<_>>()?;
    // Möbius inversion over supersets.
    for i in 0..n {
        for mask in 0..1usize << n {
            if mask >> i & 1 == 0 {
                let hi = up[mask | 1 << i].clone();
                up[mask] -= hi;
            }
        }
    }
    DiscreteMeasure::from_weights(n, &up)
}

/// Rates of the symmetric exclusion process on sites `0..n`: jumps `q_{ij}`,
/// births `b_i` and deaths `d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SEPModel {
    pub n: usize,
    pub q: Matrix,
    pub b: Vec<Rat>,
    pub d: Vec<Rat>,
}

impl SEPModel {
    pub fn new(q: Matrix, b: Vec<Rat>, d: Vec<Rat>) -> Result<Self> {
        let n = b.len();
        if q.rows() != n || q.cols() != n || d.len() != n {
            return Err(Error::Shape("rates must all have n sites".into()));
        }
        if !q.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if (0..n).any(|i| !q[(i, i)].is_zero()) {
            return Err(Error::invalid("jump matrix must have zero diagonal"));
        }
        let neg = |r: &Rat| r.is_negative();
        if (0..n).any(|i| (0..n).any(|j| neg(&q[(i, j)]))) || b.iter().any(neg) || d.iter().any(neg) {
            return Err(Error::Negative);
        }
        Ok(SEPModel { n, q, b, d })
    }

    /// Nearest-neighbour jumps at rate 1 on a line, births `α` at the first
    /// site and `δ` at the last, deaths `γ` at the first and `β` at the last.
    /// With one site the two ends coincide and the rates add.
    pub fn corteel_williams(n: usize, alpha: Rat, beta: Rat, gamma: Rat, delta: Rat) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("at least one site is needed"));
        }
        let mut q = Matrix::zeros(n, n);
        for i in 1..n {
            q[(i - 1, i)] = Rat::one();
            q[(i, i - 1)] = Rat::one();
        }
        let mut b = vec![Rat::zero(); n];
        let mut d = vec![Rat::zero(); n];
        b[0] += alpha;
        b[n - 1] += delta;
        d[0] += gamma;
        d[n - 1] += beta;
        Self::new(q, b, d)
    }
}

/// A sparse generator: `rows[η]` lists `(η', rate)` for `η' ≠ η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub n: usize,
    pub rows: Vec<Vec<(usize, Rat)>>,
}

impl Generator {
    pub fn states(&self) -> usize {
        self.rows.len()
    }

    /// Dense form with `−Σ` on the diagonal, so each row sums to zero.
    pub fn to_matrix(&self) -> Matrix {
        let s = self.states();
        let mut m = Matrix::zeros(s, s);
        for (i, row) in self.rows.iter().enumerate() {
            let mut out = Rat::zero();
            for (j, r) in row {
                m[(i, *j)] += r;
                out += r;
            }
            m[(i, i)] = -out;
        }
        m
    }

    /// Every state reaches every other along positive rates.
    pub fn is_irreducible(&self) -> bool {
        let s = self.states();
        let reach = |adj: &Vec<Vec<usize>>| {
            let mut seen = vec![false; s];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.iter().all(|&x| x)
        };
        let mut fwd = vec![Vec::new(); s];
        let mut bwd = vec![Vec::new(); s];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, r) in row {
                if r.is_positive() {
                    fwd[i].push(*j);
                    bwd[*j].push(i);
                }
            }
        }
        reach(&fwd) && reach(&bwd)
    }
}

/// Transitions: a particle at `i` jumps to an empty `j` at rate `q_{ij}`,
/// an empty `i` fills at rate `b_i`, an occupied `i` empties at rate `d_i`.
/// States are bitmasks with bit `i` for site `i`.
pub fn sep_generator(m: &SEPModel) -> Result<Generator> {
    let n = m.n;
    if n > MAX_SEP_SITES {
        return Err(Error::Budget { needed: 1u128 << n, budget: 1 << MAX_SEP_SITES });
    }
    let mut rows = Vec::with_capacity(1 << n);
    for eta in 0usize..1 << n {
        let mut acc: Vec<(usize, Rat)> = Vec::new();
        let mut push = |to: usize, r: &Rat| {
            if r.is_zero() {
                return;
            }
            match acc.iter_mut().find(|(t, _)| *t == to) {
                Some((_, v)) => *v += r,
                None => acc.push((to, r.clone())),
            }
        };
        for i in 0..n {
            let occupied = eta >> i & 1 == 1;
            if occupied {
                for j in 0..n {
                    if eta >> j & 1 == 0 {
                        push(eta ^ (1 << i) ^ (1 << j), &m.q[(i, j)]);
                    }
                }
                push(eta ^ (1 << i), &m.d[i]);
            } else {
                push(eta | 1 << i, &m.b[i]);
            }
        }
        acc.sort_by_key(|(t, _)| *t);
        rows.push(acc);
    }
    Ok(Generator { n, rows })
}

/// Largest `n` for which the stationary distribution is solved densely.
pub const MAX_STATIONARY_SITES: usize = 8;

/// The unique stationary distribution `πQ = 0`, `Σ π = 1`.
pub fn sep_stationary(m: &SEPModel) -> Result<DiscreteMeasure> {
    if m.n > MAX_STATIONARY_SITES {
        return Err(Error::Budget { needed: 1u128 << m.n, budget: 1 << MAX_STATIONARY_SITES });
    }
    let g = sep_generator(m)?;
    if !g.is_irreducible() {
        return Err(Error::Reducible);
    }
    let q = g.to_matrix();
    let s = g.states();
    // Q^T π = 0 with one balance equation replaced by the normalisation.
    let mut a = q.transpose();
    for j in 0..s {
        a[(s - 1, j)] = Rat::one();
    }
    let mut rhs = vec![Rat::zero(); s];
    rhs[s - 1] = Rat::one();
    let pi = a.solve(&rhs)?;
    if q.vec_mul(&pi)?.iter().any(|v| !v.is_zero()) {
        return Err(Error::internal("stationary solve left a residual"));
    }
    DiscreteMeasure::from_weights(m.n, &pi)
}

/// A distribution at time `t` from the series `p_0 Σ_{k<terms} (tQ)^k / k!`.
/// Truncated, so never an exact verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximateDistribution {
    pub t: Rat,
    pub terms: usize,
    pub probs: Vec<Rat>,
}

pub fn sep_transient(m: &SEPModel, initial: &[Rat], t: &Rat, terms: usize) -> Result<ApproximateDistribution> {
    let g = sep_generator(m)?;
    if initial.len() != g.states() {
        return Err(Error::Shape("initial distribution has the wrong length".into()));
    }
    let q = g.to_matrix();
    let mut term = initial.to_vec();
    let mut acc = initial.to_vec();
    for k in 1..terms {
        term = q.vec_mul(&term)?.into_iter().map(|v| v * t / rat::rat(k as i64)).collect();
        for (a, v) in acc.iter_mut().zip(&term) {
            *a += v;
        }
    }
    Ok(ApproximateDistribution { t: t.clone(), terms, probs: acc })
}

/// `Σ_{σ ∈ B_n} (2/α)^{c₋(σ)} (2/β)^{c₊(σ)} Π_{i ∈ 𝒳(σ)} x_i`.
pub fn seb_formula(n: usize, alpha: &Rat, beta: &Rat) -> Result<MultiPoly> {
    let size = (rat::factorial(n as u64) << n) as BigInt;
    if size > BigInt::from(crate::DEFAULT_BUDGET) {
        return Err(Error::Budget { needed: u128::try_from(size).unwrap_or(u128::MAX), budget: crate::DEFAULT_BUDGET });
    }
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::invalid("alpha and beta must be positive"));
    }
    let two = rat::rat(2);
    let wa = &two / alpha;
    let wb = &two / beta;
    let pa: Vec<Rat> = (0..=n).map(|k| num_traits::pow(wa.clone(), k)).collect();
    let pb: Vec<Rat> = (0..=n).map(|k| num_traits::pow(wb.clone(), k)).collect();
    let mut p = MultiPoly::zero(n);
    for_each_signed(n, |s| {
        let mut e = vec![0u32; n];
        for i in s.excedance_set() {
            e[i - 1] = 1;
        }
        let (neg, pos) = s.signed_cycle_counts();
        p.add_term(e, &pa[neg] * &pb[pos]);
    });
    Ok(p)
}

/// `c` with `Z = c · seb_formula(n, β, α)`, where `Z` is the stationary
/// partition function of the line with births `α` on the left and deaths `β`
/// on the right. The exchange of `α` and `β` is forced by one site, where the
/// chain gives `μ(1)/μ(0) = α/β`; it is checked here for every `n`.
pub fn seb_stationary_constant(n: usize, alpha: &Rat, beta: &Rat) -> Result<Option<Rat>> {
    let m = SEPModel::corteel_williams(n, alpha.clone(), beta.clone(), Rat::zero(), Rat::zero())?;
    let pi = sep_stationary(&m)?;
    Ok(proportionality_constant(pi.partition(), &seb_formula(n, beta, alpha)?))
}

/// `c` with `P = c Q`, if one exists.
pub fn proportionality_constant(p: &MultiPoly, q: &MultiPoly) -> Option<Rat> {
    if p.arity() != q.arity() || q.is_zero() {
        return None;
    }
    let (e, c) = q.terms().next()?;
    let k = p.coeff(e) / c;
    (q.scale(&k) == *p).then_some(k)
}

/// Descent bottoms and ascent bottoms with `σ(0) = σ(n+1) = ∞`:
/// `DB` holds `σ(i)` with `σ(i−1) > σ(i)`, `AB` holds `σ(i)` with `σ(i) < σ(i+1)`.
pub fn descent_ascent_bottoms(word: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let n = word.len();
    let at = |i: usize| if i == 0 || i == n + 1 { u32::MAX } else { word[i - 1] };
    let db = (1..=n).filter(|&i| at(i - 1) > at(i)).map(at).collect();
    let ab = (1..=n).filter(|&i| at(i) < at(i + 1)).map(at).collect();
    (db, ab)
}

/// `w(σ)` in `2n` variables: `x_k` is variable `k − 1`, `y_k` is `n + k − 1`.
pub fn mv_weight(word: &[u32]) -> Vec<u32> {
    let n = word.len();
    let (db, ab) = descent_ascent_bottoms(word);
    let mut e = vec![0u32; 2 * n];
    for v in db {
        e[v as usize - 1] = 1;
    }
    for v in ab {
        e[n + v as usize - 1] = 1;
    }
    e
}

/// `A_n(x, y) = Σ_{σ ∈ 𝔖_n} w(σ)`.
pub fn multivariate_eulerian(n: usize) -> Result<MultiPoly> {
    if n > 9 {
        return Err(Error::Budget { needed: u128::try_from(rat::factorial(n as u64)).unwrap_or(u128::MAX), budget: 362_880 });
    }
    let mut p = MultiPoly::zero(2 * n);
    for_each_permutation(n, |pi| p.add_term(mv_weight(pi.word()), Rat::one()));
    Ok(p)
}

/// `A_n = x_1 y_1 (Σ_{j≥2} ∂/∂x_j + ∂/∂y_j) A_{n−1}(x*, y*)`, where `A_{n−1}`
/// is written in the letters `2, …, n`.
pub fn mv_eulerian_recursion_check(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::invalid("the recursion starts at n = 2"));
    }
    let prev = multivariate_eulerian(n - 1)?;
    let m = n - 1;
    let map: Vec<usize> = (0..m).map(|k| k + 1).chain((0..m).map(|k| n + k + 1)).collect();
    let shifted = prev.remap(&map, 2 * n)?;
    let mut acc = MultiPoly::zero(2 * n);
    for j in 1..n {
        acc = &acc + &shifted.partial(j);
        acc = &acc + &shifted.partial(n + j);
    }
    let x1y1 = &MultiPoly::var(2 * n, 0) * &MultiPoly::var(2 * n, n);
    Ok(&x1y1 * &acc == multivariate_eulerian(n)?)
}

/// `μ_n(S) = |{σ : DB(σ) ∪ (n + AB(σ)) = S}| / n!` on `2n` coordinates.
pub fn mu_n(n: usize) -> Result<DiscreteMeasure> {
    let a = multivariate_eulerian(n)?;
    DiscreteMeasure::new(a.scale(&rat::from_big(rat::factorial(n as u64)).recip()))
}

/// `G_T(x, y) = Σ_k C(n, k) T(x^k) y^{n−k}` from the images `T(x^k)`,
/// `k = 0..=n`. Variable 0 is `x`, variable 1 is `y`.
pub fn operator_symbol(images: &[ExactPoly], n: usize) -> Result<MultiPoly> {
    if images.len() < n + 1 {
        return Err(Error::invalid("the action must be given on x^0, …, x^n"));
    }
    let mut g = MultiPoly::zero(2);
    for (k, img) in images.iter().take(n + 1).enumerate() {
        let b = rat::from_big(rat::binomial(n as u64, k as u64));
        for (i, c) in img.coeffs().iter().enumerate() {
            if !c.is_zero() {
                g.add_term(vec![i as u32, (n - k) as u32], &b * c);
            }
        }
    }
    Ok(g)
}

/// `x (x + y)^{n−1} (x + (n+1) y + n)`.
pub fn t_operator_symbol_closed_form(n: usize) -> MultiPoly {
    let x = MultiPoly::var(2, 0);
    let y = MultiPoly::var(2, 1);
    let xy = &x + &y;
    let mut out = x.clone();
    for _ in 1..n {
        out = &out * &xy;
    }
    let last = &(&x + &y.scale(&rat::rat(n as i64 + 1))) + &MultiPoly::constant(2, rat::rat(n as i64));
    &out * &last
}

/// `G_{T_n}` computed from the images `T_n(x^k)`.
pub fn t_operator_symbol(n: usize) -> MultiPoly {
    let images: Vec<ExactPoly> = (0..=n).map(|k| crate::families::t_operator(&ExactPoly::monomial(k, Rat::one()), n)).collect();
    operator_symbol(&images, n).expect("complete action")
}

/// Elementary symmetric polynomials `e_0, …, e_n` in `n` variables.
pub fn elementary_symmetric(n: usize) -> Vec<MultiPoly> {
    let mut e = vec![MultiPoly::one(n)];
    e.extend((1..=n).map(|_| MultiPoly::zero(n)));
    for i in 0..n {
        let xi = MultiPoly::var(n, i);
        for k in (1..=i + 1).rev() {
            e[k] = &e[k] + &(&e[k - 1] * &xi);
        }
    }
    e
}

/// `Σ_{k=0}^n (e_k² − e_{k−1} e_{k+1})`.
fn ek_lhs(n: usize) -> MultiPoly {
    let e = elementary_symmetric(n);
    let get = |k: isize| if k < 0 || k as usize > n { MultiPoly::zero(n) } else { e[k as usize].clone() };
    (0..=n as isize).fold(MultiPoly::zero(n), |acc, k| &acc + &(&(&get(k) * &get(k)) - &(&get(k - 1) * &get(k + 1))))
}

/// `Σ_k C_k Σ_{|S|=2k} Π_{i∈S} x_i Π_{j∉S} (1 + x_j²)`, which is
/// `e_n(x) Σ_k C_k e_{n−2k}(x + 1/x)` with the denominators cleared.
fn ek_rhs(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(n);
    for s in 0usize..1 << n {
        let size = s.count_ones() as usize;
        if size % 2 == 1 {
            continue;
        }
        let mut t = MultiPoly::constant(n, rat::from_big(rat::catalan(size as u64 / 2)));
        for i in 0..n {
            let f = if s >> i & 1 == 1 {
                MultiPoly::var(n, i)
            } else {
                let mut e = vec![0u32; n];
                e[i] = 2;
                &MultiPoly::one(n) + &MultiPoly::monomial(e, Rat::one())
            };
            t = &t * &f;
        }
        acc = &acc + &t;
    }
    acc
}

/// The Catalan identity for elementary symmetric functions, as an exact
/// polynomial identity in `n` variables.
pub fn ek_identity_check(n: usize) -> bool {
    ek_lhs(n) == ek_rhs(n)
}

/// Both sides of the identity at a point with nonzero coordinates, the right
/// side taken in its original form `e_n(x) Σ_k C_k e_{n−2k}(x + 1/x)`.
pub fn ek_identity_at(point: &[Rat]) -> Result<bool> {
    let n = point.len();
    if point.iter().any(Zero::is_zero) {
        return Err(Error::invalid("coordinates must be nonzero"));
    }
    let e_at = |v: &[Rat]| -> Vec<Rat> {
        let mut e = vec![Rat::zero(); n + 1];
        e[0] = Rat::one();
        for (i, x) in v.iter().enumerate() {
            for k in (1..=i + 1).rev() {
                let t = &e[k - 1] * x;
                e[k] += t;
            }
        }
        e
    };
    let e = e_at(point);
    let get = |k: isize| if k < 0 || k as usize > n { Rat::zero() } else { e[k as usize].clone() };
    let lhs: Rat = (0..=n as isize).map(|k| get(k) * get(k) - get(k - 1) * get(k + 1)).sum();
    let shifted: Vec<Rat> = point.iter().map(|x| x + x.recip()).collect();
    let f = e_at(&shifted);
    let rhs: Rat = (0..=n / 2).map(|k| rat::from_big(rat::catalan(k as u64)) * &f[n - 2 * k]).sum::<Rat>() * &e[n];
    Ok(lhs == rhs)
}
