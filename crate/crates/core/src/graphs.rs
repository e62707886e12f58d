//! Chromatic, independence and spanning-tree polynomials of simple graphs.
//!
//! Vertices are `0..n`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::multipoly::MultiPoly;
use crate::poly::{from_counts, ExactPoly};
use crate::positivity::is_log_concave;
use crate::rat::Rat;

/// Largest vertex count handled by the bitmask routines.
pub const MAX_VERTICES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid("loops are not allowed"));
            }
            if u >= n || v >= n {
                return Err(Error::invalid("edge endpoint out of range"));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::invalid("repeated edge"));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        Graph { n, edges: (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect() }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|v| (v - 1, v)).collect() }
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.edges.insert((0, n - 1));
        }
        g
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Graph { n: k + 1, edges: (1..=k).map(|v| (0, v)).collect() }
    }

    /// The graph whose edge set is read off the bits of `mask`, in the order
    /// `(0,1), (0,2), …, (1,2), …`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn adjacency(&self) -> Result<Vec<u32>> {
        if self.n > MAX_VERTICES {
            return Err(Error::Budget { needed: self.n as u128, budget: MAX_VERTICES as u64 });
        }
        let mut adj = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(adj)
    }

    pub fn num_components(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        (0..self.n).filter(|&v| uf.find(v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }
}

#[derive(Clone)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

// Deletion–contraction on adjacency bitmasks. The memo key is the adjacency
// list after dropping isolated vertices, which contribute a factor x each.
struct Chromatic {
    memo: BTreeMap<Vec<u32>, Vec<i128>>,
    calls: u64,
    budget: u64,
}

fn compact(adj: &[u32]) -> (Vec<u32>, usize) {
    let keep: Vec<usize> = (0..adj.len()).filter(|&v| adj[v] != 0).collect();
    let isolated = adj.len() - keep.len();
    let mut index = vec![usize::MAX; adj.len()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let out = keep
        .iter()
        .map(|&v| {
            let mut m = 0u32;
            let mut bits = adj[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                m |= 1 << index[w];
            }
            m
        })
        .collect();
    (out, isolated)
}

/// Drops vertex `v` and closes the gap in the labels.
fn remove_vertex(adj: &[u32], v: usize) -> Vec<u32> {
    adj.iter()
        .enumerate()
        .filter(|&(w, _)| w != v)
        .map(|(_, &m)| {
            let low = m & ((1u32 << v) - 1);
            let high = m.checked_shr(v as u32 + 1).unwrap_or(0) << v;
            low | high
        })
        .collect()
}

fn poly_sub(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] -= v;
    }
    out
}

fn poly_shift(a: &[i128], k: usize) -> Vec<i128> {
    let mut out = vec![0; k];
    out.extend_from_slice(a);
    out
}

impl Chromatic {
    fn run(&mut self, adj: &[u32]) -> Result<Vec<i128>> {
        let (g, isolated) = compact(adj);
        let core = self.core(g)?;
        Ok(poly_shift(&core, isolated))
    }

    // χ of a graph without isolated vertices.
    fn core(&mut self, g: Vec<u32>) -> Result<Vec<i128>> {
        if g.is_empty() {
            return Ok(vec![1]);
        }
        if let Some(c) = self.memo.get(&g) {
            return Ok(c.clone());
        }
        self.calls += 1;
        if self.calls > self.budget {
            return Err(Error::Budget { needed: self.calls as u128, budget: self.budget });
        }
        let n = g.len();
        let result = if let Some(leaf) = (0..n).find(|&v| g[v].count_ones() == 1) {
            // A pendant vertex contributes a factor (x − 1).
            let rest = self.run(&remove_vertex(&g, leaf))?;
            poly_sub(&poly_shift(&rest, 1), &rest)
        } else {
            let u = 0;
            let v = g[u].trailing_zeros() as usize;
            let mut del = g.clone();
            del[u] &= !(1 << v);
            del[v] &= !(1 << u);
            // Contract v into u.
            let mut con = del.clone();
            let mut bits = del[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                con[w] |= 1 << u;
                con[u] |= 1 << w;
            }
            let con = remove_vertex(&con, v);
            let a = self.run(&del)?;
            let b = self.run(&con)?;
            poly_sub(&a, &b)
        };
        self.memo.insert(g, result.clone());
        Ok(result)
    }
}

fn int_poly(c: &[i128]) -> ExactPoly {
    ExactPoly::new(c.iter().map(|&v| Rat::from_integer(v.into())).collect())
}

/// `χ_G(x)` by memoised deletion–contraction. `budget` caps the number of
/// distinct subproblems.
pub fn chromatic_poly_with_budget(g: &Graph, budget: u64) -> Result<ExactPoly> {
    let adj = g.adjacency()?;
    let mut c = Chromatic { memo: BTreeMap::new(), calls: 0, budget };
    Ok(int_poly(&c.run(&adj)?))
}

pub fn chromatic_poly(g: &Graph) -> Result<ExactPoly> {
    chromatic_poly_with_budget(g, crate::DEFAULT_BUDGET)
}

/// `|χ_G|` coefficients `|c_n|, |c_{n−1}|, …` as a list in increasing degree.
pub fn signless_chromatic_coeffs(g: &Graph) -> Result<Vec<Rat>> {
    Ok(chromatic_poly(g)?.coeffs().iter().map(crate::rat::abs).collect())
}

/// Characteristic polynomial of the graphic matroid: `χ_G(x) / x^c`.
pub fn characteristic_poly(g: &Graph) -> Result<ExactPoly> {
    chromatic_poly(g)?.unshift(g.num_components())
}

/// `χ_M(x) / (x − 1)` for a graph with at least one edge.
pub fn reduced_characteristic_poly(g: &Graph) -> Result<ExactPoly> {
    if g.num_edges() == 0 {
        return Err(Error::invalid("the reduced polynomial needs an edge"));
    }
    characteristic_poly(g)?.div_exact(&ExactPoly::from_ints(&[-1, 1]))
}

/// Log-concavity of the signless chromatic coefficients.
pub fn chromatic_is_log_concave(g: &Graph) -> Result<bool> {
    Ok(is_log_concave(&signless_chromatic_coeffs(g)?, false))
}

/// Counts of independent sets by size, by branching on a vertex:
/// `I(G) = I(G − v) + x I(G − N[v])`.
fn independence_counts(adj: &[u32], alive: u32, memo: &mut BTreeMap<u32, Vec<u64>>) -> Vec<u64> {
    if alive == 0 {
        return vec![1];
    }
    if let Some(c) = memo.get(&alive) {
        return c.clone();
    }
    let v = alive.trailing_zeros() as usize;
    let without = independence_counts(adj, alive & !(1 << v), memo);
    let with = independence_counts(adj, alive & !(1 << v) & !adj[v], memo);
    let mut out = vec![0u64; without.len().max(with.len() + 1)];
    for (i, c) in without.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in with.iter().enumerate() {
        out[i + 1] += c;
    }
    memo.insert(alive, out.clone());
    out
}

/// `I(G, x) = Σ_S x^{|S|}` over independent sets.
pub fn independence_poly(g: &Graph) -> Result<ExactPoly> {
    let adj = g.adjacency()?;
    let alive = if g.n == 32 { u32::MAX } else { (1u32 << g.n) - 1 };
    Ok(from_counts(&independence_counts(&adj, alive, &mut BTreeMap::new())))
}

/// No induced `K_{1,3}`.
pub fn is_clawfree(g: &Graph) -> bool {
    let n = g.n;
    for c in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&v| g.has_edge(c, v)).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All spanning trees as sorted lists of edge indices.
pub fn spanning_trees(g: &Graph, budget: u64) -> Result<Vec<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = g.edges();
    let need = g.n.saturating_sub(1);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        edges: &[(usize, usize)],
        i: usize,
        need: usize,
        uf: &UnionFind,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: u64,
    ) -> Result<()> {
        if chosen.len() == need {
            if out.len() as u64 >= budget {
                return Err(Error::Budget { needed: out.len() as u128 + 1, budget });
            }
            out.push(chosen.clone());
            return Ok(());
        }
        if edges.len() - i < need - chosen.len() {
            return Ok(());
        }
        let (u, v) = edges[i];
        let mut with = uf.clone();
        if with.union(u, v) {
            chosen.push(i);
            go(edges, i + 1, need, &with, chosen, out, budget)?;
            chosen.pop();
        }
        go(edges, i + 1, need, uf, chosen, out, budget)
    }
    go(&edges, 0, need, &UnionFind::new(g.n), &mut chosen, &mut out, budget)?;
    Ok(out)
}

/// `T_G(x) = Σ_T Π_{e ∈ T} x_e`, one variable per edge in the order of [`Graph::edges`].
pub fn spanning_tree_poly(g: &Graph) -> Result<MultiPoly> {
    let m = g.num_edges();
    let mut p = MultiPoly::zero(m);
    for t in spanning_trees(g, crate::DEFAULT_BUDGET)? {
        let mut e = vec![0u32; m];
        for i in t {
            e[i] = 1;
        }
        p.add_term(e, Rat::one());
    }
    Ok(p)
}

/// Weighted Laplacian `Σ_e x_e (δ_u − δ_v)(δ_u − δ_v)^T`.
pub fn laplacian(g: &Graph, weights: &[Rat]) -> Result<Matrix> {
    if weights.len() != g.num_edges() {
        return Err(Error::Arity { expected: g.num_edges(), got: weights.len() });
    }
    let mut l = Matrix::zeros(g.n, g.n);
    for (&(u, v), w) in g.edges.iter().zip(weights) {
        l[(u, u)] += w;
        l[(v, v)] += w;
        l[(u, v)] -= w;
        l[(v, u)] -= w;
    }
    Ok(l)
}

/// `T_G(point) = det L_G(point)` with row and column `i` removed, for every `i`.
pub fn matrix_tree_check(g: &Graph, point: &[Rat]) -> Result<bool> {
    matrix_tree_check_points(g, core::slice::from_ref(&point.to_vec()))
}

/// [`matrix_tree_check`] at several points, enumerating the trees once.
pub fn matrix_tree_check_points(g: &Graph, points: &[Vec<Rat>]) -> Result<bool> {
    let tree_poly = spanning_tree_poly(g)?;
    for point in points {
        let t = tree_poly.eval(point)?;
        let l = laplacian(g, point)?;
        for i in 0..g.n {
            let minor = if g.n == 1 { Rat::one() } else { l.delete_index(i).det()? };
            if minor != t {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of proper colourings with `q` colours, by brute force. A test oracle.
pub fn count_colourings(g: &Graph, q: usize) -> u64 {
    let n = g.n;
    if n == 0 {
        return 1;
    }
    if q == 0 {
        return 0;
    }
    let mut c = vec![0usize; n];
    let mut count = 0;
    loop {
        if g.edges.iter().all(|&(u, v)| c[u] != c[v]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            c[i] += 1;
            if c[i] < q {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// `χ_G` from partitions of the vertex set into independent blocks:
/// `Σ_j a_j x(x−1)⋯(x−j+1)`. A second route used to cross-check.
pub fn chromatic_by_partitions(g: &Graph) -> Result<ExactPoly> {
    let adj = g.adjacency()?;
    let n = g.n;
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let independent = |s: u32| {
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if adj[v] & s != 0 {
                return false;
            }
        }
        true
    };
    // p[mask][j]: partitions of mask into j independent blocks.
    let mut p: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    p.insert(0, vec![1]);
    let mut masks: Vec<u32> = (1..=full).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let low = mask & mask.wrapping_neg();
        let rest = mask & !low;
        let mut acc = vec![0u64; n + 1];
        let mut sub = rest;
        loop {
            let block = sub | low;
            if independent(block) {
                for (j, c) in p[&(mask & !block)].iter().enumerate().filter(|(_, c)| **c != 0) {
                    acc[j + 1] += c;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        p.insert(mask, acc);
    }
    let a = &p[&full];
    let mut chi = ExactPoly::zero();
    for (j, c) in a.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let falling: ExactPoly = (0..j as i64).map(|i| ExactPoly::from_ints(&[-i, 1])).product();
        chi = &chi + &falling.scale(&Rat::from_integer((*c).into()));
    }
    Ok(chi)
}

/// `Σ_S x^{|S|}` by scanning every vertex subset. A test oracle.
pub fn independence_by_subsets(g: &Graph) -> ExactPoly {
    let mut counts = vec![0u64; g.n + 1];
    for s in 0u64..1 << g.n {
        let ok = g.edges.iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0);
        if ok {
            counts[s.count_ones() as usize] += 1;
        }
    }
    from_counts(&counts)
}

impl Graph {
    /// Induced subgraph on `keep`, relabelled in order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        Graph { n: keep.len(), edges }
    }
}

/// `T_G(x, …, x)`, which is `t x^{n−1}` with `t` the number of spanning trees.
pub fn tree_diagonal(g: &Graph) -> Result<ExactPoly> {
    Ok(spanning_tree_poly(g)?.diagonal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use crate::realroot::is_real_rooted;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_poly(&Graph::complete(3)).unwrap(), p(&[0, 2, -3, 1]));
        assert_eq!(chromatic_poly(&Graph::empty(4)).unwrap(), p(&[0, 0, 0, 0, 1]));
        assert_eq!(chromatic_poly(&Graph::path(2)).unwrap(), p(&[0, -1, 1]));
        // C_4: (x-1)^4 + (x-1)
        assert_eq!(chromatic_poly(&Graph::cycle(4)).unwrap(), p(&[0, -3, 6, -4, 1]));
        assert_eq!(reduced_characteristic_poly(&Graph::complete(3)).unwrap(), p(&[2, -1]).scale(&crate::rat::rat(-1)));
    }

    #[test]
    fn chromatic_routes_agree_on_five_vertices() {
        for mask in 0..1u64 << 10 {
            let g = Graph::from_edge_mask(5, mask);
            let chi = chromatic_poly(&g).unwrap();
            assert_eq!(chi, chromatic_by_partitions(&g).unwrap());
            for q in 0..4 {
                assert_eq!(chi.eval(&crate::rat::rat(q as i64)), Rat::from_integer(count_colourings(&g, q).into()));
            }
        }
    }

    #[test]
    fn independence_examples() {
        let claw = Graph::star(3);
        let i = independence_poly(&claw).unwrap();
        assert_eq!(i, p(&[1, 4, 3, 1]));
        assert!(!is_clawfree(&claw));
        assert!(!is_real_rooted(&i));
        let p3 = Graph::path(3);
        assert_eq!(independence_poly(&p3).unwrap(), p(&[1, 3, 1]));
        assert!(is_clawfree(&p3));
        assert_eq!(independence_poly(&Graph::empty(1)).unwrap(), p(&[1, 1]));
        for mask in 0..1u64 << 10 {
            let g = Graph::from_edge_mask(5, mask);
            assert_eq!(independence_poly(&g).unwrap(), independence_by_subsets(&g));
        }
    }

    #[test]
    fn spanning_trees_examples() {
        let k3 = Graph::complete(3);
        let t = spanning_tree_poly(&k3).unwrap();
        assert_eq!(t.num_terms(), 3);
        assert_eq!(t.eval(&[Rat::one(), Rat::one(), Rat::one()]).unwrap(), crate::rat::rat(3));
        assert!(matrix_tree_check(&k3, &[Rat::one(), Rat::one(), Rat::one()]).unwrap());
        let tree = Graph::path(5);
        assert_eq!(spanning_tree_poly(&tree).unwrap().num_terms(), 1);
        assert!(matrix_tree_check(&tree, &[ratio(1, 2), ratio(3, 7), ratio(5, 1), ratio(2, 9)]).unwrap());
        let c4 = Graph::cycle(4);
        assert_eq!(spanning_tree_poly(&c4).unwrap().num_terms(), 4);
        assert!(matrix_tree_check(&c4, &[ratio(1, 3), ratio(2, 5), ratio(7, 2), ratio(1, 1)]).unwrap());
        assert_eq!(spanning_tree_poly(&Graph::empty(2)), Err(Error::Disconnected));
        // Cayley: n^{n-2}
        assert_eq!(spanning_trees(&Graph::complete(6), 10_000).unwrap().len(), 1296);
    }
}
