//! Fixed inputs shared by tests, suites and the command line.

use alloc::vec;
use alloc::vec::Vec;

use crate::graphs::Graph;
use crate::poly::ExactPoly;
use crate::random;
use crate::subdivision::SimplicialComplex;

/// One cell of the refined type D table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub n: usize,
    pub k: i64,
    pub poly: ExactPoly,
}

fn product(factors: &[&[i64]]) -> ExactPoly {
    factors.iter().fold(ExactPoly::one(), |acc, f| &acc * &ExactPoly::from_ints(f))
}

/// `D_{n,k}` for `n = 2, 3, 4` and `k = ±1, …, ±4`, entered in factored form.
pub fn type_d_table() -> Vec<TableEntry> {
    const X: &[i64] = &[0, 1];
    const XP1: &[i64] = &[1, 1];
    let rows: Vec<(i64, [ExactPoly; 3])> = vec![
        (-4, [ExactPoly::zero(), ExactPoly::zero(), product(&[XP1, &[1, 10, 1]])]),
        (-3, [ExactPoly::zero(), product(&[XP1, XP1]), product(&[&[2], X, XP1, &[5, 1]])]),
        (-2, [ExactPoly::one(), product(&[X, &[3, 1]]), product(&[X, &[7, 14, 3]])]),
        (-1, [product(&[X]), product(&[&[2], X, XP1]), product(&[X, &[5, 14, 5]])]),
        (1, [product(&[X]), product(&[&[2], X, XP1]), product(&[X, &[5, 14, 5]])]),
        (2, [product(&[X, X]), product(&[X, &[1, 3]]), product(&[X, &[3, 14, 7]])]),
        (3, [ExactPoly::zero(), product(&[X, XP1, XP1]), product(&[&[2], X, XP1, &[1, 5]])]),
        (4, [ExactPoly::zero(), ExactPoly::zero(), product(&[X, XP1, &[1, 10, 1]])]),
    ];
    let mut out = Vec::with_capacity(24);
    for (k, polys) in rows {
        for (i, poly) in polys.into_iter().enumerate() {
            out.push(TableEntry { n: i + 2, k, poly });
        }
    }
    out
}

/// Full simplices with 1 to 5 vertices, boundaries of simplices with 2 to 6
/// vertices, and `random` seeded complexes with at most 12 faces.
pub fn complex_fixtures(seed: u64, random: usize) -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = (1..=5).map(SimplicialComplex::simplex).collect();
    out.extend((2..=6).map(SimplicialComplex::simplex_boundary));
    let mut rng = random::rng(seed);
    out.extend((0..random).map(|_| random::complex(&mut rng, 12)));
    out
}

/// Small named graphs.
pub fn graph_fixtures() -> Vec<(&'static str, Graph)> {
    let petersen = {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        e.extend((0..5).map(|i| (i, 5 + i)));
        Graph::new(10, e.into_iter().map(|(u, v)| (u.min(v), u.max(v)))).expect("valid")
    };
    vec![
        ("claw", Graph::star(3)),
        ("path5", Graph::path(5)),
        ("cycle4", Graph::cycle(4)),
        ("cycle6", Graph::cycle(6)),
        ("k4", Graph::complete(4)),
        ("k5", Graph::complete(5)),
        ("star5", Graph::star(5)),
        ("petersen", petersen),
        ("bowtie", Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).expect("valid")),
    ]
}
