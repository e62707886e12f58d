use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::interlace::interleaves;
use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::rat::{self, Rat};

/// Row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactPoly>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<ExactPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged polynomial matrix".into()));
        }
        Ok(PolyMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn constant(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| ExactPoly::constant(rat::rat(v))).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = alloc::vec![ExactPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = ExactPoly::one();
        }
        PolyMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<ExactPoly>> {
        self.entries.chunks(self.cols.max(1)).map(<[ExactPoly]>::to_vec).take(self.rows).collect()
    }
}

/// `g_k = Σ_i G_{ki} f_i`.
pub fn apply_poly_matrix(g: &PolyMatrix, seq: &[ExactPoly]) -> Result<Vec<ExactPoly>> {
    if seq.len() != g.cols {
        return Err(Error::Shape("matrix columns do not match sequence length".into()));
    }
    Ok((0..g.rows)
        .map(|k| (0..g.cols).map(|i| g.get(k, i) * &seq[i]).sum())
        .collect())
}

/// The `m × n` matrix with entry `x` when `j ≤ λ_i` (1-based) and `1` otherwise.
pub fn build_g_lambda(lambda: &[usize], n: usize) -> Result<PolyMatrix> {
    if lambda.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::invalid("lambda must be weakly increasing"));
    }
    if lambda.last().is_some_and(|&l| l > n) {
        return Err(Error::invalid("lambda entries must not exceed n"));
    }
    let rows = lambda
        .iter()
        .map(|&l| (1..=n).map(|j| if j <= l { ExactPoly::x() } else { ExactPoly::one() }).collect())
        .collect();
    PolyMatrix::new(rows)
}

/// Sampled test of the two conditions characterising matrices that send
/// nonnegative interlacing sequences to nonnegative interlacing sequences:
/// nonnegative entries (an error otherwise) and, for sampled `λ, μ > 0`,
/// `(λx+μ)G_{kj} + G_{ℓj} ≪ (λx+μ)G_{ki} + G_{ℓi}` for all `i < j`, `k < ℓ`.
pub fn check_pbxvw_condition(g: &PolyMatrix, trials: usize, seed: u64) -> Result<bool> {
    if g.entries.iter().any(|p| !p.has_nonnegative_coeffs()) {
        return Err(Error::Negative);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples: Vec<(Rat, Rat)> = alloc::vec![(rat::rat(1), rat::rat(1))];
    for _ in 0..trials {
        samples.push((
            rat::ratio(rng.gen_range(1..=40), rng.gen_range(1..=8)),
            rat::ratio(rng.gen_range(1..=40), rng.gen_range(1..=8)),
        ));
    }
    for (lam, mu) in samples {
        let lin = ExactPoly::new(alloc::vec![mu.clone(), lam.clone()]);
        for k in 0..g.rows {
            for l in k + 1..g.rows {
                for i in 0..g.cols {
                    for j in i + 1..g.cols {
                        let lhs = &(&lin * g.get(k, j)) + g.get(l, j);
                        let rhs = &(&lin * g.get(k, i)) + g.get(l, i);
                        match interleaves(&lhs, &rhs) {
                            Ok(true) => {}
                            Ok(false) | Err(Error::NotRealRooted) => return Ok(false),
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realroot::is_interlacing_seq;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn g_lambda_shape() {
        let g = build_g_lambda(&[0, 1, 2], 2).unwrap();
        let x = ExactPoly::x();
        let one = ExactPoly::one();
        assert_eq!(
            g.to_rows(),
            alloc::vec![
                alloc::vec![one.clone(), one.clone()],
                alloc::vec![x.clone(), one.clone()],
                alloc::vec![x.clone(), x.clone()],
            ]
        );
        assert!(build_g_lambda(&[2, 1], 3).is_err());
        assert!(build_g_lambda(&[1, 4], 3).is_err());
        let ones = build_g_lambda(&[0, 0], 3).unwrap();
        assert!(ones.entries.iter().all(|e| *e == one));
        let xs = build_g_lambda(&[3, 3], 3).unwrap();
        assert!(xs.entries.iter().all(|e| *e == x));
    }

    #[test]
    fn apply_examples() {
        let g = build_g_lambda(&[0, 1, 2], 2).unwrap();
        let out = apply_poly_matrix(&g, &[p(&[1]), p(&[0, 1])]).unwrap();
        assert_eq!(out, alloc::vec![p(&[1, 1]), p(&[0, 2]), p(&[0, 1, 1])]);
        assert!(is_interlacing_seq(&out).unwrap());
        let seq = alloc::vec![p(&[1, 2]), p(&[0, 3])];
        assert_eq!(apply_poly_matrix(&PolyMatrix::identity(2), &seq).unwrap(), seq);
        let zero = PolyMatrix::constant(&[&[0, 0], &[0, 0]]).unwrap();
        assert!(apply_poly_matrix(&zero, &seq).unwrap().iter().all(ExactPoly::is_zero));
        assert!(apply_poly_matrix(&zero, &seq[..1]).is_err());
    }

    #[test]
    fn pbxvw_examples() {
        for lam in [&[0usize, 1, 2][..], &[0, 0, 1], &[1, 2, 2, 3]] {
            let g = build_g_lambda(lam, 3).unwrap();
            assert!(check_pbxvw_condition(&g, 16, 7).unwrap());
        }
        let bad = PolyMatrix::constant(&[&[1, 1], &[2, 1]]).unwrap();
        assert!(!check_pbxvw_condition(&bad, 16, 7).unwrap());
        let good = PolyMatrix::constant(&[&[1, 1], &[1, 2]]).unwrap();
        assert!(check_pbxvw_condition(&good, 16, 7).unwrap());
        let neg = PolyMatrix::constant(&[&[1, -1], &[1, 2]]).unwrap();
        assert_eq!(check_pbxvw_condition(&neg, 4, 0), Err(Error::Negative));
    }
}
