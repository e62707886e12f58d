use alloc::vec;
use alloc::vec::Vec;


use super::RefinedFamily;
use crate::error::{Error, Result};
use crate::perm::for_each_permutation;
use crate::poly::{from_counts, ExactPoly};
use crate::signed::for_each_signed;

fn need(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::invalid(alloc::format!("n must be at least {min}")))
    } else {
        Ok(())
    }
}

fn bump(counts: &mut Vec<u64>, k: usize) {
    if counts.len() <= k {
        counts.resize(k + 1, 0);
    }
    counts[k] += 1;
}

/// `T_n(x^k) = k x^k + (n+1−k) x^{k+1}`, i.e. `x(1−x) d/dx + (n+1) x`.
pub fn t_operator(p: &ExactPoly, n: usize) -> ExactPoly {
    let x = ExactPoly::x();
    let one_minus_x = ExactPoly::from_ints(&[1, -1]);
    let c = ExactPoly::monomial(1, crate::rat::rat(n as i64 + 1));
    &(&(&x * &one_minus_x) * &p.derivative()) + &(&c * p)
}

/// `A_n(x) = Σ_π x^{des π + 1}` by the recursion `A_{n+1} = T_n(A_n)`.
pub fn eulerian_a(n: usize) -> Result<ExactPoly> {
    need(n, 1)?;
    let mut a = ExactPoly::x();
    for k in 1..n {
        a = t_operator(&a, k);
    }
    Ok(a)
}

pub fn eulerian_a_enumerated(n: usize) -> Result<ExactPoly> {
    need(n, 1)?;
    let mut counts = Vec::new();
    for_each_permutation(n, |p| bump(&mut counts, p.des() + 1));
    Ok(from_counts(&counts))
}

fn labels_pos(n: usize) -> Vec<i64> {
    (1..=n as i64).collect()
}

/// `A_{n,i} = Σ_{σ(1)=i} x^{des σ}` by conditioning on `σ(2)`.
pub fn eulerian_a_refined(n: usize) -> Result<RefinedFamily> {
    need(n, 1)?;
    let mut cur = vec![ExactPoly::one()];
    let x = ExactPoly::x();
    for m in 1..n {
        cur = (1..=m + 1)
            .map(|i| {
                cur.iter()
                    .enumerate()
                    .map(|(k0, p)| if k0 + 1 < i { &x * p } else { p.clone() })
                    .sum()
            })
            .collect();
    }
    RefinedFamily::new(labels_pos(n), cur)
}

pub fn eulerian_a_refined_enumerated(n: usize) -> Result<RefinedFamily> {
    need(n, 1)?;
    let mut counts = vec![Vec::new(); n];
    for_each_permutation(n, |p| bump(&mut counts[p.at(1) as usize - 1], p.des()));
    RefinedFamily::new(labels_pos(n), counts.iter().map(|c| from_counts(c)).collect())
}

/// Labels `−n, …, −1, 1, …, n`.
fn labels_pm(n: usize) -> Vec<i64> {
    let n = n as i64;
    (-n..=-1).chain(1..=n).collect()
}

fn pm_index(n: usize, k: i64) -> usize {
    if k < 0 {
        (k + n as i64) as usize
    } else {
        n + k as usize - 1
    }
}

/// One step of the shared type B / type D recursion on labels `[±n]`.
fn signed_step(prev: &[ExactPoly], n: usize) -> Vec<ExactPoly> {
    let x = ExactPoly::x();
    let old = labels_pm(n);
    labels_pm(n + 1)
        .into_iter()
        .map(|i| {
            old.iter()
                .zip(prev)
                .map(|(&k, p)| {
                    let shifted = if i < 0 { k <= i } else { k < i };
                    if shifted {
                        &x * p
                    } else {
                        p.clone()
                    }
                })
                .sum()
        })
        .collect()
}

/// `B_{n,i} = Σ_{σ_n = −i} x^{des_B σ}` by recursion from `(1, x)`.
pub fn eulerian_b_refined(n: usize) -> Result<RefinedFamily> {
    need(n, 1)?;
    let mut cur = vec![ExactPoly::one(), ExactPoly::x()];
    for m in 1..n {
        cur = signed_step(&cur, m);
    }
    RefinedFamily::new(labels_pm(n), cur)
}

pub fn eulerian_b(n: usize) -> Result<ExactPoly> {
    Ok(eulerian_b_refined(n)?.total())
}

pub fn eulerian_b_refined_enumerated(n: usize) -> Result<RefinedFamily> {
    need(n, 1)?;
    let mut counts = vec![Vec::new(); 2 * n];
    for_each_signed(n, |s| {
        let k = -(s.window()[n - 1] as i64);
        bump(&mut counts[pm_index(n, k)], s.des_b());
    });
    RefinedFamily::new(labels_pm(n), counts.iter().map(|c| from_counts(c)).collect())
}

pub fn eulerian_b_enumerated(n: usize) -> Result<ExactPoly> {
    Ok(eulerian_b_refined_enumerated(n)?.total())
}

/// `D_{n,k} = Σ_{σ ∈ D_n, σ_n = −k} x^{des_D σ}` by recursion from the
/// `n = 2` column `(1, x, x, x²)`.
pub fn eulerian_d_refined(n: usize) -> Result<RefinedFamily> {
    need(n, 2)?;
    let x = ExactPoly::x();
    let mut cur = vec![ExactPoly::one(), x.clone(), x.clone(), &x * &x];
    for m in 2..n {
        cur = signed_step(&cur, m);
    }
    RefinedFamily::new(labels_pm(n), cur)
}

pub fn eulerian_d(n: usize) -> Result<ExactPoly> {
    Ok(eulerian_d_refined(n)?.total())
}

pub fn eulerian_d_refined_enumerated(n: usize) -> Result<RefinedFamily> {
    need(n, 2)?;
    let mut counts = vec![Vec::new(); 2 * n];
    for_each_signed(n, |s| {
        if s.is_type_d() {
            let k = -(s.window()[n - 1] as i64);
            bump(&mut counts[pm_index(n, k)], s.des_d());
        }
    });
    RefinedFamily::new(labels_pm(n), counts.iter().map(|c| from_counts(c)).collect())
}

pub fn eulerian_d_enumerated(n: usize) -> Result<ExactPoly> {
    Ok(eulerian_d_refined_enumerated(n)?.total())
}

/// A nonempty sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SVector {
    s: Vec<u32>,
}

impl SVector {
    pub fn new(s: Vec<u32>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::invalid("s must be nonempty"));
        }
        if s.contains(&0) {
            return Err(Error::invalid("entries of s must be positive"));
        }
        Ok(SVector { s })
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of inversion sequences, `Π s_i`.
    pub fn num_sequences(&self) -> u128 {
        self.s.iter().map(|&v| v as u128).product()
    }
}

/// `E_{s,i}` for `i = 0 … s_n − 1` by the recursion
/// `E_{s,i} = Σ_{j < t_i} x E_{s',j} + Σ_{j ≥ t_i} E_{s',j}`, `t_i = ⌈i s_{n−1} / s_n⌉`.
pub fn s_eulerian_refined(s: &SVector) -> RefinedFamily {
    let v = s.as_slice();
    let x = ExactPoly::x();
    let mut cur: Vec<ExactPoly> = (0..v[0])
        .map(|i| if i == 0 { ExactPoly::one() } else { x.clone() })
        .collect();
    for w in v.windows(2) {
        let (prev, next) = (w[0] as u64, w[1] as u64);
        cur = (0..next)
            .map(|i| {
                let t = (i * prev).div_ceil(next) as usize;
                cur.iter()
                    .enumerate()
                    .map(|(j, p)| if j < t { &x * p } else { p.clone() })
                    .sum()
            })
            .collect();
    }
    let labels = (0..*v.last().expect("nonempty") as i64).collect();
    RefinedFamily::new(labels, cur).expect("lengths agree")
}

pub fn s_eulerian(s: &SVector) -> ExactPoly {
    s_eulerian_refined(s).total()
}

/// Direct enumeration of the inversion sequences `0 ≤ e_i < s_i`, refused
/// beyond `budget` sequences.
pub fn s_eulerian_refined_enumerated(s: &SVector, budget: u64) -> Result<RefinedFamily> {
    let needed = s.num_sequences();
    if needed > budget as u128 {
        return Err(Error::Budget { needed, budget });
    }
    let v = s.as_slice();
    let n = v.len();
    let last = v[n - 1] as usize;
    let mut counts = vec![Vec::new(); last];
    let mut e = vec![0u32; n];
    loop {
        let mut asc = 0;
        let (mut pe, mut ps) = (0u64, 1u64);
        for (&ei, &si) in e.iter().zip(v) {
            // e_{i-1}/s_{i-1} < e_i/s_i
            if pe * (si as u64) < ei as u64 * ps {
                asc += 1;
            }
            pe = ei as u64;
            ps = si as u64;
        }
        bump(&mut counts[e[n - 1] as usize], asc);
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                let labels = (0..last as i64).collect();
                return RefinedFamily::new(labels, counts.iter().map(|c| from_counts(c)).collect());
            }
            e[i] += 1;
            if e[i] < v[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

pub fn s_eulerian_enumerated(s: &SVector, budget: u64) -> Result<ExactPoly> {
    Ok(s_eulerian_refined_enumerated(s, budget)?.total())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realroot::{is_interlacing_seq, is_real_rooted};

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn type_a() {
        assert_eq!(eulerian_a(3).unwrap(), p(&[0, 1, 4, 1]));
        assert_eq!(eulerian_a(1).unwrap(), p(&[0, 1]));
        assert!(eulerian_a(0).is_err());
        let r = eulerian_a_refined(3).unwrap();
        assert_eq!(r.polys(), &[p(&[1, 1]), p(&[0, 2]), p(&[0, 1, 1])]);
        for n in 1..=7 {
            assert_eq!(eulerian_a(n).unwrap(), eulerian_a_enumerated(n).unwrap());
            let r = eulerian_a_refined(n).unwrap();
            assert_eq!(r, eulerian_a_refined_enumerated(n).unwrap());
            assert_eq!(r.total().shift(1), eulerian_a(n).unwrap());
        }
    }

    #[test]
    fn type_b() {
        assert_eq!(eulerian_b(1).unwrap(), p(&[1, 1]));
        assert_eq!(eulerian_b(2).unwrap(), p(&[1, 6, 1]));
        let r = eulerian_b_refined(1).unwrap();
        assert_eq!(r.polys(), &[p(&[1]), p(&[0, 1])]);
        for n in 1..=5 {
            assert_eq!(eulerian_b_refined(n).unwrap(), eulerian_b_refined_enumerated(n).unwrap());
        }
    }

    #[test]
    fn type_d() {
        let r = eulerian_d_refined(2).unwrap();
        assert_eq!(r.labels(), &[-2, -1, 1, 2]);
        assert_eq!(r.polys(), &[p(&[1]), p(&[0, 1]), p(&[0, 1]), p(&[0, 0, 1])]);
        let r3 = eulerian_d_refined(3).unwrap();
        assert_eq!(r3.get(-3), p(&[1, 2, 1]));
        let r4 = eulerian_d_refined(4).unwrap();
        assert_eq!(r4.get(2), p(&[0, 3, 14, 7]));
        for n in 2..=5 {
            let r = eulerian_d_refined(n).unwrap();
            assert_eq!(r, eulerian_d_refined_enumerated(n).unwrap());
            assert_eq!(r.get(1), r.get(-1));
            assert!(is_real_rooted(&r.total()));
        }
        assert!(is_interlacing_seq(eulerian_d_refined(4).unwrap().polys()).unwrap());
        assert!(eulerian_d(1).is_err());
    }

    #[test]
    fn s_eulerian_examples() {
        let s = SVector::new(alloc::vec![1, 2, 3]).unwrap();
        assert_eq!(s_eulerian(&s), p(&[1, 4, 1]));
        let s = SVector::new(alloc::vec![2, 4]).unwrap();
        assert_eq!(s_eulerian(&s), p(&[1, 6, 1]));
        let s = SVector::new(alloc::vec![1]).unwrap();
        assert_eq!(s_eulerian(&s), p(&[1]));
        assert!(SVector::new(alloc::vec![]).is_err());
        assert!(SVector::new(alloc::vec![2, 0]).is_err());
        let big = SVector::new(alloc::vec![10, 10, 10]).unwrap();
        assert_eq!(
            s_eulerian_enumerated(&big, 999),
            Err(Error::Budget { needed: 1000, budget: 999 })
        );
    }

    #[test]
    fn s_eulerian_dual_builders() {
        for s in [&[1u32, 2, 3, 4][..], &[2, 4, 6], &[3, 1, 4, 1, 5], &[5, 2, 2, 6], &[1, 1, 1]] {
            let s = SVector::new(s.to_vec()).unwrap();
            assert_eq!(s_eulerian_refined(&s), s_eulerian_refined_enumerated(&s, 1_000_000).unwrap());
        }
    }
}
