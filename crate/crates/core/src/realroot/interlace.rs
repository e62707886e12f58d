use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::isolate::{isolate_roots, RootInterval};
use super::sturm::{is_real_rooted, SturmChain};
use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::rat::{self, Rat};

fn has_root_in(f: &ExactPoly, iv: &RootInterval) -> bool {
    if iv.is_exact() {
        f.eval(&iv.lo).is_zero()
    } else {
        SturmChain::new(f).count(Some(&iv.lo), Some(&iv.hi)) > 0
    }
}

fn multiplicity_in(factors: &[ExactPoly], iv: &RootInterval) -> usize {
    factors
        .iter()
        .enumerate()
        .find(|(_, f)| !f.is_constant() && has_root_in(f, iv))
        .map_or(0, |(i, _)| i + 1)
}

/// Multiplicities of each distinct root of `f·g` in `f` and in `g`,
/// roots taken in decreasing order.
fn joint_profile(f: &ExactPoly, g: &ExactPoly) -> Vec<(usize, usize)> {
    let h = f * g;
    let iso = isolate_roots(&h);
    let ff = f.squarefree_decomposition().expect("nonzero");
    let gf = g.squarefree_decomposition().expect("nonzero");
    iso.intervals
        .iter()
        .rev()
        .map(|iv| (multiplicity_in(&ff, iv), multiplicity_in(&gf, iv)))
        .collect()
}

fn check_input(p: &ExactPoly) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    if p.leading().is_some_and(|c| c.is_negative()) {
        return Err(Error::NonPositiveLeading);
    }
    if !is_real_rooted(p) {
        return Err(Error::NotRealRooted);
    }
    Ok(())
}

/// Decides `f ≪ g`: with both zero sets listed in decreasing order,
/// `β₁ ≥ α₁ ≥ β₂ ≥ α₂ ≥ ⋯`, where `α` are the zeros of `f` and `β` those
/// of `g`, and `deg g ∈ {deg f, deg f + 1}`. A zero polynomial on either
/// side is always in relation.
pub fn interleaves(f: &ExactPoly, g: &ExactPoly) -> Result<bool> {
    check_input(f)?;
    check_input(g)?;
    if f.is_zero() || g.is_zero() {
        return Ok(true);
    }
    let (df, dg) = (f.deg(), g.deg());
    if dg != df && dg != df + 1 {
        return Ok(false);
    }
    if df == 0 {
        return Ok(true);
    }
    let profile = joint_profile(f, g);
    // Position of each zero in the merged decreasing order of distinct roots.
    let expand = |pick: fn(&(usize, usize)) -> usize| -> Vec<usize> {
        profile
            .iter()
            .enumerate()
            .flat_map(|(t, m)| core::iter::repeat(t).take(pick(m)))
            .collect()
    };
    let alpha = expand(|m| m.0);
    let beta = expand(|m| m.1);
    // Smaller position means a larger root.
    for (i, &a) in alpha.iter().enumerate() {
        if beta[i] > a {
            return Ok(false);
        }
        if let Some(&b) = beta.get(i + 1) {
            if a > b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Symmetric form: the zeros of `f` and `g` weakly alternate in some order.
/// Any two polynomials of degree at most one are taken to interlace.
pub fn zeros_interlace(f: &ExactPoly, g: &ExactPoly) -> Result<bool> {
    if f.deg() <= 1 && g.deg() <= 1 {
        check_input(f)?;
        check_input(g)?;
        return Ok(true);
    }
    let norm = |p: &ExactPoly| if p.leading().is_some_and(|c| c.is_negative()) { -p } else { p.clone() };
    let (f, g) = (norm(f), norm(g));
    Ok(interleaves(&f, &g)? || interleaves(&g, &f)?)
}

/// `f_i ≪ f_j` for every `i < j`.
pub fn is_interlacing_seq(seq: &[ExactPoly]) -> Result<bool> {
    for p in seq {
        check_input(p)?;
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if !interleaves(&seq[i], &seq[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn random_rat(rng: &mut ChaCha8Rng, signed: bool) -> Rat {
    let n: i64 = if signed { rng.gen_range(-24..=24) } else { rng.gen_range(1..=24) };
    let d: i64 = rng.gen_range(1..=12);
    rat::ratio(n, d)
}

/// Sampled certificate: `αf + βg` is real-rooted for `trials` seeded random
/// rational pairs. False is a genuine refutation, true is only evidence.
pub fn obreschkoff_sample_check(f: &ExactPoly, g: &ExactPoly, trials: usize, seed: u64) -> Result<bool> {
    for p in [f, g] {
        if !is_real_rooted(p) {
            return Err(Error::NotRealRooted);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let a = random_rat(&mut rng, true);
        let b = random_rat(&mut rng, true);
        if !is_real_rooted(&(&f.scale(&a) + &g.scale(&b))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A validated interlacing sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacingSeq {
    polys: Vec<ExactPoly>,
}

impl InterlacingSeq {
    pub fn new(polys: Vec<ExactPoly>) -> Result<Self> {
        if is_interlacing_seq(&polys)? {
            Ok(InterlacingSeq { polys })
        } else {
            Err(Error::invalid("sequence is not interlacing"))
        }
    }

    pub fn polys(&self) -> &[ExactPoly] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<ExactPoly> {
        self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `Σ_i f_i g_{n+1-i}` for two sequences of equal length.
    pub fn reversed_pairing(&self, other: &InterlacingSeq) -> Result<ExactPoly> {
        if self.len() != other.len() {
            return Err(Error::Shape("interlacing sequences differ in length".into()));
        }
        let n = self.len();
        Ok((0..n).map(|i| &self.polys[i] * &other.polys[n - 1 - i]).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn basic_relations() {
        // x(x+2) ≪ x+1 is false under deg g ∈ {deg f, deg f + 1}; x+1 ≪ x(x+2) holds.
        assert!(interleaves(&p(&[1, 1]), &p(&[0, 2, 1])).unwrap());
        assert!(!interleaves(&p(&[0, 2, 1]), &p(&[1, 1])).unwrap());
        // Linear pairs: root of f at most the root of g.
        assert!(interleaves(&p(&[1, 1]), &p(&[0, 1])).unwrap());
        assert!(!interleaves(&p(&[0, 1]), &p(&[1, 1])).unwrap());
        assert!(interleaves(&p(&[1]), &p(&[0, 1])).unwrap());
        assert!(!interleaves(&p(&[0, 1]), &p(&[1])).unwrap());
        assert!(interleaves(&p(&[3]), &p(&[5])).unwrap());
    }

    #[test]
    fn zero_conventions() {
        let z = ExactPoly::zero();
        assert!(interleaves(&z, &z).unwrap());
        assert!(interleaves(&z, &p(&[0, 2, 1])).unwrap());
        assert!(interleaves(&p(&[0, 2, 1]), &z).unwrap());
    }

    #[test]
    fn equal_and_shared_roots() {
        let f = p(&[0, 2, 1]);
        assert!(interleaves(&f, &f).unwrap());
        // (x+1)^2 with (x+1)^3: α = (-1,-1), β = (-1,-1,-1).
        assert!(interleaves(&p(&[1, 1]).pow(2), &p(&[1, 1]).pow(3)).unwrap());
        // (x+1)^2 ≪ x(x+2) fails: α₁ = -1 ≥ β₂ = -2 but β... check both ways.
        assert!(interleaves(&p(&[1, 1]).pow(2), &p(&[0, 2, 1])).unwrap() == false);
        assert!(interleaves(&p(&[0, 2, 1]), &p(&[1, 1]).pow(2)).unwrap() == false);
    }

    #[test]
    fn zeros_interlace_convention() {
        assert!(zeros_interlace(&p(&[0, 1]), &p(&[1])).unwrap());
        assert!(zeros_interlace(&p(&[0, 2, 1]), &p(&[1, 1])).unwrap());
        assert!(!zeros_interlace(&p(&[0, 0, 1]), &p(&[-9, 0, 1])).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(interleaves(&p(&[1, 0, 1]), &p(&[1, 1])), Err(Error::NotRealRooted));
        assert_eq!(interleaves(&p(&[-1, -1]), &p(&[1, 1])), Err(Error::NonPositiveLeading));
        assert_eq!(
            is_interlacing_seq(&[p(&[0, 1]), p(&[1, 0, 1])]),
            Err(Error::NotRealRooted)
        );
    }

    #[test]
    fn seq_examples() {
        assert!(is_interlacing_seq(&[p(&[1]), p(&[0, 1])]).unwrap());
        // A_{3,i} = (1+x, 2x, x+x²)
        assert!(is_interlacing_seq(&[p(&[1, 1]), p(&[0, 2]), p(&[0, 1, 1])]).unwrap());
        assert!(!is_interlacing_seq(&[p(&[0, 2]), p(&[1, 1])]).unwrap());
    }

    #[test]
    fn obreschkoff_examples() {
        assert!(obreschkoff_sample_check(&p(&[0, 1]), &p(&[1]), 64, 0).unwrap());
        assert!(obreschkoff_sample_check(&p(&[0, 2, 1]), &p(&[1, 1]), 64, 0).unwrap());
        assert_eq!(
            obreschkoff_sample_check(&p(&[1, 0, 1]), &p(&[1]), 8, 0),
            Err(Error::NotRealRooted)
        );
        // Zeros {0, 0} and {±3}: not interlacing; some combination fails.
        assert!(!obreschkoff_sample_check(&p(&[0, 0, 1]), &p(&[-9, 0, 1]), 64, 3).unwrap());
    }

    #[test]
    fn pairing_is_real_rooted() {
        let f = InterlacingSeq::new(alloc::vec![p(&[1, 1]), p(&[0, 2]), p(&[0, 1, 1])]).unwrap();
        let g = InterlacingSeq::new(alloc::vec![p(&[2, 1]), p(&[1, 1]), p(&[0, 1])]).unwrap();
        assert!(is_real_rooted(&f.reversed_pairing(&g).unwrap()));
        assert!(InterlacingSeq::new(alloc::vec![p(&[0, 1]), p(&[1])]).is_err());
    }
}
