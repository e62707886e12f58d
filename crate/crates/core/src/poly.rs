//! Dense univariate polynomials over the rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{self, Rat};

/// A polynomial stored as `coeffs[k] = [x^k]`. The highest stored
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<Rat>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat::rat(c)).collect())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rat::from_integer).collect())
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(k: usize, c: Rat) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x + c`
    pub fn linear(c: Rat) -> Self {
        Self::new(vec![c, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// `[x^k]`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(rat::is_integer)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExactPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rat::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        ExactPoly { coeffs: v }
    }

    /// Divide by `x^k`, failing if the low coefficients are not zero.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::invalid("polynomial is not divisible by the requested power of x"));
        }
        Ok(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat::rat(k as i64))
                .collect(),
        )
    }

    /// `x^n p(1/x)`.
    pub fn reverse(&self, n: usize) -> Result<Self> {
        let d = self.deg();
        if !self.is_zero() && n < d {
            return Err(Error::Degree { degree: d, bound: n });
        }
        Ok(Self::new((0..=n).map(|k| self.coeff(n - k)).collect()))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(x)` without forming large intermediates twice.
    pub fn sign_at(&self, x: &Rat) -> i8 {
        sign(&self.eval(x))
    }

    /// Sign of `p` as `x → +∞`.
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, sign)
    }

    /// Sign of `p` as `x → −∞`.
    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.leading() {
            None => 0,
            Some(c) => {
                let s = sign(c);
                if self.deg() % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// `p(a x + b)` by Horner in the polynomial ring.
    pub fn affine_substitute(&self, a: &Rat, b: &Rat) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division. Fails on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let Some(dl) = d.leading() else {
            return Err(Error::ZeroPolynomial);
        };
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = dl.recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); self.deg() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact quotient; a nonzero remainder is an error.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::internal("polynomial division left a nonzero remainder"));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    /// The sign of the leading coefficient is kept.
    pub fn primitive(&self) -> Self {
        Self::from_bigints(self.primitive_ints())
    }

    /// Integer coefficients of [`ExactPoly::primitive`].
    pub(crate) fn primitive_ints(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = rat::common_denominator(&self.coeffs);
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        remove_content(&mut ints);
        ints
    }

    /// Monic gcd. Both inputs zero is undefined.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = self.primitive_ints();
        let mut b = other.primitive_ints();
        while !b.is_empty() {
            let r = int_prem(&a, &b);
            a = b;
            b = r;
        }
        Ok(Self::from_bigints(a).monic())
    }

    /// `p / gcd(p, p')`, monic. Fails on the zero polynomial.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.div_exact(&g)?.monic())
    }

    pub fn is_squarefree(&self) -> bool {
        match self.squarefree_part() {
            Ok(s) => s.deg() == self.deg(),
            Err(_) => false,
        }
    }

    /// Yun's algorithm: monic squarefree, pairwise coprime `a_i` with
    /// `p = c · Π a_i^i`. Entry `i − 1` holds `a_i` (possibly 1).
    pub fn squarefree_decomposition(&self) -> Result<Vec<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp)?;
        let mut b = f.div_exact(&a0)?;
        let mut c = fp.div_exact(&a0)?;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        loop {
            let a = b.gcd(&d)?;
            b = b.div_exact(&a)?;
            c = d.div_exact(&a)?;
            d = &c - &b.derivative();
            out.push(a);
            if b.is_constant() {
                break;
            }
        }
        while out.last().is_some_and(|a| a.is_constant()) {
            out.pop();
        }
        Ok(out)
    }

    /// Coefficientwise negation of odd powers: `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// True when `[x^k] = [x^(lo + hi − k)]` across the support span.
    /// The zero polynomial counts as symmetric.
    pub fn is_palindromic_span(&self) -> bool {
        let Some(lo) = self.low_degree() else {
            return true;
        };
        let hi = self.deg();
        (lo..=hi).all(|k| self.coeffs[k] == self.coeffs[lo + hi - k])
    }

    pub fn sum_coeffs(&self) -> Rat {
        self.coeffs.iter().fold(Rat::zero(), |a, c| a + c)
    }

    pub fn to_strings(&self) -> Vec<String> {
        rat::to_strings(&self.coeffs)
    }
}

pub(crate) fn sign(q: &Rat) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({})", self)
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = a.is_one();
            if k == 0 || !unit {
                write!(f, "{}", a)?;
                if k > 0 {
                    f.write_str("*")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{}", k)?,
            }
        }
        Ok(())
    }
}

fn add_coeffs(a: &[Rat], b: &[Rat], negate_b: bool) -> Vec<Rat> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(Rat::zero);
            match b.get(k) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        ExactPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        ExactPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        ExactPoly::new(v)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: ExactPoly) -> ExactPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: &ExactPoly) -> ExactPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

impl core::iter::Sum for ExactPoly {
    fn sum<I: Iterator<Item = ExactPoly>>(iter: I) -> Self {
        iter.fold(ExactPoly::zero(), |a, b| &a + &b)
    }
}

impl core::iter::Product for ExactPoly {
    fn product<I: Iterator<Item = ExactPoly>>(iter: I) -> Self {
        iter.fold(ExactPoly::one(), |a, b| &a * &b)
    }
}

/// Polynomial with roots at the given points, leading coefficient 1.
pub fn from_roots(roots: &[Rat]) -> ExactPoly {
    roots.iter().map(|r| ExactPoly::linear(-r)).product()
}

/// Build a polynomial from integer counts indexed by exponent.
pub fn from_counts(counts: &[u64]) -> ExactPoly {
    ExactPoly::new(counts.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
}

/// Divides out the positive gcd of the entries.
fn remove_content(ints: &mut [BigInt]) {
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in ints.iter_mut() {
            *c /= &g;
        }
    }
}

/// Remainder of `a` by nonzero `b` over the integers, as a positive multiple
/// of the true remainder with its content removed. Both inputs are trimmed
/// coefficient vectors, lowest degree first.
pub(crate) fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b[db].abs();
    let flip = b[db].is_negative();
    let mut r = a.to_vec();
    while r.len() > db {
        let k = r.len() - 1;
        let lr = if flip { -&r[k] } else { r[k].clone() };
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k - db + i] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        remove_content(&mut r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 0, 1]).derivative(), p(&[0, 2]));
        assert_eq!(&p(&[1, -1]) + &p(&[0, 1]), p(&[1]));
        assert!(p(&[5]).derivative().is_zero());
        assert!(p(&[0, 0, 0]).is_zero());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[1, 2]).reverse(1).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[1, 4, 1]).reverse(2).unwrap(), p(&[1, 4, 1]));
        // x^3 (x^{-1} + 3 x^{-2}) = 3x + x^2
        assert_eq!(p(&[0, 1, 3]).reverse(3).unwrap(), p(&[0, 3, 1]));
        assert_eq!(
            p(&[0, 1, 3]).reverse(1),
            Err(Error::Degree { degree: 2, bound: 1 })
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 2, 1]).eval(&rat(-1)), rat(0));
        assert_eq!(p(&[1, 1, 1, 1]).eval(&rat(1)), rat(4));
        assert_eq!(p(&[1, 2]).eval(&ratio(1, 2)), rat(2));
    }

    #[test]
    fn affine_examples() {
        assert_eq!(p(&[0, 1]).affine_substitute(&rat(-1), &rat(-1)), p(&[-1, -1]));
        assert_eq!(p(&[1, 2, 1]).affine_substitute(&rat(1), &rat(1)), p(&[4, 4, 1]));
        let q = p(&[3, -1, 0, 2]);
        assert_eq!(q.affine_substitute(&rat(1), &rat(0)), q);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[1, 2, 1]).squarefree_part().unwrap(), p(&[1, 1]));
        assert_eq!(p(&[0, 1]).gcd(&p(&[1])).unwrap(), p(&[1]));
        assert_eq!(ExactPoly::zero().gcd(&ExactPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(ExactPoly::zero().gcd(&p(&[0, 2])).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn yun_multiplicities() {
        // (x+1)^3 (x-2) x^2
        let f = &(&p(&[1, 1]).pow(3) * &p(&[-2, 1])) * &p(&[0, 0, 1]);
        let dec = f.squarefree_decomposition().unwrap();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], p(&[-2, 1]));
        assert_eq!(dec[1], p(&[0, 1]));
        assert_eq!(dec[2], p(&[1, 1]));
        assert!(p(&[7]).squarefree_decomposition().unwrap().is_empty());
    }

    #[test]
    fn division() {
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(q, ExactPoly::new(alloc::vec![rat(0), ratio(1, 2)]));
        assert_eq!(r, p(&[1]));
        assert!(p(&[1]).div_rem(&ExactPoly::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 0, 1]).to_string(), "1 - 3*x + x^3");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn primitive_keeps_sign() {
        let q = ExactPoly::new(alloc::vec![ratio(-1, 2), ratio(-3, 4)]);
        assert_eq!(q.primitive(), p(&[-2, -3]));
    }

    fn small_poly() -> impl Strategy<Value = ExactPoly> {
        proptest::collection::vec((-9i64..=9, 1i64..=4), 0..6).prop_map(|v| {
            ExactPoly::new(v.into_iter().map(|(n, d)| ratio(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn distributive(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn reverse_involution(a in small_poly()) {
            prop_assume!(!a.coeff(0).is_zero());
            let n = a.deg();
            prop_assert_eq!(a.reverse(n).unwrap().reverse(n).unwrap(), a);
        }

        #[test]
        fn affine_eval(a in small_poly(), s in -5i64..5, t in -5i64..5, u in -7i64..7, den in 1i64..5) {
            let (s, t, u) = (rat(s), rat(t), ratio(u, den));
            prop_assert_eq!(a.affine_substitute(&s, &t).eval(&u), a.eval(&(&s * &u + &t)));
        }

        #[test]
        fn gcd_matches_rational_euclid(a in small_poly(), b in small_poly()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let (mut x, mut y) = (a.clone(), b.clone());
            while !y.is_zero() {
                let (_, r) = x.div_rem(&y).unwrap();
                x = y;
                y = r;
            }
            prop_assert_eq!(a.gcd(&b).unwrap(), x.monic());
        }

        #[test]
        fn div_rem_identity(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.is_zero() || r.deg() < b.deg());
        }

        #[test]
        fn yun_reconstructs(a in small_poly()) {
            prop_assume!(a.deg() >= 1);
            let dec = a.squarefree_decomposition().unwrap();
            let mut prod = ExactPoly::one();
            for (i, f) in dec.iter().enumerate() {
                prod = &prod * &f.pow(i as u32 + 1);
            }
            prop_assert_eq!(prod, a.monic());
        }
    }
}
