//! Sparse multivariate polynomials over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::ExactPoly;
use crate::rat::{self, Rat};

pub type Exponents = Vec<u32>;

/// Map from exponent vectors of length `arity` to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rat::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn monomial(exps: Exponents, c: Rat) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Exponents, Rat)>) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::Arity { expected: arity, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Adds `c · x^e`; panics on an exponent vector of the wrong length.
    pub fn add_term(&mut self, e: Exponents, c: Rat) {
        assert_eq!(e.len(), self.arity, "exponent vector length must equal arity");
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k <= 1))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, got: point.len() });
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// `∂/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * rat::rat(e[i] as i64));
            }
        }
        out
    }

    /// `P(x, x, …, x)`.
    pub fn diagonal(&self) -> ExactPoly {
        let mut coeffs: Vec<Rat> = Vec::new();
        for (e, c) in &self.terms {
            let d: u32 = e.iter().sum();
            let d = d as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rat::zero());
            }
            coeffs[d] += c;
        }
        ExactPoly::new(coeffs)
    }

    /// Substitute a univariate polynomial for every variable.
    pub fn substitute_univariate(&self, sub: &[ExactPoly]) -> Result<ExactPoly> {
        if sub.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, got: sub.len() });
        }
        let mut acc = ExactPoly::zero();
        for (e, c) in &self.terms {
            let mut t = ExactPoly::constant(c.clone());
            for (s, &k) in sub.iter().zip(e) {
                if k > 0 {
                    t = &t * &s.pow(k);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Send variable `i` to variable `map[i]` of a polynomial of arity `new_arity`.
    pub fn remap(&self, map: &[usize], new_arity: usize) -> Result<Self> {
        if map.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, got: map.len() });
        }
        if map.iter().any(|&j| j >= new_arity) {
            return Err(Error::invalid("variable map points outside the target arity"));
        }
        let mut out = Self::zero(new_arity);
        for (e, c) in &self.terms {
            let mut f = vec![0; new_arity];
            for (i, &k) in e.iter().enumerate() {
                f[map[i]] += k;
            }
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    /// True when exchanging any two variables leaves `P` unchanged.
    pub fn is_symmetric(&self) -> bool {
        if self.arity < 2 {
            return true;
        }
        // Adjacent transpositions generate the symmetric group.
        (0..self.arity - 1).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.terms.get(&f) == Some(c)
            })
        })
    }

    pub fn sum_coeffs(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |a, c| a + c)
    }

    /// Sum of the coefficients of the monomials containing every variable in `set`.
    pub fn marginal_sum(&self, set: &[usize]) -> Rat {
        self.terms
            .iter()
            .filter(|(e, _)| set.iter().all(|&i| e[i] > 0))
            .fold(Rat::zero(), |a, (_, c)| a + c)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.arity, self)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let mono = e.iter().any(|&k| k > 0);
            if !mono || !c.is_one() {
                write!(f, "{}", c)?;
            }
            let mut first = mono && c.is_one();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

fn check_arity(a: &MultiPoly, b: &MultiPoly) {
    assert_eq!(a.arity, b.arity, "multivariate arity mismatch");
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        check_arity(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        check_arity(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        check_arity(self, rhs);
        let mut out = MultiPoly::zero(self.arity);
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                let g: Exponents = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, c * d);
            }
        }
        out
    }
}
