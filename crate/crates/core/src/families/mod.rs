//! Generators for the polynomial families: Eulerian polynomials of types A,
//! B and D with their refinements, s-Eulerian polynomials, and a handful of
//! classical sequences.

mod classical;
mod eulerian;

pub use classical::{
    boros_moll, catalan_gamma_poly, narayana_poly, pascal_column, q_binomial, q_factorial,
    q_integer, stirling1_poly, stirling2_poly, surjection_poly,
};
pub use eulerian::{
    eulerian_a, eulerian_a_enumerated, eulerian_a_refined,
    eulerian_a_refined_enumerated, eulerian_b, eulerian_b_enumerated, eulerian_b_refined,
    eulerian_b_refined_enumerated, eulerian_d, eulerian_d_enumerated, eulerian_d_refined,
    eulerian_d_refined_enumerated, s_eulerian, s_eulerian_enumerated, s_eulerian_refined,
    s_eulerian_refined_enumerated, t_operator, SVector,
};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::ExactPoly;

/// Polynomials indexed by an ordered label set, listed in interlacing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedFamily {
    labels: Vec<i64>,
    polys: Vec<ExactPoly>,
}

impl RefinedFamily {
    pub fn new(labels: Vec<i64>, polys: Vec<ExactPoly>) -> Result<Self> {
        if labels.len() != polys.len() {
            return Err(Error::Shape("labels and polynomials differ in length".into()));
        }
        Ok(RefinedFamily { labels, polys })
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn polys(&self) -> &[ExactPoly] {
        &self.polys
    }

    /// The polynomial for `label`, or zero when the label is absent.
    pub fn get(&self, label: i64) -> ExactPoly {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map_or_else(ExactPoly::zero, |i| self.polys[i].clone())
    }

    pub fn total(&self) -> ExactPoly {
        self.polys.iter().cloned().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &ExactPoly)> {
        self.labels.iter().copied().zip(self.polys.iter())
    }
}
