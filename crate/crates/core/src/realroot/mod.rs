//! Exact real-root counting, isolation and interleaving.

mod interlace;
mod isolate;
mod matrix;
mod sturm;

pub use interlace::{
    interleaves, is_interlacing_seq, obreschkoff_sample_check, zeros_interlace, InterlacingSeq,
};
pub use isolate::{isolate_roots, real_root_multiset, RootInterval, RootIsolation};
pub use matrix::{apply_poly_matrix, build_g_lambda, check_pbxvw_condition, PolyMatrix};
pub use sturm::{count_real_roots, is_real_rooted, roots_in_closed, SturmChain};

use crate::poly::ExactPoly;
use crate::rat::Rat;

/// True when every zero is real, simple and lies in `[lo, hi]`.
pub fn has_simple_roots_in(p: &ExactPoly, lo: &Rat, hi: &Rat) -> bool {
    if p.is_zero() {
        return false;
    }
    p.is_squarefree() && roots_in_closed(p, lo, hi) == p.deg()
}
