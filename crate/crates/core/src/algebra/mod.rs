//! Exact polynomial arithmetic over `Q` and `Q(i)`.

mod binary;
pub mod gcd;
pub mod parse;
mod poly;
pub mod roots;
mod solve;
mod sqrt;
mod uni;

pub use binary::{homogeneous_decompose, BinaryForm};
pub use gcd::{gcd, gcd_all, is_squarefree, squarefree_decomposition, squarefree_part};
pub use parse::{parse_poly, serialize};
pub use poly::{Monomial, MultiPoly, Vars};
pub use roots::{rational_roots, rational_roots_q, rational_roots_qi};
pub use solve::{solve_system, Solutions};
pub use sqrt::{formal_square_root, square_root_up_to_scalar};
pub use uni::UniPoly;

/// Exact quotient `f / g`, or `None` when `g` does not divide `f`.
pub fn poly_exact_div<K: crate::scalar::Field>(
    f: &MultiPoly<K>,
    g: &MultiPoly<K>,
) -> crate::error::Result<Option<MultiPoly<K>>> {
    f.exact_div(g)
}
