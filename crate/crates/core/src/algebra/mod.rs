//! Laurent polynomials with exact integer coefficients, the hyperoctahedral
//! group acting on them, and expansion in the symplectic / orthogonal bases.

mod expand;
mod poly;
mod weyl;

pub use expand::{basis_expand, Family};
pub use poly::{LaurentPolynomial, Monomial};
pub use weyl::{is_symmetric, is_w_invariant, weyl_act, SignedPermutation};
