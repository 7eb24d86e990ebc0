use std::fmt;

use crate::algebra::poly::{LaurentPolynomial, Monomial};
use crate::error::{Error, Result};

/// Element of the hyperoctahedral group `W(B_n) = W(C_n)`.
///
/// Acting on exponent vectors, coordinate `i` is first negated when
/// `signs[i]` is set and then moved to position `perm[i]`. In terms of
/// variables: `x_i -> x_{perm(i)}^{±1}`. Indices are 0-based internally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<bool>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<bool>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::Dimension { left: n, right: signs.len() });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Structural(format!("{perm:?} is not a permutation of 0..{n}")));
            }
            seen[p] = true;
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![false; n] }
    }

    /// The generator `(i ī)` inverting `x_i` (1-based).
    pub fn sign_flip(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut w = Self::identity(n);
        w.signs[i - 1] = true;
        w
    }

    /// The generator `(j j+1)(j̄ j+1̄)` swapping `x_j` and `x_{j+1}` (1-based).
    pub fn adjacent_swap(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j < n);
        let mut w = Self::identity(n);
        w.perm.swap(j - 1, j);
        w
    }

    /// Generator indexed uniformly with the type B/C Bender-Knuth maps:
    /// `0` is `(1 1̄)` and `j >= 1` is the adjacent swap of `x_j, x_{j+1}`.
    pub fn generator(n: usize, j: usize) -> Self {
        if j == 0 {
            Self::sign_flip(n, 1)
        } else {
            Self::adjacent_swap(n, j)
        }
    }

    /// `(1 1̄)` followed by all adjacent swaps.
    pub fn generators(n: usize) -> Vec<Self> {
        (0..n).map(|j| Self::generator(n, j)).collect()
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    /// Product `self * other`, acting as `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let signs = (0..self.n()).map(|i| other.signs[i] ^ self.signs[other.perm[i]]).collect();
        SignedPermutation { perm, signs }
    }

    pub fn act_monomial(&self, m: &Monomial) -> Monomial {
        debug_assert_eq!(m.nvars(), self.n());
        let mut out = vec![0; self.n()];
        for (i, &e) in m.0.iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] { -e } else { e };
        }
        Monomial(out)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let bar = if self.signs[i] { "-" } else { "" };
            write!(f, "{}->{bar}{}", i + 1, self.perm[i] + 1)?;
        }
        f.write_str("]")
    }
}

pub fn weyl_act(w: &SignedPermutation, f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    if w.n() != f.nvars() {
        return Err(Error::Dimension { left: w.n(), right: f.nvars() });
    }
    Ok(f.map_monomials(|m| w.act_monomial(m)))
}

/// Invariance under `(1 1̄)` and every `(j j+1)(j̄ j+1̄)`.
pub fn is_w_invariant(f: &LaurentPolynomial) -> bool {
    SignedPermutation::generators(f.nvars()).iter().all(|g| weyl_act(g, f).is_ok_and(|h| &h == f))
}

/// Invariance under the adjacent transpositions only (type A symmetry).
pub fn is_symmetric(f: &LaurentPolynomial) -> bool {
    let n = f.nvars();
    (1..n).all(|j| weyl_act(&SignedPermutation::adjacent_swap(n, j), f).is_ok_and(|h| &h == f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn mono(e: &[i32]) -> LaurentPolynomial {
        LaurentPolynomial::monomial(Monomial(e.to_vec()), BigInt::from(1))
    }

    #[test]
    fn sign_flip_inverts() {
        let w = SignedPermutation::sign_flip(1, 1);
        assert_eq!(weyl_act(&w, &mono(&[1])).unwrap(), mono(&[-1]));
    }

    #[test]
    fn identity_fixes() {
        let f = &mono(&[2, -1]) + &mono(&[0, 3]);
        assert_eq!(weyl_act(&SignedPermutation::identity(2), &f).unwrap(), f);
    }

    #[test]
    fn swap_exchanges_coordinates() {
        let w = SignedPermutation::adjacent_swap(2, 1);
        assert_eq!(weyl_act(&w, &mono(&[2, -1])).unwrap(), mono(&[-1, 2]));
    }

    #[test]
    fn invariance_examples() {
        assert!(is_w_invariant(&(&mono(&[1]) + &mono(&[-1]))));
        assert!(!is_w_invariant(&mono(&[1])));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(SignedPermutation::new(vec![0, 0], vec![false, false]).is_err());
        assert!(SignedPermutation::new(vec![1, 0], vec![true]).is_err());
    }

    #[test]
    fn composition_is_an_action() {
        let n = 3;
        let f = &(&mono(&[2, -1, 0]) + &mono(&[0, 1, -3])) + &mono(&[1, 1, 1]);
        let gens = SignedPermutation::generators(n);
        for a in &gens {
            for b in &gens {
                let lhs = weyl_act(a, &weyl_act(b, &f).unwrap()).unwrap();
                let rhs = weyl_act(&a.compose(b), &f).unwrap();
                assert_eq!(lhs, rhs, "{a} * {b}");
            }
            assert_eq!(weyl_act(a, &weyl_act(a, &f).unwrap()).unwrap(), f);
            assert_eq!(a.compose(a), SignedPermutation::identity(n));
        }
    }

    #[test]
    fn dimension_error() {
        let w = SignedPermutation::identity(2);
        assert!(weyl_act(&w, &mono(&[1])).is_err());
    }
}
