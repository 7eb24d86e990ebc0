use itertools::Itertools;
use num_bigint::BigInt;

use crate::algebra::{LaurentPolynomial, Monomial};
use crate::combinat::Partition;
use crate::error::{Error, Result};

/// `x_j^a - x_j^{-a}`.
fn antisym(n: usize, j: usize, a: i32) -> LaurentPolynomial {
    LaurentPolynomial::var_pow(n, j, a) - LaurentPolynomial::var_pow(n, j, -a)
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let inversions = (0..perm.len()).tuple_combinations().filter(|&(a, b)| perm[a] > perm[b]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz expansion of `det(x_j^{a_i} - x_j^{-a_i})_{i,j}`.
fn alternant(n: usize, exps: &[i32]) -> LaurentPolynomial {
    let mut det = LaurentPolynomial::zero(n);
    for perm in (0..n).permutations(n) {
        let mut term = LaurentPolynomial::constant(n, permutation_sign(&perm));
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &antisym(n, j + 1, exps[i]);
        }
        det = det + term;
    }
    det
}

/// `ℓ_i = λ_i + n - i`, 1-based `i`.
fn shifted_parts(n: usize, lambda: &Partition) -> Result<Vec<i32>> {
    lambda.check_fits(n)?;
    Ok(lambda.padded(n).iter().enumerate().map(|(i, &p)| p as i32 + (n - i - 1) as i32).collect())
}

/// Type C Weyl character as a ratio of alternants with exponents `ℓ_i + 1`
/// over `n - i + 1`.
pub fn character_c(n: usize, lambda: &Partition) -> Result<LaurentPolynomial> {
    let num: Vec<i32> = shifted_parts(n, lambda)?.iter().map(|l| l + 1).collect();
    let den: Vec<i32> = (1..=n).map(|i| (n - i + 1) as i32).collect();
    alternant(n, &num).div_exact(&alternant(n, &den))
}

/// Type B Weyl character, computed in `y_j = x_j^{1/2}` with exponents
/// `2ℓ_i + 1` over `2(n-i) + 1` and then halved.
pub fn character_b(n: usize, lambda: &Partition) -> Result<LaurentPolynomial> {
    let num: Vec<i32> = shifted_parts(n, lambda)?.iter().map(|l| 2 * l + 1).collect();
    let den: Vec<i32> = (1..=n).map(|i| 2 * (n - i) as i32 + 1).collect();
    let q = alternant(n, &num).div_exact(&alternant(n, &den))?;
    if let Some((m, _)) = q.terms().find(|(m, _)| m.exponents().iter().any(|e| e % 2 != 0)) {
        return Err(Error::Structural(format!("odd exponent {:?} in the y-quotient", m.exponents())));
    }
    let mut out = LaurentPolynomial::zero(n);
    for (m, c) in q.terms() {
        out.add_term(Monomial(m.exponents().iter().map(|e| e / 2).collect()), BigInt::clone(c));
    }
    Ok(out)
}
