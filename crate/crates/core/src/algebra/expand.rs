use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{is_w_invariant, LaurentPolynomial};
use crate::combinat::Partition;
use crate::enumeration::{orthogonal, symplectic};
use crate::error::{Error, Result};

/// Basis of the `W`-invariant Laurent polynomials used by [`basis_expand`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Symplectic,
    Orthogonal,
}

impl Family {
    pub fn element(self, n: usize, lambda: &Partition) -> Result<LaurentPolynomial> {
        match self {
            Family::Symplectic => symplectic(n, lambda),
            Family::Orthogonal => orthogonal(n, lambda),
        }
    }
}

/// Writes `f` as an integer combination of `family_λ`, greedily removing the
/// lexicographically leading term.
///
/// Every family element has its shape as leading exponent, so each step
/// strictly lowers the leading exponent among partitions with first part at
/// most that of the initial leading exponent. The number of such partitions
/// bounds the loop.
pub fn basis_expand(f: &LaurentPolynomial, family: Family, n: usize) -> Result<BTreeMap<Partition, BigInt>> {
    if f.nvars() != n {
        return Err(Error::Dimension { left: f.nvars(), right: n });
    }
    if !is_w_invariant(f) {
        return Err(Error::NotInSpan("input is not invariant under the Weyl group".into()));
    }
    let mut out = BTreeMap::new();
    let Some((lead, _)) = f.leading_term() else { return Ok(out) };
    let budget = f.len() + bounded_partition_count(n, lead.exponents().first().copied().unwrap_or(0));
    let mut rest = f.clone();
    let mut steps = 0usize;
    while let Some((lead, coef)) = rest.leading_term() {
        if steps == budget {
            return Err(Error::NotInSpan(format!("iteration budget {budget} exceeded")));
        }
        steps += 1;
        if !lead.is_dominant() {
            return Err(Error::NotInSpan(format!("leading exponent {:?} is not a partition", lead.exponents())));
        }
        let lambda = Partition::new(lead.exponents().iter().map(|&e| e as u32).collect())?;
        let coef = coef.clone();
        rest = rest.checked_sub(&family.element(n, &lambda)?.scale(&coef))?;
        out.insert(lambda, coef);
    }
    Ok(out)
}

/// Number of partitions with at most `n` parts, each at most `m`: `C(m+n, n)`.
fn bounded_partition_count(n: usize, m: i32) -> usize {
    let m = m.max(0) as usize;
    (1..=n).fold(1usize, |acc, k| acc.saturating_mul(m + k) / k)
}
