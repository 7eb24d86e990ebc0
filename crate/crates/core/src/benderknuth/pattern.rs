use crate::combinat::pattern::forced_zeros_vanish;
use crate::combinat::{validate_gt, GTPattern, KingPattern, OrthogonalPattern};
use crate::error::{check_index, Error, Result};

/// Replaces row `j` by `min{p_{i,j+1}, p_{i-1,j-1}} + max{p_{i+1,j+1}, p_{i,j-1}} - p_{i,j}`,
/// dropping neighbours that fall outside the triangle. No validation.
fn bk_a_in_place(p: &mut GTPattern, j: usize) {
    let new_row: Vec<i64> = (1..=j)
        .map(|i| {
            let mut lo = p.get(i, j + 1).expect("row above exists");
            if let Some(v) = p.get(i.wrapping_sub(1), j - 1) {
                lo = lo.min(v);
            }
            let mut hi = p.get(i + 1, j + 1).expect("row above exists");
            if let Some(v) = p.get(i, j - 1) {
                hi = hi.max(v);
            }
            lo + hi - p.get(i, j).unwrap()
        })
        .collect();
    *p.row_mut(j) = new_row;
}

/// Type A Bender-Knuth involution on row `j` of a GT pattern, `1 <= j < N`.
///
/// Realizes the transposition `(j j+1)` on weights.
pub fn bk_a_pattern(p: &GTPattern, j: usize) -> Result<GTPattern> {
    check_index(j, 1, p.n_rows().saturating_sub(1))?;
    if !validate_gt(p) {
        return Err(Error::InvalidPattern("not a Gelfand-Tsetlin pattern".into()));
    }
    let mut out = p.clone();
    bk_a_in_place(&mut out, j);
    Ok(out)
}

/// Intermediate patterns of the type C composite: after `BK_{2j}`,
/// `BK_{2j-1}`, `BK_{2j+1}` and `BK_{2j}` again, in that order.
pub fn four_fold_composite(p: &GTPattern, j: usize) -> [GTPattern; 4] {
    let mut cur = p.clone();
    let mut steps: Vec<GTPattern> = Vec::with_capacity(4);
    for row in [2 * j, 2 * j - 1, 2 * j + 1, 2 * j] {
        bk_a_in_place(&mut cur, row);
        steps.push(cur.clone());
    }
    steps.try_into().expect("four steps")
}

/// Rectification: subtracts `v = p_{j+1,2j}` from `p_{j+1,2j}`,
/// `p_{j+1,2j+1}`, `p_{j,2j}` and `p_{j,2j-1}`.
///
/// The input must have every King forced-zero position equal to zero except
/// possibly `(j+1, 2j)`.
pub fn rect_pattern(p: &GTPattern, j: usize) -> Result<KingPattern> {
    if !p.n_rows().is_multiple_of(2) {
        return Err(Error::Structural(format!("rect needs an even number of rows, got {}", p.n_rows())));
    }
    check_index(j, 1, (p.n_rows() / 2).saturating_sub(1))?;
    if !validate_gt(p) {
        return Err(Error::Structural("rect input is not a Gelfand-Tsetlin pattern".into()));
    }
    if !forced_zeros_vanish(p, Some((j + 1, 2 * j))) {
        return Err(Error::Structural(format!("forced-zero entries other than ({}, {}) are nonzero", j + 1, 2 * j)));
    }
    let v = p.get(j + 1, 2 * j).unwrap();
    let mut out = p.clone();
    for (i, k) in [(j + 1, 2 * j), (j + 1, 2 * j + 1), (j, 2 * j), (j, 2 * j - 1)] {
        out.set(i, k, out.get(i, k).unwrap() - v);
    }
    KingPattern::new(out).map_err(|e| Error::Structural(format!("rect output: {e}")))
}

/// Result of a traced type C involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BkCTrace {
    /// `P_1 .. P_4`, before rectification.
    pub steps: [GTPattern; 4],
    pub result: KingPattern,
}

pub fn bk_c_pattern_traced(p: &KingPattern, j: usize) -> Result<BkCTrace> {
    check_index(j, 1, p.n().saturating_sub(1))?;
    let steps = four_fold_composite(p.as_gt(), j);
    let result = rect_pattern(&steps[3], j)?;
    Ok(BkCTrace { steps, result })
}

/// Type C Bender-Knuth involution `rect ∘ BK_{2j} ∘ BK_{2j+1} ∘ BK_{2j-1} ∘ BK_{2j}`,
/// `1 <= j <= n-1`. Swaps `x_j` and `x_{j+1}` on weights.
pub fn bk_c_pattern(p: &KingPattern, j: usize) -> Result<KingPattern> {
    Ok(bk_c_pattern_traced(p, j)?.result)
}

/// `BK_1` on a King pattern, realizing `(1 1̄)`: `x_1 -> x_1^{-1}`.
pub fn bk_first_pattern(p: &KingPattern) -> Result<KingPattern> {
    if p.n() == 0 {
        return Err(Error::IndexOutOfRange { index: 0, lo: 1, hi: 0 });
    }
    let mut out = p.as_gt().clone();
    bk_a_in_place(&mut out, 1);
    KingPattern::new(out).map_err(|e| Error::Structural(format!("bk_first output: {e}")))
}

/// Generator-indexed type C map: `j = 0` is [`bk_first_pattern`], otherwise
/// [`bk_c_pattern`].
pub fn bk_c_generator(p: &KingPattern, j: usize) -> Result<KingPattern> {
    if j == 0 {
        bk_first_pattern(p)
    } else {
        bk_c_pattern(p, j)
    }
}

/// Type B involution: forget circles, apply the type C map for generator
/// `j` (`0 <= j <= n-1`), then put the same circles back.
pub fn bk_b(p: &OrthogonalPattern, j: usize) -> Result<OrthogonalPattern> {
    check_index(j, 0, p.n().saturating_sub(1))?;
    let king = bk_c_generator(p.king(), j)?;
    OrthogonalPattern::new(king, p.circled().clone())
        .map_err(|e| Error::Structural(format!("circles could not be restored: {e}")))
}
