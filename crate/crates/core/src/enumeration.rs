//! Exhaustive generation of patterns and the generating functions
//! `s_λ`, `sp_λ` and `o_λ`.
//!
//! Patterns are produced by a streaming odometer over the rows below the top
//! one. Positions are ordered top row first and left to right within a row,
//! so successive patterns increase lexicographically in their concatenated
//! rows.

use crate::algebra::LaurentPolynomial;
use crate::bijections::sop_mark;
use crate::combinat::{
    is_king_symplectic, is_semistandard, is_sundaram_orthogonal, king_support, weight_pattern_a, AlphabetKind,
    GTPattern, KingPattern, Letter, OrthogonalPattern, Partition, Tableau,
};
use crate::error::Result;

/// Odometer over GT patterns with a fixed top row. `restricted` applies the
/// King support condition to every row below the top.
struct Odometer {
    current: Option<GTPattern>,
    restricted: bool,
    started: bool,
}

impl Odometer {
    fn new(top: Vec<i64>, restricted: bool) -> Self {
        let n = top.len();
        let mut p = GTPattern::zero(n);
        for (i, &v) in top.iter().enumerate() {
            p.set(i + 1, n, v);
        }
        let mut od = Odometer { current: None, restricted, started: false };
        if n > 0 {
            od.fill_from(&mut p, n - 1, 1);
        }
        od.current = Some(p);
        od
    }

    fn upper(&self, p: &GTPattern, i: usize, k: usize) -> i64 {
        if self.restricted && !king_support(i, k) {
            0
        } else {
            p.get(i, k + 1).unwrap()
        }
    }

    fn lower(p: &GTPattern, i: usize, k: usize) -> i64 {
        p.get(i + 1, k + 1).unwrap()
    }

    /// Sets every position from `(i, k)` onward to its minimum.
    fn fill_from(&self, p: &mut GTPattern, k: usize, i: usize) {
        for row in (1..=k).rev() {
            let start = if row == k { i } else { 1 };
            for col in start..=row {
                let v = Self::lower(p, col, row);
                p.set(col, row, v);
            }
        }
    }

    fn advance(&mut self) -> bool {
        let Some(mut p) = self.current.take() else { return false };
        let n = p.n_rows();
        for k in 1..n {
            for i in (1..=k).rev() {
                let v = p.get(i, k).unwrap();
                if v < self.upper(&p, i, k) {
                    p.set(i, k, v + 1);
                    if i < k {
                        self.fill_from(&mut p, k, i + 1);
                    } else if k > 1 {
                        self.fill_from(&mut p, k - 1, 1);
                    }
                    self.current = Some(p);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for Odometer {
    type Item = GTPattern;

    fn next(&mut self) -> Option<GTPattern> {
        if self.started {
            if !self.advance() {
                return None;
            }
        } else {
            self.started = true;
        }
        self.current.clone()
    }
}

/// All GT patterns with `n` rows and top row `λ` (zero-padded), in
/// lexicographic order of their rows.
pub fn enum_gt(n: usize, lambda: &Partition) -> Result<impl Iterator<Item = GTPattern>> {
    lambda.check_fits(n)?;
    Ok(Odometer::new(to_row(lambda, n), false))
}

/// All King patterns with `2n` rows and top row `λ`.
pub fn enum_king(n: usize, lambda: &Partition) -> Result<impl Iterator<Item = KingPattern>> {
    lambda.check_fits(n)?;
    Ok(Odometer::new(to_row(lambda, 2 * n), true).map(KingPattern::new_unchecked))
}

/// All orthogonal patterns of shape `λ`: King patterns of every top row `μ`
/// with `λ_i - μ_i ∈ {0, 1}`, circled where the difference is 1.
pub fn enum_orthogonal(n: usize, lambda: &Partition) -> Result<impl Iterator<Item = OrthogonalPattern>> {
    lambda.check_fits(n)?;
    let lambda = lambda.clone();
    let mut mus = lambda.remove_at_most_one_per_row(n);
    mus.sort_by_key(|m| std::cmp::Reverse(m.padded(n)));
    Ok(mus.into_iter().flat_map(move |mu| {
        let lambda = lambda.clone();
        enum_king(n, &mu)
            .expect("sub-partition fits")
            .map(move |k| sop_mark(&k, &lambda).expect("μ differs from λ by at most one per row"))
    }))
}

fn to_row(lambda: &Partition, len: usize) -> Vec<i64> {
    lambda.padded(len).into_iter().map(i64::from).collect()
}

pub fn schur(n: usize, lambda: &Partition) -> Result<LaurentPolynomial> {
    let mut f = LaurentPolynomial::zero(n);
    for p in enum_gt(n, lambda)? {
        f.add_term(weight_pattern_a(&p), 1.into());
    }
    Ok(f)
}

pub fn symplectic(n: usize, lambda: &Partition) -> Result<LaurentPolynomial> {
    let mut f = LaurentPolynomial::zero(n);
    for p in enum_king(n, lambda)? {
        f.add_term(p.weight(), 1.into());
    }
    Ok(f)
}

pub fn orthogonal(n: usize, lambda: &Partition) -> Result<LaurentPolynomial> {
    let mut f = LaurentPolynomial::zero(n);
    for p in enum_orthogonal(n, lambda)? {
        f.add_term(p.weight(), 1.into());
    }
    Ok(f)
}

/// Tableau-side oracle: fills the cells of `shape` one at a time in reading
/// order, keeping rows weakly and columns strictly increasing, then filters
/// by the alphabet's validator. Independent of the pattern odometer.
pub fn enumerate_tableaux(kind: AlphabetKind, shape: &Partition) -> Vec<Tableau> {
    let mut letters: Vec<Letter> = (1..=kind.size() as u32).map(Letter).collect();
    if matches!(kind, AlphabetKind::SignedInf(_)) {
        letters.push(Letter::INF);
    }
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<Letter>> = shape.parts().iter().map(|&len| Vec::with_capacity(len as usize)).collect();
    let mut out = Vec::new();
    fill(kind, &letters, &cells, 0, &mut rows, &mut out);
    out
}

fn fill(
    kind: AlphabetKind,
    letters: &[Letter],
    cells: &[(usize, usize)],
    idx: usize,
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<Tableau>,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        let t = Tableau::from_parts_unchecked(kind, rows.clone());
        let ok = match kind {
            AlphabetKind::TypeA(_) => is_semistandard(&t),
            AlphabetKind::Signed(_) => is_king_symplectic(&t).unwrap_or(false),
            AlphabetKind::SignedInf(_) => is_sundaram_orthogonal(&t).unwrap_or(false),
        };
        if ok {
            out.push(t);
        }
        return;
    };
    for &l in letters {
        if c > 0 && rows[r][c - 1] > l {
            continue;
        }
        // ∞ cells are exempt from column strictness
        if r > 0 && !l.is_inf() && rows[r - 1][c] >= l {
            continue;
        }
        rows[r].push(l);
        fill(kind, letters, cells, idx + 1, rows, out);
        rows[r].pop();
    }
}
