//! Weight-preserving conversions between tableaux and patterns.
//!
//! Signed tableaux go through the order-preserving encoding of the signed
//! alphabet into `[2n]`, so a King tableau is a semistandard tableau on
//! `2n` letters and its pattern has `2n` rows.

use std::collections::BTreeSet;

use crate::combinat::{
    is_king_symplectic, is_semistandard, is_sundaram_orthogonal, validate_gt, AlphabetKind, GTPattern, KingPattern,
    Letter, OrthogonalPattern, Partition, Tableau,
};
use crate::error::{Error, Result};

/// `p_{i,k}` = number of entries `<= k` in row `i`.
///
/// Type A tableaux on `n` letters give `n` rows; signed tableaux give `2n`.
pub fn tableau_to_pattern(t: &Tableau) -> Result<GTPattern> {
    let m = match t.kind() {
        AlphabetKind::TypeA(n) => n,
        AlphabetKind::Signed(n) => 2 * n,
        AlphabetKind::SignedInf(_) => {
            return Err(Error::WrongAlphabet { expected: "ssyt or king", found: "orthogonal".into() })
        }
    };
    if !is_semistandard(t) {
        return Err(Error::InvalidTableau("not semistandard".into()));
    }
    if t.rows().len() > m {
        return Err(Error::InvalidTableau(format!("more than {m} rows")));
    }
    let mut p = GTPattern::zero(m);
    for (r, row) in t.rows().iter().enumerate() {
        let i = r + 1;
        // row is sorted, so counts are a running tally
        let mut idx = 0usize;
        for k in i..=m {
            while idx < row.len() && row[idx].0 as usize <= k {
                idx += 1;
            }
            p.set(i, k, idx as i64);
        }
    }
    Ok(p)
}

/// Inverse of [`tableau_to_pattern`]: row `i` holds letter `k` in columns
/// `p_{i,k-1} + 1 ..= p_{i,k}`. The result is over `[N]` for an `N`-row
/// pattern.
pub fn pattern_to_tableau(p: &GTPattern) -> Result<Tableau> {
    if !validate_gt(p) {
        return Err(Error::InvalidPattern("not a Gelfand-Tsetlin pattern".into()));
    }
    Ok(Tableau::from_parts_unchecked(AlphabetKind::TypeA(p.n_rows()), fill_rows(p)))
}

fn fill_rows(p: &GTPattern) -> Vec<Vec<Letter>> {
    let m = p.n_rows();
    let mut rows = Vec::new();
    for i in 1..=m {
        let len = p.get(i, m).unwrap();
        if len == 0 {
            break;
        }
        let mut row = Vec::with_capacity(len as usize);
        let mut prev = 0;
        for k in i..=m {
            let cur = p.get(i, k).unwrap();
            row.extend(std::iter::repeat_n(Letter(k as u32), (cur - prev) as usize));
            prev = cur;
        }
        rows.push(row);
    }
    rows
}

pub fn king_tableau_to_pattern(t: &Tableau) -> Result<KingPattern> {
    if !is_king_symplectic(t)? {
        return Err(Error::InvalidTableau("not a King symplectic tableau".into()));
    }
    KingPattern::new(tableau_to_pattern(t)?)
}

pub fn king_pattern_to_tableau(p: &KingPattern) -> Tableau {
    Tableau::from_parts_unchecked(AlphabetKind::Signed(p.n()), fill_rows(p.as_gt()))
}

/// Drops the `∞` cells, returning the King tableau and the 1-based rows that
/// lost a cell.
pub fn sot_corestrict(t: &Tableau) -> Result<(Tableau, BTreeSet<usize>)> {
    if !is_sundaram_orthogonal(t)? {
        return Err(Error::InvalidTableau("not a Sundaram orthogonal tableau".into()));
    }
    let mut inf_rows = BTreeSet::new();
    let mut rows = Vec::new();
    for (r, row) in t.rows().iter().enumerate() {
        if row.last().is_some_and(|l| l.is_inf()) {
            inf_rows.insert(r + 1);
        }
        rows.push(row.iter().copied().filter(|l| !l.is_inf()).collect::<Vec<_>>());
    }
    Ok((Tableau::new(AlphabetKind::Signed(t.kind().n()), rows)?, inf_rows))
}

/// Appends `∞` to each row `i` with `λ_i = μ_i + 1`.
pub fn sot_extend(t: &Tableau, lambda: &Partition) -> Result<Tableau> {
    let n = match t.kind() {
        AlphabetKind::Signed(n) => n,
        k => return Err(Error::WrongAlphabet { expected: "king", found: k.name().into() }),
    };
    let mu = t.shape();
    let len = n.max(lambda.length()).max(mu.length());
    let extra = row_increments(mu, lambda, len)?;
    let mut rows = t.rows().to_vec();
    rows.resize(len, Vec::new());
    for (row, add) in rows.iter_mut().zip(extra) {
        if add {
            row.push(Letter::INF);
        }
    }
    Tableau::new(AlphabetKind::SignedInf(n), rows)
}

/// For each row, whether `λ_i = μ_i + 1`; errors unless every difference is 0 or 1.
fn row_increments(mu: &Partition, lambda: &Partition, len: usize) -> Result<Vec<bool>> {
    (1..=len)
        .map(|i| match lambda.part(i) as i64 - mu.part(i) as i64 {
            0 => Ok(false),
            1 => Ok(true),
            d => Err(Error::ShapeMismatch(format!("λ_{i} - μ_{i} = {d} for λ = {lambda}, μ = {mu}"))),
        })
        .collect()
}

pub fn sop_forget(p: &OrthogonalPattern) -> KingPattern {
    p.king().clone()
}

/// Circles exactly the rows with `λ_i = μ_i + 1`, where `μ` is the top row.
pub fn sop_mark(p: &KingPattern, lambda: &Partition) -> Result<OrthogonalPattern> {
    let n = p.n();
    if lambda.length() > n {
        return Err(Error::ShapeMismatch(format!("{lambda} has more than {n} parts")));
    }
    let circled = row_increments(&p.shape(), lambda, n)?
        .into_iter()
        .enumerate()
        .filter_map(|(i, c)| c.then_some(i + 1))
        .collect();
    OrthogonalPattern::new(p.clone(), circled)
}

/// Orthogonal tableau to orthogonal pattern through the co-restriction.
pub fn sot_to_pattern(t: &Tableau) -> Result<OrthogonalPattern> {
    let (king, inf_rows) = sot_corestrict(t)?;
    OrthogonalPattern::new(king_tableau_to_pattern(&king)?, inf_rows)
}

pub fn pattern_to_sot(p: &OrthogonalPattern) -> Result<Tableau> {
    sot_extend(&king_pattern_to_tableau(p.king()), &p.shape())
}
