use crate::bijections::{sot_corestrict, sot_extend};
use crate::combinat::{is_king_symplectic, is_semistandard, AlphabetKind, Letter, Tableau};
use crate::error::{check_index, Error, Result};

/// Type A Bender-Knuth involution on tableaux.
///
/// Vertical `{j, j+1}` dominoes are frozen; in each row the remaining word
/// `j^a (j+1)^b` becomes `j^b (j+1)^a`. Signed tableaux are handled through
/// their encoding in `[2n]`, so `j` ranges over `1..2n` there.
pub fn bk_a_tableau(t: &Tableau, j: usize) -> Result<Tableau> {
    if matches!(t.kind(), AlphabetKind::SignedInf(_)) {
        return Err(Error::WrongAlphabet { expected: "ssyt or king", found: "orthogonal".into() });
    }
    check_index(j, 1, t.kind().size().saturating_sub(1))?;
    if !is_semistandard(t) {
        return Err(Error::InvalidTableau("not semistandard".into()));
    }
    Ok(Tableau::from_parts_unchecked(t.kind(), bk_a_rows(t.rows(), j as u32)))
}

fn bk_a_rows(rows: &[Vec<Letter>], j: u32) -> Vec<Vec<Letter>> {
    let (lo, hi) = (Letter(j), Letter(j + 1));
    let mut out = rows.to_vec();
    for (r, row) in rows.iter().enumerate() {
        let mut free = Vec::new();
        let mut a = 0usize;
        for (c, &l) in row.iter().enumerate() {
            let frozen = if l == lo {
                rows.get(r + 1).and_then(|below| below.get(c)) == Some(&hi)
            } else if l == hi {
                r > 0 && rows[r - 1].get(c) == Some(&lo)
            } else {
                continue;
            };
            if !frozen {
                free.push(c);
                if l == lo {
                    a += 1;
                }
            }
        }
        let b = free.len() - a;
        for (k, &c) in free.iter().enumerate() {
            out[r][c] = if k < b { lo } else { hi };
        }
    }
    out
}

/// Tableau-level rectification between rows `j` and `j+1`: every vertical
/// domino with `j` above `j̄` becomes `j+1` above `j+1̄`, then both rows are
/// re-sorted.
fn rect_rows(rows: &mut [Vec<Letter>], j: u32) {
    let (top, bottom) = (j as usize - 1, j as usize);
    if bottom >= rows.len() {
        return;
    }
    let (unbar, bar) = (Letter::unbarred(j), Letter::barred(j));
    let (next_unbar, next_bar) = (Letter::unbarred(j + 1), Letter::barred(j + 1));
    for c in 0..rows[bottom].len() {
        if rows[top][c] == unbar && rows[bottom][c] == bar {
            rows[top][c] = next_unbar;
            rows[bottom][c] = next_bar;
        }
    }
    rows[top].sort();
    rows[bottom].sort();
}

/// Intermediate tableaux `T_1 .. T_4` and the rectified result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BkCTableauTrace {
    pub steps: [Tableau; 4],
    pub result: Tableau,
}

pub fn bk_c_tableau_traced(t: &Tableau, j: usize) -> Result<BkCTableauTrace> {
    if !is_king_symplectic(t)? {
        return Err(Error::InvalidTableau("not a King symplectic tableau".into()));
    }
    check_index(j, 1, t.kind().n().saturating_sub(1))?;
    let mut rows = t.rows().to_vec();
    let mut steps = Vec::with_capacity(4);
    for letter in [2 * j, 2 * j - 1, 2 * j + 1, 2 * j] {
        rows = bk_a_rows(&rows, letter as u32);
        steps.push(Tableau::from_parts_unchecked(t.kind(), rows.clone()));
    }
    rect_rows(&mut rows, j as u32);
    let result = Tableau::from_parts_unchecked(t.kind(), rows);
    if !is_king_symplectic(&result)? {
        return Err(Error::Structural(format!("rectified tableau is not symplectic:\n{result}")));
    }
    Ok(BkCTableauTrace { steps: steps.try_into().expect("four steps"), result })
}

/// Type C Bender-Knuth involution on King tableaux, `1 <= j <= n-1`.
pub fn bk_c_tableau(t: &Tableau, j: usize) -> Result<Tableau> {
    Ok(bk_c_tableau_traced(t, j)?.result)
}

/// `(1 1̄)` on King tableaux: the type A map exchanging `1` and `1̄`.
pub fn bk_first_tableau(t: &Tableau) -> Result<Tableau> {
    if !is_king_symplectic(t)? {
        return Err(Error::InvalidTableau("not a King symplectic tableau".into()));
    }
    bk_a_tableau(t, 1)
}

pub fn bk_c_generator_tableau(t: &Tableau, j: usize) -> Result<Tableau> {
    if j == 0 {
        bk_first_tableau(t)
    } else {
        bk_c_tableau(t, j)
    }
}

/// Type B involution on orthogonal tableaux: co-restrict, apply the type C
/// map for generator `j`, and put the `∞` cells back on the same rows.
pub fn bk_b_tableau(t: &Tableau, j: usize) -> Result<Tableau> {
    check_index(j, 0, t.kind().n().saturating_sub(1))?;
    let (king, _) = sot_corestrict(t)?;
    let mapped = bk_c_generator_tableau(&king, j)?;
    sot_extend(&mapped, t.shape())
}
