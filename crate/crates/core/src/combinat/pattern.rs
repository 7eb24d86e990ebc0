use std::collections::BTreeSet;

use crate::algebra::Monomial;
use crate::combinat::Partition;
use crate::error::{Error, Result};

/// Gelfand-Tsetlin pattern stored as full triangular rows, top row first.
///
/// With `N` rows, row `k` (1-based, counted from the bottom) has `k`
/// entries `p_{1,k} .. p_{k,k}`. Forced zeros of King patterns are stored
/// like any other entry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GTPattern {
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    /// Checks only the triangular layout; see [`validate_gt`] for the
    /// inequalities.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (t, r) in rows.iter().enumerate() {
            if r.len() != n - t {
                return Err(Error::InvalidPattern(format!(
                    "row {} has {} entries, expected {}",
                    n - t,
                    r.len(),
                    n - t
                )));
            }
        }
        Ok(GTPattern { rows })
    }

    /// Like [`GTPattern::new`] but pads short rows with zeros, accepting the
    /// half-triangular display where forced zeros are omitted.
    pub fn from_padded_rows(mut rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (t, r) in rows.iter_mut().enumerate() {
            if r.len() > n - t {
                return Err(Error::InvalidPattern(format!("row {} has more than {} entries", n - t, n - t)));
            }
            r.resize(n - t, 0);
        }
        Ok(GTPattern { rows })
    }

    pub fn zero(n_rows: usize) -> Self {
        GTPattern { rows: (0..n_rows).map(|t| vec![0; n_rows - t]).collect() }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Rows, top row first.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<i64>> {
        self.rows
    }

    /// Row `k` (1-based from the bottom).
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[self.rows.len() - k]
    }

    pub fn top_row(&self) -> &[i64] {
        self.rows.first().map_or(&[], |r| r.as_slice())
    }

    /// `p_{i,k}`, or `None` outside the triangle.
    pub fn get(&self, i: usize, k: usize) -> Option<i64> {
        if k == 0 || k > self.rows.len() || i == 0 || i > k {
            return None;
        }
        Some(self.rows[self.rows.len() - k][i - 1])
    }

    pub fn set(&mut self, i: usize, k: usize, v: i64) {
        let n = self.rows.len();
        assert!(k >= 1 && k <= n && i >= 1 && i <= k, "position ({i},{k}) outside a {n}-row pattern");
        self.rows[n - k][i - 1] = v;
    }

    pub(crate) fn row_mut(&mut self, k: usize) -> &mut Vec<i64> {
        let n = self.rows.len();
        &mut self.rows[n - k]
    }

    /// `S_k`, with `S_0 = 0`.
    pub fn row_sum(&self, k: usize) -> i64 {
        if k == 0 {
            0
        } else {
            self.row(k).iter().sum()
        }
    }

    /// Top row as a partition, if it is one.
    pub fn shape(&self) -> Result<Partition> {
        let parts = self
            .top_row()
            .iter()
            .map(|&v| u32::try_from(v).map_err(|_| Error::InvalidPattern(format!("negative entry {v}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// Positions `(i, k)` where `self` and `other` differ.
    pub fn diff_positions(&self, other: &GTPattern) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in 1..=self.n_rows().min(other.n_rows()) {
            for i in 1..=k {
                if self.get(i, k) != other.get(i, k) {
                    out.push((i, k));
                }
            }
        }
        out
    }
}

/// Whether King's support condition allows `p_{i,k} != 0`, i.e. `i <= ⌈k/2⌉`.
pub fn king_support(i: usize, k: usize) -> bool {
    i <= k.div_ceil(2)
}

/// Nonnegativity and interlacing `p_{i,k+1} >= p_{i,k} >= p_{i+1,k+1}`.
pub fn validate_gt(p: &GTPattern) -> bool {
    let n = p.n_rows();
    for k in 1..=n {
        for i in 1..=k {
            let v = p.get(i, k).unwrap();
            if v < 0 {
                return false;
            }
            if k < n && (v > p.get(i, k + 1).unwrap() || v < p.get(i + 1, k + 1).unwrap()) {
                return false;
            }
        }
    }
    true
}

/// Even number of rows, GT inequalities, and `p_{i,k} = 0` for `i > ⌈k/2⌉`.
pub fn validate_king(p: &GTPattern) -> bool {
    p.n_rows().is_multiple_of(2) && validate_gt(p) && forced_zeros_vanish(p, None)
}

/// Every position outside King's support holds zero, except possibly `skip`.
pub(crate) fn forced_zeros_vanish(p: &GTPattern, skip: Option<(usize, usize)>) -> bool {
    (1..=p.n_rows())
        .flat_map(|k| (1..=k).map(move |i| (i, k)))
        .filter(|&(i, k)| !king_support(i, k) && Some((i, k)) != skip)
        .all(|(i, k)| p.get(i, k) == Some(0))
}

/// King pattern plus a valid circled set whose derived shape is a partition.
pub fn validate_orthogonal(p: &GTPattern, circled: &BTreeSet<usize>) -> bool {
    validate_king(p)
        && circled.iter().all(|&i| i >= 1 && i <= p.n_rows() / 2)
        && shape_of_orthogonal(p, circled).is_ok()
}

/// `λ_i = p_{i,N} + 1` for circled `i`, `p_{i,N}` otherwise.
pub fn shape_of_orthogonal(p: &GTPattern, circled: &BTreeSet<usize>) -> Result<Partition> {
    let mut parts: Vec<u32> = p.shape()?.padded(p.n_rows());
    for &i in circled {
        if i == 0 || i > parts.len() {
            return Err(Error::InvalidPattern(format!("circled index {i} outside the top row")));
        }
        parts[i - 1] += 1;
    }
    Partition::new(parts).map_err(|e| Error::InvalidPattern(format!("circled shape: {e}")))
}

/// `x^P` with `x_j^{S_j - S_{j-1}}`.
pub fn weight_pattern_a(p: &GTPattern) -> Monomial {
    Monomial((1..=p.n_rows()).map(|j| (p.row_sum(j) - p.row_sum(j - 1)) as i32).collect())
}

/// `x^P` with `x_j^{2 S_{2j-1} - S_{2j} - S_{2j-2}}`.
pub fn weight_pattern_bc(p: &KingPattern) -> Monomial {
    weight_bc_raw(p.as_gt())
}

/// Type B/C weight formula for any pattern with an even number of rows;
/// used on intermediate, not necessarily symplectic, patterns.
pub(crate) fn weight_bc_raw(p: &GTPattern) -> Monomial {
    let n = p.n_rows() / 2;
    Monomial((1..=n).map(|j| (2 * p.row_sum(2 * j - 1) - p.row_sum(2 * j) - p.row_sum(2 * j - 2)) as i32).collect())
}

/// King symplectic pattern with `2n` rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KingPattern {
    gt: GTPattern,
}

impl KingPattern {
    pub fn new(gt: GTPattern) -> Result<Self> {
        if !validate_king(&gt) {
            return Err(Error::InvalidPattern("not a King symplectic pattern".into()));
        }
        Ok(KingPattern { gt })
    }

    /// Half-triangular rows (forced zeros may be omitted), top row first.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(GTPattern::from_padded_rows(rows)?)
    }

    pub(crate) fn new_unchecked(gt: GTPattern) -> Self {
        debug_assert!(validate_king(&gt));
        KingPattern { gt }
    }

    /// Number of variables, half the number of rows.
    pub fn n(&self) -> usize {
        self.gt.n_rows() / 2
    }

    pub fn as_gt(&self) -> &GTPattern {
        &self.gt
    }

    pub fn into_gt(self) -> GTPattern {
        self.gt
    }

    pub fn shape(&self) -> Partition {
        self.gt.shape().expect("valid patterns have partition top rows")
    }

    pub fn get(&self, i: usize, k: usize) -> Option<i64> {
        self.gt.get(i, k)
    }

    pub fn weight(&self) -> Monomial {
        weight_pattern_bc(self)
    }
}

/// King pattern whose top-row entries may be circled.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrthogonalPattern {
    king: KingPattern,
    circled: BTreeSet<usize>,
}

impl OrthogonalPattern {
    pub fn new(king: KingPattern, circled: BTreeSet<usize>) -> Result<Self> {
        if !validate_orthogonal(king.as_gt(), &circled) {
            return Err(Error::InvalidPattern(format!("circled set {circled:?} does not give a valid shape")));
        }
        Ok(OrthogonalPattern { king, circled })
    }

    pub fn king(&self) -> &KingPattern {
        &self.king
    }

    pub fn circled(&self) -> &BTreeSet<usize> {
        &self.circled
    }

    pub fn n(&self) -> usize {
        self.king.n()
    }

    pub fn shape(&self) -> Partition {
        shape_of_orthogonal(self.king.as_gt(), &self.circled).expect("validated at construction")
    }

    /// Circles carry weight `x_∞ = 1`, so this is the weight of the
    /// underlying King pattern.
    pub fn weight(&self) -> Monomial {
        self.king.weight()
    }
}
