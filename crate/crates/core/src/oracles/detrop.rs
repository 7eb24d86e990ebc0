//! Detropicalized Bender-Knuth maps over positive rationals.
//!
//! `min` becomes a sum, `max` a harmonic-style sum of reciprocals, `+` a
//! product and `-` a quotient. Positions that are forced to vanish in a King
//! pattern are stored as absent; an absent entry plays the role of the
//! tropical zero below every live value. Consequently an absent
//! min-argument makes the result absent, absent max-arguments are dropped,
//! and an absent entry being replaced counts as `1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::combinat::{king_support, GTPattern};
use crate::error::{check_index, Error, Result};

/// Triangular array of positive rationals in the layout of [`GTPattern`]
/// (top row first); `None` marks an absent entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPattern {
    rows: Vec<Vec<Option<BigRational>>>,
}

impl RationalPattern {
    /// Rows must have lengths `N, N-1, .., 1` and every present entry must be
    /// positive.
    pub fn new(rows: Vec<Vec<Option<BigRational>>>) -> Result<Self> {
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n - r {
                return Err(Error::InvalidPattern(format!("row {} has {} entries", n - r, row.len())));
            }
            if row.iter().flatten().any(|x| !x.is_positive()) {
                return Err(Error::InvalidPattern("entries must be positive".into()));
            }
        }
        Ok(RationalPattern { rows })
    }

    /// Embeds an integer pattern entrywise; `absent` picks the positions to
    /// leave empty.
    pub fn from_gt(p: &GTPattern, absent: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = p.n_rows();
        let rows = (1..=n)
            .rev()
            .map(|k| {
                (1..=k)
                    .map(|i| (!absent(i, k)).then(|| BigRational::from_integer(p.get(i, k).unwrap().into())))
                    .collect()
            })
            .collect();
        Self::new(rows)
    }

    /// Random pattern with `2n` rows, King-supported entries drawn as `a/b`
    /// with `1 <= a, b <= max`, and the remaining entries absent.
    pub fn random_king<R: Rng>(n: usize, max: i64, rng: &mut R) -> Self {
        let m = 2 * n;
        let rows = (1..=m)
            .rev()
            .map(|k| {
                (1..=k)
                    .map(|i| {
                        king_support(i, k)
                            .then(|| BigRational::new(rng.gen_range(1..=max).into(), rng.gen_range(1..=max).into()))
                    })
                    .collect()
            })
            .collect();
        RationalPattern { rows }
    }

    /// Random pattern with `rows` rows and every entry present.
    pub fn random_full<R: Rng>(rows: usize, max: i64, rng: &mut R) -> Self {
        let rows = (1..=rows)
            .rev()
            .map(|k| {
                (1..=k)
                    .map(|_| Some(BigRational::new(rng.gen_range(1..=max).into(), rng.gen_range(1..=max).into())))
                    .collect()
            })
            .collect();
        RationalPattern { rows }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Option<BigRational>>] {
        &self.rows
    }

    /// `true` when `(i, k)` lies in the triangle, whether or not it is present.
    fn in_triangle(&self, i: usize, k: usize) -> bool {
        k >= 1 && k <= self.n_rows() && i >= 1 && i <= k
    }

    pub fn get(&self, i: usize, k: usize) -> Option<&BigRational> {
        if !self.in_triangle(i, k) {
            return None;
        }
        self.rows[self.n_rows() - k][i - 1].as_ref()
    }

    fn set(&mut self, i: usize, k: usize, v: Option<BigRational>) {
        let n = self.n_rows();
        self.rows[n - k][i - 1] = v;
    }
}

impl fmt::Display for RationalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> =
                row.iter().map(|x| x.as_ref().map_or_else(|| ".".to_string(), |v| v.to_string())).collect();
            write!(f, "{}{}", " ".repeat(r), cells.join(" "))?;
        }
        Ok(())
    }
}

fn bk_a_in_place(x: &mut RationalPattern, j: usize) {
    let new_row: Vec<Option<BigRational>> = (1..=j)
        .map(|i| {
            let mut sum = BigRational::zero();
            for (a, b) in [(i, j + 1), (i.wrapping_sub(1), j - 1)] {
                if x.in_triangle(a, b) {
                    sum += x.get(a, b)?;
                }
            }
            let recip: BigRational =
                [(i + 1, j + 1), (i, j - 1)].into_iter().filter_map(|(a, b)| x.get(a, b)).map(|v| v.recip()).sum();
            let harmonic = if recip.is_zero() { BigRational::one() } else { recip.recip() };
            let own = x.get(i, j).cloned().unwrap_or_else(BigRational::one);
            Some(sum * harmonic / own)
        })
        .collect();
    for (i, v) in new_row.into_iter().enumerate() {
        x.set(i + 1, j, v);
    }
}

/// Detropicalized type A involution on row `j`, `1 <= j < N`.
pub fn detrop_bk_a(x: &RationalPattern, j: usize) -> Result<RationalPattern> {
    check_index(j, 1, x.n_rows().saturating_sub(1))?;
    let mut out = x.clone();
    bk_a_in_place(&mut out, j);
    Ok(out)
}

/// Detropicalized type C involution: the four type A steps on rows `2j`,
/// `2j-1`, `2j+1`, `2j`, then division of `x_{j+1,2j}`, `x_{j+1,2j+1}`,
/// `x_{j,2j}` and `x_{j,2j-1}` by `v = x_{j+1,2j}`. The obstruction cell
/// keeps the presence it had in the input: absent again, or `1`.
pub fn detrop_bk_c(x: &RationalPattern, j: usize) -> Result<RationalPattern> {
    if !x.n_rows().is_multiple_of(2) {
        return Err(Error::InvalidPattern(format!("expected an even number of rows, got {}", x.n_rows())));
    }
    check_index(j, 1, (x.n_rows() / 2).saturating_sub(1))?;
    let obstruction_present = x.get(j + 1, 2 * j).is_some();
    let mut out = x.clone();
    for row in [2 * j, 2 * j - 1, 2 * j + 1, 2 * j] {
        bk_a_in_place(&mut out, row);
    }
    let v = out
        .get(j + 1, 2 * j)
        .cloned()
        .ok_or_else(|| Error::Structural(format!("entry ({}, {}) is absent before rect", j + 1, 2 * j)))?;
    for (i, k) in [(j + 1, 2 * j + 1), (j, 2 * j), (j, 2 * j - 1)] {
        let cur = out.get(i, k).cloned();
        out.set(i, k, cur.map(|c| c / &v));
    }
    out.set(j + 1, 2 * j, obstruction_present.then(BigRational::one));
    Ok(out)
}

/// Valuation probe: substitutes `x_{i,k} = t^{p_{i,k}}` with `t = 2^{-depth}`
/// and checks that every entry of row `j` after [`detrop_bk_a`] equals
/// `t^{p'_{i,j}}` up to a factor in `[1/4, 4]`, where `p'` is the type A
/// involution of `p`. Each sum of two powers of `t` is within a factor 2 of
/// its dominant term, which gives the bound.
pub fn tropical_limit_agrees(p: &GTPattern, j: usize, depth: u32) -> Result<bool> {
    let image = crate::benderknuth::bk_a_pattern(p, j)?;
    let t = BigRational::new(BigInt::one(), BigInt::from(2).pow(depth));
    let power = |e: i64| -> BigRational {
        if e >= 0 {
            num_traits::pow(t.clone(), e as usize)
        } else {
            num_traits::pow(t.recip(), (-e) as usize)
        }
    };
    let n = p.n_rows();
    let rows = (1..=n).rev().map(|k| (1..=k).map(|i| Some(power(p.get(i, k).unwrap()))).collect()).collect();
    let x = RationalPattern::new(rows)?;
    let y = detrop_bk_a(&x, j)?;
    let (lo, hi) = (BigRational::new(1.into(), 4.into()), BigRational::from_integer(4.into()));
    Ok((1..=j).all(|i| {
        let ratio = y.get(i, j).expect("full pattern") / power(image.get(i, j).unwrap());
        lo <= ratio && ratio <= hi
    }))
}
