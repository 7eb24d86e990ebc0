use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing tuple of nonnegative integers.
///
/// Trailing zeros are not stored; a partition is implicitly padded with
/// zeros to whatever ambient length it is used at.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i`-th part (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn check_fits(&self, n: usize) -> Result<()> {
        if self.length() > n {
            Err(Error::InvalidPartition(format!("{self} has more than {n} parts")))
        } else {
            Ok(())
        }
    }

    /// All partitions with at most `n` parts and size at most `max_size`,
    /// ordered by size and then lexicographically decreasing.
    pub fn all_up_to(n: usize, max_size: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        for size in 0..=max_size {
            let mut acc = Vec::new();
            partitions_of(size, size, n, &mut acc, &mut out);
        }
        out
    }

    /// Partitions `μ ⊆ self` obtained by removing at most one cell from each
    /// of the first `n` rows.
    pub fn remove_at_most_one_per_row(&self, n: usize) -> Vec<Partition> {
        let lam = self.padded(n);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let mut mu = lam.clone();
            let mut ok = true;
            for (i, m) in mu.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    if *m == 0 {
                        ok = false;
                        break;
                    }
                    *m -= 1;
                }
            }
            if ok {
                if let Ok(p) = Partition::new(mu) {
                    out.push(p);
                }
            }
        }
        out
    }
}

fn partitions_of(rest: u32, max_part: u32, slots: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(acc.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=rest.min(max_part)).rev() {
        acc.push(part);
        partitions_of(rest - part, part, slots - 1, acc, out);
        acc.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}
