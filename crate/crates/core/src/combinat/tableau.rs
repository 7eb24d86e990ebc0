use std::fmt;

use crate::algebra::Monomial;
use crate::combinat::{Letter, Partition};
use crate::error::{Error, Result};

/// Alphabet a tableau is filled from, with the number of variables `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlphabetKind {
    /// `[n] = {1 < ... < n}`.
    TypeA(usize),
    /// `{1 < 1̄ < ... < n < n̄}`.
    Signed(usize),
    /// The signed alphabet with `∞` on top.
    SignedInf(usize),
}

impl AlphabetKind {
    pub fn n(self) -> usize {
        match self {
            AlphabetKind::TypeA(n) | AlphabetKind::Signed(n) | AlphabetKind::SignedInf(n) => n,
        }
    }

    /// Number of finite letters.
    pub fn size(self) -> usize {
        match self {
            AlphabetKind::TypeA(n) => n,
            AlphabetKind::Signed(n) | AlphabetKind::SignedInf(n) => 2 * n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlphabetKind::TypeA(_) => "ssyt",
            AlphabetKind::Signed(_) => "king",
            AlphabetKind::SignedInf(_) => "orthogonal",
        }
    }

    fn admits(self, l: Letter) -> bool {
        if l.is_inf() {
            return matches!(self, AlphabetKind::SignedInf(_));
        }
        l.0 >= 1 && l.0 as usize <= self.size()
    }
}

/// Filling of a Young diagram, stored row by row (English convention).
///
/// Rows are nonempty and their lengths form the shape, so the domain of the
/// filling is exactly the set of cells of the shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    kind: AlphabetKind,
    shape: Partition,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    /// Checks that row lengths are weakly decreasing and every letter
    /// belongs to the alphabet. Trailing empty rows are dropped.
    pub fn new(kind: AlphabetKind, mut rows: Vec<Vec<Letter>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let lens: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let shape = Partition::new(lens).map_err(|e| Error::InvalidTableau(e.to_string()))?;
        if shape.length() != rows.len() {
            return Err(Error::InvalidTableau("empty row above a nonempty row".into()));
        }
        for l in rows.iter().flatten() {
            if !kind.admits(*l) {
                return Err(Error::InvalidTableau(format!(
                    "letter {} not in the {} alphabet on {} letters",
                    l.to_signed_string(),
                    kind.name(),
                    kind.n()
                )));
            }
        }
        Ok(Tableau { kind, shape, rows })
    }

    pub fn empty(kind: AlphabetKind) -> Self {
        Tableau { kind, shape: Partition::empty(), rows: Vec::new() }
    }

    /// Type A tableau from numeric rows.
    pub fn type_a(n: usize, rows: &[&[u32]]) -> Result<Self> {
        Self::new(AlphabetKind::TypeA(n), rows.iter().map(|r| r.iter().map(|&k| Letter(k)).collect()).collect())
    }

    /// Signed tableau from string rows such as `["1", "2b", "inf"]`.
    pub fn signed(kind: AlphabetKind, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| Letter::parse_signed(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, rows)
    }

    pub fn kind(&self) -> AlphabetKind {
        self.kind
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Letter>> {
        self.rows
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, Letter)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &l)| (i + 1, j + 1, l)))
    }

    /// Same cells reinterpreted over another alphabet.
    pub fn with_kind(&self, kind: AlphabetKind) -> Result<Self> {
        Self::new(kind, self.rows.clone())
    }

    pub(crate) fn from_parts_unchecked(kind: AlphabetKind, rows: Vec<Vec<Letter>>) -> Self {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).expect("rows form a partition");
        Tableau { kind, shape, rows }
    }

    pub fn letter_string(&self, l: Letter) -> String {
        match self.kind {
            AlphabetKind::TypeA(_) => l.0.to_string(),
            _ => l.to_signed_string(),
        }
    }
}

impl fmt::Display for Tableau {
    /// One line per row, letters separated by spaces; barred letters as `3b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|&l| self.letter_string(l)).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// Rows weakly increase to the right, columns strictly increase downward.
pub fn is_semistandard(t: &Tableau) -> bool {
    let rows = t.rows();
    rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
        && rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below))
}

/// King's condition: semistandard over the signed alphabet with every entry
/// of row `i` at least the unbarred letter `i`.
pub fn is_king_symplectic(t: &Tableau) -> Result<bool> {
    if !matches!(t.kind(), AlphabetKind::Signed(_)) {
        return Err(Error::WrongAlphabet { expected: "king", found: t.kind().name().into() });
    }
    Ok(is_king_rows(t.rows()))
}

fn is_king_rows(rows: &[Vec<Letter>]) -> bool {
    let t = Tableau::from_parts_unchecked(AlphabetKind::Signed(0), rows.to_vec());
    is_semistandard(&t)
        && rows.iter().enumerate().all(|(i, r)| r.iter().all(|l| l.0 >= Letter::unbarred(i as u32 + 1).0))
}

/// Sundaram's condition: at most one `∞` per row, in its right-most cell,
/// and the co-restriction to finite letters is a King tableau of partition
/// shape.
pub fn is_sundaram_orthogonal(t: &Tableau) -> Result<bool> {
    if !matches!(t.kind(), AlphabetKind::SignedInf(_)) {
        return Err(Error::WrongAlphabet { expected: "orthogonal", found: t.kind().name().into() });
    }
    let mut finite = Vec::with_capacity(t.rows().len());
    for row in t.rows() {
        let infs = row.iter().filter(|l| l.is_inf()).count();
        if infs > 1 || (infs == 1 && !row.last().is_some_and(|l| l.is_inf())) {
            return Ok(false);
        }
        finite.push(row.iter().copied().filter(|l| !l.is_inf()).collect::<Vec<_>>());
    }
    while finite.last().is_some_and(|r| r.is_empty()) {
        finite.pop();
    }
    let lens: Vec<u32> = finite.iter().map(|r| r.len() as u32).collect();
    if lens.contains(&0) || Partition::new(lens).is_err() {
        return Ok(false);
    }
    Ok(is_king_rows(&finite))
}

/// `x^T` with `x_ī = x_i^{-1}` and `x_∞ = 1`.
pub fn weight_tableau(t: &Tableau) -> Monomial {
    let n = t.kind().n();
    let mut exps = vec![0i32; n];
    for row in t.rows() {
        for &l in row {
            match t.kind() {
                AlphabetKind::TypeA(_) => exps[l.0 as usize - 1] += 1,
                _ if l.is_inf() => {}
                _ => {
                    let (i, bar) = l.signed();
                    exps[i as usize - 1] += if bar { -1 } else { 1 };
                }
            }
        }
    }
    Monomial(exps)
}
