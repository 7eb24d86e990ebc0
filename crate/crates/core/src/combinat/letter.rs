use std::fmt;

use crate::error::{Error, Result};

/// A tableau entry.
///
/// Type A letters are stored as themselves (`1..=n`). Letters of the signed
/// alphabet `1 < 1̄ < 2 < 2̄ < ... < n < n̄` use the order-preserving encoding
/// `i -> 2i-1`, `ī -> 2i`, so that signed tableaux are ordinary tableaux on
/// `[2n]`. The sentinel [`Letter::INF`] sits above every other letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub const INF: Letter = Letter(u32::MAX);

    pub fn unbarred(i: u32) -> Self {
        Letter(2 * i - 1)
    }

    pub fn barred(i: u32) -> Self {
        Letter(2 * i)
    }

    pub fn is_inf(self) -> bool {
        self == Self::INF
    }

    pub fn encoded(self) -> u32 {
        self.0
    }

    /// Signed reading: `(i, barred)`. Meaningless for `INF`.
    pub fn signed(self) -> (u32, bool) {
        (self.0.div_ceil(2), self.0.is_multiple_of(2))
    }

    /// Serialized form in the signed alphabet: `"3"`, `"3b"`, `"inf"`.
    pub fn to_signed_string(self) -> String {
        if self.is_inf() {
            return "inf".into();
        }
        let (i, bar) = self.signed();
        if bar {
            format!("{i}b")
        } else {
            i.to_string()
        }
    }

    pub fn parse_signed(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Self::INF);
        }
        let (digits, bar) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let i: u32 = digits.parse().map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if i == 0 {
            return Err(Error::Parse(format!("bad letter {s:?}")));
        }
        Ok(if bar { Self::barred(i) } else { Self::unbarred(i) })
    }

    pub fn parse_plain(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.parse::<u32>() {
            Ok(i) if i > 0 => Ok(Letter(i)),
            _ => Err(Error::Parse(format!("bad letter {s:?}"))),
        }
    }
}

impl fmt::Display for Letter {
    /// Signed rendering with a combining overline for barred letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inf() {
            return f.write_str("∞");
        }
        let (i, bar) = self.signed();
        if bar {
            write!(f, "{i}\u{0305}")
        } else {
            write!(f, "{i}")
        }
    }
}
