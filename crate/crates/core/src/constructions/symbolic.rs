//! Blocks whose entries are linear in a parameter `t`.

use std::fmt;
use std::str::FromStr;

use crate::diff::Block;
use crate::error::{Error, Result};

/// `alpha·t + beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lin {
    pub alpha: i64,
    pub beta: i64,
}

impl Lin {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        Lin { alpha, beta }
    }

    pub fn at(self, t: i64) -> i64 {
        self.alpha * t + self.beta
    }
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.alpha, self.beta) {
            (0, b) => write!(f, "{b}"),
            (a, 0) => write!(f, "{}t", coeff(a)),
            (a, b) if b < 0 => write!(f, "{}t-{}", coeff(a), -b),
            (a, b) => write!(f, "{}t+{}", coeff(a), b),
        }
    }
}

fn coeff(a: i64) -> String {
    match a {
        1 => String::new(),
        -1 => "-".into(),
        a => a.to_string(),
    }
}

impl FromStr for Lin {
    type Err = Error;

    /// Accepts sums of integer terms and `t`-terms, e.g. `3t-3`, `-t+2`, `18t`, `5`.
    fn from_str(s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse(format!("empty linear term in {s:?}")));
        }
        let (mut alpha, mut beta) = (0i64, 0i64);
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let sign = match bytes[i] {
                b'+' => {
                    i += 1;
                    1
                }
                b'-' => {
                    i += 1;
                    -1
                }
                _ if i == 0 => 1,
                _ => return Err(Error::Parse(format!("expected sign at byte {i} of {s:?}"))),
            };
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let digits = &src[start..i];
            let is_t = i < bytes.len() && bytes[i] == b't';
            if is_t {
                i += 1;
            }
            if digits.is_empty() && !is_t {
                return Err(Error::Parse(format!("dangling sign at byte {start} of {s:?}")));
            }
            let n: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| Error::Parse(format!("bad number {digits:?} in {s:?}")))?
            };
            if is_t {
                alpha += sign * n;
            } else {
                beta += sign * n;
            }
        }
        Ok(Lin { alpha, beta })
    }
}

/// A block of [`Lin`] entries, in the order they were written.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicBlock(Vec<Lin>);

impl SymbolicBlock {
    pub fn new(entries: Vec<Lin>) -> Self {
        SymbolicBlock(entries)
    }

    pub fn entries(&self) -> &[Lin] {
        &self.0
    }

    /// Substitutes `t` and sorts.
    pub fn at(&self, t: i64) -> Result<Block> {
        Block::new(self.0.iter().map(|e| e.at(t)).collect::<Vec<_>>())
    }

    /// The `t` coefficients in written order.
    pub fn t_coefficients(&self) -> Vec<i64> {
        self.0.iter().map(|e| e.alpha).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|e| e.alpha == 0)
    }
}

impl FromStr for SymbolicBlock {
    type Err = Error;

    /// Comma-separated [`Lin`] terms, e.g. `"0, 3t-3, 38t, 48t-1"`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s.split(',').map(str::parse).collect::<Result<Vec<Lin>>>()?;
        if entries.len() < 2 {
            return Err(Error::Parse(format!("block {s:?} has fewer than two entries")));
        }
        Ok(SymbolicBlock(entries))
    }
}

impl fmt::Display for SymbolicBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Parses embedded block strings; the data is compiled in, so failure is a bug.
pub(crate) fn parse_all(rows: &[&str]) -> Vec<SymbolicBlock> {
    rows.iter()
        .map(|r| r.parse().unwrap_or_else(|e| panic!("embedded block {r:?} does not parse: {e}")))
        .collect()
}
